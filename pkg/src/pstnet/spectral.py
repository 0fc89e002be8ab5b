"""Character-free numeric backend.

Recovers the eigenvalue matrix P of a commutative association scheme by
simultaneously diagonalizing the adjacency matrices: a random Hermitian
combination M = sum_i (c_i A_i + conj(c_i) A_i^T) is eigendecomposed, its
eigenvalues clustered, and each A_i's constant action is read off per joint
eigenspace.  This path never consults character data, so its agreement with
the analytic tables is an end-to-end check of both.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, ResolutionError
from .schemes import AssociationScheme

DEFAULT_SEED = 0x5EED
_CLUSTER_TOL = 1e-8
_MAX_ATTEMPTS = 8


@dataclass(frozen=True)
class NumericEigenSystem:
    P: np.ndarray                      # (d+1, d+1) complex, column j = joint eigenspace j
    projectors: tuple[np.ndarray, ...]
    multiplicities: tuple[int, ...]
    tolerance: float
    seed: int


def numeric_eigenmatrix(s: AssociationScheme, seed: int = DEFAULT_SEED) -> NumericEigenSystem:
    d1 = s.num_classes
    adjacency = [a.astype(float) for a in s.adjacency]
    worst = 0.0
    rng = np.random.default_rng(seed)
    for _ in range(_MAX_ATTEMPTS):
        # unit-magnitude-biased coefficients keep eigenvalue collisions unlikely
        mag = 0.5 + rng.random(d1)
        phase = np.exp(2j * np.pi * rng.random(d1))
        coeff = mag * phase
        m = np.zeros((s.N, s.N), dtype=complex)
        for c, a in zip(coeff, adjacency):
            m += c * a + np.conj(c) * a.T
        evals, evecs = np.linalg.eigh(m)
        diameter = max(evals[-1] - evals[0], 1.0)
        # split sorted eigenvalues at relative gaps
        breaks = np.nonzero(np.diff(evals) > _CLUSTER_TOL * diameter)[0]
        bounds = [0, *(breaks + 1), s.N]
        if len(bounds) - 1 != d1:
            continue
        scale = max(max(s.valencies), 1)
        P = np.empty((d1, d1), dtype=complex)
        projectors = []
        ok = True
        cluster_worst = 0.0
        for j in range(d1):
            v = evecs[:, bounds[j]:bounds[j + 1]]
            for i, a in enumerate(adjacency):
                x = v.conj().T @ (a @ v)
                lam = np.trace(x) / x.shape[0]
                resid = np.abs(x - lam * np.eye(x.shape[0])).max()
                cluster_worst = max(cluster_worst, resid)
                if resid > _CLUSTER_TOL * scale:
                    ok = False
                P[i, j] = lam
            projectors.append(v @ v.conj().T)
        if ok:
            return NumericEigenSystem(
                P=P,
                projectors=tuple(projectors),
                multiplicities=tuple(int(bounds[j + 1] - bounds[j]) for j in range(d1)),
                tolerance=_CLUSTER_TOL,
                seed=seed,
            )
        worst = max(worst, cluster_worst)
    raise ResolutionError(
        f"could not resolve {d1} joint eigenspaces in {_MAX_ATTEMPTS} attempts (worst cluster residual {worst:.3e})"
    )


@dataclass(frozen=True)
class MatchReport:
    permutation: tuple[int, ...]       # analytic column k <- numeric column permutation[k]
    max_deviation: float


def reconcile(analytic_P: np.ndarray, numeric: NumericEigenSystem, tol: float = 1e-8) -> MatchReport:
    """Match numeric joint-eigenspace columns to analytic P columns.

    Greedy nearest-column assignment, then a verification pass on the full
    permuted matrix.  Raises ConsistencyError if no column permutation brings
    the matrices within ``tol``.
    """
    pa = np.asarray(analytic_P)
    pn = numeric.P
    if pa.shape != pn.shape:
        raise ConsistencyError(f"eigenvalue matrices have different shapes {pa.shape} vs {pn.shape}")
    d1 = pa.shape[1]
    cost = np.array([[np.abs(pa[:, k] - pn[:, j]).max() for j in range(d1)] for k in range(d1)])
    perm = [-1] * d1
    taken = set()
    for k in np.argsort(cost.min(axis=1)):
        order = np.argsort(cost[k])
        j = next(int(j) for j in order if int(j) not in taken)
        perm[int(k)] = j
        taken.add(j)
    dev = np.abs(pa - pn[:, perm]).max()
    if dev > tol:
        worst = int(np.argmax(np.abs(pa - pn[:, perm]).max(axis=0)))
        raise ConsistencyError(
            f"analytic and numeric eigenvalue matrices disagree (max deviation {dev:.3e} at column {worst})"
        )
    return MatchReport(permutation=tuple(perm), max_deviation=float(dev))

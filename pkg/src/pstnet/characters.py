"""Exact analytic character tables for the five families, plus the eigenvalue
matrices P, Q and the primitive idempotents they generate.

Character values are evaluated from closed forms (roots of unity, cosines,
sign patterns) at rational angle multiples; no floating-point eigensolver is
involved on this path.  The cyclic family is handled as the distance scheme
of the 2m-cycle: its "table" is the set of 2m Fourier mode symbols together
with a mode -> eigenvalue-class folding map (modes l and 2m-l share every
adjacency eigenvalue).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, ParameterError, UnsupportedAnalyticError
from .groups import ConjugacyClasses, FiniteGroup, _popcount


def root_of_unity(p: int, q: int) -> complex:
    """exp(2*pi*i*p/q) with the angle reduced exactly as a rational multiple."""
    p %= q
    ang = math.tau * p / q
    return complex(math.cos(ang), math.sin(ang))


@dataclass(frozen=True)
class CharacterTable:
    family: str
    param: int
    kind: str                       # "group" | "cycle"
    dims: tuple[int, ...]
    values: np.ndarray              # group: (d+1, d+1) chi_k(alpha_i); cycle: (2m, m+1) mode symbols
    irrep_labels: tuple[str, ...]
    fold: tuple[tuple[int, ...], ...] | None = None  # cycle only: mode groups per eigenvalue class

    @property
    def num_irreps(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class EigenMatrices:
    P: np.ndarray                   # (d+1, d+1), P[i, k] = eigenvalue of A_i on E_k
    Q: np.ndarray                   # (d+1, d+1), E_k = (1/N) sum_i Q[k, i] A_i
    multiplicities: tuple[int, ...]  # rank of E_k
    N: int


def character_table(family: str, n: int) -> CharacterTable:
    if family == "cyclic":
        if n % 2 != 0 or n < 4:
            raise ParameterError("cyclic distance scheme needs an even vertex count n = 2m with m >= 2")
        return _cycle_table(n // 2)
    if family == "dihedral_even":
        return _dihedral_table(n)
    if family == "clifford":
        return _clifford_table(n)
    if family == "u6n":
        return _u6n_table(n)
    if family == "v8n":
        return _v8n_table(n)
    raise ParameterError(f"unknown family {family!r}")


def _cycle_table(m: int) -> CharacterTable:
    # values[l, i] = eigenvalue of A_i on Fourier mode l of the 2m-cycle
    n = 2 * m
    values = np.empty((n, m + 1), dtype=complex)
    values[:, 0] = 1.0
    for l in range(n):
        for i in range(1, m):
            values[l, i] = root_of_unity(l * i, n) + root_of_unity(-l * i, n)
        values[l, m] = root_of_unity(l * m, n)
    fold = ((0,),) + tuple((l, n - l) for l in range(1, m)) + ((m,),)
    return CharacterTable(
        family="cyclic",
        param=n,
        kind="cycle",
        dims=(1,) * n,
        values=values,
        irrep_labels=tuple(f"mode{l}" for l in range(n)),
        fold=fold,
    )


def _dihedral_table(n: int) -> CharacterTable:
    if n % 2 != 0 or n < 4:
        raise ParameterError("dihedral_even requires even n >= 4")
    m = n // 2
    d1 = m + 3
    values = np.zeros((d1, d1), dtype=complex)
    # class order: {e}, {a^r, a^-r} r=1..m-1, {a^m}, even-b coset, odd-b coset
    rot = list(range(m + 1))  # class index of a^r for r = 0..m
    be, bo = m + 1, m + 2
    for k, (sa, sb) in enumerate([(1, 1), (1, -1), (-1, 1), (-1, -1)]):
        for r in range(m + 1):
            values[k, rot[r]] = sa ** r
        values[k, be] = sb
        values[k, bo] = sa * sb
    for j in range(1, m):
        k = 3 + j
        for r in range(m + 1):
            values[k, rot[r]] = root_of_unity(j * r, n) + root_of_unity(-j * r, n)
    dims = (1, 1, 1, 1) + (2,) * (m - 1)
    labels = ("chi0", "chi1", "chi2", "chi3") + tuple(f"psi{j}" for j in range(1, m))
    return CharacterTable("dihedral_even", n, "group", dims, values, labels)


def _clifford_table(n: int) -> CharacterTable:
    if n < 3:
        raise ParameterError("clifford requires n >= 3")
    if n % 2 != 0:
        raise UnsupportedAnalyticError(
            "no analytic character table for the odd-n Clifford group; use the numeric backend"
        )
    masks = sorted(range(1 << n), key=lambda m: (_popcount(m), m))
    # class order: {1}, {-1}, then {+-gamma_A} for nonempty A in (length, lex) order
    nonempty = masks[1:]
    d1 = (1 << n) + 1
    values = np.zeros((d1, d1), dtype=complex)
    for k, s in enumerate(masks):  # linear characters indexed by sign vectors
        values[k, 0] = values[k, 1] = 1.0
        for i, a in enumerate(nonempty):
            values[k, 2 + i] = -1.0 if _popcount(s & a) % 2 else 1.0
    big = 1 << n
    dim_big = 1 << (n // 2)
    values[big, 0] = dim_big
    values[big, 1] = -dim_big
    dims = (1,) * (1 << n) + (dim_big,)
    labels = tuple(f"chi{k}" for k in range(1 << n)) + ("sigma",)
    return CharacterTable("clifford", n, "group", dims, values, labels)


def _u6n_table(n: int) -> CharacterTable:
    if n < 1:
        raise ParameterError("u6n requires n >= 1")
    d1 = 3 * n
    values = np.zeros((d1, d1), dtype=complex)
    # class order: {a^{2r}} r=0..n-1, {a^{2r}b, a^{2r}b^2} r, {a^{2r+1}, ...} r
    for j in range(2 * n):
        for r in range(n):
            values[j, r] = root_of_unity(2 * j * r, 2 * n)
            values[j, n + r] = root_of_unity(2 * j * r, 2 * n)
            values[j, 2 * n + r] = root_of_unity(j * (2 * r + 1), 2 * n)
    for k in range(n):
        for r in range(n):
            values[2 * n + k, r] = 2 * root_of_unity(2 * k * r, 2 * n)
            values[2 * n + k, n + r] = -root_of_unity(2 * k * r, 2 * n)
    dims = (1,) * (2 * n) + (2,) * n
    labels = tuple(f"chi{j}" for j in range(2 * n)) + tuple(f"psi{k}" for k in range(n))
    return CharacterTable("u6n", n, "group", dims, values, labels)


def _v8n_table(n: int) -> CharacterTable:
    if n < 1 or n % 2 == 0:
        raise ParameterError("v8n requires odd n")
    d1 = 2 * n + 3
    half = (n - 1) // 2
    values = np.zeros((d1, d1), dtype=complex)
    # class order: {1}, {b^2}, odd r=0..n-1, {a^{2s},a^-2s} s=1..half,
    #              {a^{2s}b^2, ...} s=1..half, even-b coset, odd-b coset
    odd = [2 + r for r in range(n)]
    ev = [2 + n + (s - 1) for s in range(1, half + 1)]
    evz = [2 + n + half + (s - 1) for s in range(1, half + 1)]
    be, bo = d1 - 2, d1 - 1
    for k, (sa, sb) in enumerate([(1, 1), (1, -1), (-1, 1), (-1, -1)]):
        values[k, 0] = values[k, 1] = 1.0
        for r in range(n):
            values[k, odd[r]] = sa
        for s in range(1, half + 1):
            values[k, ev[s - 1]] = values[k, evz[s - 1]] = 1.0
        values[k, be] = sb
        values[k, bo] = sa * sb
    for j in range(n):  # psi_j: the b^2 -> -2 series
        k = 4 + j
        values[k, 0] = 2.0
        values[k, 1] = -2.0
        for r in range(n):
            w = root_of_unity(j * (2 * r + 1), n)
            values[k, odd[r]] = w - w.conjugate()   # 2i sin(2 pi j (2r+1) / n)
        for s in range(1, half + 1):
            c = root_of_unity(2 * j * s, n) + root_of_unity(-2 * j * s, n)
            values[k, ev[s - 1]] = c
            values[k, evz[s - 1]] = -c
    for j in range(1, n):  # phi_j: the b^2 -> +2 series
        k = 4 + n + (j - 1)
        values[k, 0] = 2.0
        values[k, 1] = 2.0
        for r in range(n):
            values[k, odd[r]] = root_of_unity(j * (2 * r + 1), 2 * n) + root_of_unity(-j * (2 * r + 1), 2 * n)
        for s in range(1, half + 1):
            c = root_of_unity(j * s, n) + root_of_unity(-j * s, n)
            values[k, ev[s - 1]] = c
            values[k, evz[s - 1]] = c
    dims = (1, 1, 1, 1) + (2,) * (2 * n - 1)
    labels = ("chi0", "chi1", "chi2", "chi3") + tuple(f"psi{j}" for j in range(n)) + tuple(
        f"phi{j}" for j in range(1, n)
    )
    return CharacterTable("v8n", n, "group", dims, values, labels)


# ---------------------------------------------------------------------------
# P, Q and idempotents
# ---------------------------------------------------------------------------

_PQ_TOL = 1e-10


def eigen_matrices(t: CharacterTable, c: ConjugacyClasses | None = None) -> EigenMatrices:
    """Eigenvalue matrices with P[i, k] = kappa_i chi_k(alpha_i) / d_k.

    For the cycle table the (m+1)x(m+1) system is built on folded Fourier
    modes with multiplicities 1, 2, ..., 2, 1.
    """
    if t.kind == "cycle":
        m = t.param // 2
        reps = [grp[0] for grp in t.fold]
        P = np.array([[t.values[l, i] for l in reps] for i in range(m + 1)])
        mult = tuple(len(grp) for grp in t.fold)
        kappa = np.array((1,) + (2,) * (m - 1) + (1,), dtype=float)
        N = t.param
    else:
        if c is None:
            raise ParameterError("group tables need the conjugacy classes for the valencies")
        if c.num_classes != t.num_irreps:
            raise ConsistencyError("character table and class partition have different sizes")
        kappa = np.array(c.sizes, dtype=float)
        dims = np.array(t.dims, dtype=float)
        P = (kappa[:, None] / dims[None, :]) * t.values.T
        mult = tuple(int(d) ** 2 for d in t.dims)
        N = int(kappa.sum())
    Q = (np.array(mult, dtype=float)[:, None] / kappa[None, :]) * P.conj().T
    for name, prod in (("PQ", P @ Q), ("QP", Q @ P)):
        dev = np.abs(prod - N * np.eye(len(P))).max()
        if dev > _PQ_TOL:
            raise ConsistencyError(f"{name} != N*I (max deviation {dev:.3e}); table and classes disagree")
    return EigenMatrices(P=P, Q=Q, multiplicities=mult, N=N)


def idempotents(t: CharacterTable, g: FiniteGroup, c: ConjugacyClasses) -> tuple[np.ndarray, ...]:
    """Primitive idempotents E_k of a group scheme as dense N x N matrices.

    E_k[x, y] = (d_k / |G|) chi_k(x y^-1); each E_k projects onto the joint
    eigenspace with A_i E_k = P[i, k] E_k under the y x^-1 adjacency convention.
    """
    if t.kind != "group":
        raise ParameterError("idempotents are only defined for group schemes; use fourier_projectors for the cycle")
    inv = np.asarray(g.inverses)
    pair = np.asarray(c.class_of)[g.cayley[:, inv]]  # pair[x, y] = class(x y^-1)
    return tuple((t.dims[k] / g.order) * t.values[k][pair] for k in range(t.num_irreps))


def fourier_projectors(m: int) -> tuple[np.ndarray, ...]:
    """Folded Fourier projectors of the 2m-cycle, one per eigenvalue class."""
    n = 2 * m
    x = np.arange(n)
    diff = x[:, None] - x[None, :]
    fold = ((0,),) + tuple((l, n - l) for l in range(1, m)) + ((m,),)
    projs = []
    for grp in fold:
        e = np.zeros((n, n), dtype=complex)
        for l in grp:
            e += np.array([[root_of_unity(l * d, n) for d in row] for row in diff]) / n
        projs.append(e)
    return tuple(projs)

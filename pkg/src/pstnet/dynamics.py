"""Dynamics verification: spectral propagator, Fock-space oracle, qudit check.

The spectral propagator evolves the single-excitation subspace exactly as
U(t) = sum_l exp(-i t Jt_l) E_l from the plan's mode couplings and the
scheme's projectors; no generic matrix exponential is used on this path.
The Fock oracle is the independent brute-force route: it second-quantizes an
arbitrary Hermitian hopping matrix on a fixed-boson-number occupation basis
and exponentiates by dense Hermitian eigendecomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .errors import CapacityError, ConsistencyError, ParameterError
from .pipeline import SchemeSystem
from .solver import CouplingPlan, build_hamiltonian

FOCK_CAP = 20_000


@dataclass(frozen=True)
class FidelityTrace:
    times: np.ndarray
    amplitude: np.ndarray              # f_{target,source}(t) per sample
    t0: float
    abs_at_t0: float
    arg_at_t0: float


@dataclass(frozen=True)
class QuditState:
    """A (d+1)-level state encoded in boson occupations 0..d of one site."""
    amplitudes: tuple[complex, ...]

    @property
    def d(self) -> int:
        return len(self.amplitudes) - 1

    def normalized(self) -> np.ndarray:
        vec = np.asarray(self.amplitudes, dtype=complex)
        norm = np.linalg.norm(vec)
        if norm == 0:
            raise ParameterError("qudit state must have a nonzero amplitude")
        return vec / norm


def propagator(system: SchemeSystem, plan: CouplingPlan, t: float) -> np.ndarray:
    """Exact spectral single-excitation propagator at time t."""
    u = np.zeros((system.scheme.N, system.scheme.N), dtype=complex)
    for jt, proj in zip(plan.tilde, system.data.projectors):
        u += np.exp(-1j * t * jt) * proj
    dev = np.abs(u.conj().T @ u - np.eye(system.scheme.N)).max()
    if dev > 1e-10:
        raise ConsistencyError(f"spectral propagator is not unitary (deviation {dev:.3e})")
    return u


def fidelity_trace(system: SchemeSystem, plan: CouplingPlan, source: int | None = None,
                   target: int | None = None, t_max: float | None = None,
                   steps: int = 200) -> FidelityTrace:
    """Transfer amplitude on a uniform grid of multiples of t0/steps.

    The grid always contains t0 as an exact sample, so the verdict never
    depends on interpolation.
    """
    source = 0 if source is None else source
    target = plan.target_vertex if target is None else target
    t_max = 2.0 * plan.t0 if t_max is None else t_max
    dt = plan.t0 / steps
    times = dt * np.arange(int(math.floor(t_max / dt + 1e-9)) + 1)
    # column[l, j] = <j| E_l |source>: one row of weights per joint eigenspace
    column = np.array([proj[:, source] for proj in system.data.projectors])
    tilde = np.asarray(plan.tilde)
    full = np.exp(-1j * np.outer(times, tilde)) @ column   # f_{j,source}(t) per sample
    leak = np.abs(np.sum(np.abs(full) ** 2, axis=1) - 1.0).max()
    if leak > 1e-10:
        raise ConsistencyError(f"probability not conserved along the trace (deviation {leak:.3e})")
    amp = full[:, target]
    i0 = int(round(plan.t0 / dt))
    f0 = amp[i0] if i0 < len(amp) else np.sum(column[:, target] * np.exp(-1j * plan.t0 * tilde))
    return FidelityTrace(times=times, amplitude=amp, t0=plan.t0,
                         abs_at_t0=float(np.abs(f0)), arg_at_t0=float(np.angle(f0)))


# ---------------------------------------------------------------------------
# Fock space
# ---------------------------------------------------------------------------

class FockBasis:
    """Occupation-number basis for ``bosons`` bosons on ``sites`` sites,
    enumerated in lexicographic order."""

    def __init__(self, sites: int, bosons: int, cap: int = FOCK_CAP):
        size = math.comb(sites + bosons - 1, bosons)
        if size > cap:
            raise CapacityError(f"Fock basis of {size} states exceeds the cap of {cap}")
        self.sites = sites
        self.bosons = bosons
        self.states: list[tuple[int, ...]] = []
        for combo in combinations_with_replacement(range(sites), bosons):
            occ = [0] * sites
            for site in combo:
                occ[site] += 1
            self.states.append(tuple(occ))
        self.states.sort()
        self.index = {occ: i for i, occ in enumerate(self.states)}

    def __len__(self) -> int:
        return len(self.states)

    def single_site_state(self, site: int) -> np.ndarray:
        """Normalized state with all bosons on one site: (b_site^+)^n |0> / sqrt(n!)."""
        occ = [0] * self.sites
        occ[site] = self.bosons
        vec = np.zeros(len(self), dtype=complex)
        vec[self.index[tuple(occ)]] = 1.0
        return vec


def second_quantized(h: np.ndarray, basis: FockBasis) -> np.ndarray:
    """sum_ij h_ij b_i^+ b_j on the fixed-number basis."""
    n = basis.sites
    if h.shape != (n, n):
        raise ParameterError(f"hopping matrix shape {h.shape} does not match {n} sites")
    dim = len(basis)
    h2 = np.zeros((dim, dim), dtype=complex)
    for col, occ in enumerate(basis.states):
        for j in range(n):
            if occ[j] == 0:
                continue
            for i in range(n):
                if h[i, j] == 0:
                    continue
                if i == j:
                    h2[col, col] += h[i, i] * occ[i]
                    continue
                amp = math.sqrt(occ[j] * (occ[i] + 1))
                new = list(occ)
                new[j] -= 1
                new[i] += 1
                h2[basis.index[tuple(new)], col] += amp * h[i, j]
    return h2


def fock_oracle(h: np.ndarray, bosons: int, initial: np.ndarray, t: float,
                cap: int = FOCK_CAP) -> np.ndarray:
    """Evolve ``initial`` (a vector on the n-boson FockBasis of h's sites)
    by exp(-i t H2) with H2 the second-quantized h."""
    basis = FockBasis(h.shape[0], bosons, cap)
    if initial.shape != (len(basis),):
        raise ParameterError(f"initial state has {initial.shape} entries, basis has {len(basis)}")
    h2 = second_quantized(h, basis)
    evals, evecs = np.linalg.eigh(h2)
    return evecs @ (np.exp(-1j * t * evals) * (evecs.conj().T @ initial))


def verify_qudit_transfer(system: SchemeSystem, plan: CouplingPlan, d: int,
                          state: QuditState | None = None,
                          cap: int = FOCK_CAP) -> float:
    """Fock-space transfer fidelity for a (d+1)-level state encoded in boson
    occupations 0..d of the source site.

    Prepares sum_i alpha_i (b_source^+)^i |0>, evolves every number sector by
    the Fock oracle for t0, and overlaps with the phase-shifted image
    sum_i alpha_i e^{i i theta} (b_target^+)^i |0>.
    """
    if d < 1:
        raise ParameterError("qudit dimension d must be >= 1")
    if state is None:
        lv = np.arange(d + 1)
        state = QuditState(tuple((1.0 + lv) * np.exp(0.37j * lv)))
    if state.d != d:
        raise ParameterError(f"need {d + 1} level amplitudes, got {state.d + 1}")
    amplitudes = state.normalized()
    h = build_hamiltonian(system.scheme, plan)
    source, target = 0, plan.target_vertex
    overlap = abs(amplitudes[0]) ** 2  # vacuum sector is stationary
    for level in range(1, d + 1):
        basis = FockBasis(system.scheme.N, level, cap)
        final = fock_oracle(h, level, basis.single_site_state(source), plan.t0, cap)
        got = final[basis.index[_occ(system.scheme.N, target, level)]]
        overlap += abs(amplitudes[level]) ** 2 * np.exp(-1j * level * plan.theta) * got
    return float(abs(overlap))


def _occ(sites: int, site: int, count: int) -> tuple[int, ...]:
    occ = [0] * sites
    occ[site] = count
    return tuple(occ)

"""Coupling design for perfect state transfer to a central antipode.

Given the spectral data of a scheme (P, Q, multiplicities, projectors) and a
central singleton target class, the transfer amplitude from the identity
vertex decomposes over the joint eigenspaces as

    f(t) = sum_l  w_l * exp(-i t Jt_l),      w_l = <target| E_l |source>,

with sum_l |w_l| = 1 exactly when the target is a central singleton.  Perfect
transfer with global phase theta therefore pins each mode coupling Jt_l
("J-tilde") to

    t0 * Jt_l = -theta - phi_l + 2 pi n_l,    phi_l = -arg(N w_l),

for free integers n_l.  The per-class couplings follow from the linear system
Jt = P^t J, inverted exactly by J = (1/N) Q^t Jt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CentralityError, ConsistencyError, ParameterError
from .schemes import AssociationScheme

_PHASE_TOL_ANALYTIC = 1e-12
_ROUNDTRIP_TOL = 1e-10

STRATEGIES = ("minimal", "paper-cyclic", "custom")


@dataclass(frozen=True)
class SpectralData:
    """Joint-eigenspace data a plan is designed against, backend-agnostic."""
    P: np.ndarray
    Q: np.ndarray
    multiplicities: tuple[int, ...]
    projectors: tuple[np.ndarray, ...]
    N: int
    backend: str                       # "analytic" | "numeric"

    @property
    def phase_tol(self) -> float:
        return _PHASE_TOL_ANALYTIC if self.backend == "analytic" else 1e-9


@dataclass(frozen=True)
class TargetSpec:
    target_class: int
    target_vertex: int
    source_vertex: int = 0


@dataclass(frozen=True)
class PhasePattern:
    phi: tuple[float, ...]             # principal arguments in (-pi, pi]
    weights: tuple[complex, ...]       # N * <target|E_l|source>, modulus = multiplicity


@dataclass(frozen=True)
class CouplingPlan:
    theta: float
    t0: float
    n_choices: tuple[int, ...]
    tilde: tuple[float, ...]           # mode couplings Jt_l, one per joint eigenspace
    couplings: tuple[complex, ...]     # per-class couplings J_k
    target_class: int
    target_vertex: int
    strategy: str


def _principal(angle: float) -> float:
    """Wrap to (-pi, pi]."""
    a = math.remainder(angle, math.tau)
    if a <= -math.pi:
        a += math.tau
    return a


def phase_pattern(sd: SpectralData, spec: TargetSpec,
                  scheme: AssociationScheme | None = None) -> PhasePattern:
    """Per-eigenspace phase targets for transfer source -> target vertex.

    The target must sit in a singleton class (for group schemes this means a
    central element): only then does every eigenspace weight have modulus
    equal to its multiplicity, which is what makes unit transfer reachable.
    """
    if scheme is not None and scheme.valencies[spec.target_class] != 1:
        raise CentralityError(
            f"target class {spec.target_class} has size {scheme.valencies[spec.target_class]}; "
            "perfect transfer needs a central singleton target"
        )
    tol = sd.phase_tol
    weights = []
    phi = []
    for l, proj in enumerate(sd.projectors):
        w = sd.N * proj[spec.target_vertex, spec.source_vertex]
        if abs(abs(w) - sd.multiplicities[l]) > tol * sd.N:
            raise CentralityError(
                f"eigenspace {l} weight modulus {abs(w):.6g} != multiplicity {sd.multiplicities[l]}; "
                "target is not a central singleton"
            )
        weights.append(complex(w))
        phi.append(_principal(-np.angle(w)))
    return PhasePattern(phi=tuple(phi), weights=tuple(weights))


def _minimal_n(phi: float, theta: float) -> int:
    """n minimizing |  -theta - phi + 2 pi n |, ties resolved toward Jt >= 0."""
    x = (theta + phi) / math.tau
    lo, hi = math.floor(x), math.ceil(x)
    if lo == hi:
        return lo
    vlo = -theta - phi + math.tau * lo
    vhi = -theta - phi + math.tau * hi
    if abs(vlo) < abs(vhi):
        return lo
    if abs(vhi) < abs(vlo):
        return hi
    return hi if vhi >= 0 else lo


def tilde_couplings(p: PhasePattern, theta: float = 0.0, t0: float = 1.0,
                    strategy: str = "minimal",
                    n_choices: tuple[int, ...] | None = None,
                    cycle: bool = False) -> tuple[tuple[int, ...], tuple[float, ...]]:
    """Choose the integers n_l and return (n_choices, Jt vector)."""
    if t0 <= 0:
        raise ParameterError("t0 must be positive")
    d1 = len(p.phi)
    if strategy == "minimal":
        ns = tuple(_minimal_n(phi, theta) for phi in p.phi)
    elif strategy == "paper-cyclic":
        if not cycle:
            raise ParameterError("strategy 'paper-cyclic' only applies to the cyclic (2m-cycle) family")
        # folded mode l gets t0*Jt_l = -pi*l - theta
        ns = []
        for l, phi in enumerate(p.phi):
            x = (phi - math.pi * l) / math.tau
            n = round(x)
            if abs(x - n) > 1e-9:
                raise ConsistencyError(f"cycle phase pattern incompatible with -pi*l targets at mode {l}")
            ns.append(int(n))
        ns = tuple(ns)
    elif strategy == "custom":
        if n_choices is None or len(n_choices) != d1:
            raise ParameterError(f"custom strategy needs exactly {d1} integers")
        ns = tuple(int(n) for n in n_choices)
    else:
        raise ParameterError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    tilde = tuple((-theta - phi + math.tau * n) / t0 for phi, n in zip(p.phi, ns))
    return ns, tilde


def class_couplings(tilde, sd: SpectralData) -> np.ndarray:
    """Per-class couplings J = (1/N) Q^t Jt, round-trip checked against P^t J = Jt."""
    jt = np.asarray(tilde, dtype=float)
    if jt.shape != (sd.P.shape[0],):
        raise ParameterError(f"expected {sd.P.shape[0]} mode couplings, got {jt.shape}")
    j = (sd.Q.T @ jt) / sd.N
    back = sd.P.T @ j
    dev = np.abs(back - jt).max()
    if dev > _ROUNDTRIP_TOL * max(1.0, np.abs(jt).max()):
        raise ConsistencyError(f"P/Q linear system is inconsistent (round-trip deviation {dev:.3e})")
    return j


def design_plan(sd: SpectralData, spec: TargetSpec, theta: float = 0.0, t0: float = 1.0,
                strategy: str = "minimal", n_choices: tuple[int, ...] | None = None,
                scheme: AssociationScheme | None = None, cycle: bool = False) -> CouplingPlan:
    pattern = phase_pattern(sd, spec, scheme)
    ns, tilde = tilde_couplings(pattern, theta, t0, strategy, n_choices, cycle=cycle)
    j = class_couplings(tilde, sd)
    plan = CouplingPlan(
        theta=float(theta),
        t0=float(t0),
        n_choices=ns,
        tilde=tilde,
        couplings=tuple(complex(x) for x in j),
        target_class=spec.target_class,
        target_vertex=spec.target_vertex,
        strategy=strategy,
    )
    validate_plan(plan, pattern, sd, scheme)
    return plan


def validate_plan(plan: CouplingPlan, pattern: PhasePattern, sd: SpectralData,
                  scheme: AssociationScheme | None = None) -> None:
    tol = max(sd.phase_tol, 1e-12)
    for l, (jt, phi) in enumerate(zip(plan.tilde, pattern.phi)):
        lhs = np.exp(-1j * (plan.t0 * jt + plan.theta))
        rhs = np.exp(1j * phi)
        if abs(lhs - rhs) > tol:
            raise ConsistencyError(f"phase constraint violated at eigenspace {l} by {abs(lhs - rhs):.3e}")
    if scheme is not None:
        scale = max(1.0, max(abs(j) for j in plan.couplings))
        for i, ip in enumerate(scheme.inverse_pairing):
            if abs(plan.couplings[ip] - np.conj(plan.couplings[i])) > 1e-12 * scale:
                raise ConsistencyError(f"Hermiticity pairing broken between classes {i} and {ip}")


def build_hamiltonian(s: AssociationScheme, plan: CouplingPlan) -> np.ndarray:
    """H = sum_k J_k A_k; raises if the result is not Hermitian."""
    if len(plan.couplings) != s.num_classes:
        raise ParameterError("plan and scheme have different class counts")
    h = np.zeros((s.N, s.N), dtype=complex)
    for j, a in zip(plan.couplings, s.adjacency):
        h += j * a
    dev = np.abs(h - h.conj().T).max()
    if dev > 1e-12 * max(1.0, np.abs(h).max()):
        bad = [(i, ip) for i, ip in enumerate(s.inverse_pairing)
               if abs(plan.couplings[ip] - np.conj(plan.couplings[i])) > 1e-12]
        raise ConsistencyError(f"Hamiltonian is not Hermitian (deviation {dev:.3e}); offending class pairs {bad}")
    return h


def cyclic_closed_form(m: int, theta: float = 0.0, t0: float = 1.0) -> np.ndarray:
    """Closed-form couplings of the 2m-cycle for the -pi*l mode-coupling choice.

    J_l = 1/(2 m t0) { -theta + 2 sum_{k=1}^{m-1} (-pi k - theta) cos(pi k l / m)
                       - (-1)^l (pi m + theta) },   l = 0..m.
    """
    if m < 2:
        raise ParameterError("cyclic closed form requires m >= 2")
    out = np.empty(m + 1)
    for l in range(m + 1):
        acc = -theta
        for k in range(1, m):
            acc += 2.0 * (-math.pi * k - theta) * math.cos(math.pi * k * l / m)
        acc -= (-1.0) ** l * (math.pi * m + theta)
        out[l] = acc / (2 * m * t0)
    return out

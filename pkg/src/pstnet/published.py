"""Literature coupling values used as regression and errata fixtures.

The published treatment of these networks prints closed-form coupling
strengths for a handful of instances.  We reproduce them verbatim here so the
test suite can compare them against the pipeline's output.  Ground truth is
the transfer-fidelity criterion |f(t0)| = 1, not the printed numbers: where a
printed entry disagrees with a verified plan, the disagreement is recorded in
a generated errata report instead of being treated as a failure.
"""

from __future__ import annotations

import math

import numpy as np

from . import dynamics
from .errors import ParameterError
from .pipeline import SchemeSystem, build_system, design
from .solver import CouplingPlan


def u12_published(theta: float, t0: float) -> list[complex]:
    """Printed couplings for the order-12 group (u6n, n=2), target a^2.

    Class order: e, a^2, {b,b^2}, {a^2 b, a^2 b^2}, {a,...}, {a^3,...}.
    """
    return [
        (7 * math.pi - 12 * theta) / (12 * t0),
        -math.pi / (2 * t0),
        math.pi / (3 * t0),
        0.0,
        math.pi * (1j - 1) / (6 * t0),
        math.pi * (-1j - 1) / (6 * t0),
    ]


def v24_published(theta: float, t0: float) -> list[complex]:
    """Printed couplings for the order-24 group (v8n, n=3), target b^2."""
    return [
        (math.pi - 2 * theta) / (2 * t0),
        -math.pi / (2 * t0),
        theta / (6 * t0),
        theta / (6 * t0),
        theta / (6 * t0),
        0.0, 0.0, 0.0, 0.0,
    ]


def dihedral_published(n: int, theta: float, t0: float) -> list[complex]:
    """Printed couplings for the even-rotation-order dihedral group D_2n.

    With n = 2m the group has m+3 classes.  The printed J_2 = J_3 entries
    refer to the two reflection cosets (our classes m+1 and m+2), and the
    printed J_{l+3} (l = 1..m-1) refer to the rotation pair classes; we
    return the values arranged in our class order
    e, {a^r, a^-r} r=1..m-1, {a^m}, even-b coset, odd-b coset.
    """
    if n % 2 != 0:
        raise ParameterError("published dihedral values cover even rotation order only")
    m = n // 2
    j0 = -(m + 3) * (theta + math.pi * m / 2) / (2 * n * t0)
    j1 = (-(m + 1) * theta - (math.pi / 2) * ((m - 2) * (m - 3) + 6)) / (2 * n * t0)
    s_alt = sum((-1) ** r for r in range(1, m))
    s_jj = sum((-1) ** j * j for j in range(1, m - 2))
    j23 = (-theta * ((-1) ** m + s_alt) + math.pi * (1 - s_jj)) / (2 * n * t0)
    rot = []
    for l in range(1, m):
        s_cos = sum(math.cos(2 * math.pi * l * r / n) for r in range(1, m))
        s_rcos = sum(r * math.cos(2 * math.pi * l * r / n) for r in range(1, m))
        rot.append((2 / (n * t0)) * (-theta * (1 + (-1) ** l + s_cos) - math.pi * s_rcos))
    return [j0, *rot, j1, j23, j23]


def clifford_published(n: int, theta: float, t0: float, l: int = 1) -> list[complex]:
    """Printed couplings for CL(n) (even n), target -1, integer parameter l.

    Class order: {1}, {-1}, the 2^n - 1 mixed word-pair classes, then the
    central word class; the printed pattern assigns one value to the first
    half of the mixed classes and another to the second half, with the
    central-word coupling pinned to zero.
    """
    if n % 2 != 0:
        raise ParameterError("published Clifford values cover even n only")
    j0 = -((2 ** n + 1) * theta + math.pi * l) / (2 ** (n + 1) * t0)
    ja = (-theta + math.pi * l) / (2 ** (n + 1) * t0)
    jb = -(theta + math.pi * l) / (2 * n * t0)
    half = 2 ** (n - 1)
    return [j0, *([ja] * half), *([jb] * (2 ** n - 1 - half)), 0.0]


def u6n_mode_choices(system: SchemeSystem) -> tuple[int, ...]:
    """Integer choices reproducing the published mode substitution for the
    order-6n family: t0*Jt = 2*pi*k/n - theta, with k the index within each
    character block (the 2n one-dimensional chi's, then the n psi's)."""
    from .solver import phase_pattern
    if system.family != "u6n":
        raise ParameterError("published mode choices defined for the u6n family only")
    n = system.n
    pattern = phase_pattern(system.data, system.resolve_target(None), system.scheme)
    block_index = [*range(2 * n), *range(n)]
    ns = []
    for k, phi in zip(block_index, pattern.phi):
        x = (math.tau * k / n + phi) / math.tau
        if abs(x - round(x)) > 1e-9:
            raise ParameterError(f"mode phase {phi} is incompatible with the published choice")
        ns.append(round(x))
    return tuple(ns)


def _plan_entry(system: SchemeSystem, plan: CouplingPlan, published: list[complex],
                tol: float = 1e-9) -> dict:
    trace = dynamics.fidelity_trace(system, plan)
    rows = []
    for k, (label, got, want) in enumerate(zip(system.class_labels, plan.couplings, published)):
        dev = abs(got - complex(want))
        rows.append({
            "index": k,
            "class": label,
            "computed": {"re": got.real, "im": got.imag},
            "published": {"re": complex(want).real, "im": complex(want).imag},
            "deviation": dev,
            "agrees": bool(dev <= tol),
        })
    return {
        "strategy": plan.strategy,
        "fidelity_abs": trace.abs_at_t0,
        "fidelity_arg_deviation": abs(math.remainder(trace.arg_at_t0 - plan.theta, math.tau)),
        "couplings": rows,
        "errata": [r["index"] for r in rows if not r["agrees"]],
    }


def build_errata(theta: float = math.pi / 7, t0: float = 1.0) -> dict:
    """Compare verified plans against every printed coupling set and collect
    the disagreements."""
    report = {"theta": theta, "t0": t0, "instances": {}}

    u12 = build_system("u6n", 2)
    plan = design(u12, theta=theta, t0=t0, strategy="custom",
                  n_choices=u6n_mode_choices(u12))
    report["instances"]["u6n n=2 (order 12)"] = _plan_entry(u12, plan, u12_published(theta, t0))

    v24 = build_system("v8n", 3)
    plan = design(v24, theta=theta, t0=t0)
    report["instances"]["v8n n=3 (order 24)"] = _plan_entry(v24, plan, v24_published(theta, t0))

    for n in (4, 8):
        sysd = build_system("dihedral_even", n)
        plan = design(sysd, theta=theta, t0=t0)
        report["instances"][f"dihedral_even n={n} (order {2 * n})"] = _plan_entry(
            sysd, plan, dihedral_published(n, theta, t0))

    cl4 = build_system("clifford", 4)
    plan = design(cl4, theta=theta, t0=t0)
    report["instances"]["clifford n=4 (order 32)"] = _plan_entry(
        cl4, plan, clifford_published(4, theta, t0))

    report["note"] = (
        "Ground truth is |f(t0)| = 1 on the computed plan (reported per instance). "
        "Published entries that disagree with a verified plan are listed under 'errata'; "
        "the mode-choice convention for each comparison is the plan's recorded strategy."
    )
    return report


def _as_jsonable(obj):
    if isinstance(obj, dict):
        return {k: _as_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_as_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    return obj


def errata_report(theta: float = math.pi / 7, t0: float = 1.0) -> dict:
    return _as_jsonable(build_errata(theta, t0))

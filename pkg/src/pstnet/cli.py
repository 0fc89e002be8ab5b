"""Command-line front end.

Subcommands: ``group info``, ``scheme build``, ``couplings``, ``simulate``,
``verify``, ``reconcile``.  Exit codes: 0 success, 1 verification failure,
2 invalid parameters, 3 internal-consistency error.  Structured error detail
goes to stderr as a single JSON line.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import __version__, documents, dynamics, spectral
from .errors import ConsistencyError, ParameterError, PstnetError, VerificationFailure
from .groups import center, inverse_class_map
from .pipeline import FAMILY_PARAM_HELP, build_system, design
from .solver import STRATEGIES, build_hamiltonian

_PI_EXPR = re.compile(r"^[0-9pi+\-*/(). ]*$")


def parse_angle(text: str) -> float:
    """Decimal literal or pi-expression, e.g. '0.5', 'pi/3', '-2*pi/7'."""
    s = re.sub(r"(\d)\s*pi", r"\1*pi", text.strip().lower())
    if not s or not _PI_EXPR.match(s):
        raise ParameterError(f"cannot parse {text!r} as a number or pi-expression")
    # the regex alphabet admits stray 'p'/'i' fragments; only the word 'pi' is legal
    if re.search(r"p(?!i)|(?<!p)i", s):
        raise ParameterError(f"cannot parse {text!r} as a number or pi-expression")
    try:
        return float(eval(s, {"__builtins__": {}}, {"pi": math.pi}))
    except Exception as exc:
        raise ParameterError(f"cannot parse {text!r} as a number or pi-expression: {exc}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParameterError(message)


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=sorted(FAMILY_PARAM_HELP),
                   help="group/scheme family")
    p.add_argument("--n", required=True, type=int, help="family parameter")
    p.add_argument("--backend", default="auto", choices=("auto", "analytic", "numeric"))
    p.add_argument("--seed", type=int, default=spectral.DEFAULT_SEED,
                   help="seed for the numeric backend")


def build_parser() -> _Parser:
    root = _Parser(prog="pstnet", description=__doc__)
    root.add_argument("--version", action="version", version=f"pstnet {__version__}")
    sub = root.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group", help="group-level queries")
    gsub = group.add_subparsers(dest="group_command", required=True)
    ginfo = gsub.add_parser("info", help="print order, conjugacy classes, center")
    _add_family_args(ginfo)

    scheme = sub.add_parser("scheme", help="scheme-level commands")
    ssub = scheme.add_subparsers(dest="scheme_command", required=True)
    sbuild = ssub.add_parser("build", help="build the scheme and verify closure")
    _add_family_args(sbuild)
    sbuild.add_argument("--out", required=True, help="output scheme summary (JSON)")

    coup = sub.add_parser("couplings", help="design a coupling plan")
    _add_family_args(coup)
    coup.add_argument("--target", default=None,
                      help="target class index or element label (default: family antipode)")
    coup.add_argument("--theta", default="0", help="transfer phase (number or pi-expression)")
    coup.add_argument("--t0", default="1", help="transfer time (number or pi-expression)")
    coup.add_argument("--strategy", default="minimal", choices=STRATEGIES)
    coup.add_argument("--n-choices", default=None,
                      help="comma-separated integers for strategy 'custom'")
    coup.add_argument("--out", required=True, help="output plan document (JSON)")

    sim = sub.add_parser("simulate", help="fidelity trace for a plan")
    sim.add_argument("--plan", required=True)
    sim.add_argument("--t-max", default=None, help="trace horizon (default 2*t0)")
    sim.add_argument("--steps", type=int, default=200, help="samples per t0 interval")
    sim.add_argument("--out", required=True, help="output trace (CSV)")

    ver = sub.add_parser("verify", help="verify a plan's transfer dynamics")
    ver.add_argument("--plan", required=True)
    ver.add_argument("--qudit", type=int, default=None, metavar="D",
                     help="also check (D+1)-level qudit transfer via the Fock oracle")
    ver.add_argument("--oracle", action="store_true",
                     help="cross-check the spectral propagator against the Fock oracle")

    rec = sub.add_parser("reconcile", help="compare analytic and numeric eigenvalue matrices")
    _add_family_args(rec)
    return root


# ---------------------------------------------------------------------------
# subcommand bodies
# ---------------------------------------------------------------------------

def _cmd_group_info(args) -> int:
    system = build_system(args.family, args.n, args.backend, args.seed)
    print(f"family: {args.family}  n={args.n}  ({FAMILY_PARAM_HELP[args.family]})")
    print(f"order: {system.scheme.N}")
    if system.is_cycle:
        m = system.scheme.N // 2
        print(f"distance classes: {m + 1}")
        for k, label in enumerate(system.class_labels):
            print(f"  C{k}: distance {k} (size {system.scheme.valencies[k]}) rep {label}")
        print(f"center: all {system.scheme.N} elements (abelian)")
        return 0
    g, c = system.group, system.classes
    print(f"conjugacy classes: {c.num_classes}")
    for k, cls in enumerate(c.classes):
        members = ", ".join(g.labels[x] for x in cls)
        print(f"  C{k} (size {len(cls)}): {members}")
    z = sorted(center(g).elements)
    print(f"center (order {len(z)}): " + ", ".join(g.labels[x] for x in z))
    return 0


def _cmd_scheme_build(args) -> int:
    system = build_system(args.family, args.n, args.backend, args.seed)
    doc = documents.scheme_document(system)
    documents.write_document(doc, args.out)
    print(f"scheme: {args.family} n={args.n}, order {doc['order']}, "
          f"{doc['num_classes']} classes; Bose-Mesner closure verified")
    print(f"wrote {args.out}")
    return 0


def _cmd_couplings(args) -> int:
    system = build_system(args.family, args.n, args.backend, args.seed)
    n_choices = None
    if args.n_choices is not None:
        n_choices = tuple(int(x) for x in args.n_choices.split(","))
    plan = design(system, target=args.target, theta=parse_angle(args.theta),
                  t0=parse_angle(args.t0), strategy=args.strategy, n_choices=n_choices)
    doc = documents.plan_document(system, plan)
    documents.write_document(doc.to_dict(), args.out)
    print(f"plan: target class C{plan.target_class} "
          f"({system.class_labels[plan.target_class]}), strategy {plan.strategy}, "
          f"theta={plan.theta:.12g}, t0={plan.t0:.12g}")
    for k, (label, j) in enumerate(zip(system.class_labels, plan.couplings)):
        print(f"  J{k} [{label}] = {j.real:+.12g}{j.imag:+.12g}j")
    print(f"wrote {args.out}")
    return 0


def _load_plan(path: str):
    doc = documents.PlanDocument.from_dict(documents.read_document(path))
    return doc, doc.rebuild_system()


def _cmd_simulate(args) -> int:
    doc, system = _load_plan(args.plan)
    t_max = None if args.t_max is None else parse_angle(args.t_max)
    trace = dynamics.fidelity_trace(system, doc.plan, t_max=t_max, steps=args.steps)
    lines = ["t,abs_f,arg_f"]
    for t, f in zip(trace.times, trace.amplitude):
        lines.append(f"{t:.17g},{abs(f):.17g},{np.angle(f):.17g}")
    out = Path(args.out)
    fd, tmp = tempfile.mkstemp(dir=out.parent or Path("."), prefix=out.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, out)
    print(f"trace: {len(trace.times)} samples, |f(t0)| = {trace.abs_at_t0:.9f}, "
          f"arg f(t0) = {trace.arg_at_t0:.9f}")
    print(f"wrote {args.out}")
    return 0


def _cmd_verify(args) -> int:
    doc, system = _load_plan(args.plan)
    plan = doc.plan
    failures = []
    trace = dynamics.fidelity_trace(system, plan)
    ok_abs = trace.abs_at_t0 >= 1.0 - 1e-9
    darg = abs(math.remainder(trace.arg_at_t0 - plan.theta, math.tau))
    ok_arg = darg <= 1e-8
    print(f"spectral: |f(t0)| = {trace.abs_at_t0:.9f} "
          f"[{'pass' if ok_abs else 'FAIL'}], arg deviation {darg:.3e} "
          f"[{'pass' if ok_arg else 'FAIL'}]")
    if not (ok_abs and ok_arg):
        failures.append("spectral transfer check")
    if args.oracle:
        h = build_hamiltonian(system.scheme, plan)
        basis = dynamics.FockBasis(system.scheme.N, 1)
        final = dynamics.fock_oracle(h, 1, basis.single_site_state(0), plan.t0)
        col = np.zeros(system.scheme.N, dtype=complex)
        for i, occ in enumerate(basis.states):
            col[occ.index(1)] = final[i]
        u = dynamics.propagator(system, plan, plan.t0)
        dev = np.abs(col - u[:, 0]).max()
        ok = dev <= 1e-9
        print(f"oracle: Fock vs spectral deviation {dev:.3e} [{'pass' if ok else 'FAIL'}]")
        if not ok:
            failures.append("Fock oracle cross-check")
    if args.qudit is not None:
        fid = dynamics.verify_qudit_transfer(system, plan, args.qudit)
        ok = fid >= 1.0 - 1e-8
        print(f"qudit d={args.qudit}: transfer fidelity {fid:.9f} [{'pass' if ok else 'FAIL'}]")
        if not ok:
            failures.append(f"qudit d={args.qudit} transfer")
    if failures:
        raise VerificationFailure("; ".join(failures))
    print("verify: all checks passed")
    return 0


def _cmd_reconcile(args) -> int:
    system = build_system(args.family, args.n, "analytic", args.seed)
    num = spectral.numeric_eigenmatrix(system.scheme, args.seed)
    report = spectral.reconcile(system.data.P, num)
    print(f"reconcile: {len(report.permutation)} eigenspaces matched, "
          f"max deviation {report.max_deviation:.3e}")
    print("column permutation (analytic <- numeric): "
          + ", ".join(f"{k}<-{j}" for k, j in enumerate(report.permutation)))
    return 0


def run_command(argv) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "group":
        return _cmd_group_info(args)
    if args.command == "scheme":
        return _cmd_scheme_build(args)
    if args.command == "couplings":
        return _cmd_couplings(args)
    if args.command == "simulate":
        return _cmd_simulate(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "reconcile":
        return _cmd_reconcile(args)
    raise ParameterError(f"unknown command {args.command!r}")


def _emit_error(exc: Exception, code: int) -> None:
    detail = {"error": type(exc).__name__, "detail": str(exc), "exit_code": code}
    print(json.dumps(detail), file=sys.stderr)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        return run_command(argv)
    except VerificationFailure as exc:
        _emit_error(exc, 1)
        return 1
    except ParameterError as exc:
        _emit_error(exc, 2)
        return 2
    except (ConsistencyError, PstnetError) as exc:
        _emit_error(exc, 3)
        return 3
    except OSError as exc:
        _emit_error(exc, 2)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Plan and scheme documents: JSON artifacts with deterministic formatting.

Complex numbers are carried as explicit {"re": ..., "im": ...} pairs and every
float is emitted in Python's shortest round-tripping decimal form (at most 17
significant digits), so serialize -> parse -> serialize is byte-identical and
the files diff cleanly as regression fixtures.  Writes are atomic
(write-temp-then-rename).
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .errors import ParameterError
from .pipeline import SchemeSystem, build_system
from .schemes import verify_bose_mesner
from .solver import CouplingPlan

DOCUMENT_KIND_PLAN = "pstnet-coupling-plan"
DOCUMENT_KIND_SCHEME = "pstnet-scheme-summary"


def _cplx(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _uncplx(d: dict) -> complex:
    return complex(d["re"], d["im"])


@dataclass(frozen=True)
class PlanDocument:
    """A CouplingPlan plus the provenance needed to rebuild its scheme."""
    plan: CouplingPlan
    family: str
    n: int
    backend: str
    seed: int
    class_order: tuple[str, ...]
    mode_order: tuple[str, ...]
    target_label: str
    version: str = __version__

    def to_dict(self) -> dict:
        p = self.plan
        return {
            "kind": DOCUMENT_KIND_PLAN,
            "version": self.version,
            "provenance": {
                "family": self.family,
                "n": self.n,
                "backend": self.backend,
                "seed": self.seed,
                "class_order": list(self.class_order),
                "mode_order": list(self.mode_order),
                "target_class": p.target_class,
                "target_label": self.target_label,
                "strategy": p.strategy,
            },
            "theta": float(p.theta),
            "t0": float(p.t0),
            "n_choices": list(p.n_choices),
            "tilde": [float(x) for x in p.tilde],
            "couplings": [_cplx(z) for z in p.couplings],
            "target_vertex": p.target_vertex,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "PlanDocument":
        if doc.get("kind") != DOCUMENT_KIND_PLAN:
            raise ParameterError(f"not a coupling-plan document (kind={doc.get('kind')!r})")
        prov = doc["provenance"]
        plan = CouplingPlan(
            theta=float(doc["theta"]),
            t0=float(doc["t0"]),
            n_choices=tuple(int(x) for x in doc["n_choices"]),
            tilde=tuple(float(x) for x in doc["tilde"]),
            couplings=tuple(_uncplx(z) for z in doc["couplings"]),
            target_class=int(prov["target_class"]),
            target_vertex=int(doc["target_vertex"]),
            strategy=str(prov["strategy"]),
        )
        return cls(
            plan=plan,
            family=str(prov["family"]),
            n=int(prov["n"]),
            backend=str(prov["backend"]),
            seed=int(prov["seed"]),
            class_order=tuple(prov["class_order"]),
            mode_order=tuple(prov["mode_order"]),
            target_label=str(prov["target_label"]),
            version=str(doc["version"]),
        )

    def rebuild_system(self) -> SchemeSystem:
        """Reconstruct the scheme this plan was designed for and check that
        the class ordering still matches the recorded provenance."""
        system = build_system(self.family, self.n, backend=self.backend, seed=self.seed)
        if tuple(system.class_labels) != self.class_order:
            raise ParameterError(
                "plan document's class ordering does not match the current build; "
                "regenerate the plan"
            )
        return system


def plan_document(system: SchemeSystem, plan: CouplingPlan) -> PlanDocument:
    return PlanDocument(
        plan=plan,
        family=system.family,
        n=system.n,
        backend=system.backend,
        seed=system.seed,
        class_order=system.class_labels,
        mode_order=system.mode_labels,
        target_label=system.class_labels[plan.target_class],
    )


def scheme_document(system: SchemeSystem) -> dict:
    """Summary of a built scheme plus the Bose-Mesner closure verdict."""
    p = verify_bose_mesner(system.scheme)   # raises AlgebraError if not closed
    return {
        "kind": DOCUMENT_KIND_SCHEME,
        "version": __version__,
        "family": system.family,
        "n": system.n,
        "backend": system.backend,
        "order": system.scheme.N,
        "num_classes": system.scheme.num_classes,
        "class_order": list(system.class_labels),
        "valencies": [int(v) for v in system.scheme.valencies],
        "inverse_pairing": list(system.scheme.inverse_pairing),
        "source": system.scheme.source,
        "bose_mesner": {
            "closed": True,
            "commutative": True,
            "max_intersection_number": int(p.max()),
        },
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def write_document(doc: dict, path: str | Path) -> None:
    """Atomic write: serialize to a sibling temp file, then rename over path."""
    path = Path(path)
    text = dumps(doc)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_document(path: str | Path) -> dict:
    with open(path) as fh:
        return json.load(fh)

"""End-to-end assembly: family -> scheme -> spectral data -> coupling plan.

This is the layer the CLI and the test matrix drive.  ``build_system`` wires
together the group construction, the scheme, and either the analytic
character-table backend or the numeric simultaneous-diagonalization backend
(the only option for the odd-n Clifford groups).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import characters, schemes, solver, spectral
from .errors import CentralityError, ParameterError
from .groups import ConjugacyClasses, FiniteGroup, build_group, center, conjugacy_classes

FAMILY_PARAM_HELP = {
    "cyclic": "even vertex count 2m of the cycle",
    "dihedral_even": "even rotation order n of D_2n",
    "clifford": "number of generators (>= 3; odd n is numeric-only)",
    "u6n": "parameter n of the order-6n group",
    "v8n": "odd parameter n of the order-8n group",
}


@dataclass(frozen=True)
class SchemeSystem:
    family: str
    n: int
    backend: str
    seed: int
    scheme: schemes.AssociationScheme
    data: solver.SpectralData
    group: FiniteGroup | None
    classes: ConjugacyClasses | None
    class_labels: tuple[str, ...]
    mode_labels: tuple[str, ...]
    default_target: int

    @property
    def is_cycle(self) -> bool:
        return self.scheme.source == "cycle-distance-scheme"

    def singleton_vertex(self, class_index: int) -> int:
        if self.is_cycle:
            return class_index  # vertex a^i represents distance class i
        cls = self.classes.classes[class_index]
        if len(cls) != 1:
            raise CentralityError(f"class {class_index} is not a singleton")
        return cls[0]

    def resolve_target(self, target: str | int | None) -> solver.TargetSpec:
        if target is None:
            k = self.default_target
        elif isinstance(target, int) or (isinstance(target, str) and target.lstrip("-").isdigit()):
            k = int(target)
            if not 0 <= k < self.scheme.num_classes:
                raise ParameterError(f"class index {k} out of range 0..{self.scheme.num_classes - 1}")
        else:
            if self.group is None:
                raise ParameterError("element-label targets need a group-backed scheme")
            x = self.group.index_of(str(target))
            k = min(x, self.scheme.N - x) if self.is_cycle else self.classes.class_of[x]
        return solver.TargetSpec(target_class=k, target_vertex=self.singleton_vertex(k))


def _default_target(family: str, n: int, g: FiniteGroup | None,
                    c: ConjugacyClasses | None) -> int:
    if family == "cyclic":
        return n // 2                      # the antipode a^m
    if family == "dihedral_even":
        return c.class_of[g.index_of(f"a^{n // 2}")]
    if family == "clifford":
        return c.class_of[g.index_of("-1")]
    if family == "u6n":
        return c.class_of[g.index_of("a^2" if n > 1 else "e")]
    if family == "v8n":
        return c.class_of[g.index_of("b^2")]
    raise ParameterError(f"unknown family {family!r}")


def build_system(family: str, n: int, backend: str = "auto",
                 seed: int = spectral.DEFAULT_SEED) -> SchemeSystem:
    if backend not in ("auto", "analytic", "numeric"):
        raise ParameterError(f"unknown backend {backend!r}")
    if family == "cyclic":
        if n % 2 != 0 or n < 4:
            raise ParameterError("cyclic family needs an even vertex count n = 2m >= 4")
        m = n // 2
        g = build_group("cyclic", n)
        scheme = schemes.cycle_distance_scheme(m)
        class_labels = tuple(g.labels[i] for i in range(m + 1))
        if backend == "numeric":
            data, mode_labels = _numeric_data(scheme, seed)
        else:
            table = characters.character_table("cyclic", n)
            em = characters.eigen_matrices(table)
            data = solver.SpectralData(
                P=em.P, Q=em.Q, multiplicities=em.multiplicities,
                projectors=characters.fourier_projectors(m), N=em.N, backend="analytic",
            )
            mode_labels = tuple(f"mode{grp[0]}" if len(grp) == 1 else f"mode{grp[0]}+{grp[1]}"
                                for grp in table.fold)
        return SchemeSystem(family, n, data.backend, seed, scheme, data, g, None,
                            class_labels, mode_labels, m)

    g = build_group(family, n)
    c = conjugacy_classes(g)
    scheme = schemes.class_sum_adjacency(g, c)
    class_labels = tuple(g.labels[r] for r in c.representatives)
    if backend == "auto":
        backend = "numeric" if (family == "clifford" and n % 2 == 1) else "analytic"
    if backend == "analytic":
        table = characters.character_table(family, n)   # raises for odd-n clifford
        em = characters.eigen_matrices(table, c)
        data = solver.SpectralData(
            P=em.P, Q=em.Q, multiplicities=em.multiplicities,
            projectors=characters.idempotents(table, g, c), N=em.N, backend="analytic",
        )
        mode_labels = table.irrep_labels
    else:
        data, mode_labels = _numeric_data(scheme, seed)
    return SchemeSystem(family, n, backend, seed, scheme, data, g, c,
                        class_labels, mode_labels, _default_target(family, n, g, c))


def _numeric_data(scheme: schemes.AssociationScheme, seed: int):
    num = spectral.numeric_eigenmatrix(scheme, seed)
    q = scheme.N * np.linalg.inv(num.P)
    data = solver.SpectralData(
        P=num.P, Q=q, multiplicities=num.multiplicities,
        projectors=num.projectors, N=scheme.N, backend="numeric",
    )
    return data, tuple(f"eigenspace{j}" for j in range(len(num.projectors)))


def design(system: SchemeSystem, target: str | int | None = None, theta: float = 0.0,
           t0: float = 1.0, strategy: str = "minimal",
           n_choices: tuple[int, ...] | None = None) -> solver.CouplingPlan:
    spec = system.resolve_target(target)
    return solver.design_plan(system.data, spec, theta, t0, strategy, n_choices,
                              scheme=system.scheme, cycle=system.is_cycle)

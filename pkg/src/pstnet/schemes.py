"""Association-scheme adjacency matrices and Bose-Mesner algebra checks.

Group schemes use the regular representation on the group's own vertex set:
A_i[x, y] = 1 iff y * x^-1 lies in conjugacy class C_i.  The cyclic family
uses the distance scheme of the 2m-cycle instead (A_i = S^i + S^-i, A_m = S^m),
which is what its coupling design is phrased in.

All scheme algebra is exact integer arithmetic; matrices only become complex
at the dynamics boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AlgebraError, ParameterError
from .groups import ConjugacyClasses, FiniteGroup


@dataclass(frozen=True)
class AssociationScheme:
    N: int
    adjacency: tuple[np.ndarray, ...]   # integer 0/1 matrices A_0..A_d
    valencies: tuple[int, ...]
    inverse_pairing: tuple[int, ...]    # transpose(A_i) = A_{i'}
    source: str                          # "group-scheme" | "cycle-distance-scheme"

    @property
    def num_classes(self) -> int:
        return len(self.adjacency)


def regular_representation(g: FiniteGroup, x: int) -> np.ndarray:
    """Permutation matrix M(x) with M(x) e_y = e_{x*y}; M(g)M(h) = M(gh)."""
    m = np.zeros((g.order, g.order), dtype=np.int64)
    m[g.cayley[x], np.arange(g.order)] = 1
    return m


def class_sum_adjacency(g: FiniteGroup, c: ConjugacyClasses) -> AssociationScheme:
    inv = np.asarray(g.inverses)
    cls_of = np.asarray(c.class_of)
    # prod[y, x] = y * x^-1, so pair_class[x, y] = class(y * x^-1)
    prod = g.cayley[:, inv]
    pair_class = cls_of[prod].T
    adjacency = tuple((pair_class == k).astype(np.int64) for k in range(c.num_classes))
    scheme = AssociationScheme(
        N=g.order,
        adjacency=adjacency,
        valencies=c.sizes,
        inverse_pairing=c.inverse_class,
        source="group-scheme",
    )
    _check_axioms(scheme)
    return scheme


def cycle_distance_scheme(m: int) -> AssociationScheme:
    """Distance scheme of the 2m-cycle: A_0 = I, A_i = S^i + S^-i, A_m = S^m."""
    if m < 2:
        raise ParameterError("cycle distance scheme requires m >= 2")
    n = 2 * m
    s = np.zeros((n, n), dtype=np.int64)
    s[np.arange(n), (np.arange(n) + 1) % n] = 1
    powers = [np.eye(n, dtype=np.int64)]
    for _ in range(n - 1):
        powers.append(powers[-1] @ s)
    adjacency = [powers[0]]
    adjacency += [powers[i] + powers[n - i] for i in range(1, m)]
    adjacency.append(powers[m])
    scheme = AssociationScheme(
        N=n,
        adjacency=tuple(adjacency),
        valencies=(1,) + (2,) * (m - 1) + (1,),
        inverse_pairing=tuple(range(m + 1)),
        source="cycle-distance-scheme",
    )
    _check_axioms(scheme)
    return scheme


def _check_axioms(s: AssociationScheme) -> None:
    n = s.N
    if not (s.adjacency[0] == np.eye(n, dtype=np.int64)).all():
        raise AlgebraError("A_0 is not the identity matrix")
    total = sum(s.adjacency)
    if not (total == np.ones((n, n), dtype=np.int64)).all():
        raise AlgebraError("adjacency matrices do not partition the all-ones matrix")
    for i, a in enumerate(s.adjacency):
        k = s.valencies[i]
        if not ((a.sum(axis=0) == k).all() and (a.sum(axis=1) == k).all()):
            raise AlgebraError(f"A_{i} is not {k}-regular")
        if not (a.T == s.adjacency[s.inverse_pairing[i]]).all():
            raise AlgebraError(f"transpose(A_{i}) != A_{s.inverse_pairing[i]}")


def verify_bose_mesner(s: AssociationScheme) -> np.ndarray:
    """Return intersection numbers p[k, i, j] with A_i A_j = sum_k p_ijk A_k.

    Raises AlgebraError if the products do not close with integer coefficients
    or if any pair of adjacency matrices fails to commute.
    """
    d1 = s.num_classes
    # class of each (x, y) position, from the disjoint 0/1 supports
    pos_class = np.zeros((s.N, s.N), dtype=np.int64)
    for k, a in enumerate(s.adjacency):
        pos_class[a == 1] = k
    p = np.zeros((d1, d1, d1), dtype=np.int64)
    for i in range(d1):
        for j in range(d1):
            prod = s.adjacency[i] @ s.adjacency[j]
            if not (prod == s.adjacency[j] @ s.adjacency[i]).all():
                raise AlgebraError(f"A_{i} and A_{j} do not commute")
            for k in range(d1):
                vals = prod[pos_class == k]
                first = vals.flat[0]
                if not (vals == first).all():
                    raise AlgebraError(f"A_{i} A_{j} is not constant on the support of A_{k}")
                p[k, i, j] = first
    # consistency: sum_k p_ijk kappa_k = kappa_i kappa_j
    kappa = np.asarray(s.valencies)
    lhs = np.einsum("kij,k->ij", p, kappa)
    if not (lhs == np.outer(kappa, kappa)).all():
        raise AlgebraError("intersection numbers violate the valency sum rule")
    return p

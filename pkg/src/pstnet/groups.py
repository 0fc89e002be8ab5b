"""Construction of the five finite-group families and their conjugacy structure.

Elements are dense indices 0..N-1 with index 0 the identity.  Each group is
materialized as an explicit Cayley table; entry (i, j) is the index of
g_i * g_j.  Class ordering is fixed per family so that coupling indices stay
comparable across the whole toolkit (see ``_class_sort_key``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError

FAMILIES = ("cyclic", "dihedral_even", "clifford", "u6n", "v8n")


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    cayley: np.ndarray          # (N, N) int array
    identity: int
    inverses: tuple[int, ...]
    labels: tuple[str, ...]
    family: str
    param: int

    def mul(self, i: int, j: int) -> int:
        return int(self.cayley[i, j])

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ParameterError(f"no element labelled {label!r} in {self.family}({self.param})")


@dataclass(frozen=True)
class ConjugacyClasses:
    classes: tuple[tuple[int, ...], ...]   # disjoint, ordered; class 0 = {identity}
    representatives: tuple[int, ...]
    sizes: tuple[int, ...]
    inverse_class: tuple[int, ...]
    class_of: tuple[int, ...] = field(repr=False)  # element index -> class index

    @property
    def num_classes(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class CenterSet:
    elements: frozenset[int]


# ---------------------------------------------------------------------------
# element encodings per family
# ---------------------------------------------------------------------------

def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return sym
    return f"{sym}^{k}"


def _word_label(parts: list[str]) -> str:
    parts = [p for p in parts if p]
    return "*".join(parts) if parts else "e"


def _table_from_elements(elements, product, label, family, param) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    cayley = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            cayley[i, j] = index[product(x, y)]
    identity = 0
    inverses = []
    for i in range(n):
        (j,) = np.nonzero(cayley[i] == identity)[0]
        inverses.append(int(j))
    return FiniteGroup(
        order=n,
        cayley=cayley,
        identity=identity,
        inverses=tuple(inverses),
        labels=tuple(label(e) for e in elements),
        family=family,
        param=param,
    )


def _build_cyclic(n: int) -> FiniteGroup:
    elements = list(range(n))
    return _table_from_elements(
        elements,
        lambda x, y: (x + y) % n,
        lambda x: _word_label([_power_label("a", x)]),
        "cyclic",
        n,
    )


def _build_dihedral_even(n: int) -> FiniteGroup:
    # D_2n = <a, b : a^n = b^2 = 1, b a b^-1 = a^-1>, order 2n, n even.
    if n % 2 != 0 or n < 2:
        raise ParameterError("dihedral_even requires an even rotation order n >= 2 (relation C_m = {a^m} needs n = 2m)")
    elements = [(i, j) for j in (0, 1) for i in range(n)]

    def product(x, y):
        i1, j1 = x
        i2, j2 = y
        # b^j a^k = a^{(-1)^j k} b^j
        return ((i1 + (i2 if j1 == 0 else -i2)) % n, (j1 + j2) % 2)

    def label(x):
        i, j = x
        return _word_label([_power_label("a", i), _power_label("b", j)])

    return _table_from_elements(elements, product, label, "dihedral_even", n)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _clifford_sign(a: int, b: int, n: int) -> int:
    # Sign from sorting gamma_a * gamma_b into gamma_{a xor b}: each generator
    # in b moves left past the generators of a with larger index.
    swaps = 0
    for k in range(n):
        if b >> k & 1:
            swaps += _popcount(a >> (k + 1))
    return -1 if swaps % 2 else 1


def _build_clifford(n: int) -> FiniteGroup:
    if n < 3:
        raise ParameterError("clifford requires n >= 3 generators")
    masks = sorted(range(1 << n), key=lambda m: (_popcount(m), m))
    elements = [(s, m) for m in masks for s in (1, -1)]

    def product(x, y):
        s1, a = x
        s2, b = y
        return (s1 * s2 * _clifford_sign(a, b, n), a ^ b)

    def label(x):
        s, m = x
        word = "*".join(f"g{k + 1}" for k in range(n) if m >> k & 1) or "1"
        return word if s == 1 else "-" + word

    return _table_from_elements(elements, product, label, "clifford", n)


def _build_u6n(n: int) -> FiniteGroup:
    # U_6n = <a, b : a^{2n} = b^3 = 1, a^-1 b a = b^-1>, order 6n.
    if n < 1:
        raise ParameterError("u6n requires n >= 1")
    elements = [(i, j) for i in range(2 * n) for j in range(3)]

    def product(x, y):
        i1, j1 = x
        i2, j2 = y
        # b^j a^k = a^k b^{(-1)^k j}
        j1p = j1 if i2 % 2 == 0 else -j1
        return ((i1 + i2) % (2 * n), (j1p + j2) % 3)

    def label(x):
        i, j = x
        return _word_label([_power_label("a", i), _power_label("b", j)])

    return _table_from_elements(elements, product, label, "u6n", n)


def _build_v8n(n: int) -> FiniteGroup:
    # V_8n = <a, b : a^{2n} = b^4 = 1, ba = a^-1 b^-1, b^-1 a = a^-1 b>, n odd.
    if n < 1 or n % 2 == 0:
        raise ParameterError("v8n requires odd n (the relation ba = a^-1 b^-1 splits classes only for odd n)")
    elements = [(i, j) for i in range(2 * n) for j in range(4)]
    two_n = 2 * n

    def _b_past_a(j: int, k: int) -> tuple[int, int]:
        # b^j a^k = a^e b^{j'}
        if j == 0 or j == 2:
            return k, j
        if k % 2 == 0:
            return -k, j
        return -k, (4 - j) % 4  # b <-> b^3 on odd powers of a

    def product(x, y):
        i1, j1 = x
        i2, j2 = y
        e, j1p = _b_past_a(j1, i2)
        return ((i1 + e) % two_n, (j1p + j2) % 4)

    def label(x):
        i, j = x
        return _word_label([_power_label("a", i), _power_label("b", j)])

    return _table_from_elements(elements, product, label, "v8n", n)


_BUILDERS = {
    "cyclic": _build_cyclic,
    "dihedral_even": _build_dihedral_even,
    "clifford": _build_clifford,
    "u6n": _build_u6n,
    "v8n": _build_v8n,
}


def build_group(family: str, n: int) -> FiniteGroup:
    """Build one of the five supported families with parameter ``n``."""
    if family not in _BUILDERS:
        raise ParameterError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return _BUILDERS[family](n)


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------

def verify_group_axioms(g: FiniteGroup) -> dict[str, bool]:
    """Exhaustive axiom report: closure, associativity, identity, inverses."""
    c = g.cayley
    n = g.order
    report = {}
    report["closure"] = bool(((c >= 0) & (c < n)).all()) and all(
        len(set(c[i])) == n and len(set(c[:, i])) == n for i in range(n)
    )
    # (i*j)*k == i*(j*k), vectorized over the full triple grid
    left = c[c, :]    # left[i, j, k] = (i*j)*k
    right = c[:, c]   # right[i, j, k] = i*(j*k)
    report["associativity"] = bool((left == right).all())
    e = g.identity
    report["identity"] = bool((c[e] == np.arange(n)).all() and (c[:, e] == np.arange(n)).all())
    report["inverses"] = all(c[i, g.inverses[i]] == e and c[g.inverses[i], i] == e for i in range(n))
    report["all_pass"] = all(report.values())
    return report


def _raw_classes(g: FiniteGroup) -> list[frozenset[int]]:
    c = g.cayley
    inv = np.asarray(g.inverses)
    seen = np.zeros(g.order, dtype=bool)
    classes = []
    for x in range(g.order):
        if seen[x]:
            continue
        orbit = frozenset(int(c[c[h, x], inv[h]]) for h in range(g.order))
        for y in orbit:
            seen[y] = True
        classes.append(orbit)
    return classes


def _decode(g: FiniteGroup, x: int):
    """Inverse of the per-family element encoding, recovered from the index layout."""
    if g.family == "cyclic":
        return (x,)
    if g.family == "dihedral_even":
        n = g.param
        return (x % n, x // n)
    if g.family == "u6n":
        return (x // 3, x % 3)
    if g.family == "v8n":
        return (x // 4, x % 4)
    if g.family == "clifford":
        masks = sorted(range(1 << g.param), key=lambda m: (_popcount(m), m))
        return (1 - 2 * (x % 2), masks[x // 2])
    raise ParameterError(f"unknown family {g.family!r}")


def _class_sort_key(g: FiniteGroup, cls: frozenset[int]):
    """Canonical per-family class ordering (matches the published table layouts)."""
    fam = g.family
    if fam == "cyclic":
        return (min(cls),)
    if fam == "dihedral_even":
        n = g.param
        m = n // 2
        i, j = _decode(g, min(cls))
        if j == 1:  # reflections: even a-power coset first
            exponents = {_decode(g, x)[0] % 2 for x in cls}
            return (3, min(exponents))
        r = min(_decode(g, x)[0] for x in cls)
        if r == 0:
            return (0, 0)
        if len(cls) == 1:  # {a^m}
            return (2, 0)
        return (1, min(min(e, n - e) for e in (_decode(g, x)[0] for x in cls)))
    if fam == "clifford":
        # {1}, {-1}, then by (word length, mask); for odd n the two central
        # singletons {gamma_full}, {-gamma_full} keep +1 before -1.
        best = min((( _popcount(mk), mk, 0 if s == 1 else 1) for s, mk in map(lambda x: _decode(g, x), cls)))
        return best
    if fam == "u6n":
        kinds = []
        for x in cls:
            i, j = _decode(g, x)
            if i % 2 == 1:
                kinds.append((2, (i - 1) // 2))
            elif j == 0:
                kinds.append((0, i // 2))
            else:
                kinds.append((1, i // 2))
        return min(kinds)
    if fam == "v8n":
        n = g.param
        kinds = []
        for x in cls:
            i, j = _decode(g, x)
            if j in (1, 3):
                kinds.append((5 + i % 2, 0))
            elif i % 2 == 1:
                # class r is {a^{2r+1}, a^{-(2r+1)} b^2}: label by the b^0 member
                kinds.append((2, (i - 1) // 2) if j == 0 else (2, n))
            elif i == 0:
                kinds.append((0, 0) if j == 0 else (1, 0))
            else:
                s = min(i, 2 * n - i) // 2
                kinds.append((3, s) if j == 0 else (4, s))
        return min(kinds)
    raise ParameterError(f"unknown family {fam!r}")


def conjugacy_classes(g: FiniteGroup) -> ConjugacyClasses:
    raw = _raw_classes(g)
    raw.sort(key=lambda cls: _class_sort_key(g, cls))
    assert g.identity in raw[0]
    classes = tuple(tuple(sorted(cls)) for cls in raw)
    reps = tuple(min(cls, key=lambda x: (len(g.labels[x]), g.labels[x])) for cls in classes)
    class_of = [0] * g.order
    for k, cls in enumerate(classes):
        for x in cls:
            class_of[x] = k
    inv_class = tuple(class_of[g.inverses[cls[0]]] for cls in classes)
    return ConjugacyClasses(
        classes=classes,
        representatives=reps,
        sizes=tuple(len(cls) for cls in classes),
        inverse_class=inv_class,
        class_of=tuple(class_of),
    )


def center(g: FiniteGroup) -> CenterSet:
    c = g.cayley
    members = [x for x in range(g.order) if (c[x, :] == c[:, x]).all()]
    return CenterSet(elements=frozenset(members))


def inverse_class_map(c: ConjugacyClasses, g: FiniteGroup) -> tuple[int, ...]:
    """Pairing i -> i' with {x^-1 : x in C_i} = C_{i'}; an involution."""
    pairing = []
    for cls in c.classes:
        images = {c.class_of[g.inverses[x]] for x in cls}
        if len(images) != 1:
            raise ParameterError("class inverses straddle multiple classes; not a valid class partition")
        pairing.append(images.pop())
    return tuple(pairing)

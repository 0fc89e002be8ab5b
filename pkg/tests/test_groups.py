import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pstnet.errors import ParameterError
from pstnet.groups import (
    build_group,
    center,
    conjugacy_classes,
    inverse_class_map,
    verify_group_axioms,
)

ORDERS = {
    ("cyclic", 8): 8,
    ("dihedral_even", 4): 8,
    ("dihedral_even", 8): 16,
    ("clifford", 3): 16,
    ("clifford", 4): 32,
    ("u6n", 2): 12,
    ("u6n", 3): 18,
    ("v8n", 3): 24,
}

CLASS_COUNTS = {
    ("dihedral_even", 4): 5,      # m+3 with m = n/2
    ("dihedral_even", 8): 7,
    ("clifford", 3): 10,          # 2^n + 2 for odd n (central word splits into two singletons)
    ("clifford", 4): 17,          # 2^n + 1 for even n
    ("u6n", 2): 6,                # 3n
    ("u6n", 3): 9,
    ("v8n", 3): 9,                # 2n + 3
}


@pytest.mark.parametrize("key,order", sorted(ORDERS.items()))
def test_orders(key, order):
    g = build_group(*key)
    assert g.order == order
    verify_group_axioms(g)


@pytest.mark.parametrize("key,count", sorted(CLASS_COUNTS.items()))
def test_class_counts(key, count):
    g = build_group(*key)
    c = conjugacy_classes(g)
    assert c.num_classes == count
    assert sum(c.sizes) == g.order
    assert c.classes[0] == (g.identity,)


def test_cyclic_is_abelian():
    g = build_group("cyclic", 8)
    c = conjugacy_classes(g)
    assert all(size == 1 for size in c.sizes)
    assert center(g).elements == frozenset(range(g.order))


def test_clifford_center_parity():
    # -1 is always central; the full gamma word is central exactly for odd n
    for n, central_words in ((3, 4), (4, 2)):
        g = build_group("clifford", n)
        assert len(center(g).elements) == central_words


def test_dihedral_relations():
    g = build_group("dihedral_even", 4)
    a, b = g.index_of("a"), g.index_of("b")
    assert g.mul(b, g.mul(a, b)) == g.inv(a)       # b a b^-1 = a^-1 (b^2 = e)
    assert g.mul(b, b) == g.identity


def test_v8n_relations():
    g = build_group("v8n", 3)
    a, b = g.index_of("a"), g.index_of("b")
    assert g.mul(b, a) == g.mul(g.inv(a), g.inv(b))
    assert g.mul(g.inv(b), a) == g.mul(g.inv(a), b)


def test_u6n_relations():
    g = build_group("u6n", 2)
    a, b = g.index_of("a"), g.index_of("b")
    assert g.mul(g.inv(a), g.mul(b, a)) == g.inv(b)


def test_inverse_class_map_is_involution():
    g = build_group("u6n", 3)
    c = conjugacy_classes(g)
    pairing = inverse_class_map(c, g)
    assert all(pairing[pairing[i]] == i for i in range(c.num_classes))


@pytest.mark.parametrize("family,n", [("dihedral_even", 3), ("v8n", 2), ("clifford", 2)])
def test_parameter_constraints(family, n):
    with pytest.raises(ParameterError):
        build_group(family, n)


@settings(max_examples=50, deadline=None)
@given(x=st.integers(0, 23), y=st.integers(0, 23), h=st.integers(0, 23))
def test_conjugation_preserves_class(x, y, h):
    g = build_group("v8n", 3)
    c = conjugacy_classes(g)
    conj = g.mul(h, g.mul(x, g.inv(h)))
    assert c.class_of[conj] == c.class_of[x]
    assert g.mul(x, g.inv(x)) == g.identity
    assert g.mul(g.mul(x, y), g.inv(y)) == x


def test_labels_round_trip():
    g = build_group("clifford", 3)
    for i in range(g.order):
        assert g.index_of(g.labels[i]) == i


def test_cayley_is_latin_square():
    g = build_group("dihedral_even", 8)
    for row in g.cayley:
        assert sorted(row) == list(range(g.order))
    for col in g.cayley.T:
        assert sorted(col) == list(range(g.order))
    assert (np.sort(g.inverses) == np.arange(g.order)).all()

import pytest

from qloop.cartan import CartanData
from qloop.errors import InvalidInputError


def test_labels_and_bipartition():
    a3 = CartanData.from_label("A3")
    assert a3.n == 3 and a3.i0() == (1, 3) and a3.i1() == (2,)
    d4 = CartanData.from_label("D4")
    assert d4.i0() == (3,) and d4.i1() == (1, 2, 4)
    assert sorted(d4.neighbors(3)) == [1, 2, 4]
    a1 = CartanData.from_label("A1")
    assert a1.i0() == (1,)
    e6 = CartanData.from_label("E6")
    assert len(e6.edges) == 5


def test_cartan_entries():
    a3 = CartanData.from_label("A3")
    assert a3.a(1, 1) == 2
    assert a3.a(1, 2) == -1
    assert a3.a(1, 3) == 0
    assert a3.a(2, 1) == a3.a(1, 2)


@pytest.mark.parametrize("label,count", [
    ("A1", 1), ("A2", 3), ("A3", 6), ("A4", 10), ("D4", 12), ("D5", 20),
])
def test_positive_root_counts(label, count):
    c = CartanData.from_label(label)
    assert len(c.positive_roots()) == count


def test_d4_highest_root_has_coefficient_two():
    d4 = CartanData.from_label("D4")
    roots = d4.positive_roots()
    assert max(sum(r) for r in roots) == 5
    highest = max(roots, key=sum)
    assert highest == (1, 1, 2, 1)


def test_coxeter_numbers():
    assert CartanData.from_label("A3").coxeter_number() == 4
    assert CartanData.from_label("D4").coxeter_number() == 6
    assert CartanData.from_label("E6").coxeter_number() == 12


def test_bad_labels_rejected():
    for label in ("X9", "D3", "E9", "A0", ""):
        with pytest.raises(InvalidInputError):
            CartanData.from_label(label)


def test_roots_closed_under_reflection():
    c = CartanData.from_label("A3")
    roots = set(c.positive_roots())
    for beta in roots:
        for i in c.nodes():
            img = c.reflect_root(beta, i)
            assert img in roots or tuple(-x for x in img) in roots


def test_non_ade_trees_rejected():
    # star with four arms
    with pytest.raises(InvalidInputError):
        CartanData("X5", 5, ((1, 5), (2, 5), (3, 5), (4, 5)), (1, 1, 1, 1, 0))
    # branch with arm profile (1,3,3)
    edges = ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (4, 8))
    with pytest.raises(InvalidInputError):
        CartanData("X8", 8, edges, (0, 1, 0, 1, 0, 1, 0, 0))

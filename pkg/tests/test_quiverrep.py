import itertools
import random

import pytest

from qloop import linalg
from qloop.cartan import CartanData
from qloop.errors import InvalidInputError
from qloop.linalg import GF
from qloop.quiverrep import (Quiver, QuiverRep, ext1_dim, euler_form,
                             generic_decomposition, grassmannian_count_fq,
                             grassmannian_euler, hom_dim, indecomposable_rep,
                             positive_roots, reflect_i1, rep_direct_sum)

A2 = CartanData.from_label("A2")
A3 = CartanData.from_label("A3")
D4 = CartanData.from_label("D4")


def simple(c, i):
    return indecomposable_rep(c, c.simple_root(i))


def test_positive_roots_examples():
    assert positive_roots(A2) == [(0, 1), (1, 0), (1, 1)]
    assert len(positive_roots(A3)) == 6
    d4_roots = positive_roots(D4)
    assert len(d4_roots) == 12
    assert (1, 1, 2, 1) in d4_roots


def test_sink_source_orientation():
    q = Quiver.sink_source(A2)
    assert q.arrows == ((2, 1),)
    q4 = Quiver.sink_source(D4)
    assert set(q4.arrows) == {(1, 3), (2, 3), (4, 3)}


def test_indecomposable_simple_and_extension():
    s1 = simple(A2, 1)
    assert s1.dim_vector() == (1, 0)
    m = indecomposable_rep(A2, (1, 1))
    assert m.dim_vector() == (1, 1)
    assert m.mats[(2, 1)] == [[1]]


def test_indecomposable_d4_highest_root():
    m = indecomposable_rep(D4, (1, 1, 2, 1))
    assert m.dim_vector() == (1, 1, 2, 1)
    images = []
    for outer in (1, 2, 4):
        col = [row[0] for row in m.mats[(outer, 3)]]
        assert any(col), "outer map must be injective"
        images.append(linalg.span_canonical([col], 2, linalg.QQ))
    assert len({tuple(map(tuple, img)) for img in images}) == 3
    assert hom_dim(m, m) == 1


def test_indecomposable_rejects_non_roots():
    with pytest.raises(InvalidInputError):
        indecomposable_rep(A2, (2, 0))
    with pytest.raises(InvalidInputError):
        indecomposable_rep(A2, (0, 0))


def test_every_root_gives_a_rigid_indecomposable():
    for c in (A2, A3, D4):
        for beta in positive_roots(c):
            m = indecomposable_rep(c, beta)
            assert m.dim_vector() == beta
            assert hom_dim(m, m) == 1
            assert ext1_dim(m, m) == 0


def test_hom_ext_examples():
    s1, s2 = simple(A2, 1), simple(A2, 2)
    assert hom_dim(s2, s2) == 1
    assert ext1_dim(s2, s2) == 0
    assert ext1_dim(s1, s2) == 0
    assert ext1_dim(s2, s1) == 1
    assert euler_form(s1.quiver, (0, 1), (1, 0)) == -1


def test_hom_rejects_mismatched_data():
    s1 = simple(A2, 1)
    t1 = simple(A3, 1)
    with pytest.raises(InvalidInputError):
        hom_dim(s1, t1)


def test_euler_form_is_one_on_roots():
    for c in (A2, A3, D4):
        q = Quiver.sink_source(c)
        for beta in positive_roots(c):
            assert euler_form(q, beta, beta) == 1


def test_generic_decomposition_examples():
    assert generic_decomposition(A2, (1, 1)) == [(1, 1)]
    assert generic_decomposition(A2, (2, 1)) == [(1, 1), (1, 0)]
    assert generic_decomposition(A2, (0, 0)) == []
    for c in (A2, A3, D4):
        for beta in positive_roots(c):
            assert generic_decomposition(c, beta) == [beta]


def test_generic_decomposition_rejects_negative():
    with pytest.raises(InvalidInputError):
        generic_decomposition(A2, (-1, 0))


def _brute_force_count(rep, nu, p):
    """Oracle: enumerate every subspace tuple over F_p directly."""
    field = GF(p)
    verts = rep.quiver.vertices
    all_subs = {v: list(linalg.subspaces_of(linalg.identity(rep.dims[v]),
                                            nu[i], rep.dims[v], field))
                for i, v in enumerate(verts)}
    count = 0
    for combo in itertools.product(*[all_subs[v] for v in verts]):
        chosen = dict(zip(verts, combo))
        ok = True
        for (s, t) in rep.quiver.arrows:
            mat = [[x % p for x in row] for row in rep.mats[(s, t)]]
            for vec in chosen[s]:
                img = linalg.mat_vec(mat, vec, field)
                ann = linalg.annihilator(chosen[t], rep.dims[t], field)
                if any(sum(a * b for a, b in zip(row, img)) % p
                       for row in ann):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def test_count_lines_in_a_plane():
    two_points = rep_direct_sum([simple(A2, 1), simple(A2, 1)])
    for p in (2, 3, 5):
        assert grassmannian_count_fq(two_points, (1, 0), p) == p + 1


def test_count_examples_on_the_extension():
    m = indecomposable_rep(A2, (1, 1))
    for p in (2, 3):
        assert grassmannian_count_fq(m, (0, 1), p) == 0
        assert grassmannian_count_fq(m, (1, 0), p) == 1
        assert grassmannian_count_fq(m, (1, 1), p) == 1


def test_count_matches_brute_force():
    rng = random.Random(17)
    reps = [indecomposable_rep(A2, (1, 1)),
            rep_direct_sum([simple(A2, 1), indecomposable_rep(A2, (1, 1))]),
            indecomposable_rep(A3, (1, 1, 1)),
            indecomposable_rep(D4, (1, 1, 2, 1))]
    for rep in reps:
        dims = rep.dim_vector()
        for _ in range(4):
            nu = tuple(rng.randint(0, d) for d in dims)
            assert (grassmannian_count_fq(rep, nu, 2)
                    == _brute_force_count(rep, nu, 2)), (dims, nu)


def test_count_split_sums_to_total_subrep_count():
    m = indecomposable_rep(D4, (1, 1, 2, 1))
    p = 3
    total = 0
    for nu in itertools.product(*[range(d + 1) for d in m.dim_vector()]):
        total += grassmannian_count_fq(m, nu, p)
    assert total == _brute_force_total(m, p)


def _brute_force_total(rep, p):
    total = 0
    for nu in itertools.product(*[range(d + 1) for d in rep.dim_vector()]):
        total += _brute_force_count(rep, nu, p)
    return total


def test_count_rejects_oversized_nu():
    m = indecomposable_rep(A2, (1, 1))
    with pytest.raises(InvalidInputError):
        grassmannian_count_fq(m, (2, 0), 3)


def test_euler_examples():
    two_points = rep_direct_sum([simple(A2, 1), simple(A2, 1)])
    assert grassmannian_euler(two_points, (1, 0)) == 2
    m = indecomposable_rep(D4, (1, 1, 2, 1))
    assert grassmannian_euler(m, (0, 0, 0, 0)) == 1
    assert grassmannian_euler(m, (1, 1, 2, 1)) == 1
    assert grassmannian_euler(m, (0, 0, 1, 0)) == 2  # a projective line


def test_euler_nonnegative_on_indecomposables():
    for c in (A2, A3, D4):
        for beta in positive_roots(c):
            m = indecomposable_rep(c, beta)
            for nu in itertools.product(*[range(d + 1)
                                          for d in m.dim_vector()]):
                assert grassmannian_euler(m, nu) >= 0


def test_type_a_grassmannians_are_points():
    for c in (A2, A3):
        for beta in positive_roots(c):
            m = indecomposable_rep(c, beta)
            for nu in itertools.product(*[range(d + 1)
                                          for d in m.dim_vector()]):
                assert grassmannian_euler(m, nu) in (0, 1)


def test_reflect_i1_examples():
    assert reflect_i1(A3, (0, 1, 0)) == (0, -1, 0)
    assert reflect_i1(A3, (1, 1, 0)) == (1, 0, 0)
    assert reflect_i1(A3, (1, 0, 0)) == (1, 1, 0)


def test_reflect_i1_is_an_involution_on_positives():
    for c in (A2, A3, D4):
        for beta in positive_roots(c):
            img = reflect_i1(c, beta)
            if min(img) >= 0:
                assert reflect_i1(c, img) == beta


def test_reflect_i1_rejects_non_roots():
    with pytest.raises(InvalidInputError):
        reflect_i1(A3, (1, 0, 1))


def test_zero_module_has_one_empty_subrep():
    zero = QuiverRep(Quiver.sink_source(A2), {1: 0, 2: 0}, {})
    assert grassmannian_count_fq(zero, (0, 0), 3) == 1
    assert grassmannian_euler(zero, (0, 0)) == 1

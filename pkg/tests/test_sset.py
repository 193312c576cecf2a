"""Core simplicial set machinery: models, identities, maps, constructions."""

import pytest

from hocolim import sset as ss
from hocolim.errors import ValidationError


N = 3


def test_standard_simplex_sizes():
    d2 = ss.standard_simplex(2, N)
    # level q of Delta[2] counts monotone maps [q] -> [2]
    assert [d2.size(q) for q in range(N + 1)] == [3, 6, 10, 15]
    assert len(d2.nondegenerate(2)) == 1
    assert d2.nondegenerate(3) == []


def test_boundary_and_horn():
    bd = ss.boundary(2, N)
    assert len(bd.nondegenerate(1)) == 3
    assert bd.nondegenerate(2) == []
    h = ss.horn(2, 1, N)
    assert len(h.nondegenerate(1)) == 2


def test_face_degeneracy_identities_checked():
    # from_tables validates; breaking a face table must raise
    d1 = ss.standard_simplex(1, 2)
    faces = {k: dict(v) for k, v in d1._faces.items()}
    x = d1.levels[1][0]
    faces[(1, 0)][x] = d1.face(1, 1, x)  # now d0 == d1 on a nondeg edge
    broken = False
    try:
        ss.SimplicialSet.from_tables(2, d1.levels, faces, d1._degens)
    except ValidationError:
        broken = True
    # the collapsed edge happens to still satisfy the identities only if the
    # two faces already agreed; on Delta[1] they do not
    assert broken or d1.face(1, 0, x) == d1.face(1, 1, x)


def test_act_agrees_with_faces_and_degens():
    d2 = ss.standard_simplex(2, N)
    x = (0, 1, 2)
    assert d2.act(2, x, (0, 1)) == d2.face(2, 2, x)
    assert d2.act(2, x, (0, 0, 1, 2)) == d2.degen(2, 0, x)
    # a composite: delete vertex 1, then repeat vertex 0
    assert d2.act(2, x, (0, 0, 2)) == d2.degen(1, 0, d2.face(2, 1, x))


def test_simplicial_map_validation():
    d1 = ss.standard_simplex(1, N)
    d0 = ss.standard_simplex(0, N)
    levels = [{x: (0,) * (q + 1) for x in d1.levels[q]} for q in range(N + 1)]
    f = ss.SimplicialMap(d1, d0, levels)
    assert f(0, (0,)) == (0,)
    bad = [dict(l) for l in levels]
    bad[1][(0, 1)] = (0,)  # wrong level
    with pytest.raises(ValidationError):
        ss.SimplicialMap(d1, d0, bad)


def test_product_is_levelwise_with_projections():
    d1 = ss.standard_simplex(1, 2)
    P = ss.product(d1, d1)
    assert P.size(0) == 4
    assert P.size(1) == 9
    pr = ss.projection(P, 0, d1, d1)
    assert pr(1, ((0, 1), (0, 0))) == (0, 1)


def test_coproduct_disjointness():
    d0 = ss.standard_simplex(0, 2)
    T, incl = ss.coproduct([("a", d0), ("b", d0)])
    assert T.size(0) == 2
    assert incl["a"](0, (0,)) != incl["b"](0, (0,))


def test_coequalizer_circle():
    n = 2
    e0 = ss.simplex_map((0,), 0, 1, n)
    e1 = ss.simplex_map((1,), 0, 1, n)
    C = ss.coequalizer(e0, e1).sset
    assert C.size(0) == 1
    assert len(C.nondegenerate(1)) == 1


def test_coequalizer_descent():
    n = 2
    e0 = ss.simplex_map((0,), 0, 1, n)
    e1 = ss.simplex_map((1,), 0, 1, n)
    coeq = ss.coequalizer(e0, e1)
    d0 = ss.standard_simplex(0, n)
    d1 = ss.standard_simplex(1, n)
    collapse = ss.SimplicialMap(
        d1, d0, [{x: (0,) * (q + 1) for x in d1.levels[q]}
                 for q in range(n + 1)], check=False)
    g = coeq.induce(collapse)
    assert g(0, coeq.quotient_map(0, (0,))) == (0,)
    # a map that does not equalize the two ends must be rejected
    with pytest.raises(ValidationError):
        coeq.induce(ss.SimplicialMap.identity(d1))


def test_enumerate_maps_counts():
    n = 2
    d0 = ss.standard_simplex(0, n)
    d1 = ss.standard_simplex(1, n)
    # maps Delta[0] -> Delta[1] are the two vertices
    assert len(ss.enumerate_maps(d0, d1)) == 2
    # maps Delta[1] -> Delta[1] are monotone endpoint pairs: 00, 01, 11
    assert len(ss.enumerate_maps(d1, d1)) == 3


def test_exponential_transpose_roundtrip():
    n = 2
    d1 = ss.standard_simplex(1, n)
    d0 = ss.standard_simplex(0, n)
    exp, exp_maps = ss.exponential(d1, d0, n)
    # Delta[1]^{Delta[0]} has the simplices of Delta[1]
    assert [exp.size(q) for q in range(n + 1)] == \
        [d1.size(q) for q in range(n + 1)]
    P = ss.product(d0, d0)
    f = ss.SimplicialMap(
        P, d1, [{x: (0,) * (q + 1) for x in P.levels[q]}
                for q in range(n + 1)], check=False)
    g = ss.transpose(f, d0, d0, exp, exp_maps)
    f2 = ss.untranspose(g, d0, d0, exp, exp_maps)
    assert f2.equals(f)


def test_diagonal_of_constant_bisimplicial():
    n = 2
    d1 = ss.standard_simplex(1, n)
    # constant in the horizontal direction: diagonal recovers d1
    levels = {(p, q): list(d1.levels[q]) for p in range(n + 1)
              for q in range(n + 1)}
    h_faces = {(p, q, i): {x: x for x in levels[(p, q)]}
               for p in range(1, n + 1) for q in range(n + 1)
               for i in range(p + 1)}
    h_degens = {(p, q, i): {x: x for x in levels[(p, q)]}
                for p in range(n) for q in range(n + 1)
                for i in range(p + 1)}
    v_faces = {(p, q, i): {x: d1.face(q, i, x) for x in levels[(p, q)]}
               for p in range(n + 1) for q in range(1, n + 1)
               for i in range(q + 1)}
    v_degens = {(p, q, i): {x: d1.degen(q, i, x) for x in levels[(p, q)]}
                for p in range(n + 1) for q in range(n)
                for i in range(q + 1)}
    B = ss.BisimplicialSet(n, levels, h_faces, h_degens, v_faces, v_degens)
    dia = ss.diagonal(B)
    assert [dia.size(q) for q in range(n + 1)] == \
        [d1.size(q) for q in range(n + 1)]

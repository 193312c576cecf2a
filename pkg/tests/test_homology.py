"""Integral homology oracle: normal forms, reports, induced maps."""

from hocolim import fincat as fc
from hocolim import fixtures as fx
from hocolim import sset as ss
from hocolim.homology import (
    is_homology_iso,
    mat_mul,
    pi0,
    smith_normal_form,
    sset_homology,
)


def test_smith_normal_form_divisibility_and_transforms():
    A = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    P, D, Q, rank = smith_normal_form(A)
    # P * A * Q == D
    got = mat_mul(mat_mul(P, A), Q)
    assert got == D
    diag = [D[i][i] for i in range(3)]
    assert rank == sum(1 for d in diag if d)
    assert all(d >= 0 for d in diag)
    for i in range(2):
        if diag[i] and diag[i + 1]:
            assert diag[i + 1] % diag[i] == 0


def test_sphere_homologies():
    for n in (1, 2, 3):
        N = n + 1
        bd = ss.boundary(n + 1, N)
        rep = sset_homology(bd)
        for q in range(n):
            want = 1 if q in (0, n) else 0
            assert rep.degrees[q].betti == want, (n, q)
            assert rep.degrees[q].torsion == []
        # the top sphere degree n is inside the reliable range (n < N)
        assert rep.degrees[n].betti == 1


def test_square_is_contractible():
    d1 = ss.standard_simplex(1, 2)
    P = ss.product(d1, d1)
    rep = sset_homology(P)
    assert rep.degrees[0].betti == 1
    assert rep.degrees[1].betti == 0


def test_circle_from_coequalizer():
    C = fx.circle(2)
    rep = sset_homology(C)
    assert rep.degrees[0].betti == 1
    assert rep.degrees[1].betti == 1


def test_torsion_detected():
    nv = fc.nerve(fx.cyclic_group_category(2), 3)
    rep = sset_homology(nv)
    assert rep.degrees[1].torsion == [2]


def test_pi0():
    s0 = fx.two_points(2)
    assert len(pi0(s0)[1]) == 2
    assert len(pi0(ss.boundary(2, 2))[1]) == 1


def test_is_homology_iso_positive_and_negative():
    N = 2
    s0 = fx.two_points(N)
    assert bool(is_homology_iso(ss.SimplicialMap.identity(s0)))
    collapse = fx.collapse_to_point(s0, N)
    v = is_homology_iso(collapse)
    assert not bool(v)
    # the verdict explains itself
    assert v.to_dict()["is_iso"] is False


def test_homology_iso_needs_surjectivity():
    # vertex inclusion into S^0 is injective on homology but not surjective
    N = 2
    d0 = ss.standard_simplex(0, N)
    s0 = fx.two_points(N)
    incl_levels = [{(0,) * (q + 1): ("p", (0,) * (q + 1))}
                   for q in range(N + 1)]
    f = ss.SimplicialMap(d0, s0, incl_levels)
    assert not bool(is_homology_iso(f))

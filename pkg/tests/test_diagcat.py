"""Diagrams, simplicial replacement, overcategories, and the slice
exponential equivalence."""

import pytest

from hocolim import diagcat as dg
from hocolim import fincat as fc
from hocolim import fixtures as fx
from hocolim import sset as ss
from hocolim.errors import ValidationError
from hocolim.homology import is_homology_iso, sset_homology


N = 2


def _arrow_diagram():
    C = fx.arrow_category()
    d0 = ss.standard_simplex(0, N)
    d1 = ss.standard_simplex(1, N)
    incl = ss.simplex_map((0,), 0, 1, N)
    return dg.Diagram(C, {"a": d0, "b": d1}, {
        "ida": ss.SimplicialMap.identity(d0),
        "idb": ss.SimplicialMap.identity(d1),
        "w": incl,
    })


def test_diagram_functoriality_checked():
    C = fx.arrow_category()
    d0 = ss.standard_simplex(0, N)
    d1 = ss.standard_simplex(1, N)
    incl = ss.simplex_map((0,), 0, 1, N)
    with pytest.raises(ValidationError):
        dg.Diagram(C, {"a": d0, "b": d1}, {
            "ida": ss.SimplicialMap.identity(d0),
            "idb": incl,  # not the identity at b
            "w": incl,
        })


def test_srep_diagonal_of_constant_is_nerve():
    C = fx.arrow_category()
    d0 = ss.standard_simplex(0, N)
    Dc = dg.constant_diagram(C, d0)
    dia = ss.diagonal(dg.srep(Dc))
    assert ss.isomorphic(dia, fc.nerve(C, N))


def test_pullback_diagram():
    D = _arrow_diagram()
    one = fc.terminal_category()
    F = fc.Functor(one, D.shape, {"*": "b"}, {"id": "idb"})
    P = dg.pullback(F, D)
    assert P.obj["*"] is D.obj["b"]


def test_overcategory_objects_are_maps():
    gamma = fx.point_diagram(N)
    X = ss.boundary(2, N)
    oc = dg.overcategory(gamma, X)
    # maps Delta[0] -> X are the vertices of X
    assert len(oc.cat.objects) == X.size(0)
    for o in oc.cat.objects:
        assert oc.maps[o].target is X


def test_resolution_overcategory_counts():
    gamma = fx.point_diagram(N)
    R = dg.canonical_resolution_functor(gamma)
    X = ss.boundary(2, N)
    roc = dg.resolution_overcategory(R, X)
    # maps gamma(c) x Delta[n] -> X biject with X_n for gamma(c) a point
    want = sum(X.size(n) for n in range(N + 1))
    assert len(roc.cat.objects) == want
    inc = dg.overcat_inclusion(dg.overcategory(gamma, X), roc)
    assert all(inc.ob[o][0][1] == 0 for o in inc.source.objects)


def test_sing_recovers_target_for_point_shape():
    gamma = fx.point_diagram(N)
    R = dg.canonical_resolution_functor(gamma)
    X = ss.boundary(2, N)
    S = dg.sing(R, X)
    assert ss.isomorphic(S.obj["*"], X)


def test_realize_yoneda_collapses():
    D = _arrow_diagram()
    R = dg.canonical_resolution_functor(D)
    Y = dg.yoneda_presheaf(D.shape, "b", N)
    coeq, _tds, _incl = dg.realize(R, Y)
    assert ss.isomorphic(coeq.sset, D.obj["b"])


def test_overcat_exponential_iso_roundtrips():
    gamma = fx.point_diagram(N)
    R = dg.canonical_resolution_functor(gamma)
    X = ss.boundary(2, N)
    for n in (0, 1):
        fwd, bwd, so, eo = dg.overcat_exponential_iso(gamma, R, X, n)
        assert all(bwd.ob[fwd.ob[o]] == o for o in so.cat.objects)
        assert all(bwd.mo[fwd.mo[m]] == m for m in so.cat.mor)
        assert all(fwd.ob[bwd.ob[o]] == o for o in eo.cat.objects)
        assert all(fwd.mo[bwd.mo[m]] == m for m in eo.cat.mor)


def test_srep_functor_map_on_inclusion():
    # the inclusion of the full subcategory on 'b' into the arrow category
    D = _arrow_diagram()
    one = fc.terminal_category()
    F = fc.Functor(one, D.shape, {"*": "b"}, {"id": "idb"})
    P = dg.pullback(F, D)
    Bsrc = dg.srep(P)
    Bdst = dg.srep(D)
    f = dg.srep_functor_map(F, D, Bsrc, Bdst)
    assert f.source.size(0) > 0
    # 'b' is terminal in the arrow category, so the pushforward from the
    # subdiagram at 'b' hits everything up to homology
    assert bool(is_homology_iso(f))

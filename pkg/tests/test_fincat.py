"""Finite categories, functors, nerves, undercategories, chains."""

import pytest

from hocolim import fincat as fc
from hocolim import fixtures as fx
from hocolim.errors import ValidationError
from hocolim.homology import sset_homology


def test_category_validation_rejects_bad_composition():
    with pytest.raises(ValidationError):
        fc.FinCat(
            ("a",), {"ida": ("a", "a"), "e": ("a", "a")}, {"a": "ida"},
            {("ida", "ida"): "ida", ("e", "ida"): "ida",  # not unital
             ("ida", "e"): "e", ("e", "e"): "ida"},
        )


def test_terminal_and_opposite():
    one = fc.terminal_category()
    assert len(one.objects) == 1
    A = fx.arrow_category()
    Aop = fc.opposite(A)
    assert Aop.src("w") == "b" and Aop.dst("w") == "a"


def test_undercategory_of_arrow():
    A = fx.arrow_category()
    U, proj = fc.undercategory(A, "a")
    # objects are (j, phi: a -> j): (a, ida) and (b, w)
    assert len(U.objects) == 2
    assert proj.ob[("b", "w")] == "b"


def test_nerve_of_poset_is_contractible():
    A = fx.arrow_category()
    nv = fc.nerve(A, 2)
    rep = sset_homology(nv)
    assert (rep.degrees[0].betti, rep.degrees[0].torsion) == (1, [])
    assert (rep.degrees[1].betti, rep.degrees[1].torsion) == (0, [])


def test_nerve_of_cyclic_group():
    C = fx.cyclic_group_category(2)
    nv = fc.nerve(C, 4)
    rep = sset_homology(nv)
    got = [(d.betti, d.torsion) for d in rep.degrees[:4]]
    assert got == [(1, []), (0, [2]), (0, []), (0, [2])]


def test_chains_face_and_head():
    A = fx.arrow_category()
    chains1 = fc.chains(A, 1)
    assert ("w",) in chains1
    ch = ("w",)
    assert fc.chain_head(A, 1, ch) == "a"
    assert fc.chain_head(A, 0, fc.chain_face(A, 1, 1, ch)) == "a"
    assert fc.chain_head(A, 0, fc.chain_face(A, 1, 0, ch)) == "b"


def test_functor_and_nat_trans_validation():
    one = fc.terminal_category()
    A = fx.arrow_category()
    f = fc.Functor(one, A, {"*": "a"}, {"id": "ida"})
    with pytest.raises(ValidationError):
        fc.Functor(one, A, {"*": "a"}, {"id": "w"})
    g = fc.Functor(one, A, {"*": "b"}, {"id": "idb"})
    eta = fc.NatTrans(f, g, {"*": "w"})
    assert eta.components["*"] == "w"
    with pytest.raises(ValidationError):
        fc.NatTrans(g, f, {"*": "w"})


def test_product_with_delta_shape():
    one = fc.terminal_category()
    P = fc.product_with_delta(one, 2)
    # objects ('*', n) for n = 0..2; morphisms carry monotone maps
    assert len(P.objects) == 3
    assert any(m[2] == (0, 1) if isinstance(m, tuple) and len(m) == 3
               else False for m in P.mor) or len(P.mor) > 3

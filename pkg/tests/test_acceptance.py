"""End-to-end acceptance gate.

Each test covers one numbered criterion, prints a single pass/fail line with
its elapsed time against a pinned budget, and fails hard on any violation.
Budgets are wall-clock seconds on a single core.
"""

import json
import pathlib
import time

import pytest

from hocolim import colimits as cl
from hocolim import cosimp as cz
from hocolim import diagcat as dg
from hocolim import dsl
from hocolim import documents as docs
from hocolim import fincat as fc
from hocolim import fixtures as fx
from hocolim import sset as ss
from hocolim.cli import main
from hocolim.homology import is_homology_iso, sset_homology


FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def criterion(capsys):
    """Time a criterion body, print one summary line, enforce the budget."""

    def run(number, label, budget, body):
        t0 = time.perf_counter()
        try:
            body()
            ok = True
            detail = ""
        except AssertionError as exc:
            ok = False
            detail = f" ({exc})"
        elapsed = time.perf_counter() - t0
        in_budget = elapsed < budget
        word = "PASS" if (ok and in_budget) else "FAIL"
        with capsys.disabled():
            print(f"criterion {number:2d} {label}: {word} "
                  f"[{elapsed:.2f}s / {budget:.0f}s]{detail}")
        assert ok, f"criterion {number} failed{detail}"
        assert in_budget, (
            f"criterion {number} exceeded budget: {elapsed:.2f}s >= {budget}s")

    return run


def _betti_torsion(X, upto):
    rep = sset_homology(X)
    return [(d.betti, d.torsion) for d in rep.degrees[:upto]]


# -- 1: structural exactness on the fixture corpus --------------------------


def test_criterion_01_structural_identities(criterion):
    def body():
        N = 3
        corpus = []
        for n in range(4):
            corpus.append(ss.standard_simplex(n, N))
        for n in range(1, 4):
            corpus.append(ss.boundary(n, N))
            for k in range(n + 1):
                corpus.append(ss.horn(n, k, N))
        corpus.append(fc.nerve(fx.pushout_shape(), N))
        corpus.append(fc.nerve(fx.cyclic_group_category(2), N))
        d1 = ss.standard_simplex(1, N)
        corpus.append(ss.product(d1, d1))
        corpus.append(fx.circle(N))
        A = cz.canonical_resolution(ss.boundary(2, N))
        for k in range(N + 1):
            corpus.append(cz.tensor_delta(A, ss.standard_simplex(k, N)).sset)
        env = docs.Environment(FIXTURES, truncation=N)
        for path in sorted(FIXTURES.glob("*.txt")):
            kind, value = env.load(path.stem)
            if kind == "sset":
                corpus.append(value)
        assert len(corpus) > 20
        for X in corpus:
            X._check_totality()
            X._check_identities()

    criterion(1, "structural identities on the corpus", 10.0, body)


# -- 2: homology golden set --------------------------------------------------


def test_criterion_02_homology_goldens(criterion):
    def body():
        assert _betti_torsion(ss.boundary(3, 3), 3) == \
            [(1, []), (0, []), (1, [])]
        d1 = ss.standard_simplex(1, 2)
        assert _betti_torsion(ss.product(d1, d1), 2) == [(1, []), (0, [])]
        nv = fc.nerve(fx.cyclic_group_category(2), 4)
        rep = sset_homology(nv)
        assert rep.degrees[1].torsion == [2]
        assert rep.degrees[3].torsion == [2]
        assert _betti_torsion(fx.circle(2), 2) == [(1, []), (1, [])]

    criterion(2, "homology golden set", 5.0, body)


# -- 3: co-Yoneda -------------------------------------------------------------


def test_criterion_03_co_yoneda(criterion):
    def body():
        r = fx.rng(3)
        for _ in range(10):
            A = fx.random_cosimplicial(r, 3, max_vertices=2, max_faces=2)
            for k in range(4):
                # co_yoneda_iso builds both roundtrips and asserts they are
                # mutually inverse isomorphisms exactly
                fwd, bwd, td = cz.co_yoneda_iso(A, k)
                assert fwd.source is td.sset

    criterion(3, "coend against a standard simplex", 30.0, body)


# -- 4: cross-method agreement ------------------------------------------------


def test_criterion_04_cross_method(criterion):
    def body():
        N = 2
        r = fx.rng(4)
        for idx in range(20):
            D = fx.random_diagram(r, N, max_objects=4, max_vertices=3,
                                  max_faces=4)
            assert sum(D.obj[c].nondegenerate_count()
                       for c in D.shape.objects) <= 12 * len(D.shape.objects)
            a = cl.bk_hocolim(D)
            b = cl.srep_hocolim(D)
            assert _betti_torsion(a.sset, N) == _betti_torsion(b.sset, N), idx

    criterion(4, "two hocolim formulas agree on random diagrams", 120.0, body)


# -- 5: hocolim correctness anchors -------------------------------------------


def test_criterion_05_anchors(criterion):
    def body():
        N = 2
        # terminal object: comparison to the value at the terminal object
        C = fx.arrow_category()
        edge = ss.standard_simplex(1, N)
        bd = ss.boundary(2, N)
        emb = ss.SimplicialMap(edge, bd, [
            {x: x for x in edge.levels[q]} for q in range(N + 1)
        ], check=False)
        D = dg.Diagram(C, {"a": edge, "b": bd}, {
            "ida": ss.SimplicialMap.identity(edge),
            "idb": ss.SimplicialMap.identity(bd),
            "w": emb,
        })
        for res in (cl.srep_hocolim(D), cl.bk_hocolim(D)):
            f = res.colim_result.induce(
                {"a": emb, "b": ss.SimplicialMap.identity(bd)}, bd)
            assert bool(is_homology_iso(f.compose(res.to_colim)))

        # pushout of two segments along two points is a circle
        P = fx.pushout_diagram(N)
        for res in (cl.srep_hocolim(P), cl.bk_hocolim(P)):
            assert _betti_torsion(res.sset, N) == [(1, []), (1, [])]

        # constant point diagram gives the nerve of the shape
        shape = fx.pushout_shape()
        res = cl.bk_hocolim(
            dg.constant_diagram(shape, ss.standard_simplex(0, N)))
        assert _betti_torsion(res.sset, N) == \
            _betti_torsion(fc.nerve(shape, N), N)

    criterion(5, "hocolim anchors", 60.0, body)


# -- 6: shape-reduction criterion ---------------------------------------------


def test_criterion_06_shape_reduction(criterion):
    def body():
        N = 2
        s0 = fx.two_points(N)
        one = fc.terminal_category()
        J = fx.walking_isomorphism()

        # (a) an explicit equivalence of categories, hypotheses vacuous
        f = fc.Functor(one, J, {"*": "a"}, {"id": "ida"})
        g = fc.Functor(J, one, {"a": "*", "b": "*"}, {m: "id" for m in J.mor})
        eta = fc.NatTrans(g.compose(f), fc.Functor.identity_functor(one),
                          {"*": "id"})
        theta = fc.NatTrans(f.compose(g), fc.Functor.identity_functor(J),
                            {"a": "ida", "b": "u"})
        X = dg.Diagram(one, {"*": s0},
                       {"id": ss.SimplicialMap.identity(s0)})
        v, g_star = cl.hocored_check(f, g, eta, theta, X)
        assert v.status == "iso" and g_star is not None

        # (b) a replacement pattern: J the full subcategory on the source of
        # the arrow category, with the counit pointing along the arrow; the
        # hypothesis is that the diagram sends the arrow to a homology iso
        I = fx.arrow_category()
        horn = ss.horn(2, 1, N)
        d0 = ss.standard_simplex(0, N)
        Js = fc.FinCat(("a",), {"ida": ("a", "a")}, {"a": "ida"},
                       {("ida", "ida"): "ida"})
        g2 = fc.Functor(Js, I, {"a": "a"}, {"ida": "ida"})
        f2 = fc.Functor(I, Js, {"a": "a", "b": "a"},
                        {m: "ida" for m in I.mor})
        eta2 = fc.NatTrans(g2.compose(f2), fc.Functor.identity_functor(I),
                           {"a": "ida", "b": "w"})
        theta2 = fc.NatTrans(f2.compose(g2), fc.Functor.identity_functor(Js),
                             {"a": "ida"})
        X2 = dg.Diagram(I, {"a": horn, "b": d0},
                        {"ida": ss.SimplicialMap.identity(horn),
                         "idb": ss.SimplicialMap.identity(d0),
                         "w": fx.collapse_to_point(horn, N)})
        v2, _ = cl.hocored_check(f2, g2, eta2, theta2, X2)
        assert v2.status == "iso"

        # (c) negative control: same shape but with a diagram whose arrow is
        # not a homology iso; the verdict must name the failing hypothesis
        X3 = dg.Diagram(I, {"a": s0, "b": d0},
                        {"ida": ss.SimplicialMap.identity(s0),
                         "idb": ss.SimplicialMap.identity(d0),
                         "w": fx.collapse_to_point(s0, N)})
        v3, g3 = cl.hocored_check(f2, g2, eta2, theta2, X3)
        assert v3.status == "hypotheses-not-met" and g3 is None
        failing = [label for label, cert in v3.certificates if not bool(cert)]
        assert any("eta" in label and "'b'" in label for label in failing)

    criterion(6, "shape-reduction criterion", 60.0, body)


# -- 7: resolution-graded hocolim ---------------------------------------------


def test_criterion_07_canonical_hocolim(criterion):
    def body():
        # reduced model against the sphere target at N=3
        gamma = fx.point_diagram(3)
        R = dg.canonical_resolution_functor(gamma)
        X = ss.boundary(2, 3)
        res, extras = cl.canonical_hocolim(gamma, R, X, model="reduced")
        v = is_homology_iso(res.to_target)
        assert bool(v)
        assert res.to_target.equals(
            extras["colim_to_target"].compose(res.to_colim))

        # the standalone level-wise assembly agrees
        res2, _ = cl.re_q_sing(gamma, R, X)
        assert _betti_torsion(res2.sset, 3) == _betti_torsion(res.sset, 3)

        # cross-certify the reduced model against the direct one where the
        # direct overcategory is still tractable
        gamma2 = fx.point_diagram(2)
        R2 = dg.canonical_resolution_functor(gamma2)
        pt = ss.standard_simplex(0, 2)
        hd, _ = cl.canonical_hocolim(gamma2, R2, pt, model="direct")
        hr, _ = cl.canonical_hocolim(gamma2, R2, pt, model="reduced")
        assert bool(is_homology_iso(hd.to_target))
        assert bool(is_homology_iso(hr.to_target))
        assert _betti_torsion(hd.sset, 2) == _betti_torsion(hr.sset, 2)

    criterion(7, "resolution-graded hocolim comparison", 120.0, body)


# -- 8: slice exponential equivalence -----------------------------------------


def test_criterion_08_slice_exponential(criterion):
    def body():
        gamma = fx.point_diagram(3)
        R = dg.canonical_resolution_functor(gamma)
        X = ss.boundary(2, 3)
        fwd, bwd, so, eo = dg.overcat_exponential_iso(gamma, R, X, 1)
        assert all(bwd.ob[fwd.ob[o]] == o for o in so.cat.objects)
        assert all(bwd.mo[fwd.mo[m]] == m for m in so.cat.mor)
        assert all(fwd.ob[bwd.ob[o]] == o for o in eo.cat.objects)
        assert all(fwd.mo[bwd.mo[m]] == m for m in eo.cat.mor)

    criterion(8, "slice exponential equivalence", 30.0, body)


# -- 9: degeneracy collapse ---------------------------------------------------


def test_criterion_09_degeneracy_collapse(criterion):
    def body():
        N = 2
        # constant simplicial object collapses
        X = ss.standard_simplex(1, N)
        const = cl.SimplicialObjectSS(
            N, [X] * (N + 1),
            {(n, i): ss.SimplicialMap.identity(X)
             for n in range(1, N + 1) for i in range(n + 1)},
            {(n, i): ss.SimplicialMap.identity(X)
             for n in range(N) for i in range(n + 1)})
        assert cl.degeneracy_collapse_check(const).status == "iso"

        # terminal-target fixture: every slice hocolim is a point
        gamma = fx.point_diagram(N)
        R = dg.canonical_resolution_functor(gamma)
        _res, extras = cl.canonical_hocolim(
            gamma, R, ss.standard_simplex(0, N), model="reduced")
        assert cl.degeneracy_collapse_check(
            extras["simplicial_object"]).status == "iso"

        # negative control: slice sizes vary, so a face map must fail
        _res, extras = cl.canonical_hocolim(
            gamma, R, ss.standard_simplex(1, N), model="reduced")
        v = cl.degeneracy_collapse_check(extras["simplicial_object"])
        assert v.status == "hypotheses-not-met"

    criterion(9, "degeneracy collapse verdicts", 10.0, body)


# -- 10: command-line round trips ---------------------------------------------


def test_criterion_10_cli(criterion, capsys):
    def body():
        # parse/print round trips
        for text in ("simplex(2)", "hocolim[bk](pushout)",
                     "canonical_hocolim[srep](point, boundary(2))",
                     "homology(product(simplex(1), simplex(1)))"):
            assert dsl.pretty(dsl.parse(text)) == text

        # load/save round trips are bit-exact on every shipped document
        for path in sorted(FIXTURES.glob("*.txt")):
            text = path.read_text()
            assert docs.canonical_text(docs.parse_document(text)) == text

        # every verification suite passes through the real entry point
        for suite in ("appendix", "section4", "section5", "section8"):
            code = main(["--deterministic", "verify", "--suite", suite])
            captured = capsys.readouterr()
            assert code == 0, (suite, captured.out)
            assert json.loads(captured.out)["passed"] is True

        # deterministic runs emit identical bytes
        argv = ["--deterministic", "--docs", str(FIXTURES),
                "eval", "hocolim[srep](pushout)"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        second = capsys.readouterr().out
        assert first == second

    criterion(10, "command-line round trips and suites", 180.0, body)

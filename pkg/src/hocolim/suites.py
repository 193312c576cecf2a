"""Named verification suites run from the command line.

Each suite bundles a family of oracle-checked properties of the engine and
reports one pass/fail line per property.  Suites choose their own instance
sizes (recorded per property) so that a full run stays in CLI time budgets;
the heavier randomized sweeps live in the test suite instead.
"""

from . import colimits as cl
from . import cosimp as cz
from . import diagcat as dg
from . import fincat as fc
from . import fixtures as fx
from . import sset as ss
from .homology import is_homology_iso, sset_homology


def _prop(results, name, passed, detail=""):
    results.append({"name": name, "passed": bool(passed), "detail": detail})


def _co_yoneda_props(results, truncation, budget):
    r = fx.rng(20260823)
    N = min(truncation, 3)
    for idx in range(2):
        A = fx.random_cosimplicial(r, N, max_vertices=2, max_faces=2)
        for k in range(1, min(N, 2) + 1):
            try:
                cz.co_yoneda_iso(A, k)
                ok = True
            except Exception:  # noqa: BLE001 - reported, not raised
                ok = False
            _prop(results, f"co-yoneda instance {idx} k={k}", ok,
                  f"tensor against Delta[{k}] vs component {k}")


def _hocored_props(results, truncation):
    N = min(truncation, 2)
    d0 = ss.standard_simplex(0, N)
    s0 = fx.two_points(N)
    I = fc.terminal_category()
    J = fx.walking_isomorphism()
    f = fc.Functor(I, J, {"*": "a"}, {"id": "ida"})
    g = fc.Functor(J, I, {"a": "*", "b": "*"}, {m: "id" for m in J.mor})
    eta = fc.NatTrans(g.compose(f), fc.Functor.identity_functor(I),
                      {"*": "id"})
    theta = fc.NatTrans(f.compose(g), fc.Functor.identity_functor(J),
                        {"a": "ida", "b": "u"})
    X = dg.Diagram(I, {"*": s0}, {"id": ss.SimplicialMap.identity(s0)})
    v, _ = cl.hocored_check(f, g, eta, theta, X)
    _prop(results, "reduction across a category equivalence", v.status == "iso",
          f"status {v.status}")

    Jd = fc.FinCat(("a", "b"), {"ida": ("a", "a"), "idb": ("b", "b")},
                   {"a": "ida", "b": "idb"},
                   {("ida", "ida"): "ida", ("idb", "idb"): "idb"})
    gd = fc.Functor(Jd, I, {"a": "*", "b": "*"}, {"ida": "id", "idb": "id"})
    v2, _ = cl.hocored_check(None, gd, None, None, X)
    _prop(results, "negative control is detected", v2.status == "not-iso",
          f"status {v2.status}")

    A = fx.arrow_category()
    to_pt = fx.collapse_to_point(s0, N)
    X2 = dg.Diagram(A, {"a": s0, "b": d0},
                    {"ida": ss.SimplicialMap.identity(s0),
                     "idb": ss.SimplicialMap.identity(d0), "w": to_pt})
    f2 = fc.Functor.identity_functor(A)
    eta2 = fc.NatTrans(f2, f2, {"a": "w", "b": "idb"}, check=False)
    v3, _ = cl.hocored_check(f2, f2, eta2, None, X2)
    _prop(results, "failed hypotheses reported, not crashed",
          v3.status == "hypotheses-not-met", f"status {v3.status}")


def _method_agreement_props(results, count=4):
    N = 2
    r = fx.rng(31)
    made = 0
    while made < count:
        D = fx.random_diagram(r, N, max_objects=3, max_vertices=2,
                              max_faces=3)
        hs = cl.srep_hocolim(D)
        hb = cl.bk_hocolim(D)
        a = sset_homology(hs.sset)
        b = sset_homology(hb.sset)
        ok = all(a.degrees[q] == b.degrees[q] for q in range(N))
        _prop(results, f"coend vs replacement model, instance {made}", ok,
              f"{a.summary()} vs {b.summary()}")
        made += 1


def suite_appendix(truncation, budget):
    results = []
    _co_yoneda_props(results, truncation, budget)
    _hocored_props(results, truncation)
    _method_agreement_props(results)
    return results


def suite_section4(truncation, budget):
    results = []
    N = 2
    gamma = fx.point_diagram(N)
    d0 = ss.standard_simplex(0, N)
    d1 = ss.standard_simplex(1, N)

    res, _oc = cl.naive_hocolim(gamma, d0)
    _prop(results, "vertex-graded hocolim compares to a point",
          bool(is_homology_iso(res.to_target)),
          sset_homology(res.sset).summary())

    R = dg.canonical_resolution_functor(gamma)
    # the direct model explodes quickly, so it gets the smallest target
    for model, target in (("direct", d0), ("reduced", d1)):
        h, extras = cl.canonical_hocolim(gamma, R, target, model=model)
        ok = bool(is_homology_iso(h.to_target))
        factor = h.to_target.equals(
            extras["colim_to_target"].compose(h.to_colim))
        _prop(results, f"canonical hocolim comparison ({model} model)",
              ok and factor,
              f"comparison iso {ok}, factors through the colimit {factor}")
    return results


def suite_section5(truncation, budget):
    results = []
    N = min(truncation, 3)
    gamma = fx.point_diagram(N)
    R = dg.canonical_resolution_functor(gamma)
    X = ss.boundary(2, N)
    for n in (0, 1):
        fwd, bwd, so, eo = dg.overcat_exponential_iso(gamma, R, X, n,
                                                      budget=budget)
        rt1 = all(bwd.ob[fwd.ob[o]] == o for o in so.cat.objects) and \
            all(bwd.mo[fwd.mo[m]] == m for m in so.cat.mor)
        rt2 = all(fwd.ob[bwd.ob[o]] == o for o in eo.cat.objects) and \
            all(fwd.mo[bwd.mo[m]] == m for m in eo.cat.mor)
        _prop(results, f"slice/exponential equivalence at level {n}",
              rt1 and rt2,
              f"{len(so.cat.objects)} objects, both round-trips exact")
    return results


def suite_section8(truncation, budget):
    results = []
    N = 2
    D = fx.pushout_diagram(N)
    a = sset_homology(cl.srep_hocolim(D).sset)
    b = sset_homology(cl.bk_hocolim(D).sset)
    _prop(results, "pushout: coend and replacement models agree",
          all(a.degrees[q] == b.degrees[q] for q in range(N)),
          f"{a.summary()} vs {b.summary()}")

    X = ss.standard_simplex(1, N)
    Zc = cl.SimplicialObjectSS(
        N, [X] * (N + 1),
        {(n, i): ss.SimplicialMap.identity(X)
         for n in range(1, N + 1) for i in range(n + 1)},
        {(n, i): ss.SimplicialMap.identity(X)
         for n in range(N) for i in range(n + 1)})
    v = cl.degeneracy_collapse_check(Zc)
    _prop(results, "constant simplicial object collapses", v.status == "iso",
          f"status {v.status}")

    gamma = fx.point_diagram(N)
    R = dg.canonical_resolution_functor(gamma)
    _res, extras = cl.canonical_hocolim(gamma, R,
                                        ss.standard_simplex(0, N),
                                        model="reduced")
    v2 = cl.degeneracy_collapse_check(extras["simplicial_object"])
    _prop(results, "level-graded model over a point collapses",
          v2.status == "iso", f"status {v2.status}")

    _res3, extras3 = cl.canonical_hocolim(gamma, R, ss.boundary(2, N),
                                          model="reduced")
    v3 = cl.degeneracy_collapse_check(extras3["simplicial_object"])
    _prop(results, "collapse hypotheses honestly fail on a sphere",
          v3.status == "hypotheses-not-met", f"status {v3.status}")
    return results


SUITES = {
    "appendix": suite_appendix,
    "section4": suite_section4,
    "section5": suite_section5,
    "section8": suite_section8,
}


def run_suite(name, truncation=3, budget=ss.DEFAULT_BUDGET):
    if name not in SUITES:
        raise KeyError(name)
    props = SUITES[name](truncation, budget)
    return {
        "suite": name,
        "properties": props,
        "passed": all(p["passed"] for p in props),
    }

"""Regenerate the shipped fixture documents in canonical byte form.

Run from the repository root::

    python3 scripts/generate_fixtures.py

The documents are written through the canonical savers, so a later
load/save round trip reproduces them byte for byte.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hocolim import diagcat as dg  # noqa: E402
from hocolim import documents as docs  # noqa: E402
from hocolim import fincat as fc  # noqa: E402
from hocolim import fixtures as fx  # noqa: E402
from hocolim import sset as ss  # noqa: E402

N = 3
OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def write(name, text):
    path = os.path.join(OUT, name + ".txt")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    print("wrote", path)


def main():
    os.makedirs(OUT, exist_ok=True)

    d0 = ss.standard_simplex(0, N)
    s0 = fx.two_points(N)
    write("point", docs.save_sset(d0))
    write("s0", docs.save_sset(s0))
    write("circle", docs.save_sset(fx.circle(N)))

    collapse = fx.collapse_to_point(s0, N)
    write("collapse", docs.save_map(collapse, "s0", "point"))
    write("id_s0", docs.save_map(ss.SimplicialMap.identity(s0), "s0", "s0"))

    write("span", docs.save_category(fx.pushout_shape()))
    write("one", docs.save_category(fc.terminal_category()))
    write("walking_iso", docs.save_category(fx.walking_isomorphism()))
    disc2 = fc.FinCat(("a", "b"), {"ida": ("a", "a"), "idb": ("b", "b")},
                      {"a": "ida", "b": "idb"},
                      {("ida", "ida"): "ida", ("idb", "idb"): "idb"})
    write("discrete2", docs.save_category(disc2))
    write("z2", docs.save_category(fx.cyclic_group_category(2)))

    write("pushout", docs.save_diagram(("span", {
        "l": "point", "m": "s0", "r": "point",
    }, {
        "il": "identity", "im": "identity", "ir": "identity",
        "f": "collapse", "g": "collapse",
    })))
    write("s0_over_pt", docs.save_diagram(("one", {"*": "s0"},
                                           {"id": "identity"})))

    one = fc.terminal_category()
    iso = fx.walking_isomorphism()
    f = fc.Functor(one, iso, {"*": "a"}, {"id": "ida"})
    g = fc.Functor(iso, one, {"a": "*", "b": "*"}, {m: "id" for m in iso.mor})
    write("f_pt_iso", docs.save_functor(f, "one", "walking_iso"))
    write("g_iso_pt", docs.save_functor(g, "walking_iso", "one"))
    write("id_one", docs.save_functor(fc.Functor.identity_functor(one),
                                      "one", "one"))
    write("id_walking_iso",
          docs.save_functor(fc.Functor.identity_functor(iso),
                            "walking_iso", "walking_iso"))
    fg = f.compose(g)
    write("fg_walking", docs.save_functor(fg, "walking_iso", "walking_iso"))
    eta = fc.NatTrans(g.compose(f), fc.Functor.identity_functor(one),
                      {"*": "id"})
    theta = fc.NatTrans(fg, fc.Functor.identity_functor(iso),
                        {"a": "ida", "b": "u"})
    write("eta_pt", docs.save_nattrans(eta, "id_one", "id_one"))
    write("theta_walking", docs.save_nattrans(theta, "fg_walking",
                                              "id_walking_iso"))
    gd = fc.Functor(disc2, one, {"a": "*", "b": "*"},
                    {"ida": "id", "idb": "id"})
    write("g_disc_pt", docs.save_functor(gd, "discrete2", "one"))

    write("hocored_equivalence", docs.save_hocored_scenario(
        "f_pt_iso", "g_iso_pt", ["eta_pt"], ["theta_walking"], "s0_over_pt"))
    write("hocored_negative", docs.save_hocored_scenario(
        None, "g_disc_pt", [], [], "s0_over_pt"))


if __name__ == "__main__":
    main()

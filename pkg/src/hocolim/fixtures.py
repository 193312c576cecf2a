"""Deterministic fixtures and seeded random instances for the test suites.

Random simplicial sets are generated as ordered simplicial complexes (choose
maximal faces on a small vertex set), random diagram shapes as forest posets
(unique composites, so functoriality holds by construction), and random
cosimplicial objects as canonical resolutions of random simplicial sets.
"""

import random

from . import cosimp as cz
from . import diagcat as dg
from . import fincat as fc
from . import sset as ss


# ---------------------------------------------------------------------------
# Named fixtures
# ---------------------------------------------------------------------------


def two_points(N):
    """S^0: the coproduct of two standard 0-simplices."""
    d0 = ss.standard_simplex(0, N)
    return ss.coproduct([("p", d0), ("q", d0)])[0]


def collapse_to_point(X, N):
    d0 = ss.standard_simplex(0, N)
    levels = [{x: (0,) * (q + 1) for x in X.levels[q]} for q in range(N + 1)]
    return ss.SimplicialMap(X, d0, levels, check=False)


def pushout_shape():
    """The span l <- m -> r."""
    return fc.FinCat(
        ("l", "m", "r"),
        {"il": ("l", "l"), "im": ("m", "m"), "ir": ("r", "r"),
         "f": ("m", "l"), "g": ("m", "r")},
        {"l": "il", "m": "im", "r": "ir"},
        {("il", "il"): "il", ("im", "im"): "im", ("ir", "ir"): "ir",
         ("f", "im"): "f", ("il", "f"): "f",
         ("g", "im"): "g", ("ir", "g"): "g"},
    )


def pushout_diagram(N):
    """pt <- S^0 -> pt; its hocolim is a circle, its colimit a point."""
    P = pushout_shape()
    d0 = ss.standard_simplex(0, N)
    s0 = two_points(N)
    to_pt = collapse_to_point(s0, N)
    return dg.Diagram(P, {"l": d0, "m": s0, "r": d0}, {
        "il": ss.SimplicialMap.identity(d0),
        "im": ss.SimplicialMap.identity(s0),
        "ir": ss.SimplicialMap.identity(d0),
        "f": to_pt, "g": to_pt,
    })


def arrow_category():
    return fc.FinCat(
        ("a", "b"),
        {"ida": ("a", "a"), "idb": ("b", "b"), "w": ("a", "b")},
        {"a": "ida", "b": "idb"},
        {("ida", "ida"): "ida", ("idb", "idb"): "idb",
         ("w", "ida"): "w", ("idb", "w"): "w"},
    )


def walking_isomorphism():
    return fc.FinCat(
        ("a", "b"),
        {"ida": ("a", "a"), "idb": ("b", "b"),
         "u": ("a", "b"), "v": ("b", "a")},
        {"a": "ida", "b": "idb"},
        {("ida", "ida"): "ida", ("idb", "idb"): "idb",
         ("u", "ida"): "u", ("idb", "u"): "u",
         ("v", "idb"): "v", ("ida", "v"): "v",
         ("u", "v"): "idb", ("v", "u"): "ida"},
    )


def cyclic_group_category(order):
    """Z/n as a one-object category; morphism k composes additively."""
    mor = {f"g{k}": ("*", "*") for k in range(order)}
    comp = {
        (f"g{a}", f"g{b}"): f"g{(a + b) % order}"
        for a in range(order) for b in range(order)
    }
    return fc.FinCat(("*",), mor, {"*": "g0"}, comp)


def circle(N):
    """Delta[1] with both endpoints glued: one vertex, one nondegenerate
    edge."""
    e0 = ss.simplex_map((0,), 0, 1, N)
    e1 = ss.simplex_map((1,), 0, 1, N)
    return ss.coequalizer(e0, e1).sset


def point_diagram(N):
    d0 = ss.standard_simplex(0, N)
    return dg.Diagram(fc.terminal_category(), {"*": d0},
                      {"id": ss.SimplicialMap.identity(d0)})


# ---------------------------------------------------------------------------
# Seeded random instances
# ---------------------------------------------------------------------------


def random_sset(rng, N, max_vertices=4, max_dim=None, max_faces=5):
    """An ordered simplicial complex with randomly chosen maximal faces."""
    if max_dim is None:
        max_dim = N
    v = rng.randrange(1, max_vertices + 1)
    verts = list(range(v))
    faces = {frozenset((x,)) for x in verts}
    for _ in range(rng.randrange(max_faces + 1)):
        d = rng.randrange(1, min(max_dim, v - 1) + 1) if v > 1 else 0
        if d == 0:
            continue
        face = frozenset(rng.sample(verts, d + 1))
        faces.add(face)
    # close under subsets
    closed = set()
    stack = list(faces)
    while stack:
        f = stack.pop()
        if f in closed:
            continue
        closed.add(f)
        for x in f:
            sub = f - {x}
            if sub:
                stack.append(sub)
    nondeg = [[] for _ in range(N + 1)]
    for f in closed:
        n = len(f) - 1
        if n <= N:
            nondeg[n].append(tuple(sorted(f)))
    for lev in nondeg:
        lev.sort()

    def face_fn(n, i, x):
        return ((), x[:i] + x[i + 1:])

    lossy = any(len(f) - 1 > N for f in closed)
    return ss.SimplicialSet.from_nondegenerate(N, nondeg, face_fn,
                                               lossy=lossy)


def random_map(rng, X, Y, budget=ss.DEFAULT_BUDGET):
    """A uniformly chosen simplicial map X -> Y, or None if there is none."""
    maps = ss.enumerate_maps(X, Y, budget=budget)
    if not maps:
        return None
    return maps[rng.randrange(len(maps))]


def random_forest_shape(rng, max_objects=4):
    """The poset category of a random forest (each node at most one parent).

    Unique paths make the composition table forced, and diagrams over it are
    functorial as soon as the edge maps are chosen.
    """
    n = rng.randrange(1, max_objects + 1)
    parent = {}
    for k in range(1, n):
        parent[k] = rng.randrange(k) if rng.random() < 0.7 else None
    objects = tuple(f"o{k}" for k in range(n))

    def ancestors(k):
        out = []
        cur = parent.get(k)
        while cur is not None:
            out.append(cur)
            cur = parent.get(cur)
        return out

    mor = {f"id{k}": (f"o{k}", f"o{k}") for k in range(n)}
    for k in range(n):
        for a in ancestors(k):
            mor[f"m{k}_{a}"] = (f"o{k}", f"o{a}")
    identity = {f"o{k}": f"id{k}" for k in range(n)}
    # the composite src o{i} -> dst o{j} can only be m{i}_{j}
    comp = {}
    for g, (gs, gd) in mor.items():
        for f, (fs, fd) in mor.items():
            if fd != gs:
                continue
            comp[(g, f)] = identity[fs] if fs == gd else \
                f"m{fs[1:]}_{gd[1:]}"
    return fc.FinCat(objects, mor, identity, comp), parent


def random_diagram(rng, N, max_objects=4, max_vertices=3, max_faces=4,
                   budget=ss.DEFAULT_BUDGET):
    """A random diagram over a random forest poset.

    Edge maps are chosen at random and composites are forced; retries until
    every edge admits a map (a target with at least one vertex always does).
    """
    shape, parent = random_forest_shape(rng, max_objects)
    n = len(shape.objects)
    obj = {f"o{k}": random_sset(rng, N, max_vertices, None, max_faces)
           for k in range(n)}
    edge = {}
    for k, p in parent.items():
        if p is None:
            continue
        f = random_map(rng, obj[f"o{k}"], obj[f"o{p}"], budget=budget)
        if f is None:
            # every nonempty target of ours has a vertex, so a constant
            # map exists; enumerate_maps returning nothing means budget
            raise RuntimeError("random_map found no map")
        edge[(k, p)] = f

    def path_map(k, a):
        f = None
        cur = k
        while cur != a:
            p = parent[cur]
            step = edge[(cur, p)]
            f = step if f is None else step.compose(f)
            cur = p
        return f

    maps = {}
    for m, (s, d) in shape.mor.items():
        if m.startswith("id"):
            maps[m] = ss.SimplicialMap.identity(obj[s])
        else:
            maps[m] = path_map(int(s[1:]), int(d[1:]))
    return dg.Diagram(shape, obj, maps)


def random_cosimplicial(rng, N, max_vertices=3, max_faces=3):
    """A random cosimplicial simplicial set: the canonical resolution of a
    random simplicial set (guaranteed to satisfy the cosimplicial
    identities)."""
    X = random_sset(rng, N, max_vertices, None, max_faces)
    return cz.canonical_resolution(X)


def rng(seed):
    return random.Random(seed)

"""Diagrams of simplicial sets over finite categories.

Covers the presheaf-side constructions: pullback along a functor,
overcategories of a diagram under a target object (both the plain one and
the resolution-graded one), the simplex-wise mapping diagram ``sing``, the
simplicial replacement of a diagram, and the coend ``realize``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import cosimp as cz
from . import fincat as fc
from . import sset as ss
from .errors import TruncationMismatch, ValidationError
from .fincat import FinCat, Functor
from .sset import SimplicialMap, SimplicialSet


class Diagram:
    """A functor from a finite category into truncated simplicial sets."""

    __slots__ = ("shape", "obj", "mor", "N")

    def __init__(self, shape, obj, mor, check=True):
        self.shape = shape
        self.obj = dict(obj)   # object id -> SimplicialSet
        self.mor = dict(mor)   # morphism id -> SimplicialMap
        Ns = {X.N for X in self.obj.values()}
        if len(Ns) != 1:
            raise TruncationMismatch("diagram values have mixed truncations")
        self.N = Ns.pop()
        if check:
            self._validate()

    def value(self, c):
        return self.obj[c]

    def map(self, u):
        return self.mor[u]

    def _validate(self):
        C = self.shape
        for c in C.objects:
            if c not in self.obj:
                raise ValidationError(f"diagram undefined on object {c!r}")
        for u in C.mor:
            h = self.mor.get(u)
            if h is None:
                raise ValidationError(f"diagram undefined on morphism {u!r}")
            if not h.source.equals(self.obj[C.src(u)]) or \
               not h.target.equals(self.obj[C.dst(u)]):
                raise ValidationError(f"diagram map {u!r} has wrong endpoints")
        for c in C.objects:
            if self.mor[C.identity[c]].key() != \
               SimplicialMap.identity(self.obj[c]).key():
                raise ValidationError(f"diagram breaks identity at {c!r}")
        by_src = {}
        for u, (s, _) in C.mor.items():
            by_src.setdefault(s, []).append(u)
        for u in C.mor:
            for v in by_src.get(C.dst(u), []):
                if self.mor[C.compose(v, u)].key() != \
                   self.mor[v].compose(self.mor[u]).key():
                    raise ValidationError(
                        f"diagram breaks composition on ({v!r}, {u!r})"
                    )

    def __repr__(self):
        return f"<Diagram over {self.shape!r}>"


def constant_diagram(C, X):
    """The diagram constant at X over C."""
    ident = SimplicialMap.identity(X)
    return Diagram(C, {c: X for c in C.objects},
                   {u: ident for u in C.mor}, check=False)


def pullback(f, D):
    """The diagram f^*D along a functor f into D's shape: (f^*D)(i) = D(fi)."""
    if f.target is not D.shape:
        raise ValidationError("pullback: functor target is not the diagram shape")
    return Diagram(
        f.source,
        {c: D.obj[f.ob[c]] for c in f.source.objects},
        {u: D.mor[f.mo[u]] for u in f.source.mor},
        check=False,
    )


class DiagramMap:
    """An objectwise map of diagrams over the same shape, natural on the nose."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source, target, components, check=True):
        self.source = source
        self.target = target
        self.components = dict(components)
        if check:
            self._validate()

    def component(self, c):
        return self.components[c]

    def _validate(self):
        C = self.source.shape
        if C is not self.target.shape:
            raise ValidationError("diagram map requires a common shape")
        for c in C.objects:
            h = self.components.get(c)
            if h is None or not h.source.equals(self.source.obj[c]) or \
               not h.target.equals(self.target.obj[c]):
                raise ValidationError(f"bad component at {c!r}")
        for u in C.mor:
            a, b = C.src(u), C.dst(u)
            left = self.components[b].compose(self.source.mor[u])
            right = self.target.mor[u].compose(self.components[a])
            if left.key() != right.key():
                raise ValidationError(f"naturality fails on {u!r}")


# ---------------------------------------------------------------------------
# Resolution functors
# ---------------------------------------------------------------------------


@dataclass
class ResolutionFunctor:
    """An objectwise cosimplicial resolution of a diagram gamma.

    ``res[c]`` resolves gamma(c) with 0th component gamma(c) itself;
    ``maps[u]`` is the induced cosimplicial map for each shape morphism.
    """

    gamma: Diagram
    res: dict
    maps: dict

    @property
    def shape(self):
        return self.gamma.shape

    def component_diagram(self, n):
        """The diagram of nth components, c |-> res[c]^n."""
        return Diagram(
            self.shape,
            {c: self.res[c].component(n) for c in self.shape.objects},
            {u: self.maps[u].component(n) for u in self.shape.mor},
            check=False,
        )


def canonical_resolution_functor(gamma):
    """Objectwise canonical resolutions, with maps gamma(u) x id."""
    N = gamma.N
    C = gamma.shape
    res = {c: cz.canonical_resolution(gamma.obj[c]) for c in C.objects}

    def lift(u):
        h = gamma.mor[u]
        A, B = res[C.src(u)], res[C.dst(u)]
        comps = [h]
        for n in range(1, N + 1):
            src, dst = A.component(n), B.component(n)
            levels = [
                {(x, sig): (h(q, x), sig) for (x, sig) in src.levels[q]}
                for q in range(N + 1)
            ]
            comps.append(SimplicialMap(src, dst, levels, check=False))
        return cz.CosimplicialMap(A, B, comps, check=False)

    maps = {u: lift(u) for u in C.mor}
    return ResolutionFunctor(gamma, res, maps)


def constant_resolution_functor(gamma):
    """Objectwise constant resolutions (every component the value itself)."""
    C = gamma.shape
    res = {c: cz.constant(gamma.obj[c]) for c in C.objects}
    maps = {
        u: cz.CosimplicialMap(res[C.src(u)], res[C.dst(u)],
                              [gamma.mor[u]] * (gamma.N + 1), check=False)
        for u in C.mor
    }
    return ResolutionFunctor(gamma, res, maps)


# ---------------------------------------------------------------------------
# Overcategories
# ---------------------------------------------------------------------------


@dataclass
class OverCat:
    """An overcategory (F | X) of a diagram F under maps to X.

    Objects are pairs (c, key) with key the canonical key of a map
    F(c) -> X; ``maps`` recovers the actual SimplicialMap.  ``evaluation`` is
    the diagram sending (c, key) to F(c); ``projection`` forgets the map.
    """

    cat: FinCat
    projection: Functor
    evaluation: Diagram
    maps: dict
    X: SimplicialSet


def overcategory(gamma, X, budget=ss.DEFAULT_BUDGET):
    """The overcategory (gamma | X) of a diagram gamma under X."""
    C = gamma.shape
    if gamma.N != X.N:
        raise TruncationMismatch("overcategory requires equal truncations")
    per_object = {
        c: ss.enumerate_maps(gamma.obj[c], X, budget=budget)
        for c in C.objects
    }
    objects = []
    maps = {}
    for c in C.objects:
        for f in per_object[c]:
            o = (c, f.key())
            objects.append(o)
            maps[o] = f
    obset = set(objects)
    mor = {}
    identity = {}
    for (c, fk) in objects:
        f = maps[(c, fk)]
        for u in C.mor:
            if C.src(u) != c:
                continue
            # a morphism (c, f) -> (c', f') is u with f' o gamma(u) = f
            for fpk in (k for (cc, k) in objects if cc == C.dst(u)):
                fp = maps[(C.dst(u), fpk)]
                if fp.compose(gamma.mor[u]).key() == fk:
                    src, dst = (c, fk), (C.dst(u), fpk)
                    mor[(src, dst, u)] = (src, dst)
    for o in objects:
        identity[o] = (o, o, C.identity[o[0]])
    comp = {}
    by_dst = {}
    for m, (s, d) in mor.items():
        by_dst.setdefault(s, []).append(m)
    for g, (gs, gd) in mor.items():
        for f, (fs, fd) in mor.items():
            if fd == gs:
                comp[(g, f)] = (fs, gd, C.compose(g[2], f[2]))
    cat = FinCat(objects, mor, identity, comp)
    projection = Functor(cat, C, {o: o[0] for o in objects},
                         {m: m[2] for m in mor})
    evaluation = Diagram(
        cat,
        {o: gamma.obj[o[0]] for o in objects},
        {m: gamma.mor[m[2]] for m in mor},
        check=False,
    )
    return OverCat(cat, projection, evaluation, maps, X)


def resolution_overcategory(R, X, budget=ss.DEFAULT_BUDGET):
    """The resolution-graded overcategory (C x Delta | X).

    Objects are pairs ((c, n), key) with key a map res[c]^n -> X; the shape
    of the projection is product_with_delta(C, N).  Because res[c]^0 is
    gamma(c), the n = 0 slice is literally overcategory(gamma, X).
    """
    gamma = R.gamma
    C = gamma.shape
    N = gamma.N
    if X.N != N:
        raise TruncationMismatch("resolution overcategory truncation mismatch")
    shape = fc.product_with_delta(C, N)
    per = {}
    for c in C.objects:
        for n in range(N + 1):
            per[(c, n)] = ss.enumerate_maps(R.res[c].component(n), X,
                                            budget=budget)
    objects = []
    maps = {}
    for (c, n), fs in per.items():
        for f in fs:
            o = ((c, n), f.key())
            objects.append(o)
            maps[o] = f

    def induced(u, phi, m, n):
        """res[src u]^m -> res[dst u]^n along (u, phi)."""
        return R.res[C.dst(u)].structure_map(phi, m, n).compose(
            R.maps[u].component(m))

    mor = {}
    identity = {}
    ind_cache = {}
    for ((c, m), fk) in objects:
        for u in C.mor:
            if C.src(u) != c:
                continue
            for n in range(N + 1):
                for phi in ss.monotone_maps(m, n):
                    key = (u, m, n, phi)
                    if key not in ind_cache:
                        ind_cache[key] = induced(u, phi, m, n)
                    h = ind_cache[key]
                    for fp in per[(C.dst(u), n)]:
                        if fp.compose(h).key() == fk:
                            src = ((c, m), fk)
                            dst = ((C.dst(u), n), fp.key())
                            sm = (u, (m, n, phi))
                            mor[(src, dst, sm)] = (src, dst)
    for o in objects:
        ((c, n), _) = o
        identity[o] = (o, o, shape.identity[(c, n)])
    comp = {}
    for g, (gs, gd) in mor.items():
        for f, (fs, fd) in mor.items():
            if fd == gs:
                comp[(g, f)] = (fs, gd, shape.compose(g[2], f[2]))
    cat = FinCat(objects, mor, identity, comp)
    projection = Functor(cat, shape, {o: o[0] for o in objects},
                         {mm: mm[2] for mm in mor})
    evaluation = Diagram(
        cat,
        {o: R.res[o[0][0]].component(o[0][1]) for o in objects},
        {mm: ind_cache[(mm[2][0], mm[0][0][1], mm[1][0][1], mm[2][1][2])]
         for mm in mor},
        check=False,
    )
    return OverCat(cat, projection, evaluation, maps, X)


def overcat_inclusion(naive, canonical):
    """The inclusion (gamma | X) -> (C x Delta | X) at level 0."""
    ob = {}
    for (c, fk) in naive.cat.objects:
        ob[(c, fk)] = ((c, 0), fk)
    mo = {}
    for (src, dst, u) in naive.cat.mor:
        ident = tuple(range(1))
        mo[(src, dst, u)] = (ob[src], ob[dst], (u, (0, 0, ident)))
    return Functor(naive.cat, canonical.cat, ob, mo)


def fixed_level_slice(canonical, n):
    """The full subcategory of (C x Delta | X) on objects with level n.

    Returns the FinCat plus the inclusion functor.
    """
    objects = [o for o in canonical.cat.objects if o[0][1] == n]
    obset = set(objects)
    ident_n = tuple(range(n + 1))
    mor = {
        m: sd for m, sd in canonical.cat.mor.items()
        if sd[0] in obset and sd[1] in obset and m[2][1][2] == ident_n
    }
    identity = {o: canonical.cat.identity[o] for o in objects}
    comp = {
        (g, f): canonical.cat.comp[(g, f)]
        for g in mor for f in mor
        if canonical.cat.mor[f][1] == canonical.cat.mor[g][0]
    }
    cat = FinCat(objects, mor, identity, comp)
    incl = Functor(cat, canonical.cat, {o: o for o in objects},
                   {m: m for m in mor})
    return cat, incl


def overcat_exponential_iso(gamma, R, X, n, budget=ss.DEFAULT_BUDGET):
    """Explicit isomorphism between the level-n overcategory of a canonical
    resolution functor and the plain overcategory under X^Delta[n].

    Returns (fwd, bwd, slice_cat, exp_overcat): mutually inverse functors.
    Requires R to be the canonical resolution functor of gamma.
    """
    C = gamma.shape
    N = gamma.N
    gamma_n = R.component_diagram(n)
    slice_oc = overcategory(gamma_n, X, budget=budget)
    dn = ss.standard_simplex(n, N)
    exp, exp_maps = ss.exponential(X, dn, N, budget=budget)
    exp_oc = overcategory(gamma, exp, budget=budget)

    # the unit iso X ~ X^{Delta[0]}: x goes to the map (pt, sig) |-> x.sig
    eta = None
    if n == 0:
        deltas = [ss.standard_simplex(q, N) for q in range(N + 1)]
        prods = [ss.product(dn, deltas[q]) for q in range(N + 1)]
        eta_levels = []
        for q in range(N + 1):
            tab = {}
            for x in X.levels[q]:
                lv = [
                    {(k, sig): X.act(q, x, sig)
                     for (k, sig) in prods[q].levels[r]}
                    for r in range(N + 1)
                ]
                tab[x] = SimplicialMap(prods[q], X, lv, check=False).key()
            eta_levels.append(tab)
        eta = SimplicialMap(X, exp, eta_levels)

    def transpose_obj(c, f):
        if n == 0:
            return eta.compose(f)
        # f: A x Delta[n] -> X; product here is (A, dn) in this order
        return ss.transpose(f, gamma.obj[c], dn, exp, exp_maps)

    ob_fwd = {}
    for (c, fk) in slice_oc.cat.objects:
        g = transpose_obj(c, slice_oc.maps[(c, fk)])
        ob_fwd[(c, fk)] = (c, g.key())
    mo_fwd = {
        (src, dst, u): (ob_fwd[src], ob_fwd[dst], u)
        for (src, dst, u) in slice_oc.cat.mor
    }
    fwd = Functor(slice_oc.cat, exp_oc.cat, ob_fwd, mo_fwd)

    ob_bwd = {}
    for (c, gk) in exp_oc.cat.objects:
        g = exp_oc.maps[(c, gk)]
        if n == 0:
            A = gamma.obj[c]
            f_levels = [
                {a: exp_maps[q][g(q, a)](q, ((0,) * (q + 1),
                                             tuple(range(q + 1))))
                 for a in A.levels[q]}
                for q in range(N + 1)
            ]
            f = SimplicialMap(A, X, f_levels, check=False)
        else:
            f = ss.untranspose(g, gamma.obj[c], dn, exp, exp_maps)
        ob_bwd[(c, gk)] = (c, f.key())
    mo_bwd = {
        (src, dst, u): (ob_bwd[src], ob_bwd[dst], u)
        for (src, dst, u) in exp_oc.cat.mor
    }
    bwd = Functor(exp_oc.cat, slice_oc.cat, ob_bwd, mo_bwd)
    return fwd, bwd, slice_oc, exp_oc


# ---------------------------------------------------------------------------
# sing and yoneda
# ---------------------------------------------------------------------------


def sing(R, X, budget=ss.DEFAULT_BUDGET):
    """The presheaf c |-> (n |-> maps res[c]^n -> X), as a Diagram over the
    opposite shape; simplicial operators act by precomposition with the
    resolution structure maps."""
    gamma = R.gamma
    C = gamma.shape
    N = gamma.N
    per = {}
    values = {}
    for c in C.objects:
        fs_by_level = [
            ss.enumerate_maps(R.res[c].component(n), X, budget=budget)
            for n in range(N + 1)
        ]
        per[c] = [{f.key(): f for f in fs} for fs in fs_by_level]
        levels = [[f.key() for f in fs] for fs in fs_by_level]
        faces = {
            (q, i): {
                f.key(): f.compose(R.res[c].coface(q, i)).key()
                for f in fs_by_level[q]
            }
            for q in range(1, N + 1)
            for i in range(q + 1)
        }
        degens = {
            (q, i): {
                f.key(): f.compose(R.res[c].codegen(q, i)).key()
                for f in fs_by_level[q]
            }
            for q in range(N)
            for i in range(q + 1)
        }
        values[c] = SimplicialSet.from_tables(N, levels, faces, degens,
                                              lossy=X.lossy)
    Cop = fc.opposite(C)
    mor = {}
    for u in C.mor:
        # contravariant: u: c -> c' gives values[c'] -> values[c]
        c, cp = C.src(u), C.dst(u)
        lift = R.maps[u]
        levels = [
            {
                fk: per[cp][q][fk].compose(lift.component(q)).key()
                for fk in values[cp].levels[q]
            }
            for q in range(N + 1)
        ]
        mor[u] = SimplicialMap(values[cp], values[c], levels, check=False)
    return Diagram(Cop, values, mor)


def discrete_sset(elements, N):
    """The constant simplicial set on a finite set of hashable ids."""
    elements = list(elements)
    levels = [list(elements) for _ in range(N + 1)]
    faces = {
        (n, i): {e: e for e in elements}
        for n in range(1, N + 1) for i in range(n + 1)
    }
    degens = {
        (n, i): {e: e for e in elements}
        for n in range(N) for i in range(n + 1)
    }
    return SimplicialSet.from_tables(N, levels, faces, degens, check=False)


def yoneda_presheaf(C, c, N):
    """The representable presheaf of c as a Diagram over C^op with discrete
    values hom(-, c)."""
    Cop = fc.opposite(C)
    values = {a: discrete_sset(C.hom(a, c), N) for a in C.objects}
    mor = {}
    for u in C.mor:
        a, b = C.src(u), C.dst(u)
        # precompose with u: hom(b, c) -> hom(a, c)
        levels = [
            {f: C.compose(f, u) for f in values[b].levels[q]}
            for q in range(N + 1)
        ]
        mor[u] = SimplicialMap(values[b], values[a], levels, check=False)
    return Diagram(Cop, values, mor)


# ---------------------------------------------------------------------------
# Simplicial replacement
# ---------------------------------------------------------------------------


def srep(D):
    """The simplicial replacement of a diagram, as a bisimplicial set.

    Horizontal p-simplices are pairs (chain, x) with chain a composable
    p-chain c_0 -> ... -> c_p of the shape and x a simplex of D(c_0); the
    0th horizontal face pushes x forward along the first arrow, the others
    act on the chain alone.
    """
    C = D.shape
    N = D.N
    chain_lists = [fc.chains(C, p) for p in range(N + 1)]
    levels = {
        (p, q): [(ch, x) for ch in chain_lists[p]
                 for x in D.obj[fc.chain_head(C, p, ch)].levels[q]]
        for p in range(N + 1)
        for q in range(N + 1)
    }
    h_faces = {}
    h_degens = {}
    for p in range(1, N + 1):
        for q in range(N + 1):
            for i in range(p + 1):
                tab = {}
                for (ch, x) in levels[(p, q)]:
                    ch2 = fc.chain_face(C, p, i, ch)
                    if i == 0:
                        tab[(ch, x)] = (ch2, D.mor[ch[0]](q, x))
                    else:
                        tab[(ch, x)] = (ch2, x)
                h_faces[(p, q, i)] = tab
    for p in range(N):
        for q in range(N + 1):
            for i in range(p + 1):
                h_degens[(p, q, i)] = {
                    (ch, x): (fc.chain_degen(C, p, i, ch), x)
                    for (ch, x) in levels[(p, q)]
                }
    v_faces = {
        (p, q, i): {
            (ch, x): (ch, D.obj[fc.chain_head(C, p, ch)].face(q, i, x))
            for (ch, x) in levels[(p, q)]
        }
        for p in range(N + 1)
        for q in range(1, N + 1)
        for i in range(q + 1)
    }
    v_degens = {
        (p, q, i): {
            (ch, x): (ch, D.obj[fc.chain_head(C, p, ch)].degen(q, i, x))
            for (ch, x) in levels[(p, q)]
        }
        for p in range(N + 1)
        for q in range(N)
        for i in range(q + 1)
    }
    lossy = any(X.lossy for X in D.obj.values())
    return ss.BisimplicialSet(N, levels, h_faces, h_degens, v_faces, v_degens,
                              lossy=lossy)


def srep_diagram_map(D1, D2, h, B1, B2):
    """The map of srep diagonals induced by an objectwise diagram map h."""
    X1, X2 = ss.diagonal(B1), ss.diagonal(B2)
    C = D1.shape
    levels = [
        {
            (ch, x): (ch, h.component(fc.chain_head(C, n, ch))(n, x))
            for (ch, x) in X1.levels[n]
        }
        for n in range(D1.N + 1)
    ]
    return SimplicialMap(X1, X2, levels)


def srep_functor_map(g, D, Bsrc, Bdst):
    """The map of srep diagonals induced by a shape functor g: J -> I,
    from the replacement of g^*D to that of D."""
    X1, X2 = ss.diagonal(Bsrc), ss.diagonal(Bdst)
    J = g.source
    levels = []
    for n in range(D.N + 1):
        tab = {}
        for (ch, x) in X1.levels[n]:
            if n == 0:
                ch2 = g.ob[ch]
            else:
                ch2 = tuple(g.mo[f] for f in ch)
            tab[(ch, x)] = (ch2, x)
        levels.append(tab)
    return SimplicialMap(X1, X2, levels)


# ---------------------------------------------------------------------------
# Realization of a presheaf against a resolution functor
# ---------------------------------------------------------------------------


def realize(R, F):
    """The coend of a presheaf F (a Diagram over the opposite shape) against
    a resolution functor R: the coequalizer of

        + over u: c -> c' of  res[c] (x)_Delta F(c')
            =>  + over c of  res[c] (x)_Delta F(c)

    where one map pushes along F(u) (on the presheaf side) and the other
    along R(u) (on the resolution side)."""
    C = R.shape
    N = R.gamma.N
    tds = {c: cz.tensor_delta(R.res[c], F.obj[c]) for c in C.objects}
    pieces = [(c, tds[c].sset) for c in C.objects]
    T, incl = ss.coproduct(pieces)
    epieces = []
    f_levels = [dict() for _ in range(N + 1)]
    g_levels = [dict() for _ in range(N + 1)]
    for u in C.mor:
        c, cp = C.src(u), C.dst(u)
        td_u = cz.tensor_delta(R.res[c], F.obj[cp])
        via_F = cz.tensor_delta_map_on_K(td_u, tds[c], F.mor[u])
        via_R = cz.tensor_delta_map_on_A(td_u, tds[cp], R.maps[u])
        lab = u
        epieces.append((lab, td_u.sset))
        for q in range(N + 1):
            for z in td_u.sset.levels[q]:
                f_levels[q][(lab, z)] = (c, via_F(q, z))
                g_levels[q][(lab, z)] = (cp, via_R(q, z))
    E, _ = ss.coproduct(epieces) if epieces else (ss.empty(N), {})
    f = SimplicialMap(E, T, f_levels, check=False)
    g = SimplicialMap(E, T, g_levels, check=False)
    return ss.coequalizer(f, g), tds, incl

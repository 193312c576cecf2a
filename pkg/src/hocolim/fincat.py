"""Finite categories with explicit composition tables.

Categories are given by finite id sets for objects and morphisms plus a total
composition table on composable pairs; every constructor runs the exhaustive
associativity/unit checks.  Functors and natural transformations are checked
the same way.
"""

from __future__ import annotations

import itertools

from . import sset
from .errors import BudgetExceeded, ValidationError
from .sset import SimplicialSet


class FinCat:
    """A finite category: objects, morphisms with src/dst, identities,
    composition table."""

    __slots__ = ("objects", "mor", "identity", "comp")

    def __init__(self, objects, mor, identity, comp, check=True):
        self.objects = tuple(objects)
        self.mor = dict(mor)          # morphism id -> (src, dst)
        self.identity = dict(identity)  # object id -> morphism id
        self.comp = dict(comp)        # (g, f) -> g o f, for dst(f) == src(g)
        if check:
            self._validate()

    def src(self, f):
        return self.mor[f][0]

    def dst(self, f):
        return self.mor[f][1]

    def morphisms(self):
        return list(self.mor)

    def hom(self, a, b):
        return [f for f, (s, d) in self.mor.items() if s == a and d == b]

    def compose(self, g, f):
        """g o f (f applied first)."""
        return self.comp[(g, f)]

    def _validate(self):
        for f, (s, d) in self.mor.items():
            if s not in self.objects or d not in self.objects:
                raise ValidationError(f"morphism {f!r} has unknown endpoints")
        for o in self.objects:
            i = self.identity.get(o)
            if i is None or self.mor.get(i) != (o, o):
                raise ValidationError(f"bad identity for object {o!r}")
        by_src = {}
        for f, (s, _) in self.mor.items():
            by_src.setdefault(s, []).append(f)
        for f in self.mor:
            for g in by_src.get(self.dst(f), []):
                h = self.comp.get((g, f))
                if h is None:
                    raise ValidationError(
                        f"composition undefined for {g!r} o {f!r}"
                    )
                if self.mor[h] != (self.src(f), self.dst(g)):
                    raise ValidationError(f"composite {h!r} has wrong endpoints")
        for (g, f) in self.comp:
            if self.dst(f) != self.src(g):
                raise ValidationError(
                    f"composition defined for non-composable {g!r} o {f!r}"
                )
        for f in self.mor:
            if self.compose(f, self.identity[self.src(f)]) != f:
                raise ValidationError(f"right unit fails for {f!r}")
            if self.compose(self.identity[self.dst(f)], f) != f:
                raise ValidationError(f"left unit fails for {f!r}")
        for f in self.mor:
            for g in by_src.get(self.dst(f), []):
                gf = self.compose(g, f)
                for h in by_src.get(self.dst(g), []):
                    if self.compose(self.compose(h, g), f) != \
                       self.compose(h, gf):
                        raise ValidationError(
                            f"associativity fails on ({h!r}, {g!r}, {f!r})"
                        )

    def __repr__(self):
        return f"<FinCat {len(self.objects)} objects, {len(self.mor)} morphisms>"


class Functor:
    """A functor between finite categories, checked exhaustively."""

    __slots__ = ("source", "target", "ob", "mo")

    def __init__(self, source, target, ob, mo, check=True):
        self.source = source
        self.target = target
        self.ob = dict(ob)
        self.mo = dict(mo)
        if check:
            self._validate()

    def _validate(self):
        C, D = self.source, self.target
        for o in C.objects:
            if self.ob.get(o) not in D.objects:
                raise ValidationError(f"object map undefined/invalid on {o!r}")
        for f in C.mor:
            g = self.mo.get(f)
            if g not in D.mor:
                raise ValidationError(f"morphism map undefined/invalid on {f!r}")
            if D.mor[g] != (self.ob[C.src(f)], self.ob[C.dst(f)]):
                raise ValidationError(f"functor breaks src/dst on {f!r}")
        for o in C.objects:
            if self.mo[C.identity[o]] != D.identity[self.ob[o]]:
                raise ValidationError(f"functor breaks identity at {o!r}")
        by_src = {}
        for f, (s, _) in C.mor.items():
            by_src.setdefault(s, []).append(f)
        for f in C.mor:
            for g in by_src.get(C.dst(f), []):
                if self.mo[C.compose(g, f)] != D.compose(self.mo[g], self.mo[f]):
                    raise ValidationError(
                        f"functor breaks composition on ({g!r}, {f!r})"
                    )

    @classmethod
    def identity_functor(cls, C):
        return cls(C, C, {o: o for o in C.objects}, {f: f for f in C.mor},
                   check=False)

    def compose(self, other):
        """self o other."""
        if other.target is not self.source:
            raise ValidationError("functor composition mismatch")
        return Functor(
            other.source, self.target,
            {o: self.ob[other.ob[o]] for o in other.source.objects},
            {f: self.mo[other.mo[f]] for f in other.source.mor},
            check=False,
        )

    def __repr__(self):
        return f"<Functor {self.source!r} -> {self.target!r}>"


class NatTrans:
    """A natural transformation between parallel functors."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source, target, components, check=True):
        self.source = source
        self.target = target
        self.components = dict(components)
        if check:
            self._validate()

    def _validate(self):
        F, G = self.source, self.target
        if F.source is not G.source or F.target is not G.target:
            raise ValidationError("natural transformation between non-parallel functors")
        C, D = F.source, F.target
        for o in C.objects:
            m = self.components.get(o)
            if m not in D.mor or D.mor[m] != (F.ob[o], G.ob[o]):
                raise ValidationError(f"bad component at {o!r}")
        for f in C.mor:
            a, b = C.src(f), C.dst(f)
            left = D.compose(self.components[b], F.mo[f])
            right = D.compose(G.mo[f], self.components[a])
            if left != right:
                raise ValidationError(f"naturality square fails on {f!r}")


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def terminal_category():
    return FinCat(("*",), {"id": ("*", "*")}, {"*": "id"},
                  {("id", "id"): "id"})


def opposite(C):
    """Same objects, morphisms with src/dst swapped, composition reversed."""
    mor = {f: (d, s) for f, (s, d) in C.mor.items()}
    comp = {(f, g): h for (g, f), h in C.comp.items()}
    return FinCat(C.objects, mor, C.identity, comp)


def undercategory(I, i):
    """The category (i | I) of pairs (j, phi: i -> j), with the projection
    functor to I."""
    if i not in I.objects:
        raise ValidationError(f"unknown object {i!r}")
    objects = [(I.dst(phi), phi) for phi in I.mor if I.src(phi) == i]
    obset = set(objects)
    mor = {}
    identity = {}
    for (j, phi) in objects:
        for psi in I.mor:
            if I.src(psi) != j:
                continue
            tgt = (I.dst(psi), I.compose(psi, phi))
            if tgt in obset:
                mor[((j, phi), tgt, psi)] = ((j, phi), tgt)
    for o in objects:
        identity[o] = (o, o, I.identity[o[0]])
    comp = {}
    for g, (gs, gd) in mor.items():
        for f, (fs, fd) in mor.items():
            if fd == gs:
                comp[(g, f)] = (fs, gd, I.compose(g[2], f[2]))
    cat = FinCat(objects, mor, identity, comp)
    proj = Functor(cat, I, {o: o[0] for o in objects},
                   {m: m[2] for m in mor})
    return cat, proj


def chains(C, n):
    """Composable chains c_0 -> c_1 -> ... -> c_n, as tuples of morphism ids.

    A 0-chain is an object id.
    """
    if n == 0:
        return list(C.objects)
    out = []

    def rec(prefix, tail_obj):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for f in C.mor:
            if C.src(f) == tail_obj:
                prefix.append(f)
                rec(prefix, C.dst(f))
                prefix.pop()

    for o in C.objects:
        rec([], o)
    return out


def chain_head(C, n, ch):
    """The object c_0 of a chain."""
    if n == 0:
        return ch
    return C.src(ch[0])


def chain_face(C, n, i, ch):
    """Nerve face d_i: omit the i-th object of the chain."""
    if n == 1:
        return C.dst(ch[0]) if i == 0 else C.src(ch[0])
    if i == 0:
        return ch[1:]
    if i == n:
        return ch[:-1]
    return ch[:i - 1] + (C.compose(ch[i], ch[i - 1]),) + ch[i + 1:]


def chain_degen(C, n, i, ch):
    """Nerve degeneracy s_i: insert an identity at the i-th object."""
    if n == 0:
        return (C.identity[ch],)
    objs = [C.src(ch[0])] + [C.dst(f) for f in ch]
    return ch[:i] + (C.identity[objs[i]],) + ch[i:]


def nerve(C, N):
    """The nerve (classifying space) of C, truncated at N."""
    levels = [chains(C, n) for n in range(N + 1)]
    faces = {
        (n, i): {ch: chain_face(C, n, i, ch) for ch in levels[n]}
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    degens = {
        (n, i): {ch: chain_degen(C, n, i, ch) for ch in levels[n]}
        for n in range(N)
        for i in range(n + 1)
    }
    lossy = bool(levels[N]) and any(
        not _chain_has_identity(C, ch) for ch in levels[N]
    ) if N >= 1 else False
    return SimplicialSet.from_tables(N, levels, faces, degens, lossy=lossy)


def _chain_has_identity(C, ch):
    return any(f == C.identity[C.src(f)] for f in ch)


def delta_category(N):
    """The truncated simplex category Delta_{<=N}.

    Objects are the integers 0..N (standing for [n]); morphisms are monotone
    value tuples tagged with their endpoints.
    """
    objects = list(range(N + 1))
    mor = {}
    for m in range(N + 1):
        for n in range(N + 1):
            for phi in sset.monotone_maps(m, n):
                mor[(m, n, phi)] = (m, n)
    identity = {n: (n, n, tuple(range(n + 1))) for n in objects}
    comp = {}
    for g, (gs, gd) in mor.items():
        for f, (fs, fd) in mor.items():
            if fd == gs:
                comp[(g, f)] = (fs, gd, tuple(g[2][v] for v in f[2]))
    return FinCat(objects, mor, identity, comp)


def product_with_delta(C, N):
    """The product category C x Delta_{<=N}."""
    return product_category(C, delta_category(N))


def product_category(C, D):
    objects = [(c, d) for c in C.objects for d in D.objects]
    mor = {}
    for f, (fs, fd) in C.mor.items():
        for g, (gs, gd) in D.mor.items():
            mor[(f, g)] = ((fs, gs), (fd, gd))
    identity = {(c, d): (C.identity[c], D.identity[d]) for (c, d) in objects}
    comp = {}
    for (f2, g2), (s2, d2) in mor.items():
        for (f1, g1), (s1, d1) in mor.items():
            if d1 == s2:
                comp[((f2, g2), (f1, g1))] = (
                    C.compose(f2, f1), D.compose(g2, g1)
                )
    return FinCat(objects, mor, identity, comp)


def isomorphic_categories(C, D, budget=sset.DEFAULT_BUDGET):
    """Bijection search for an isomorphism of categories.

    Small instances only (declared search budget); used by test fixtures.
    """
    if len(C.objects) != len(D.objects) or len(C.mor) != len(D.mor):
        return False
    if len(C.objects) > 12:
        raise ValidationError("isomorphism search limited to <= 12 objects")
    visited = 0
    for perm in itertools.permutations(D.objects):
        ob = dict(zip(C.objects, perm))
        # morphism matching per hom-set, backtracking
        homsC = {}
        for f, (s, d) in C.mor.items():
            homsC.setdefault((s, d), []).append(f)
        ok = True
        mo = {}
        for (s, d), fs in homsC.items():
            gs = D.hom(ob[s], ob[d])
            if len(gs) != len(fs):
                ok = False
                break
        if not ok:
            continue

        def match(pairs, mo):
            nonlocal visited
            if not pairs:
                # verify functoriality
                try:
                    Functor(C, D, ob, mo)
                    return dict(mo)
                except ValidationError:
                    return None
            (s, d), fs = pairs[0]
            for assign in itertools.permutations(D.hom(ob[s], ob[d])):
                visited += 1
                if visited > budget:
                    raise BudgetExceeded(budget, "category isomorphism search")
                trial = dict(mo)
                trial.update(dict(zip(fs, assign)))
                res = match(pairs[1:], trial)
                if res is not None:
                    return res
            return None

        if match(list(homsC.items()), {}) is not None:
            return True
    return False

"""Finite, dimension-truncated simplicial sets.

A simplicial set is stored with *all* simplices up to the truncation bound N,
degenerate ones included.  Every simplex carries its Eilenberg-Zilber tag
(canonical degeneracy word + nondegenerate base), which makes products,
diagonals and map enumeration levelwise and makes normalized chains easy to
read off.

Degeneracy words are kept in "apply order": the word (j_0 < j_1 < ... < j_k)
means s_{j_k}( ... s_{j_1}( s_{j_0}(base) ) ... ).  Strictly increasing words
of this shape are the unique normal form of an iterated degeneracy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, TruncationMismatch, ValidationError

DEFAULT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class DegId:
    """Identifier for a regenerated degenerate simplex: word applied to base."""

    word: tuple
    base: object

    def __hash__(self):
        # ids sit in every face/degeneracy table, so hashing is hot; cache it
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.word, self.base))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        ops = "".join(f"s{j}" for j in self.word)
        return f"{ops}({self.base!r})"


def insert_degeneracy(word, i):
    """Normal form of applying s_i after the (already normal) word."""
    out = list(word)
    pos = len(out)
    while pos > 0 and out[pos - 1] >= i:
        out[pos - 1] += 1
        pos -= 1
    out.insert(pos, i)
    return tuple(out)


def degeneracy_words(m, n):
    """All normal-form degeneracy words taking dimension m to dimension n.

    Yielded in lexicographic order.
    """
    k = n - m
    if k < 0:
        return
    if k == 0:
        yield ()
        return
    # word[t] <= m + t keeps every intermediate application in range
    ranges = [range(0, m + t + 1) for t in range(k)]

    def rec(prefix, t):
        if t == k:
            yield tuple(prefix)
            return
        lo = prefix[-1] + 1 if prefix else 0
        for j in range(lo, m + t + 1):
            prefix.append(j)
            yield from rec(prefix, t + 1)
            prefix.pop()

    yield from rec([], 0)


def monotone_maps(m, n):
    """All monotone maps [m] -> [n] as value tuples, lexicographic order."""
    return [
        tuple(v)
        for v in itertools.combinations_with_replacement(range(n + 1), m + 1)
    ]


class SimplicialSet:
    """A dimension-truncated simplicial set with explicit tables.

    Attributes
    ----------
    N : truncation bound; levels 0..N are stored.
    levels : tuple of tuples of simplex ids.
    lossy : True when the construction may have lost nondegenerate simplices
        above the truncation bound.
    """

    __slots__ = ("N", "levels", "_faces", "_degens", "ez", "lossy", "_pos")

    def __init__(self, N, levels, faces, degens, ez, lossy=False):
        self.N = N
        self.levels = tuple(tuple(l) for l in levels)
        self._faces = faces
        self._degens = degens
        self.ez = ez
        self.lossy = lossy
        self._pos = {
            (n, x): i for n in range(N + 1) for i, x in enumerate(self.levels[n])
        }

    # -- basic access ---------------------------------------------------

    def level(self, n):
        return self.levels[n]

    def size(self, n):
        return len(self.levels[n])

    def face(self, n, i, x):
        return self._faces[(n, i)][x]

    def degen(self, n, i, x):
        return self._degens[(n, i)][x]

    def has(self, n, x):
        return (n, x) in self._pos

    def position(self, n, x):
        return self._pos[(n, x)]

    def nondegenerate(self, n):
        return [x for x in self.levels[n] if not self.ez[(n, x)][0]]

    def nondegenerate_count(self):
        return sum(len(self.nondegenerate(n)) for n in range(self.N + 1))

    def is_degenerate(self, n, x):
        return bool(self.ez[(n, x)][0])

    def apply_word(self, word, m, x):
        """Apply a degeneracy word (normal form or not) to an m-simplex."""
        for j in word:
            x = self.degen(m, j, x)
            m += 1
        return x

    def act(self, n, x, phi):
        """Contravariant action of a monotone map phi: [m] -> [n] on x in X_n."""
        m = len(phi) - 1
        img = set(phi)
        missing = [v for v in range(n + 1) if v not in img]
        if missing:
            i = missing[-1]
            phi2 = tuple(v if v < i else v - 1 for v in phi)
            return self.act(n - 1, self.face(n, i, x), phi2)
        for j in range(m):
            if phi[j] == phi[j + 1]:
                phi2 = phi[:j] + phi[j + 1:]
                return self.degen(m - 1, j, self.act(n, x, phi2))
        return x

    # -- comparison -----------------------------------------------------

    def equals(self, other):
        """Structural equality of presentations (same ids, same tables)."""
        if self is other:
            return True
        return (
            self.N == other.N
            and self.levels == other.levels
            and self._faces == other._faces
            and self._degens == other._degens
        )

    def __repr__(self):
        sizes = ",".join(str(self.size(n)) for n in range(self.N + 1))
        return f"<SimplicialSet N={self.N} sizes=({sizes})>"

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_tables(cls, N, levels, faces, degens, lossy=False, check=True):
        """Build from complete levels and face/degeneracy tables.

        Validates the simplicial identities exhaustively and computes the
        Eilenberg-Zilber tag of every simplex.
        """
        levels = [tuple(l) for l in levels]
        if len(levels) != N + 1:
            raise ValidationError(f"expected {N + 1} levels, got {len(levels)}")
        obj = cls(N, levels, faces, degens, {}, lossy=lossy)
        if check:
            obj._check_totality()
            obj._check_identities()
        obj._compute_ez()
        return obj

    @classmethod
    def from_nondegenerate(cls, N, nondeg, face_fn, lossy=False, check=True):
        """Build from nondegenerate simplices only.

        ``nondeg[n]`` lists the nondegenerate n-simplex ids; ``face_fn(n, i, x)``
        returns the i-th face of a nondegenerate n-simplex as a pair
        ``(word, base)`` in normal form (word ``()`` if the face is itself
        nondegenerate).  Degenerate simplices are regenerated deterministically
        as :class:`DegId` values, grouped by base dimension and ordered by
        degeneracy word lexicographically.
        """
        nondeg = [list(nondeg[n]) if n < len(nondeg) else [] for n in range(N + 1)]
        levels = []
        for n in range(N + 1):
            entries = list(nondeg[n])
            for m in range(n):
                for w in degeneracy_words(m, n):
                    for b in nondeg[m]:
                        entries.append(DegId(w, b))
            levels.append(tuple(entries))

        def as_id(word, base):
            return DegId(word, base) if word else base

        def face_pair(n, i, x):
            """Face of any simplex, returned as a normal-form (word, base)."""
            if isinstance(x, DegId):
                word, base = x.word, x.base
            else:
                word, base = (), x
            return _face_of_tagged(word, n, base, i, face_fn)

        faces = {}
        degens = {}
        for n in range(1, N + 1):
            for i in range(n + 1):
                faces[(n, i)] = {
                    x: as_id(*face_pair(n, i, x)) for x in levels[n]
                }
        for n in range(N):
            for i in range(n + 1):
                tab = {}
                for x in levels[n]:
                    if isinstance(x, DegId):
                        tab[x] = DegId(insert_degeneracy(x.word, i), x.base)
                    else:
                        tab[x] = DegId((i,), x)
                degens[(n, i)] = tab
        return cls.from_tables(N, levels, faces, degens, lossy=lossy, check=check)

    # -- internal validation --------------------------------------------

    def _check_totality(self):
        for n in range(1, self.N + 1):
            for i in range(n + 1):
                tab = self._faces.get((n, i))
                if tab is None:
                    raise ValidationError(f"missing face table d_{i} at level {n}")
                for x in self.levels[n]:
                    if x not in tab:
                        raise ValidationError(f"d_{i} undefined on {x!r} (level {n})")
                    if not self.has(n - 1, tab[x]):
                        raise ValidationError(
                            f"d_{i}({x!r}) not a level-{n - 1} simplex"
                        )
        for n in range(self.N):
            for i in range(n + 1):
                tab = self._degens.get((n, i))
                if tab is None:
                    raise ValidationError(f"missing degeneracy table s_{i} at level {n}")
                for x in self.levels[n]:
                    if x not in tab:
                        raise ValidationError(f"s_{i} undefined on {x!r} (level {n})")
                    if not self.has(n + 1, tab[x]):
                        raise ValidationError(
                            f"s_{i}({x!r}) not a level-{n + 1} simplex"
                        )

    def _check_identities(self):
        N = self.N
        for n in range(2, N + 1):
            for j in range(n + 1):
                for i in range(j):
                    for x in self.levels[n]:
                        a = self.face(n - 1, i, self.face(n, j, x))
                        b = self.face(n - 1, j - 1, self.face(n, i, x))
                        if a != b:
                            raise ValidationError(
                                f"d_{i} d_{j} != d_{j - 1} d_{i} at level {n} on {x!r}"
                            )
        for n in range(N - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    for x in self.levels[n]:
                        a = self.degen(n + 1, i, self.degen(n, j, x))
                        b = self.degen(n + 1, j + 1, self.degen(n, i, x))
                        if a != b:
                            raise ValidationError(
                                f"s_{i} s_{j} != s_{j + 1} s_{i} at level {n} on {x!r}"
                            )
        for n in range(N):
            for j in range(n + 1):
                for i in range(n + 2):
                    for x in self.levels[n]:
                        sx = self.degen(n, j, x)
                        got = self.face(n + 1, i, sx)
                        if i < j:
                            want = self.degen(n - 1, j - 1, self.face(n, i, x))
                        elif i in (j, j + 1):
                            want = x
                        else:
                            want = self.degen(n - 1, j, self.face(n, i - 1, x))
                        if got != want:
                            raise ValidationError(
                                f"d_{i} s_{j} identity fails at level {n} on {x!r}"
                            )

    def _compute_ez(self):
        ez = self.ez
        for x in self.levels[0]:
            ez[(0, x)] = ((), x)
        for n in range(1, self.N + 1):
            for x in self.levels[n]:
                tag = None
                for i in range(n):
                    z = self.face(n, i, x)
                    if self.degen(n - 1, i, z) == x:
                        wz, bz = ez[(n - 1, z)]
                        tag = (insert_degeneracy(wz, i), bz)
                        break
                if tag is None:
                    tag = ((), x)
                ez[(n, x)] = tag


def _face_of_tagged(word, n, base, i, face_fn):
    """Face d_i of s_word(base) in normal form, with faces of nondegenerate
    simplices supplied by face_fn."""
    if not word:
        return face_fn(n, i, base)
    j = word[-1]
    inner = word[:-1]
    if i == j or i == j + 1:
        return (inner, base)
    if i < j:
        w, b = _face_of_tagged(inner, n - 1, base, i, face_fn)
        return (insert_degeneracy(w, j - 1), b)
    w, b = _face_of_tagged(inner, n - 1, base, i - 1, face_fn)
    return (insert_degeneracy(w, j), b)


# ---------------------------------------------------------------------------
# Simplicial maps
# ---------------------------------------------------------------------------


class SimplicialMap:
    """A levelwise function commuting with faces and degeneracies."""

    __slots__ = ("source", "target", "levels")

    def __init__(self, source, target, levels, check=True):
        if source.N != target.N:
            raise TruncationMismatch("map between different truncations")
        self.source = source
        self.target = target
        self.levels = tuple(dict(l) for l in levels)
        if check:
            self._validate()

    def __call__(self, n, x):
        return self.levels[n][x]

    def _validate(self):
        X, Y = self.source, self.target
        for n in range(X.N + 1):
            for x in X.levels[n]:
                if x not in self.levels[n]:
                    raise ValidationError(f"map undefined on {x!r} at level {n}")
                if not Y.has(n, self.levels[n][x]):
                    raise ValidationError(
                        f"image of {x!r} is not a level-{n} simplex of the target"
                    )
        for n in range(1, X.N + 1):
            for i in range(n + 1):
                for x in X.levels[n]:
                    if self(n - 1, X.face(n, i, x)) != Y.face(n, i, self(n, x)):
                        raise ValidationError(
                            f"map does not commute with d_{i} at level {n} on {x!r}"
                        )
        for n in range(X.N):
            for i in range(n + 1):
                for x in X.levels[n]:
                    if self(n + 1, X.degen(n, i, x)) != Y.degen(n, i, self(n, x)):
                        raise ValidationError(
                            f"map does not commute with s_{i} at level {n} on {x!r}"
                        )

    def key(self):
        """Canonical hashable representation (images in source level order)."""
        return tuple(
            tuple(self.levels[n][x] for x in self.source.levels[n])
            for n in range(self.source.N + 1)
        )

    def equals(self, other):
        return (
            self.source.equals(other.source)
            and self.target.equals(other.target)
            and self.key() == other.key()
        )

    def __repr__(self):
        return f"<SimplicialMap {self.source!r} -> {self.target!r}>"

    @classmethod
    def identity(cls, X):
        return cls(X, X, [{x: x for x in X.levels[n]} for n in range(X.N + 1)],
                   check=False)

    def compose(self, other):
        """self o other (other applied first)."""
        if not other.target.equals(self.source):
            raise ValidationError("composition of non-composable simplicial maps")
        levels = [
            {x: self.levels[n][other.levels[n][x]] for x in other.source.levels[n]}
            for n in range(self.source.N + 1)
        ]
        return SimplicialMap(other.source, self.target, levels, check=False)

    @classmethod
    def from_nondegenerate_images(cls, X, Y, images, check=True):
        """Extend an assignment on nondegenerate simplices to all simplices."""
        levels = []
        for n in range(X.N + 1):
            tab = {}
            for x in X.levels[n]:
                word, base = X.ez[(n, x)]
                m = n - len(word)
                tab[x] = Y.apply_word(word, m, images[(m, base)])
            levels.append(tab)
        return cls(X, Y, levels, check=check)


# ---------------------------------------------------------------------------
# Standard models
# ---------------------------------------------------------------------------


def standard_simplex(n, N):
    """Delta[n] truncated at N; k-simplices are monotone maps [k] -> [n]."""
    if n < 0 or N < 0:
        raise ValidationError("standard_simplex requires n >= 0 and N >= 0")
    levels = [monotone_maps(k, n) for k in range(N + 1)]
    faces = {}
    degens = {}
    for k in range(1, N + 1):
        for i in range(k + 1):
            faces[(k, i)] = {x: x[:i] + x[i + 1:] for x in levels[k]}
    for k in range(N):
        for i in range(k + 1):
            degens[(k, i)] = {x: x[:i] + (x[i],) + x[i:] for x in levels[k]}
    return SimplicialSet.from_tables(N, levels, faces, degens)


def _subcomplex_of_simplex(n, N, keep):
    """Subcomplex of Delta[n] spanned by the monotone maps accepted by keep."""
    full = standard_simplex(n, N)
    levels = [tuple(x for x in full.levels[k] if keep(x)) for k in range(N + 1)]
    ok = {(k, x) for k in range(N + 1) for x in levels[k]}
    faces = {
        (k, i): {x: full.face(k, i, x) for x in levels[k]}
        for k in range(1, N + 1)
        for i in range(k + 1)
    }
    degens = {
        (k, i): {x: full.degen(k, i, x) for x in levels[k]}
        for k in range(N)
        for i in range(k + 1)
    }
    for (k, i), tab in faces.items():
        for x, y in tab.items():
            if (k - 1, y) not in ok:
                raise ValidationError("face leaves the subcomplex")
    return SimplicialSet.from_tables(N, levels, faces, degens)


def boundary(n, N):
    """The boundary of Delta[n]: simplices not surjective onto [n]."""
    if n < 0:
        raise ValidationError("boundary requires n >= 0")
    return _subcomplex_of_simplex(n, N, lambda x: len(set(x)) <= n)


def horn(n, k, N):
    """The horn Lambda[n, k]: boundary minus the k-th face."""
    if not (0 <= k <= n):
        raise ValidationError("horn requires 0 <= k <= n")

    def keep(x):
        img = set(x)
        # stay inside some face other than the one opposite vertex k
        return any(v not in img for v in range(n + 1) if v != k)

    return _subcomplex_of_simplex(n, N, keep)


def terminal(N):
    """The terminal simplicial set: one simplex in every level."""
    return standard_simplex(0, N)


def empty(N):
    """The empty simplicial set."""
    return SimplicialSet.from_tables(N, [[] for _ in range(N + 1)], {
        (n, i): {} for n in range(1, N + 1) for i in range(n + 1)
    }, {
        (n, i): {} for n in range(N) for i in range(n + 1)
    })


def simplex_map(phi, m, n, N):
    """The map Delta[m] -> Delta[n] induced by a monotone value tuple phi."""
    X = standard_simplex(m, N)
    Y = standard_simplex(n, N)
    levels = [
        {x: tuple(phi[v] for v in x) for x in X.levels[k]} for k in range(N + 1)
    ]
    return SimplicialMap(X, Y, levels)


# ---------------------------------------------------------------------------
# Limits and colimits of simplicial sets
# ---------------------------------------------------------------------------


def _same_truncation(ssets):
    Ns = {X.N for X in ssets}
    if len(Ns) > 1:
        raise TruncationMismatch(f"mixed truncations {sorted(Ns)}")


def product(X, Y):
    """Levelwise cartesian product with componentwise structure maps."""
    _same_truncation([X, Y])
    N = X.N
    levels = [
        [(x, y) for x in X.levels[n] for y in Y.levels[n]] for n in range(N + 1)
    ]
    faces = {
        (n, i): {
            (x, y): (X.face(n, i, x), Y.face(n, i, y))
            for (x, y) in levels[n]
        }
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    degens = {
        (n, i): {
            (x, y): (X.degen(n, i, x), Y.degen(n, i, y))
            for (x, y) in levels[n]
        }
        for n in range(N)
        for i in range(n + 1)
    }
    lossy = X.lossy or Y.lossy or _product_saturates(X, Y)
    return SimplicialSet.from_tables(N, levels, faces, degens, lossy=lossy)


def _product_saturates(X, Y):
    """True when nondegenerate shuffles above the truncation could exist."""
    N = X.N
    for p in range(N + 1):
        if not X.nondegenerate(p):
            continue
        for q in range(N + 1):
            if p + q > N and p > 0 and q > 0 and Y.nondegenerate(q):
                return True
    return False


def product_map(f, g):
    """The map product(f.source, g.source) -> product(f.target, g.target)."""
    src = product(f.source, g.source)
    dst = product(f.target, g.target)
    levels = [
        {(x, y): (f(n, x), g(n, y)) for (x, y) in src.levels[n]}
        for n in range(src.N + 1)
    ]
    return SimplicialMap(src, dst, levels, check=False)


def projection(P, which, X, Y):
    """Projection of a product built by :func:`product` onto one factor."""
    tgt = X if which == 0 else Y
    levels = [
        {p: p[which] for p in P.levels[n]} for n in range(P.N + 1)
    ]
    return SimplicialMap(P, tgt, levels, check=False)


def coproduct(pieces):
    """Disjoint union; ids become (label, id) pairs.

    ``pieces`` is a list of (label, SimplicialSet) with distinct labels.
    Returns (sset, inclusions) where inclusions maps label -> SimplicialMap.
    """
    labels = [lab for lab, _ in pieces]
    if len(set(labels)) != len(labels):
        raise ValidationError("coproduct labels must be distinct")
    _same_truncation([X for _, X in pieces]) if pieces else None
    N = pieces[0][1].N if pieces else 0
    levels = [
        [(lab, x) for lab, X in pieces for x in X.levels[n]]
        for n in range(N + 1)
    ]
    faces = {
        (n, i): {
            (lab, x): (lab, X.face(n, i, x))
            for lab, X in pieces
            for x in X.levels[n]
        }
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    degens = {
        (n, i): {
            (lab, x): (lab, X.degen(n, i, x))
            for lab, X in pieces
            for x in X.levels[n]
        }
        for n in range(N)
        for i in range(n + 1)
    }
    lossy = any(X.lossy for _, X in pieces)
    total = SimplicialSet.from_tables(N, levels, faces, degens, lossy=lossy,
                                      check=False)
    inclusions = {}
    for lab, X in pieces:
        incl_levels = [
            {x: (lab, x) for x in X.levels[n]} for n in range(N + 1)
        ]
        inclusions[lab] = SimplicialMap(X, total, incl_levels, check=False)
    return total, inclusions


def dot(W, S):
    """W . S: a coproduct of copies of W, one per element of S."""
    return coproduct([(s, W) for s in S])


def power_dot(W, S):
    """W^(. S): the levelwise S-indexed product of copies of W.

    Simplex ids are tuples of W-simplices in the order of S.  The empty
    product is the terminal simplicial set.
    """
    S = list(S)
    N = W.N
    levels = [
        [tuple(c) for c in itertools.product(W.levels[n], repeat=len(S))]
        for n in range(N + 1)
    ]
    faces = {
        (n, i): {
            c: tuple(W.face(n, i, x) for x in c) for c in levels[n]
        }
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    degens = {
        (n, i): {
            c: tuple(W.degen(n, i, x) for x in c) for c in levels[n]
        }
        for n in range(N)
        for i in range(n + 1)
    }
    return SimplicialSet.from_tables(N, levels, faces, degens, lossy=W.lossy)


class UnionFind:
    """Plain union-find over hashable keys."""

    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent
        if x not in p:
            p[x] = x
            return x
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass
class Coequalizer:
    """Result of :func:`coequalizer`: quotient object and projection map."""

    sset: SimplicialSet
    quotient_map: SimplicialMap

    def induce(self, h):
        """Factor a map h (defined on the coequalizer's target) through the
        quotient.  Raises ValidationError if h does not coequalize."""
        Z = self.quotient_map.source
        Q = self.sset
        levels = [dict() for _ in range(Q.N + 1)]
        for n in range(Q.N + 1):
            for x in Z.levels[n]:
                q = self.quotient_map(n, x)
                v = h(n, x)
                if levels[n].get(q, v) != v:
                    raise ValidationError(
                        "map does not descend to the quotient"
                    )
                levels[n][q] = v
        return SimplicialMap(Q, h.target, levels, check=False)


def coequalizer(f, g):
    """Coequalizer of two parallel simplicial maps.

    Quotients the common target by the simplicial congruence generated by
    f(x) ~ g(x), closed under faces and degeneracies.
    """
    if not (f.source.equals(g.source) and f.target.equals(g.target)):
        raise ValidationError("coequalizer requires parallel maps")
    Z = f.target
    N = Z.N
    uf = UnionFind()
    work = []
    for n in range(N + 1):
        for x in f.source.levels[n]:
            work.append((n, f(n, x), g(n, x)))
    while work:
        n, a, b = work.pop()
        if not uf.union((n, a), (n, b)):
            continue
        if n >= 1:
            for i in range(n + 1):
                work.append((n - 1, Z.face(n, i, a), Z.face(n, i, b)))
        if n < N:
            for i in range(n + 1):
                work.append((n + 1, Z.degen(n, i, a), Z.degen(n, i, b)))

    # canonical representative: first member of the class in level order
    rep = {}
    for n in range(N + 1):
        for x in Z.levels[n]:
            root = uf.find((n, x))
            if root not in rep:
                rep[root] = x
    cls_of = {
        (n, x): rep[uf.find((n, x))]
        for n in range(N + 1)
        for x in Z.levels[n]
    }
    levels = []
    for n in range(N + 1):
        seen = []
        got = set()
        for x in Z.levels[n]:
            r = cls_of[(n, x)]
            if r not in got:
                got.add(r)
                seen.append(r)
        levels.append(seen)
    faces = {
        (n, i): {x: cls_of[(n - 1, Z.face(n, i, x))] for x in levels[n]}
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    degens = {
        (n, i): {x: cls_of[(n + 1, Z.degen(n, i, x))] for x in levels[n]}
        for n in range(N)
        for i in range(n + 1)
    }
    Q = SimplicialSet.from_tables(N, levels, faces, degens, lossy=Z.lossy,
                                  check=False)
    qmap = SimplicialMap(
        Z, Q,
        [{x: cls_of[(n, x)] for x in Z.levels[n]} for n in range(N + 1)],
        check=False,
    )
    return Coequalizer(Q, qmap)


# ---------------------------------------------------------------------------
# Map enumeration and exponentials
# ---------------------------------------------------------------------------


def enumerate_maps(X, Y, up_to=None, budget=DEFAULT_BUDGET):
    """All simplicial maps X -> Y, by dimension-ordered backtracking over the
    nondegenerate simplices of X.

    Deterministic: simplices are processed in level order and candidate
    images in target level order.  Raises BudgetExceeded when more than
    ``budget`` partial assignments are visited.
    """
    if X.N != Y.N:
        raise TruncationMismatch("enumerate_maps requires equal truncations")
    top = X.N if up_to is None else min(up_to, X.N)
    for n in range(top + 1, X.N + 1):
        if X.nondegenerate(n):
            raise ValidationError(
                f"enumerate_maps: source has nondegenerate simplices above {top}"
            )
    cells = [(n, x) for n in range(top + 1) for x in X.nondegenerate(n)]
    results = []
    assignment = {}
    visited = 0

    def candidates(n, x):
        if n == 0:
            return list(Y.levels[0])
        want = []
        for i in range(n + 1):
            fx = X.face(n, i, x)
            word, base = X.ez[(n - 1, fx)]
            m = n - 1 - len(word)
            img = Y.apply_word(word, m, assignment[(m, base)])
            want.append(img)
        return [
            y for y in Y.levels[n]
            if all(Y.face(n, i, y) == want[i] for i in range(n + 1))
        ]

    def rec(k):
        nonlocal visited
        if k == len(cells):
            results.append(dict(assignment))
            return
        n, x = cells[k]
        for y in candidates(n, x):
            visited += 1
            if visited > budget:
                raise BudgetExceeded(budget, "enumerating simplicial maps")
            assignment[(n, x)] = y
            rec(k + 1)
            del assignment[(n, x)]

    rec(0)
    out = []
    for images in results:
        # cells above `top` (when up_to < N) still need images; only full maps
        # are returned, so extend by requiring them too when present.
        out.append(SimplicialMap.from_nondegenerate_images(X, Y, images,
                                                           check=False))
    return out


def exponential(Y, K, N, budget=DEFAULT_BUDGET):
    """The simplicial mapping object Y^K.

    Level n is the set of simplicial maps product(K, Delta[n]) -> Y; faces and
    degeneracies act by precomposition with the maps of standard simplices.
    Simplex ids are canonical map keys.
    """
    if Y.N != K.N or Y.N != N:
        raise TruncationMismatch("exponential requires matching truncations")
    deltas = [standard_simplex(n, N) for n in range(N + 1)]
    prods = [product(K, deltas[n]) for n in range(N + 1)]
    maps_by_level = []
    by_key = []
    for n in range(N + 1):
        fs = enumerate_maps(prods[n], Y, budget=budget)
        maps_by_level.append(fs)
        by_key.append({f.key(): f for f in fs})
    levels = [[f.key() for f in maps_by_level[n]] for n in range(N + 1)]

    def precompose(n, f, phi, m):
        """Key of f o (id_K x Delta(phi)) for phi: [m] -> [n]."""
        src = prods[m]
        images = {}
        for q in range(N + 1):
            for (k, sig) in src.levels[q]:
                images[(q, (k, sig))] = f(q, (k, tuple(phi[v] for v in sig)))
        g = SimplicialMap(src, Y, [
            {x: images[(q, x)] for x in src.levels[q]} for q in range(N + 1)
        ], check=False)
        return g.key()

    faces = {}
    degens = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            phi = tuple(v for v in range(n + 1) if v != i)
            faces[(n, i)] = {
                f.key(): precompose(n, f, phi, n - 1)
                for f in maps_by_level[n]
            }
    for n in range(N):
        for i in range(n + 1):
            phi = tuple(range(n + 1))
            phi = phi[: i + 1] + phi[i:]
            degens[(n, i)] = {
                f.key(): precompose(n, f, phi, n + 1)
                for f in maps_by_level[n]
            }
    exp = SimplicialSet.from_tables(N, levels, faces, degens,
                                    lossy=Y.lossy or K.lossy)
    exp_maps = by_key
    return exp, exp_maps


def transpose(f, A, K, exp, exp_maps):
    """Adjunction: turn f: product(A, K) -> Y into A -> Y^K."""
    N = A.N
    deltas = [standard_simplex(n, N) for n in range(N + 1)]
    prods = [product(K, deltas[n]) for n in range(N + 1)]
    levels = []
    for n in range(N + 1):
        tab = {}
        for a in A.levels[n]:
            src = prods[n]
            lv = []
            for q in range(N + 1):
                d = {}
                for (k, sig) in src.levels[q]:
                    d[(k, sig)] = f(q, (A.act(n, a, sig), k))
                lv.append(d)
            g = SimplicialMap(src, f.target, lv, check=False)
            tab[a] = g.key()
        levels.append(tab)
    return SimplicialMap(A, exp, levels)


def untranspose(g, A, K, exp, exp_maps):
    """Adjunction inverse: turn g: A -> Y^K into product(A, K) -> Y."""
    N = A.N
    P = product(A, K)
    levels = []
    for q in range(N + 1):
        tab = {}
        for (a, k) in P.levels[q]:
            m = exp_maps[q][g(q, a)]
            tab[(a, k)] = m(q, (k, tuple(range(q + 1))))
        levels.append(tab)
    target = exp_maps[0][g(0, A.levels[0][0])].target if A.levels[0] else None
    if target is None:
        raise ValidationError("untranspose needs a nonempty source")
    return SimplicialMap(P, target, levels)


# ---------------------------------------------------------------------------
# Bisimplicial sets and diagonals
# ---------------------------------------------------------------------------


class BisimplicialSet:
    """Doubly indexed simplicial object with horizontal/vertical tables."""

    __slots__ = ("N", "levels", "h_faces", "h_degens", "v_faces", "v_degens",
                 "lossy")

    def __init__(self, N, levels, h_faces, h_degens, v_faces, v_degens,
                 lossy=False, check=True):
        self.N = N
        self.levels = {pq: tuple(v) for pq, v in levels.items()}
        self.h_faces = h_faces
        self.h_degens = h_degens
        self.v_faces = v_faces
        self.v_degens = v_degens
        self.lossy = lossy
        if check:
            self._validate()

    def level(self, p, q):
        return self.levels[(p, q)]

    def h_face(self, p, q, i, x):
        return self.h_faces[(p, q, i)][x]

    def h_degen(self, p, q, i, x):
        return self.h_degens[(p, q, i)][x]

    def v_face(self, p, q, i, x):
        return self.v_faces[(p, q, i)][x]

    def v_degen(self, p, q, i, x):
        return self.v_degens[(p, q, i)][x]

    def _validate(self):
        N = self.N
        # rows and columns are simplicial in each direction
        for q in range(N + 1):
            self._check_direction(
                lambda p, i, x: self.h_face(p, q, i, x),
                lambda p, i, x: self.h_degen(p, q, i, x),
                lambda p: self.level(p, q),
            )
        for p in range(N + 1):
            self._check_direction(
                lambda q, i, x: self.v_face(p, q, i, x),
                lambda q, i, x: self.v_degen(p, q, i, x),
                lambda q: self.level(p, q),
            )
        # horizontal and vertical operators commute
        for p in range(N + 1):
            for q in range(N + 1):
                for x in self.level(p, q):
                    for i in range(p + 1):
                        for j in range(q + 1):
                            if p >= 1 and q >= 1:
                                a = self.v_face(p - 1, q, j,
                                                self.h_face(p, q, i, x))
                                b = self.h_face(p, q - 1, i,
                                                self.v_face(p, q, j, x))
                                if a != b:
                                    raise ValidationError(
                                        "horizontal/vertical faces do not commute"
                                    )
                            if p < N and q < N:
                                a = self.v_degen(p + 1, q, j,
                                                 self.h_degen(p, q, i, x))
                                b = self.h_degen(p, q + 1, i,
                                                 self.v_degen(p, q, j, x))
                                if a != b:
                                    raise ValidationError(
                                        "horizontal/vertical degeneracies do not commute"
                                    )
                            if p >= 1 and q < N:
                                a = self.v_degen(p - 1, q, j,
                                                 self.h_face(p, q, i, x))
                                b = self.h_face(p, q + 1, i,
                                                self.v_degen(p, q, j, x))
                                if a != b:
                                    raise ValidationError(
                                        "horizontal face / vertical degeneracy do not commute"
                                    )
                            if p < N and q >= 1:
                                a = self.v_face(p + 1, q, j,
                                                self.h_degen(p, q, i, x))
                                b = self.h_degen(p, q - 1, i,
                                                 self.v_face(p, q, j, x))
                                if a != b:
                                    raise ValidationError(
                                        "horizontal degeneracy / vertical face do not commute"
                                    )

    def _check_direction(self, face, degen, level):
        N = self.N
        for n in range(2, N + 1):
            for j in range(n + 1):
                for i in range(j):
                    for x in level(n):
                        if face(n - 1, i, face(n, j, x)) != \
                           face(n - 1, j - 1, face(n, i, x)):
                            raise ValidationError("bisimplicial d d identity fails")
        for n in range(N):
            for j in range(n + 1):
                for i in range(n + 2):
                    for x in level(n):
                        sx = degen(n, j, x)
                        got = face(n + 1, i, sx)
                        if i < j:
                            want = degen(n - 1, j - 1, face(n, i, x))
                        elif i in (j, j + 1):
                            want = x
                        else:
                            want = degen(n - 1, j, face(n, i - 1, x))
                        if got != want:
                            raise ValidationError("bisimplicial d s identity fails")


def diagonal(B):
    """The diagonal simplicial set of a bisimplicial set."""
    N = B.N
    levels = [B.level(n, n) for n in range(N + 1)]
    faces = {
        (n, i): {
            x: B.h_face(n, n - 1, i, B.v_face(n, n, i, x)) for x in levels[n]
        }
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    degens = {
        (n, i): {
            x: B.h_degen(n, n + 1, i, B.v_degen(n, n, i, x)) for x in levels[n]
        }
        for n in range(N)
        for i in range(n + 1)
    }
    return SimplicialSet.from_tables(N, levels, faces, degens, lossy=B.lossy)


def constant_bisimplicial(X):
    """Vertically varying, horizontally constant bisimplicial set at X.

    Level (p, q) = X_q; horizontal operators are identities.
    """
    N = X.N
    levels = {(p, q): X.levels[q] for p in range(N + 1) for q in range(N + 1)}
    h_faces = {
        (p, q, i): {x: x for x in X.levels[q]}
        for p in range(1, N + 1) for q in range(N + 1) for i in range(p + 1)
    }
    h_degens = {
        (p, q, i): {x: x for x in X.levels[q]}
        for p in range(N) for q in range(N + 1) for i in range(p + 1)
    }
    v_faces = {
        (p, q, i): {x: X.face(q, i, x) for x in X.levels[q]}
        for p in range(N + 1) for q in range(1, N + 1) for i in range(q + 1)
    }
    v_degens = {
        (p, q, i): {x: X.degen(q, i, x) for x in X.levels[q]}
        for p in range(N + 1) for q in range(N) for i in range(q + 1)
    }
    return BisimplicialSet(N, levels, h_faces, h_degens, v_faces, v_degens,
                           lossy=X.lossy)


# ---------------------------------------------------------------------------
# Isomorphism testing (small instances only)
# ---------------------------------------------------------------------------


def isomorphic(X, Y, budget=DEFAULT_BUDGET):
    """Backtracking bijection search on nondegenerate simplices.

    Intended for unit tests on small instances; homology is the scalable
    surrogate.
    """
    if X.N != Y.N:
        return False
    for n in range(X.N + 1):
        if len(X.nondegenerate(n)) != len(Y.nondegenerate(n)):
            return False
    cells = [(n, x) for n in range(X.N + 1) for x in X.nondegenerate(n)]
    assignment = {}
    used = set()
    visited = 0

    def compatible(n, x, y):
        for i in range(n + 1):
            fx = X.face(n, i, x)
            w, b = X.ez[(n - 1, fx)]
            m = n - 1 - len(w)
            want = Y.apply_word(w, m, assignment[(m, b)])
            if Y.face(n, i, y) != want:
                return False
        return True

    def rec(k):
        nonlocal visited
        if k == len(cells):
            return True
        n, x = cells[k]
        for y in Y.nondegenerate(n):
            if (n, y) in used:
                continue
            visited += 1
            if visited > budget:
                raise BudgetExceeded(budget, "searching for an isomorphism")
            if n > 0 and not compatible(n, x, y):
                continue
            assignment[(n, x)] = y
            used.add((n, y))
            if rec(k + 1):
                return True
            del assignment[(n, x)]
            used.discard((n, y))
        return False

    return rec(0)

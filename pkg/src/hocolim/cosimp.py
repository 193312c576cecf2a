"""Truncated cosimplicial objects in simplicial sets.

Provides the simplicial structure on cosimplicial objects: the coend
``tensor_delta`` (A (x)_Delta K), the cosimplicial tensor ``tensor`` (A (x) K),
the pointwise exponential ``power`` (A^K), the canonical resolution of a
simplicial set, and the last-vertex prism homotopy.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sset as ss
from .errors import TruncationMismatch, ValidationError
from .homology import is_homology_iso
from .sset import SimplicialMap, SimplicialSet


class CosimplicialSS:
    """A truncated cosimplicial object: components A^0..A^N with coface maps
    d^i: A^{n-1} -> A^n and codegeneracy maps s^i: A^{n+1} -> A^n."""

    __slots__ = ("N", "components", "cofaces", "codegens", "_resolution",
                 "_smaps")

    def __init__(self, N, components, cofaces, codegens, check=True):
        self.N = N
        self.components = list(components)
        self.cofaces = dict(cofaces)      # (n, i): A^{n-1} -> A^n, 1 <= n <= N
        self.codegens = dict(codegens)    # (n, i): A^{n+1} -> A^n, 0 <= n < N
        self._resolution = None
        self._smaps = {}
        if check:
            self._validate()

    def component(self, n):
        return self.components[n]

    def coface(self, n, i):
        return self.cofaces[(n, i)]

    def codegen(self, n, i):
        return self.codegens[(n, i)]

    def _validate(self):
        N = self.N
        if len(self.components) != N + 1:
            raise ValidationError("wrong number of cosimplicial components")
        for n in range(1, N + 1):
            for i in range(n + 1):
                f = self.cofaces.get((n, i))
                if f is None or not f.source.equals(self.component(n - 1)) \
                        or not f.target.equals(self.component(n)):
                    raise ValidationError(f"bad coface d^{i} into level {n}")
        for n in range(N):
            for i in range(n + 1):
                f = self.codegens.get((n, i))
                if f is None or not f.source.equals(self.component(n + 1)) \
                        or not f.target.equals(self.component(n)):
                    raise ValidationError(f"bad codegeneracy s^{i} onto level {n}")
        # cosimplicial identities, dual to the simplicial ones
        for n in range(2, N + 1):
            for j in range(n + 1):
                for i in range(j):
                    a = self.coface(n, j).compose(self.coface(n - 1, i))
                    b = self.coface(n, i).compose(self.coface(n - 1, j - 1))
                    if a.key() != b.key():
                        raise ValidationError(
                            f"d^{j} d^{i} != d^{i} d^{j - 1} at level {n}"
                        )
        for n in range(N - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    a = self.codegen(n, i).compose(self.codegen(n + 1, j + 1))
                    b = self.codegen(n, j).compose(self.codegen(n + 1, i))
                    if a.key() != b.key():
                        raise ValidationError(
                            f"s^{i} s^{j + 1} != s^{j} s^{i} at level {n}"
                        )
        for n in range(N):
            for j in range(n + 1):
                for i in range(n + 2):
                    got = self.codegen(n, j).compose(self.coface(n + 1, i))
                    if i < j:
                        want = self.coface(n, i).compose(self.codegen(n - 1, j - 1))
                    elif i in (j, j + 1):
                        want = SimplicialMap.identity(self.component(n))
                    else:
                        want = self.coface(n, i - 1).compose(self.codegen(n - 1, j))
                    if got.key() != want.key():
                        raise ValidationError(
                            f"s^{j} d^{i} identity fails at level {n}"
                        )

    def structure_map(self, phi, m, n):
        """Covariant structure map A^m -> A^n for a monotone value tuple phi."""
        key = (phi, m, n)
        cached = self._smaps.get(key)
        if cached is not None:
            return cached
        f = self._structure_map(phi, m, n)
        self._smaps[key] = f
        return f

    def _structure_map(self, phi, m, n):
        img = set(phi)
        missing = [v for v in range(n + 1) if v not in img]
        if missing:
            i = missing[-1]
            phi2 = tuple(v if v < i else v - 1 for v in phi)
            return self.coface(n, i).compose(self.structure_map(phi2, m, n - 1))
        for j in range(m):
            if phi[j] == phi[j + 1]:
                phi2 = phi[:j] + phi[j + 1:]
                return self.structure_map(phi2, m - 1, n).compose(
                    self.codegen(m - 1, j))
        return SimplicialMap.identity(self.component(m))

    def collapse_to_zero(self, n):
        """The unique structure map A^n -> A^0 (along the map [n] -> [0])."""
        return self.structure_map((0,) * (n + 1), n, 0)

    def is_resolution(self):
        """Oracle surrogate for "all coface and codegeneracy maps are weak
        equivalences": every structure map passes the homology-iso check.
        Cached after the first call."""
        if self._resolution is None:
            ok = all(
                is_homology_iso(f)
                for f in list(self.cofaces.values()) + list(self.codegens.values())
            )
            self._resolution = ok
        return self._resolution


class CosimplicialMap:
    """A level-wise map of cosimplicial objects commuting with the structure."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source, target, components, check=True):
        self.source = source
        self.target = target
        self.components = list(components)
        if check:
            self._validate()

    def component(self, n):
        return self.components[n]

    def _validate(self):
        A, B = self.source, self.target
        if A.N != B.N or len(self.components) != A.N + 1:
            raise ValidationError("cosimplicial map has wrong shape")
        for n in range(A.N + 1):
            f = self.components[n]
            if not f.source.equals(A.component(n)) or \
               not f.target.equals(B.component(n)):
                raise ValidationError(f"component {n} has wrong endpoints")
        for n in range(1, A.N + 1):
            for i in range(n + 1):
                a = self.components[n].compose(A.coface(n, i))
                b = B.coface(n, i).compose(self.components[n - 1])
                if a.key() != b.key():
                    raise ValidationError(f"map does not commute with d^{i} at {n}")
        for n in range(A.N):
            for i in range(n + 1):
                a = self.components[n].compose(A.codegen(n, i))
                b = B.codegen(n, i).compose(self.components[n + 1])
                if a.key() != b.key():
                    raise ValidationError(f"map does not commute with s^{i} at {n}")

    @classmethod
    def identity(cls, A):
        return cls(A, A, [SimplicialMap.identity(A.component(n))
                          for n in range(A.N + 1)], check=False)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def constant(X, N=None):
    """The constant cosimplicial object at X; trivially a resolution."""
    N = X.N if N is None else N
    if N != X.N:
        raise TruncationMismatch("constant cosimplicial object keeps X's truncation")
    ident = SimplicialMap.identity(X)
    cofaces = {(n, i): ident for n in range(1, N + 1) for i in range(n + 1)}
    codegens = {(n, i): ident for n in range(N) for i in range(n + 1)}
    A = CosimplicialSS(N, [X] * (N + 1), cofaces, codegens, check=False)
    A._resolution = True
    return A


def canonical_resolution(X, N=None):
    """The canonical resolution of X: component n is X x Delta[n], with the
    structure maps of the cosimplicial object of standard simplices.

    The 0th component is normalized to X itself (not the literal product
    X x Delta[0]), so inclusions of level-0 data need no bookkeeping iso.
    """
    N = X.N if N is None else N
    if N != X.N:
        raise TruncationMismatch("canonical resolution keeps X's truncation")
    comps = [X] + [ss.product(X, ss.standard_simplex(n, N))
                   for n in range(1, N + 1)]

    def induced(m, n, phi):
        src, dst = comps[m], comps[n]
        if m == 0 and n == 0:
            return SimplicialMap.identity(X)
        if m == 0:
            levels = [
                {x: (x, (phi[0],) * (q + 1)) for x in X.levels[q]}
                for q in range(N + 1)
            ]
        elif n == 0:
            levels = [
                {(x, sig): x for (x, sig) in src.levels[q]}
                for q in range(N + 1)
            ]
        else:
            levels = [
                {(x, sig): (x, tuple(phi[v] for v in sig))
                 for (x, sig) in src.levels[q]}
                for q in range(N + 1)
            ]
        return SimplicialMap(src, dst, levels, check=False)

    cofaces = {
        (n, i): induced(n - 1, n, tuple(v for v in range(n + 1) if v != i))
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    codegens = {
        (n, i): induced(n + 1, n,
                        tuple(range(i + 1)) + tuple(range(i, n + 1)))
        for n in range(N)
        for i in range(n + 1)
    }
    return CosimplicialSS(N, comps, cofaces, codegens)


# ---------------------------------------------------------------------------
# The coend A (x)_Delta K
# ---------------------------------------------------------------------------


@dataclass
class TensorDelta:
    """Result of :func:`tensor_delta`.

    The total object T is the coproduct over n <= N and y in K_n of copies of
    A^n (simplex ids ((n, y), a)); ``sset`` is its quotient by the coend
    relations and ``coeq`` the underlying coequalizer.
    """

    A: object
    K: object
    total: SimplicialSet
    coeq: object

    @property
    def sset(self):
        return self.coeq.sset

    def cls(self, n, y, q, a):
        """Class of the q-simplex a of the copy of A^n indexed by y in K_n."""
        return self.coeq.quotient_map(q, ((n, y), a))


def tensor_delta(A, K):
    """The coend A (x)_Delta K as a coequalizer of simplicial maps.

    The congruence is generated by the elementary coface/codegeneracy maps of
    the truncated simplex category; these generate the same relations as all
    monotone maps.
    """
    N = A.N
    if K.N != N:
        raise TruncationMismatch("tensor_delta requires equal truncations")
    pieces = [
        ((n, y), A.component(n)) for n in range(N + 1) for y in K.levels[n]
    ]
    T, _incl = ss.coproduct(pieces)

    generators = []
    for k in range(N):
        for i in range(k + 2):
            phi = tuple(v for v in range(k + 2) if v != i)
            generators.append((k, k + 1, phi))
    for k in range(1, N + 1):
        for i in range(k):
            phi = tuple(range(i + 1)) + tuple(range(i, k))
            generators.append((k, k - 1, phi))

    epieces = []
    f_levels = [dict() for _ in range(N + 1)]
    g_levels = [dict() for _ in range(N + 1)]
    for gi, (k, m, phi) in enumerate(generators):
        struct = A.structure_map(phi, k, m)
        for y in K.levels[m]:
            lab = (gi, y)
            epieces.append((lab, A.component(k)))
            y_phi = K.act(m, y, phi)
            for q in range(N + 1):
                for a in A.component(k).levels[q]:
                    f_levels[q][(lab, a)] = ((k, y_phi), a)
                    g_levels[q][(lab, a)] = ((m, y), struct(q, a))
    E, _ = ss.coproduct(epieces) if epieces else (ss.empty(N), {})
    f = SimplicialMap(E, T, f_levels, check=False)
    g = SimplicialMap(E, T, g_levels, check=False)
    coeq = ss.coequalizer(f, g)
    coeq.sset.lossy = A.component(0).lossy or K.lossy
    return TensorDelta(A, K, T, coeq)


def tensor_delta_map_on_K(td1, td2, h):
    """Map tensor_delta(A, K1) -> tensor_delta(A, K2) induced by h: K1 -> K2."""
    T1 = td1.total
    raw_levels = []
    for q in range(T1.N + 1):
        tab = {}
        for ((n, y), a) in T1.levels[q]:
            tab[((n, y), a)] = td2.cls(n, h(n, y), q, a)
        raw_levels.append(tab)
    raw = SimplicialMap(T1, td2.sset, raw_levels, check=False)
    return td1.coeq.induce(raw)


def tensor_delta_map_on_A(td1, td2, h):
    """Map tensor_delta(A1, K) -> tensor_delta(A2, K) induced by a
    cosimplicial map h: A1 -> A2."""
    T1 = td1.total
    raw_levels = []
    for q in range(T1.N + 1):
        tab = {}
        for ((n, y), a) in T1.levels[q]:
            tab[((n, y), a)] = td2.cls(n, y, q, h.component(n)(q, a))
        raw_levels.append(tab)
    raw = SimplicialMap(T1, td2.sset, raw_levels, check=False)
    return td1.coeq.induce(raw)


def co_yoneda_iso(A, n, td=None):
    """The exact isomorphism tensor_delta(A, Delta[n]) ~ A^n.

    Returns (fwd, bwd, td): mutually inverse simplicial maps and the tensor
    used (td may be supplied to avoid recomputation; its K must be
    standard_simplex(n, N)).
    """
    N = A.N
    if td is None:
        td = tensor_delta(A, ss.standard_simplex(n, N))
    T = td.total
    raw_levels = []
    for q in range(N + 1):
        tab = {}
        for ((k, y), a) in T.levels[q]:
            tab[((k, y), a)] = A.structure_map(y, k, n)(q, a)
        raw_levels.append(tab)
    raw = SimplicialMap(T, A.component(n), raw_levels, check=False)
    fwd = td.coeq.induce(raw)
    ident = tuple(range(n + 1))
    bwd_levels = [
        {a: td.cls(n, ident, q, a) for a in A.component(n).levels[q]}
        for q in range(N + 1)
    ]
    bwd = SimplicialMap(A.component(n), td.sset, bwd_levels, check=False)
    if fwd.compose(bwd).key() != SimplicialMap.identity(A.component(n)).key():
        raise ValidationError("co-Yoneda: fwd o bwd is not the identity")
    if bwd.compose(fwd).key() != SimplicialMap.identity(td.sset).key():
        raise ValidationError("co-Yoneda: bwd o fwd is not the identity")
    return fwd, bwd, td


# ---------------------------------------------------------------------------
# The cosimplicial tensor and exponential
# ---------------------------------------------------------------------------


@dataclass
class Tensor:
    """tensor(A, K): components tensor_delta(A, K x Delta[n])."""

    cosimplicial: CosimplicialSS
    tensors: list  # the per-level TensorDelta results


def tensor(A, K):
    """The cosimplicial object [n] |-> A (x)_Delta (K x Delta[n])."""
    N = A.N
    if K.N != N:
        raise TruncationMismatch("tensor requires equal truncations")
    deltas = [ss.standard_simplex(n, N) for n in range(N + 1)]
    prods = [ss.product(K, deltas[n]) for n in range(N + 1)]
    tds = [tensor_delta(A, prods[n]) for n in range(N + 1)]

    def induced(m, n, phi):
        src, dst = prods[m], prods[n]
        levels = [
            {(y, sig): (y, tuple(phi[v] for v in sig))
             for (y, sig) in src.levels[q]}
            for q in range(N + 1)
        ]
        h = SimplicialMap(src, dst, levels, check=False)
        return tensor_delta_map_on_K(tds[m], tds[n], h)

    cofaces = {
        (n, i): induced(n - 1, n, tuple(v for v in range(n + 1) if v != i))
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    codegens = {
        (n, i): induced(n + 1, n,
                        tuple(range(i + 1)) + tuple(range(i, n + 1)))
        for n in range(N)
        for i in range(n + 1)
    }
    cs = CosimplicialSS(N, [td.sset for td in tds], cofaces, codegens)
    return Tensor(cs, tds)


def power(A, K):
    """The cosimplicial exponential A^K: component n is the K_n-indexed
    product of copies of A^n."""
    N = A.N
    if K.N != N:
        raise TruncationMismatch("power requires equal truncations")
    comps = [ss.power_dot(A.component(n), K.levels[n]) for n in range(N + 1)]
    index = [
        {y: i for i, y in enumerate(K.levels[n])} for n in range(N + 1)
    ]

    def induced(m, n, phi):
        src, dst = comps[m], comps[n]
        struct = A.structure_map(phi, m, n)
        levels = []
        for q in range(N + 1):
            tab = {}
            for c in src.levels[q]:
                tab[c] = tuple(
                    struct(q, c[index[m][K.act(n, y, phi)]])
                    for y in K.levels[n]
                )
            levels.append(tab)
        return SimplicialMap(src, dst, levels, check=False)

    cofaces = {
        (n, i): induced(n - 1, n, tuple(v for v in range(n + 1) if v != i))
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    codegens = {
        (n, i): induced(n + 1, n,
                        tuple(range(i + 1)) + tuple(range(i, n + 1)))
        for n in range(N)
        for i in range(n + 1)
    }
    return CosimplicialSS(N, comps, cofaces, codegens)


# ---------------------------------------------------------------------------
# The last-vertex prism homotopy
# ---------------------------------------------------------------------------


def last_vertex_inclusion(n, N):
    """j: Delta[0] -> Delta[n], the last vertex."""
    return ss.simplex_map((n,), 0, n, N)


def last_vertex_homotopy(n, N):
    """The prism homotopy H: Delta[n] x Delta[1] -> Delta[n].

    On vertices (v, 0) |-> v and (v, 1) |-> n, extended monotonically.  The
    restriction to Delta[n] x {0} is the identity and to Delta[n] x {1} the
    composite of the projection with the last-vertex inclusion.  Returns
    (H, j, P) with P the product the homotopy is defined on.
    """
    if N < n:
        raise TruncationMismatch("truncation too small for the prism homotopy")
    dn = ss.standard_simplex(n, N)
    d1 = ss.standard_simplex(1, N)
    P = ss.product(dn, d1)
    levels = [
        {
            (alpha, beta): tuple(
                alpha[t] if beta[t] == 0 else n for t in range(q + 1)
            )
            for (alpha, beta) in P.levels[q]
        }
        for q in range(N + 1)
    ]
    H = SimplicialMap(P, dn, levels)
    j = last_vertex_inclusion(n, N)
    return H, j, P


def end_inclusion(X, P, which):
    """The inclusion X -> product(X, Delta[1]) at vertex ``which``."""
    N = X.N
    levels = [
        {x: (x, (which,) * (q + 1)) for x in X.levels[q]} for q in range(N + 1)
    ]
    return SimplicialMap(X, P, levels, check=False)

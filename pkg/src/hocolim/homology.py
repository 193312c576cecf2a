"""Integral homology oracle.

Normalized chain complexes over the nondegenerate simplices, exact integer
Smith normal form with transformation matrices, Betti/torsion reports, induced
maps on homology, and the homology-isomorphism verdict used everywhere as the
finite surrogate for "weak equivalence".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .sset import UnionFind

# ---------------------------------------------------------------------------
# Exact integer linear algebra
# ---------------------------------------------------------------------------


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in range(len(A))]
    n, k, m = len(A), len(B), len(B[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    Oi[j] += a * Bt[j]
    return out


def smith_normal_form(A):
    """Return (U, D, V, rank) with U*A*V = D, U and V unimodular.

    D is diagonal with d_1 | d_2 | ... | d_r > 0 followed by zeros.  Pivoting
    picks the entry of minimal absolute value.  Arbitrary-precision integers
    throughout.
    """
    m = len(A)
    n = len(A[0]) if A else 0
    D = [row[:] for row in A]
    U = identity_matrix(m)
    V = identity_matrix(n)

    def row_op(i, j, c):  # row_i += c * row_j
        Di, Dj = D[i], D[j]
        for t in range(n):
            Di[t] += c * Dj[t]
        Ui, Uj = U[i], U[j]
        for t in range(m):
            Ui[t] += c * Uj[t]

    def col_op(i, j, c):  # col_i += c * col_j
        for r in range(m):
            D[r][i] += c * D[r][j]
        for r in range(n):
            V[r][i] += c * V[r][j]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(m):
            D[r][i], D[r][j] = D[r][j], D[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    t = 0
    while t < min(m, n):
        # find pivot of minimal absolute value in the remaining block
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        swap_rows(t, i)
        swap_cols(t, j)
        # clear row and column t
        dirty = False
        for i in range(t + 1, m):
            if D[i][t]:
                q = D[i][t] // D[t][t]
                row_op(i, t, -q)
                if D[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if D[t][j]:
                q = D[t][j] // D[t][t]
                col_op(j, t, -q)
                if D[t][j]:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility d_t | D[i][j] for the rest of the block

        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % D[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, 1)
            continue
        if D[t][t] < 0:
            row_op(t, t, -2)
        t += 1
    rank = sum(1 for i in range(min(m, n)) if D[i][i] != 0)
    return U, D, V, rank


def kernel_basis(A, n_cols):
    """Integer basis of the kernel of A (as column vectors), as a matrix whose
    columns are the basis.  The basis is primitive (extends to a basis of Z^n).
    """
    if not A or not A[0]:
        return identity_matrix(n_cols)
    U, D, V, rank = smith_normal_form(A)
    n = n_cols
    return [[V[r][j] for j in range(rank, n)] for r in range(n)]


def integer_solve(A, B):
    """Solve A X = B over the integers; raises ValidationError if unsolvable."""
    m = len(A)
    n = len(A[0]) if A else 0
    if m == 0:
        if any(any(row) for row in B):
            raise ValidationError("inconsistent integer system")
        return [[0] * (len(B[0]) if B else 0) for _ in range(n)]
    U, D, V, rank = smith_normal_form(A)
    UB = mat_mul(U, B)
    k = len(B[0]) if B else 0
    Y = [[0] * k for _ in range(n)]
    for i in range(m):
        d = D[i][i] if i < min(m, n) else 0
        for j in range(k):
            v = UB[i][j]
            if d == 0:
                if v != 0:
                    raise ValidationError("inconsistent integer system")
            else:
                if v % d:
                    raise ValidationError("integer system has no exact solution")
                if i < n:
                    Y[i][j] = v // d
    return mat_mul(V, Y)


def cokernel_invariants(A, n_rows):
    """Invariant factors of Z^n_rows / column span of A: (free_rank, torsion)."""
    if not A or not A[0]:
        return n_rows, []
    U, D, V, rank = smith_normal_form(A)
    torsion = [D[i][i] for i in range(rank) if D[i][i] > 1]
    return n_rows - rank, torsion


# ---------------------------------------------------------------------------
# Chain complexes
# ---------------------------------------------------------------------------


@dataclass
class ChainComplex:
    """Normalized integral chains of a truncated simplicial set.

    basis[n] lists the nondegenerate n-simplices; boundary[n] is the matrix of
    the boundary C_n -> C_{n-1} in those bases (rows indexed by degree n-1).
    """

    N: int
    basis: list
    boundary: list  # boundary[n] defined for 1 <= n <= N

    def rank(self, n):
        return len(self.basis[n]) if 0 <= n <= self.N else 0


def chains(X):
    """Normalized chain complex of X; verifies that the boundary squares to
    zero."""
    N = X.N
    basis = [X.nondegenerate(n) for n in range(N + 1)]
    index = [
        {x: i for i, x in enumerate(basis[n])} for n in range(N + 1)
    ]
    boundary = [None]
    for n in range(1, N + 1):
        rows = len(basis[n - 1])
        mat = [[0] * len(basis[n]) for _ in range(rows)]
        for j, x in enumerate(basis[n]):
            for i in range(n + 1):
                fx = X.face(n, i, x)
                if X.is_degenerate(n - 1, fx):
                    continue
                r = index[n - 1][fx]
                mat[r][j] += -1 if i % 2 else 1
        boundary.append(mat)
    cc = ChainComplex(N, basis, boundary)
    for n in range(2, N + 1):
        sq = mat_mul(boundary[n - 1], boundary[n])
        if any(any(row) for row in sq):
            raise ValidationError(f"boundary does not square to zero at degree {n}")
    return cc


@dataclass
class DegreeHomology:
    betti: int
    torsion: list


@dataclass
class HomologyReport:
    """Betti numbers and torsion per degree, with the truncation-honesty
    bound: degrees above reliable_up_to may be wrong."""

    degrees: list  # DegreeHomology for 0..N
    reliable_up_to: int

    def betti(self, n):
        return self.degrees[n].betti if 0 <= n < len(self.degrees) else 0

    def torsion(self, n):
        return self.degrees[n].torsion if 0 <= n < len(self.degrees) else []

    def summary(self):
        parts = []
        for n, d in enumerate(self.degrees):
            t = " + ".join(f"Z/{c}" for c in d.torsion)
            desc = f"Z^{d.betti}" if not t else (f"Z^{d.betti} + {t}" if d.betti else t)
            if d.betti == 0 and not d.torsion:
                desc = "0"
            parts.append(f"H_{n}={desc}")
        return ", ".join(parts)

    def to_dict(self):
        return {
            "degrees": [
                {"betti": d.betti, "torsion": list(d.torsion)}
                for d in self.degrees
            ],
            "reliable_up_to": self.reliable_up_to,
        }


@dataclass
class _DegreeData:
    """Internal: kernel basis and image presentation for one degree."""

    kernel: list          # columns = basis of cycles
    presentation: list    # image of the next boundary, in kernel coordinates
    betti: int = 0
    torsion: list = field(default_factory=list)


def _degree_data(cc):
    out = []
    for n in range(cc.N + 1):
        cn = cc.rank(n)
        if n == 0:
            K = identity_matrix(cn)
        else:
            K = kernel_basis(cc.boundary[n], cn)
        if n < cc.N:
            B = cc.boundary[n + 1]
            W = integer_solve(K, B) if (B and B[0]) else \
                [[0] * 0 for _ in range(len(K[0]) if K else 0)]
            if B and not B[0]:
                W = [[] for _ in range(len(K[0]) if K else 0)]
        else:
            W = [[] for _ in range(len(K[0]) if K else 0)]
        kdim = len(K[0]) if K else 0
        betti, torsion = cokernel_invariants(W, kdim)
        out.append(_DegreeData(K, W, betti, torsion))
    return out


def homology(cc):
    """Homology report of a chain complex via Smith normal form."""
    data = _degree_data(cc)
    return HomologyReport(
        [DegreeHomology(d.betti, d.torsion) for d in data],
        reliable_up_to=max(cc.N - 1, 0) if cc.N > 0 else 0,
    )


def sset_homology(X):
    return homology(chains(X))


# ---------------------------------------------------------------------------
# Induced maps and the iso verdict
# ---------------------------------------------------------------------------


def induced_chain_map(f):
    """Degreewise integer matrices of the normalized chain map of f.

    A nondegenerate simplex goes to its image when that image is
    nondegenerate, else to zero.
    """
    X, Y = f.source, f.target
    ccX, ccY = chains(X), chains(Y)
    idxY = [
        {y: i for i, y in enumerate(ccY.basis[n])} for n in range(Y.N + 1)
    ]
    mats = []
    for n in range(X.N + 1):
        mat = [[0] * len(ccX.basis[n]) for _ in range(len(ccY.basis[n]))]
        for j, x in enumerate(ccX.basis[n]):
            y = f(n, x)
            if not Y.is_degenerate(n, y):
                mat[idxY[n][y]][j] = 1
        mats.append(mat)
    return ccX, ccY, mats


def pi0(X):
    """Path components: union-find over vertices along all 1-simplices."""
    uf = UnionFind()
    for v in X.levels[0]:
        uf.find(v)
    for e in X.levels[1] if X.N >= 1 else []:
        uf.union(X.face(1, 1, e), X.face(1, 0, e))
    comps = {}
    for v in X.levels[0]:
        comps.setdefault(uf.find(v), []).append(v)
    return uf, list(comps)


def pi0_bijective(f):
    """Does f induce a bijection on path components?"""
    ufX, compX = pi0(f.source)
    ufY, compY = pi0(f.target)
    image = {ufY.find(f(0, v)) for v in f.source.levels[0]}
    if len(image) != len(compY):
        return False
    # injectivity on components
    seen = {}
    for v in f.source.levels[0]:
        cx = ufX.find(v)
        cy = ufY.find(f(0, v))
        if seen.setdefault(cx, cy) != cy:
            raise ValidationError("pi0 image not well defined; map is broken")
    return len(set(seen.values())) == len(seen)


@dataclass
class IsoVerdict:
    """Outcome of the homology-iso oracle."""

    is_iso: bool
    reliable_up_to: int
    pi0_bijection: bool
    degrees: list  # per degree: dict with betti/torsion agreement + surjectivity
    reason: str = ""

    def __bool__(self):
        return self.is_iso

    def to_dict(self):
        return {
            "is_iso": self.is_iso,
            "reliable_up_to": self.reliable_up_to,
            "pi0_bijection": self.pi0_bijection,
            "degrees": self.degrees,
            "reason": self.reason,
        }


def induced_map_on_homology(f):
    """Per-degree matrices of H_n(f) in the chosen cycle bases, plus the
    presentations needed to interpret them."""
    ccX, ccY, mats = induced_chain_map(f)
    dataX = _degree_data(ccX)
    dataY = _degree_data(ccY)
    out = []
    for n in range(ccX.N + 1):
        KX, KY = dataX[n].kernel, dataY[n].kernel
        FK = mat_mul(mats[n], KX) if KX and mats[n] else \
            [[0] * (len(KX[0]) if KX else 0) for _ in range(len(mats[n]))]
        kyd = len(KY[0]) if KY else 0
        if kyd == 0:
            G = [[0] * (len(KX[0]) if KX else 0) for _ in range(0)]
        else:
            G = integer_solve(KY, FK)
        out.append((G, dataX[n], dataY[n]))
    return out


def is_homology_iso(f, reliable_up_to=None):
    """The weak-equivalence oracle: pi_0 bijection plus induced isomorphism on
    integral homology in every reliable degree.

    A surjection between isomorphic finitely generated abelian groups is an
    isomorphism, so the check per degree is: equal Betti/torsion and the
    induced map surjective.
    """
    N = f.source.N
    bound = max(N - 1, 0) if reliable_up_to is None else reliable_up_to
    p0 = pi0_bijective(f)
    degrees = []
    ok = p0
    reason = "" if p0 else "pi0 is not a bijection"
    hdata = induced_map_on_homology(f)
    for n in range(bound + 1):
        G, dX, dY = hdata[n]
        same = (dX.betti == dY.betti and dX.torsion == dY.torsion)
        kyd = len(dY.kernel[0]) if dY.kernel else 0
        stacked = [
            (G[r] if G else []) + (dY.presentation[r] if dY.presentation else [])
            for r in range(kyd)
        ]
        free, tors = cokernel_invariants(stacked, kyd)
        surj = (free == 0 and not tors)
        degrees.append({
            "degree": n,
            "groups_agree": same,
            "surjective": surj,
        })
        if not (same and surj):
            ok = False
            if not reason:
                reason = f"H_{n} is not carried isomorphically"
    return IsoVerdict(ok, bound, p0, degrees, reason)

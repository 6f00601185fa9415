"""Independent brute-force oracle.

Dense Fraction / mod-p Gaussian elimination and groupoid structure constants
written from scratch, sharing no code with the package.  Used to derive the
frozen numbers asserted by the tests.
"""

from fractions import Fraction
from itertools import product


class Dense:
    """Tiny dense linear algebra over Q (p=0) or F_p."""

    def __init__(self, p=0):
        self.p = p

    def norm(self, x):
        if self.p:
            return int(x) % self.p
        return Fraction(x)

    def inv(self, x):
        return pow(int(x), -1, self.p) if self.p else 1 / Fraction(x)

    def rref(self, rows):
        rows = [[self.norm(x) for x in r] for r in rows]
        if not rows:
            return [], []
        m, n = len(rows), len(rows[0])
        piv = []
        r = 0
        for c in range(n):
            k = next((i for i in range(r, m) if rows[i][c] != 0), None)
            if k is None:
                continue
            rows[r], rows[k] = rows[k], rows[r]
            iv = self.inv(rows[r][c])
            rows[r] = [self.norm(x * iv) for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [self.norm(a - f * b) for a, b in zip(rows[i], rows[r])]
            piv.append(c)
            r += 1
            if r == m:
                break
        return rows[:r], piv

    def rank(self, rows):
        return len(self.rref(rows)[1])

    def nullspace(self, rows, n):
        red, piv = self.rref(rows)
        out = []
        for free in range(n):
            if free in piv:
                continue
            v = [self.norm(0)] * n
            v[free] = self.norm(1)
            for r, pc in zip(red, piv):
                v[pc] = self.norm(-r[free])
            out.append(v)
        return out

    def matmul(self, A, B):
        return [[self.norm(sum(A[i][k] * B[k][j] for k in range(len(B)))) for j in range(len(B[0]))]
                for i in range(len(A))]


def dense_of(M):
    """Library matrix to list of lists of Fractions / ints."""
    out = [[0] * M.shape[1] for _ in range(M.shape[0])]
    for i, j, x in M.items():
        out[i][j] = Fraction(int(x.numerator), int(x.denominator)) if hasattr(x, "numerator") and not isinstance(x, int) else x
    return out


class Groupoid:
    """Arrows (x, g, y) of pair(n) x G with G cyclic of order m, or identities only."""

    def __init__(self, n, kind="pair", m=1):
        self.n = n
        if kind == "discrete":
            self.arrows = [(x, 0, x) for x in range(n)]
        else:
            self.arrows = [(x, g, y) for x in range(n) for g in range(m) for y in range(n)]
        self.m = m
        self.index = {a: i for i, a in enumerate(self.arrows)}
        self.dim = len(self.arrows)

    def compose(self, a, b):
        (x, g, y), (u, h, v) = self.arrows[a], self.arrows[b]
        if y != u:
            return None
        return self.index[(x, (g + h) % self.m, v)]

    def is_identity(self, a):
        x, g, y = self.arrows[a]
        return x == y and g == 0


class GroupoidWBA:
    """Vectors are dicts index -> coefficient; tensors use tuple keys."""

    def __init__(self, grp, dual=False):
        self.G = grp
        self.dual = dual
        self.dim = grp.dim

    def mul(self, i, j):
        if self.dual:
            return {i: 1} if i == j else {}
        k = self.G.compose(i, j)
        return {} if k is None else {k: 1}

    def one(self):
        if self.dual:
            return {i: 1 for i in range(self.dim)}
        return {i: 1 for i in range(self.dim) if self.G.is_identity(i)}

    def comul(self, i):
        if not self.dual:
            return {(i, i): 1}
        out = {}
        for a, b in product(range(self.dim), repeat=2):
            if self.G.compose(a, b) == i:
                out[(a, b)] = 1
        return out

    def counit(self, i):
        if self.dual:
            return 1 if self.G.is_identity(i) else 0
        return 1

    def mulv(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.mul(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: x for k, x in out.items() if x}

    def epsv(self, u):
        return sum(a * self.counit(i) for i, a in u.items())

    def delta_one(self):
        out = {}
        for i, a in self.one().items():
            for k, c in self.comul(i).items():
                out[k] = out.get(k, 0) + a * c
        return out

    def target_proj(self, i):
        """1_(1) eps(a 1_(2))."""
        out = {}
        for (x, y), c in self.delta_one().items():
            e = self.epsv(self.mulv({i: 1}, {y: 1}))
            if e:
                out[x] = out.get(x, 0) + c * e
        return out

    def tbar(self, i):
        """eps(a 1_(1)) 1_(2)."""
        out = {}
        for (x, y), c in self.delta_one().items():
            e = self.epsv(self.mulv({i: 1}, {x: 1}))
            if e:
                out[y] = out.get(y, 0) + c * e
        return out

    def weak_counit_ok(self):
        n = self.dim
        for a, b, c in product(range(n), repeat=3):
            abc = self.epsv(self.mulv(self.mulv({a: 1}, {b: 1}), {c: 1}))
            s1 = s2 = 0
            for (x, y), k in self.comul(b).items():
                s1 += k * self.epsv(self.mulv({a: 1}, {x: 1})) * self.epsv(self.mulv({y: 1}, {c: 1}))
                s2 += k * self.epsv(self.mulv({a: 1}, {y: 1})) * self.epsv(self.mulv({x: 1}, {c: 1}))
            if not (s1 == abc == s2):
                return False
        return True


def base_dims(W, p=0):
    """(dim A^R, dim A ⊗_R A, dim Takeuchi) by dense elimination in A⊗A."""
    D = Dense(p)
    n = W.dim
    P = [[0] * n for _ in range(n)]
    for j in range(n):
        for i, c in W.target_proj(j).items():
            P[i][j] = c
    cols = [[P[i][j] for i in range(n)] for j in range(n)]
    base, _ = D.rref(cols)
    r = len(base)
    # base elements as vectors of A
    S = [{i: x for i, x in enumerate(b) if x != 0} for b in base]
    T = []
    for v in S:
        t = {}
        for i, a in v.items():
            for k, c in W.tbar(i).items():
                t[k] = t.get(k, 0) + a * c
        T.append(t)
    N = n * n

    def vec(d):
        out = [0] * N
        for (i, j), c in d.items():
            out[i * n + j] += c
        return out

    rel = []
    for a, b in product(range(n), repeat=2):
        for k in range(r):
            left = {}
            for i, c in W.mulv({a: 1}, S[k]).items():
                left[(i, b)] = left.get((i, b), 0) + c
            for i, c in W.mulv({b: 1}, T[k]).items():
                left[(a, i)] = left.get((a, i), 0) - c
            rel.append(vec(left))
    rel_rank = D.rank(rel)
    ann = D.nullspace(rel, N)          # functionals killing the relations
    cond = []
    for k in range(r):
        M = [[0] * N for _ in range(N)]  # column (a,b) -> s(r)a ⊗ b - a ⊗ t(r)b
        for a, b in product(range(n), repeat=2):
            col = {}
            for i, c in W.mulv(S[k], {a: 1}).items():
                col[(i, b)] = col.get((i, b), 0) + c
            for i, c in W.mulv(T[k], {b: 1}).items():
                col[(a, i)] = col.get((a, i), 0) - c
            for idx, c in enumerate(vec(col)):
                M[idx][a * n + b] = c
        cond.extend(D.matmul(ann, M) if ann else [])
    U = D.nullspace(cond, N) if cond else [[int(i == j) for i in range(N)] for j in range(N)]
    return r, N - rel_rank, len(U) - rel_rank

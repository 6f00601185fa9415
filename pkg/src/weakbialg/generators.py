"""Corpus generators: groupoid weak bialgebras, their duals, and matrix
Frobenius algebras."""

from itertools import permutations, product

from .algebra import Algebra
from .errors import InputError
from .field import QQ
from .frobenius import SepFrobenius
from .linalg import UNIT, LinMap, Mat
from .weak import WeakBialgebra


class FiniteGroup:
    """A group given by a multiplication table on named elements."""

    def __init__(self, elements, table, name="G"):
        self.elements = [str(g) for g in elements]
        self.name = name
        n = len(self.elements)
        if n == 0:
            raise InputError("group must have at least one element", "group")
        if len(set(self.elements)) != n:
            raise InputError("group elements must be distinct", "group")
        idx = {g: i for i, g in enumerate(self.elements)}
        try:
            self.table = [[idx[str(table[i][j])] for j in range(n)] for i in range(n)]
        except (KeyError, IndexError, TypeError):
            raise InputError("group table must be a square table of element names", "group.table") from None
        self._validate()

    def _validate(self):
        n = len(self.elements)
        T = self.table
        for a, b, c in product(range(n), repeat=3):
            if T[T[a][b]][c] != T[a][T[b][c]]:
                raise InputError(f"group table not associative at {self.elements[a]}, "
                                 f"{self.elements[b]}, {self.elements[c]}", "group.table")
        ids = [e for e in range(n) if all(T[e][a] == a == T[a][e] for a in range(n))]
        if not ids:
            raise InputError("group table has no identity", "group.table")
        self.identity = ids[0]
        for a in range(n):
            if not any(T[a][b] == self.identity for b in range(n)):
                raise InputError(f"element {self.elements[a]} has no inverse", "group.table")

    def __len__(self):
        return len(self.elements)

    def mul(self, a, b):
        return self.table[a][b]

    @classmethod
    def cyclic(cls, m):
        if m < 1:
            raise InputError("cyclic group order must be positive", "group")
        return cls([f"z{i}" for i in range(m)],
                   [[f"z{(i + j) % m}" for j in range(m)] for i in range(m)], f"Z{m}")

    @classmethod
    def symmetric3(cls):
        perms = list(permutations(range(3)))
        name = lambda p: "p" + "".join(map(str, p))
        table = [[name(tuple(p[q[i]] for i in range(3))) for q in perms] for p in perms]
        return cls([name(p) for p in perms], table, "S3")

    @classmethod
    def named(cls, text):
        t = str(text).strip().upper()
        if t == "S3":
            return cls.symmetric3()
        if t.startswith("Z") and t[1:].isdigit():
            return cls.cyclic(int(t[1:]))
        raise InputError(f"unknown group {text!r}; use Zm, S3 or an explicit table", "group")


def _morphisms(n, pattern, group):
    """Morphisms as (source, element, target) with element an index into group."""
    if pattern == "discrete":
        return [(x, 0, x) for x in range(n)]
    if pattern == "pair":
        return [(x, 0, y) for x in range(n) for y in range(n)]
    if pattern == "group":
        return [(x, g, y) for x in range(n) for g in range(len(group)) for y in range(n)]
    raise InputError(f"unknown morphism pattern {pattern!r}", "pattern")


def _label(m, n, pattern, group):
    x, g, y = m
    obj = (lambda i: str(i)) if n <= 10 else (lambda i: f"{i}_")
    if pattern == "discrete":
        return f"e{x}"
    if pattern == "pair":
        return f"g{obj(x)}{obj(y)}"
    name = group.elements[g]
    return name if n == 1 else f"{name}@{obj(x)}{obj(y)}"


def gen_groupoid_wba(n, pattern="pair", group=None, field=QQ, dual=False):
    """Groupoid algebra of n objects (or its dual, functions on the groupoid).

    Patterns: ``discrete`` (identities only), ``pair`` (one arrow x → y for
    every x, y) and ``group`` (the pair groupoid times a group G).  Arrows are
    composed as g_{xy} g_{yz} = g_{xz}.
    """
    if not isinstance(n, int) or n < 1:
        raise InputError("number of objects must be a positive integer", "n")
    if pattern == "group":
        if group is None:
            raise InputError("group pattern needs a group", "group")
        if not isinstance(group, FiniteGroup):
            group = FiniteGroup.named(group)
    G = group if pattern == "group" else FiniteGroup(["1"], [["1"]])
    arrows = _morphisms(n, pattern, G)
    labels = [_label(m, n, pattern, G) for m in arrows]
    index = {m: i for i, m in enumerate(arrows)}

    def compose(i, j):
        x, g, y = arrows[i]
        u, h, v = arrows[j]
        if y != u:
            return None
        return index[(x, G.mul(g, h), v)]

    identities = [index[(x, G.identity, x)] for x in range(n)]
    d = len(arrows)
    one = field.one
    if not dual:
        def prod(i, j):
            k = compose(i, j)
            return {} if k is None else {k: 1}
        A = Algebra.from_products(field, labels, prod, {i: 1 for i in identities}, "kG")
        comul = {(i * d + i, i): one for i in range(d)}
        counit = {(0, i): one for i in range(d)}
    else:
        labels = [f"d{lab}" for lab in labels]
        A = Algebra.from_products(field, labels, lambda i, j: {i: 1} if i == j else {},
                                  {i: 1 for i in range(d)}, "k^G")
        comul = {}
        for i, j in product(range(d), repeat=2):
            k = compose(i, j)
            if k is not None:
                comul[(i * d + j, k)] = one
        counit = {(0, i): one for i in identities}
    V = A.space
    D = LinMap(V, V.tensor(V), Mat.from_entries(field, (d * d, d), [(r, c, x) for (r, c), x in comul.items()]))
    e = LinMap(V, UNIT, Mat.from_entries(field, (1, d), [(r, c, x) for (r, c), x in counit.items()]))
    return WeakBialgebra(A, D, e)


def matrix_algebra(n, field=QQ, name=None):
    labels = [f"E{i}{j}" if n <= 10 else f"E{i}_{j}" for i in range(n) for j in range(n)]

    def prod(a, b):
        i, j = divmod(a, n)
        k, l = divmod(b, n)
        return {i * n + l: 1} if j == k else {}

    return Algebra.from_products(field, labels, prod, {i * n + i: 1 for i in range(n)},
                                 name or f"M{n}")


def gen_matrix_frobenius(n, field=QQ):
    """Mₙ with ψ = n·tr and e = (1/n) Σ E_ij ⊗ E_ji."""
    if not isinstance(n, int) or n < 1:
        raise InputError("matrix size must be a positive integer", "n")
    p = field.characteristic
    if p and n % p == 0:
        raise InputError(f"characteristic {p} divides {n}; 1/{n} is undefined", "field")
    R = matrix_algebra(n, field)
    d = n * n
    psi = LinMap(R.space, UNIT, Mat.from_entries(
        field, (1, d), [(0, i * n + i, field.convert(n)) for i in range(n)]))
    inv = field.convert(1, n)
    e = Mat.column(field, d * d, {(i * n + j) * d + (j * n + i): inv
                                  for i in range(n) for j in range(n)})
    return SepFrobenius(R, psi, e)


def diagonal_frobenius(n, field=QQ):
    """kⁿ with ψ(e_x) = 1 and e = Σ e_x ⊗ e_x."""
    R = Algebra.from_products(field, [f"e{x}" for x in range(n)],
                              lambda i, j: {i: 1} if i == j else {}, {i: 1 for i in range(n)}, f"k^{n}")
    psi = LinMap(R.space, UNIT, Mat.from_entries(field, (1, n), [(0, i, field.one) for i in range(n)]))
    e = Mat.column(field, n * n, {i * n + i: field.one for i in range(n)})
    return SepFrobenius(R, psi, e)


__all__ = ["FiniteGroup", "gen_groupoid_wba", "gen_matrix_frobenius", "matrix_algebra",
           "diagonal_frobenius"]

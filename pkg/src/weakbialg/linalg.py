"""Sparse exact linear algebra over Q and F_p.

Matrices are dict-of-dict sparse (no stored zeros).  Based spaces are label
tuples; tensor products flatten left to right (index of v_i ⊗ w_j is
``i * dim W + j``), so associators and unitors of the base category are
identity matrices.  Subspaces are stored in reduced row echelon form of their
spanning rows, which is canonical: equal subspaces compare equal.
"""

from dataclasses import dataclass
from functools import reduce

from .errors import AxiomError, ShapeError
from .field import Field

TENSOR_SEP = "⊗"


class Mat:
    """Immutable sparse matrix over a :class:`Field`."""

    __slots__ = ("field", "shape", "rows", "_t")

    def __init__(self, field, shape, rows):
        self.field = field
        self.shape = (int(shape[0]), int(shape[1]))
        self.rows = rows
        self._t = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, field, shape):
        return cls(field, shape, {})

    @classmethod
    def eye(cls, field, n):
        one = field.one
        return cls(field, (n, n), {i: {i: one} for i in range(n)})

    @classmethod
    def from_entries(cls, field, shape, entries):
        """Sum ``(i, j, value)`` triples into a matrix; values are converted."""
        m, n = shape
        acc = {}
        for i, j, x in entries:
            if not (0 <= i < m and 0 <= j < n):
                raise ShapeError(f"entry ({i}, {j}) outside shape {shape}")
            row = acc.setdefault(i, {})
            row[j] = row.get(j, 0) + x
        return cls(field, shape, _clean(field, acc))

    @classmethod
    def from_dense(cls, field, data, ncols=None):
        data = [list(r) for r in data]
        m = len(data)
        n = ncols if ncols is not None else (len(data[0]) if data else 0)
        entries = []
        for i, r in enumerate(data):
            if len(r) != n:
                raise ShapeError("ragged dense matrix")
            for j, x in enumerate(r):
                if x != 0:
                    entries.append((i, j, field.convert(x) if not _is_elem(field, x) else x))
        return cls.from_entries(field, (m, n), entries)

    @classmethod
    def column(cls, field, n, values):
        """Column vector of length ``n`` from a ``{index: value}`` mapping."""
        return cls.from_entries(field, (n, 1), ((i, 0, x) for i, x in values.items()))

    @classmethod
    def unit_column(cls, field, n, i):
        return cls(field, (n, 1), {i: {0: field.one}})

    # -- basic queries ------------------------------------------------------

    @property
    def nrows(self):
        return self.shape[0]

    @property
    def ncols(self):
        return self.shape[1]

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    def is_zero(self):
        return not self.rows

    def entry(self, i, j):
        return self.rows.get(i, {}).get(j, self.field.zero)

    def dense(self):
        z = self.field.zero
        out = [[z] * self.ncols for _ in range(self.nrows)]
        for i, r in self.rows.items():
            for j, x in r.items():
                out[i][j] = x
        return out

    def items(self):
        for i in sorted(self.rows):
            r = self.rows[i]
            for j in sorted(r):
                yield i, j, r[j]

    def column_dict(self, j):
        return dict(self.T.rows.get(j, {}))

    def col(self, j):
        r = self.T.rows.get(j)
        return Mat(self.field, (self.nrows, 1), {i: {0: x} for i, x in r.items()} if r else {})

    def vector_dict(self):
        """Entries of a column vector as ``{index: value}``."""
        if self.ncols != 1:
            raise ShapeError("not a column vector")
        return {i: r[0] for i, r in self.rows.items()}

    def __repr__(self):
        return f"Mat({self.field}, {self.shape}, nnz={self.nnz()})"

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    # -- arithmetic -----------------------------------------------------------

    @property
    def T(self):
        if self._t is None:
            t = {}
            for i, r in self.rows.items():
                for j, x in r.items():
                    t.setdefault(j, {})[i] = x
            self._t = Mat(self.field, (self.ncols, self.nrows), t)
            self._t._t = self
        return self._t

    def _check_same(self, other):
        if self.shape != other.shape or self.field != other.field:
            raise ShapeError(f"shape/field mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return Mat(self.field, self.shape, _combine(self.field, self.rows, other.rows, 1))

    def __sub__(self, other):
        self._check_same(other)
        return Mat(self.field, self.shape, _combine(self.field, self.rows, other.rows, -1))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        f = self.field
        c = f.norm(c)
        if c == 0:
            return Mat.zeros(f, self.shape)
        rows = {i: {j: f.norm(c * x) for j, x in r.items()} for i, r in self.rows.items()}
        return Mat(f, self.shape, rows)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        orows = other.rows
        out = {}
        for i, r in self.rows.items():
            acc = {}
            for k, a in r.items():
                ok = orows.get(k)
                if not ok:
                    continue
                for j, b in ok.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = _clean_row(f, acc)
            if acc:
                out[i] = acc
        return Mat(f, (self.nrows, other.ncols), out)

    def kron(self, other):
        f = self.field
        m2, n2 = other.shape
        out = {}
        for i1, r1 in self.rows.items():
            for i2, r2 in other.rows.items():
                row = {}
                for j1, a in r1.items():
                    base = j1 * n2
                    for j2, b in r2.items():
                        row[base + j2] = f.norm(a * b)
                out[i1 * m2 + i2] = row
        return Mat(f, (self.nrows * m2, self.ncols * n2), out)

    def hstack(self, *others):
        mats = (self,) + others
        n0 = 0
        out = {}
        for M in mats:
            if M.nrows != self.nrows:
                raise ShapeError("hstack row mismatch")
            for i, r in M.rows.items():
                out.setdefault(i, {}).update({j + n0: x for j, x in r.items()})
            n0 += M.ncols
        return Mat(self.field, (self.nrows, n0), out)

    def vstack(self, *others):
        mats = (self,) + others
        m0 = 0
        out = {}
        for M in mats:
            if M.ncols != self.ncols:
                raise ShapeError("vstack column mismatch")
            for i, r in M.rows.items():
                out[i + m0] = dict(r)
            m0 += M.nrows
        return Mat(self.field, (m0, self.ncols), out)

    def select_cols(self, cols):
        index = {c: k for k, c in enumerate(cols)}
        out = {}
        for i, r in self.rows.items():
            nr = {index[j]: x for j, x in r.items() if j in index}
            if nr:
                out[i] = nr
        return Mat(self.field, (self.nrows, len(cols)), out)

    def select_rows(self, rows):
        out = {}
        for k, i in enumerate(rows):
            r = self.rows.get(i)
            if r:
                out[k] = dict(r)
        return Mat(self.field, (len(rows), self.ncols), out)

    def rank(self):
        return len(rref(self.rows.values(), self.field))

    def inverse(self):
        n = self.nrows
        if self.ncols != n:
            raise ShapeError("inverse of non-square matrix")
        aug = self.hstack(Mat.eye(self.field, n))
        red = rref(aug.rows.values(), self.field)
        if len(red) != n or any(p != k for k, (p, _) in enumerate(red)):
            raise ZeroDivisionError("matrix is singular")
        rows = {}
        for k, (_, r) in enumerate(red):
            nr = {j - n: x for j, x in r.items() if j >= n}
            if nr:
                rows[k] = nr
        return Mat(self.field, (n, n), rows)


def _is_elem(field, x):
    if field.characteristic == 0:
        return type(x) is type(field.one)
    return isinstance(x, int) and 0 <= x < field.characteristic


def _clean_row(field, row):
    if field.characteristic == 0:
        return {j: x for j, x in row.items() if x != 0}
    p = field.characteristic
    out = {}
    for j, x in row.items():
        x %= p
        if x:
            out[j] = x
    return out


def _clean(field, rows):
    out = {}
    for i, r in rows.items():
        r = _clean_row(field, r)
        if r:
            out[i] = r
    return out


def _combine(field, a, b, sign):
    out = {i: dict(r) for i, r in a.items()}
    for i, r in b.items():
        row = out.setdefault(i, {})
        for j, x in r.items():
            row[j] = row.get(j, 0) + sign * x
    return _clean(field, out)


def rref(rows, field):
    """Reduced row echelon form of the span of sparse rows.

    Returns a list of ``(pivot, row)`` sorted by pivot; each row has a 1 at its
    pivot and zeros in every other pivot column.  This is the canonical basis
    of the row span.
    """
    f = field
    piv = {}
    for r in rows:
        r = dict(r)
        hits = [c for c in r if c in piv]
        for c in hits:
            a = r.get(c)
            if not a:
                continue
            for j, x in piv[c].items():
                r[j] = r.get(j, 0) - a * x
        r = _clean_row(f, r)
        if not r:
            continue
        p = min(r)
        inv = f.inv(r[p])
        if inv != 1:
            r = {j: f.norm(x * inv) for j, x in r.items()}
        for c, pr in piv.items():
            a = pr.get(p)
            if a:
                for j, x in r.items():
                    pr[j] = pr.get(j, 0) - a * x
                piv[c] = _clean_row(f, pr)
        piv[p] = r
    return [(p, piv[p]) for p in sorted(piv)]


# ---------------------------------------------------------------------------
# based spaces and linear maps


@dataclass(frozen=True)
class BasedSpace:
    labels: tuple

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            raise ShapeError(f"duplicate basis labels in {labels[:8]}...")

    @property
    def dim(self):
        return len(self.labels)

    @classmethod
    def standard(cls, n, prefix="e"):
        return cls(tuple(f"{prefix}{i}" for i in range(n)))

    def tensor(self, other):
        if self == UNIT:
            return other
        if other == UNIT:
            return self
        return BasedSpace(tuple(f"{a}{TENSOR_SEP}{b}" for a in self.labels for b in other.labels))

    __matmul__ = tensor

    def index(self, label):
        return self.labels.index(label)

    def __repr__(self):
        if self.dim <= 6:
            return f"BasedSpace({list(self.labels)})"
        return f"BasedSpace(dim={self.dim})"


UNIT = BasedSpace(("1",))
"""The one-dimensional ground space k; tensoring with it is the identity."""


def tensor_spaces(*spaces):
    return reduce(BasedSpace.tensor, spaces, UNIT)


@dataclass(frozen=True, eq=False)
class LinMap:
    """A matrix between based spaces; ``f @ g`` is the composite f∘g."""

    domain: BasedSpace
    codomain: BasedSpace
    mat: Mat

    def __post_init__(self):
        if self.mat.shape != (self.codomain.dim, self.domain.dim):
            raise ShapeError(
                f"matrix shape {self.mat.shape} does not fit "
                f"{self.domain.dim} -> {self.codomain.dim}")

    @property
    def field(self):
        return self.mat.field

    @classmethod
    def identity(cls, space, field):
        return cls(space, space, Mat.eye(field, space.dim))

    @classmethod
    def zero(cls, domain, codomain, field):
        return cls(domain, codomain, Mat.zeros(field, (codomain.dim, domain.dim)))

    @classmethod
    def from_columns(cls, domain, codomain, columns, field):
        """Build from the images of basis vectors (column Mats)."""
        entries = []
        for j, c in enumerate(columns):
            for i, r in c.rows.items():
                entries.append((i, j, r[0]))
        return cls(domain, codomain, Mat.from_entries(field, (codomain.dim, domain.dim), entries))

    @classmethod
    def from_dense(cls, domain, codomain, data, field):
        return cls(domain, codomain, Mat.from_dense(field, data, ncols=domain.dim))

    def __matmul__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        if other.codomain != self.domain:
            raise ShapeError(f"cannot compose: {other.codomain!r} is not {self.domain!r}")
        return LinMap(other.domain, self.codomain, self.mat @ other.mat)

    def __call__(self, v):
        if v.nrows != self.domain.dim:
            raise ShapeError("vector length does not match domain")
        return self.mat @ v

    def _check_parallel(self, other):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ShapeError("maps are not parallel")

    def __add__(self, other):
        self._check_parallel(other)
        return LinMap(self.domain, self.codomain, self.mat + other.mat)

    def __sub__(self, other):
        self._check_parallel(other)
        return LinMap(self.domain, self.codomain, self.mat - other.mat)

    def __neg__(self):
        return LinMap(self.domain, self.codomain, -self.mat)

    def scale(self, c):
        return LinMap(self.domain, self.codomain, self.mat.scale(c))

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.mat == other.mat)

    __hash__ = None

    def tensor(self, other):
        return tensor(self, other)

    def is_zero(self):
        return self.mat.is_zero()

    def rank(self):
        return self.mat.rank()

    def col(self, j):
        return self.mat.col(j)

    def inverse(self):
        return LinMap(self.codomain, self.domain, self.mat.inverse())

    def is_invertible(self):
        return self.domain.dim == self.codomain.dim and self.rank() == self.domain.dim

    def __repr__(self):
        return f"LinMap({self.domain.dim} -> {self.codomain.dim}, nnz={self.mat.nnz()})"


def tensor(f, g):
    """Kronecker product of linear maps with left-to-right flattening."""
    return LinMap(f.domain.tensor(g.domain), f.codomain.tensor(g.codomain), f.mat.kron(g.mat))


def tensor_maps(*maps):
    return reduce(tensor, maps)


def swap(V, W, field):
    """The symmetry V⊗W → W⊗V."""
    m, n = V.dim, W.dim
    rows = {j * m + i: {i * n + j: field.one} for i in range(m) for j in range(n)}
    return LinMap(V.tensor(W), W.tensor(V), Mat(field, (m * n, m * n), rows))


def element_map(space, vector, field):
    """The map k → space picking out ``vector``."""
    return LinMap(UNIT, space, vector if vector.ncols == 1 else vector.T)


def vector(field, n, values):
    return Mat.column(field, n, values)


# ---------------------------------------------------------------------------
# subspaces


class SubSpace:
    """Subspace of a based space, stored as a canonical RREF row basis.

    ``generators`` gives the spanning vectors as matrix columns (reduced column
    echelon form).
    """

    __slots__ = ("ambient", "field", "rows")

    def __init__(self, ambient, field, rows):
        self.ambient = ambient
        self.field = field
        self.rows = tuple(rows)

    @classmethod
    def span(cls, ambient, vectors, field):
        """Span of column vectors; ``vectors`` is a Mat (columns) or an iterable."""
        if isinstance(vectors, Mat):
            raw = vectors.T.rows.values()
        else:
            raw = [{i: r[0] for i, r in v.rows.items()} for v in vectors]
        return cls(ambient, field, rref(raw, field))

    @classmethod
    def zero(cls, ambient, field):
        return cls(ambient, field, ())

    @classmethod
    def full(cls, ambient, field):
        return cls(ambient, field, [(i, {i: field.one}) for i in range(ambient.dim)])

    @property
    def dim(self):
        return len(self.rows)

    @property
    def pivots(self):
        return [p for p, _ in self.rows]

    def basis(self):
        """Basis as a (dim × ambient.dim) Mat of rows."""
        return Mat(self.field, (self.dim, self.ambient.dim), {k: dict(r) for k, (_, r) in enumerate(self.rows)})

    @property
    def generators(self):
        return self.basis().T

    def vectors(self):
        n = self.ambient.dim
        return [Mat(self.field, (n, 1), {j: {0: x} for j, x in r.items()}) for _, r in self.rows]

    def inclusion(self, space=None):
        space = space or BasedSpace.standard(self.dim, "w")
        return LinMap(space, self.ambient, self.generators)

    def coordinates(self, v):
        """Coordinates of column vector ``v`` in the basis, or None if v ∉ W."""
        d = v.vector_dict()
        coeffs = {}
        rest = dict(d)
        for k, (p, r) in enumerate(self.rows):
            a = rest.get(p)
            if a:
                coeffs[k] = a
                for j, x in r.items():
                    rest[j] = rest.get(j, 0) - a * x
        if _clean_row(self.field, rest):
            return None
        return Mat.column(self.field, self.dim, coeffs)

    def contains(self, v):
        return self.coordinates(v) is not None

    def contains_space(self, other):
        return all(self.contains(v) for v in other.vectors())

    def __contains__(self, v):
        return self.contains(v)

    def __eq__(self, other):
        if not isinstance(other, SubSpace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    __hash__ = None

    def __add__(self, other):
        _same_ambient([self, other])
        return SubSpace(self.ambient, self.field,
                        rref([r for _, r in self.rows] + [r for _, r in other.rows], self.field))

    def annihilator_rows(self):
        """Rows of a matrix whose kernel is exactly this subspace."""
        return kernel_rows(self.basis())

    def __repr__(self):
        return f"SubSpace(dim={self.dim} in {self.ambient.dim})"


def _same_ambient(subs):
    amb = {s.ambient for s in subs}
    if len(amb) > 1:
        raise ShapeError("subspaces live in different ambient spaces")


def kernel_rows(M):
    """RREF basis (list of (pivot,row)) of the null space of Mat M."""
    f = M.field
    n = M.ncols
    red = rref(M.rows.values(), f)
    pivset = {p for p, _ in red}
    vecs = []
    for free in range(n):
        if free in pivset:
            continue
        v = {free: f.one}
        for p, r in red:
            a = r.get(free)
            if a:
                v[p] = f.norm(-a)
        vecs.append(v)
    return rref(vecs, f)


def kernel(f):
    """{v : f(v) = 0} as a canonical subspace of f.domain."""
    return SubSpace(f.domain, f.field, kernel_rows(f.mat))


def image(f):
    return SubSpace(f.codomain, f.field, rref(f.mat.T.rows.values(), f.field))


def solve(f, b):
    """Some x with f(x) = b, or None when b is not in the image of f."""
    M = f.mat
    n = M.ncols
    red = rref(M.hstack(b).rows.values(), f.field)
    x = {}
    for p, r in red:
        if p == n:
            return None
        if n in r:
            x[p] = r[n]
    return Mat.column(f.field, n, x)


def equalizer(f, g):
    return kernel(f - g)


def intersect(subs, ambient=None, field=None):
    """Intersection of subspaces; the empty intersection is the ambient space."""
    subs = list(subs)
    if not subs:
        if ambient is None or field is None:
            raise ValueError("empty intersection needs ambient and field")
        return SubSpace.full(ambient, field)
    _same_ambient(subs)
    if len(subs) == 1:
        return subs[0]
    amb, fld = subs[0].ambient, subs[0].field
    ann = []
    for s in subs:
        ann.extend(r for _, r in s.annihilator_rows())
    A = Mat(fld, (len(ann), amb.dim), {k: r for k, r in enumerate(ann)})
    return SubSpace(amb, fld, kernel_rows(A))


# ---------------------------------------------------------------------------
# quotients and coequalizers


@dataclass(frozen=True, eq=False)
class Quotient:
    """V/W realized on the non-pivot coordinates of W's echelon basis."""

    ambient: BasedSpace
    subspace: SubSpace
    space: BasedSpace
    projection: LinMap
    section: LinMap

    @property
    def field(self):
        return self.projection.field

    def kills(self, h):
        """True iff h vanishes on the subspace (h factors through the quotient)."""
        B = self.subspace.basis()
        return (h.mat @ B.T).is_zero()

    def descend(self, h, what="map"):
        """The unique h̄ with h̄∘projection = h; raises if h is not constant on classes."""
        if h.domain != self.ambient:
            raise ShapeError("map does not start at the quotiented space")
        if not self.kills(h):
            raise AxiomError(f"{what} is not well defined on the quotient")
        return h @ self.section

    def project(self, v):
        return self.projection(v)

    def lift(self, v):
        return self.section(v)


def quotient(V, W):
    f = W.field
    if W.ambient != V:
        raise ShapeError("subspace does not live in the given space")
    if W.dim == 0:
        I = LinMap.identity(V, f)
        return Quotient(V, W, V, I, I)
    pivots = set(W.pivots)
    free = [j for j in range(V.dim) if j not in pivots]
    idx = {j: k for k, j in enumerate(free)}
    Q = BasedSpace(tuple(V.labels[j] for j in free))
    entries = [(idx[j], j, f.one) for j in free]
    for p, r in W.rows:
        for j, x in r.items():
            if j != p:
                entries.append((idx[j], p, f.norm(-x)))
    P = Mat.from_entries(f, (len(free), V.dim), entries)
    S = Mat(f, (V.dim, len(free)), {j: {idx[j]: f.one} for j in free})
    return Quotient(V, W, Q, LinMap(V, Q, P), LinMap(Q, V, S))


def coequalizer(f, g):
    """Coequalizer of a parallel pair: the codomain modulo image(f − g)."""
    if f.domain != g.domain or f.codomain != g.codomain:
        raise ShapeError("coequalizer of non-parallel maps")
    return quotient(f.codomain, image(f - g))


__all__ = [
    "Field", "Mat", "BasedSpace", "UNIT", "LinMap", "SubSpace", "Quotient",
    "tensor", "tensor_maps", "tensor_spaces", "swap", "kernel", "image",
    "equalizer", "intersect", "quotient", "coequalizer", "rref", "vector",
    "element_map", "solve",
]

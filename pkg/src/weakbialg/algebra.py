"""Algebras, modules and bimodules given by structure constants.

Tensor products over an algebra are realized as coequalizer quotients of the
plain tensor product.  Iterated products are always quotients of the flat
tensor power by one relation span, so ⊗_R is strictly associative in
coordinates.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import AxiomError, ShapeError
from .linalg import (
    UNIT, BasedSpace, LinMap, Mat, SubSpace, coequalizer, image, kernel, quotient,
    rref, tensor, tensor_maps, tensor_spaces,
)
from .report import Report, Witness


@dataclass(frozen=True, eq=False)
class Algebra:
    """Unital associative algebra: ``mul: A⊗A → A`` and a unit vector."""

    space: BasedSpace
    mul: LinMap
    unit: Mat
    name: str = "A"

    def __post_init__(self):
        V = self.space
        if self.mul.domain != V.tensor(V) or self.mul.codomain != V:
            raise ShapeError("multiplication must map A⊗A to A")
        if self.unit.shape != (V.dim, 1):
            raise ShapeError("unit must be a column vector in A")

    @classmethod
    def from_products(cls, field, labels, product, unit, name="A"):
        """Build from ``product(i, j) -> {k: coeff}`` on basis indices and a
        ``{k: coeff}`` unit."""
        V = BasedSpace(tuple(labels))
        n = V.dim
        entries = []
        for i in range(n):
            for j in range(n):
                for k, c in product(i, j).items():
                    entries.append((k, i * n + j, field.convert(c)))
        mul = LinMap(V.tensor(V), V, Mat.from_entries(field, (n, n * n), entries))
        u = Mat.column(field, n, {k: field.convert(c) for k, c in unit.items()})
        return cls(V, mul, u, name)

    @property
    def field(self):
        return self.mul.field

    @property
    def dim(self):
        return self.space.dim

    def basis(self, i):
        return Mat.unit_column(self.field, self.dim, i)

    def element(self, values):
        return Mat.column(self.field, self.dim, values)

    @property
    def one(self):
        return self.unit

    @cached_property
    def unit_map(self):
        return LinMap(UNIT, self.space, self.unit)

    @cached_property
    def identity(self):
        return LinMap.identity(self.space, self.field)

    def multiply(self, u, v):
        return self.mul.mat @ u.kron(v)

    @cached_property
    def _table(self):
        table = {}
        for k, col, x in self.mul.mat.items():
            table.setdefault(col, []).append((k, x))
        return table

    def power_product(self, u, v, k=2):
        """Factorwise product of two column vectors of A^{⊗k}."""
        n = self.dim
        f = self.field
        table = self._table
        out = {}
        for iu, ru in u.rows.items():
            ui = _digits(iu, n, k)
            for iv, rv in v.rows.items():
                vi = _digits(iv, n, k)
                terms = {0: ru[0] * rv[0]}
                for p in range(k):
                    prod = table.get(ui[p] * n + vi[p])
                    if not prod:
                        terms = None
                        break
                    terms2 = {}
                    for idx, c in terms.items():
                        for kk, x in prod:
                            key = idx * n + kk
                            terms2[key] = terms2.get(key, 0) + c * x
                    terms = terms2
                if terms:
                    for idx, c in terms.items():
                        out[idx] = out.get(idx, 0) + c
        return Mat.column(f, n ** k, out)

    def left_mult(self, a):
        """x ↦ a·x as a LinMap on A."""
        I = Mat.eye(self.field, self.dim)
        return LinMap(self.space, self.space, self.mul.mat @ a.kron(I))

    def right_mult(self, a):
        I = Mat.eye(self.field, self.dim)
        return LinMap(self.space, self.space, self.mul.mat @ I.kron(a))

    @cached_property
    def left_mults(self):
        return [self.left_mult(self.basis(i)) for i in range(self.dim)]

    @cached_property
    def right_mults(self):
        return [self.right_mult(self.basis(i)) for i in range(self.dim)]

    def opposite(self):
        from .linalg import swap
        return Algebra(self.space, self.mul @ swap(self.space, self.space, self.field),
                       self.unit, self.name + "^op")

    def same_as(self, other):
        return self is other or (
            self.space == other.space and self.mul == other.mul and self.unit == other.unit)

    def structure_constant(self, i, j, k):
        return self.mul.mat.entry(k, i * self.dim + j)

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim}, {self.field})"


def _digits(i, n, k):
    d = [0] * k
    for p in range(k - 1, -1, -1):
        i, d[p] = divmod(i, n)
    return d


def check_algebra(A):
    """Associativity and both unit laws, on all basis triples/elements."""
    rep = Report(f"algebra {A.name}", A.field)
    n = A.dim
    I = A.identity
    m = A.mul
    rep.equal("associativity", m @ tensor(m, I), m @ tensor(I, m), (n, n, n))
    rep.equal("left unit", m @ tensor(A.unit_map, I), I, (n,))
    rep.equal("right unit", m @ tensor(I, A.unit_map), I, (n,))
    return rep


@dataclass(frozen=True, eq=False)
class AlgMorphism:
    source: Algebra
    target: Algebra
    map: LinMap

    def __post_init__(self):
        if self.map.domain != self.source.space or self.map.codomain != self.target.space:
            raise ShapeError("morphism map does not fit source/target")

    def __call__(self, v):
        return self.map(v)


def check_morphism(f, name="morphism"):
    S, T = f.source, f.target
    rep = Report(name, S.field)
    rep.equal("unit preserved", f.map @ S.unit_map, T.unit_map)
    rep.equal("multiplicative", f.map @ S.mul, T.mul @ tensor(f.map, f.map), (S.dim, S.dim))
    return rep


def identity_morphism(A):
    return AlgMorphism(A, A, A.identity)


def subalgebra(A, W, name="B", labels=None):
    """The subalgebra on subspace W with its inclusion; raises on non-closure."""
    f = A.field
    vecs = W.vectors()
    if labels is None:
        labels = []
        for k, v in enumerate(vecs):
            d = v.vector_dict()
            if len(d) == 1 and next(iter(d.values())) == 1:
                labels.append(A.space.labels[next(iter(d))])
            else:
                labels.append(f"{name.lower()}{k}")
    prods = {}
    for i, u in enumerate(vecs):
        for j, v in enumerate(vecs):
            c = W.coordinates(A.multiply(u, v))
            if c is None:
                raise AxiomError(f"subspace not closed under multiplication at ({i}, {j})")
            prods[i, j] = c.vector_dict()
    cu = W.coordinates(A.unit)
    if cu is None:
        raise AxiomError("subspace does not contain the unit")
    B = Algebra.from_products(f, labels, lambda i, j: prods[i, j], cu.vector_dict(), name)
    inc = AlgMorphism(B, A, LinMap(B.space, A.space, W.generators))
    return B, inc


# ---------------------------------------------------------------------------
# modules


@dataclass(frozen=True, eq=False)
class RightModule:
    algebra: Algebra
    space: BasedSpace
    act: LinMap
    name: str = "X"

    def __post_init__(self):
        if self.act.domain != self.space.tensor(self.algebra.space) or self.act.codomain != self.space:
            raise ShapeError("right action must map X⊗A to X")

    @property
    def field(self):
        return self.act.field

    @property
    def dim(self):
        return self.space.dim

    @classmethod
    def regular(cls, A, name=None):
        return cls(A, A.space, A.mul, name or A.name)

    def right_mult(self, a):
        I = Mat.eye(self.field, self.dim)
        return LinMap(self.space, self.space, self.act.mat @ I.kron(a))

    @cached_property
    def right_mults(self):
        A = self.algebra
        return [self.right_mult(A.basis(i)) for i in range(A.dim)]


def check_module(X):
    A = X.algebra
    rep = Report(f"right module {X.name}", X.field)
    I = LinMap.identity(X.space, X.field)
    IA = A.identity
    rep.equal("associativity", X.act @ tensor(X.act, IA), X.act @ tensor(I, A.mul), (X.dim, A.dim, A.dim))
    rep.equal("unit", X.act @ tensor(I, A.unit_map), I, (X.dim,))
    return rep


@dataclass(frozen=True, eq=False)
class Bimodule:
    """Left R-action ``lact: R⊗X → X`` commuting with right S-action ``ract: X⊗S → X``."""

    left: Algebra
    right: Algebra
    space: BasedSpace
    lact: LinMap
    ract: LinMap
    name: str = "X"

    def __post_init__(self):
        if self.lact.domain != self.left.space.tensor(self.space) or self.lact.codomain != self.space:
            raise ShapeError("left action must map R⊗X to X")
        if self.ract.domain != self.space.tensor(self.right.space) or self.ract.codomain != self.space:
            raise ShapeError("right action must map X⊗S to X")

    @property
    def field(self):
        return self.lact.field

    @property
    def dim(self):
        return self.space.dim

    @classmethod
    def regular(cls, R, name=None):
        return cls(R, R, R.space, R.mul, R.mul, name or R.name)

    def restrict(self, left=None, right=None, name=None):
        """Pull the actions back along algebra morphisms into ``left``/``right``."""
        I = LinMap.identity(self.space, self.field)
        L, lact = self.left, self.lact
        if left is not None:
            L, lact = left.source, self.lact @ tensor(left.map, I)
        S, ract = self.right, self.ract
        if right is not None:
            S, ract = right.source, self.ract @ tensor(I, right.map)
        return Bimodule(L, S, self.space, lact, ract, name or self.name)

    def left_mult(self, r):
        I = Mat.eye(self.field, self.dim)
        return LinMap(self.space, self.space, self.lact.mat @ r.kron(I))

    def right_mult(self, r):
        I = Mat.eye(self.field, self.dim)
        return LinMap(self.space, self.space, self.ract.mat @ I.kron(r))


def check_bimodule(X):
    R, S = X.left, X.right
    rep = Report(f"bimodule {X.name}", X.field)
    I = LinMap.identity(X.space, X.field)
    lam, rho = X.lact, X.ract
    n = X.dim
    rep.equal("left associativity", lam @ tensor(R.identity, lam), lam @ tensor(R.mul, I), (R.dim, R.dim, n))
    rep.equal("left unit", lam @ tensor(R.unit_map, I), I, (n,))
    rep.equal("right associativity", rho @ tensor(rho, S.identity), rho @ tensor(I, S.mul), (n, S.dim, S.dim))
    rep.equal("right unit", rho @ tensor(I, S.unit_map), I, (n,))
    rep.equal("actions commute", lam @ tensor(R.identity, rho), rho @ tensor(lam, S.identity), (R.dim, n, S.dim))
    return rep


def check_bimodule_map(f, X, Y, name="bimodule map"):
    """f: X → Y commutes with both actions."""
    rep = Report(name, X.field)
    rep.equal("left linear", f @ X.lact, Y.lact @ tensor(X.left.identity, f), (X.left.dim, X.dim))
    rep.equal("right linear", f @ X.ract, Y.ract @ tensor(f, X.right.identity), (X.dim, X.right.dim))
    return rep


# ---------------------------------------------------------------------------
# tensor products over an algebra


@dataclass(frozen=True, eq=False)
class TensorOver:
    """X1 ⊗_R X2 ⊗_R ... as a quotient of the flat tensor product."""

    factors: tuple
    over: Algebra
    quotient: object
    bimodule: Bimodule

    @property
    def space(self):
        return self.quotient.space

    @property
    def projection(self):
        return self.quotient.projection

    @property
    def section(self):
        return self.quotient.section

    @property
    def relations(self):
        return self.quotient.subspace

    @property
    def flat(self):
        return self.quotient.ambient

    @property
    def field(self):
        return self.projection.field

    @property
    def dim(self):
        return self.space.dim

    def descend(self, h, what="map"):
        return self.quotient.descend(h, what)

    def project(self, v):
        return self.projection(v)

    def lift(self, v):
        return self.section(v)


def relation_span(factors):
    """Span of the balancing relations of X1 ⊗ ... ⊗ Xn over adjacent algebras."""
    f = factors[0].field
    flat = tensor_spaces(*(X.space for X in factors))
    rows = []
    for i in range(len(factors) - 1):
        X, Y = factors[i], factors[i + 1]
        pre = [LinMap.identity(Z.space, f) for Z in factors[:i]]
        post = [LinMap.identity(Z.space, f) for Z in factors[i + 2:]]
        a = tensor_maps(*pre, tensor(X.ract, LinMap.identity(Y.space, f)), *post)
        b = tensor_maps(*pre, tensor(LinMap.identity(X.space, f), Y.lact), *post)
        rows.extend((a - b).mat.T.rows.values())
    return SubSpace(flat, f, rref(rows, f))


def _check_chain(factors, over):
    for X, Y in zip(factors, factors[1:]):
        if not X.right.same_as(Y.left):
            raise ShapeError(f"cannot tensor {X.name} and {Y.name}: algebras differ")
    if over is not None and len(factors) > 1 and not factors[0].right.same_as(over):
        raise ShapeError("tensor factors are not bimodules over the given algebra")


def tensor_over(X, Y, over=None, name=None):
    """X ⊗_R Y: the coequalizer of ρ_X⊗Y and X⊗λ_Y, with the outer actions."""
    return tensor_over_many([X, Y], over, name)


def tensor_over_many(factors, over=None, name=None):
    factors = tuple(factors)
    _check_chain(factors, over)
    f = factors[0].field
    R = factors[0].right if len(factors) > 1 else over
    if len(factors) == 2:
        X, Y = factors
        q = coequalizer(tensor(X.ract, LinMap.identity(Y.space, f)),
                        tensor(LinMap.identity(X.space, f), Y.lact))
    else:
        W = relation_span(factors)
        q = quotient(W.ambient, W)
    first, last = factors[0], factors[-1]
    Imid = LinMap.identity(tensor_spaces(*(Z.space for Z in factors[1:])), f) if len(factors) > 1 else None
    Ipre = LinMap.identity(tensor_spaces(*(Z.space for Z in factors[:-1])), f) if len(factors) > 1 else None
    if len(factors) == 1:
        lh, rh = first.lact, first.ract
    else:
        lh = q.projection @ tensor(first.lact, Imid)
        rh = q.projection @ tensor(Ipre, last.ract)
    L, S = first.left, last.right
    lact = _descend_action(lh, q, L, left=True)
    ract = _descend_action(rh, q, S, left=False)
    nm = name or "⊗".join(Z.name for Z in factors)
    bim = Bimodule(L, S, q.space, lact, ract, nm)
    return TensorOver(factors, R, q, bim)


def _descend_action(h, q, alg, left):
    f = h.field
    B = q.subspace.basis().T
    Ia = Mat.eye(f, alg.dim)
    kill = h.mat @ (Ia.kron(B) if left else B.kron(Ia))
    if not kill.is_zero():
        raise AxiomError("outer action is not well defined on the tensor product")
    Ia_map = alg.identity
    lift = tensor(Ia_map, q.section) if left else tensor(q.section, Ia_map)
    return h @ lift


def induced_on_quotient(f, g, src, tgt):
    """The unique f⊗_R g with (f⊗_R g)∘π_src = π_tgt∘(f⊗g); balance is verified."""
    h = tgt.projection @ tensor(f, g)
    return src.descend(h, "f⊗_R g")


def induced_on_many(maps, src, tgt):
    h = tgt.projection @ tensor_maps(*maps)
    return src.descend(h, "tensor of maps")


# ---------------------------------------------------------------------------
# hom spaces


@dataclass(frozen=True, eq=False)
class HomSpace:
    """Hom_A(X, Y) as a subspace of all linear maps, flattened row-major."""

    source: object
    target: object
    subspace: SubSpace

    @property
    def dim(self):
        return self.subspace.dim

    def to_map(self, v):
        X, Y = self.source, self.target
        n = X.dim
        entries = []
        for idx, r in v.rows.items():
            entries.append((idx // n, idx % n, r[0]))
        return LinMap(X.space, Y.space, Mat.from_entries(v.field, (Y.dim, X.dim), entries))

    def from_map(self, f):
        n = self.source.dim
        return Mat.column(f.field, self.subspace.ambient.dim,
                          {i * n + j: x for i, j, x in f.mat.items()})

    def maps(self):
        return [self.to_map(v) for v in self.subspace.vectors()]


def hom_labels(X, Y):
    return BasedSpace(tuple(f"{y}<-{x}" for y in Y.space.labels for x in X.space.labels))


def module_hom_space(X, Y):
    """Solve f∘ρ_X = ρ_Y∘(f⊗A) for f: X → Y."""
    if not X.algebra.same_as(Y.algebra):
        raise ShapeError("modules over different algebras")
    fld = X.field
    n, m = X.dim, Y.dim
    Im, In = Mat.eye(fld, m), Mat.eye(fld, n)
    blocks = []
    for RX, RY in zip(X.right_mults, Y.right_mults):
        blocks.append(Im.kron(RX.mat.T) - RY.mat.kron(In))
    amb = hom_labels(X, Y)
    if blocks:
        M = blocks[0].vstack(*blocks[1:])
        sub = kernel(LinMap(amb, BasedSpace.standard(M.nrows, "c"), M))
    else:
        sub = SubSpace.full(amb, fld)
    return HomSpace(X, Y, sub)


def bimodule_hom_space(X, Y):
    """Hom of R-S-bimodules, as the joint solution of left and right linearity."""
    fld = X.field
    n, m = X.dim, Y.dim
    Im, In = Mat.eye(fld, m), Mat.eye(fld, n)
    blocks = []
    for i in range(X.right.dim):
        r = X.right.basis(i)
        blocks.append(Im.kron(X.right_mult(r).mat.T) - Y.right_mult(r).mat.kron(In))
    for i in range(X.left.dim):
        r = X.left.basis(i)
        blocks.append(Im.kron(X.left_mult(r).mat.T) - Y.left_mult(r).mat.kron(In))
    M = blocks[0].vstack(*blocks[1:])
    amb = hom_labels(X, Y)
    sub = kernel(LinMap(amb, BasedSpace.standard(M.nrows, "c"), M))
    return HomSpace(X, Y, sub)


__all__ = [
    "Algebra", "AlgMorphism", "RightModule", "Bimodule", "TensorOver", "HomSpace",
    "check_algebra", "check_morphism", "check_module", "check_bimodule",
    "check_bimodule_map", "subalgebra", "identity_morphism", "tensor_over",
    "tensor_over_many", "relation_span", "induced_on_quotient", "induced_on_many",
    "module_hom_space", "bimodule_hom_space", "image", "Witness",
]

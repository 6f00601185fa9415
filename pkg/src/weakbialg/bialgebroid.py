"""Right bialgebroids (A, R, s, t, δ, ε).

A is an R-R-bimodule by right multiplication: r ▷ a = a·t(r) and
a ◁ r = a·s(r).  δ is stored in the coordinates of the quotient A ⊗_R A.
"""

from dataclasses import dataclass
from functools import cached_property

from .algebra import (
    Algebra, AlgMorphism, Bimodule, RightModule, check_algebra, check_bimodule,
    check_bimodule_map, check_module, check_morphism, module_hom_space, tensor_over,
    tensor_over_many,
)
from .errors import AxiomError, ShapeError
from .linalg import LinMap, Mat, SubSpace, intersect, kernel, swap, tensor
from .report import Report, Witness


@dataclass(frozen=True, eq=False)
class RightBialgebroid:
    A: Algebra
    R: Algebra
    s: AlgMorphism
    t: AlgMorphism
    delta: LinMap
    eps: LinMap

    def __post_init__(self):
        A, R = self.A, self.R
        if self.s.source is not R and not self.s.source.same_as(R):
            raise ShapeError("source map must start at R")
        if self.t.map.domain != R.space:
            raise ShapeError("target map must start at R^op")
        if self.delta.domain != A.space or self.delta.codomain != self.AoA.space:
            raise ShapeError("δ must map A into A ⊗_R A (quotient coordinates)")
        if self.eps.domain != A.space or self.eps.codomain != R.space:
            raise ShapeError("ε must map A to R")

    @classmethod
    def from_lift(cls, A, R, s, t, delta_lift, eps):
        """Accept δ as a map A → A⊗A and project it to A ⊗_R A."""
        shell = _Shell(A, R, s, t)
        return cls(A, R, s, t, shell.AoA.projection @ delta_lift, eps)

    @property
    def field(self):
        return self.A.field

    @cached_property
    def bimodule(self):
        return _base_bimodule(self.A, self.R, self.s, self.t)

    @cached_property
    def AoA(self):
        return tensor_over(self.bimodule, self.bimodule, name="A⊗_R A")

    @cached_property
    def AoAoA(self):
        b = self.bimodule
        return tensor_over_many([b, b, b], name="A⊗_R A⊗_R A")

    @cached_property
    def delta_lift(self):
        return self.AoA.section @ self.delta

    def restrict(self, X):
        """The R-R-bimodule underlying a right A-module: r▷x = x·t(r), x◁r = x·s(r)."""
        f = X.field
        IX = LinMap.identity(X.space, f)
        lact = X.act @ tensor(IX, self.t.map) @ swap(self.R.space, X.space, f)
        ract = X.act @ tensor(IX, self.s.map)
        return Bimodule(self.R, self.R, X.space, lact, ract, X.name)


class _Shell:
    def __init__(self, A, R, s, t):
        self.AoA = tensor_over(*(2 * [_base_bimodule(A, R, s, t)]))


def _base_bimodule(A, R, s, t):
    f = A.field
    I = A.identity
    lact = A.mul @ swap(A.space, A.space, f) @ tensor(t.map, I)
    ract = A.mul @ tensor(I, s.map)
    return Bimodule(R, R, A.space, lact, ract, "A")


# ---------------------------------------------------------------------------
# Takeuchi product


@dataclass(frozen=True, eq=False)
class Takeuchi:
    bialgebroid: RightBialgebroid
    subspace: SubSpace
    report: Report

    @property
    def dim(self):
        return self.subspace.dim

    def multiply(self, u, v):
        """Product of two classes in A ⊗_R A (coordinates), via arbitrary lifts."""
        B = self.bialgebroid
        S = B.AoA.section.mat
        return self.multiply_lifts(S @ u, S @ v)

    def multiply_lifts(self, x, y):
        """Product of two explicit lifts in A⊗A, projected to A ⊗_R A."""
        B = self.bialgebroid
        return B.AoA.projection.mat @ B.A.power_product(x, y)


def takeuchi_subspace(B):
    """∩_r ker(s(r)·− ⊗_R id − id ⊗_R t(r)·−) inside A ⊗_R A."""
    A, R, T = B.A, B.R, B.AoA
    I = A.identity
    P = T.projection
    subs = []
    for i in range(R.dim):
        r = R.basis(i)
        Ls = A.left_mult(B.s(r))
        Lt = A.left_mult(B.t.map(r))
        left = T.descend(P @ tensor(Ls, I), "s(r)·− ⊗_R A")
        right = T.descend(P @ tensor(I, Lt), "A ⊗_R t(r)·−")
        subs.append(kernel(left - right))
    return intersect(subs, T.space, A.field)


def takeuchi_product(B, strict=True, subspace=None):
    """A ×_R A with a verified, lift-independent multiplication."""
    T = B.AoA
    f = B.field
    A = B.A
    rep = Report("Takeuchi product", f)
    W = subspace or takeuchi_subspace(B)
    P, S = T.projection, T.section
    rel = T.relations.basis().T
    lifts = [S.mat @ v for v in W.vectors()]
    k = W.dim
    closed, wit = True, None
    for i, x in enumerate(lifts):
        for j, y in enumerate(lifts):
            prod = P.mat @ A.power_product(x, y)
            if not W.contains(prod):
                closed, wit = False, Witness((i, j), prod.vector_dict(), {}, "product leaves A×_R A")
                break
        if not closed:
            break
    rep.add("closed under multiplication", closed, wit, f"dim {k}")
    indep, wit = True, None
    if rel.ncols:
        rels = [rel.col(j) for j in range(rel.ncols)]
        for i, x in enumerate(lifts):
            for j, z in enumerate(rels):
                for bad in (P.mat @ A.power_product(x, z), P.mat @ A.power_product(z, x)):
                    if not bad.is_zero():
                        indep, wit = False, Witness((i, j), bad.vector_dict(), {}, "relation times class")
                        break
                if not indep:
                    break
            if not indep:
                break
    rep.add("multiplication independent of lifts", indep, wit)
    if strict and not rep.passed:
        raise AxiomError("Takeuchi product is not a well-defined algebra", rep)
    return Takeuchi(B, W, rep)


# ---------------------------------------------------------------------------
# monoidal structure on right A-modules


@dataclass(frozen=True, eq=False)
class ModuleProduct:
    module: RightModule
    tensor: object
    left: RightModule
    right: RightModule


def module_tensor(B, X, Y, name=None):
    """X ⊛ Y on X ⊗_R Y with (x⊗y)·a = x·a₍₁₎ ⊗ y·a₍₂₎."""
    A = B.A
    f = B.field
    T = tensor_over(B.restrict(X), B.restrict(Y), name=name or f"{X.name}*{Y.name}")
    P = T.projection
    lift = B.delta_lift.mat
    RX, RY = X.right_mults, Y.right_mults

    def act_of(vec):
        M = Mat.zeros(f, (X.dim * Y.dim, X.dim * Y.dim))
        for idx, row in vec.rows.items():
            i, j = divmod(idx, A.dim)
            M = M + RX[i].mat.kron(RY[j].mat).scale(row[0])
        return M

    rel = B.AoA.relations
    for w in rel.vectors():
        if not (P.mat @ act_of(w)).is_zero():
            raise AxiomError("module action depends on the lift of δ(a)")
    cols = {}
    for k in range(A.dim):
        h = LinMap(T.flat, T.space, P.mat @ act_of(lift.col(k)))
        try:
            act_k = T.descend(h, "module product action")
        except AxiomError:
            raise AxiomError(f"action of basis element {k} is not well defined on X ⊗_R Y") from None
        cols[k] = act_k.mat
    n, nA = T.dim, A.dim
    entries = []
    for k, M in cols.items():
        for i, q, x in M.items():
            entries.append((i, q * nA + k, x))
    act = LinMap(T.space.tensor(A.space), T.space, Mat.from_entries(f, (n, n * nA), entries))
    mod = RightModule(A, T.space, act, T.bimodule.name)
    rep = check_module(mod)
    if not rep.passed:
        raise AxiomError("X ⊛ Y fails the module axioms", rep)
    return ModuleProduct(mod, T, X, Y)


def module_product(B, X, Y, name=None):
    return module_tensor(B, X, Y, name).module


def unit_module(B, name="E"):
    """R with r ◁ a = ε(s(r)·a)."""
    A = B.A
    act = B.eps @ A.mul @ tensor(B.s.map, A.identity)
    E = RightModule(A, B.R.space, act, name)
    rep = check_module(E)
    if not rep.passed:
        raise AxiomError("unit module fails the module axioms (bad counit)", rep)
    return E


def reconstruct_base(B):
    """Hom_A(A, E) under convolution, with the comparison ρ ↦ ρ(1) onto R.

    Returns ``(algebra, comparison)``; the comparison is verified to be an
    algebra isomorphism.
    """
    A, R = B.A, B.R
    f = B.field
    E = unit_module(B)
    H = module_hom_space(RightModule.regular(A), E)
    Eb = B.restrict(E)
    T = B.AoA
    basis = H.maps()

    def conv(rho, rho2):
        h = Eb.lact @ tensor(rho, rho2)
        return T.descend(h, "ρ ⊗_R ρ'") @ B.delta

    prods = {}
    for i, p in enumerate(basis):
        for j, q in enumerate(basis):
            c = H.subspace.coordinates(H.from_map(conv(p, q)))
            if c is None:
                raise AxiomError("convolution product leaves Hom_A(A, E)")
            prods[i, j] = c.vector_dict()
    cu = H.subspace.coordinates(H.from_map(B.eps))
    if cu is None:
        raise AxiomError("ε is not an A-module map A → E")
    labels = [f"rho{i}" for i in range(len(basis))]
    C = Algebra.from_products(f, labels, lambda i, j: prods[i, j], cu.vector_dict(), "Hom_A(A,E)")
    comp = LinMap.from_columns(C.space, R.space, [p(A.unit) for p in basis], f)
    if not comp.is_invertible():
        raise AxiomError("comparison ρ ↦ ρ(1) is not bijective")
    rep = check_morphism(AlgMorphism(C, R, comp), "comparison")
    if not rep.passed:
        raise AxiomError("comparison is not an algebra morphism", rep)
    return C, comp


# ---------------------------------------------------------------------------
# axiom checker


def check_bialgebroid(B):
    A, R = B.A, B.R
    f = B.field
    n, r = A.dim, R.dim
    I = A.identity
    rep = Report("right bialgebroid", f)
    rep.extend(check_algebra(A), "A: ")
    rep.extend(check_algebra(R), "R: ")
    rep.extend(check_morphism(B.s), "s: ")
    rep.extend(check_morphism(B.t), "t: ")
    st = A.mul @ tensor(B.s.map, B.t.map)
    ts = A.mul @ swap(A.space, A.space, f) @ tensor(B.s.map, B.t.map)
    rep.equal("s(r) t(r') = t(r') s(r)", st, ts, (r, r))
    bim = B.bimodule
    rep.extend(check_bimodule(bim), "A as R-bimodule: ")
    T = B.AoA
    rep.extend(check_bimodule_map(B.delta, bim, T.bimodule), "delta ")
    rep.extend(check_bimodule_map(B.eps, bim, Bimodule.regular(R)), "eps ")

    lift = B.delta_lift
    T3 = B.AoAoA
    try:
        dl = T.descend(T3.projection @ tensor(lift, I), "δ ⊗_R A")
        dr = T.descend(T3.projection @ tensor(I, lift), "A ⊗_R δ")
        rep.equal("coassociativity", dl @ B.delta, dr @ B.delta, (n,))
    except AxiomError as exc:
        rep.add("coassociativity", False, detail=str(exc))
    for name, h in (("left counit", bim.lact @ tensor(B.eps, I)),
                    ("right counit", bim.ract @ tensor(I, B.eps))):
        try:
            rep.equal(name, T.descend(h, name) @ B.delta, I, (n,))
        except AxiomError as exc:
            rep.add(name, False, detail=str(exc))

    W = takeuchi_subspace(B)
    inside, wit = True, None
    for j in range(n):
        v = B.delta.col(j)
        if not W.contains(v):
            inside, wit = False, Witness((j,), v.vector_dict(), {}, "δ(a) outside A×_R A")
            break
    rep.add("delta lands in Takeuchi product", inside, wit, f"dim A×_R A = {W.dim}")
    tk = takeuchi_product(B, strict=False, subspace=W)
    rep.extend(tk.report, "Takeuchi: ")
    cols = [lift.col(i) for i in range(n)]
    rhs = LinMap.from_columns(A.space.tensor(A.space), T.space,
                              [T.projection.mat @ A.power_product(x, y) for x in cols for y in cols], f)
    rep.equal("delta multiplicative", B.delta @ A.mul, rhs, (n, n))
    one_one = T.projection(A.unit.kron(A.unit))
    rep.equal("delta unital", B.delta(A.unit), one_one)
    em = B.eps @ A.mul
    rep.equal("eps(s(eps(a)) b) = eps(ab)", em @ tensor(B.s.map @ B.eps, I), em, (n, n))
    rep.equal("eps(t(eps(a)) b) = eps(ab)", em @ tensor(B.t.map @ B.eps, I), em, (n, n))
    rep.equal("eps(1) = 1_R", B.eps(A.unit), R.unit)
    return rep


__all__ = [
    "RightBialgebroid", "Takeuchi", "ModuleProduct", "check_bialgebroid",
    "takeuchi_subspace", "takeuchi_product", "module_tensor", "module_product",
    "unit_module", "reconstruct_base",
]

"""Weak bialgebras and their dictionary with bialgebroids over a separable
Frobenius base."""

from dataclasses import dataclass
from functools import cached_property

from .algebra import Algebra, AlgMorphism, check_algebra, subalgebra
from .bialgebroid import RightBialgebroid, check_bialgebroid
from .errors import AxiomError, ShapeError
from .frobenius import SepFrobenius, check_sep_frobenius, frobenius_section
from .linalg import UNIT, LinMap, image, solve, swap, tensor, tensor_maps
from .report import Report


@dataclass(frozen=True, eq=False)
class WeakBialgebra:
    algebra: Algebra
    comul: LinMap
    counit: LinMap

    def __post_init__(self):
        V = self.algebra.space
        if self.comul.domain != V or self.comul.codomain != V.tensor(V):
            raise ShapeError("Δ must map A to A⊗A")
        if self.counit.domain != V or self.counit.codomain != UNIT:
            raise ShapeError("ε must map A to k")

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @cached_property
    def delta_one(self):
        """Δ(1) as a vector of A⊗A."""
        return self.comul(self.algebra.unit)

    @cached_property
    def counit_pairing(self):
        """a⊗b ↦ ε(ab)."""
        return self.counit @ self.algebra.mul


def check_wba(W):
    A = W.algebra
    n = A.dim
    f = A.field
    I = A.identity
    D, e, mu = W.comul, W.counit, A.mul
    rep = Report("weak bialgebra", f)
    rep.extend(check_algebra(A), "A: ")
    rep.equal("coassociativity", tensor(D, I) @ D, tensor(I, D) @ D, (n,))
    rep.equal("left counit", tensor(e, I) @ D, I, (n,))
    rep.equal("right counit", tensor(I, e) @ D, I, (n,))
    mul_AA = tensor(mu, mu) @ tensor_maps(I, swap(A.space, A.space, f), I)
    rep.equal("Delta multiplicative", D @ mu, mul_AA @ tensor(D, D), (n, n))
    E2 = W.counit_pairing
    lhs1 = tensor(E2, E2) @ tensor_maps(I, D, I)
    lhs2 = tensor(E2, E2) @ tensor_maps(I, swap(A.space, A.space, f) @ D, I)
    abc = e @ mu @ tensor(mu, I)
    rep.equal("weak counit eps(a b1) eps(b2 c) = eps(abc)", lhs1, abc, (n, n, n))
    rep.equal("weak counit eps(a b2) eps(b1 c) = eps(abc)", lhs2, abc, (n, n, n))
    d1 = W.delta_one
    one = A.unit
    dd1 = tensor(D, I).mat @ d1
    left = A.power_product(d1.kron(one), one.kron(d1), 3)
    right = A.power_product(one.kron(d1), d1.kron(one), 3)
    rep.equal("weak unit (Delta⊗id)Delta(1) = (Delta(1)⊗1)(1⊗Delta(1))", dd1, left)
    rep.equal("weak unit (Delta⊗id)Delta(1) = (1⊗Delta(1))(Delta(1)⊗1)", dd1, right)
    return rep


def _require(rep, what):
    if not rep.passed:
        names = ", ".join(c.name for c in rep.failures())
        raise AxiomError(f"{what} failed: {names}", rep)


@dataclass(frozen=True, eq=False)
class TargetProjection:
    """Π^R(a) = 1₍₁₎ ε(a 1₍₂₎), its image A^R and the coordinate map A → A^R."""

    projection: LinMap
    base: Algebra
    inclusion: AlgMorphism
    to_base: LinMap

    @property
    def dim(self):
        return self.base.dim


def target_projection(W, name="R"):
    A = W.algebra
    f = A.field
    d1 = LinMap(UNIT, A.space.tensor(A.space), W.delta_one)
    E2r = W.counit_pairing @ swap(A.space, A.space, f)
    Pi = tensor(A.identity, E2r) @ tensor(d1, A.identity)
    Wsub = image(Pi)
    try:
        R, inc = subalgebra(A, Wsub, name)
    except AxiomError as exc:
        raise AxiomError(f"A^R is not a subalgebra: {exc}") from None
    cols = []
    for j in range(A.dim):
        cols.append(Wsub.coordinates(Pi.col(j)))
    to_base = LinMap.from_columns(A.space, R.space, cols, f)
    return TargetProjection(Pi, R, inc, to_base)


def _tbar(W):
    """x ↦ ε(x 1₍₁₎) 1₍₂₎ on all of A."""
    A = W.algebra
    d1 = LinMap(UNIT, A.space.tensor(A.space), W.delta_one)
    return tensor(W.counit_pairing, A.identity) @ tensor(A.identity, d1)


def wba_to_bialgebroid(W, check=True):
    """A as a right bialgebroid over A^R: s = inclusion, t(r) = ε(r1₍₁₎)1₍₂₎,
    δ = τ∘Δ, ε_R = Π^R.  The result is verified before it is returned."""
    if check:
        _require(check_wba(W), "weak bialgebra axioms")
    A = W.algebra
    tp = target_projection(W)
    R = tp.base
    s = tp.inclusion
    t = AlgMorphism(R.opposite(), A, _tbar(W) @ s.map)
    B = RightBialgebroid.from_lift(A, R, s, t, W.comul, tp.to_base)
    if check:
        _require(check_bialgebroid(B), "derived bialgebroid")
    return B


def base_sep_frobenius(W, check=True):
    """Separable Frobenius structure on A^R: ψ = ε|A^R and e with (s⊗t)(e) = Δ(1).

    For groupoid algebras this e equals (Π^R⊗id)Δ(1); for their duals it
    does not, since there t(A^R) differs from A^R.
    """
    tp = target_projection(W)
    R, s = tp.base, tp.inclusion
    t = _tbar(W) @ s.map
    psi = W.counit @ s.map
    st = tensor(s.map, t)
    e = solve(st, W.delta_one)
    if e is None:
        raise AxiomError("Δ(1) does not lie in s(A^R) ⊗ t(A^R); no candidate separability element")
    sf = SepFrobenius(R, psi, e)
    if check:
        _require(check_sep_frobenius(sf), "candidate separable Frobenius structure")
    return sf


def bialgebroid_to_wba(B, sf, check=True):
    """Δ(a) = Σ a₍₁₎s(eᵢ) ⊗ a₍₂₎t(fᵢ) and ε = ψ∘ε_R; verified before return."""
    if check:
        _require(check_bialgebroid(B), "bialgebroid axioms")
        _require(check_sep_frobenius(sf), "separable Frobenius axioms")
    if not sf.base.same_as(B.R):
        raise ShapeError("Frobenius structure is not on the bialgebroid base")
    bim = B.bimodule
    sec = frobenius_section(bim, bim, sf, B.AoA)
    W = WeakBialgebra(B.A, sec @ B.delta, sf.psi @ B.eps)
    if check:
        _require(check_wba(W), "reconstructed weak bialgebra")
    return W


__all__ = [
    "WeakBialgebra", "TargetProjection", "check_wba", "target_projection",
    "wba_to_bialgebroid", "base_sep_frobenius", "bialgebroid_to_wba",
]

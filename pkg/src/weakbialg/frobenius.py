"""Separable Frobenius structures (R, ψ, e = Σ eᵢ⊗fᵢ) and the induced
splitting of bimodule tensor projections."""

from dataclasses import dataclass
from functools import cached_property

from .algebra import check_algebra, tensor_over
from .errors import AxiomError, ShapeError
from .linalg import UNIT, LinMap, tensor, tensor_maps
from .report import Report


@dataclass(frozen=True, eq=False)
class SepFrobenius:
    base: object
    psi: LinMap
    e: object

    def __post_init__(self):
        R = self.base
        if self.psi.domain != R.space or self.psi.codomain != UNIT:
            raise ShapeError("ψ must map R to k")
        if self.e.shape != (R.dim * R.dim, 1):
            raise ShapeError("e must be a vector in R⊗R")

    @property
    def field(self):
        return self.base.field

    @cached_property
    def e_map(self):
        R = self.base
        return LinMap(UNIT, R.space.tensor(R.space), self.e)

    @cached_property
    def sigma(self):
        """σ(r) = (r⊗1)·e."""
        R = self.base
        return tensor(R.mul, R.identity) @ tensor(R.identity, self.e_map)

    @cached_property
    def sigma_right(self):
        """r ↦ e·(1⊗r); equals ``sigma`` exactly when e is a Casimir element."""
        R = self.base
        return tensor(R.identity, R.mul) @ tensor(self.e_map, R.identity)

    def terms(self):
        """The pairs (eᵢ, fᵢ) as basis-index pairs with coefficients."""
        n = self.base.dim
        return [(i // n, i % n, r[0]) for i, r in sorted(self.e.rows.items())]


def check_sep_frobenius(sf):
    R = sf.base
    n = R.dim
    rep = Report("separable Frobenius structure", R.field)
    rep.extend(check_algebra(R), "algebra: ")
    I, mu, psi, sigma = R.identity, R.mul, sf.psi, sf.sigma
    rep.equal("coassociativity", tensor(sigma, I) @ sigma, tensor(I, sigma) @ sigma, (n,))
    rep.equal("left counit", tensor(psi, I) @ sigma, I, (n,))
    rep.equal("right counit", tensor(I, psi) @ sigma, I, (n,))
    rep.equal("Frobenius (mu⊗R)(R⊗sigma) = sigma mu", tensor(mu, I) @ tensor(I, sigma), sigma @ mu, (n, n))
    rep.equal("Frobenius (R⊗mu)(sigma⊗R) = sigma mu", tensor(I, mu) @ tensor(sigma, I), sigma @ mu, (n, n))
    rep.equal("separability mu sigma = id", mu @ sigma, I, (n,))
    rep.equal("Casimir (r⊗1)e = e(1⊗r)", sigma, sf.sigma_right, (n,))
    return rep


def frobenius_section(X, Y, sf, product=None):
    """The splitting x ⊗_R y ↦ Σ x·eᵢ ⊗ fᵢ·y of π: X⊗Y → X⊗_R Y."""
    R = sf.base
    if not (X.right.same_as(R) and Y.left.same_as(R)):
        raise ShapeError("bimodules are not over the Frobenius base")
    T = product or tensor_over(X, Y)
    f = R.field
    IX, IY = LinMap.identity(X.space, f), LinMap.identity(Y.space, f)
    h = tensor(X.ract, Y.lact) @ tensor_maps(IX, sf.e_map, IY)
    try:
        section = T.descend(h, "Frobenius section")
    except AxiomError as exc:
        raise AxiomError(f"balance check failed: {exc}; e is not a Casimir element") from None
    if T.projection @ section != LinMap.identity(T.space, f):
        raise AxiomError("π∘section is not the identity; Σ eᵢfᵢ ≠ 1")
    return section

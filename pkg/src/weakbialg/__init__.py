"""Exact finite-dimensional verification of weak bialgebras, right
bialgebroids, separable Frobenius structures and monoidal functor fragments."""

from .algebra import (
    Algebra, AlgMorphism, Bimodule, RightModule, check_algebra, check_bimodule,
    check_module, module_hom_space, tensor_over,
)
from .bialgebroid import (
    RightBialgebroid, check_bialgebroid, module_product, reconstruct_base,
    takeuchi_product, unit_module,
)
from .errors import AxiomError, InputError, ShapeError
from .field import QQ, Field
from .frobenius import SepFrobenius, check_sep_frobenius, frobenius_section
from .functor import (
    MonoidalFunctorFragment, canonical_base, canonical_bimodule, check_fragment,
    factorize, forgetful_fragment, functor_frobenius_check, induced_strength,
    invariants_fragment, universal_sigma,
)
from .generators import gen_groupoid_wba, gen_matrix_frobenius
from .linalg import BasedSpace, LinMap, Mat, SubSpace, coequalizer, intersect, kernel, quotient, tensor
from .weak import (
    WeakBialgebra, base_sep_frobenius, bialgebroid_to_wba, check_wba, target_projection,
    wba_to_bialgebroid,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra", "AlgMorphism", "Bimodule", "RightModule", "check_algebra", "check_bimodule",
    "check_module", "module_hom_space", "tensor_over", "RightBialgebroid", "check_bialgebroid",
    "module_product", "reconstruct_base", "takeuchi_product", "unit_module", "AxiomError",
    "InputError", "ShapeError", "QQ", "Field", "SepFrobenius", "check_sep_frobenius",
    "frobenius_section", "MonoidalFunctorFragment", "canonical_base", "canonical_bimodule",
    "check_fragment", "factorize", "forgetful_fragment", "functor_frobenius_check",
    "induced_strength", "invariants_fragment", "universal_sigma", "gen_groupoid_wba",
    "gen_matrix_frobenius", "BasedSpace", "LinMap", "Mat", "SubSpace", "coequalizer",
    "intersect", "kernel", "quotient", "tensor", "WeakBialgebra", "base_sep_frobenius",
    "bialgebroid_to_wba", "check_wba", "target_projection", "wba_to_bialgebroid",
]

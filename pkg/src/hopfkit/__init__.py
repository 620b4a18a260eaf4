"""hopfkit: exact symbolic workbench for a family of bicrossproduct Hopf algebras."""

from .core import (NCPoly, Presentation, TensorPoly, TruncationOverflow,
                   UnknownGenerator, RankMismatch, check_local_confluence,
                   tensor_mul, tensor_of)
from .hopf import (HopfAlgebra, HopfMorphism, AxiomReport, check_hopf_axioms,
                   check_antipode_flip, check_morphism, check_inverse_pair,
                   solve_antipode)
from . import family

__all__ = [
    "NCPoly", "Presentation", "TensorPoly", "TruncationOverflow",
    "UnknownGenerator", "RankMismatch", "check_local_confluence",
    "tensor_mul", "tensor_of", "HopfAlgebra", "HopfMorphism", "AxiomReport",
    "check_hopf_axioms", "check_antipode_flip", "check_morphism",
    "check_inverse_pair", "solve_antipode", "family",
]

"""Disentangling and composition calculus for su(1,1), su(2) and so(2,1).

The package rewrites single exponentials of generator combinations in
normal-ordered (Gauss) form, composes ordered elements in closed form,
applies the machinery to squeeze optics, and builds product-formula
time-evolution operators, with an independent 2x2 matrix oracle for
cross-checking every identity.
"""

from .algebra import (
    AlgebraKind,
    ExponentParams,
    GroupElement,
    identity_element,
    make_algebra,
)
from .compose import (
    TOL_SINGULAR,
    DisentangleResult,
    alpha_continued_fraction,
    compose_many,
    compose_pair,
    disentangle,
)
from .errors import (
    AlgebraMismatch,
    EmptySequence,
    InvalidFrequency,
    NonFiniteInput,
    NotFactorizable,
    SingularDecomposition,
)
from .evolve import (
    EvolutionResult,
    HamiltonianSchedule,
    default_checkpoint_stride,
    evolve,
    oscillator_schedule,
    step_element,
)
from .oracle import (
    GeneratorSet,
    Mat2,
    element_matrix,
    exponent_matrix,
    generators_for,
    mat_exp,
)
from .squeeze import (
    RotationParams,
    SqueezeParams,
    SqueezeRotationFactorization,
    compose_squeezes,
    factor_squeeze_rotation,
    rotation_element,
    squeeze_element,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraKind",
    "ExponentParams",
    "GroupElement",
    "identity_element",
    "make_algebra",
    "TOL_SINGULAR",
    "DisentangleResult",
    "disentangle",
    "compose_pair",
    "compose_many",
    "alpha_continued_fraction",
    "AlgebraMismatch",
    "EmptySequence",
    "InvalidFrequency",
    "NonFiniteInput",
    "NotFactorizable",
    "SingularDecomposition",
    "HamiltonianSchedule",
    "EvolutionResult",
    "step_element",
    "evolve",
    "default_checkpoint_stride",
    "oscillator_schedule",
    "Mat2",
    "GeneratorSet",
    "generators_for",
    "mat_exp",
    "element_matrix",
    "exponent_matrix",
    "SqueezeParams",
    "RotationParams",
    "SqueezeRotationFactorization",
    "squeeze_element",
    "rotation_element",
    "compose_squeezes",
    "factor_squeeze_rotation",
    "__version__",
]

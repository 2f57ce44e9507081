"""kinbialg: exact + numeric verification of kinematical Lie bialgebras,
their Poisson homogeneous spacetimes and quantum (noncommutative) spacetimes.
"""

from .scalars import (
    C,
    LAM,
    ONE,
    PARAMS,
    ZERO,
    Z,
    ZP,
    DivergentLimit,
    DivisionByZero,
    Rational,
    Scalar,
    rat,
)
from .liealg import (
    AlgebraMismatch,
    LieAlgebra,
    Subalgebra,
    WedgeElement,
    build_abelian,
    build_carrollian,
    build_g_2plus1,
    build_g_lambda,
    build_lorentz,
    build_newtonian,
    lorentz_subalgebra,
    translation_indices,
)

__version__ = "0.1.0"

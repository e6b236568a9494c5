from .chain_complex import DIFFERENTIAL_DEGREE, ChainComplex, ComplexSlice
from .chain_map import ChainMap, identity_map, multiplication_map, sum_maps
from .cone import SOURCE, TARGET, ConeComplex, cone, cone_shift
from .derived import (
    adjoin_variables,
    blocked_complex,
    hat_complex,
    quotient_complex,
    relabel_variables,
    set_variables_equal,
    set_variables_zero,
    subcomplex,
    tensor,
)
from .grid_complex import GridComplex, build_minus_complex, rectangle_differential

__all__ = [
    "DIFFERENTIAL_DEGREE",
    "ChainComplex",
    "ComplexSlice",
    "ChainMap",
    "identity_map",
    "multiplication_map",
    "sum_maps",
    "SOURCE",
    "TARGET",
    "ConeComplex",
    "cone",
    "cone_shift",
    "adjoin_variables",
    "blocked_complex",
    "hat_complex",
    "quotient_complex",
    "relabel_variables",
    "set_variables_equal",
    "set_variables_zero",
    "subcomplex",
    "tensor",
    "GridComplex",
    "build_minus_complex",
    "rectangle_differential",
]

from .bigrading import Bigrading
from .f2matrix import EchelonBasis, F2Matrix, RankKernelImage, pack_bits, unpack_bits
from .module_element import ModuleElement, Term, add, scale
from .monomial import Monomial, monomials_of_degree
from .umodule import BigradedUModule, TorsionSummand, tensor_and_tor

__all__ = [
    "BigradedUModule",
    "Bigrading",
    "EchelonBasis",
    "F2Matrix",
    "ModuleElement",
    "Monomial",
    "RankKernelImage",
    "Term",
    "TorsionSummand",
    "add",
    "monomials_of_degree",
    "pack_bits",
    "scale",
    "tensor_and_tor",
    "unpack_bits",
]

from .finitefield import FqField, field_make, is_prime
from .sympoly import CPoly, Frac, SymPoly, sp_vars
from .laurent import LaurentV, Mat2, laurent_eval_deriv
from .groebner import groebner_membership, Certificate, Refusal

__all__ = [
    "FqField", "field_make", "is_prime",
    "CPoly", "Frac", "SymPoly", "sp_vars",
    "LaurentV", "Mat2", "laurent_eval_deriv",
    "groebner_membership", "Certificate", "Refusal",
]

"""Exact Smith normal forms of companion-ring matrices.

circsmith computes, over the integers and without ever rounding, the Smith
normal form of matrices f(C_g) built from a polynomial f and the companion
matrix of a monic polynomial g -- circulants being the flagship case -- and
applies them to the abelianizations of cyclically presented groups.  Every
accelerated formula is paired with a brute-force elimination oracle.
"""

from .abelian import AbelianGroup
from .companion import (
    CommonFactorSplit,
    CompanionElement,
    ComposeReduction,
    DivisorProfile,
    companion_matrix,
    compose_reduce,
    coprime_factor_split,
    coprime_modulus_split,
    divisor_profile,
    element,
    first_determinantal_divisor,
    gcd_split,
    is_second_last_divisor_unit,
    last_determinantal_divisor,
    nonunit_factor_count,
    nonunit_factor_lower_bound,
    second_last_determinantal_divisor,
    set_crosscheck,
    smith_fast,
    swap_reduce,
    to_matrix,
)
from .errors import CircsmithError
from .matrices import IntMatrix, kronecker, solve_row_exact
from .polynomials import (
    MINUS_INFINITY,
    IntPolynomial,
    ModPolynomial,
    content,
    gcd_mod_p,
    horner_shift,
    monic_gcd,
    parse_polynomial,
    poly_compose,
    poly_divmod,
    reduce_mod_p,
    resultant,
)
from .presentations import CyclicWord, abelianization, exponent_polynomial, parse_word
from .primes import DEFAULT_FACTOR_BUDGET, Factorization, factor_integer, is_prime
from .sequences import fibonacci, frac_fib, lucas
from .smith import (
    SmithDecomposition,
    chain_from_diagonal,
    determinantal_divisors_bruteforce,
    equivalent,
    smith_form,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "CircsmithError",
    "CommonFactorSplit",
    "CompanionElement",
    "ComposeReduction",
    "CyclicWord",
    "DivisorProfile",
    "DEFAULT_FACTOR_BUDGET",
    "Factorization",
    "IntMatrix",
    "IntPolynomial",
    "MINUS_INFINITY",
    "ModPolynomial",
    "SmithDecomposition",
    "abelianization",
    "chain_from_diagonal",
    "companion_matrix",
    "compose_reduce",
    "content",
    "coprime_factor_split",
    "coprime_modulus_split",
    "determinantal_divisors_bruteforce",
    "divisor_profile",
    "element",
    "equivalent",
    "exponent_polynomial",
    "factor_integer",
    "fibonacci",
    "first_determinantal_divisor",
    "frac_fib",
    "gcd_mod_p",
    "gcd_split",
    "horner_shift",
    "is_prime",
    "is_second_last_divisor_unit",
    "kronecker",
    "last_determinantal_divisor",
    "lucas",
    "monic_gcd",
    "nonunit_factor_count",
    "nonunit_factor_lower_bound",
    "parse_polynomial",
    "parse_word",
    "poly_compose",
    "poly_divmod",
    "reduce_mod_p",
    "resultant",
    "second_last_determinantal_divisor",
    "set_crosscheck",
    "smith_fast",
    "smith_form",
    "solve_row_exact",
    "swap_reduce",
    "to_matrix",
]

"""Closed-form Smith data for the classical circulant families.

Each function returns the abelianization (or full invariant-factor chain)
of a family of cyclically presented groups straight from its closed
formula, guarded by the formula's hypotheses; the general pipeline and the
elimination oracle provide independent routes that the test suites compare
against.  Families covered: the cocktail-party adjacency circulants, the
weighted Fibonacci groups, two-value circulants (and the periodic Neuwirth
manifolds they describe), the two-block Fibonacci-like family H(r, n, s),
positive length-three relator groups, and an eight-parameter family with a
rank lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Union

from .abelian import AbelianGroup
from .companion import smith_fast
from .errors import HypothesisViolationError, NotCoprimeError
from .polynomials import IntPolynomial
from .presentations import CyclicWord
from .primes import DEFAULT_FACTOR_BUDGET
from .sequences import fibonacci, frac_fib, lucas
from .smith import SmithDecomposition


def _cyclic_modulus(n: int) -> IntPolynomial:
    return IntPolynomial.monomial(n) - IntPolynomial([1])


# ---------------------------------------------------------------------------
# parameter records (mirrored by the CLI and its JSON input)


@dataclass(frozen=True)
class FracFibParams:
    k: int
    n: int


@dataclass(frozen=True)
class CocktailParams:
    m: int


@dataclass(frozen=True)
class TwoValueParams:
    n: int
    s: int
    a: int
    b: int


@dataclass(frozen=True)
class NeuwirthParams:
    n: int
    alpha: int
    beta: int
    ell: int


@dataclass(frozen=True)
class HrnsParams:
    r: int
    n: int
    s: int


@dataclass(frozen=True)
class Length3Params:
    n: int
    k: int
    l: int


@dataclass(frozen=True)
class CrsParams:
    n: int
    h: int
    k: int
    m: int
    q: int
    r: int
    s: int
    ell: int


FamilyParams = Union[
    FracFibParams,
    CocktailParams,
    TwoValueParams,
    NeuwirthParams,
    HrnsParams,
    Length3Params,
    CrsParams,
]


# ---------------------------------------------------------------------------
# cocktail party circulants


def cocktail_polynomials(m: int) -> tuple[IntPolynomial, IntPolynomial]:
    """(f, g) whose circulant f(C_g) is the cocktail-party adjacency matrix
    on 2m vertices: f = (t^m + 1)(1 + t + ... + t^(m-2)), g = t^(2m) - 1."""
    if m < 1:
        raise HypothesisViolationError("m must be >= 1")
    f = (IntPolynomial.monomial(m) + IntPolynomial([1])) * IntPolynomial.geometric(m - 1)
    return f, _cyclic_modulus(2 * m)


def cocktail_smith(m: int) -> SmithDecomposition:
    """Invariant factors of the cocktail-party circulant: 1 (m-1 times),
    m-1 once, 0 (m times).  For m = 1 the polynomial is the empty sum, so
    the whole 2x2 matrix vanishes and the chain is (0, 0)."""
    if m < 1:
        raise HypothesisViolationError("m must be >= 1")
    if m == 1:
        return SmithDecomposition.from_invariant_factors([0, 0])
    chain = [1] * (m - 1) + [m - 1] + [0] * m
    return SmithDecomposition.from_invariant_factors(chain)


# ---------------------------------------------------------------------------
# weighted Fibonacci groups


def ff_word(k: int, n: int) -> CyclicWord:
    """Defining word x0 x1^k x2^(-1) with subscripts taken mod n."""
    return CyclicWord(n, [(0, 1), (1 % n, k), (2 % n, -1)])


def ff_abelianization(k: int, n: int) -> AbelianGroup:
    """Abelianization of the k-weighted Fibonacci group on n generators.

    Z_alpha + Z_beta with alpha = gcd(F_n, F_{n-1} - 1) over the k-weighted
    sequence, and alpha*beta the group order F_{n+1} + F_{n-1} - 1 - (-1)^n.
    """
    if n < 1 or k < 1:
        raise HypothesisViolationError("need n, k >= 1")
    alpha = gcd(frac_fib(k, n), frac_fib(k, n - 1) - 1)
    order = frac_fib(k, n + 1) + frac_fib(k, n - 1) - 1 - (-1) ** n
    if alpha == 0 or order % alpha:
        raise AssertionError(f"order {order} not divisible by alpha {alpha}")
    return AbelianGroup.from_invariant_factors([alpha, order // alpha])


def ff_abelianization_closed(k: int, n: int) -> AbelianGroup:
    """The same group through the residue-of-n-mod-12 case formula."""
    if n < 1 or k < 1:
        raise HypothesisViolationError("need n, k >= 1")
    m = n % 12
    if m in (1, 5, 7, 11):
        chain = [frac_fib(k, n + 1) + frac_fib(k, n - 1)]
    elif m in (3, 9):
        d = gcd(k + 1, 2)
        chain = [d, (frac_fib(k, n + 1) + frac_fib(k, n - 1)) // d]
    elif m in (2, 6, 10):
        c = frac_fib(k, n // 2 + 1) + frac_fib(k, n // 2 - 1)
        chain = [c, c]
    else:  # 0, 4, 8
        d = gcd(k, 2)
        c = frac_fib(k, n // 2)
        chain = [d * c, (k * k + 4) * c // d]
    return AbelianGroup.from_invariant_factors(chain)


# ---------------------------------------------------------------------------
# two-value circulants and periodic Neuwirth manifolds


def two_value_polynomial(n: int, s: int, a: int, b: int) -> IntPolynomial:
    """b on the first s coefficients, a on the remaining n - s."""
    return IntPolynomial([b] * s + [a] * (n - s))


def two_value_circulant_smith(n: int, s: int, a: int, b: int) -> SmithDecomposition:
    """Invariant factors of the circulant whose rows cycle [b..b a..a]
    (s entries b, n - s entries a), for gcd(n, s) = 1.

    For a != b: gcd(a, b), then |a - b| repeated n - 2 times, then
    k * |a - b| with k = |a(n-s) + sb| / gcd(a, b).  For a = b the matrix
    has rank one and the chain is (|a|, 0, ..., 0).
    """
    if not n > s >= 1:
        raise HypothesisViolationError(f"need n > s >= 1, got n={n}, s={s}")
    if gcd(n, s) != 1:
        raise NotCoprimeError(f"gcd({n}, {s}) != 1")
    if a == b:
        return SmithDecomposition.from_invariant_factors([abs(a)] + [0] * (n - 1))
    d = gcd(a, b)
    k = abs(a * (n - s) + s * b) // d
    chain = [d] + [abs(a - b)] * (n - 2) + [k * abs(a - b)]
    return SmithDecomposition.from_invariant_factors(chain)


def ones_block_inverse(n: int, s: int) -> tuple[Fraction, ...]:
    """Coefficients of the rational q with q(C_g) the inverse of the
    circulant of 1 + t + ... + t^(s-1) over g = t^n - 1.

    Needs n > s > 1 and gcd(n, s) = 1.  With v the inverse of n mod s and
    r = n mod s, coefficient q_{r*j mod s} is v/s - 1 for 1 <= j <= v and
    v/s for v < j <= s; later coefficients repeat with period s.
    """
    if not n > s > 1:
        raise HypothesisViolationError(f"need n > s > 1, got n={n}, s={s}")
    if gcd(n, s) != 1:
        raise NotCoprimeError(f"gcd({n}, {s}) != 1")
    v = pow(n, -1, s)
    r = n % s
    head: list[Fraction | None] = [None] * s
    for j in range(1, s + 1):
        head[(r * j) % s] = Fraction(v, s) - 1 if j <= v else Fraction(v, s)
    return tuple(head[i % s] for i in range(n))


def neuwirth_word(n: int, alpha: int, beta: int, ell: int) -> CyclicWord:
    """(x_0^beta x_1^beta ... x_{n-1}^beta)^ell x_{n-1}^(-alpha)."""
    syllables = [(i, beta) for i in range(n)] * ell + [(n - 1, -alpha)]
    return CyclicWord(n, syllables)


def neuwirth_two_value(n: int, alpha: int, beta: int, ell: int) -> TwoValueParams:
    """Two-value circulant parameters of the periodic Neuwirth relation
    matrix: every generator occurs beta*ell times except the last, which
    loses alpha."""
    return TwoValueParams(n=n, s=n - 1, a=beta * ell - alpha, b=beta * ell)


def neuwirth_homology(n: int, alpha: int, beta: int, ell: int) -> AbelianGroup:
    """First homology of the periodic Neuwirth manifold M_n((alpha, beta); ell).

    Computed through the two-value circulant formula on the relation
    matrix, which is exact for all admissible parameters.  When
    gcd(alpha, beta*ell) = 1 this agrees with the published closed form
    Z_alpha^(n-2) + Z_(alpha*|n*ell*beta - alpha|); when alpha shares a
    factor with ell the first torsion coefficient gcd(alpha, beta*ell)
    genuinely appears and that closed form does not hold as written.
    """
    if n < 2 or ell < 1 or alpha < 1 or beta < 1:
        raise HypothesisViolationError("need n >= 2 and alpha, beta, ell >= 1")
    if gcd(alpha, beta) != 1:
        raise HypothesisViolationError(f"gcd(alpha, beta) = {gcd(alpha, beta)} != 1")
    p = neuwirth_two_value(n, alpha, beta, ell)
    return AbelianGroup.from_smith(two_value_circulant_smith(p.n, p.s, p.a, p.b))


# ---------------------------------------------------------------------------
# the two-block family H(r, n, s)


def hrns_polynomial(r: int, s: int) -> IntPolynomial:
    """1 + t + ... + t^(r-1) - t^r (1 + t + ... + t^(s-1))."""
    return IntPolynomial.geometric(r) - IntPolynomial.monomial(r) * IntPolynomial.geometric(s)


def hrns_word(r: int, n: int, s: int) -> CyclicWord:
    syllables = [(i % n, 1) for i in range(r)] + [((r + j) % n, -1) for j in range(s)]
    return CyclicWord(n, syllables)


def hrns_abelianization(
    r: int,
    n: int,
    s: int,
    budget: int = DEFAULT_FACTOR_BUDGET,
    method: str = "auto",
    verify: bool = False,
) -> AbelianGroup:
    """Abelianization of the group with relators x_i..x_{i+r-1} times the
    inverse of x_{i+r}..x_{i+r+s-1} (subscripts mod n).

    Closed forms: for s = r (and n >= 2) the group is Z_N^(d-1) + Z^d with
    d = gcd(n, r), N = n/d; for s > r with d = gcd(r, n, s) = s - r it is
    the d-th power of the reduced group H(r/d, n/d, s/d) plus Z^(d-1).
    Everything else goes through the general pipeline.  method is one of
    "auto", "closed", "general"; verify runs both routes and insists they
    agree.
    """
    if r < 1 or n < 1 or s < 1:
        raise HypothesisViolationError("need r, n, s >= 1")
    if method not in ("auto", "closed", "general"):
        raise ValueError(f"unknown method {method!r}")
    closed = _hrns_closed(r, n, s, budget) if method != "general" else None
    if method == "closed" and closed is None:
        raise HypothesisViolationError(
            f"no closed form applies to H({r}, {n}, {s}); use the general route"
        )
    if closed is not None and not verify and method != "general":
        return closed
    general = _hrns_general(r, n, s, budget)
    if verify and closed is not None and closed != general:
        raise AssertionError(
            f"closed form {closed} disagrees with pipeline {general} for H({r}, {n}, {s})"
        )
    return closed if closed is not None else general


def _hrns_general(r, n, s, budget) -> AbelianGroup:
    g = _cyclic_modulus(n)
    return AbelianGroup.from_smith(smith_fast(hrns_polynomial(r, s), g, budget))


def _hrns_closed(r, n, s, budget) -> AbelianGroup | None:
    if s == r and n >= 2:
        d = gcd(n, r)
        return AbelianGroup.from_invariant_factors([n // d] * (d - 1) + [0] * d)
    if s > r and n >= 2:
        d = gcd(gcd(r, n), s)
        if d > 1 and s - r == d:
            base = _hrns_general(r // d, n // d, s // d, budget)
            return base.power(d).direct_sum(AbelianGroup(betti=d - 1))
    return None


# ---------------------------------------------------------------------------
# positive relators of length three


def length3_word(n: int, k: int, l: int) -> CyclicWord:
    """x0 x_k x_l with subscripts mod n."""
    return CyclicWord(n, [(0, 1), (k % n, 1), (l % n, 1)])


def length3_power16_ab(n: int, variant: str) -> AbelianGroup:
    """Abelianization of x0 x1 x_{n/2} ("half") or x0 x1 x_{n/4}
    ("quarter") when 16 divides n: cyclic of order 2^(n/2) - 1."""
    if variant not in ("half", "quarter"):
        raise ValueError(f"variant must be 'half' or 'quarter', got {variant!r}")
    if n % 16:
        raise HypothesisViolationError(f"16 must divide n, got {n}")
    return AbelianGroup.cyclic(2 ** (n // 2) - 1)


def length3_halfminus1_ab(n: int) -> AbelianGroup:
    """Abelianization of x0 x1 x_{n/2-1} when gcd(n, 6) = 2.

    Splits on gcd(n, 16); built from Lucas and Fibonacci numbers:
    2 -> Z_(3 L_{n/2}); 4 -> Z_(F_{n/4}) + Z_(15 F_{n/4});
    8 -> Z_3 + Z_(L_{n/4}) + Z_(L_{n/4}); 16 -> Z_(L_{n/4}) + Z_(3 L_{n/4}).
    """
    if gcd(n, 6) != 2:
        raise HypothesisViolationError(f"need gcd(n, 6) = 2, got n={n}")
    g16 = gcd(n, 16)
    if g16 == 2:
        chain = [3 * lucas(n // 2)]
    elif g16 == 4:
        chain = [fibonacci(n // 4), 15 * fibonacci(n // 4)]
    elif g16 == 8:
        chain = [3, lucas(n // 4), lucas(n // 4)]
    else:
        chain = [lucas(n // 4), 3 * lucas(n // 4)]
    return AbelianGroup.from_invariant_factors(chain)


def length3_halfminus1_min_generators(n: int) -> int:
    """The published rank table for the family above: 1, 2, 3 according to
    gcd(n, 16) = 2, {4, 16}, 8.  Note the degenerate n = 4 (where the
    Fibonacci torsion coefficient is 1) actually has rank 1."""
    if gcd(n, 6) != 2:
        raise HypothesisViolationError(f"need gcd(n, 6) = 2, got n={n}")
    g16 = gcd(n, 16)
    if g16 == 2:
        return 1
    if g16 == 8:
        return 3
    return 2


# ---------------------------------------------------------------------------
# the eight-parameter family


class CrsBound(NamedTuple):
    value: int
    theorem_applies: bool


def crs_exponent_poly(p: CrsParams) -> IntPolynomial:
    """Exponent-sum polynomial of the defining word, reduced mod t^n - 1.

    ell * (1 + t^m + ... + t^(m(r-1))) - k * t^h (1 + t^q + ... + t^(q(s-1)))
    with every exponent folded into [0, n).
    """
    _crs_validate(p)
    coeffs = [0] * p.n
    for i in range(p.r):
        coeffs[(i * p.m) % p.n] += p.ell
    for j in range(p.s):
        coeffs[(p.h + j * p.q) % p.n] -= p.k
    return IntPolynomial(coeffs)


def crs_word(p: CrsParams) -> CyclicWord:
    """(x_0 x_m ... x_{m(r-1)})^ell (x_h x_{h+q} ... x_{h+(s-1)q})^(-k)."""
    _crs_validate(p)
    positive = [((i * p.m) % p.n, 1) for i in range(p.r)]
    inverse = [((p.h + (p.s - 1 - j) * p.q) % p.n, -1) for j in range(p.s)]
    return CyclicWord(p.n, positive * p.ell + inverse * p.k)


def crs_abelianization(p: CrsParams, budget: int = DEFAULT_FACTOR_BUDGET) -> AbelianGroup:
    return AbelianGroup.from_smith(smith_fast(crs_exponent_poly(p), _cyclic_modulus(p.n), budget))


def crs_lower_bound(p: CrsParams) -> CrsBound:
    """Lower bound gcd(n, m*r) - gcd(n, m) on the minimum generator count
    of the abelianization, valid whenever |k| != 1; for |k| = 1 the bound
    theorem does not apply and (0, False) is returned."""
    _crs_validate(p)
    if abs(p.k) == 1:
        return CrsBound(0, False)
    return CrsBound(gcd(p.n, p.m * p.r) - gcd(p.n, p.m), True)


def _crs_validate(p: CrsParams) -> None:
    if min(p.n, p.h, p.m, p.q, p.r, p.s, p.ell) < 1 or p.k < 1:
        raise HypothesisViolationError(f"all parameters must be >= 1: {p}")

"""Smith forms of polynomial images of companion matrices.

For a monic g of degree n, the matrices f(C_g) -- f ranging over integer
polynomials -- form a commutative ring: circulants when g = t^n - 1,
skew-circulants for t^n + 1, lower triangular Toeplitz for t^n.  The fast
Smith pipeline in ``smith_fast`` combines exact reductions:

  * splitting off the monic common factor of f and g (which contributes
    zero invariant factors),
  * dropping factors of f whose action is unimodular (content, powers of t
    when g(0) is a unit),
  * swapping f(C_g) for g(C_f) when both are monic, which shrinks the
    matrix from deg g to deg f,
  * splitting g into resultant-coprime structured factors t^d +- 1,
  * pinning the remaining chain from the first/last/second-last
    determinantal divisors and the non-unit factor count obtained from
    gcds over F_p.

Each reduction is an exact statement about invariant factors, so the
pipeline's output equals classical elimination; when the pinning count is
three or more the pipeline simply runs the elimination oracle on whatever
small block is left.  A configurable cross-check re-derives small results
through the oracle as a guard against regressions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import (
    DegreeOrderError,
    FactorizationLimitError,
    NotMonicError,
    SingularMatrixError,
    SingularSystemError,
    ZeroNumeratorError,
)
from .matrices import IntMatrix, solve_row_exact
from .polynomials import (
    IntPolynomial,
    companion_residue_rows,
    content,
    gcd_mod_p,
    monic_gcd,
    reduce_mod_p,
    resultant,
)
from .primes import DEFAULT_FACTOR_BUDGET, factor_integer
from .smith import SmithDecomposition, chain_from_diagonal, smith_form

# Above this dimension the elimination fallback refuses to run and budget
# exhaustion propagates to the caller instead.
ORACLE_FALLBACK_LIMIT = 256

_CROSSCHECK_DIMENSION = 12
_CROSSCHECK_SAMPLE_EVERY = 16
_crosscheck_mode = "sampled"
_crosscheck_counter = itertools.count()


def set_crosscheck(mode: str) -> None:
    """Control oracle cross-checking of smith_fast results.

    "always": every result of dimension <= 12 is recomputed by elimination
    and compared.  "sampled" (default): every 16th such result.  "off":
    never.  Test suites switch this to "always".
    """
    global _crosscheck_mode
    if mode not in ("off", "sampled", "always"):
        raise ValueError(f"unknown crosscheck mode {mode!r}")
    _crosscheck_mode = mode


def companion_matrix(g: IntPolynomial) -> IntMatrix:
    """Companion matrix of a monic g: negated coefficients across the top
    row (highest degree first), ones on the subdiagonal."""
    if not g.is_monic:
        raise NotMonicError(f"companion matrix needs a monic polynomial, got {g}")
    n = len(g.coeffs) - 1
    if n < 1:
        raise DegreeOrderError("companion matrix needs degree >= 1")
    top = [-g.coeffs[n - 1 - j] for j in range(n)]
    rows = [top]
    for i in range(1, n):
        row = [0] * n
        row[i - 1] = 1
        rows.append(row)
    return IntMatrix(rows)


class CompanionElement:
    """The residue f mod g acting on Z[t]/(g), i.e. the matrix f(C_g).

    Stores the monic modulus g and the reduced representative phi with
    deg phi < deg g; by Cayley-Hamilton f(C_g) = phi(C_g).
    """

    __slots__ = ("g", "phi", "original_f")

    def __init__(self, g: IntPolynomial, phi: IntPolynomial, original_f=None):
        if not g.is_monic:
            raise NotMonicError(f"modulus must be monic, got {g}")
        if not phi.degree < g.degree:
            raise ValueError("phi must already be reduced mod g")
        self.g = g
        self.phi = phi
        self.original_f = original_f

    @property
    def dimension(self) -> int:
        return len(self.g.coeffs) - 1

    def matrix(self) -> IntMatrix:
        return to_matrix(self)

    def __eq__(self, other):
        if not isinstance(other, CompanionElement):
            return NotImplemented
        return self.g == other.g and self.phi == other.phi

    def __hash__(self):
        return hash((self.g, self.phi))

    def __repr__(self):
        return f"element({self.phi!r}, {self.g!r})"


def element(f: IntPolynomial, g: IntPolynomial) -> CompanionElement:
    """The element f(C_g) of the companion ring of monic g."""
    if not g.is_monic:
        raise NotMonicError(f"modulus must be monic, got {g}")
    return CompanionElement(g, f % g, original_f=f)


def to_matrix(e: CompanionElement) -> IntMatrix:
    """The dim x dim integer matrix phi(C_g).

    Built row-by-row by multiplication by t mod g; the bottom row is the
    reversed coefficient vector of phi.
    """
    if e.dimension == 0:
        return IntMatrix([])
    return IntMatrix(companion_residue_rows(e.phi, e.g))


@dataclass(frozen=True)
class CommonFactorSplit:
    """f = common * f_quotient, g = common * g_quotient with common the
    monic gcd of f and g; g_quotient is monic."""

    common: IntPolynomial
    f_quotient: IntPolynomial
    g_quotient: IntPolynomial

    def __post_init__(self):
        if not self.common.is_monic or not self.g_quotient.is_monic:
            raise NotMonicError("split parts must be monic")


def gcd_split(f: IntPolynomial, g: IntPolynomial) -> CommonFactorSplit:
    """Split the monic gcd out of f and monic g.

    f(C_g) is equivalent to f_quotient(C_{g_quotient}) padded with
    deg(common) zero invariant factors.
    """
    z = monic_gcd(f, g)
    return CommonFactorSplit(z, f // z, g // z)


def first_determinantal_divisor(e: CompanionElement) -> int:
    """gcd of the entries of f(C_g): the content of the reduced residue."""
    return content(e.phi)


def last_determinantal_divisor(split: CommonFactorSplit) -> int:
    """The last nonzero determinantal divisor: |res(f_quotient, g_quotient)|."""
    if split.f_quotient.is_zero:
        raise ZeroNumeratorError("f is a multiple of g; every invariant factor is 0")
    return abs(resultant(split.f_quotient, split.g_quotient))


def _cofactor_content(F: IntPolynomial, G: IntPolynomial, rho: int | None = None) -> int:
    """Content of the unique Q with deg Q < deg G and Q*F = res(F, G) mod G.

    Q's coefficients are the bottom row of the adjugate of F(C_G), obtained
    by one exact row solve; integrality of the solution doubles as a
    correctness check.
    """
    r = len(G.coeffs) - 1
    if rho is None:
        rho = resultant(F, G)
    if rho == 0:
        raise SingularSystemError("resultant vanished; F and G are not coprime")
    if r == 0:
        return 1
    mat = IntMatrix(companion_residue_rows(F, G))
    xs = solve_row_exact(mat, [0] * (r - 1) + [rho])
    values = []
    for x in xs:
        if x.denominator != 1:
            raise AssertionError(f"adjugate row came out non-integral: {xs}")
        values.append(int(x))
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def second_last_determinantal_divisor(split: CommonFactorSplit) -> int:
    """The second-last nonzero determinantal divisor of f(C_g).

    Requires the split quotients to be coprime with nonzero resultant.
    """
    return _cofactor_content(split.f_quotient, split.g_quotient)


@dataclass(frozen=True)
class DivisorProfile:
    """Chain summary of f(C_g): the rank plus the first, second-last and
    last nonzero determinantal divisors and the non-unit factor count.

    Pins down the whole invariant-factor chain whenever nonunit_count <= 2
    (plus the trailing zeros).
    """

    rank: int
    first: int
    last: int
    second_last: int | None = None
    nonunit_count: int | None = None

    def __post_init__(self):
        if self.last == 0:
            raise ValueError("last nonzero determinantal divisor cannot be 0")
        if self.second_last is not None and self.last % self.second_last:
            raise ValueError(f"{self.second_last} does not divide {self.last}")


def divisor_profile(
    f: IntPolynomial, g: IntPolynomial, budget: int = DEFAULT_FACTOR_BUDGET
) -> DivisorProfile:
    """Assemble the determinantal-divisor summary of f(C_g).

    Requires f not a multiple of g (otherwise every invariant factor is 0
    and there is no last nonzero divisor to report).
    """
    if not g.is_monic:
        raise NotMonicError(f"modulus must be monic, got {g}")
    e = element(f, g)
    if e.phi.is_zero:
        raise ZeroNumeratorError("f is a multiple of g; the profile is all zeros")
    split = gcd_split(e.phi, g)
    rank = len(split.g_quotient.coeffs) - 1
    return DivisorProfile(
        rank=rank,
        first=first_determinantal_divisor(e),
        last=last_determinantal_divisor(split),
        second_last=second_last_determinantal_divisor(split) if rank >= 1 else None,
        nonunit_count=nonunit_factor_count(f, g, budget),
    )


def swap_reduce(
    f: IntPolynomial, g: IntPolynomial
) -> tuple[int, CompanionElement]:
    """Exchange f(C_g) for g(C_f) when both are monic and deg f <= deg g.

    Smith(f(C_g)) is deg g - deg f unit factors followed by Smith(g(C_f));
    the returned pair is (that unit count, the swapped element).
    """
    if not f.is_monic or not g.is_monic:
        raise NotMonicError("swap needs both polynomials monic")
    m = len(f.coeffs) - 1
    n = len(g.coeffs) - 1
    if m < 1:
        raise DegreeOrderError("swap needs deg f >= 1")
    if m > n:
        raise DegreeOrderError(f"swap needs deg f <= deg g, got {m} > {n}")
    return n - m, element(g, f)


@dataclass(frozen=True)
class ComposeReduction:
    """Smith data of (f o h)(C_{g o h}): `multiplicity` interleaved copies
    of the Smith form of the base element f(C_g)."""

    base: CompanionElement
    multiplicity: int

    def expand(self, base_chain) -> list[int]:
        """Merge multiplicity copies of a base invariant-factor chain."""
        return chain_from_diagonal(list(base_chain) * self.multiplicity)


def compose_reduce(
    f: IntPolynomial, g: IntPolynomial, h: IntPolynomial
) -> ComposeReduction:
    """Reduce (f o h)(C_{g o h}) to deg h copies of f(C_g)."""
    if not g.is_monic or not h.is_monic:
        raise NotMonicError("composition needs monic g and h")
    if len(h.coeffs) - 1 < 1:
        raise DegreeOrderError("composition needs deg h >= 1")
    return ComposeReduction(element(f, g), len(h.coeffs) - 1)


def coprime_modulus_split(f, g1, g2):
    """Split f(C_{g1*g2}) into f(C_{g1}) (+) f(C_{g2}) when admissible.

    Admissible iff res(f, g1) and res(f, g2) are coprime; returns the pair
    of blocks, or None as the soft not-coprime signal telling the caller to
    skip this split.
    """
    r1 = resultant(f, g1)
    r2 = resultant(f, g2)
    if gcd(r1, r2) != 1:
        return None
    return element(f, g1), element(f, g2)


def coprime_factor_split(f1, f2, g):
    """Split Smith(f1*f2 (C_g)) into the elementwise product of the Smith
    chains of f1(C_g) and f2(C_g) when admissible.

    Admissible iff res(f1, g) and res(f2, g) are coprime; returns the pair
    of factor elements, or None as the soft not-coprime signal.
    """
    r1 = resultant(f1, g)
    r2 = resultant(f2, g)
    if gcd(r1, r2) != 1:
        return None
    return element(f1, g), element(f2, g)


def nonunit_factor_count(
    f: IntPolynomial, g: IntPolynomial, budget: int = DEFAULT_FACTOR_BUDGET
) -> int:
    """Exact number of non-unit invariant factors of f(C_g) (zeros included).

    Computed as max(deg gcd(f, g), max over primes p dividing the last
    nonzero determinantal divisor of deg gcd(f mod p, g mod p)).  The outer
    max settles the empty-prime-set case: when that divisor is 1 the only
    non-units are the deg gcd(f, g) zeros.
    """
    if not g.is_monic:
        raise NotMonicError(f"modulus must be monic, got {g}")
    n = len(g.coeffs) - 1
    if n == 0:
        return 0
    phi = f % g
    if phi.is_zero:
        return n
    split = gcd_split(phi, g)
    count = len(split.common.coeffs) - 1
    last = abs(resultant(split.f_quotient, split.g_quotient))
    if last == 1:
        return count
    for p in factor_integer(last, budget).primes():
        fp = reduce_mod_p(f, p)
        gp = reduce_mod_p(g, p)
        d = n if fp.is_zero else len(gcd_mod_p(fp, gp).coeffs) - 1
        count = max(count, d)
    return count


def nonunit_factor_lower_bound(f: IntPolynomial, g: IntPolynomial, p: int) -> int:
    """deg gcd(f mod p, g mod p): a lower bound on the non-unit count."""
    if not g.is_monic:
        raise NotMonicError(f"modulus must be monic, got {g}")
    fp = reduce_mod_p(f, p)  # raises NotPrimeError for composite p
    if fp.is_zero:
        return len(g.coeffs) - 1
    gp = reduce_mod_p(g, p)
    return len(gcd_mod_p(fp, gp).coeffs) - 1


def is_second_last_divisor_unit(
    f: IntPolynomial, g: IntPolynomial, budget: int = DEFAULT_FACTOR_BUDGET
) -> bool:
    """Whether the second-last determinantal divisor of nonsingular f(C_g) is 1.

    Holds iff gcd(f mod p, g mod p) is linear for every prime p dividing
    |res(f, g)|; vacuously true when the resultant is a unit.
    """
    rho = resultant(f, g)
    if rho == 0:
        raise SingularMatrixError("res(f, g) = 0; f(C_g) is singular")
    if abs(rho) == 1:
        return True
    n = len(g.coeffs) - 1
    for p in factor_integer(abs(rho), budget).primes():
        fp = reduce_mod_p(f, p)
        gp = reduce_mod_p(g, p)
        degree = n if fp.is_zero else len(gcd_mod_p(fp, gp).coeffs) - 1
        if degree != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# the fast pipeline


def smith_fast(
    f: IntPolynomial, g: IntPolynomial, budget: int = DEFAULT_FACTOR_BUDGET
) -> SmithDecomposition:
    """Smith decomposition of f(C_g) through the theorem-driven pipeline.

    Equals the elimination oracle on every input; raises
    FactorizationLimitError only when the budget runs out *and* the
    remaining block is too large for the elimination fallback.
    """
    if not g.is_monic:
        raise NotMonicError(f"modulus must be monic, got {g}")
    chain = _fast_chain(f, g, budget)
    dec = SmithDecomposition.from_invariant_factors(chain)
    _maybe_crosscheck(f, g, dec)
    return dec


def _fast_chain(f, g, budget) -> list[int]:
    n = len(g.coeffs) - 1
    if n == 0:
        return []
    phi = f % g
    if phi.is_zero:
        return [0] * n
    split = gcd_split(phi, g)
    zeros = len(split.common.coeffs) - 1
    sub = _fast_coprime(split.f_quotient, split.g_quotient, budget)
    return sub + [0] * zeros


def _fast_coprime(F, G, budget) -> list[int]:
    """Invariant factors of F(C_G) for coprime F, G with G monic and
    deg F < deg G; all of them nonzero."""
    r = len(G.coeffs) - 1
    if r == 0:
        return []
    c = content(F)
    if c > 1:
        return [c * s for s in _fast_coprime(F.primitive_part(), G, budget)]
    if F.coefficient(0) == 0 and abs(G.coefficient(0)) == 1:
        # t^k is unimodular on Z[t]/(G) since res(t, G) = +-G(0); drop it.
        k = 0
        while F.coefficient(k) == 0:
            k += 1
        return _fast_coprime(IntPolynomial(F.coeffs[k:]), G, budget)
    if len(F.coeffs) - 1 == 0:
        return [1] * r  # F = +-1 after content extraction
    if abs(F.leading_coefficient) == 1:
        monic_f = F if F.is_monic else -F
        units = r - (len(monic_f.coeffs) - 1)
        return [1] * units + _fast_chain(G, monic_f, budget)
    for g1, g2 in _structured_splits(G):
        r1 = resultant(F, g1)
        r2 = resultant(F, g2)
        if gcd(r1, r2) == 1:
            return chain_from_diagonal(
                _fast_chain(F, g1, budget) + _fast_chain(F, g2, budget)
            )
    return _fast_profile(F, G, budget)


def _structured_splits(G):
    """Monic factorizations G = g1 * g2 with g1 of the shape t^d +- 1."""
    n = len(G.coeffs) - 1
    if n < 2:
        return
    inner = all(c == 0 for c in G.coeffs[1:-1])
    if not inner:
        return
    if G.coeffs[0] == -1:  # t^n - 1
        for d in sorted(_proper_divisors(n), reverse=True):
            g1 = IntPolynomial.monomial(d) - IntPolynomial([1])
            yield g1, G // g1
    elif G.coeffs[0] == 1:  # t^n + 1
        for b in sorted((b for b in _proper_divisors(n) if (n // b) % 2 == 1), reverse=True):
            g1 = IntPolynomial.monomial(b) + IntPolynomial([1])
            yield g1, G // g1


def _proper_divisors(n):
    return [d for d in range(1, n) if n % d == 0]


def _fast_profile(F, G, budget) -> list[int]:
    """Pin the chain of nonsingular F(C_G) from its determinantal-divisor
    profile, or fall back to elimination."""
    r = len(G.coeffs) - 1
    rho = resultant(F, G)
    last = abs(rho)
    if last == 1:
        return [1] * r
    try:
        primes = factor_integer(last, budget).primes()
    except FactorizationLimitError:
        return _oracle_chain(F, G, reraise=True)
    count = 0
    for p in primes:
        fp = reduce_mod_p(F, p)
        d = r if fp.is_zero else len(gcd_mod_p(fp, reduce_mod_p(G, p)).coeffs) - 1
        count = max(count, d)
    if count <= 1:
        # count == 0 cannot happen for last > 1; treat it as count 1
        return [1] * (r - 1) + [last]
    if count == 2:
        second = _cofactor_content(F, G, rho)
        if last % second:
            raise AssertionError(f"{second} does not divide {last}")
        return [1] * (r - 2) + [second, last // second]
    return _oracle_chain(F, G)


def _oracle_chain(F, G, reraise=False) -> list[int]:
    r = len(G.coeffs) - 1
    if r > ORACLE_FALLBACK_LIMIT:
        if reraise:
            raise FactorizationLimitError(
                f"budget exhausted and block of dimension {r} exceeds the "
                f"elimination fallback limit {ORACLE_FALLBACK_LIMIT}"
            )
        raise FactorizationLimitError(f"block of dimension {r} too large")
    dec = smith_form(IntMatrix(companion_residue_rows(F, G)))
    return list(dec.invariant_factors)


def _maybe_crosscheck(f, g, dec) -> None:
    if _crosscheck_mode == "off":
        return
    if len(dec.invariant_factors) > _CROSSCHECK_DIMENSION:
        return
    if _crosscheck_mode == "sampled" and next(_crosscheck_counter) % _CROSSCHECK_SAMPLE_EVERY:
        return
    oracle = smith_form(to_matrix(element(f, g)))
    if oracle.invariant_factors != dec.invariant_factors:
        raise AssertionError(
            "fast Smith pipeline disagrees with the elimination oracle for "
            f"f={f!s}, g={g!s}: fast {dec.invariant_factors} vs "
            f"oracle {oracle.invariant_factors}"
        )

"""Primality testing and integer factorization for arbitrary-size integers.

Primality is deterministic Miller-Rabin below 2**64 (the standard 12-base
certificate) and Baillie-PSW above; no Baillie-PSW pseudoprime is known, and
none exists below 2**64, so for the integer sizes this library meets the
answer is reliable.  Factorization is trial division by primes up to 10**6
followed by Brent's variant of Pollard rho.  Rho work is metered by a caller
supplied budget so that library code built on top can fall back to a slower
exact route instead of spinning forever on a hard semiprime.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import FactorizationLimitError

DEFAULT_FACTOR_BUDGET = 2_000_000

_TRIAL_LIMIT = 10**6

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10**24,
# which covers the whole range below 2**64 (Sorenson-Webster).
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_small_primes: list[int] = []
_small_prime_set: frozenset[int] = frozenset()


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


def _primes_to(limit: int) -> list[int]:
    global _small_primes, _small_prime_set
    if not _small_primes or _small_primes[-1] < limit:
        _small_primes = _sieve(limit)
        _small_prime_set = frozenset(_small_primes)
    return _small_primes


def _miller_rabin_witness(n: int, a: int) -> bool:
    """True if a witnesses the compositeness of odd n > 2."""
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's parameters.

    Assumes n odd, n > 2, n not a perfect square and with no tiny factors.
    """
    # Find D in 5, -7, 9, -11, ... with Jacobi(D, n) == -1.
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4

    # n + 1 = s * 2**r with s odd.
    s = n + 1
    r = 0
    while s % 2 == 0:
        s //= 2
        r += 1

    # Compute U_s, V_s by binary ladder.
    u, v, qk = 1, p, q
    for bit in bin(s)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * _HALF(n) % n, (d * u + p * v) * _HALF(n) % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(r - 1):
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def _HALF(n):
    # modular inverse of 2 mod odd n
    return (n + 1) // 2


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    if n == 1:
        return result
    return 0


def is_prime(n: int) -> bool:
    """Exact primality for n < 2**64; Baillie-PSW beyond."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n < 2**64:
        return not any(_miller_rabin_witness(n, a) for a in _MR_BASES_64)
    # Baillie-PSW: base-2 Miller-Rabin plus a strong Lucas test.
    if _miller_rabin_witness(n, 2):
        return False
    if isqrt(n) ** 2 == n:
        return False
    return _strong_lucas_prp(n)


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization of an integer base > 1.

    Invariants: primes strictly increasing, exponents >= 1, and the product
    of prime**exponent equals base.  Checked on construction.
    """

    base: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.base <= 1:
            raise ValueError("base must exceed 1")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"bad factor ({p}, {e})")
            last = p
            prod *= p**e
        if prod != self.base:
            raise ValueError("factors do not multiply back to base")

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


class _Budget:
    """Mutable operation counter shared across a factorization attempt."""

    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        self.remaining = limit

    def spend(self, amount: int) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise FactorizationLimitError("factorization budget exhausted")


def _pollard_brent(n: int, budget: _Budget, seed: int = 1) -> int:
    """A nontrivial factor of composite odd n, or raises on budget exhaustion.

    Brent's cycle-finding variant with batched gcds; each f-evaluation costs
    one budget unit.
    """
    if n % 2 == 0:
        return 2
    c = seed
    while True:
        y, r, q = 2, 1, 1
        m = 128
        g = 1
        while g == 1:
            x = y
            budget.spend(r)
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                budget.spend(steps)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Backtrack one step at a time.
            g = 1
            while g == 1:
                budget.spend(1)
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # rare cycle degeneracy: retry with a new polynomial


def factor_integer(n: int, budget: int = DEFAULT_FACTOR_BUDGET) -> Factorization:
    """Complete prime factorization of abs(n); requires abs(n) > 1.

    Raises FactorizationLimitError if the rho stage exhausts its budget
    before the factorization completes.
    """
    n = abs(n)
    if n <= 1:
        raise ValueError("factor_integer requires abs(n) > 1")
    counts: dict[int, int] = {}
    # Cheap pass first: most inputs fall entirely to small primes.  The
    # full trial range is only sieved when a composite cofactor survives.
    for limit in (min(10**4, _TRIAL_LIMIT), _TRIAL_LIMIT):
        for p in _primes_to(limit):
            if p * p > n:
                break
            while n % p == 0:
                counts[p] = counts.get(p, 0) + 1
                n //= p
        if n == 1 or is_prime(n):
            break
    if n > 1:
        meter = _Budget(budget)
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                counts[m] = counts.get(m, 0) + 1
                continue
            root = isqrt(m)
            if root * root == m:
                stack.extend((root, root))
                continue
            d = _pollard_brent(m, meter)
            stack.extend((d, m // d))
    base = 1
    for p, e in counts.items():
        base *= p**e
    return Factorization(base, tuple(sorted(counts.items())))

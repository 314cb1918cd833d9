"""Dense polynomial arithmetic over the integers and over prime fields.

Coefficients are stored lowest degree first: 1 + 3t - 2t^2 is
``IntPolynomial([1, 3, -2])``.  The zero polynomial stores an empty tuple
and its degree is the distinct sentinel ``MINUS_INFINITY`` (never an
integer), which compares below every int so that ``deg r < deg g`` style
checks need no special cases.

Everything is exact.  Multiplication is schoolbook on purpose: inputs in
this library have a few dozen coefficients at most.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import (
    BothZeroError,
    IndexOutOfRangeError,
    ModulusMismatchError,
    NonUnitLeadingCoefficientError,
    NotMonicError,
    NotPrimeError,
    ParseError,
)
from .matrices import bareiss_determinant
from .primes import is_prime


class _MinusInfinity:
    """Degree of the zero polynomial; compares below every integer."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


class IntPolynomial:
    """Immutable integer-coefficient polynomial in one variable t."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ValueError("degree must be non-negative")
        return cls([0] * degree + [coefficient])

    @classmethod
    def geometric(cls, length: int, step: int = 1) -> "IntPolynomial":
        """1 + t**step + t**(2*step) + ... with `length` terms."""
        if length < 0 or step < 1:
            raise ValueError("need length >= 0 and step >= 1")
        coeffs = [0] * ((length - 1) * step + 1) if length else []
        for i in range(length):
            coeffs[i * step] = 1
        return cls(coeffs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree as an int, or MINUS_INFINITY for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def coefficient(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __neg__(self):
        return IntPolynomial([-c for c in self._coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self._coeffs])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __call__(self, x):
        """Evaluate at x (int or Fraction) by Horner's rule."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        return poly_compose(self, inner)

    def content(self) -> int:
        return content(self)

    def primitive_part(self) -> "IntPolynomial":
        """self divided by its content (sign preserved); 0 stays 0."""
        c = content(self)
        if c <= 1:
            return self
        return IntPolynomial([x // c for x in self._coeffs])

    def __repr__(self):
        return f"IntPolynomial({list(self._coeffs)!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])


def poly_divmod(f: IntPolynomial, g: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Quotient and remainder of f by g, exact over the integers.

    Well defined whenever the leading coefficient of g is a unit of Z,
    i.e. +-1; then f = g*q + r with deg r < deg g, and q, r are unique.
    """
    lc = g.leading_coefficient
    if lc not in (1, -1):
        raise NonUnitLeadingCoefficientError(
            f"divisor leading coefficient {lc} is not a unit"
        )
    dg = len(g.coeffs) - 1
    rem = list(f.coeffs)
    if len(rem) <= dg:
        return IntPolynomial(), f
    q = [0] * (len(rem) - dg)
    gc = g.coeffs
    for i in range(len(rem) - dg - 1, -1, -1):
        c = rem[i + dg]
        if c == 0:
            continue
        qc = c * lc  # division by +-1
        q[i] = qc
        for j in range(dg + 1):
            rem[i + j] -= qc * gc[j]
    return IntPolynomial(q), IntPolynomial(rem[:dg])


def content(f: IntPolynomial) -> int:
    """Non-negative gcd of the coefficients; content of 0 is 0."""
    return reduce(gcd, f.coeffs, 0)


def monic_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """The monic greatest common divisor of f and a monic g, over Z[t].

    Euclid over the rationals, then the result is scaled to its primitive
    integer form.  A primitive divisor of a monic polynomial has unit
    leading coefficient, so the normalized result is monic.  The output is
    re-checked by exact trial division into both inputs.
    """
    if not g.is_monic:
        raise NotMonicError("second argument must be monic")
    if f.is_zero:
        return g
    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    while any(b):
        a, b = b, _frac_mod(a, b)
    # a is a nonzero rational gcd; clear denominators and strip content
    denom = 1
    for c in a:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in a]
    cont = reduce(gcd, ints, 0)
    ints = [c // cont for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    z = IntPolynomial(ints)
    if not z.is_monic:
        raise AssertionError(f"gcd of {f} and monic {g} failed to be monic: {z}")
    for poly in (f, g):
        if not (poly % z).is_zero:
            raise AssertionError(f"{z} does not divide {poly}")
    return z


def _frac_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a by b over the rationals (coefficient lists, low first)."""
    while b and b[-1] == 0:
        b.pop()
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        q = rem[-1] / lead
        shift = len(rem) - 1 - db
        for j in range(db + 1):
            rem[shift + j] -= q * b[j]
        rem.pop()
    return rem


def companion_residue_rows(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    """Coefficient rows of the matrix representing multiplication by f mod g.

    Row i (top row first) holds the coefficients, highest degree first, of
    t**(n-1-i) * f mod g where n = deg g.  The bottom row is therefore the
    reversed coefficient vector of f mod g.
    """
    if not g.is_monic:
        raise NotMonicError("modulus must be monic")
    n = len(g.coeffs) - 1
    gtail = g.coeffs[:-1]
    phi = (f % g).coeffs
    current = list(phi) + [0] * (n - len(phi))
    ladder = [current]
    for _ in range(n - 1):
        shifted = [0] + current
        top = shifted.pop()
        if top:
            shifted = [c - top * gt for c, gt in zip(shifted, gtail)]
        ladder.append(shifted)
        current = shifted
    # ladder[k] is t^k * f mod g (low first); matrix wants high-first, top row = k = n-1
    return [list(reversed(row)) for row in reversed(ladder)]


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Product of f over the roots of monic g, i.e. det of f acting on Z[t]/(g).

    This equals the classical resultant of f and g up to sign; the value
    returned carries the sign of the determinant.  It vanishes exactly when
    f and g share a root.
    """
    if not g.is_monic:
        raise NotMonicError("second argument must be monic")
    n = len(g.coeffs) - 1
    if n == 0:
        return 1
    return bareiss_determinant(companion_residue_rows(f, g))


def sylvester_resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant via the Sylvester matrix determinant.

    Kept as an independent cross-check; works for non-monic g too.
    Uses the Res(f, g) sign convention of the Sylvester matrix.
    """
    if f.is_zero or g.is_zero:
        return 0
    m = len(f.coeffs) - 1
    n = len(g.coeffs) - 1
    if m == 0 and n == 0:
        return 1
    size = m + n
    frow = list(reversed(f.coeffs))
    grow = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + frow + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + grow + [0] * (size - n - 1 - i))
    return bareiss_determinant(rows)


class ModPolynomial:
    """Polynomial over the prime field F_p, coefficients reduced into [0, p)."""

    __slots__ = ("_p", "_coeffs")

    def __init__(self, p: int, coeffs=()):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._p = p
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, p: int, coeffs: list[int]) -> "ModPolynomial":
        # internal fast path: trusts p prime and coeffs reduced
        obj = object.__new__(cls)
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        obj._p = p
        obj._coeffs = tuple(cs)
        return obj

    @property
    def p(self) -> int:
        return self._p

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "ModPolynomial"):
        if self._p != other._p:
            raise ModulusMismatchError(f"{self._p} vs {other._p}")

    def __eq__(self, other):
        if not isinstance(other, ModPolynomial):
            return NotImplemented
        return self._p == other._p and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._p, self._coeffs))

    def __add__(self, other):
        self._check(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self._p
        return ModPolynomial._raw(self._p, out)

    def __sub__(self, other):
        self._check(other)
        out = list(self._coeffs) + [0] * max(0, len(other._coeffs) - len(self._coeffs))
        for i, c in enumerate(other._coeffs):
            out[i] = (out[i] - c) % self._p
        return ModPolynomial._raw(self._p, out)

    def __mul__(self, other):
        self._check(other)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ModPolynomial._raw(self._p, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return ModPolynomial._raw(self._p, [c % self._p for c in out])

    def __mod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial modulus is zero")
        p = self._p
        rem = list(self._coeffs)
        dg = len(other._coeffs) - 1
        inv = pow(other._coeffs[-1], -1, p)
        oc = other._coeffs
        while len(rem) - 1 >= dg:
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dg:
                break
            q = rem[-1] * inv % p
            shift = len(rem) - 1 - dg
            for j in range(dg + 1):
                rem[shift + j] = (rem[shift + j] - q * oc[j]) % p
            rem.pop()
        return ModPolynomial._raw(p, rem)

    def monic(self) -> "ModPolynomial":
        if self.is_zero:
            return self
        lead = self._coeffs[-1]
        if lead == 1:
            return self
        inv = pow(lead, -1, self._p)
        return ModPolynomial._raw(self._p, [c * inv % self._p for c in self._coeffs])

    def __repr__(self):
        return f"ModPolynomial({self._p}, {list(self._coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return f"0 (mod {self._p})"
        body = str(IntPolynomial(self._coeffs))
        return f"{body} (mod {self._p})"


def reduce_mod_p(f: IntPolynomial, p: int) -> ModPolynomial:
    """Coefficientwise reduction of f into F_p[t]; the degree may drop."""
    return ModPolynomial(p, f.coeffs)


def gcd_mod_p(a: ModPolynomial, b: ModPolynomial) -> ModPolynomial:
    """Monic gcd in F_p[t] by the Euclidean algorithm."""
    if a.p != b.p:
        raise ModulusMismatchError(f"{a.p} vs {b.p}")
    if a.is_zero and b.is_zero:
        raise BothZeroError("gcd(0, 0) over F_p is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def horner_shift(h: IntPolynomial, k: int) -> IntPolynomial:
    """The degree-k truncated head of h produced by Horner evaluation.

    For h of degree m and 0 <= k < m this is
    h_m t^k + h_{m-1} t^(k-1) + ... + h_{m-k}.
    """
    m = len(h.coeffs) - 1
    if m < 1 or not 0 <= k < m:
        raise IndexOutOfRangeError(f"need 0 <= k < deg h, got k={k}, deg={h.degree}")
    return IntPolynomial(h.coeffs[m - k :])


def poly_compose(f: IntPolynomial, inner: IntPolynomial) -> IntPolynomial:
    """Coefficients of f(inner(t)), by Horner's rule in Z[t]."""
    acc = IntPolynomial()
    for c in reversed(f.coeffs):
        acc = acc * inner + IntPolynomial([c])
    return acc


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(\d+)|([t+\-*^()]))")


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse an ASCII polynomial in t, or a JSON coefficient array.

    The expression grammar allows integer literals, +, -, *, ^ with
    non-negative integer exponents, parentheses, and juxtaposition as
    multiplication ("3t", "(t+1)(t-1)").  A JSON array lists coefficients
    lowest degree first, e.g. [1, 3, -2] for 1 + 3t - 2t^2.
    """
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON coefficient array: {exc.msg}", exc.pos) from None
        if not isinstance(data, list):
            raise ParseError("JSON polynomial must be an array")
        coeffs = []
        for c in data:
            # ints, or decimal strings for values beyond double precision
            if isinstance(c, bool) or not isinstance(c, (int, str)):
                raise ParseError(f"JSON polynomial entries must be integers, got {c!r}")
            try:
                coeffs.append(int(c))
            except ValueError:
                raise ParseError(f"bad integer string {c!r}") from None
        return IntPolynomial(coeffs)
    return _Parser(text).parse()


class _Parser:
    """Recursive-descent parser for the polynomial expression grammar."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                if text[pos:].strip():
                    bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                    raise ParseError(f"unexpected character {text[bad]!r}", bad)
                break
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            else:
                self.tokens.append((m.group(2), m.group(2), m.start(2)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> IntPolynomial:
        if not self.tokens:
            raise ParseError("empty polynomial")
        result = self.expr()
        if self.i < len(self.tokens):
            raise ParseError("trailing input", self.tokens[self.i][2])
        return result

    def expr(self) -> IntPolynomial:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> IntPolynomial:
        value = self.unary()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.next()
                value = value * self.unary()
            elif nxt in ("int", "t", "("):
                value = value * self.unary()  # juxtaposition
            else:
                return value

    def unary(self) -> IntPolynomial:
        if self.peek() == "-":
            self.next()
            return -self.unary()
        if self.peek() == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self) -> IntPolynomial:
        base = self.atom()
        if self.peek() == "^":
            caret = self.next()
            if self.peek() != "int":
                pos = self.tokens[self.i][2] if self.i < len(self.tokens) else caret[2] + 1
                raise ParseError("exponent must be a non-negative integer", pos)
            exp = int(self.next()[1])
            return base**exp
        return base

    def atom(self) -> IntPolynomial:
        if self.peek() is None:
            raise ParseError("unexpected end of input", len(self.text))
        kind, value, pos = self.next()
        if kind == "int":
            return IntPolynomial([int(value)])
        if kind == "t":
            return T
        if kind == "(":
            inner = self.expr()
            if self.peek() != ")":
                raise ParseError("missing closing parenthesis", pos)
            self.next()
            return inner
        raise ParseError(f"unexpected token {value!r}", pos)

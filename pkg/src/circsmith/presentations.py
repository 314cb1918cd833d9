"""Cyclic group presentations and their abelianizations.

A cyclic presentation on n generators x_0 .. x_{n-1} is determined by one
defining word w; the relators are the n cyclic subscript shifts of w.  Only
exponent sums matter for the abelianization: the relation matrix is the
circulant built from the word's exponent-sum polynomial f over t^n - 1,
and its Smith form (transposition-invariant) gives the group.
"""

from __future__ import annotations

import re

from .abelian import AbelianGroup
from .companion import smith_fast
from .errors import IndexOutOfRangeError, ParseError
from .polynomials import IntPolynomial
from .primes import DEFAULT_FACTOR_BUDGET

_SYLLABLE = re.compile(r"\s*x(\d+)(?:\^(-?\d+))?")


class CyclicWord:
    """Defining word of a cyclic presentation, as (generator, exponent) syllables.

    Invariants: n >= 1, generator indices lie in [0, n), exponents are
    nonzero, and adjacent syllables use distinct generators (normalization
    merges runs and drops cancellations).
    """

    __slots__ = ("n", "syllables")

    def __init__(self, n: int, syllables):
        if n < 1:
            raise ValueError("need at least one generator")
        stack: list[list[int]] = []
        for gen, exp in syllables:
            gen = int(gen)
            exp = int(exp)
            if not 0 <= gen < n:
                raise IndexOutOfRangeError(f"generator x{gen} out of range for n={n}")
            if exp == 0:
                raise ValueError("zero exponent syllable")
            if stack and stack[-1][0] == gen:
                stack[-1][1] += exp
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([gen, exp])
        self.n = n
        self.syllables = tuple((g, e) for g, e in stack)

    def shifted(self, offset: int) -> "CyclicWord":
        """The word with every subscript moved by offset (mod n)."""
        return CyclicWord(self.n, [((g + offset) % self.n, e) for g, e in self.syllables])

    def __eq__(self, other):
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.n == other.n and self.syllables == other.syllables

    def __hash__(self):
        return hash((self.n, self.syllables))

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(
            f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in self.syllables
        )

    def __repr__(self):
        return f"CyclicWord({self.n}, {list(self.syllables)!r})"


def parse_word(text: str, n: int) -> CyclicWord:
    """Parse a word like "x0 x1^3 x2^-2" over n generators.

    Raises ParseError (with position) on malformed syllables or zero
    exponents, IndexOutOfRangeError when a subscript reaches n.
    """
    if n < 1:
        raise ValueError("need at least one generator")
    syllables = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _SYLLABLE.match(text, pos)
        if m is None:
            raise ParseError(f"expected a syllable like x0 or x1^-2, found {text[pos]!r}", pos)
        gen = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise ParseError("zero exponent", m.start(2))
        if gen >= n:
            raise IndexOutOfRangeError(f"generator x{gen} out of range for n={n}")
        syllables.append((gen, exp))
        pos = m.end()
    if not syllables:
        raise ParseError("empty word")
    return CyclicWord(n, syllables)


def exponent_polynomial(word: CyclicWord) -> IntPolynomial:
    """Coefficient i is the exponent sum of generator x_i in the word."""
    coeffs = [0] * word.n
    for gen, exp in word.syllables:
        coeffs[gen] += exp
    return IntPolynomial(coeffs)


def abelianization(word: CyclicWord, budget: int = DEFAULT_FACTOR_BUDGET) -> AbelianGroup:
    """Abelianization of the cyclically presented group defined by the word."""
    f = exponent_polynomial(word)
    g = IntPolynomial.monomial(word.n) - IntPolynomial([1])
    return AbelianGroup.from_smith(smith_fast(f, g, budget))

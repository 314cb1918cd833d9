"""Finitely generated abelian groups in canonical form.

A group is stored as its torsion coefficients (a divisor chain of integers
>= 2) plus a free rank.  Construction from a list of invariant factors
drops unit entries and turns zeros into free rank, so two groups compare
equal exactly when they are isomorphic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .smith import SmithDecomposition, chain_from_diagonal


@dataclass(frozen=True)
class AbelianGroup:
    """Direct sum of Z_{torsion[0]} + ... + Z_{torsion[-1]} + Z^betti."""

    torsion: tuple[int, ...] = ()
    betti: int = 0

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError("betti must be >= 0")
        prev = 1
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion coefficients must be >= 2")
            if d % prev:
                raise ValueError(f"torsion is not a divisor chain: {self.torsion}")
            prev = d

    @classmethod
    def from_invariant_factors(cls, factors) -> "AbelianGroup":
        """Canonical group of a relation matrix with these invariant factors."""
        chain = chain_from_diagonal(factors)
        torsion = tuple(s for s in chain if s > 1)
        betti = sum(1 for s in chain if s == 0)
        return cls(torsion, betti)

    @classmethod
    def from_smith(cls, decomposition: SmithDecomposition) -> "AbelianGroup":
        return cls.from_invariant_factors(decomposition.invariant_factors)

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls()

    @classmethod
    def cyclic(cls, order: int) -> "AbelianGroup":
        """Z_order, or Z for order 0; Z_1 is the trivial group."""
        return cls.from_invariant_factors([order])

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.betti == 0

    @property
    def is_finite(self) -> bool:
        return self.betti == 0

    @property
    def order(self) -> int | None:
        """Group order when finite, else None."""
        return prod(self.torsion) if self.betti == 0 else None

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    @property
    def min_generators(self) -> int:
        """Minimum number of generators: torsion length plus free rank."""
        return len(self.torsion) + self.betti

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        merged = chain_from_diagonal(
            list(self.torsion) + list(other.torsion) + [0] * (self.betti + other.betti)
        )
        return AbelianGroup.from_invariant_factors(merged)

    def power(self, copies: int) -> "AbelianGroup":
        """Direct sum of `copies` copies of this group."""
        if copies < 0:
            raise ValueError("copies must be >= 0")
        merged = chain_from_diagonal(list(self.torsion) * copies + [0] * (self.betti * copies))
        return AbelianGroup.from_invariant_factors(merged)

    def __str__(self):
        parts = [f"Z_{d}" for d in self.torsion]
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AbelianGroup(torsion={self.torsion!r}, betti={self.betti})"

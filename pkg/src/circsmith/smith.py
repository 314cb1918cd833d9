"""Smith normal form over the integers by classical elimination.

This is the ground-truth oracle used to validate every faster path in the
library.  Pivoting follows the textbook recipe: pick the nonzero entry of
least absolute value, clear its row and column by Euclidean steps, and when
a trailing entry is not divisible by the pivot, fold that row into the pivot
row and repeat.  Bignum growth is irrelevant at the matrix sizes this is
meant for (a few hundred rows at most).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd

from .errors import EnumerationLimitError, ShapeMismatchError
from .matrices import IntMatrix, bareiss_determinant

DEFAULT_MINOR_CAP = 2_000_000


def chain_from_diagonal(entries) -> list[int]:
    """Invariant factors of a diagonal matrix with the given entries.

    Zero means the whole of Z and divides nothing but itself, so zeros sort
    to the end.  Repeated adjacent gcd/lcm exchanges converge because each
    prime's exponent multiset is being bubble-sorted.
    """
    vals = sorted((abs(x) for x in entries), key=lambda v: (v == 0, v))
    changed = True
    while changed:
        changed = False
        for i in range(len(vals) - 1):
            a, b = vals[i], vals[i + 1]
            divides = (b % a == 0) if a else (b == 0)
            if not divides:
                g = gcd(a, b)
                l = 0 if (a == 0 or b == 0) else a * b // g
                vals[i], vals[i + 1] = g, l
                changed = True
    return vals


def _gammas_from_chain(chain) -> tuple[int, ...]:
    gammas = []
    acc = 1
    for s in chain:
        acc = acc * s
        gammas.append(acc)
    return tuple(gammas)


@dataclass(frozen=True)
class SmithDecomposition:
    """Canonical Smith data of an integer matrix.

    invariant_factors is the full diagonal, zeros included, of length
    min(rows, cols); determinantal_divisors[i] is the product of the first
    i+1 invariant factors (zero past the rank).  transforms, when present,
    is a pair (U, V) of unimodular matrices with U * M * V diagonal.
    """

    invariant_factors: tuple[int, ...]
    rank: int
    determinantal_divisors: tuple[int, ...]
    transforms: tuple[IntMatrix, IntMatrix] | None = None

    def __post_init__(self):
        facs = self.invariant_factors
        for i, s in enumerate(facs):
            if s < 0:
                raise ValueError("invariant factors must be non-negative")
            if i and facs[i - 1] == 0 and s != 0:
                raise ValueError("zeros must close the chain")
            if i and facs[i - 1] != 0 and s != 0 and s % facs[i - 1] != 0:
                raise ValueError(f"broken divisor chain at {i}: {facs}")
        if self.rank != sum(1 for s in facs if s):
            raise ValueError("rank inconsistent with invariant factors")
        if self.determinantal_divisors != _gammas_from_chain(facs):
            raise ValueError("determinantal divisors inconsistent")

    @classmethod
    def from_invariant_factors(cls, factors, transforms=None) -> "SmithDecomposition":
        chain = tuple(int(s) for s in factors)
        rank = sum(1 for s in chain if s)
        return cls(chain, rank, _gammas_from_chain(chain), transforms)

    @property
    def nonzero_factors(self) -> tuple[int, ...]:
        return self.invariant_factors[: self.rank]

    @property
    def nonunit_count(self) -> int:
        """Number of invariant factors other than 1 (zeros included)."""
        return sum(1 for s in self.invariant_factors if s != 1)


def _row_sub(rows, i, k, q, lo=0):
    if q:
        ri, rk = rows[i], rows[k]
        for j in range(lo, len(ri)):
            ri[j] -= q * rk[j]


def _col_sub(rows, j, k, q, lo=0):
    if q:
        for i in range(lo, len(rows)):
            rows[i][j] -= q * rows[i][k]


def _swap_cols(rows, a, b):
    if a != b:
        for r in rows:
            r[a], r[b] = r[b], r[a]


def smith_form(matrix: IntMatrix, want_transforms: bool = False) -> SmithDecomposition:
    """Smith decomposition of an arbitrary integer matrix.

    With want_transforms the returned (U, V) are verified before return:
    both have determinant +-1 and U * matrix * V equals the diagonal.
    """
    m, n = matrix.rows, matrix.cols
    a = matrix.to_rows()
    u = IntMatrix.identity(m).to_rows() if want_transforms else None
    v = IntMatrix.identity(n).to_rows() if want_transforms else None

    size = min(m, n)
    for k in range(size):
        # Bring the smallest nonzero of the trailing block to (k, k).
        best = None
        where = None
        for i in range(k, m):
            row = a[i]
            for j in range(k, n):
                x = row[j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    where = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if where is None:
            break
        bi, bj = where
        if bi != k:
            a[k], a[bi] = a[bi], a[k]
            if u is not None:
                u[k], u[bi] = u[bi], u[k]
        if bj != k:
            _swap_cols(a, k, bj)
            if v is not None:
                _swap_cols(v, k, bj)
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            if u is not None:
                u[k] = [-x for x in u[k]]

        while True:
            pivot = a[k][k]
            dirty = False
            for i in range(k + 1, m):
                x = a[i][k]
                if x == 0:
                    continue
                q, r = divmod(x, pivot)
                _row_sub(a, i, k, q)
                if u is not None:
                    _row_sub(u, i, k, q)
                if r:
                    # smaller positive pivot appeared below; promote it
                    a[k], a[i] = a[i], a[k]
                    if u is not None:
                        u[k], u[i] = u[i], u[k]
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(k + 1, n):
                x = a[k][j]
                if x == 0:
                    continue
                q, r = divmod(x, pivot)
                _col_sub(a, j, k, q)
                if v is not None:
                    _col_sub(v, j, k, q)
                if r:
                    _swap_cols(a, k, j)
                    if v is not None:
                        _swap_cols(v, k, j)
                    dirty = True
                    break
            if dirty:
                continue
            # Pivot is alone in its row and column; enforce divisibility.
            offender = None
            for i in range(k + 1, m):
                row = a[i]
                for j in range(k + 1, n):
                    if row[j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_sub(a, k, offender, -1)
            if u is not None:
                _row_sub(u, k, offender, -1)

    chain = [a[i][i] for i in range(size)]
    transforms = None
    if want_transforms:
        umat = IntMatrix(u)
        vmat = IntMatrix(v)
        if abs(umat.det()) != 1 or abs(vmat.det()) != 1:
            raise AssertionError("transform is not unimodular")
        product = umat * matrix * vmat
        expected = [[chain[i] if i == j else 0 for j in range(n)] for i in range(m)]
        if product != IntMatrix(expected):
            raise AssertionError("U*M*V does not equal the Smith diagonal")
        transforms = (umat, vmat)
    return SmithDecomposition.from_invariant_factors(chain, transforms)


def determinantal_divisors_bruteforce(
    matrix: IntMatrix, max_order: int, minor_cap: int = DEFAULT_MINOR_CAP
) -> tuple[int, ...]:
    """gcds of all k x k minors for k = 1 .. max_order, straight enumeration.

    This is deliberately naive; it exists to check cleverer formulas.
    Raises EnumerationLimitError when the minor count would exceed the cap.
    """
    m, n = matrix.rows, matrix.cols
    if max_order > min(m, n):
        raise ValueError(f"max_order {max_order} exceeds min(shape) {min(m, n)}")
    total = sum(comb(m, k) * comb(n, k) for k in range(1, max_order + 1))
    if total > minor_cap:
        raise EnumerationLimitError(f"{total} minors > cap {minor_cap}")
    rows = matrix.to_rows()
    out = []
    for k in range(1, max_order + 1):
        g = 0
        for rsel in combinations(range(m), k):
            picked = [rows[i] for i in rsel]
            for csel in combinations(range(n), k):
                sub = [[r[j] for j in csel] for r in picked]
                g = gcd(g, bareiss_determinant(sub))
                if g == 1:
                    break
            if g == 1:
                break
        out.append(g)
    return tuple(out)


def equivalent(a: IntMatrix, b: IntMatrix) -> bool:
    """Whether two same-shaped matrices have equal invariant factors."""
    if a.shape != b.shape:
        raise ShapeMismatchError(f"{a.shape} vs {b.shape}")
    return smith_form(a).invariant_factors == smith_form(b).invariant_factors

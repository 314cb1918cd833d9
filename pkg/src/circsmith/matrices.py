"""Exact dense matrices over the integers.

Entries are Python ints, so nothing ever overflows; determinants use the
Bareiss fraction-free elimination (all intermediate divisions are exact).
Matrices are immutable: every operation returns a fresh IntMatrix, and the
heavy algorithms work on private list-of-list copies obtained from
``to_rows``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import NotSquareError, ShapeMismatchError, SingularMatrixError

_JSON_INT_LIMIT = 2**53  # larger entries travel as decimal strings


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Determinant of a square list-of-lists; the input is consumed."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            head = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - head * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


class IntMatrix:
    """Immutable integer matrix stored row-major."""

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows):
        data = [list(r) for r in rows]
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        for r in data:
            for x in r:
                if not isinstance(x, int):
                    raise TypeError(f"integer entry expected, got {type(x).__name__}")
        self._rows = len(data)
        self._cols = ncols
        self._entries = tuple(x for r in data for x in r)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values) -> "IntMatrix":
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    def __getitem__(self, key) -> int:
        i, j = key
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(key)
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._entries[i * self._cols : (i + 1) * self._cols]

    def to_rows(self) -> list[list[int]]:
        """Mutable copy as a list of row lists."""
        c = self._cols
        return [list(self._entries[i * c : (i + 1) * c]) for i in range(self._rows)]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"

    def __str__(self):
        if self._rows == 0 or self._cols == 0:
            return f"<{self._rows}x{self._cols} empty>"
        cells = [[str(x) for x in self.row(i)] for i in range(self._rows)]
        width = max(len(s) for r in cells for s in r)
        return "\n".join(" ".join(s.rjust(width) for s in r) for r in cells)

    def __neg__(self):
        return IntMatrix([[-x for x in self.row(i)] for i in range(self._rows)])

    def __add__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeMismatchError(f"{self.shape} vs {other.shape}")
        return IntMatrix(
            [
                [a + b for a, b in zip(self.row(i), other.row(i))]
                for i in range(self._rows)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([[x * other for x in self.row(i)] for i in range(self._rows)])
        if isinstance(other, IntMatrix):
            if self._cols != other._rows:
                raise ShapeMismatchError(f"cannot multiply {self.shape} by {other.shape}")
            bt = other.transpose()
            return IntMatrix(
                [
                    [sum(a * b for a, b in zip(self.row(i), bt.row(j))) for j in range(other._cols)]
                    for i in range(self._rows)
                ]
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self._entries[i * self._cols + j] for i in range(self._rows)] for j in range(self._cols)]
        )

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        """Kronecker product: block matrix of self[i][j] * other."""
        out = []
        for i in range(self._rows):
            left = self.row(i)
            for p in range(other._rows):
                right = other.row(p)
                out.append([a * b for a in left for b in right])
        return IntMatrix(out)

    def det(self) -> int:
        if self._rows != self._cols:
            raise NotSquareError(f"{self.shape}")
        return bareiss_determinant(self.to_rows())

    def adjugate(self) -> "IntMatrix":
        """Transpose of the cofactor matrix; satisfies adj(M) * M = det(M) * I."""
        if self._rows != self._cols:
            raise NotSquareError(f"{self.shape}")
        n = self._rows
        if n == 0:
            raise NotSquareError("adjugate of an empty matrix")
        if n == 1:
            return IntMatrix([[1]])
        rows = self.to_rows()
        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [
                    [rows[r][c] for c in range(n) if c != j]
                    for r in range(n)
                    if r != i
                ]
                cof = bareiss_determinant(minor)
                if (i + j) % 2:
                    cof = -cof
                adj[j][i] = cof
        return IntMatrix(adj)

    def to_json(self) -> str:
        """Serialize as {"rows", "cols", "entries"}; huge entries as strings."""
        entries = [
            [x if abs(x) <= _JSON_INT_LIMIT else str(x) for x in self.row(i)]
            for i in range(self._rows)
        ]
        return json.dumps({"rows": self._rows, "cols": self._cols, "entries": entries})

    @classmethod
    def from_json(cls, text) -> "IntMatrix":
        obj = json.loads(text) if isinstance(text, str) else text
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = []
        for r in obj["entries"]:
            row = []
            for x in r:
                # ints, or decimal strings for entries beyond double precision
                if isinstance(x, bool) or not isinstance(x, (int, str)):
                    raise ValueError(f"matrix entries must be integers, got {x!r}")
                row.append(int(x))
            entries.append(row)
        m = cls(entries)
        if m.shape != (rows, cols):
            raise ValueError(f"declared shape {(rows, cols)} != entries shape {m.shape}")
        return m


def kronecker(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return a.kron(b)


def solve_row_exact(matrix: IntMatrix, rhs) -> tuple[Fraction, ...]:
    """The unique rational row x with x * matrix == rhs.

    Cramer's rule over Bareiss determinants: x_j is det(matrix with row j
    replaced by rhs) over det(matrix).
    """
    if matrix.rows != matrix.cols:
        raise NotSquareError(f"{matrix.shape}")
    n = matrix.rows
    rhs = list(rhs)
    if len(rhs) != n:
        raise ShapeMismatchError(f"rhs length {len(rhs)} != {n}")
    d = matrix.det()
    if d == 0:
        raise SingularMatrixError("matrix is singular")
    xs = []
    base = matrix.to_rows()
    for j in range(n):
        work = [list(r) for r in base]
        work[j] = list(rhs)
        xs.append(Fraction(bareiss_determinant(work), d))
    return tuple(xs)

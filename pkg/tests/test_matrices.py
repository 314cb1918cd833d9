import json
import random
from fractions import Fraction

import pytest

from circsmith import (
    IntMatrix,
    element,
    kronecker,
    parse_polynomial,
    solve_row_exact,
    to_matrix,
)
from circsmith.errors import NotSquareError, ShapeMismatchError, SingularMatrixError

P = parse_polynomial


def worked_example_matrix():
    return to_matrix(element(P("1+3t-2t^2"), P("t^4-1")))


def random_matrix(rng, n, lo=-9, hi=9):
    return IntMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def cofactor_det(m):
    """Recursive cofactor expansion; the slow determinant oracle."""
    n = m.rows
    if n == 0:
        return 1
    if n == 1:
        return m[0, 0]
    total = 0
    rows = m.to_rows()
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = IntMatrix([[r[c] for c in range(n) if c != j] for r in rows[1:]])
        term = rows[0][j] * cofactor_det(minor)
        total += term if j % 2 == 0 else -term
    return total


class TestDeterminant:
    def test_identity(self):
        assert IntMatrix.identity(5).det() == 1

    def test_worked_example_sign(self):
        m = worked_example_matrix()
        assert m.det() == -144
        assert cofactor_det(m) == -144

    def test_singular_circulant(self):
        g = P("t^3-1")
        m = to_matrix(element(P("t"), g)) - IntMatrix.identity(3)
        assert m.det() == 0

    def test_matches_cofactor_oracle(self):
        rng = random.Random(2)
        for n in range(0, 6):
            for _ in range(10):
                m = random_matrix(rng, n)
                assert m.det() == cofactor_det(m)

    def test_not_square(self):
        with pytest.raises(NotSquareError):
            IntMatrix.zeros(2, 3).det()


class TestAdjugate:
    def test_diagonal(self):
        assert IntMatrix([[2, 0], [0, 3]]).adjugate() == IntMatrix([[3, 0], [0, 2]])

    def test_identity(self):
        for n in (1, 2, 5):
            assert IntMatrix.identity(n).adjugate() == IntMatrix.identity(n)

    def test_worked_example_entry_gcd(self):
        import math

        adj = worked_example_matrix().adjugate()
        g = 0
        for i in range(4):
            for j in range(4):
                g = math.gcd(g, adj[i, j])
        assert g == 3

    def test_defining_identity(self):
        rng = random.Random(4)
        for n in range(1, 9):
            m = random_matrix(rng, n, lo=-5, hi=5)
            d = m.det()
            assert m.adjugate() * m == IntMatrix.identity(n) * d
            assert m * m.adjugate() == IntMatrix.identity(n) * d


class TestKronecker:
    def test_block_diagonal(self):
        b = IntMatrix([[1, 2], [3, 4]])
        k = kronecker(IntMatrix.identity(2), b)
        assert k == IntMatrix(
            [[1, 2, 0, 0], [3, 4, 0, 0], [0, 0, 1, 2], [0, 0, 3, 4]]
        )

    def test_identity_one(self):
        a = IntMatrix([[1, 2], [3, 4]])
        assert kronecker(a, IntMatrix.identity(1)) == a

    def test_scalar(self):
        b = IntMatrix([[1, 2], [3, 4]])
        assert kronecker(IntMatrix([[3]]), b) == b * 3


class TestSolveRowExact:
    def test_identity(self):
        xs = solve_row_exact(IntMatrix.identity(3), [0, 0, 7])
        assert xs == (Fraction(0), Fraction(0), Fraction(7))

    def test_adjugate_bottom_row(self):
        m = worked_example_matrix()
        xs = solve_row_exact(m, [0, 0, 0, -144])
        adj = m.adjugate()
        assert [int(x) for x in xs] == [adj[3, j] for j in range(4)]

    def test_fractional(self):
        xs = solve_row_exact(IntMatrix([[2, 0], [0, 3]]), [1, 1])
        assert xs == (Fraction(1, 2), Fraction(1, 3))

    def test_substitution(self):
        rng = random.Random(6)
        for _ in range(40):
            n = rng.randint(1, 6)
            m = random_matrix(rng, n, lo=-6, hi=6)
            if m.det() == 0:
                continue
            rhs = [rng.randint(-9, 9) for _ in range(n)]
            xs = solve_row_exact(m, rhs)
            for j in range(n):
                assert sum(xs[i] * m[i, j] for i in range(n)) == rhs[j]

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            solve_row_exact(IntMatrix.zeros(2, 2), [1, 1])


class TestShapeAndJson:
    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            IntMatrix.identity(2) + IntMatrix.identity(3)

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            IntMatrix([[1, 2], [3]])

    def test_json_round_trip(self):
        m = IntMatrix([[1, -2], [2**80, 5]])
        again = IntMatrix.from_json(m.to_json())
        assert again == m
        payload = json.loads(m.to_json())
        assert payload["entries"][1][0] == str(2**80)  # big entries as strings
        assert payload["entries"][0][0] == 1

    def test_json_shape_validation(self):
        with pytest.raises(ValueError):
            IntMatrix.from_json('{"rows": 2, "cols": 2, "entries": [[1, 2]]}')

    def test_json_rejects_floats(self):
        with pytest.raises(ValueError):
            IntMatrix.from_json('{"rows": 1, "cols": 1, "entries": [[2.5]]}')

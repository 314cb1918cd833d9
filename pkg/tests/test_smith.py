import random
from math import prod

import pytest

from circsmith import (
    IntMatrix,
    SmithDecomposition,
    chain_from_diagonal,
    determinantal_divisors_bruteforce,
    element,
    equivalent,
    kronecker,
    parse_polynomial,
    smith_form,
    to_matrix,
)
from circsmith.errors import EnumerationLimitError, ShapeMismatchError

P = parse_polynomial


def random_matrix(rng, rows, cols, lo=-9, hi=9):
    return IntMatrix([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_unimodular(rng, n, steps=12):
    """Product of elementary row operations applied to the identity."""
    rows = IntMatrix.identity(n).to_rows()
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    if rng.random() < 0.5:
        rows[0] = [-x for x in rows[0]]
    return IntMatrix(rows)


class TestSmithForm:
    def test_worked_example_and_transpose(self):
        m = to_matrix(element(P("1+3t-2t^2"), P("t^4-1")))
        assert smith_form(m).invariant_factors == (1, 1, 3, 48)
        assert smith_form(m.transpose()).invariant_factors == (1, 1, 3, 48)

    def test_zero_matrices(self):
        assert smith_form(IntMatrix.zeros(3, 3)).invariant_factors == (0, 0, 0)
        assert smith_form(IntMatrix.zeros(2, 5)).invariant_factors == (0, 0)
        assert smith_form(IntMatrix.zeros(2, 5)).rank == 0

    def test_diag_4_6(self):
        assert smith_form(IntMatrix.diagonal([4, 6])).invariant_factors == (2, 12)

    def test_rectangular(self):
        m = IntMatrix([[2, 4, 6], [4, 8, 12]])
        dec = smith_form(m)
        assert dec.invariant_factors == (2, 0)
        assert dec.rank == 1

    def test_unimodular_invariance(self):
        rng = random.Random(10)
        for _ in range(40):
            n = rng.randint(1, 6)
            m = random_matrix(rng, n, n)
            u = random_unimodular(rng, n)
            v = random_unimodular(rng, n)
            assert (
                smith_form(u * m * v).invariant_factors
                == smith_form(m).invariant_factors
            )

    def test_product_of_factors_is_abs_det(self):
        rng = random.Random(12)
        for _ in range(40):
            n = rng.randint(1, 6)
            m = random_matrix(rng, n, n)
            dec = smith_form(m)
            assert prod(dec.invariant_factors) == abs(m.det())
            if m.det() != 0:
                assert dec.determinantal_divisors[-1] == abs(m.det())

    def test_transforms_verified(self):
        rng = random.Random(14)
        for _ in range(25):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            m = random_matrix(rng, rows, cols)
            dec = smith_form(m, want_transforms=True)
            u, v = dec.transforms
            assert abs(u.det()) == 1 and abs(v.det()) == 1
            product = u * m * v
            for i in range(rows):
                for j in range(cols):
                    expected = dec.invariant_factors[i] if i == j else 0
                    assert product[i, j] == expected


class TestBruteForceDivisors:
    def test_worked_example(self):
        m = to_matrix(element(P("1+3t-2t^2"), P("t^4-1")))
        assert determinantal_divisors_bruteforce(m, 4) == (1, 1, 3, 144)

    def test_zero_and_identity(self):
        assert determinantal_divisors_bruteforce(IntMatrix.zeros(3, 3), 3) == (0, 0, 0)
        assert determinantal_divisors_bruteforce(IntMatrix.identity(3), 3) == (1, 1, 1)

    def test_agrees_with_smith_gammas(self):
        rng = random.Random(16)
        for _ in range(25):
            n = rng.randint(1, 7)
            m = random_matrix(rng, n, n, lo=-4, hi=4)
            brute = determinantal_divisors_bruteforce(m, n)
            assert brute == smith_form(m).determinantal_divisors

    def test_enumeration_cap(self):
        m = IntMatrix.zeros(8, 8)
        with pytest.raises(EnumerationLimitError):
            determinantal_divisors_bruteforce(m, 4, minor_cap=10)

    def test_max_order_bound(self):
        with pytest.raises(ValueError):
            determinantal_divisors_bruteforce(IntMatrix.identity(2), 3)


class TestEquivalent:
    def test_unimodular_pair(self):
        rng = random.Random(18)
        m = random_matrix(rng, 4, 4)
        u = random_unimodular(rng, 4)
        v = random_unimodular(rng, 4)
        assert equivalent(m, u * m * v)

    def test_permuted_diagonals(self):
        assert equivalent(IntMatrix.diagonal([1, 2]), IntMatrix.diagonal([2, 1]))
        assert not equivalent(IntMatrix.diagonal([1, 2]), IntMatrix.diagonal([1, 3]))

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            equivalent(IntMatrix.identity(2), IntMatrix.identity(3))


class TestKroneckerSmith:
    def test_permutation_similarity(self):
        rng = random.Random(20)
        for _ in range(15):
            a = random_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
            b = random_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
            assert (
                smith_form(kronecker(a, b)).invariant_factors
                == smith_form(kronecker(b, a)).invariant_factors
            )


class TestChainUtilities:
    def test_chain_from_diagonal(self):
        assert chain_from_diagonal([4, 6]) == [2, 12]
        assert chain_from_diagonal([0, 0]) == [0, 0]
        assert chain_from_diagonal([3, 0, 2]) == [1, 6, 0]
        assert chain_from_diagonal([2, 3, 5]) == [1, 1, 30]
        assert chain_from_diagonal([-2, 4]) == [2, 4]
        assert chain_from_diagonal([]) == []

    def test_chain_matches_diagonal_smith(self):
        rng = random.Random(22)
        for _ in range(50):
            entries = [rng.randint(-6, 6) for _ in range(rng.randint(0, 6))]
            expected = smith_form(IntMatrix.diagonal(entries)).invariant_factors
            assert tuple(chain_from_diagonal(entries)) == expected

    def test_decomposition_validation(self):
        with pytest.raises(ValueError):
            SmithDecomposition.from_invariant_factors([2, 3])  # 2 does not divide 3
        with pytest.raises(ValueError):
            SmithDecomposition.from_invariant_factors([0, 2])  # zero not last
        dec = SmithDecomposition.from_invariant_factors([1, 2, 4, 0])
        assert dec.rank == 3
        assert dec.determinantal_divisors == (1, 2, 8, 0)
        assert dec.nonunit_count == 3

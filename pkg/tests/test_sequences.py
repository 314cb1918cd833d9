from math import gcd

import pytest

from circsmith import IntPolynomial, fibonacci, frac_fib, lucas, parse_polynomial, resultant


def test_classical_fibonacci():
    assert [fibonacci(j) for j in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_lucas_values():
    assert [lucas(j) for j in range(8)] == [2, 1, 3, 4, 7, 11, 18, 29]


def test_weighted_values():
    assert [frac_fib(2, j) for j in range(7)] == [0, 1, 2, 5, 12, 29, 70]
    assert [frac_fib(3, j) for j in range(6)] == [0, 1, 3, 10, 33, 109]
    for k in (1, 2, 9):
        assert frac_fib(k, 1) == 1
        assert frac_fib(k, 0) == 0


def test_recurrence_holds_far_out():
    for k in (1, 4):
        for j in (50, 199):
            assert frac_fib(k, j + 2) == k * frac_fib(k, j + 1) + frac_fib(k, j)


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        frac_fib(0, 3)
    with pytest.raises(ValueError):
        frac_fib(1, -1)
    with pytest.raises(ValueError):
        lucas(-2)


def test_lucas_resultant_identity_small():
    f = parse_polynomial("t^2+t-1")
    for n in range(1, 21):
        g = IntPolynomial.monomial(n) - IntPolynomial([1])
        assert lucas(n) == abs(resultant(f, g)) + 1 + (-1) ** n


def test_fibonacci_gcd_cases_small():
    for n in range(2, 80):
        if gcd(n, 6) != 2 or gcd(n, 16) == 8:
            continue
        m = n // 2
        d = gcd(fibonacci(m), 1 + (-1) ** m * fibonacci(m - 1))
        g16 = gcd(n, 16)
        if g16 == 2:
            assert d == 1
        elif g16 == 4:
            assert d == fibonacci(n // 4)
        else:
            assert d == lucas(n // 4)

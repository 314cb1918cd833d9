"""Fibonacci-type integer sequences, memoized exactly.

frac_fib(k, j) is the two-term recurrence F_0 = 0, F_1 = 1,
F_{j+2} = k*F_{j+1} + F_j; k = 1 gives the classical Fibonacci numbers.
Lucas numbers start 2, 1 and follow the Fibonacci recurrence.

Tables are append-only and guarded by a lock, so concurrent readers always
see a consistent prefix.  No floating-point shortcut is ever used: values
like F_200 must be exact.
"""

from __future__ import annotations

import threading

_lock = threading.Lock()
_frac_tables: dict[int, list[int]] = {}
_lucas_table: list[int] = [2, 1]


def frac_fib(k: int, j: int) -> int:
    """F_j of the k-weighted Fibonacci recurrence; requires k >= 1, j >= 0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if j < 0:
        raise ValueError("index must be >= 0")
    with _lock:
        table = _frac_tables.setdefault(k, [0, 1])
        while len(table) <= j:
            table.append(k * table[-1] + table[-2])
        return table[j]


def fibonacci(j: int) -> int:
    return frac_fib(1, j)


def lucas(j: int) -> int:
    """Lucas number L_j (L_0 = 2, L_1 = 1)."""
    if j < 0:
        raise ValueError("index must be >= 0")
    with _lock:
        while len(_lucas_table) <= j:
            _lucas_table.append(_lucas_table[-1] + _lucas_table[-2])
        return _lucas_table[j]

# src/qopolars/algebra/resultant.py
"""Sylvester resultants by fraction-free (Bareiss) elimination over any exact ring."""
from typing import Callable, List, Sequence, TypeVar

from qopolars.algebra.cyclotomic import ONE, ZERO, CyclotomicNumber
from qopolars.algebra.unipoly import UniPoly

R = TypeVar("R")


def sylvester_matrix(p: Sequence[R], q: Sequence[R], zero: R) -> List[List[R]]:
    """p, q given low to high with nonzero leading coefficients."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows: List[List[R]] = []
    for shift in range(n):
        row = [zero] * size
        for i, c in enumerate(reversed(p)):
            row[shift + i] = c
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for i, c in enumerate(reversed(q)):
            row[shift + i] = c
        rows.append(row)
    return rows


def bareiss_determinant(matrix: List[List[R]], zero: R, one: R, divide: Callable[[R, R], R]) -> R:
    """Fraction-free determinant; every division is exact."""
    size = len(matrix)
    if size == 0:
        return one
    m = [list(row) for row in matrix]
    sign = 1
    previous = one
    for k in range(size - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, size) if m[i][k]), None)
            if swap is None:
                return zero
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = divide(m[i][j] * pivot - m[i][k] * m[k][j], previous)
            m[i][k] = zero
        previous = pivot
    det = m[size - 1][size - 1]
    return det if sign == 1 else -det


def sylvester_resultant(
    p: Sequence[R],
    q: Sequence[R],
    zero: R,
    one: R,
    divide: Callable[[R, R], R],
) -> R:
    """Res(p, q) = lc(p)^deg q · ∏ q(α) over the roots α of p."""
    if not p or not q:
        raise ValueError("resultant of a zero polynomial")
    m, n = len(p) - 1, len(q) - 1
    if m == 0:
        return _power(p[0], n, one)
    if n == 0:
        return _power(q[0], m, one)
    return bareiss_determinant(sylvester_matrix(p, q, zero), zero, one, divide)


def _power(base: R, exponent: int, one: R) -> R:
    result = one
    for _ in range(exponent):
        result = result * base
    return result


def resultant(p: UniPoly, q: UniPoly) -> CyclotomicNumber:
    """Resultant of two univariate polynomials over Q(ζ_N)."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    return sylvester_resultant(p.coeffs, q.coeffs, ZERO, ONE, lambda a, b: a / b)

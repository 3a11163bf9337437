# src/qopolars/algebra/rational.py
"""Exact rationals on top of sympy's QQ domain."""
from math import gcd
from typing import Iterable, Union

from sympy import QQ, Rational as SympyRational

Rational = QQ.dtype
RationalLike = Union[int, str, "Rational", SympyRational]


def rat(value: RationalLike, denominator: int = 1) -> Rational:
    """Convert ints, "p/q" strings and sympy Rationals to a QQ element."""
    if isinstance(value, Rational) and denominator == 1:
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        if denominator == 0:
            raise ZeroDivisionError("zero denominator")
        return QQ(value, denominator)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return QQ(int(num), int(den) * denominator)
        return QQ(int(text), denominator)
    if isinstance(value, SympyRational):
        return QQ(int(value.p), int(value.q) * denominator)
    if isinstance(value, Rational):
        return value / denominator
    raise TypeError(f"cannot convert {value!r} to a rational")


def rat_str(value: Rational) -> str:
    """Serialize as "p/q", or "p" for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def rat_ceil(value: Rational) -> int:
    return ceil_div(int(value.numerator), int(value.denominator))


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def lcm_all(values: Iterable[int]) -> int:
    result = 1
    for value in values:
        result = lcm(result, int(value))
    return result


def denominator_lcm(values: Iterable[Rational]) -> int:
    return lcm_all(int(v.denominator) for v in values)

# src/qopolars/series/ypoly.py
from math import factorial
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from qopolars.algebra.cyclotomic import ONE, CyclotomicNumber
from qopolars.algebra.rational import Rational, RationalLike, rat
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries


class SeriesYPoly:
    """Polynomial in y whose coefficients (low to high) are fractional series."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Iterable[FractionalSeries] = ()):
        items = list(coeffs)
        for c in items:
            if c.nvars != nvars:
                raise ValueError(f"coefficient in {c.nvars} variables, expected {nvars}")
        while items and items[-1].is_zero():
            items.pop()
        self.nvars = nvars
        self.coeffs: Tuple[FractionalSeries, ...] = tuple(items)

    @classmethod
    def constant(cls, series: FractionalSeries) -> "SeriesYPoly":
        return cls(series.nvars, [series])

    @classmethod
    def y(cls, nvars: int) -> "SeriesYPoly":
        return cls(nvars, [FractionalSeries.zero(nvars), FractionalSeries.constant(nvars, ONE)])

    @classmethod
    def from_roots(cls, roots: Iterable[FractionalSeries], nvars: int) -> "SeriesYPoly":
        result = cls(nvars, [FractionalSeries.constant(nvars, ONE)])
        for root in roots:
            result = result * cls(nvars, [-root, FractionalSeries.constant(nvars, ONE)])
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> FractionalSeries:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return FractionalSeries.zero(self.nvars)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == FractionalSeries.constant(self.nvars, ONE)

    def is_weierstrass(self) -> bool:
        """Monic, and the non-leading coefficients have no constant term."""
        zero = Exponent.zero(self.nvars)
        return self.is_monic and all(c.coefficient(zero).is_zero() for c in self.coeffs[:-1])

    @property
    def precision(self) -> Optional[Rational]:
        bounds = [c.precision for c in self.coeffs if c.precision is not None]
        return min(bounds) if bounds else None

    # arithmetic

    def _lift(self, other) -> "SeriesYPoly":
        if isinstance(other, SeriesYPoly):
            return other
        if isinstance(other, FractionalSeries):
            return SeriesYPoly.constant(other)
        return SeriesYPoly.constant(FractionalSeries.constant(self.nvars, other))

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SeriesYPoly(self.nvars, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return SeriesYPoly(self.nvars, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return SeriesYPoly(self.nvars)
        out = [FractionalSeries.zero(self.nvars)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return SeriesYPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = SeriesYPoly(self.nvars, [FractionalSeries.constant(self.nvars, ONE)])
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self, k: int = 1, normalized: bool = False) -> "SeriesYPoly":
        if k < 0:
            raise ValueError(f"derivative order must be non-negative, got {k}")
        out = [self.coeffs[i] * (factorial(i) // factorial(i - k)) for i in range(k, len(self.coeffs))]
        result = SeriesYPoly(self.nvars, out)
        n = self.degree
        if normalized and n >= k:
            result = result * rat(factorial(n - k), factorial(n))
        return result

    def __call__(self, value: FractionalSeries) -> FractionalSeries:
        acc = FractionalSeries.zero(self.nvars)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def taylor_shift(self, center: FractionalSeries) -> "SeriesYPoly":
        """g(center + w) as a polynomial in w."""
        shift = SeriesYPoly(self.nvars, [center, FractionalSeries.constant(self.nvars, ONE)])
        acc = SeriesYPoly(self.nvars)
        for c in reversed(self.coeffs):
            acc = acc * shift + c
        return acc

    def substitute_monomial(self, weights: Sequence[int]) -> "SeriesYPoly":
        return SeriesYPoly(1, [c.substitute_monomial(weights) for c in self.coeffs])

    def truncate(self, precision: RationalLike) -> "SeriesYPoly":
        return SeriesYPoly(self.nvars, [c.truncate(precision) for c in self.coeffs])

    def act(self, conductor: int, shifts: Sequence[int]) -> "SeriesYPoly":
        return SeriesYPoly(self.nvars, [c.act(conductor, shifts) for c in self.coeffs])

    def points(self) -> Iterator[Tuple[Tuple[Rational, ...], CyclotomicNumber]]:
        """Exponents in Q^{d+1}, the last entry being the y-degree."""
        for j, c in enumerate(self.coeffs):
            for exp, value in c.items():
                yield tuple(exp) + (rat(j),), value

    # comparison and rendering

    def __eq__(self, other):
        if not isinstance(other, SeriesYPoly):
            return False
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, self.coeffs))

    def to_json(self) -> List:
        return [c.to_json() for c in self.coeffs]

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c.vanishes_within_precision() and c.is_exact:
                continue
            power = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            text = c.format(names)
            single = len(c.terms) == 1 and c.is_exact
            if not power:
                parts.append(text)
            elif text == "1" and single:
                parts.append(power)
            elif text == "-1" and single:
                parts.append(f"-{power}")
            elif single:
                parts.append(f"{text}*{power}")
            else:
                parts.append(f"({text})*{power}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"SeriesYPoly({self})"


def substitute_monomial(g, weights: Sequence[int]):
    """Monomial substitution x_i ↦ u^{r_i} for series and y-polynomials alike."""
    return g.substitute_monomial(weights)

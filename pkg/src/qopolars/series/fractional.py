# src/qopolars/series/fractional.py
"""Truncated fractional power series in d variables over Q(ζ_N)."""
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from qopolars.algebra.cyclotomic import ONE, ZERO, CyclotomicNumber
from qopolars.algebra.rational import Rational, RationalLike, denominator_lcm, lcm_all, rat, rat_str
from qopolars.series.exponent import Exponent, minimal_elements
from qopolars.utils.errors import IndeterminateError

Scalar = (CyclotomicNumber, int, Rational)


def _scalar(value) -> CyclotomicNumber:
    if isinstance(value, CyclotomicNumber):
        return value
    return CyclotomicNumber.from_rational(value)


def _min_precision(a: Optional[Rational], b: Optional[Rational]) -> Optional[Rational]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class FractionalSeries:
    """
    Finite map exponent -> coefficient together with a precision T.

    ``precision is None`` means the series is exact (a fractional
    polynomial). Otherwise every term of total order >= T is unknown and
    none is stored.
    """

    __slots__ = ("nvars", "terms", "precision", "_hash")

    def __init__(
        self,
        nvars: int,
        terms: Optional[Mapping[Exponent, object]] = None,
        precision: Optional[RationalLike] = None,
    ):
        self.nvars = nvars
        self.precision: Optional[Rational] = None if precision is None else rat(precision)
        cleaned: Dict[Exponent, CyclotomicNumber] = {}
        for exp, coeff in (terms or {}).items():
            c = _scalar(coeff)
            if c.is_zero():
                continue
            if exp.dim != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if self.precision is not None and exp.total() >= self.precision:
                continue
            cleaned[exp] = c
        self.terms: Dict[Exponent, CyclotomicNumber] = cleaned
        self._hash: Optional[int] = None

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "FractionalSeries":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "FractionalSeries":
        return cls(nvars, {Exponent.zero(nvars): value})

    @classmethod
    def monomial(cls, exponent: Exponent, coeff=ONE) -> "FractionalSeries":
        return cls(exponent.dim, {exponent: coeff})

    # views

    @property
    def is_exact(self) -> bool:
        return self.precision is None

    def is_zero(self) -> bool:
        """Exactly zero."""
        return not self.terms and self.precision is None

    def vanishes_within_precision(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exponent: Exponent) -> CyclotomicNumber:
        return self.terms.get(exponent, ZERO)

    def exponents(self) -> List[Exponent]:
        return sorted(self.terms, key=Exponent.sort_key)

    def items(self) -> Iterator[Tuple[Exponent, CyclotomicNumber]]:
        for exp in self.exponents():
            yield exp, self.terms[exp]

    @property
    def denominator(self) -> int:
        """Smallest N with every exponent in (1/N)Z^d."""
        return lcm_all(exp.denominator() for exp in self.terms) if self.terms else 1

    def min_total(self) -> Optional[Rational]:
        if not self.terms:
            return None
        return min(exp.total() for exp in self.terms)

    def order_bound(self) -> Optional[Rational]:
        """Lower bound for the total order of every term, known or not."""
        known = self.min_total()
        if known is None:
            return self.precision
        return known if self.precision is None else min(known, self.precision)

    # arithmetic

    def _check(self, other: "FractionalSeries") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"series in {self.nvars} and {other.nvars} variables")

    def __add__(self, other):
        if isinstance(other, Scalar) and not isinstance(other, bool):
            other = FractionalSeries.constant(self.nvars, other)
        if not isinstance(other, FractionalSeries):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, ZERO) + c
        return FractionalSeries(self.nvars, terms, _min_precision(self.precision, other.precision))

    __radd__ = __add__

    def __neg__(self):
        return FractionalSeries(self.nvars, {e: -c for e, c in self.terms.items()}, self.precision)

    def __sub__(self, other):
        if isinstance(other, Scalar) and not isinstance(other, bool):
            other = FractionalSeries.constant(self.nvars, other)
        if not isinstance(other, FractionalSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar) and not isinstance(other, bool):
            s = _scalar(other)
            return FractionalSeries(self.nvars, {e: c * s for e, c in self.terms.items()}, self.precision)
        if not isinstance(other, FractionalSeries):
            return NotImplemented
        self._check(other)
        precision = self._product_precision(other)
        terms: Dict[Exponent, CyclotomicNumber] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = e1 + e2
                if precision is not None and exp.total() >= precision:
                    continue
                terms[exp] = terms.get(exp, ZERO) + c1 * c2
        return FractionalSeries(self.nvars, terms, precision)

    __rmul__ = __mul__

    def _product_precision(self, other: "FractionalSeries") -> Optional[Rational]:
        if self.is_zero() or other.is_zero():
            return None
        bounds = []
        if self.precision is not None:
            bounds.append(self.precision + (other.order_bound() or rat(0)))
        if other.precision is not None:
            bounds.append(other.precision + (self.order_bound() or rat(0)))
        return min(bounds) if bounds else None

    def __pow__(self, exponent: int):
        result = FractionalSeries.constant(self.nvars, ONE)
        for _ in range(exponent):
            result = result * self
        return result

    def truncate(self, precision: RationalLike) -> "FractionalSeries":
        return FractionalSeries(self.nvars, self.terms, _min_precision(self.precision, rat(precision)))

    def exact_div(self, divisor: "FractionalSeries") -> "FractionalSeries":
        """Exact quotient of two exact fractional polynomials."""
        if not (self.is_exact and divisor.is_exact):
            raise IndeterminateError("exact division needs exact operands")
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero series")
        lead_exp = max(divisor.terms, key=Exponent.sort_key)
        lead_inv = divisor.terms[lead_exp].inverse()
        remainder = self
        quotient: Dict[Exponent, CyclotomicNumber] = {}
        while remainder.terms:
            exp = max(remainder.terms, key=Exponent.sort_key)
            shift = exp - lead_exp
            if not shift.is_nonnegative():
                raise ArithmeticError("series division is not exact")
            factor = remainder.terms[exp] * lead_inv
            quotient[shift] = quotient.get(shift, ZERO) + factor
            remainder = remainder - FractionalSeries.monomial(shift, factor) * divisor
        return FractionalSeries(self.nvars, quotient)

    # morphisms

    def substitute_monomial(self, weights: Sequence[int]) -> "FractionalSeries":
        """x_i ↦ u^{r_i}; the result is a series in the single variable u."""
        if len(weights) != self.nvars or any(int(w) <= 0 for w in weights):
            raise ValueError(f"substitution weights must be {self.nvars} positive integers")
        terms: Dict[Exponent, CyclotomicNumber] = {}
        for exp, c in self.terms.items():
            image = Exponent.of(exp.dot(weights))
            terms[image] = terms.get(image, ZERO) + c
        precision = None if self.precision is None else self.precision * min(rat(w) for w in weights)
        return FractionalSeries(1, terms, precision)

    def act(self, conductor: int, shifts: Sequence[int]) -> "FractionalSeries":
        """x_i^{a/N} ↦ ζ_N^{shifts_i · a} x_i^{a/N}."""
        terms: Dict[Exponent, CyclotomicNumber] = {}
        for exp, c in self.terms.items():
            k = 0
            for a, s in zip(exp, shifts):
                k += int(a * conductor) * s
            terms[exp] = c * CyclotomicNumber.zeta(conductor, k)
        return FractionalSeries(self.nvars, terms, self.precision)

    def drop_terms_at_or_above(self, height: Exponent) -> "FractionalSeries":
        """Keep only the terms whose exponent is not ≥ height."""
        return FractionalSeries(
            self.nvars, {e: c for e, c in self.terms.items() if not height <= e}, self.precision
        )

    # comparison and rendering

    def __eq__(self, other):
        if not isinstance(other, FractionalSeries):
            return False
        return (
            self.nvars == other.nvars
            and self.precision == other.precision
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.precision, frozenset(self.terms.items())))
        return self._hash

    def sort_key(self) -> Tuple:
        return tuple((e.sort_key(), c.sort_key()) for e, c in self.items())

    def to_json(self) -> Dict:
        return {
            "terms": [{"exponent": e.to_json(), "coefficient": c.to_json()} for e, c in self.items()],
            "precision": None if self.precision is None else rat_str(self.precision),
        }

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        names = list(names) if names else default_names(self.nvars)
        parts = []
        for exp, c in self.items():
            factors = []
            for name, a in zip(names, exp):
                if not a:
                    continue
                if a == 1:
                    factors.append(name)
                elif a.denominator == 1:
                    factors.append(f"{name}^{rat_str(a)}")
                else:
                    factors.append(f"{name}^({rat_str(a)})")
            monomial = "*".join(factors)
            if not monomial:
                parts.append(str(c))
            elif c == 1:
                parts.append(monomial)
            elif c == -1:
                parts.append(f"-{monomial}")
            else:
                parts.append(f"{c}*{monomial}")
        text = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        if self.precision is not None:
            text += f" + O({rat_str(self.precision)})"
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"FractionalSeries({self})"


def default_names(nvars: int) -> List[str]:
    return ["x"] if nvars == 1 else [f"x{i + 1}" for i in range(nvars)]


@dataclass(frozen=True)
class InitialData:
    """s = x^order · unit with unit(0) = coefficient, or not monomial-ordered."""

    order: Optional[Exponent]
    coefficient: Optional[CyclotomicNumber]

    @property
    def monomial_ordered(self) -> bool:
        return self.order is not None


def certify_minimum(candidate: Exponent, precision: Optional[Rational], nvars: int) -> None:
    """Unknown terms (total order >= precision) must lie above candidate."""
    if precision is None or candidate.total() == 0:
        return
    if nvars == 1 and precision > candidate.total():
        return
    raise IndeterminateError(
        f"cannot certify the initial exponent {candidate} at precision {rat_str(precision)}"
    )


def initial_data(s: FractionalSeries) -> InitialData:
    if s.vanishes_within_precision():
        raise IndeterminateError("series is zero within precision")
    minima = minimal_elements(s.terms)
    if len(minima) != 1:
        return InitialData(None, None)
    q = minima[0]
    if not all(q <= e for e in s.terms):
        return InitialData(None, None)
    certify_minimum(q, s.precision, s.nvars)
    return InitialData(q, s.terms[q])

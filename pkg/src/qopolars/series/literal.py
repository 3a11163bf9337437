# src/qopolars/series/literal.py
"""
Series literal parsing.

Literals are read with sympy's parser and then walked into exact
``FractionalSeries`` / ``SeriesYPoly`` values. Constants must live in the
cyclotomic tower: rationals, ``zeta(N)^k``, ``I`` and ``sqrt(m)``.
"""
import logging
import re
from typing import Dict, Optional, Sequence, Tuple

from sympy import Add, Function, Integer, Mul, Pow, Rational as SympyRational, Symbol
from sympy import I as SYMPY_I
from sympy.core.function import AppliedUndef
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from tokenize import TokenError

from qopolars.algebra.cyclotomic import ONE, CyclotomicNumber
from qopolars.algebra.rational import rat
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries
from qopolars.series.ypoly import SeriesYPoly
from qopolars.utils.errors import InputSemanticError, InputSyntaxError, UnrepresentableError

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor,)
ZETA = Function("zeta")
_ZERO_DIVISION = re.compile(r"/\s*\(?\s*0+(?![\d.])")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


def _position(text: str, offset: int, line: int, column: int) -> Tuple[int, int]:
    before = text[:offset]
    extra_lines = before.count("\n")
    if extra_lines:
        return line + extra_lines, offset - before.rfind("\n")
    return line, column + offset


def _sympify(text: str, names: Sequence[str], line: int, column: int):
    match = _ZERO_DIVISION.search(text)
    if match:
        raise InputSyntaxError("division by zero in literal", *_position(text, match.start(), line, column))
    local: Dict[str, object] = {name: Symbol(name) for name in names}
    local["zeta"] = ZETA
    try:
        return parse_expr(text, local_dict=local, transformations=TRANSFORMATIONS)
    except (SyntaxError, TokenError) as e:
        offset = getattr(e, "offset", None) or 1
        raise InputSyntaxError(f"malformed literal {text!r}", *_position(text, offset - 1, line, column))
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InputSyntaxError(f"malformed literal {text!r}: {str(e)}", line, column)


def _constant(expr) -> CyclotomicNumber:
    """Exact cyclotomic value of a variable-free sympy expression."""
    if isinstance(expr, (Integer, SympyRational)):
        return CyclotomicNumber.from_rational(rat(expr))
    if expr == SYMPY_I:
        return CyclotomicNumber.zeta(4)
    if isinstance(expr, AppliedUndef) and expr.func == ZETA:
        (arg,) = expr.args
        if not isinstance(arg, Integer) or int(arg) < 1:
            raise UnrepresentableError(f"zeta needs a positive integer conductor, got {arg}")
        return CyclotomicNumber.zeta(int(arg))
    if isinstance(expr, Pow):
        base, exponent = expr.args
        if isinstance(exponent, Integer):
            return _constant(base) ** int(exponent)
        if isinstance(exponent, SympyRational) and isinstance(base, (Integer, SympyRational)):
            if base == -1:
                return CyclotomicNumber.zeta(2 * int(exponent.q), int(exponent.p))
            if exponent.q == 2:
                return CyclotomicNumber.sqrt_rational(rat(base)) ** int(exponent.p)
        raise UnrepresentableError(f"{expr} is not a cyclotomic constant")
    if isinstance(expr, Mul):
        result = ONE
        for factor in expr.args:
            result = result * _constant(factor)
        return result
    if isinstance(expr, Add):
        result = CyclotomicNumber.zero()
        for term in expr.args:
            result = result + _constant(term)
        return result
    raise UnrepresentableError(f"{expr} is not a cyclotomic constant")


class _Walker:
    """Turns a sympy expression into a SeriesYPoly over the given variables."""

    def __init__(self, names: Sequence[str], allow_y: bool):
        self.names = list(names)
        self.nvars = len(self.names)
        self.allow_y = allow_y
        self.symbols = {Symbol(n): i for i, n in enumerate(self.names)}
        self.y = Symbol("y")

    def walk(self, expr) -> SeriesYPoly:
        if not expr.free_symbols:
            return SeriesYPoly.constant(FractionalSeries.constant(self.nvars, _constant(expr)))
        if expr == self.y:
            return SeriesYPoly.y(self.nvars)
        if expr in self.symbols:
            return self._monomial(expr, rat(1))
        if isinstance(expr, Add):
            result = SeriesYPoly(self.nvars)
            for term in expr.args:
                result = result + self.walk(term)
            return result
        if isinstance(expr, Mul):
            result = SeriesYPoly.constant(FractionalSeries.constant(self.nvars, ONE))
            for factor in expr.args:
                result = result * self.walk(factor)
            return result
        if isinstance(expr, Pow):
            base, exponent = expr.args
            if base in self.symbols and isinstance(exponent, (Integer, SympyRational)):
                if exponent < 0:
                    raise InputSemanticError(f"negative exponent in {expr}")
                return self._monomial(base, rat(exponent))
            if isinstance(exponent, Integer) and exponent >= 0:
                return self.walk(base) ** int(exponent)
            raise InputSemanticError(f"unsupported power {expr}")
        raise InputSemanticError(f"unsupported expression {expr}")

    def _monomial(self, symbol, power) -> SeriesYPoly:
        entries = [rat(0)] * self.nvars
        entries[self.symbols[symbol]] = power
        return SeriesYPoly.constant(FractionalSeries.monomial(Exponent.of(*entries)))


def _check_names(names: Sequence[str]) -> None:
    if not names:
        raise InputSemanticError("at least one variable is required")
    for name in names:
        if not _NAME.match(name) or name in ("y", "zeta", "sqrt", "I"):
            raise InputSemanticError(f"invalid variable name {name!r}")
    if len(set(names)) != len(names):
        raise InputSemanticError(f"duplicate variable names in {list(names)}")


def _parse(text: str, names: Sequence[str], allow_y: bool, line: int, column: int) -> SeriesYPoly:
    _check_names(names)
    allowed = set(names) | ({"y"} if allow_y else set())
    expr = _sympify(text, list(names) + ["y"], line, column)
    unknown = sorted(str(s) for s in expr.free_symbols if str(s) not in allowed)
    if unknown:
        raise InputSemanticError(f"unknown variable(s) {', '.join(unknown)} in {text!r}")
    result = _Walker(names, allow_y).walk(expr)
    logger.debug(f"parsed {text!r} -> {result}")
    return result


def parse_series(
    text: str,
    names: Sequence[str],
    precision: Optional[object] = None,
    line: int = 0,
    column: int = 0,
) -> FractionalSeries:
    """Parse a fractional series literal such as ``x1^(3/2)*x2 + zeta(8)*x1^2``."""
    poly = _parse(text, names, False, line, column)
    series = poly.coeff(0)
    return series if precision is None else series.truncate(precision)


def parse_series_poly(
    text: str,
    names: Sequence[str],
    line: int = 0,
    column: int = 0,
) -> SeriesYPoly:
    """Parse a polynomial in y with series coefficients, e.g. ``y^3 + x^2*y``."""
    return _parse(text, names, True, line, column)

# tests/test_series.py
import pytest

from qopolars.algebra.cyclotomic import CyclotomicNumber
from qopolars.algebra.rational import rat
from qopolars.polar.derivative import normalized_derivative
from qopolars.series.exponent import Exponent, emin
from qopolars.series.fractional import FractionalSeries, initial_data
from qopolars.series.literal import parse_series, parse_series_poly
from qopolars.series.ypoly import SeriesYPoly
from qopolars.utils.errors import InputSemanticError, InputSyntaxError, UnrepresentableError

NAMES = ["x1", "x2"]


def test_exponent_order_and_rendering():
    h = Exponent.of(rat(3, 2), 1)
    print(f"\nh = {h}")
    assert str(h) == "(3/2,1)"
    assert str(Exponent.of(rat(7, 4))) == "7/4"
    assert h <= Exponent.of(2, 1)
    assert not h.comparable(Exponent.of(1, 2))
    assert Exponent.infinity(2) > h
    assert emin(h, Exponent.of(2, 3)) == h
    with pytest.raises(ValueError):
        emin(h, Exponent.of(1, 2))


def test_parse_series_literals():
    print("\n=== Series literals ===")
    s = parse_series("x1^(3/2)*x2 + (sqrt(2)/2)*x1^(7/4)*x2^(3/2)", NAMES)
    print(f"parsed: {s}")
    assert s.is_exact
    assert s.denominator == 4
    assert s.coefficient(Exponent.of(rat(3, 2), 1)) == 1
    assert s.coefficient(Exponent.of(rat(7, 4), rat(3, 2))) == CyclotomicNumber.sqrt_rational(2) / 2

    assert parse_series("zeta(3)*x1", NAMES).coefficient(Exponent.of(1, 0)) == CyclotomicNumber.zeta(3)
    assert parse_series("I*x2", NAMES).coefficient(Exponent.of(0, 1)) == CyclotomicNumber.zeta(4)


def test_parse_errors():
    with pytest.raises(InputSyntaxError) as info:
        parse_series("x1^(3/0)", NAMES, line=4, column=7)
    assert info.value.line == 4
    assert "division by zero" in str(info.value)

    with pytest.raises(InputSemanticError):
        parse_series("x3^2", NAMES)
    with pytest.raises(InputSemanticError):
        parse_series("y*x1", NAMES)
    with pytest.raises(UnrepresentableError):
        parse_series("2^(1/3)*x1", NAMES)


def test_arithmetic_and_precision():
    x = parse_series("x1 + x2", NAMES)
    square = x * x
    assert square == parse_series("x1^2 + 2*x1*x2 + x2^2", NAMES)
    assert square.exact_div(x) == x

    truncated = parse_series("x1 + x1^2*x2 + x2^5", NAMES).truncate(3)
    assert truncated.precision == 3
    assert Exponent.of(0, 5) not in truncated.terms
    # the unknown tail of one factor bounds what the product knows
    product = truncated * parse_series("x1", NAMES)
    assert product.precision == 4

    data = initial_data(parse_series("x1^(3/2)*x2 + x1^2*x2^3", NAMES))
    assert data.monomial_ordered
    assert data.order == Exponent.of(rat(3, 2), 1)
    assert not initial_data(parse_series("x1 + x2", NAMES)).monomial_ordered


def test_galois_action_on_series():
    root = parse_series("x1^(3/2)*x2", NAMES)
    # x1^(1/2) ↦ -x1^(1/2)
    assert root.act(2, (1, 0)) == -root
    assert root.act(2, (0, 1)) == root


def test_ypoly_derivatives_and_substitution():
    print("\n=== Polynomials in y ===")
    f = parse_series_poly("y^3 + x^2*y", ["x"])
    assert f.is_weierstrass()
    assert normalized_derivative(f, 2) == SeriesYPoly.y(1)
    first = normalized_derivative(f, 1)
    print(f"f' normalized: {first}")
    assert first == parse_series_poly("y^2 + (1/3)*x^2", ["x"])

    g = parse_series_poly("y^2 - x1^3*x2^2", NAMES)
    image = g.substitute_monomial((1, 1))
    assert image == parse_series_poly("y^2 - x^5", ["x"])

    shifted = g.taylor_shift(parse_series("x1^(3/2)*x2", NAMES))
    assert shifted.coeff(0).is_zero()
    assert shifted.coeff(1) == parse_series("2*x1^(3/2)*x2", NAMES)


def test_from_roots_and_evaluation():
    alpha = parse_series("x1^(3/2)*x2", NAMES)
    f = SeriesYPoly.from_roots([alpha, -alpha], 2)
    assert f == parse_series_poly("y^2 - x1^3*x2^2", NAMES)
    assert f(alpha).is_zero()
    assert f(FractionalSeries.zero(2)) == parse_series("-x1^3*x2^2", NAMES)


if __name__ == "__main__":
    test_parse_series_literals()
    test_ypoly_derivatives_and_substitution()

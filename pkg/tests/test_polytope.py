# tests/test_polytope.py
import random

import pytest

from qopolars.algebra.rational import rat
from qopolars.polytope.newton import (
    canonical_decomposition,
    contained_in,
    is_polygonal,
    minkowski_sum,
    newton_polytope,
    polytope_order,
    project,
    rond_schober_reducible,
    sum_elementaries,
)
from qopolars.polytope.types import ElementaryPolytope, NewtonPolytope, PolytopeOrder, ScaledPolytope
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries
from qopolars.series.literal import parse_series, parse_series_poly
from qopolars.series.ypoly import SeriesYPoly
from qopolars.utils.errors import IndeterminateError, PolytopeError

NAMES = ["x1", "x2"]
SEED = 7


def _random_coefficient(rng: random.Random) -> FractionalSeries:
    terms = {}
    for _ in range(rng.randint(1, 2)):
        exponent = Exponent.of(rat(rng.randint(0, 6), rng.choice([1, 2])), rng.randint(0, 3))
        terms[exponent] = rng.choice([-2, -1, 1, 3])
    return FractionalSeries(2, terms)


def _random_ypoly(rng: random.Random) -> SeriesYPoly:
    coeffs = [_random_coefficient(rng) for _ in range(rng.randint(1, 3))]
    return SeriesYPoly(2, coeffs)


def test_elementary_sum_and_decomposition():
    print("\n=== Elementary polytopes ===")
    parts = [ElementaryPolytope(Exponent.of(9, 6), 2), ElementaryPolytope(Exponent.of(1, 1), 1)]
    total = sum_elementaries(parts, 2)
    print(f"sum: {total.describe()}")

    fresh = NewtonPolytope(3, total.vertices)
    decomposition = canonical_decomposition(fresh)
    print("decomposition: " + " + ".join(e.describe() for e in decomposition))
    assert decomposition == [parts[1], parts[0]]
    assert is_polygonal(fresh)

    with_base = sum_elementaries(parts + [ElementaryPolytope(Exponent.infinity(2), 1)], 2)
    assert canonical_decomposition(NewtonPolytope(3, with_base.vertices))[-1].q.is_infinite


def test_non_polygonal_polytope_is_rejected():
    g = parse_series_poly("y + x1 + x2", NAMES)
    region = newton_polytope(g)
    assert not is_polygonal(region)
    with pytest.raises(PolytopeError):
        canonical_decomposition(region)
    # polygonal, but shifted off the y-axis by x1
    with pytest.raises(PolytopeError, match="not a pure power of y"):
        canonical_decomposition(newton_polytope(parse_series_poly("x1*y^2 + x1^2*y", NAMES)))


def test_projection_along_a_monomial_curve():
    prediction = sum_elementaries([ElementaryPolytope(Exponent.of(9, 6), 2)], 2)
    image = project(prediction, (1, 1))
    expected = sum_elementaries([ElementaryPolytope(Exponent.of(15), 2)], 1)
    print(f"\nprojected: {image.describe()}")
    assert image == expected
    assert project(prediction, (2, 1)) == sum_elementaries([ElementaryPolytope(Exponent.of(24), 2)], 1)
    with pytest.raises(ValueError):
        project(prediction, (0, 1))


def test_newton_polytope_of_truncated_series():
    s = parse_series("x1^2 + x1*x2 + x2^3", NAMES).truncate(5)
    assert newton_polytope(s) == NewtonPolytope(2, [(2, 0), (1, 1), (0, 3)])
    # x2^5 could still sit in the unknown tail
    with pytest.raises(IndeterminateError):
        newton_polytope(parse_series("x1^2 + x1*x2^3", NAMES).truncate(5))
    # below the precision nothing can be certified
    with pytest.raises(IndeterminateError):
        newton_polytope(parse_series("x1^2", NAMES).truncate(1))
    assert newton_polytope(FractionalSeries.zero(2)).is_empty


def test_order_and_containment():
    small = ScaledPolytope(rat(1, 4), NewtonPolytope.monomial(Exponent.of(6, 4)))
    big = NewtonPolytope.monomial(Exponent.of(1, 1))
    assert small.region == NewtonPolytope.monomial(Exponent.of(rat(3, 2), 1))
    assert contained_in(small.region, big)
    assert polytope_order(small, big) == PolytopeOrder.FINER
    assert polytope_order(big, small) == PolytopeOrder.COARSER
    assert polytope_order(small, small.region) == PolytopeOrder.EQUAL
    assert polytope_order(
        NewtonPolytope.monomial(Exponent.of(2, 0)), NewtonPolytope.monomial(Exponent.of(0, 2))
    ) == PolytopeOrder.INCOMPARABLE


def test_newton_polytope_of_product_is_minkowski_sum():
    rng = random.Random(SEED)
    for _ in range(200):
        f = _random_ypoly(rng)
        g = _random_ypoly(rng)
        assert newton_polytope(f * g) == minkowski_sum(newton_polytope(f), newton_polytope(g))


def test_monomial_substitution_respects_products_and_projections():
    rng = random.Random(SEED + 1)
    for _ in range(200):
        f = _random_ypoly(rng)
        g = _random_ypoly(rng)
        r = (rng.randint(1, 3), rng.randint(1, 3))
        f_bar = f.substitute_monomial(r)
        assert (f * g).substitute_monomial(r) == f_bar * g.substitute_monomial(r)
        # cancellation along the curve can only shrink the polygon
        assert contained_in(newton_polytope(f_bar), project(newton_polytope(f), r))


def test_reducibility_certificate():
    print("\n=== Reducibility certificate ===")
    f = parse_series_poly("(y^2 - x1^3*x2^2)*(y - x1^5*x2^2)", NAMES)
    certificate = rond_schober_reducible(f)
    print(f"certificate: {certificate}")
    assert certificate is not None
    assert certificate.q == Exponent.of(rat(3, 2), 1)
    assert certificate.i0 == 2

    assert rond_schober_reducible(parse_series_poly("y^2 - x^3", ["x"])) is None


if __name__ == "__main__":
    test_elementary_sum_and_decomposition()
    test_reducibility_certificate()

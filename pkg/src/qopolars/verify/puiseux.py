# src/qopolars/verify/puiseux.py
"""
Newton-Puiseux expansion of roots of polynomials over K[[x]] (one variable).

Both entry points walk the same refinement: shift the polynomial by the part
of the root already known, read the lower Newton polygon of the shifted
polynomial, split each edge polynomial and descend into every cluster.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from qopolars.algebra.cyclotomic import CyclotomicNumber
from qopolars.algebra.rational import Rational, RationalLike, lcm_all, rat
from qopolars.algebra.unipoly import UniPoly, tower_roots
from qopolars.polytope.hull import lower_hull_2d
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries
from qopolars.series.ypoly import SeriesYPoly
from qopolars.utils.errors import IndeterminateError, InputSemanticError

logger = logging.getLogger(__name__)

MAX_STEPS = 2000

Edge = Tuple[Rational, int, int]  # slope, high index, low index


@dataclass
class PuiseuxRoot:
    """
    A root known up to ``series.precision`` (exact when the precision is None).
    ``count`` roots share this expansion. ``unrepresentable`` carries the
    monic polynomial whose roots, outside the cyclotomic tower, give the next
    leading coefficients.
    """

    series: FractionalSeries
    count: int = 1
    unrepresentable: Optional[UniPoly] = None

    @property
    def is_exact(self) -> bool:
        return self.series.is_exact and self.unrepresentable is None

    def to_json(self):
        return {
            "series": self.series.to_json(),
            "count": self.count,
            "unrepresentable": None if self.unrepresentable is None else str(self.unrepresentable),
        }


@dataclass
class PuiseuxResult:
    roots: List[PuiseuxRoot]
    partial: bool = False

    @property
    def representable(self) -> bool:
        return all(r.unrepresentable is None for r in self.roots)

    def expanded(self) -> List[FractionalSeries]:
        """One series per root, repeated by count; stubs are left out."""
        out = []
        for root in self.roots:
            if root.unrepresentable is None:
                out.extend([root.series] * root.count)
        return out


def _order(c: FractionalSeries) -> Rational:
    if c.vanishes_within_precision():
        raise IndeterminateError("coefficient vanishes within precision")
    return min(e.total() for e in c.terms)


def _check_univariate(g: SeriesYPoly) -> None:
    if g.nvars != 1:
        raise InputSemanticError("Newton-Puiseux expansion needs a single variable")
    if not g.is_weierstrass():
        raise ValueError("Newton-Puiseux expansion needs a Weierstrass polynomial")
    if any(not c.is_exact for c in g.coeffs):
        raise IndeterminateError("Newton-Puiseux expansion needs exact coefficients")


def zero_multiplicity(shifted: SeriesYPoly, m: int) -> int:
    """Number of leading coefficients c_0, c_1, ... that vanish exactly."""
    i = 0
    while i < m and shifted.coeff(i).is_zero():
        i += 1
    return i


def polygon_edges(shifted: SeriesYPoly, low: int, m: int) -> List[Edge]:
    """Edges of the lower Newton polygon over the indices low..m, steepest first."""
    points = [(_order(shifted.coeff(i)), rat(i)) for i in range(low, m + 1) if not shifted.coeff(i).is_zero()]
    vertices = lower_hull_2d(points)
    edges = []
    for (x1, y1), (x2, y2) in zip(vertices, vertices[1:]):
        if y1 > y2:
            edges.append(((x2 - x1) / (y1 - y2), int(y1), int(y2)))
    return edges


def edge_polynomial(shifted: SeriesYPoly, slope: Rational, high: int, low: int) -> UniPoly:
    """Σ lc(c_i) z^{i - low} over the points on the edge of the given slope."""
    level = _order(shifted.coeff(low)) + slope * low
    coeffs = []
    for i in range(low, high + 1):
        c = shifted.coeff(i)
        target = level - slope * i
        coeffs.append(c.coefficient(Exponent.of(target)) if not c.is_zero() else CyclotomicNumber.zero())
    return UniPoly(coeffs).monic()


def multiplicity(polynomial: UniPoly, root: CyclotomicNumber) -> int:
    factor = UniPoly([-root, 1])
    count = 0
    while polynomial.degree > 0:
        quotient, remainder = divmod(polynomial, factor)
        if not remainder.is_zero():
            break
        polynomial, count = quotient, count + 1
    return count


def newton_puiseux_roots(g: SeriesYPoly, precision: RationalLike) -> PuiseuxResult:
    """Roots of a monic g in one variable, each expanded up to (not including) x^precision."""
    _check_univariate(g)
    precision = rat(precision)
    result = PuiseuxResult([])
    steps = [0]
    _expand(g, FractionalSeries.zero(1), None, g.degree, precision, result, steps)
    result.roots.sort(key=lambda r: (r.series.sort_key(), r.count))
    logger.debug(f"Newton-Puiseux: {len(result.roots)} root groups, partial={result.partial}")
    return result


def _expand(
    shifted: SeriesYPoly,
    center: FractionalSeries,
    lower: Optional[Rational],
    m: int,
    precision: Rational,
    result: PuiseuxResult,
    steps: List[int],
) -> None:
    steps[0] += 1
    if steps[0] > MAX_STEPS:
        result.partial = True
        result.roots.append(PuiseuxRoot(center.truncate(lower or precision), m))
        return
    zeros = zero_multiplicity(shifted, m)
    if zeros:
        result.roots.append(PuiseuxRoot(center, zeros))
    for slope, high, low in polygon_edges(shifted, zeros, m):
        if lower is not None and slope <= lower:
            continue
        count = high - low
        if slope >= precision:
            result.roots.append(PuiseuxRoot(center.truncate(precision), count))
            continue
        located, leftover = tower_roots(edge_polynomial(shifted, slope, high, low))
        for value, mult in located:
            step = FractionalSeries.monomial(Exponent.of(slope), value)
            _expand(shifted.taylor_shift(step), center + step, slope, mult, precision, result, steps)
        if leftover.degree > 0:
            result.roots.append(PuiseuxRoot(center.truncate(slope), leftover.degree, leftover))


def conjugate_groups(roots: Sequence[FractionalSeries]) -> List[List[int]]:
    """Group root indices into orbits of x^{1/N} ↦ ζ_N x^{1/N}."""
    conductor = lcm_all(r.denominator for r in roots)
    groups: List[List[int]] = []
    seen = set()
    for i, r in enumerate(roots):
        if i in seen:
            continue
        orbit = {r.act(conductor, (s,)) for s in range(conductor)}
        group = [j for j, other in enumerate(roots) if j not in seen and other in orbit]
        seen.update(group)
        groups.append(group)
    return groups


# root-product oracle


def cluster_orders(g: SeriesYPoly, alphas: Sequence[FractionalSeries]) -> List[Optional[Rational]]:
    """
    ord_x ∏_α (β - α) for every root β of g, with multiplicity, without
    computing the β: each β is followed only as far as it stays in a cluster
    with some α. None marks a root shared with the α's.
    """
    _check_univariate(g)
    if any(not a.is_exact for a in alphas):
        raise IndeterminateError("the root-product oracle needs exact roots")
    out: List[Optional[Rational]] = []
    _cluster(g, FractionalSeries.zero(1), None, g.degree, list(alphas), rat(0), out, [0])
    if len(out) != g.degree:
        raise ArithmeticError(f"cluster walk found {len(out)} roots, expected {g.degree}")
    return out


def _cluster(
    shifted: SeriesYPoly,
    center: FractionalSeries,
    lower: Optional[Rational],
    m: int,
    members: List[FractionalSeries],
    base: Rational,
    out: List[Optional[Rational]],
    steps: List[int],
) -> None:
    steps[0] += 1
    if steps[0] > MAX_STEPS:
        raise IndeterminateError("cluster walk did not separate the roots")
    if not members:
        out.extend([base] * m)
        return
    zeros = zero_multiplicity(shifted, m)
    if zeros:
        offsets = [a - center for a in members]
        if any(o.is_zero() for o in offsets):
            out.extend([None] * zeros)
        else:
            out.extend([base + sum((_order(o) for o in offsets), rat(0))] * zeros)
    for slope, high, low in polygon_edges(shifted, zeros, m):
        if lower is not None and slope <= lower:
            continue
        polynomial = edge_polynomial(shifted, slope, high, low)
        level = Exponent.of(slope)
        below, inside = rat(0), {}
        shared_base = base
        for a in members:
            offset = a - center
            if offset.is_zero():
                shared_base += slope
                continue
            order = _order(offset)
            if order < slope:
                below += order
            elif order > slope:
                shared_base += slope
            else:
                inside.setdefault(offset.coefficient(level), []).append(a)
        free = high - low
        for value, group in sorted(inside.items(), key=lambda item: item[0].sort_key()):
            mult = multiplicity(polynomial, value)
            free -= mult
            if not mult:
                continue
            others = sum(len(v) for k, v in inside.items() if k != value)
            step = FractionalSeries.monomial(level, value)
            _cluster(
                shifted.taylor_shift(step),
                center + step,
                slope,
                mult,
                group,
                shared_base + below + slope * others,
                out,
                steps,
            )
        inside_count = sum(len(v) for v in inside.values())
        out.extend([shared_base + below + slope * inside_count] * free)

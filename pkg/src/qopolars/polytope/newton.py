# src/qopolars/polytope/newton.py
import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from qopolars.algebra.rational import Rational, rat
from qopolars.polytope.types import (
    ElementaryPolytope,
    Face,
    NewtonPolytope,
    PolytopeOrder,
    RondSchoberCertificate,
    ScaledPolytope,
)
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries, initial_data
from qopolars.series.ypoly import SeriesYPoly
from qopolars.utils.errors import IndeterminateError, PolytopeError

logger = logging.getLogger(__name__)

Region = Union[NewtonPolytope, ScaledPolytope]


def _region(p: Region) -> NewtonPolytope:
    return p.region if isinstance(p, ScaledPolytope) else p


def _certify_truncation(polytope: NewtonPolytope, corners: List[Tuple]) -> None:
    """Every unknown term lies in the hull once the corners of its region do."""
    for corner in corners:
        if polytope.is_empty or not polytope.contains_point(corner):
            raise IndeterminateError(
                f"Newton polytope not determined at current precision (unknown terms near {corner})"
            )


def newton_polytope(g: Union[SeriesYPoly, FractionalSeries], certify: bool = True) -> NewtonPolytope:
    """Newton polytope of a series or of a polynomial in y (last coordinate = y-degree)."""
    if isinstance(g, FractionalSeries):
        d = g.nvars
        if g.vanishes_within_precision():
            if g.is_exact:
                return NewtonPolytope.empty(d)
            raise IndeterminateError("series is zero within precision")
        polytope = NewtonPolytope(d, [tuple(e) for e in g.terms])
        if certify and g.precision is not None:
            _certify_truncation(polytope, _corners(d, g.precision, ()))
        return polytope

    d = g.nvars
    if g.is_zero():
        return NewtonPolytope.empty(d + 1)
    if all(c.vanishes_within_precision() for c in g.coeffs):
        raise IndeterminateError("polynomial is zero within precision")
    polytope = NewtonPolytope(d + 1, [p for p, _ in g.points()])
    if certify:
        corners = []
        for j, c in enumerate(g.coeffs):
            if c.precision is not None:
                corners.extend(_corners(d, c.precision, (rat(j),)))
        _certify_truncation(polytope, corners)
    return polytope


def _corners(d: int, precision: Rational, tail: Tuple) -> List[Tuple]:
    return [tuple(precision if j == i else rat(0) for j in range(d)) + tail for i in range(d)]


def minkowski_sum(a: Region, b: Region) -> NewtonPolytope:
    a, b = _region(a), _region(b)
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} and {b.dim}")
    if a.is_empty or b.is_empty:
        return NewtonPolytope.empty(a.dim)
    points = [tuple(x + y for x, y in zip(p, q)) for p in a.vertices for q in b.vertices]
    return NewtonPolytope(a.dim, points)


def merge_elementaries(parts: Sequence[ElementaryPolytope]) -> List[ElementaryPolytope]:
    """Combine summands of equal inclination; the result is inclination-sorted, ∞ last."""
    merged: Dict[Exponent, ElementaryPolytope] = {}
    for e in parts:
        key = e.inclination
        if key in merged:
            old = merged[key]
            merged[key] = ElementaryPolytope(old.q + e.q, old.k + e.k)
        else:
            merged[key] = e
    return sorted(merged.values(), key=lambda e: e.inclination.sort_key())


def sum_elementaries(parts: Sequence[ElementaryPolytope], d: int) -> NewtonPolytope:
    result = NewtonPolytope(d + 1, [tuple([rat(0)] * (d + 1))])
    for e in parts:
        result = minkowski_sum(result, NewtonPolytope.from_elementary(e))
    result._decomposition = merge_elementaries(parts)
    return result


def canonical_decomposition(polytope: NewtonPolytope) -> List[ElementaryPolytope]:
    """Unique decomposition into elementary polytopes, or PolytopeError("not polygonal")."""
    if polytope.is_empty:
        raise PolytopeError("the empty polytope has no decomposition")
    d = polytope.dim - 1
    base = min(v[-1] for v in polytope.vertices)
    chain = sorted(polytope.vertices, key=lambda v: -v[-1])
    if any(a for a in chain[0][:-1]):
        raise PolytopeError(
            "no elementary decomposition: the vertex of highest y-degree is not a pure power of y"
        )
    parts: List[ElementaryPolytope] = []
    for upper, lower in zip(chain, chain[1:]):
        step = tuple(b - a for a, b in zip(upper[:-1], lower[:-1]))
        drop = upper[-1] - lower[-1]
        if drop <= 0 or any(s < 0 for s in step) or drop.denominator != 1:
            raise PolytopeError("not polygonal")
        parts.append(ElementaryPolytope(Exponent.of(*step), int(drop)))
    if chain[-1][-1] != base:
        raise PolytopeError("not polygonal")
    if base:
        if base.denominator != 1:
            raise PolytopeError("not polygonal")
        parts.append(ElementaryPolytope(Exponent.infinity(d), int(base)))
    parts = merge_elementaries(parts)
    if sum_elementaries(parts, d) != polytope:
        raise PolytopeError("not polygonal")
    polytope._decomposition = parts
    return parts


def is_polygonal(polytope: NewtonPolytope) -> bool:
    return all(face.dimension <= 1 for face in polytope.compact_faces())


def _face_normal(polytope: NewtonPolytope, face: Face) -> Tuple[Rational, ...]:
    normals = [w for w, c in polytope.facets if all(sum(a * b for a, b in zip(w, p)) == c for p in face.points)]
    total = tuple(sum((w[i] for w in normals), rat(0)) for i in range(polytope.dim))
    return total


def symbolic_restriction(g: SeriesYPoly, face: Face) -> SeriesYPoly:
    """The part of g whose exponents lie on the compact face."""
    polytope = newton_polytope(g)
    if face not in polytope.compact_faces():
        raise PolytopeError(f"{sorted(face.points)} is not a compact face of Δ(g)")
    w = _face_normal(polytope, face)
    level = polytope.support(w)
    coeffs = []
    for j, c in enumerate(g.coeffs):
        kept = {e: v for e, v in c.terms.items() if _dot(w, tuple(e) + (rat(j),)) == level}
        coeffs.append(FractionalSeries(g.nvars, kept))
    return SeriesYPoly(g.nvars, coeffs)


def _dot(w, p) -> Rational:
    return sum((a * b for a, b in zip(w, p)), rat(0))


def project(polytope: NewtonPolytope, r: Sequence) -> NewtonPolytope:
    """Image under (a, b) ↦ (<r, a>, b)."""
    weights = [rat(x) for x in r]
    if any(x <= 0 for x in weights):
        raise ValueError(f"projection weights must be positive, got {list(r)}")
    if polytope.is_empty:
        return NewtonPolytope.empty(2)
    images = [(_dot(weights, v[:-1]), v[-1]) for v in polytope.vertices]
    return NewtonPolytope(2, images)


def project_and_support(
    polytope: NewtonPolytope, r: Sequence
) -> Tuple[NewtonPolytope, Callable[[Sequence], Rational]]:
    return project(polytope, r), polytope.support


def project_elementary(e: ElementaryPolytope, r: Sequence) -> ElementaryPolytope:
    if e.q.is_infinite:
        return ElementaryPolytope(Exponent.infinity(1), e.k)
    return ElementaryPolytope(Exponent.of(e.q.dot([rat(x) for x in r])), e.k)


def polytope_order(a: Region, b: Region) -> PolytopeOrder:
    """a ⪰ b iff a ⊆ b."""
    a, b = _region(a), _region(b)
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} and {b.dim}")
    a_in_b = contained_in(a, b)
    b_in_a = contained_in(b, a)
    if a_in_b and b_in_a:
        return PolytopeOrder.EQUAL
    if a_in_b:
        return PolytopeOrder.FINER
    if b_in_a:
        return PolytopeOrder.COARSER
    return PolytopeOrder.INCOMPARABLE


def contained_in(a: NewtonPolytope, b: NewtonPolytope) -> bool:
    if a.is_empty:
        return True
    if b.is_empty:
        return False
    return all(b.contains_point(v) for v in a.vertices)


def _all_at_least(s: FractionalSeries, bound: Exponent, strict_at_bound: bool) -> bool:
    """Every exponent of s is >= bound (and the coefficient at bound vanishes if strict)."""
    if not all(bound <= e for e in s.terms):
        return False
    if strict_at_bound and not s.coefficient(bound).is_zero():
        return False
    if s.precision is not None:
        if s.nvars != 1 or s.precision <= bound.total():
            raise IndeterminateError(f"cannot compare a truncated coefficient against x^{bound}")
    return True


def rond_schober_reducible(g: SeriesYPoly) -> Optional[RondSchoberCertificate]:
    """
    Sufficient reducibility test: a certificate when Δ(g) ⊆ {m·q over m} with
    equality reached at some 0 < i0 < m and a strict inclusion at i = m.
    None means no certificate, not irreducibility.
    """
    m = g.degree
    if m < 2 or not g.is_weierstrass():
        raise ValueError("the reducibility test needs a Weierstrass polynomial of degree >= 2")
    c = {i: g.coeff(m - i) for i in range(1, m + 1)}
    candidates: List[Exponent] = []
    for i in range(1, m):
        if c[i].vanishes_within_precision():
            continue
        data = initial_data(c[i])
        if data.monomial_ordered:
            q = data.order.scale(rat(1, i))
            if q not in candidates:
                candidates.append(q)
    for q in sorted(candidates, key=Exponent.sort_key):
        i0 = 0
        ok = True
        for i in range(1, m):
            bound = q.scale(i)
            if c[i].is_zero():
                continue
            if not _all_at_least(c[i], bound, strict_at_bound=False):
                ok = False
                break
            if not c[i].coefficient(bound).is_zero():
                i0 = i
        if not ok or not i0:
            continue
        if c[m].is_zero() or _all_at_least(c[m], q.scale(m), strict_at_bound=True):
            logger.debug(f"reducibility certificate q={q}, i0={i0}")
            return RondSchoberCertificate(q, i0, m)
    return None

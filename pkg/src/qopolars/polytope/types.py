# src/qopolars/polytope/types.py
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from qopolars.algebra.rational import Rational, rat, rat_str
from qopolars.polytope import hull
from qopolars.polytope.hull import Facet, Point
from qopolars.series.exponent import Exponent


@dataclass(frozen=True)
class ElementaryPolytope:
    """{q over k}: conv{(0, k), (q, 0)} + orthant, or (0, k) + orthant when q is ∞."""

    q: Exponent
    k: int

    @property
    def inclination(self) -> Exponent:
        return self.q.scale(rat(1, self.k))

    def vertices(self) -> List[Point]:
        d = self.q.dim
        top = tuple([rat(0)] * d + [rat(self.k)])
        if self.q.is_infinite:
            return [top]
        return [top, tuple(self.q) + (rat(0),)]

    def describe(self) -> str:
        return f"{{{self.q} over {self.k}}}"

    def to_json(self) -> Dict:
        return {"q": self.q.to_json(), "k": self.k}


@dataclass(frozen=True)
class Face:
    """A compact face, given by its vertices."""

    points: FrozenSet[Point]

    @property
    def dimension(self) -> int:
        return hull.face_dimension(self.points)


class NewtonPolytope:
    """
    conv(points) + R_{>=0}^n stored by its vertices.

    Equality compares vertex sets, so it does not depend on how the polytope
    was produced. The empty polytope (Newton polytope of zero) has no vertices.
    """

    def __init__(self, dim: int, points: Sequence[Point] = ()):
        self.dim = dim
        pts = [tuple(rat(a) for a in p) for p in points]
        for p in pts:
            if len(p) != dim:
                raise ValueError(f"point {p} is not in Q^{dim}")
        if pts:
            vertices, hs = hull.extreme_points(pts, dim)
        else:
            vertices, hs = [], []
        self.vertices: Tuple[Point, ...] = tuple(sorted(vertices))
        self._facets: List[Facet] = hs
        self._decomposition: Optional[List[ElementaryPolytope]] = None

    @classmethod
    def monomial(cls, exponent: Exponent) -> "NewtonPolytope":
        return cls(exponent.dim, [tuple(exponent)])

    @classmethod
    def empty(cls, dim: int) -> "NewtonPolytope":
        return cls(dim)

    @classmethod
    def from_elementary(cls, e: ElementaryPolytope) -> "NewtonPolytope":
        return cls(e.q.dim + 1, e.vertices())

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def facets(self) -> List[Facet]:
        return list(self._facets)

    def contains_point(self, p: Sequence) -> bool:
        if self.is_empty:
            return False
        return hull.contains(self._facets, tuple(rat(a) for a in p))

    def is_monomial(self) -> bool:
        return len(self.vertices) == 1

    def support(self, v: Sequence) -> Rational:
        if self.is_empty:
            raise ValueError("support function of the empty polytope")
        return hull.support(self.vertices, [rat(a) for a in v])

    def compact_faces(self) -> List[Face]:
        if self.is_empty:
            return []
        return [Face(f) for f in hull.compact_faces(list(self.vertices), self._facets)]

    def scale(self, factor) -> "NewtonPolytope":
        f = rat(factor)
        return NewtonPolytope(self.dim, [tuple(a * f for a in p) for p in self.vertices])

    def __eq__(self, other):
        if not isinstance(other, NewtonPolytope):
            return False
        return self.dim == other.dim and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def to_json(self) -> Dict:
        data: Dict = {"dimension": self.dim, "vertices": [[rat_str(a) for a in p] for p in self.vertices]}
        if self._decomposition is not None:
            data["decomposition"] = [e.to_json() for e in self._decomposition]
        return data

    def describe(self) -> str:
        if self.is_empty:
            return "∅"
        if self.is_monomial():
            return f"Δ(x^{_point_str(self.vertices[0])})"
        return "conv{" + ", ".join(_point_str(p) for p in self.vertices) + "} + orthant"

    def __str__(self):
        return self.describe()

    def __repr__(self):
        return f"NewtonPolytope({self.describe()})"


@dataclass(frozen=True, eq=False)
class ScaledPolytope:
    """factor · polytope, the form P-contacts and self-contacts take."""

    factor: Rational
    polytope: NewtonPolytope

    @property
    def region(self) -> NewtonPolytope:
        return self.polytope.scale(self.factor)

    def __eq__(self, other):
        if not isinstance(other, ScaledPolytope):
            return False
        return self.region == other.region

    def __hash__(self):
        return hash(self.region)

    def describe(self) -> str:
        if self.factor == 1:
            return self.polytope.describe()
        return f"({rat_str(self.factor)}){self.polytope.describe()}"

    def to_json(self) -> Dict:
        return {
            "factor": rat_str(self.factor),
            "polytope": self.polytope.to_json(),
            "region": self.region.to_json(),
        }

    def __str__(self):
        return self.describe()


def _point_str(p: Point) -> str:
    if len(p) == 1:
        return rat_str(p[0])
    return "(" + ",".join(rat_str(a) for a in p) + ")"


class PolytopeOrder(str, Enum):
    EQUAL = "equal"
    FINER = "⪰"
    COARSER = "⪯"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class RondSchoberCertificate:
    """Witness that Δ(g) ⊆ {m·q over m} with an edge from (0, m) to (i0·q, m - i0)."""

    q: Exponent
    i0: int
    degree: int

    def to_json(self) -> Dict:
        return {"q": self.q.to_json(), "i0": self.i0, "degree": self.degree}

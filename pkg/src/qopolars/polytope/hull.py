# src/qopolars/polytope/hull.py
"""
Exact hull computations for orthant-saturated polyhedra conv(S) + R_{>=0}^n.

Dimensions are small (n <= 4 in practice), so facets are found by direct
enumeration of candidate normals: every facet hyperplane is spanned by some
points of S together with some coordinate directions.
"""
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

from qopolars.algebra.rational import Rational, rat

Point = Tuple[Rational, ...]
Facet = Tuple[Point, Rational]  # region <w, x> >= c with w >= 0, w != 0


def dominates(a: Point, b: Point) -> bool:
    """a <= b componentwise, i.e. b lies in a + orthant."""
    return all(x <= y for x, y in zip(a, b))


def prune_dominated(points: Iterable[Point]) -> List[Point]:
    unique = sorted(set(points))
    return [p for p in unique if not any(q != p and dominates(q, p) for q in unique)]


def _determinant(rows: Sequence[Sequence[Rational]]) -> Rational:
    """Exact determinant by fraction-free elimination over QQ."""
    m = [list(r) for r in rows]
    n = len(m)
    det = rat(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k]), None)
        if pivot is None:
            return rat(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k] / m[k][k]
            if factor:
                for j in range(k, n):
                    m[i][j] -= factor * m[k][j]
    return det


def _cross(vectors: Sequence[Point], n: int) -> Point:
    """Generalized cross product of n-1 vectors in Q^n."""
    out = []
    for i in range(n):
        minor = [[v[j] for j in range(n) if j != i] for v in vectors]
        sign = 1 if i % 2 == 0 else -1
        out.append(_determinant(minor) * sign if minor else rat(sign))
    return tuple(out)


def _normalize(w: Point) -> Point:
    total = sum(w, rat(0))
    return tuple(a / total for a in w)


def _pair(w: Point, p: Point) -> Rational:
    return sum((a * b for a, b in zip(w, p)), rat(0))


def facets(points: Sequence[Point], n: int) -> List[Facet]:
    """H-representation of conv(points) + orthant, normals scaled to sum 1."""
    pts = prune_dominated(points)
    if not pts:
        return []
    units = [tuple(rat(1) if j == i else rat(0) for j in range(n)) for i in range(n)]
    found: Set[Point] = set()
    for size in range(1, min(n, len(pts)) + 1):
        for chosen in combinations(pts, size):
            anchor = chosen[0]
            spans = [tuple(a - b for a, b in zip(p, anchor)) for p in chosen[1:]]
            for directions in combinations(units, n - size):
                vectors = spans + list(directions)
                if not vectors:
                    w = (rat(1),)
                else:
                    w = _cross(vectors, n)
                if not any(w):
                    continue
                if all(a <= 0 for a in w):
                    w = tuple(-a for a in w)
                if any(a < 0 for a in w):
                    continue
                w = _normalize(w)
                if w in found:
                    continue
                level = _pair(w, anchor)
                if all(_pair(w, p) >= level for p in pts):
                    found.add(w)
    result = []
    for w in sorted(found):
        result.append((w, min(_pair(w, p) for p in pts)))
    return result


def extreme_points(points: Sequence[Point], n: int) -> Tuple[List[Point], List[Facet]]:
    """Vertices and facets of conv(points) + orthant."""
    pts = prune_dominated(points)
    hs = facets(pts, n)
    vertices = []
    for p in pts:
        tight = [w for w, c in hs if _pair(w, p) == c]
        if rank_of(tight) == n:
            vertices.append(p)
    return vertices, hs


def rank_of(vectors: Sequence[Point]) -> int:
    """Rank of a list of rational vectors."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col] / rows[rank][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def contains(hs: Sequence[Facet], p: Point) -> bool:
    return all(_pair(w, p) >= c for w, c in hs)


def support(vertices: Sequence[Point], v: Sequence[Rational]) -> Rational:
    """l(v, Δ) = min over Δ of <v, x>, for v >= 0."""
    return min(_pair(tuple(v), p) for p in vertices)


def compact_faces(vertices: Sequence[Point], hs: Sequence[Facet]) -> List[FrozenSet[Point]]:
    """
    Vertex sets of all bounded faces.

    Faces are intersections of facets; one is bounded iff the normals of the
    facets containing it have a strictly positive sum.
    """
    n = len(vertices[0]) if vertices else 0
    on_facet = [frozenset(p for p in vertices if _pair(w, p) == c) for w, c in hs]
    faces: Set[FrozenSet[Point]] = {f for f in on_facet if f}
    frontier = set(faces)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in on_facet:
                meet = a & b
                if meet and meet not in faces:
                    fresh.add(meet)
        faces |= fresh
        frontier = fresh
    faces |= {frozenset([p]) for p in vertices}
    bounded = []
    for face in faces:
        normals = [w for (w, c), members in zip(hs, on_facet) if face <= members]
        total = [sum((w[i] for w in normals), rat(0)) for i in range(n)]
        if normals and all(t > 0 for t in total):
            bounded.append(face)
    return sorted(bounded, key=lambda f: (len(f), sorted(f)))


def face_dimension(face: FrozenSet[Point]) -> int:
    pts = sorted(face)
    anchor = pts[0]
    return rank_of([tuple(a - b for a, b in zip(p, anchor)) for p in pts[1:]])


def lower_hull_2d(points: Sequence[Point]) -> List[Point]:
    """Vertices of conv(points) + orthant in Q^2, ordered by decreasing second coordinate."""
    pts = sorted(prune_dominated(points), key=lambda p: (p[0], p[1]))
    hull: List[Point] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull

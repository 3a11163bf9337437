# src/qopolars/roots/contact.py
import logging
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from qopolars.roots.types import Branch, GaloisAutomorphism, RootSet
from qopolars.series.exponent import Exponent, emin
from qopolars.series.fractional import FractionalSeries, initial_data
from qopolars.utils.errors import IndeterminateError, InputSemanticError, NotQuasiOrdinaryError

logger = logging.getLogger(__name__)

ContactMatrix = Dict[Tuple[int, int], Exponent]


def contact(alpha: FractionalSeries, beta: FractionalSeries, same: bool = False) -> Optional[Exponent]:
    """
    O(α, β): the order of α - β when it is a monomial times a unit, ∞ for
    equal series, None when the difference is not monomial-ordered.
    """
    difference = alpha - beta
    if difference.vanishes_within_precision():
        if difference.is_exact or same:
            return Exponent.infinity(alpha.nvars)
        raise IndeterminateError("roots agree up to the available precision")
    data = initial_data(difference)
    return data.order if data.monomial_ordered else None


def galois_orbit(branch: Branch) -> List[FractionalSeries]:
    """Distinct conjugates of the branch root under μ_N^d, in a fixed order."""
    n = branch.denominator
    if branch.root.denominator and n % branch.root.denominator:
        raise InputSemanticError(
            f"branch {branch.label}: exponent denominators ({branch.root.denominator}) do not divide {n}"
        )
    seen: Dict[FractionalSeries, None] = {}
    for shifts in product(range(n), repeat=branch.nvars):
        image = GaloisAutomorphism(n, shifts)(branch.root)
        seen.setdefault(image, None)
    orbit = list(seen)
    logger.debug(f"branch {branch.label}: orbit of size {len(orbit)}")
    return orbit


def expand_branches(branches: Sequence[Branch]) -> RootSet:
    if not branches:
        raise InputSemanticError("no branches given")
    nvars = branches[0].nvars
    labels = [b.label for b in branches]
    if len(set(labels)) != len(labels):
        raise InputSemanticError(f"duplicate branch names in {labels}")
    roots = RootSet(nvars, list(branches))
    for b in branches:
        if b.nvars != nvars:
            raise InputSemanticError(f"branch {b.label} uses {b.nvars} variables, expected {nvars}")
        for r in galois_orbit(b):
            roots.roots.append(r)
            roots.owners.append(b.label)
    return roots


def contact_matrix(roots: Sequence[FractionalSeries]) -> ContactMatrix:
    matrix: ContactMatrix = {}
    for i, j in combinations(range(len(roots)), 2):
        value = contact(roots[i], roots[j])
        if value is None:
            raise NotQuasiOrdinaryError(f"contact of roots {i} and {j} is not well-defined", pair=(i, j))
        if value.is_infinite:
            raise InputSemanticError(f"roots {i} and {j} coincide; branches need distinct truncations")
        matrix[(i, j)] = matrix[(j, i)] = value
    return matrix


def validate_quasi_ordinary(roots: Sequence[FractionalSeries]) -> ContactMatrix:
    """
    Pairwise contacts, after checking they are well-defined and that contacts
    with a common root are comparable.
    """
    matrix = contact_matrix(roots)
    n = len(roots)
    for k in range(n):
        for i, j in combinations([x for x in range(n) if x != k], 2):
            a, b = matrix[(i, k)], matrix[(j, k)]
            if not a.comparable(b):
                raise NotQuasiOrdinaryError(
                    f"contacts O({i},{k})={a} and O({j},{k})={b} are incomparable", pair=(i, j)
                )
    return matrix


def check_strong_triangle(matrix: ContactMatrix, n: int) -> List[Tuple[int, int, int]]:
    """Triples violating the ultrametric inequality (empty for quasi-ordinary input)."""
    bad = []
    for i, j, k in combinations(range(n), 3):
        values = sorted([matrix[(i, j)], matrix[(i, k)], matrix[(j, k)]], key=Exponent.sort_key)
        try:
            low = emin(values[0], values[1])
        except ValueError:
            bad.append((i, j, k))
            continue
        if values[0] != values[1] or not all(low <= v for v in values):
            bad.append((i, j, k))
    return bad

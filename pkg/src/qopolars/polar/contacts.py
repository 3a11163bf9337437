# src/qopolars/polar/contacts.py
import logging
from typing import List, Optional, Sequence

from qopolars.algebra.rational import rat
from qopolars.algebra.resultant import sylvester_resultant
from qopolars.polar.predictions import self_contact
from qopolars.polytope.newton import minkowski_sum, newton_polytope
from qopolars.polytope.types import NewtonPolytope, ScaledPolytope
from qopolars.roots.types import RootSet
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries
from qopolars.series.ypoly import SeriesYPoly
from qopolars.tree.types import EggersTree, EggersVertex, KuoLuTree

logger = logging.getLogger(__name__)


def series_resultant(g: SeriesYPoly, p: SeriesYPoly) -> FractionalSeries:
    """Res_y(g, p) by fraction-free elimination; the coefficients must be exact."""
    if g.nvars != p.nvars:
        raise ValueError(f"polynomials in {g.nvars} and {p.nvars} variables")
    zero = FractionalSeries.zero(g.nvars)
    one = FractionalSeries.constant(g.nvars, 1)
    return sylvester_resultant(g.coeffs, p.coeffs, zero, one, FractionalSeries.exact_div)


def _product_polytope(factors: Sequence[FractionalSeries], dim: int) -> NewtonPolytope:
    total = NewtonPolytope.monomial(Exponent.zero(dim))
    for factor in factors:
        total = minkowski_sum(total, newton_polytope(factor))
        if total.is_empty:
            break
    return total


def p_contact(
    g: SeriesYPoly,
    p: SeriesYPoly,
    roots_of_p: Optional[Sequence[FractionalSeries]] = None,
    roots_of_g: Optional[Sequence[FractionalSeries]] = None,
) -> ScaledPolytope:
    """
    cont_P(g, p) = (1/(deg g · deg p))·Δ(Res_y(g, p)).

    Known roots turn the resultant into a product, Res = ±∏ g(β) = ±∏ (α - β),
    whose Newton polytope is the Minkowski sum of the factors' polytopes.
    Without roots both polynomials must be exact. A common root gives the
    empty polytope.
    """
    if g.degree < 1 or p.degree < 1:
        raise ValueError("P-contact needs polynomials of positive degree")
    d = g.nvars
    factors: List[FractionalSeries]
    if roots_of_g is not None and roots_of_p is not None:
        factors = [a - b for a in roots_of_g for b in roots_of_p]
        method = "root pairs"
    elif roots_of_p is not None:
        factors = [g(beta) for beta in roots_of_p]
        method = "roots of p"
    elif roots_of_g is not None:
        factors = [p(alpha) for alpha in roots_of_g]
        method = "roots of g"
    else:
        factors = [series_resultant(g, p)]
        method = "Sylvester"
    logger.debug(f"P-contact via {method}")
    polytope = _product_polytope(factors, d)
    return ScaledPolytope(rat(1, g.degree * p.degree), polytope)


def deepest_common_vertex(eggers: EggersTree, first: str, second: str) -> EggersVertex:
    a = eggers.branch_path(first)
    b = eggers.branch_path(second)
    shared = [u for u, v in zip(a, b) if u.index == v.index and not u.is_leaf]
    if not shared:
        raise ValueError(f"branches {first} and {second} share no vertex of finite height")
    return shared[-1]


def pairwise_p_contact(
    tree: KuoLuTree, eggers: EggersTree, roots: RootSet, first: str, second: str
) -> ScaledPolytope:
    """cont_P(f_i, f_j) for distinct branches: the largest self-contact on their common path."""
    if first == second:
        raise ValueError("pairwise P-contact needs two distinct branches")
    return self_contact(deepest_common_vertex(eggers, first, second), tree, roots)

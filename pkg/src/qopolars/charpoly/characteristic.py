# src/qopolars/charpoly/characteristic.py
"""B-characteristic polynomials by substitution y = λ_B + z·x^{h(B)}."""
import logging
from itertools import product
from typing import List, Optional, Sequence

from qopolars.algebra.cyclotomic import ONE, CyclotomicNumber
from qopolars.algebra.unipoly import UniPoly
from qopolars.charpoly.types import CharacteristicData
from qopolars.series.exponent import Exponent, minimal_elements
from qopolars.series.fractional import certify_minimum
from qopolars.series.ypoly import SeriesYPoly
from qopolars.tree.kuolu import closed_form_order, closed_form_polynomial
from qopolars.tree.types import KuoLuTree, PseudoBall
from qopolars.utils.errors import IncompatibleError, IndeterminateError

logger = logging.getLogger(__name__)


def characteristic_data(g: SeriesYPoly, bar: PseudoBall) -> CharacteristicData:
    """
    Initial coefficient polynomial and exponent of g at B. Raises
    IncompatibleError when g(λ_B + z·x^{h(B)}) is not x^q times a polynomial
    in z with nonzero constant part.
    """
    if bar.is_leaf:
        raise ValueError("characteristic data needs a bar of finite height")
    h = bar.height
    shifted = g.taylor_shift(bar.center)
    exponents: List[Exponent] = []
    for i, t in enumerate(shifted.coeffs):
        lift = h.scale(i)
        exponents.extend(e + lift for e in t.terms)
    if not exponents:
        raise IndeterminateError("substituted polynomial is zero within precision")
    lowest = minimal_elements(exponents)
    if len(lowest) != 1 or not all(lowest[0] <= e for e in exponents):
        raise IncompatibleError(f"{g} is not compatible with the bar of height {h}", ball=bar)
    q = lowest[0]
    coeffs = []
    for i, t in enumerate(shifted.coeffs):
        target = q - h.scale(i)
        try:
            certify_minimum(target, t.precision, g.nvars)
        except IndeterminateError:
            raise IndeterminateError(f"precision too low to read the z^{i} coefficient at x^{q}")
        coeffs.append(t.coefficient(target) if target.is_nonnegative() else CyclotomicNumber.zero())
    full = UniPoly(coeffs)
    logger.debug(f"characteristic data at h={h}: {full} · x^{q}")
    return CharacteristicData(full.monic(), full.lc, q)


def closed_characteristic_data(tree: KuoLuTree, bar: PseudoBall, indices: Sequence[int]) -> CharacteristicData:
    """Characteristic data of ∏ (y - α_i) over the given roots, read off the tree."""
    center = bar.center
    leading = ONE
    for i in indices:
        if i in bar.members:
            continue
        difference = center - tree.roots[i]
        order = minimal_elements(difference.terms)[0]
        leading = leading * difference.coefficient(order)
    return CharacteristicData(
        closed_form_polynomial(tree, bar, indices),
        leading,
        closed_form_order(tree, bar, indices),
    )


def has_power_shape(polynomial: UniPoly, n: int) -> bool:
    """G(z) = z^a·H(z^n) for some a and H."""
    return polynomial.is_polynomial_in_power(n) is not None


def irreducible_shape(polynomial: UniPoly, n: int) -> Optional[str]:
    """'monomial' for z^l, 'binomial' for (z^n - c)^l with c != 0, None otherwise."""
    g = polynomial.monic()
    if g.degree <= 0:
        return "monomial"
    if g == UniPoly.monomial(g.degree):
        return "monomial"
    if g.degree % n:
        return None
    power = g.degree // n
    c = -g.coeff(g.degree - n) / power
    if c.is_zero():
        return None
    candidate = (UniPoly.monomial(n) - UniPoly.constant(c)) ** power
    return "binomial" if candidate == g else None


def chain_increment_holds(
    tree: KuoLuTree, p: SeriesYPoly, indices: Sequence[int], parent: PseudoBall, child: PseudoBall
) -> bool:
    """q(p, B') - q(p, B) = #(Zer p ∩ B')·(h(B') - h(B)) for a postbar B' of B."""
    if child.parent != parent.index or child.is_leaf:
        raise ValueError("the second bar must be a finite postbar of the first")
    inside = sum(1 for i in indices if i in child.members)
    q_parent = characteristic_data(p, parent).order
    q_child = characteristic_data(p, child).order
    return q_child - q_parent == (child.height - parent.height).scale(inside)


def transport_holds(
    g: SeriesYPoly, first: PseudoBall, second: PseudoBall, conductor: int
) -> bool:
    """Conjugate bars: equal orders, and monic G's related by z ↦ ω·z."""
    a = characteristic_data(g, first)
    b = characteristic_data(g, second)
    if a.order != b.order:
        return False
    for shifts in product(range(conductor), repeat=g.nvars):
        if first.center.act(conductor, shifts) != second.center:
            continue
        phase = sum(int(x * conductor) * s for x, s in zip(first.height, shifts))
        omega = CyclotomicNumber.zeta(conductor, phase)
        if a.polynomial.scale_variable(omega.inverse()).monic() == b.polynomial:
            return True
    return False

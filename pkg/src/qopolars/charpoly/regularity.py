# src/qopolars/charpoly/regularity.py
import logging
from typing import Dict, Optional, Tuple

from qopolars.algebra.cyclotomic import CyclotomicNumber
from qopolars.algebra.rational import ceil_div
from qopolars.algebra.unipoly import UniPoly, poly_gcd, squarefree_decomposition
from qopolars.charpoly.types import RegularityReport, RegularitySplit
from qopolars.tree.kuolu import characteristic_polynomial
from qopolars.tree.types import KuoLuTree

logger = logging.getLogger(__name__)

ONE_POLY = UniPoly.constant(1)


def derivative_split(polynomial: UniPoly, k: int) -> RegularitySplit:
    """F^{(k)} = F⊕·F⊖ with F⊕ = ∏_{m>k} S_m^{m-k} taken from the squarefree decomposition."""
    if not 1 <= k < polynomial.degree:
        raise ValueError(f"k must satisfy 1 <= k < {polynomial.degree}, got {k}")
    plus = ONE_POLY
    for m, part in squarefree_decomposition(polynomial).items():
        if m > k:
            plus = plus * part ** (m - k)
    derivative = polynomial.derivative(k)
    quotient, remainder = divmod(derivative, plus)
    assert remainder.is_zero(), "F⊕ must divide the k-th derivative"
    minus = quotient.monic()
    regular = poly_gcd(polynomial, minus).degree == 0
    return RegularitySplit(plus, minus, regular)


def kuo_lu_regular(
    tree: KuoLuTree, k: int, polynomials: Optional[Dict[int, UniPoly]] = None
) -> RegularityReport:
    """Every finite bar's F_B must be k-regular; bars with deg F_B <= k pass trivially."""
    report = RegularityReport(k=k, regular=True)
    for bar in tree.finite_bars():
        polynomial = (polynomials or {}).get(bar.index) or characteristic_polynomial(tree, bar)
        if k >= polynomial.degree:
            continue
        split = derivative_split(polynomial, k)
        report.splits[bar.index] = split
        if not split.is_k_regular:
            report.regular = False
            report.failing.append(bar.index)
    if report.failing:
        logger.info(f"not {k}-regular at bars {report.failing}")
    return report


def al_derivative_shape(n: int, e: int, k: int) -> Tuple[int, int, int]:
    """(a, b, d) with ((z^n - c)^e)^{(k)} = C·z^a·(z^n - c)^b·∏_{i<=d}(z^n - c_i)."""
    if n < 1 or e < 1 or not 1 <= k < e * n:
        raise ValueError(f"need n, e >= 1 and 1 <= k < e·n, got n={n}, e={e}, k={k}")
    return (-k) % n, max(e - k, 0), min(e, k) - ceil_div(k, n)


def observed_derivative_shape(n: int, e: int, k: int, c: CyclotomicNumber) -> Tuple[int, int, int]:
    """Read (a, b, d) off the actual k-th derivative of (z^n - c)^e."""
    base = UniPoly.monomial(n) - UniPoly.constant(c)
    derivative = (base ** e).derivative(k)
    a = min(derivative.support())
    rest = derivative.exact_div(UniPoly.monomial(a))
    b = 0
    while True:
        quotient, remainder = divmod(rest, base)
        if not remainder.is_zero():
            break
        rest, b = quotient, b + 1
    if rest.is_polynomial_in_power(n) != 0:
        raise ArithmeticError(f"cofactor {rest} is not a polynomial in z^{n}")
    return a, b, rest.degree // n

# src/qopolars/verify/oracles.py
"""
Independent recomputation of the polar predictions.

Resultant polytopes are checked after a monomial substitution x_i ↦ u^{r_i}:
either an exact Sylvester resultant over Q(ζ)[u^{1/N}][T], or, for larger
systems, the orders ord_u p̄(β) over the roots β of the substituted polar,
read off the cluster walk without expanding the β.
"""
import logging
from itertools import product
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from qopolars.algebra.cyclotomic import ONE
from qopolars.algebra.rational import rat
from qopolars.algebra.resultant import sylvester_resultant
from qopolars.algebra.unipoly import UniPoly, squarefree_decomposition
from qopolars.charpoly.characteristic import characteristic_data
from qopolars.charpoly.regularity import kuo_lu_regular
from qopolars.polar.contacts import p_contact
from qopolars.polar.derivative import normalized_derivative
from qopolars.polar.predictions import branch_contact, predict_resultant_polytope, self_contact
from qopolars.polytope.newton import contained_in, newton_polytope, project, sum_elementaries
from qopolars.polytope.types import ElementaryPolytope, NewtonPolytope, ScaledPolytope
from qopolars.roots.contact import contact
from qopolars.roots.types import RootSet
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries
from qopolars.series.ypoly import SeriesYPoly
from qopolars.tree.kuolu import bar_counts, contains
from qopolars.tree.types import EggersTree, KuoLuTree, PseudoBall
from qopolars.utils.errors import HypothesisViolated, IncompatibleError, IndeterminateError
from qopolars.verify.puiseux import (
    cluster_orders,
    edge_polynomial,
    newton_puiseux_roots,
    polygon_edges,
    zero_multiplicity,
)
from qopolars.verify.types import (
    INCONCLUSIVE,
    MATCH,
    MISMATCH,
    SKIPPED,
    VerificationEntry,
    VerificationReport,
)

logger = logging.getLogger(__name__)

RETRY_SUBSTITUTIONS: Dict[int, List[Tuple[int, ...]]] = {2: [(1, 4), (4, 1), (2, 3), (3, 2)]}
DEFAULT_EXACT_MAX = 12

Substitution = Tuple[int, ...]


def default_substitutions(d: int, count: int = 5) -> List[Substitution]:
    """Pairwise non-proportional positive vectors, by increasing weight."""
    if d == 1:
        return [(1,)]
    chosen: List[Substitution] = []
    for r in sorted(product(range(1, 4), repeat=d), key=lambda v: (sum(v), v)):
        if any(_proportional(r, s) for s in chosen):
            continue
        chosen.append(r)
        if len(chosen) == count:
            break
    return chosen


def retry_substitutions(d: int) -> List[Substitution]:
    if d in RETRY_SUBSTITUTIONS:
        return list(RETRY_SUBSTITUTIONS[d])
    return [tuple(1 + (i * s) % 5 for i in range(d)) for s in (2, 3)]


def _proportional(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x * b[0] == y * a[0] for x, y in zip(a, b))


def separates_heights(tree: KuoLuTree, r: Sequence[int]) -> bool:
    """<r, h> must tell apart the heights of distinct finite bars."""
    heights = {bar.height for bar in tree.finite_bars()}
    images = {h.dot(r) for h in heights}
    return len(images) == len(heights)


# exact resultant in T


def _t_constant(series: FractionalSeries) -> SeriesYPoly:
    return SeriesYPoly(1, [series])


def divide_in_t(a: SeriesYPoly, b: SeriesYPoly) -> SeriesYPoly:
    """Exact quotient of polynomials in T over exact series in u."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    zero = FractionalSeries.zero(1)
    lead = b.coeffs[-1]
    quotient = [zero] * max(a.degree - b.degree + 1, 0)
    remainder = a
    while not remainder.is_zero():
        shift = remainder.degree - b.degree
        if shift < 0:
            raise ArithmeticError("polynomial division in T is not exact")
        c = remainder.coeffs[-1].exact_div(lead)
        quotient[shift] = c
        remainder = remainder - SeriesYPoly(1, [zero] * shift + [c]) * b
    return SeriesYPoly(1, quotient)


def resultant_in_t(g: SeriesYPoly, p: SeriesYPoly) -> SeriesYPoly:
    """Res_y(g, p - T) for exact polynomials in one variable, as a polynomial in T."""
    if g.nvars != 1 or p.nvars != 1:
        raise ValueError("substitute a monomial curve before taking the T-resultant")
    if any(not c.is_exact for c in g.coeffs + p.coeffs):
        raise IndeterminateError("the T-resultant needs exact coefficients")
    zero = SeriesYPoly(1)
    one = _t_constant(FractionalSeries.constant(1, ONE))
    first = [_t_constant(c) for c in g.coeffs]
    second = [_t_constant(c) for c in p.coeffs]
    second[0] = SeriesYPoly(1, [p.coeff(0), FractionalSeries.constant(1, -1)])
    return sylvester_resultant(first, second, zero, one, divide_in_t)


def root_product_polygon(g: SeriesYPoly, roots_of_p: Sequence[FractionalSeries]) -> NewtonPolytope:
    """Δ(∏_β (p(β) - T)) = Σ_β {ord p(β) over 1}, with ∞ for a shared root."""
    orders = cluster_orders(g, roots_of_p)
    parts = [
        ElementaryPolytope(Exponent.infinity(1) if o is None else Exponent.of(o), 1)
        for o in orders
    ]
    return sum_elementaries(parts, 1)


def resultant_oracle(
    g: SeriesYPoly,
    p: SeriesYPoly,
    roots_of_p: Optional[Sequence[FractionalSeries]],
    exact_max: int = DEFAULT_EXACT_MAX,
) -> Tuple[NewtonPolytope, Optional[SeriesYPoly]]:
    """Newton polygon of Res_y(g, p - T) and, for the exact method, the resultant itself."""
    if g.degree + p.degree <= exact_max or roots_of_p is None:
        r = resultant_in_t(g, p)
        return newton_polytope(r), r
    return root_product_polygon(g, roots_of_p), None


def resultant_structure_check(r: SeriesYPoly) -> VerificationEntry:
    """
    Along each edge of the polygon of an exact T-resultant the edge polynomial
    should be a power of a single squarefree factor. Failures stay inconclusive.
    """
    m = r.degree
    zeros = zero_multiplicity(r, m)
    shapes = []
    for slope, high, low in polygon_edges(r, zeros, m):
        parts = squarefree_decomposition(edge_polynomial(r, slope, high, low))
        shapes.append((slope, sorted(parts)))
    single = all(len(mults) == 1 for _, mults in shapes)
    return VerificationEntry(
        claim="resultant edge polynomials are powers",
        predicted="single multiplicity per edge",
        oracle="; ".join(f"slope {s}: multiplicities {m}" for s, m in shapes) or "no edges",
        status=MATCH if single else INCONCLUSIVE,
        theorem_backed=False,
    )


def _compare_polygons(
    predicted: NewtonPolytope, oracle: NewtonPolytope, r: Substitution, claim: str
) -> VerificationEntry:
    if oracle == predicted:
        status, detail = MATCH, None
    elif contained_in(oracle, predicted):
        status, detail = INCONCLUSIVE, "oracle polygon lies inside the prediction (cancellation)"
    else:
        status, detail = MISMATCH, None
    return VerificationEntry(
        claim=claim,
        predicted=predicted.describe(),
        oracle=oracle.describe(),
        status=status,
        substitution=tuple(r),
        detail=detail,
    )


def verify_resultant_polytope(
    tree: KuoLuTree,
    roots: RootSet,
    f: SeriesYPoly,
    labels: Sequence[str],
    k: int,
    batch: Optional[Sequence[Substitution]] = None,
    exact_max: int = DEFAULT_EXACT_MAX,
) -> VerificationReport:
    """Compare the predicted Δ(Res_y(f^(k), p - T)) with oracles along monomial curves."""
    report = VerificationReport()
    claim = f"Δ(Res_y(f^({k}), p - T)) for p = {'·'.join(labels)}"
    try:
        predicted = predict_resultant_polytope(tree, roots, labels, k)
    except HypothesisViolated as e:
        report.add(VerificationEntry(claim, None, None, SKIPPED, detail=f"hypothesis violated: {e}"))
        report.violations.append(str(e))
        return report

    g = normalized_derivative(f, k)
    if len(labels) == len(roots.branches):
        p = f
    else:
        p = roots.polynomial(labels)
    indices = [i for label in labels for i in roots.indices_of(label)]
    d = tree.nvars
    substitutions = list(batch) if batch else default_substitutions(d)
    retries = retry_substitutions(d) if d > 1 else []

    def check(r: Substitution) -> VerificationEntry:
        g_bar = g.substitute_monomial(r)
        p_bar = p.substitute_monomial(r)
        alphas = [tree.roots[i].substitute_monomial(r) for i in indices]
        exact_alphas = alphas if all(a.is_exact for a in alphas) else None
        try:
            polygon, exact = resultant_oracle(g_bar, p_bar, exact_alphas, exact_max)
        except (IndeterminateError, ArithmeticError) as e:
            return VerificationEntry(
                claim, project(predicted, r).describe(), None, INCONCLUSIVE, substitution=tuple(r), detail=str(e),
                indeterminate=isinstance(e, IndeterminateError),
            )
        entry = _compare_polygons(project(predicted, r), polygon, r, claim)
        if exact is not None and len(labels) == 1:
            structure = resultant_structure_check(exact)
            structure.substitution = tuple(r)
            report.add(structure)
        return entry

    cancelled = False
    for r in substitutions:
        if not separates_heights(tree, r):
            report.notes.append(f"substitution {r} identifies two bar heights; skipped")
            logger.warning(f"degenerate substitution {r} skipped")
            report.add(VerificationEntry(claim, None, None, SKIPPED, substitution=tuple(r), detail="degenerate"))
            continue
        entry = report.add(check(r))
        cancelled = cancelled or entry.detail is not None and "cancellation" in entry.detail
    if cancelled:
        for r in retries:
            if separates_heights(tree, r):
                entry = report.add(check(r))
                if entry.status == MATCH:
                    break
    logger.info(f"resultant polytope check k={k}: {report.status}")
    return report


# characteristic data of the polar


def verify_derivative_charpoly(tree: KuoLuTree, f: SeriesYPoly, k: int) -> VerificationReport:
    """
    On every finite bar with m(B) >= k the characteristic data of f^(k) is
    F_B^(k) scaled by (n-k)!/n!, at order q(f, B) - k·h(B), of degree n_k(B).
    """
    report = VerificationReport()
    g = normalized_derivative(f, k)
    n = f.degree
    scale = UniPoly.constant(rat(factorial(n - k), factorial(n)))
    counts = bar_counts(tree, k)
    for bar in tree.finite_bars():
        if bar.m < k:
            continue
        claim = f"characteristic data of f^({k}) at h={bar.height}"
        try:
            f_data = characteristic_data(f, bar)
            g_data = characteristic_data(g, bar)
        except IndeterminateError as e:
            report.add(VerificationEntry(claim, None, None, INCONCLUSIVE, detail=str(e), indeterminate=True))
            continue
        except IncompatibleError as e:
            report.add(VerificationEntry(claim, None, None, MISMATCH, detail=str(e)))
            continue
        expected = f_data.full.derivative(k) * scale
        order = f_data.order - bar.height.scale(k)
        ok = (
            g_data.full == expected
            and g_data.order == order
            and g_data.polynomial.degree == counts[bar.index].n_k
        )
        report.add(
            VerificationEntry(
                claim,
                predicted=f"{expected} · x^{order}",
                oracle=f"{g_data.full} · x^{g_data.order}",
                status=MATCH if ok else MISMATCH,
            )
        )
    return report


# position of the polar roots in the tree


def _inside(tree: KuoLuTree, bar: PseudoBall, beta: FractionalSeries) -> bool:
    if bar.is_leaf:
        return beta.is_exact and (beta - tree.roots[bar.members[0]]).is_zero()
    return contains(tree, bar, beta)


def _interior(tree: KuoLuTree, bar: PseudoBall, beta: FractionalSeries, k: int) -> bool:
    if not _inside(tree, bar, beta):
        return False
    return not any(tree.bar(c).m >= k and _inside(tree, tree.bar(c), beta) for c in bar.children)


def _polar_roots(
    tree: KuoLuTree, f: SeriesYPoly, k: int, precision, claim: str
) -> Tuple[List[FractionalSeries], Optional[VerificationEntry]]:
    """Roots of f^(k) in one variable, or the entry explaining why they are out of reach."""
    if tree.nvars != 1:
        return [], VerificationEntry(claim, None, None, SKIPPED, detail="needs one variable")
    precision = rat(precision)
    if any(b.height.total() >= precision for b in tree.finite_bars() if b.m >= k):
        return [], VerificationEntry(
            claim, None, None, INCONCLUSIVE, detail="precision below bar heights", indeterminate=True
        )
    expansion = newton_puiseux_roots(normalized_derivative(f, k), precision)
    if expansion.partial or not expansion.representable:
        return [], VerificationEntry(claim, None, None, INCONCLUSIVE, detail="polar roots not representable")
    return expansion.expanded(), None


def verify_higher_kuo_lu(
    tree: KuoLuTree, roots: RootSet, f: SeriesYPoly, k: int, precision
) -> VerificationReport:
    """
    Expand the roots of f^(k) and check where they sit: n_k(B) of them in each
    bar of T_k(f), t_k(B) in each interior, each in exactly one interior, with
    contacts h(B) against the members of k-regular bars.
    """
    report = VerificationReport()
    betas, blocked = _polar_roots(tree, f, k, precision, "higher Kuo-Lu lemma")
    if blocked is not None:
        report.add(blocked)
        return report
    finite = [b for b in tree.finite_bars() if b.m >= k]
    report.add(
        VerificationEntry(
            f"f^({k}) has {f.degree - k} roots",
            str(f.degree - k),
            str(len(betas)),
            MATCH if len(betas) == f.degree - k else MISMATCH,
        )
    )
    counts = bar_counts(tree, k)
    regularity = kuo_lu_regular(tree, k)
    for bar in finite:
        expected = counts[bar.index]
        inside = [b for b in betas if _inside(tree, bar, b)]
        interior = [b for b in betas if _interior(tree, bar, b, k)]
        report.add(
            VerificationEntry(
                f"roots of f^({k}) in B(h={bar.height})",
                str(expected.n_k),
                str(len(inside)),
                MATCH if len(inside) == expected.n_k else MISMATCH,
            )
        )
        report.add(
            VerificationEntry(
                f"roots of f^({k}) in the interior of B(h={bar.height})",
                str(expected.t_k),
                str(len(interior)),
                MATCH if len(interior) == expected.t_k else MISMATCH,
            )
        )
        if interior and bar.m > k:
            report.add(_interior_contacts(tree, bar, interior, k, bar.index not in regularity.failing))

    homes = [sum(1 for bar in finite if _interior(tree, bar, b, k)) for b in betas]
    report.add(
        VerificationEntry(
            f"each root of f^({k}) lies in one interior",
            "1 each",
            ", ".join(str(h) for h in homes),
            MATCH if all(h == 1 for h in homes) else MISMATCH,
        )
    )
    if regularity.regular:
        report.add(_contact_corollary(tree, betas, k))
    return report


def _interior_contacts(
    tree: KuoLuTree, bar: PseudoBall, interior: Sequence[FractionalSeries], k: int, regular: bool
) -> VerificationEntry:
    claim = f"contacts of interior roots with B(h={bar.height})"
    try:
        orders = [contact(tree.roots[i], beta) for i in bar.members for beta in interior]
    except IndeterminateError as e:
        return VerificationEntry(claim, None, None, INCONCLUSIVE, detail=str(e), indeterminate=True)
    h = bar.height
    if regular:
        ok = all(o == h for o in orders)
        return VerificationEntry(claim, f"all {h}", ", ".join(map(str, orders)), MATCH if ok else MISMATCH)
    witness = next((o for o in orders if o is not None and o > h), None)
    return VerificationEntry(
        claim,
        f"some contact > {h}",
        None if witness is None else str(witness),
        MATCH if witness is not None else MISMATCH,
        detail=None if witness is None else f"witness contact {witness}",
    )


def _contact_corollary(tree: KuoLuTree, betas: Sequence[FractionalSeries], k: int) -> VerificationEntry:
    """For k-regular f every O(α_i, β) is some O(α_i, α_j) with j ≠ i."""
    claim = f"contacts of f^({k}) roots are contacts between roots of f"
    n = len(tree.roots)
    try:
        failures = 0
        for i in range(n):
            own = {contact(tree.roots[i], tree.roots[j]) for j in range(n) if j != i}
            failures += sum(1 for beta in betas if contact(tree.roots[i], beta) not in own)
    except IndeterminateError as e:
        return VerificationEntry(claim, None, None, INCONCLUSIVE, detail=str(e), indeterminate=True)
    return VerificationEntry(claim, "0 failures", f"{failures} failures", MATCH if not failures else MISMATCH)


# factors of the polar attaining the self-contact


def _attained_by(
    tree: KuoLuTree, roots: RootSet, labels: Sequence[str], beta: FractionalSeries, own: ScaledPolytope
) -> Optional[str]:
    """First branch f_i with cont_P(f_i, y - β) equal to the self-contact."""
    factor = SeriesYPoly.from_roots([beta], 1)
    undecided = None
    for label in labels:
        alphas = [tree.roots[i] for i in roots.indices_of(label)]
        try:
            value = p_contact(roots.polynomial([label]), factor, roots_of_p=[beta], roots_of_g=alphas)
        except IndeterminateError as e:
            undecided = e
            continue
        if value == own:
            return label
    if undecided is not None:
        raise undecided
    return None


def verify_factor_contacts(
    tree: KuoLuTree, eggers: EggersTree, roots: RootSet, f: SeriesYPoly, k: int, precision
) -> VerificationReport:
    """
    Every root β of f^(k) in the interior of a bar B has a branch f_i with
    cont_P(f_i, y - β) = cont_P(f_i, B) = self-contact(B). The P-contact with
    a branch is constant on the conjugates of β, so this is the statement for
    every irreducible factor of p_[B].
    """
    report = VerificationReport()
    claim = f"factors of f^({k}) attain the self-contact"
    betas, blocked = _polar_roots(tree, f, k, precision, claim)
    if blocked is not None:
        report.add(blocked)
        return report
    counts = bar_counts(tree, k)
    for bar in tree.finite_bars():
        if bar.m < k or counts[bar.index].t_k == 0:
            continue
        vertex = eggers.class_of(bar.index)
        own = self_contact(vertex, tree, roots)
        attaining = [b.label for b in roots.branches if branch_contact(tree, roots, bar, b.label) == own]
        interior = [beta for beta in betas if _interior(tree, bar, beta, k)]
        name = f"{claim} at {vertex.name} (h={bar.height})"
        predicted = f"some f_i in {{{','.join(attaining)}}} at {own.describe()}"
        if not interior:
            report.add(VerificationEntry(name, predicted, None, INCONCLUSIVE, detail="no polar roots in the interior"))
            continue
        try:
            found = [_attained_by(tree, roots, attaining, beta, own) for beta in interior]
        except IndeterminateError as e:
            report.add(VerificationEntry(name, predicted, None, INCONCLUSIVE, detail=str(e), indeterminate=True))
            continue
        report.add(
            VerificationEntry(
                name,
                predicted,
                ", ".join(label or "none" for label in found),
                MISMATCH if None in found else MATCH,
            )
        )
    logger.info(f"factor contact check k={k}: {report.status}")
    return report

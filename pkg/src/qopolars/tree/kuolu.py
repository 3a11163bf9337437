# src/qopolars/tree/kuolu.py
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from qopolars.algebra.unipoly import UniPoly
from qopolars.roots.contact import ContactMatrix, validate_quasi_ordinary
from qopolars.series.exponent import Exponent, minimal_elements
from qopolars.series.fractional import FractionalSeries
from qopolars.tree.types import BarCounts, KuoLuTree, PseudoBall
from qopolars.utils.errors import NotQuasiOrdinaryError

logger = logging.getLogger(__name__)


def build_kuo_lu(roots: Sequence[FractionalSeries], contacts: Optional[ContactMatrix] = None) -> KuoLuTree:
    """Split the roots recursively into classes of contact > h, h the minimal contact."""
    if not roots:
        raise ValueError("cannot build a tree without roots")
    if contacts is None:
        contacts = validate_quasi_ordinary(roots)
    bars: List[PseudoBall] = []
    _grow(roots, contacts, tuple(range(len(roots))), None, bars)
    logger.info(f"Kuo-Lu tree: {len(roots)} roots, {sum(1 for b in bars if not b.is_leaf)} finite bars")
    return KuoLuTree(roots, bars, 0)


def _grow(
    roots: Sequence[FractionalSeries],
    contacts: ContactMatrix,
    members: Tuple[int, ...],
    parent: Optional[PseudoBall],
    bars: List[PseudoBall],
) -> int:
    index = len(bars)
    first = roots[members[0]]
    support = None if parent is None else first.coefficient(parent.height)
    if len(members) == 1:
        leaf = PseudoBall(index, Exponent.infinity(first.nvars), first, members, support=support)
        leaf.parent = None if parent is None else parent.index
        bars.append(leaf)
        return index

    values = {contacts[(i, j)] for i in members for j in members if i < j}
    lowest = minimal_elements(values)
    if len(lowest) != 1 or not all(lowest[0] <= v for v in values):
        raise NotQuasiOrdinaryError(f"no minimal contact among roots {list(members)}")
    height = lowest[0]
    bar = PseudoBall(
        index,
        height,
        first.drop_terms_at_or_above(height),
        members,
        parent=None if parent is None else parent.index,
        support=support,
    )
    bars.append(bar)

    classes: List[List[int]] = []
    for i in members:
        for group in classes:
            if contacts[(i, group[0])] > height:
                group.append(i)
                break
        else:
            classes.append([i])

    def order(group: List[int]):
        return (roots[group[0]].coefficient(height).sort_key(), group[0])

    for group in sorted(classes, key=order):
        bar.children.append(_grow(roots, contacts, tuple(group), bar, bars))
    return index


def bar_counts(tree: KuoLuTree, k: int) -> Dict[int, BarCounts]:
    """m(B), n_k(B) = max(m - k, 0) and t_k(B) = n_k(B) - Σ n_k over the postbars."""
    if not 1 <= k < max(tree.degree, 2):
        raise ValueError(f"k must satisfy 1 <= k < {tree.degree}, got {k}")
    counts = {}
    for bar in tree.bars:
        n_k = max(bar.m - k, 0)
        below = sum(max(tree.bar(c).m - k, 0) for c in bar.children)
        counts[bar.index] = BarCounts(bar.m, n_k, n_k - below)
    return counts


def sub_tree(tree: KuoLuTree, k: int) -> List[PseudoBall]:
    """T_k(f): the bars with m(B) >= k."""
    return [b for b in tree.bars if b.m >= k]


def contains(tree: KuoLuTree, bar: PseudoBall, series: FractionalSeries) -> bool:
    """series ∈ B, i.e. its contact with the members is at least h(B)."""
    if bar.is_leaf:
        return (series - tree.roots[bar.members[0]]).vanishes_within_precision()
    difference = series - bar.center
    return all(bar.height <= e for e in difference.terms)


def in_interior(tree: KuoLuTree, bar: PseudoBall, series: FractionalSeries, k: int) -> bool:
    """series ∈ B° = B minus the postbars of B that lie in T_k(f)."""
    if not contains(tree, bar, series):
        return False
    return not any(
        tree.bar(c).m >= k and contains(tree, tree.bar(c), series) for c in bar.children
    )


def characteristic_polynomial(tree: KuoLuTree, bar: PseudoBall) -> UniPoly:
    """F_B(z) = ∏ (z - lc_B α) over the members of B."""
    return UniPoly.from_roots([tree.lc(bar, tree.roots[i]) for i in bar.members])


def closed_form_order(tree: KuoLuTree, bar: PseudoBall, indices: Sequence[int]) -> Exponent:
    """q(p, B) for p = ∏ (y - α_i) over the given root indices."""
    total = Exponent.zero(tree.nvars)
    representative = tree.roots[bar.members[0]]
    for i in indices:
        if i in bar.members:
            total = total + bar.height
        else:
            total = total + _contact(tree, representative, i)
    return total


def _contact(tree: KuoLuTree, representative: FractionalSeries, i: int) -> Exponent:
    difference = representative - tree.roots[i]
    lowest = minimal_elements(difference.terms)
    return lowest[0]


def closed_form_polynomial(tree: KuoLuTree, bar: PseudoBall, indices: Sequence[int]) -> UniPoly:
    """G_B of p, monic: the product of (z - lc_B α) over the roots of p inside B."""
    return UniPoly.from_roots([tree.lc(bar, tree.roots[i]) for i in indices if i in bar.members])

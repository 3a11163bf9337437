# src/qopolars/tree/eggers.py
import logging
from itertools import product
from typing import Dict, List, Sequence, Set

from qopolars.roots.types import RootSet
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries
from qopolars.tree.types import CharacteristicExponents, EggersTree, EggersVertex, KuoLuTree, PseudoBall
from qopolars.utils.errors import InputSemanticError

logger = logging.getLogger(__name__)


def _shifts(conductor: int, nvars: int):
    return product(range(conductor), repeat=nvars)


def _phase(exponent: Exponent, conductor: int, shifts: Sequence[int]) -> int:
    return sum(int(a * conductor) * s for a, s in zip(exponent, shifts)) % conductor


def extension_degree(center: FractionalSeries, height: Exponent, conductor: int) -> int:
    """
    n(B): the number of distinct images of x^{h(B)} under the automorphisms
    fixing the center λ_B term by term.
    """
    phases: Set[int] = set()
    for shifts in _shifts(conductor, center.nvars):
        if all(_phase(e, conductor, shifts) == 0 for e in center.terms):
            phases.add(_phase(height, conductor, shifts))
    return len(phases)


def conjugacy_classes(tree: KuoLuTree, roots: RootSet) -> List[List[PseudoBall]]:
    """Bars of equal height whose centers lie in one Galois orbit; leaves grouped by branch."""
    conductor = roots.conductor
    classes: List[List[PseudoBall]] = []
    assigned: Set[int] = set()
    for bar in tree.bars:
        if bar.index in assigned:
            continue
        if bar.is_leaf:
            owner = roots.owners[bar.members[0]]
            group = [b for b in tree.leaves() if roots.owners[b.members[0]] == owner]
        else:
            orbit = {bar.center.act(conductor, s) for s in _shifts(conductor, tree.nvars)}
            group = [
                b for b in tree.finite_bars()
                if b.index not in assigned and b.height == bar.height and b.center in orbit
            ]
        assigned.update(b.index for b in group)
        classes.append(group)
    return classes


def _dashed(tree: KuoLuTree, roots: RootSet, bar: PseudoBall) -> Dict[str, bool]:
    """A branch is dashed at [B] when no two of its roots in B have contact exactly h(B)."""
    flags = {}
    owners = {roots.owners[i] for i in bar.members}
    for label in sorted(owners):
        mine = [i for i in bar.members if roots.owners[i] == label]
        solid = any(
            _order_is(tree.roots[i] - tree.roots[j], bar.height)
            for i in mine
            for j in mine
            if i < j
        )
        flags[label] = not solid
    return flags


def _order_is(difference: FractionalSeries, height: Exponent) -> bool:
    return all(height <= e for e in difference.terms) and not difference.coefficient(height).is_zero()


def build_eggers(tree: KuoLuTree, roots: RootSet) -> EggersTree:
    conductor = roots.conductor
    classes = conjugacy_classes(tree, roots)
    vertices: List[EggersVertex] = []
    by_bar: Dict[int, int] = {}
    for index, group in enumerate(classes):
        bar = group[0]
        branches = tuple(sorted({roots.owners[i] for i in bar.members}))
        degree = 1 if bar.is_leaf else extension_degree(bar.center, bar.height, conductor)
        vertex = EggersVertex(
            index=index,
            bars=tuple(b.index for b in group),
            height=bar.height,
            size=len(group),
            degree=degree,
            branches=branches,
            dashed={} if bar.is_leaf else _dashed(tree, roots, bar),
            label="" if bar.is_leaf else f"[B{sum(1 for v in vertices if not v.is_leaf) + 1}]",
        )
        vertices.append(vertex)
        for b in group:
            by_bar[b.index] = index
    for vertex in vertices:
        bar = tree.bar(vertex.representative)
        if bar.parent is not None:
            vertex.parent = by_bar[bar.parent]
        for child in bar.children:
            target = by_bar[child]
            if target not in vertex.children:
                vertex.children.append(target)
    logger.info(f"Eggers tree: {len(vertices)} vertices ({sum(1 for v in vertices if not v.is_leaf)} finite)")
    return EggersTree(vertices, [by_bar[tree.root]])


def characteristic_exponents(tree: KuoLuTree, roots: RootSet) -> CharacteristicExponents:
    """h_i, n_i and e_i of an irreducible input (a single branch)."""
    if len(roots.branches) != 1:
        raise InputSemanticError("characteristic exponents need a single branch")
    path = [b for b in tree.path(0) if not b.is_leaf]
    heights = tuple(b.height for b in path)
    n = tuple(extension_degree(b.center, b.height, roots.conductor) for b in path)
    e: List[int] = []
    for i in range(len(n) + 1):
        value = 1
        for x in n[i:]:
            value *= x
        e.append(value)
    if e[0] != tree.degree:
        raise InputSemanticError(f"n_1⋯n_s = {e[0]} differs from the degree {tree.degree}")
    return CharacteristicExponents(heights, n, tuple(e), tuple(b.index for b in path))


def t_k_by_cases(exponents: CharacteristicExponents, i: int, k: int) -> int:
    """t_k(B_i) for 1 <= i <= s: (n_i - 1)k, e_{i-1} - k or 0."""
    n_i = exponents.n[i - 1]
    e_i, e_prev = exponents.e[i], exponents.e[i - 1]
    if k <= e_i:
        return (n_i - 1) * k
    if k < e_prev:
        return e_prev - k
    return 0


def bars_at_height(tree: KuoLuTree, height: Exponent) -> List[PseudoBall]:
    return [b for b in tree.finite_bars() if b.height == height]



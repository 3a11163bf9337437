# src/qopolars/utils/example_utils.py
import logging
from typing import List, Optional, Tuple

from qopolars.algebra.rational import Rational, rat
from qopolars.cli.inputs import ProblemInput, read_input
from qopolars.polar.contacts import series_resultant
from qopolars.roots.contact import expand_branches, validate_quasi_ordinary
from qopolars.roots.types import Branch, RootSet
from qopolars.series.ypoly import SeriesYPoly
from qopolars.tree.eggers import build_eggers
from qopolars.tree.kuolu import build_kuo_lu
from qopolars.tree.types import EggersTree, KuoLuTree
from qopolars.utils.errors import IndeterminateError, InputSemanticError, UnrepresentableError
from qopolars.utils.setup_utils import Settings
from qopolars.verify.puiseux import conjugate_groups, newton_puiseux_roots

logger = logging.getLogger(__name__)

MIN_PRECISION = rat(3)


def discriminant_precision(f: SeriesYPoly) -> Rational:
    """max(3, ord Disc_y(f) + 1): every contact between two roots lies below it."""
    disc = series_resultant(f, f.derivative(1))
    if disc.is_zero():
        raise InputSemanticError(f"{f} has a repeated root")
    return max(MIN_PRECISION, disc.min_total() + 1)


def branch_precision(tree: KuoLuTree) -> Rational:
    heights = [bar.height.total() for bar in tree.finite_bars()]
    return max([MIN_PRECISION] + [3 * h for h in heights])


def branches_from_poly(f: SeriesYPoly, precision: Rational) -> List[Branch]:
    """Branches of a one-variable Weierstrass polynomial, one per conjugacy orbit of its roots."""
    expansion = newton_puiseux_roots(f, precision)
    if not expansion.representable:
        stub = next(r for r in expansion.roots if r.unrepresentable is not None)
        raise UnrepresentableError(f"a root needs the roots of {stub.unrepresentable}, outside the cyclotomic tower")
    if expansion.partial or any(r.count > 1 for r in expansion.roots):
        raise IndeterminateError(f"roots of {f} are not separated at precision {precision}")
    series = expansion.expanded()
    groups = conjugate_groups(series)
    branches = [Branch(f"f{i}", series[group[0]], len(group)) for i, group in enumerate(groups, start=1)]
    logger.info(f"{f}: {len(series)} roots in {len(branches)} branches at precision {precision}")
    return branches


def setup(path, settings: Optional[Settings] = None) -> Tuple[ProblemInput, RootSet, KuoLuTree, EggersTree, SeriesYPoly]:
    """
    Load a .qo problem and build everything the commands need.

    Returns:
        Tuple containing:
        - problem: parsed input, with the precision resolved
        - roots: the root set, one Galois orbit per branch
        - tree: the Kuo-Lu tree
        - eggers: the Eggers tree
        - f: the polynomial whose roots these are
    """
    settings = settings or Settings()
    problem = read_input(path)
    return (problem,) + build(problem, settings)


def build(problem: ProblemInput, settings: Settings) -> Tuple[RootSet, KuoLuTree, EggersTree, SeriesYPoly]:
    chosen = problem.precision or settings.precision
    if problem.is_polynomial:
        f = problem.poly
        problem.precision = chosen or discriminant_precision(f)
        branches = branches_from_poly(f, problem.precision)
    else:
        f = None
        branches = problem.branches

    roots = expand_branches(branches)
    tree = build_kuo_lu(roots.roots, validate_quasi_ordinary(roots.roots))
    eggers = build_eggers(tree, roots)
    if f is None:
        f = roots.polynomial()
        problem.precision = chosen or branch_precision(tree)
    logger.info(f"problem {problem.source}: degree {tree.degree}, precision {problem.precision}")
    return roots, tree, eggers, f

# src/qopolars/polar/predictions.py
import logging
from typing import Dict, List, Sequence

from qopolars.algebra.rational import rat
from qopolars.charpoly.characteristic import irreducible_shape
from qopolars.charpoly.regularity import derivative_split, kuo_lu_regular
from qopolars.polar.types import ORACLE_CHECKED, THEOREM, THEOREM_REGULAR, ContactRelation, EggersFactorPrediction
from qopolars.polytope.newton import polytope_order, sum_elementaries
from qopolars.polytope.types import ElementaryPolytope, NewtonPolytope, PolytopeOrder, ScaledPolytope
from qopolars.roots.types import RootSet
from qopolars.tree.kuolu import bar_counts, characteristic_polynomial, closed_form_order
from qopolars.tree.types import EggersTree, EggersVertex, KuoLuTree, PseudoBall
from qopolars.utils.errors import HypothesisViolated, OracleMismatch

logger = logging.getLogger(__name__)


def branch_contact(tree: KuoLuTree, roots: RootSet, bar: PseudoBall, label: str) -> ScaledPolytope:
    """cont_P(f_i, B) = (1/deg f_i)·Δ(x^{q(f_i, B)})."""
    indices = roots.indices_of(label)
    q = closed_form_order(tree, bar, indices)
    return ScaledPolytope(rat(1, len(indices)), NewtonPolytope.monomial(q))


def self_contact(vertex: EggersVertex, tree: KuoLuTree, roots: RootSet) -> ScaledPolytope:
    """The common value of cont_P(f_i, B) over the branches meeting B."""
    if vertex.is_leaf:
        raise ValueError("self-contact is defined for vertices of finite height")
    bar = tree.bar(vertex.representative)
    values = [branch_contact(tree, roots, bar, label) for label in vertex.branches]
    if not values:
        raise ValueError(f"no branch meets {vertex.name}")
    for other in values[1:]:
        if other != values[0]:
            raise OracleMismatch(
                f"self-contact of {vertex.name} depends on the branch: {values[0]} vs {other}"
            )
    return values[0]


def _contact_relations(
    tree: KuoLuTree, roots: RootSet, vertex: EggersVertex, own: ScaledPolytope, regular: bool
) -> List[ContactRelation]:
    bar = tree.bar(vertex.representative)
    relations = []
    attaining = []
    for branch in roots.branches:
        value = branch_contact(tree, roots, bar, branch.label)
        order = polytope_order(value, own)
        if order == PolytopeOrder.COARSER:
            relations.append(ContactRelation(branch.label, "equal", value, THEOREM))
            continue
        if order == PolytopeOrder.EQUAL:
            attaining.append(branch.label)
        if order == PolytopeOrder.EQUAL and regular:
            relations.append(ContactRelation(branch.label, "equal", own, THEOREM_REGULAR))
        else:
            relations.append(ContactRelation(branch.label, "⪰", own, THEOREM))
    if attaining:
        relations.append(ContactRelation(",".join(attaining), "some equal", own, ORACLE_CHECKED))
    return relations


def eggers_factorization(
    tree: KuoLuTree, eggers: EggersTree, roots: RootSet, k: int
) -> List[EggersFactorPrediction]:
    """One prediction per Eggers vertex with t_k(B) != 0."""
    if not 1 <= k < tree.degree:
        raise ValueError(f"k must satisfy 1 <= k < {tree.degree}, got {k}")
    counts = bar_counts(tree, k)
    predictions = []
    for vertex in eggers.finite_vertices():
        bar = tree.bar(vertex.representative)
        t_k = counts[bar.index].t_k
        if t_k == 0:
            continue
        polynomial = characteristic_polynomial(tree, bar)
        split = derivative_split(polynomial, k)
        own = self_contact(vertex, tree, roots)
        shape = irreducible_shape(split.minus, vertex.degree)
        prediction = EggersFactorPrediction(
            vertex=vertex.index,
            name=vertex.name,
            degree=vertex.size * t_k,
            t_k=t_k,
            polynomial=split.minus,
            self_contact=own,
            contacts=_contact_relations(tree, roots, vertex, own, split.is_k_regular),
            quasi_ordinary=_quasi_ordinary_status(split.minus, vertex.degree, shape),
        )
        predictions.append(prediction)
    total = sum(p.degree for p in predictions)
    if total != tree.degree - k:
        raise OracleMismatch(f"Eggers factor degrees sum to {total}, expected {tree.degree - k}")
    return predictions


def _quasi_ordinary_status(polynomial, n: int, shape) -> str:
    """l = 1 in a(z^n - c)^l (or a·z) gives a quasi-ordinary factor; larger l is undecided."""
    if shape is None:
        return "unknown"
    if polynomial.degree <= 1 or (shape == "binomial" and polynomial.degree == n):
        return "quasi-ordinary"
    return "unknown"


def degree_row(tree: KuoLuTree, eggers: EggersTree, k: int) -> Dict[str, int]:
    """deg p_[B] = N(B)·t_k(B) for every finite vertex, zeros included."""
    counts = bar_counts(tree, k)
    return {
        v.name: v.size * counts[v.representative].t_k for v in eggers.finite_vertices()
    }


def predict_resultant_polytope(
    tree: KuoLuTree, roots: RootSet, labels: Sequence[str], k: int
) -> NewtonPolytope:
    """Δ(Res_y(f^{(k)}, p - T)) = Σ_B {t_k(B)·q(p, B) over t_k(B)} for Kuo-Lu k-regular f."""
    report = kuo_lu_regular(tree, k)
    if not report.regular:
        raise HypothesisViolated(f"not {k}-regular (bars {report.failing})")
    indices = [i for label in labels for i in roots.indices_of(label)]
    counts = bar_counts(tree, k)
    parts = []
    for bar in tree.finite_bars():
        t_k = counts[bar.index].t_k
        if t_k:
            q = closed_form_order(tree, bar, indices)
            parts.append(ElementaryPolytope(q.scale(t_k), t_k))
    polytope = sum_elementaries(parts, tree.nvars)
    logger.debug(f"predicted resultant polytope for k={k}: {polytope.describe()}")
    return polytope

# src/qopolars/polar/merle.py
"""Decomposition of the polars of an irreducible input along its characteristic exponents."""
import logging

from qopolars.charpoly.regularity import al_derivative_shape, derivative_split
from qopolars.polar.predictions import self_contact
from qopolars.polar.types import MerleFactor, MerlePrediction
from qopolars.roots.types import RootSet
from qopolars.tree.eggers import characteristic_exponents, t_k_by_cases
from qopolars.tree.kuolu import characteristic_polynomial
from qopolars.tree.types import CharacteristicExponents, EggersTree, KuoLuTree
from qopolars.utils.errors import InputSemanticError

logger = logging.getLogger(__name__)


def polar_index(exponents: CharacteristicExponents, k: int) -> int:
    """i_k with e_{i_k} <= k < e_{i_k - 1}."""
    for i in range(1, len(exponents.n) + 1):
        if exponents.e[i] <= k < exponents.e[i - 1]:
            return i
    raise ValueError(f"k={k} is outside 1 <= k < {exponents.degree}")


def _p_i0_status(a: int) -> str:
    if a == 0:
        return "trivial"
    if a == 1:
        return "quasi-ordinary"
    return "not necessarily quasi-ordinary"


def merle_decomposition(tree: KuoLuTree, eggers: EggersTree, roots: RootSet, k: int) -> MerlePrediction:
    """f^{(k)} = p_1⋯p_{i_k} with deg p_i = n_1⋯n_{i-1}·t_k(B_i), each p_i refined as p_i0·p_i1⋯p_id."""
    if len(roots.branches) != 1:
        raise InputSemanticError(
            f"input has {len(roots.branches)} branches; use the Eggers factorization for reducible inputs"
        )
    exponents = characteristic_exponents(tree, roots)
    n = exponents.degree
    if n < 2 or not 1 <= k < n:
        raise ValueError(f"need degree > 1 and 1 <= k < {n}, got degree {n}, k={k}")
    i_k = polar_index(exponents, k)
    factors = []
    conjugates = 1
    for i in range(1, i_k + 1):
        n_i, e_i = exponents.n[i - 1], exponents.e[i]
        bar = tree.bar(exponents.bars[i - 1])
        t_k = t_k_by_cases(exponents, i, k)
        a, _, d = al_derivative_shape(n_i, e_i, k)
        split = derivative_split(characteristic_polynomial(tree, bar), k)
        factors.append(
            MerleFactor(
                i=i,
                degree=conjugates * t_k,
                t_k=t_k,
                polynomial=split.minus,
                self_contact=self_contact(eggers.class_of(bar.index), tree, roots),
                a=a,
                d=d,
                degree_p_i0=a * conjugates,
                degree_p_ij=conjugates * n_i,
                p_i0_status=_p_i0_status(a),
                p_i0_exponents=exponents.heights[: i - 1] if a == 1 else (),
                p_ij_exponents=exponents.heights[:i] if d else (),
            )
        )
        conjugates *= n_i
    prediction = MerlePrediction(k=k, i_k=i_k, factors=factors)
    logger.info(f"Merle decomposition for k={k}: degrees {[f.degree for f in factors]}")
    return prediction

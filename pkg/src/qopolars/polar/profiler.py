# src/qopolars/polar/profiler.py
import logging
from typing import Dict, List, Optional, Sequence

from qopolars.charpoly.regularity import kuo_lu_regular
from qopolars.polar.merle import merle_decomposition
from qopolars.polar.predictions import degree_row, eggers_factorization, predict_resultant_polytope
from qopolars.polar.types import PolarProfile
from qopolars.polytope.newton import canonical_decomposition, is_polygonal
from qopolars.roots.types import RootSet
from qopolars.tree.types import EggersTree, KuoLuTree
from qopolars.utils.errors import HypothesisViolated, PolytopeError


class PolarProfiler:
    def __init__(self, tree: KuoLuTree, eggers: EggersTree, roots: RootSet, k: int,
                 labels: Optional[Sequence[str]] = None):
        self.tree = tree
        self.eggers = eggers
        self.roots = roots
        self.k = k
        self.labels = list(labels) if labels else [b.label for b in roots.branches]
        self.logger = logging.getLogger(__name__)
        self.notes: List[str] = []
        self.report = None

    def _check_regularity(self) -> None:
        self.report = kuo_lu_regular(self.tree, self.k)
        if not self.report.regular:
            self.notes.append(f"not {self.k}-regular at bars {self.report.failing}")

    def _predict_resultant(self) -> Optional[Dict]:
        """Predicted Newton polytope of Res_y(f^(k), p - T), or None when the hypothesis fails."""
        try:
            polytope = predict_resultant_polytope(self.tree, self.roots, self.labels, self.k)
        except HypothesisViolated as e:
            self.notes.append(f"resultant polytope: hypothesis violated ({e})")
            return None
        result = {"p": list(self.labels), "polytope": polytope.to_json(), "text": polytope.describe()}
        try:
            parts = canonical_decomposition(polytope)
            result["decomposition"] = [e.to_json() for e in parts]
            result["polygonal"] = is_polygonal(polytope)
        except PolytopeError:
            result["polygonal"] = False
        return result

    def _predict_merle(self):
        if len(self.roots.branches) != 1 or self.tree.degree < 2:
            return None
        return merle_decomposition(self.tree, self.eggers, self.roots, self.k)

    def generate_profile(self) -> PolarProfile:
        """Generate the full prediction set for the k-th polar."""
        self.notes = []
        self._check_regularity()
        factors = eggers_factorization(self.tree, self.eggers, self.roots, self.k)
        profile = PolarProfile(
            k=self.k,
            degree=self.tree.degree - self.k,
            regular=self.report.regular,
            failing_bars=list(self.report.failing),
            factors=factors,
            degree_row=degree_row(self.tree, self.eggers, self.k),
            resultant=self._predict_resultant(),
            merle=self._predict_merle(),
            notes=list(self.notes),
        )
        self.logger.info(f"profiled k={self.k}: {len(factors)} Eggers factors")
        return profile

    def get_profile_summary(self) -> str:
        """Get a human-readable summary of the polar predictions."""
        profile = self.generate_profile()

        summary = [
            f"=== Polar f^({profile.k}) of degree {profile.degree} ===\n",
            f"Kuo-Lu {profile.k}-regular: {'yes' if profile.regular else 'no'}",
            "",
            "Eggers factors:",
        ]
        for factor in profile.factors:
            summary.append(
                f"- p_{factor.name}: degree {factor.degree}, "
                f"characteristic polynomial {factor.polynomial}, "
                f"self-contact {factor.self_contact.describe()}, {factor.quasi_ordinary}"
            )
            for relation in factor.contacts:
                summary.append(f"    {relation.describe()}  [{relation.provenance}]")

        if profile.resultant is not None:
            summary += ["", f"Resultant polytope: {profile.resultant['text']}"]
        if profile.merle is not None:
            summary += ["", f"Merle decomposition (i_k = {profile.merle.i_k}):"]
            for f in profile.merle.factors:
                summary.append(
                    f"- p_{f.i}: degree {f.degree}, a={f.a}, d={f.d}, p_{f.i}0 {f.p_i0_status}"
                )
        for note in profile.notes:
            summary.append(f"! {note}")
        return "\n".join(summary)


def degree_table(tree: KuoLuTree, eggers: EggersTree, ks: Sequence[int]) -> Dict[int, Dict[str, int]]:
    """deg p_[B] for each k, one row per polar."""
    return {k: degree_row(tree, eggers, k) for k in ks}


def format_degree_table(table: Dict[int, Dict[str, int]]) -> str:
    if not table:
        return ""
    names = list(next(iter(table.values())))
    lines = ["k    " + "  ".join(f"{name:>6}" for name in names)]
    for k, row in table.items():
        lines.append(f"{k:<4} " + "  ".join(f"{row[name]:>6}" for name in names))
    return "\n".join(lines)

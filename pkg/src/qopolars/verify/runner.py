# src/qopolars/verify/runner.py
import logging
from itertools import combinations
from typing import Callable, Optional, Sequence

from qopolars.polar.contacts import p_contact, pairwise_p_contact
from qopolars.roots.types import RootSet
from qopolars.series.ypoly import SeriesYPoly
from qopolars.tree.types import EggersTree, KuoLuTree
from qopolars.utils.errors import IndeterminateError, OracleMismatch, QOError
from qopolars.verify.oracles import (
    DEFAULT_EXACT_MAX,
    Substitution,
    verify_derivative_charpoly,
    verify_factor_contacts,
    verify_higher_kuo_lu,
    verify_resultant_polytope,
)
from qopolars.verify.types import INCONCLUSIVE, MATCH, MISMATCH, VerificationEntry, VerificationReport


class VerificationRunner:
    def __init__(
        self,
        tree: KuoLuTree,
        eggers: EggersTree,
        roots: RootSet,
        f: SeriesYPoly,
        k: int,
        precision,
        substitutions: Optional[Sequence[Substitution]] = None,
        exact_max: int = DEFAULT_EXACT_MAX,
    ):
        """Initialize the runner for the k-th polar of f."""
        self.tree = tree
        self.eggers = eggers
        self.roots = roots
        self.f = f
        self.k = k
        self.precision = precision
        self.substitutions = list(substitutions) if substitutions else None
        self.exact_max = exact_max
        self.logger = logging.getLogger(__name__)

    def run_all(self) -> VerificationReport:
        """Run every oracle that applies to the input."""
        report = VerificationReport()
        labels = [b.label for b in self.roots.branches]

        self._run_claim(report, "characteristic data of the polar",
                        lambda: verify_derivative_charpoly(self.tree, self.f, self.k))
        self._run_claim(report, "resultant polytope of f",
                        lambda: self._resultant(labels))
        if len(labels) > 1:
            for label in labels:
                self._run_claim(report, f"resultant polytope of {label}",
                                lambda label=label: self._resultant([label]))
            for first, second in combinations(labels, 2):
                self._run_claim(report, f"P-contact of {first} and {second}",
                                lambda a=first, b=second: self._pairwise(a, b))
        if self.tree.nvars == 1:
            self._run_claim(report, "higher Kuo-Lu lemma",
                            lambda: verify_higher_kuo_lu(self.tree, self.roots, self.f, self.k, self.precision))
            self._run_claim(report, "factors attaining the self-contact",
                            lambda: verify_factor_contacts(
                                self.tree, self.eggers, self.roots, self.f, self.k, self.precision))

        self.logger.info(
            f"verification k={self.k}: {report.count(MATCH)} match, "
            f"{report.count(MISMATCH)} mismatch, {report.count(INCONCLUSIVE)} inconclusive"
        )
        return report

    def _resultant(self, labels: Sequence[str]) -> VerificationReport:
        return verify_resultant_polytope(
            self.tree, self.roots, self.f, labels, self.k, self.substitutions, self.exact_max
        )

    def _pairwise(self, first: str, second: str) -> VerificationReport:
        """Closed-form cont_P(f_i, f_j) against the product over root pairs."""
        report = VerificationReport()
        predicted = pairwise_p_contact(self.tree, self.eggers, self.roots, first, second)
        first_roots = [self.tree.roots[i] for i in self.roots.indices_of(first)]
        second_roots = [self.tree.roots[i] for i in self.roots.indices_of(second)]
        oracle = p_contact(
            self.roots.polynomial([first]),
            self.roots.polynomial([second]),
            roots_of_p=second_roots,
            roots_of_g=first_roots,
        )
        report.add(
            VerificationEntry(
                f"cont_P({first}, {second})",
                predicted.describe(),
                oracle.describe(),
                MATCH if oracle == predicted else MISMATCH,
            )
        )
        return report

    def _run_claim(self, report: VerificationReport, name: str,
                   check: Callable[[], VerificationReport]) -> None:
        try:
            report.extend(check())
        except IndeterminateError as e:
            self.logger.warning(f"{name}: {str(e)}")
            report.add(VerificationEntry(name, None, None, INCONCLUSIVE, detail=str(e), indeterminate=True))
        except OracleMismatch as e:
            self.logger.error(f"{name}: {str(e)}")
            report.add(VerificationEntry(name, None, None, MISMATCH, detail=str(e)))
        except QOError as e:
            self.logger.error(f"Error checking {name}: {str(e)}")
            report.add(VerificationEntry(name, None, None, INCONCLUSIVE, detail=str(e)))

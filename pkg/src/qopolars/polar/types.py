# src/qopolars/polar/types.py
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from qopolars.algebra.unipoly import UniPoly
from qopolars.polytope.types import ScaledPolytope
from qopolars.series.exponent import Exponent

THEOREM = "theorem"
THEOREM_REGULAR = "theorem (k-regular clause)"
ORACLE_CHECKED = "oracle-checked"


@dataclass(frozen=True)
class ContactRelation:
    """cont_P(f_i, p_[B]) against a known value or the self-contact of [B]."""

    branch: str
    relation: str  # "equal", "⪰" or "some equal"
    value: ScaledPolytope
    provenance: str

    @property
    def candidates(self) -> Tuple[str, ...]:
        return tuple(self.branch.split(","))

    def describe(self) -> str:
        if self.relation == "equal":
            return f"cont_P({self.branch}, p) = {self.value.describe()}"
        if self.relation == "some equal":
            return f"every factor g has cont_P(f_i, g) = {self.value.describe()} for some f_i in {{{self.branch}}}"
        return f"cont_P({self.branch}, p) ⪰ {self.value.describe()}"

    def to_json(self) -> Dict:
        return {
            "branch": self.branch,
            "relation": self.relation,
            "value": self.value.to_json(),
            "text": self.describe(),
            "provenance": self.provenance,
        }


@dataclass
class EggersFactorPrediction:
    vertex: int
    name: str
    degree: int
    t_k: int
    polynomial: UniPoly
    self_contact: ScaledPolytope
    contacts: List[ContactRelation] = field(default_factory=list)
    quasi_ordinary: str = "unknown"
    provenance: str = THEOREM

    def to_json(self) -> Dict:
        return {
            "vertex": self.vertex,
            "name": self.name,
            "degree": self.degree,
            "t_k": self.t_k,
            "characteristic_polynomial": str(self.polynomial),
            "self_contact": self.self_contact.to_json(),
            "contacts": [c.to_json() for c in self.contacts],
            "quasi_ordinary": self.quasi_ordinary,
            "provenance": self.provenance,
        }


@dataclass
class MerleFactor:
    """p_i = p_{i0}·p_{i1}⋯p_{id} with its degrees and exponent data."""

    i: int
    degree: int
    t_k: int
    polynomial: UniPoly
    self_contact: ScaledPolytope
    a: int
    d: int
    degree_p_i0: int
    degree_p_ij: int
    p_i0_status: str
    p_i0_exponents: Tuple[Exponent, ...]
    p_ij_exponents: Tuple[Exponent, ...]

    def to_json(self) -> Dict:
        return {
            "i": self.i,
            "degree": self.degree,
            "t_k": self.t_k,
            "characteristic_polynomial": str(self.polynomial),
            "self_contact": self.self_contact.to_json(),
            "a": self.a,
            "d": self.d,
            "degree_p_i0": self.degree_p_i0,
            "degree_p_ij": self.degree_p_ij,
            "p_i0": self.p_i0_status,
            "p_i0_exponents": [h.to_json() for h in self.p_i0_exponents],
            "p_ij_exponents": [h.to_json() for h in self.p_ij_exponents],
        }


@dataclass
class MerlePrediction:
    k: int
    i_k: int
    factors: List[MerleFactor]

    @property
    def total_degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def to_json(self) -> Dict:
        return {
            "k": self.k,
            "i_k": self.i_k,
            "total_degree": self.total_degree,
            "factors": [f.to_json() for f in self.factors],
        }


@dataclass
class PolarProfile:
    """Everything predicted about the k-th polar of one input."""

    k: int
    degree: int
    regular: bool
    failing_bars: List[int]
    factors: List[EggersFactorPrediction]
    degree_row: Dict[str, int]
    resultant: Optional[Dict] = None
    merle: Optional[MerlePrediction] = None
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> Dict:
        return {
            "k": self.k,
            "degree": self.degree,
            "kuo_lu_regular": self.regular,
            "failing_bars": list(self.failing_bars),
            "factors": [f.to_json() for f in self.factors],
            "degree_row": dict(self.degree_row),
            "resultant": self.resultant,
            "merle": None if self.merle is None else self.merle.to_json(),
            "notes": list(self.notes),
        }

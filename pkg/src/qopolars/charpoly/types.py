# src/qopolars/charpoly/types.py
from dataclasses import dataclass, field
from typing import Dict, List

from qopolars.algebra.cyclotomic import CyclotomicNumber
from qopolars.algebra.unipoly import UniPoly
from qopolars.series.exponent import Exponent


@dataclass(frozen=True)
class CharacteristicData:
    """g(λ_B + z·x^{h(B)}) = leading·polynomial(z)·x^order + higher terms."""

    polynomial: UniPoly
    leading: CyclotomicNumber
    order: Exponent

    @property
    def full(self) -> UniPoly:
        return self.polynomial * self.leading

    def to_json(self) -> Dict:
        return {
            "polynomial": self.polynomial.to_json(),
            "leading": self.leading.to_json(),
            "order": self.order.to_json(),
            "text": str(self.polynomial),
        }


@dataclass(frozen=True)
class RegularitySplit:
    plus: UniPoly
    minus: UniPoly
    is_k_regular: bool

    def to_json(self) -> Dict:
        return {
            "plus": str(self.plus),
            "minus": str(self.minus),
            "k_regular": self.is_k_regular,
        }


@dataclass
class RegularityReport:
    k: int
    regular: bool
    failing: List[int] = field(default_factory=list)
    splits: Dict[int, RegularitySplit] = field(default_factory=dict)

    def to_json(self) -> Dict:
        return {
            "k": self.k,
            "regular": self.regular,
            "failing_bars": list(self.failing),
            "splits": {str(i): s.to_json() for i, s in sorted(self.splits.items())},
        }

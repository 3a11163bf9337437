# src/qopolars/series/exponent.py
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from qopolars.algebra.rational import Rational, RationalLike, denominator_lcm, rat, rat_str


@dataclass(frozen=True)
class Exponent:
    """
    Exponent vector in Q_{≥0}^d under the componentwise partial order.

    ``entries is None`` is the symbol ∞, which lies above every vector.
    ``<=`` is the partial order (like set inclusion), so ``not a <= b`` does
    not imply ``b <= a``; use ``comparable`` before relying on it.
    """

    entries: Optional[Tuple[Rational, ...]]
    dim: int

    @classmethod
    def of(cls, *values: RationalLike) -> "Exponent":
        return cls(tuple(rat(v) for v in values), len(values))

    @classmethod
    def from_seq(cls, values: Iterable[RationalLike]) -> "Exponent":
        return cls.of(*values)

    @classmethod
    def zero(cls, dim: int) -> "Exponent":
        return cls(tuple(rat(0) for _ in range(dim)), dim)

    @classmethod
    def infinity(cls, dim: int) -> "Exponent":
        return cls(None, dim)

    @property
    def is_infinite(self) -> bool:
        return self.entries is None

    def __iter__(self):
        if self.entries is None:
            raise ValueError("∞ has no entries")
        return iter(self.entries)

    def __getitem__(self, i: int) -> Rational:
        if self.entries is None:
            raise ValueError("∞ has no entries")
        return self.entries[i]

    def total(self) -> Rational:
        if self.entries is None:
            raise ValueError("∞ has no total order")
        return sum(self.entries, rat(0))

    def dot(self, weights: Sequence[RationalLike]) -> Rational:
        if self.entries is None:
            raise ValueError("∞ has no pairing")
        return sum((e * rat(w) for e, w in zip(self.entries, weights)), rat(0))

    # partial order

    def __le__(self, other: "Exponent") -> bool:
        if other.entries is None:
            return True
        if self.entries is None:
            return False
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def __ge__(self, other: "Exponent") -> bool:
        return other <= self

    def __lt__(self, other: "Exponent") -> bool:
        return self <= other and self != other

    def __gt__(self, other: "Exponent") -> bool:
        return other < self

    def comparable(self, other: "Exponent") -> bool:
        return self <= other or other <= self

    # arithmetic

    def __add__(self, other: "Exponent") -> "Exponent":
        if self.entries is None or other.entries is None:
            return Exponent.infinity(self.dim)
        return Exponent(tuple(a + b for a, b in zip(self.entries, other.entries)), self.dim)

    def __sub__(self, other: "Exponent") -> "Exponent":
        if self.entries is None or other.entries is None:
            raise ValueError("cannot subtract with ∞")
        return Exponent(tuple(a - b for a, b in zip(self.entries, other.entries)), self.dim)

    def scale(self, factor: RationalLike) -> "Exponent":
        if self.entries is None:
            return self
        f = rat(factor)
        return Exponent(tuple(a * f for a in self.entries), self.dim)

    def is_nonnegative(self) -> bool:
        return self.entries is not None and all(a >= 0 for a in self.entries)

    def denominator(self) -> int:
        return 1 if self.entries is None else denominator_lcm(self.entries)

    # rendering

    def sort_key(self) -> Tuple:
        if self.entries is None:
            return (1, rat(0), ())
        return (0, self.total(), self.entries)

    def to_json(self) -> Union[str, List[str]]:
        if self.entries is None:
            return "inf"
        return [rat_str(a) for a in self.entries]

    @classmethod
    def from_json(cls, data, dim: int) -> "Exponent":
        if data == "inf":
            return cls.infinity(dim)
        return cls.of(*data)

    def __str__(self):
        if self.entries is None:
            return "∞"
        if self.dim == 1:
            return rat_str(self.entries[0])
        return "(" + ",".join(rat_str(a) for a in self.entries) + ")"

    def __repr__(self):
        return f"Exponent{self}"


def emin(a: Exponent, b: Exponent) -> Exponent:
    """Smaller of two comparable exponents."""
    if a <= b:
        return a
    if b <= a:
        return b
    raise ValueError(f"{a} and {b} are incomparable")


def minimal_elements(exponents: Iterable[Exponent]) -> List[Exponent]:
    items = list(dict.fromkeys(exponents))
    return [e for e in items if not any(o < e for o in items)]

# src/qopolars/roots/types.py
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from qopolars.algebra.rational import lcm_all
from qopolars.series.fractional import FractionalSeries
from qopolars.series.ypoly import SeriesYPoly


@dataclass(frozen=True)
class Branch:
    """One root of an irreducible factor; the factor is the product over its orbit."""

    label: str
    root: FractionalSeries
    denominator: int

    @property
    def nvars(self) -> int:
        return self.root.nvars


@dataclass(frozen=True)
class GaloisAutomorphism:
    """x_i^{a/N} ↦ ζ_N^{shifts_i · a} x_i^{a/N}, fixing the constants."""

    conductor: int
    shifts: Tuple[int, ...]

    @classmethod
    def identity(cls, conductor: int, nvars: int) -> "GaloisAutomorphism":
        return cls(conductor, tuple([0] * nvars))

    def __call__(self, s):
        return s.act(self.conductor, self.shifts)

    def compose(self, other: "GaloisAutomorphism") -> "GaloisAutomorphism":
        n = lcm_all([self.conductor, other.conductor])
        a, b = n // self.conductor, n // other.conductor
        return GaloisAutomorphism(
            n, tuple((s * a + t * b) % n for s, t in zip(self.shifts, other.shifts))
        )


@dataclass
class RootSet:
    """The roots of f = ∏ f_i as the union of the branch orbits, indexed 0..n-1."""

    nvars: int
    branches: List[Branch]
    roots: List[FractionalSeries] = field(default_factory=list)
    owners: List[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def degree(self) -> int:
        return len(self.roots)

    @property
    def conductor(self) -> int:
        return lcm_all(b.denominator for b in self.branches) if self.branches else 1

    def indices_of(self, label: str) -> List[int]:
        return [i for i, owner in enumerate(self.owners) if owner == label]

    def branch(self, label: str) -> Branch:
        for b in self.branches:
            if b.label == label:
                return b
        raise KeyError(label)

    def root_name(self, i: int) -> str:
        owner = self.owners[i]
        position = self.indices_of(owner).index(i)
        return f"{owner}.{position}"

    def polynomial(self, labels: Sequence[str] = ()) -> SeriesYPoly:
        """∏ (y - α) over the roots of the chosen branches (all when empty)."""
        chosen = set(labels) if labels else {b.label for b in self.branches}
        return SeriesYPoly.from_roots(
            [r for r, owner in zip(self.roots, self.owners) if owner in chosen], self.nvars
        )

    def degrees(self) -> Dict[str, int]:
        return {b.label: len(self.indices_of(b.label)) for b in self.branches}

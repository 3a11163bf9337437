# src/qopolars/tree/types.py
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from qopolars.algebra.cyclotomic import CyclotomicNumber
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries


@dataclass
class PseudoBall:
    """A bar of the Kuo-Lu tree: roots with mutual contact >= height."""

    index: int
    height: Exponent
    center: FractionalSeries
    members: Tuple[int, ...]
    parent: Optional[int] = None
    children: List[int] = field(default_factory=list)
    support: Optional[CyclotomicNumber] = None

    @property
    def m(self) -> int:
        return len(self.members)

    @property
    def is_leaf(self) -> bool:
        return self.height.is_infinite

    def to_json(self) -> Dict:
        return {
            "index": self.index,
            "height": self.height.to_json(),
            "center": self.center.to_json(),
            "members": list(self.members),
            "parent": self.parent,
            "children": list(self.children),
            "support": None if self.support is None else self.support.to_json(),
        }


@dataclass(frozen=True)
class BarCounts:
    m: int
    n_k: int
    t_k: int

    def to_json(self) -> Dict:
        return {"m": self.m, "n_k": self.n_k, "t_k": self.t_k}


class KuoLuTree:
    """Bars indexed by position; the root bar holds every root."""

    def __init__(self, roots: Sequence[FractionalSeries], bars: List[PseudoBall], root: int):
        self.roots = list(roots)
        self.bars = bars
        self.root = root

    @property
    def nvars(self) -> int:
        return self.roots[0].nvars

    @property
    def degree(self) -> int:
        return len(self.roots)

    def bar(self, index: int) -> PseudoBall:
        return self.bars[index]

    def finite_bars(self) -> List[PseudoBall]:
        return [b for b in self.bars if not b.is_leaf]

    def leaves(self) -> List[PseudoBall]:
        return [b for b in self.bars if b.is_leaf]

    def leaf_of(self, root_index: int) -> PseudoBall:
        return next(b for b in self.leaves() if b.members == (root_index,))

    def path(self, root_index: int) -> List[PseudoBall]:
        """Bars containing the root, from the root bar down to its leaf."""
        chain = []
        bar: Optional[PseudoBall] = self.leaf_of(root_index)
        while bar is not None:
            chain.append(bar)
            bar = None if bar.parent is None else self.bars[bar.parent]
        return list(reversed(chain))

    def common_bars(self, i: int, j: int) -> List[PseudoBall]:
        others = {b.index for b in self.path(j)}
        return [b for b in self.path(i) if b.index in others]

    def lc(self, bar: PseudoBall, series: FractionalSeries) -> CyclotomicNumber:
        """lc_B: the coefficient of x^{h(B)}."""
        return series.coefficient(bar.height)

    def to_json(self) -> Dict:
        return {"root": self.root, "bars": [b.to_json() for b in self.bars]}


@dataclass
class EggersVertex:
    """A conjugacy class [B] of bars; leaf classes stand for the branches."""

    index: int
    bars: Tuple[int, ...]
    height: Exponent
    size: int
    degree: int
    branches: Tuple[str, ...]
    dashed: Dict[str, bool] = field(default_factory=dict)
    parent: Optional[int] = None
    children: List[int] = field(default_factory=list)
    label: str = ""

    @property
    def representative(self) -> int:
        return self.bars[0]

    @property
    def is_leaf(self) -> bool:
        return self.height.is_infinite

    @property
    def name(self) -> str:
        if self.is_leaf:
            return self.branches[0]
        return self.label or f"[B{self.index}]"

    def to_json(self) -> Dict:
        return {
            "index": self.index,
            "name": self.name,
            "bars": list(self.bars),
            "height": self.height.to_json(),
            "N": self.size,
            "n": self.degree,
            "branches": list(self.branches),
            "dashed": dict(sorted(self.dashed.items())),
            "parent": self.parent,
            "children": list(self.children),
        }


@dataclass
class EggersTree:
    vertices: List[EggersVertex]
    roots: List[int]

    def vertex(self, index: int) -> EggersVertex:
        return self.vertices[index]

    def finite_vertices(self) -> List[EggersVertex]:
        return [v for v in self.vertices if not v.is_leaf]

    def class_of(self, bar_index: int) -> EggersVertex:
        return next(v for v in self.vertices if bar_index in v.bars)

    def leaf_for(self, label: str) -> EggersVertex:
        return next(v for v in self.vertices if v.is_leaf and v.branches == (label,))

    def branch_path(self, label: str) -> List[EggersVertex]:
        chain = []
        vertex: Optional[EggersVertex] = self.leaf_for(label)
        while vertex is not None:
            chain.append(vertex)
            vertex = None if vertex.parent is None else self.vertices[vertex.parent]
        return list(reversed(chain))

    def edge_dashed(self, parent: EggersVertex, child: EggersVertex) -> bool:
        return all(parent.dashed.get(label, False) for label in child.branches)

    def to_json(self) -> Dict:
        return {"roots": list(self.roots), "vertices": [v.to_json() for v in self.vertices]}


@dataclass(frozen=True)
class CharacteristicExponents:
    """Heights h_1..h_s along an irreducible branch with n_i = n(B_i) and e_i = n_{i+1}⋯n_s."""

    heights: Tuple[Exponent, ...]
    n: Tuple[int, ...]
    e: Tuple[int, ...]
    bars: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.e[0]

    def to_json(self) -> Dict:
        return {
            "heights": [h.to_json() for h in self.heights],
            "n": list(self.n),
            "e": list(self.e),
        }

    def describe(self) -> str:
        return ", ".join(str(h) for h in self.heights) or "none"
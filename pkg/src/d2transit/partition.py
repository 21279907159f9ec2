"""Ordered vertex partitions and the (d2-)transitivity checks on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import PartitionError
from .graph import Graph, iter_bits, mask_of, square

TRANSITIVE = "transitive"
D2 = "d2"
MODES = (TRANSITIVE, D2)


@dataclass(frozen=True)
class OrderedPartition:
    """Parts ``V_1..V_k`` (in order) covering ``0..universe_size-1``."""

    parts: tuple
    universe_size: int

    def __init__(self, parts: Iterable[Iterable[int]], universe_size: int):
        frozen = tuple(frozenset(p) for p in parts)
        object.__setattr__(self, "parts", frozen)
        object.__setattr__(self, "universe_size", universe_size)
        self._validate()

    def _validate(self):
        if not self.parts:
            raise PartitionError("a partition needs at least one part")
        seen = set()
        for i, part in enumerate(self.parts, 1):
            if not part:
                raise PartitionError(f"part {i} is empty")
            for v in part:
                if not 0 <= v < self.universe_size:
                    raise PartitionError(f"vertex {v} in part {i} outside 0..{self.universe_size - 1}")
                if v in seen:
                    raise PartitionError(f"vertex {v} appears in more than one part")
                seen.add(v)
        if len(seen) != self.universe_size:
            missing = sorted(set(range(self.universe_size)) - seen)
            raise PartitionError(f"vertices {missing} are not covered")

    @property
    def k(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def as_lists(self) -> list:
        return [sorted(p) for p in self.parts]

    def part_of(self) -> list:
        """``level[v]`` = 1-based index of the part holding ``v``."""
        level = [0] * self.universe_size
        for i, part in enumerate(self.parts, 1):
            for v in part:
                level[v] = i
        return level

    def merge_first_two(self) -> "OrderedPartition":
        if self.k < 2:
            raise PartitionError("need at least two parts to merge")
        return OrderedPartition([self.parts[0] | self.parts[1], *self.parts[2:]], self.universe_size)

    @classmethod
    def from_levels(cls, levels, k: Optional[int] = None) -> "OrderedPartition":
        """Build from a vertex -> 1-based part index list."""
        k = max(levels) if k is None else k
        parts = [[] for _ in range(k)]
        for v, lv in enumerate(levels):
            parts[lv - 1].append(v)
        return cls(parts, len(levels))

    def to_text(self) -> str:
        return "".join(" ".join(map(str, p)) + "\n" for p in self.as_lists())

    @classmethod
    def from_text(cls, text: str, universe_size: int) -> "OrderedPartition":
        """Parse one part per line (space-separated ids); ``#`` starts a comment."""
        parts = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                parts.append([int(tok) for tok in line.split()])
            except ValueError:
                raise PartitionError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        return cls(parts, universe_size)


def _check_pair(G: Graph, A, B):
    a, b = mask_of(A), mask_of(B)
    if not a or not b:
        raise PartitionError("dominance is defined for non-empty sets only")
    if a & b:
        raise PartitionError("dominance is defined for disjoint sets only")
    if (a | b) >> G.n:
        raise PartitionError("set contains a vertex outside the graph")
    return a, b


def _undominated(adj, a_mask: int, b_mask: int) -> Optional[int]:
    for v in iter_bits(b_mask):
        if not adj[v] & a_mask:
            return v
    return None


def dominates(G: Graph, A, B) -> bool:
    """True iff every vertex of ``B`` has a neighbour in ``A``."""
    a, b = _check_pair(G, A, B)
    return _undominated(G.adj, a, b) is None


def d2_dominates(G: Graph, A, B) -> bool:
    """True iff every vertex of ``B`` is within distance 2 of ``A`` in ``G``."""
    a, b = _check_pair(G, A, B)
    return _undominated(square(G).adj, a, b) is None


def _require(G: Graph, pi: OrderedPartition):
    if pi.universe_size != G.n:
        raise PartitionError(f"partition covers {pi.universe_size} vertices, graph has {G.n}")


def _first_violation_in(host: Graph, pi: OrderedPartition):
    masks = [mask_of(p) for p in pi.parts]
    adj = host.adj
    for i in range(pi.k):
        for j in range(i + 1, pi.k):
            w = _undominated(adj, masks[i], masks[j])
            if w is not None:
                return (i + 1, j + 1, w)
    return None


def first_violation(G: Graph, pi: OrderedPartition, mode: str = TRANSITIVE):
    """Lexicographically first ``(i, j, w)`` (1-based parts) where ``V_i`` fails
    to (d2-)dominate the vertex ``w`` of ``V_j``; ``None`` if there is none."""
    _require(G, pi)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    host = square(G) if mode == D2 else G
    return _first_violation_in(host, pi)


def is_transitive(G: Graph, pi: OrderedPartition) -> bool:
    return first_violation(G, pi, TRANSITIVE) is None


def is_d2_transitive(G: Graph, pi: OrderedPartition) -> bool:
    return first_violation(G, pi, D2) is None

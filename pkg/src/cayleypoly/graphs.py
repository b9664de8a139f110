"""Labeled simple graphs on {1..n} with edges stored as a bitset.

The bit layout is shared package-wide: the unordered pairs (i, j), i < j,
are numbered in lexicographic order (1,2), (1,3), ..., (1,n), (2,3), ...,
(n-1,n), and bit k of the edge mask corresponds to pair number k.  Every
module that converts node pairs to bit indices goes through pair_index().
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

MAX_NODES = 12


def pair_order(n: int) -> list[tuple[int, int]]:
    """The canonical ordering of the C(n, 2) node pairs."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def pair_index(i: int, j: int, n: int) -> int:
    """Bit position of the pair {i, j} in the canonical order."""
    if i > j:
        i, j = j, i
    if not (1 <= i < j <= n):
        raise ValueError(f"bad pair ({i}, {j}) for n={n}")
    # Pairs with first element < i come before; then (i, i+1)..(i, j).
    return (i - 1) * n - i * (i - 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on nodes {1..node_count}; edges is a C(n,2)-bit mask."""

    node_count: int
    edges: int

    def __post_init__(self):
        n = self.node_count
        if not 1 <= n <= MAX_NODES:
            raise ValueError(f"node_count must be in 1..{MAX_NODES}")
        if self.edges < 0 or self.edges >> (n * (n - 1) // 2):
            raise ValueError("edge mask out of range")

    @classmethod
    def from_edges(cls, n: int, edge_pairs) -> "LabeledGraph":
        mask = 0
        for i, j in edge_pairs:
            mask |= 1 << pair_index(i, j, n)
        return cls(n, mask)

    @classmethod
    def from_text(cls, text: str) -> "LabeledGraph":
        """Parse the text form "n:i-j,i-j,..." (edge list may be empty)."""
        head, _, body = text.partition(":")
        n = int(head)
        pairs = []
        if body:
            for item in body.split(","):
                i, _, j = item.partition("-")
                pairs.append((int(i), int(j)))
        return cls.from_edges(n, pairs)

    def to_text(self) -> str:
        body = ",".join(f"{i}-{j}" for i, j in self.edge_list())
        return f"{self.node_count}:{body}"

    def edge_list(self) -> list[tuple[int, int]]:
        return [pair for k, pair in enumerate(pair_order(self.node_count)) if self.edges >> k & 1]

    def edge_count(self) -> int:
        return bin(self.edges).count("1")

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.edges >> pair_index(i, j, self.node_count) & 1)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(1, self.node_count + 1) if u != v and self.has_edge(v, u)]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.node_count + 1)}
        for i, j in self.edge_list():
            adj[i].append(j)
            adj[j].append(i)
        return adj


def component_count(g: LabeledGraph) -> int:
    """Number of connected components, isolated nodes included."""
    return len(set(_union_find_roots(g)))


def component_partition(g: LabeledGraph) -> list[frozenset[int]]:
    """Connected components as frozensets of nodes."""
    roots = _union_find_roots(g)
    buckets: dict[int, set[int]] = {}
    for v, root in zip(range(1, g.node_count + 1), roots):
        buckets.setdefault(root, set()).add(v)
    return [frozenset(s) for s in buckets.values()]


def _union_find_roots(g: LabeledGraph) -> list[int]:
    parent = list(range(g.node_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in g.edge_list():
        ri, rj = find(i - 1), find(j - 1)
        if ri != rj:
            parent[ri] = rj
    return [find(v) for v in range(g.node_count)]


def is_connected(g: LabeledGraph) -> bool:
    return component_count(g) == 1


def enumerate_graphs(
    n: int,
    connected_only: bool = False,
    mask_range: tuple[int, int] | None = None,
) -> Iterator[LabeledGraph]:
    """All labeled graphs on {1..n}, in increasing edge-mask order.

    The stream is a pure function of (n, cursor): restarting it always
    yields the same graphs, and disjoint `mask_range` slices (half-open)
    partition it, so parallel workers can shard the sweep.
    """
    if not 1 <= n <= MAX_NODES:
        raise ValueError(f"n must be in 1..{MAX_NODES}")
    total = 1 << (n * (n - 1) // 2)
    lo, hi = mask_range if mask_range is not None else (0, total)
    if not 0 <= lo <= hi <= total:
        raise ValueError("mask_range out of bounds")
    for mask in range(lo, hi):
        g = LabeledGraph(n, mask)
        if connected_only and not is_connected(g):
            continue
        yield g


def count_connected_graphs(n: int) -> int:
    """Number of connected labeled graphs on n nodes, by exhaustive sweep."""
    return sum(1 for _ in enumerate_graphs(n, connected_only=True))

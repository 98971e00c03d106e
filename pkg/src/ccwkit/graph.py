"""Immutable undirected simple graphs with labeled vertices.

Adjacency is stored as one Python-int bitmask per vertex, which gives O(1)
edge queries and fast set algebra (intersection, induced subgraphs,
components) at the target scales of a few thousand vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateLabel, MismatchedVertexSets, VertexOutOfRange


@dataclass(frozen=True)
class GridCell:
    part: int
    row: int  # 1-based
    col: int  # 1-based


@dataclass(frozen=True)
class Apex:
    part: int
    index: int  # 1-based


@dataclass(frozen=True)
class Plain:
    id: int


VertexLabel = GridCell | Apex | Plain


def label_to_json(label: VertexLabel) -> dict:
    if isinstance(label, GridCell):
        return {"kind": "grid", "part": label.part, "row": label.row, "col": label.col}
    if isinstance(label, Apex):
        return {"kind": "apex", "part": label.part, "apex_index": label.index}
    return {"kind": "plain", "id": label.id}


def label_from_json(obj: dict) -> VertexLabel:
    kind = obj["kind"]
    if kind == "grid":
        return GridCell(obj["part"], obj["row"], obj["col"])
    if kind == "apex":
        return Apex(obj["part"], obj["apex_index"])
    if kind == "plain":
        return Plain(obj["id"])
    raise ValueError(f"unknown label kind {kind!r}")


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph on vertices 0..n-1, immutable after construction."""

    __slots__ = ("n", "_adj", "labels")

    def __init__(self, n: int, adj: tuple[int, ...], labels: tuple[VertexLabel, ...]):
        # internal constructor; use from_edges / from_masks
        self.n = n
        self._adj = adj
        self.labels = labels

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[VertexLabel] | None = None,
    ) -> "Graph":
        if labels is None:
            labels = tuple(Plain(i) for i in range(n))
        else:
            labels = tuple(labels)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise DuplicateLabel("vertex labels must be pairwise distinct")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), labels)

    @classmethod
    def from_masks(
        cls, masks: Sequence[int], labels: Sequence[VertexLabel] | None = None
    ) -> "Graph":
        """Build from per-vertex adjacency masks (must already be symmetric, no loops)."""
        n = len(masks)
        if labels is None:
            labels = tuple(Plain(i) for i in range(n))
        else:
            labels = tuple(labels)
        if len(set(labels)) != n:
            raise DuplicateLabel("vertex labels must be pairwise distinct")
        for v, m in enumerate(masks):
            if m & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            if m >> n:
                raise VertexOutOfRange(f"adjacency of {v} exceeds n={n}")
        return cls(n, tuple(masks), labels)

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def adj_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj_mask(v))

    def degree(self, v: int) -> int:
        return self.adj_mask(v).bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographic order."""
        for u in range(self.n):
            yield from ((u, v) for v in bits(self._adj[u] >> (u + 1) << (u + 1)))

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} out of range for n={self.n}")

    def _check_subset(self, s: Iterable[int]) -> int:
        m = mask_of(s)
        if m >> self.n:
            raise VertexOutOfRange("vertex set not contained in V(g)")
        return m

    def edge_equal(self, other: "Graph") -> bool:
        return self.n == other.n and self._adj == other._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self._adj, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [[u, v] for u, v in self.edges()],
            "labels": [label_to_json(lbl) for lbl in self.labels],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        labels = tuple(label_from_json(l) for l in obj["labels"])
        return cls.from_edges(obj["n"], [(u, v) for u, v in obj["edges"]], labels)

    def to_dot(self) -> str:
        def name(lbl: VertexLabel) -> str:
            if isinstance(lbl, GridCell):
                return f"g{lbl.part}_{lbl.row}_{lbl.col}"
            if isinstance(lbl, Apex):
                return f"x{lbl.part}_{lbl.index}"
            return f"v{lbl.id}"

        lines = ["graph G {"]
        for v in range(self.n):
            lines.append(f'  {v} [label="{name(self.labels[v])}"];')
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- set-algebraic operations ------------------------------------------------


def intersect_graphs(factors: Sequence[Graph]) -> Graph:
    """Edge intersection of graphs on the same labeled vertex set."""
    if not factors:
        raise ValueError("need at least one factor")
    first = factors[0]
    for g in factors[1:]:
        if g.n != first.n or g.labels != first.labels:
            raise MismatchedVertexSets("factors must share vertex count and labels")
    masks = list(first._adj)
    for g in factors[1:]:
        for v in range(first.n):
            masks[v] &= g._adj[v]
    return Graph(first.n, tuple(masks), first.labels)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on s; returns (subgraph, mapping new index -> old index)."""
    smask = g._check_subset(s)
    old = list(bits(smask))
    pos = {v: i for i, v in enumerate(old)}
    masks = []
    for v in old:
        m = 0
        for u in bits(g.adj_mask(v) & smask):
            m |= 1 << pos[u]
        masks.append(m)
    sub = Graph(len(old), tuple(masks), tuple(g.labels[v] for v in old))
    return sub, old


def _component_mask(adj: Sequence[int], seed: int, allowed: int) -> int:
    comp = 1 << seed
    frontier = comp
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[set[int]]:
    """Maximal connected vertex sets, ordered by smallest member.

    If `within` is given, components are taken in the subgraph induced on it.
    """
    allowed = g.vertex_mask() if within is None else g._check_subset(within)
    comps = []
    rest = allowed
    while rest:
        seed = (rest & -rest).bit_length() - 1
        comp = _component_mask(g._adj, seed, allowed)
        comps.append(set(bits(comp)))
        rest &= ~comp
    return comps


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distance from source to every vertex; -1 for unreachable."""
    g._check_vertex(source)
    dist = [-1] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g._adj[v]
        nxt &= ~seen
        d += 1
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def diameter(g: Graph) -> int:
    """Largest finite BFS distance; requires a connected nonempty graph."""
    best = 0
    for v in range(g.n):
        dv = bfs_distances(g, v)
        if min(dv) < 0:
            raise ValueError("diameter undefined for disconnected graph")
        best = max(best, max(dv))
    return best


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    smask = g._check_subset(s)
    for v in bits(smask):
        if smask & ~g.adj_mask(v) & ~(1 << v):
            return False
    return True


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    smask = g._check_subset(s)
    return all(not (smask & g.adj_mask(v)) for v in bits(smask))

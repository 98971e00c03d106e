"""Ordered clique covers, their width, and exact small-instance solvers for
clique cover width and bandwidth."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidCover
from .graph import Graph, bits, is_clique, mask_of


@dataclass(frozen=True)
class OrderedCliqueCover:
    """Sequence of disjoint cliques covering all vertices; order-significant."""

    cliques: tuple[frozenset[int], ...]

    def block_of(self) -> dict[int, int]:
        return {v: i for i, blk in enumerate(self.cliques) for v in blk}

    def to_json(self) -> list[list[int]]:
        return [sorted(blk) for blk in self.cliques]

    @classmethod
    def from_json(cls, obj: Sequence[Sequence[int]]) -> "OrderedCliqueCover":
        return cls(tuple(frozenset(blk) for blk in obj))


@dataclass(frozen=True)
class WidthReport:
    width: int
    witness: tuple[int, int, int, int] | None  # (x, y, block_x, block_y)


@dataclass(frozen=True)
class SearchResult:
    """Result of an exact search; `exact` is False when the node budget ran out
    and `value` is only the best-known upper bound."""

    value: int
    exact: bool


def verify_cover(g: Graph, c: OrderedCliqueCover) -> tuple[bool, str]:
    """Check disjointness, coverage, and that every block is a clique."""
    seen = 0
    for blk in c.cliques:
        m = mask_of(blk)
        if m >> g.n:
            return False, "block contains a vertex outside V(g)"
        if m & seen:
            return False, "blocks are not pairwise disjoint"
        seen |= m
    if seen != g.vertex_mask():
        return False, "blocks do not cover V(g)"
    for i, blk in enumerate(c.cliques):
        if not is_clique(g, blk):
            return False, f"block {i} is not a clique"
    return True, ""


def cover_width(g: Graph, c: OrderedCliqueCover) -> WidthReport:
    """Max block-index gap over edges; witness is the lexicographically first
    attaining edge."""
    ok, why = verify_cover(g, c)
    if not ok:
        raise InvalidCover(why)
    block = c.block_of()
    width = 0
    witness = None
    for u, v in g.edges():
        gap = abs(block[u] - block[v])
        if gap > width:
            width = gap
            witness = (u, v, block[u], block[v])
    return WidthReport(width, witness)


# -- greedy upper bound ------------------------------------------------------


def ccw_upper_greedy(g: Graph) -> tuple[int, OrderedCliqueCover]:
    """Valid cover built from greedy maximal cliques over remaining vertices,
    blocks in discovery order; its width upper-bounds ccw(g)."""
    rest = g.vertex_mask()
    blocks = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        blk = 1 << v
        cand = g.adj_mask(v) & rest
        for u in bits(cand):
            if blk & ~g.adj_mask(u) & ~(1 << u) == 0:
                blk |= 1 << u
        blocks.append(frozenset(bits(blk)))
        rest &= ~blk
    cover = OrderedCliqueCover(tuple(blocks))
    return cover_width(g, cover).width, cover


# -- exact bandwidth ---------------------------------------------------------


def bandwidth_exact(g: Graph, budget: int = 2_000_000) -> tuple[SearchResult, list[int]]:
    """Minimum width over vertex orderings, by branch and bound over position
    assignment with partial-width pruning. Returns (result, ordering)."""
    n = g.n
    if n == 0:
        return SearchResult(0, True), []
    if g.num_edges() == 0:
        return SearchResult(0, True), list(range(n))
    best = n - 1
    best_order = list(range(n))
    nodes = 0
    exhausted = False
    pos = [-1] * n
    order: list[int] = []

    def rec() -> None:
        nonlocal best, best_order, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        i = len(order)
        if i == n:
            best = max(
                abs(pos[u] - pos[v]) for u, v in g.edges()
            )
            best_order = order[:]
            return
        for v in range(n):
            if pos[v] >= 0:
                continue
            # gap to already-placed neighbors
            ok = True
            for u in bits(g.adj_mask(v)):
                if pos[u] >= 0 and i - pos[u] >= best:
                    ok = False
                    break
            if not ok:
                continue
            # any placed vertex with an unplaced neighbor will span >= i+1 - pos
            placedmask = mask_of(order) | 1 << v
            for u in order:
                if g.adj_mask(u) & ~placedmask and i + 1 - pos[u] >= best:
                    ok = False
                    break
            if not ok:
                continue
            pos[v] = i
            order.append(v)
            rec()
            order.pop()
            pos[v] = -1

    rec()
    return SearchResult(best, not exhausted), best_order


# -- exact clique cover width ------------------------------------------------


def _quotient_masks(g: Graph, blocks: list[int]) -> list[int]:
    """Block adjacency: blocks i,j adjacent iff some edge crosses them."""
    t = len(blocks)
    nb = []
    for b in blocks:
        m = 0
        for v in bits(b):
            m |= g.adj_mask(v)
        nb.append(m)
    q = [0] * t
    for i in range(t):
        for j in range(i + 1, t):
            if nb[i] & blocks[j]:
                q[i] |= 1 << j
                q[j] |= 1 << i
    return q


def _quotient_bandwidth_below(qadj: list[int], cutoff: int) -> tuple[int, list[int]] | None:
    """Min bandwidth of the quotient graph if < cutoff, else None."""
    t = len(qadj)
    if all(m == 0 for m in qadj):
        return 0, list(range(t))
    if cutoff <= 1:
        return None
    best: list[int] | None = None
    best_w = cutoff
    pos = [-1] * t
    order: list[int] = []

    def rec() -> None:
        nonlocal best, best_w
        i = len(order)
        if i == t:
            w = 0
            for a in range(t):
                for b in bits(qadj[a] >> (a + 1) << (a + 1)):
                    w = max(w, abs(pos[a] - pos[b]))
            if w < best_w:
                best_w = w
                best = order[:]
            return
        for v in range(t):
            if pos[v] >= 0:
                continue
            ok = True
            for u in bits(qadj[v]):
                if pos[u] >= 0 and i - pos[u] >= best_w:
                    ok = False
                    break
            if ok:
                pos[v] = i
                order.append(v)
                rec()
                order.pop()
                pos[v] = -1

    rec()
    if best is None:
        return None
    return best_w, best


def ccw_exact(g: Graph, budget: int = 500_000) -> tuple[SearchResult, OrderedCliqueCover]:
    """Minimum width over all ordered clique covers, with an optimal cover.

    Enumerates unordered clique partitions (blocks canonicalized by smallest
    member), and for each takes the bandwidth of the block quotient graph —
    the best block ordering for a fixed partition is exactly a minimum-width
    layout of that quotient. Prunes partitions against the incumbent width.
    """
    n = g.n
    if n == 0:
        return SearchResult(0, True), OrderedCliqueCover(())
    inc_w, inc_cover = ccw_upper_greedy(g)
    if inc_w == 0:
        return SearchResult(0, True), inc_cover
    nodes = 0
    exhausted = False
    blocks: list[int] = []

    def leaf() -> None:
        nonlocal inc_w, inc_cover
        res = _quotient_bandwidth_below(_quotient_masks(g, blocks), inc_w)
        if res is not None:
            w, order = res  # order[i] = index of the block placed at position i
            inc_w = w
            inc_cover = OrderedCliqueCover(
                tuple(frozenset(bits(blocks[i])) for i in order)
            )

    def rec(v: int) -> None:
        nonlocal nodes, exhausted
        if exhausted or inc_w == 0:
            return
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        if v == n:
            leaf()
            return
        for i, b in enumerate(blocks):
            if b & ~g.adj_mask(v) == 0:  # v adjacent to the whole block
                blocks[i] = b | 1 << v
                rec(v + 1)
                blocks[i] = b
        blocks.append(1 << v)
        rec(v + 1)
        blocks.pop()

    rec(0)
    return SearchResult(inc_w, not exhausted), inc_cover

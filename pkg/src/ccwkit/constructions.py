"""Graph families and factorizations: planar grids, apex grids, the
chordal + low-width two-factor decompositions, clique sums with interleaved
covers, and the two unit-width example families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chordal import ChordalCertificate, is_chordal, verify_certificate
from .cliquecover import OrderedCliqueCover, cover_width, verify_cover
from .errors import (
    BadRemovedEdge,
    InvalidApexEdge,
    InvalidFactorization,
    InvalidSize,
    JunctionNotClique,
    UnequalApexSizes,
)
from .graph import Apex, Graph, GridCell, VertexLabel, intersect_graphs, is_clique


@dataclass(frozen=True)
class Factorization:
    """Edge-intersection factorization with a chordal first factor and ordered
    clique covers for the rest. lstar is the max verified cover width."""

    base: Graph
    factors: tuple[Graph, ...]
    chordal_cert: ChordalCertificate
    covers: tuple[OrderedCliqueCover, ...]  # one per factor index >= 1
    widths: tuple[int, ...]
    lstar: int

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "factors": [g.to_json() for g in self.factors],
            "chordal_cert": self.chordal_cert.to_json(),
            "covers": [c.to_json() for c in self.covers],
            "widths": list(self.widths),
            "lstar": self.lstar,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Factorization":
        return cls(
            base=Graph.from_json(obj["base"]),
            factors=tuple(Graph.from_json(g) for g in obj["factors"]),
            chordal_cert=ChordalCertificate.from_json(obj["chordal_cert"]),
            covers=tuple(OrderedCliqueCover.from_json(c) for c in obj["covers"]),
            widths=tuple(obj["widths"]),
            lstar=obj["lstar"],
        )


def verify_factorization(f: Factorization) -> list[tuple[str, bool, str]]:
    """Independent re-derivation of every factorization invariant.

    Returns (check name, passed, detail) triples; trusts nothing stored
    beyond the raw graphs, the certificate and the covers.
    """
    checks: list[tuple[str, bool, str]] = []

    same_vertices = all(
        g.n == f.base.n and g.labels == f.base.labels for g in f.factors
    )
    checks.append(("vertex_sets", same_vertices, "factors share the base vertex set"))
    if not same_vertices:
        return checks

    inter = intersect_graphs(list(f.factors))
    ok = inter.edge_equal(f.base)
    checks.append(("intersection", ok, "intersection of factors edge-equals base"))

    ok = f.chordal_cert.peo is not None and verify_certificate(
        f.factors[0], f.chordal_cert
    )
    checks.append(("chordal_certificate", ok, "factor 1 PEO verifies"))

    if len(f.covers) != len(f.factors) - 1 or len(f.widths) != len(f.covers):
        checks.append(("cover_count", False, "one cover/width per factor >= 2"))
        return checks
    for i, cover in enumerate(f.covers):
        factor = f.factors[i + 1]
        valid, why = verify_cover(factor, cover)
        checks.append((f"cover_validity[{i + 1}]", valid, why or "cover verifies"))
        if valid:
            w = cover_width(factor, cover).width
            checks.append(
                (
                    f"cover_width[{i + 1}]",
                    w == f.widths[i],
                    f"recomputed width {w}, declared {f.widths[i]}",
                )
            )
    if f.widths:
        checks.append(
            ("lstar", f.lstar == max(f.widths), f"lstar must equal max width")
        )
    return checks


def check_factorization(f: Factorization) -> None:
    for name, ok, detail in verify_factorization(f):
        if not ok:
            raise InvalidFactorization(f"{name}: {detail}")


def _make_factorization(
    base: Graph, factors: Sequence[Graph], covers: Sequence[OrderedCliqueCover]
) -> Factorization:
    """Assemble and re-verify; the certificate is recomputed, never trusted."""
    chordal, cert = is_chordal(factors[0])
    if not chordal:
        raise InvalidFactorization("factor 1 is not chordal")
    widths = tuple(
        cover_width(factors[i + 1], covers[i]).width for i in range(len(covers))
    )
    f = Factorization(
        base=base,
        factors=tuple(factors),
        chordal_cert=cert,
        covers=tuple(covers),
        widths=widths,
        lstar=max(widths) if widths else 0,
    )
    check_factorization(f)
    return f


# -- grid and apex grid ------------------------------------------------------


def _grid_labels(n: int, part: int = 0) -> list[VertexLabel]:
    return [GridCell(part, r, c) for r in range(1, n + 1) for c in range(1, n + 1)]


def grid(n: int) -> Graph:
    """n x n planar grid; cells row-major, edges between orthogonal neighbors."""
    if n < 1:
        raise InvalidSize("grid requires n >= 1")
    edges = []
    for r in range(n):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < n:
                edges.append((v, v + n))
    return Graph.from_edges(n * n, edges, _grid_labels(n))


def _check_apex_edges(k: int, apex_edges: set[tuple[int, int]]) -> set[tuple[int, int]]:
    norm = set()
    for a, b in apex_edges:
        if a == b or not (1 <= a <= k and 1 <= b <= k):
            raise InvalidApexEdge(f"apex edge ({a},{b}) invalid for k={k}")
        norm.add((min(a, b), max(a, b)))
    return norm


def complete_apex_edges(k: int) -> set[tuple[int, int]]:
    return {(a, b) for a in range(1, k + 1) for b in range(a + 1, k + 1)}


def apex_grid(
    k: int, n: int, apex_edges: set[tuple[int, int]] | None = None, part: int = 0
) -> Graph:
    """n x n grid plus k apex vertices joined to every grid cell, with the
    given edge set among the apexes."""
    if n < 1 or k < 0:
        raise InvalidSize("apex_grid requires n >= 1 and k >= 0")
    apex_edges = _check_apex_edges(k, apex_edges or set())
    base = grid(n)
    n2 = n * n
    total = n2 + k
    grid_mask = (1 << n2) - 1
    masks = [base.adj_mask(v) for v in range(n2)]
    apex_all = ((1 << total) - 1) ^ grid_mask
    for v in range(n2):
        masks[v] |= apex_all
    for i in range(k):
        m = grid_mask
        for a, b in apex_edges:
            if a == i + 1:
                m |= 1 << (n2 + b - 1)
            if b == i + 1:
                m |= 1 << (n2 + a - 1)
        masks.append(m)
    labels = _grid_labels(n, part) + [Apex(part, i + 1) for i in range(k)]
    return Graph.from_masks(masks, labels)


# -- the two-factor apex-grid factorization ----------------------------------


def _apex_grid_factors(
    k: int, n: int, apex_edges: set[tuple[int, int]], part: int = 0
) -> tuple[Graph, Graph, OrderedCliqueCover]:
    """Factor graphs and the ordered cover for an apex grid.

    Factor 1: grid cells adjacent iff their rows differ by at most one (every
    two consecutive rows become one clique), apex set complete and joined to
    all cells. Factor 2: the grid with each column completed to a clique, apexes
    joined to all cells, apex-apex edges exactly those of the base; its cover is
    the columns in order with the apex singletons spliced in the middle.
    """
    base = apex_grid(k, n, apex_edges, part)
    n2 = n * n
    total = n2 + k
    grid_mask = (1 << n2) - 1
    apex_all = ((1 << total) - 1) ^ grid_mask
    row_mask = [((1 << n) - 1) << (r * n) for r in range(n)]

    masks1 = []
    for r in range(n):
        band = row_mask[r]
        if r > 0:
            band |= row_mask[r - 1]
        if r + 1 < n:
            band |= row_mask[r + 1]
        for c in range(n):
            masks1.append((band | apex_all) & ~(1 << (r * n + c)))
    for i in range(k):
        masks1.append(((1 << total) - 1) & ~(1 << (n2 + i)))
    g1 = Graph.from_masks(masks1, base.labels)

    col_mask = [sum(1 << (r * n + c) for r in range(n)) for c in range(n)]
    masks2 = []
    for r in range(n):
        for c in range(n):
            v = r * n + c
            m = col_mask[c] & ~(1 << v)
            if c > 0:
                m |= 1 << (v - 1)
            if c + 1 < n:
                m |= 1 << (v + 1)
            masks2.append(m | apex_all)
    for i in range(k):
        masks2.append(base.adj_mask(n2 + i))
    g2 = Graph.from_masks(masks2, base.labels)

    mid = (n + 1) // 2
    columns = [frozenset(r * n + c for r in range(n)) for c in range(n)]
    apex_blocks = [frozenset({n2 + i}) for i in range(k)]
    cover = OrderedCliqueCover(
        tuple(columns[:mid]) + tuple(apex_blocks) + tuple(columns[mid:])
    )
    return g1, g2, cover


def factorize_apex_grid(
    k: int, n: int, apex_edges: set[tuple[int, int]] | None = None, part: int = 0
) -> Factorization:
    """Two-factor decomposition of an apex grid: chordal factor 1 plus a
    column-clique factor whose cover width is at most ceil(n/2) + k."""
    if n < 2:
        raise InvalidSize("factorize_apex_grid requires n >= 2")
    apex_edges = _check_apex_edges(k, apex_edges or set())
    base = apex_grid(k, n, apex_edges, part)
    g1, g2, cover = _apex_grid_factors(k, n, apex_edges, part)
    f = _make_factorization(base, [g1, g2], [cover])
    bound = (n + 1) // 2 + k
    if f.widths[0] > bound:
        raise InvalidFactorization(
            f"cover width {f.widths[0]} exceeds bound {bound}"
        )
    return f


# -- clique sums -------------------------------------------------------------


def clique_sum(
    parts: Sequence[Graph],
    junctions: Sequence[Sequence[tuple[int, int]]],
    removed_edges: Sequence[Sequence[tuple[int, int]]] | None = None,
) -> Graph:
    """Iterated clique sum. junctions[i] identifies vertices of parts[i+1]
    (second coordinate) with already-placed vertices given by their global index
    in the running sum (first coordinate). Identified vertices must induce a
    clique on both sides. removed_edges[i], in global indices, is deleted from
    the junction clique after that sum."""
    if not parts:
        raise ValueError("need at least one part")
    if len(junctions) != len(parts) - 1:
        raise ValueError("need one junction per consecutive pair")
    if removed_edges is None:
        removed_edges = [[] for _ in junctions]

    masks = list(parts[0]._adj)
    labels = list(parts[0].labels)

    for step, part in enumerate(parts[1:]):
        ident = dict()  # part-local vertex -> global index
        for g_idx, p_idx in junctions[step]:
            if not 0 <= g_idx < len(masks):
                raise JunctionNotClique(f"global vertex {g_idx} does not exist")
            part._check_vertex(p_idx)
            ident[p_idx] = g_idx
        glob_set = set(ident.values())
        if len(glob_set) != len(ident):
            raise JunctionNotClique("identification is not injective")
        for a in glob_set:
            for b in glob_set:
                if a < b and not masks[a] >> b & 1:
                    raise JunctionNotClique("identified set is not a clique in the sum")
        if not is_clique(part, ident.keys()):
            raise JunctionNotClique("identified set is not a clique in the new part")
        # place the non-identified vertices of the part
        for v in range(part.n):
            if v not in ident:
                ident[v] = len(masks)
                masks.append(0)
                labels.append(part.labels[v])
        for u, v in part.edges():
            gu, gv = ident[u], ident[v]
            masks[gu] |= 1 << gv
            masks[gv] |= 1 << gu
        for u, v in removed_edges[step]:
            if u not in glob_set or v not in glob_set or not masks[u] >> v & 1:
                raise BadRemovedEdge(f"({u},{v}) is not an edge of the junction clique")
            masks[u] &= ~(1 << v)
            masks[v] &= ~(1 << u)
    return Graph.from_masks(masks, labels)


@dataclass(frozen=True)
class CliqueSumSpec:
    """Clique sum of apex grids joined at their (complete) apex sets.

    parts: (k_i, n_i) per summand; all k_i must be equal. removed_edges:
    apex-index pairs deleted from the shared apex clique of the base graph.
    """

    parts: tuple[tuple[int, int], ...]
    removed_edges: tuple[tuple[int, int], ...] = ()


def factorize_clique_sum(spec: CliqueSumSpec) -> Factorization:
    """Chordal + low-width factorization of a clique sum of apex grids, the
    merged cover interleaving each part's column blocks into the running cover.
    Merged width is at most sum(n_i + k_i)."""
    if not spec.parts:
        raise InvalidSize("clique sum needs at least one part")
    ks = {k for k, _ in spec.parts}
    if len(ks) != 1:
        raise UnequalApexSizes(f"all parts must share one apex size, got {sorted(ks)}")
    k = ks.pop()
    if k < 1:
        raise InvalidSize("clique sum at apex sets requires k >= 1")
    removed = _check_apex_edges(k, set(spec.removed_edges))

    full = complete_apex_edges(k)
    bases, f1s, f2s, covers = [], [], [], []
    for part_idx, (_, n) in enumerate(spec.parts):
        if n < 2:
            raise InvalidSize("each part requires n >= 2")
        bases.append(apex_grid(k, n, full, part_idx))
        g1, g2, cover = _apex_grid_factors(k, n, full, part_idx)
        f1s.append(g1)
        f2s.append(g2)
        covers.append(cover)

    # apex j of every later part is identified with apex j of part 0
    def apex_global(part0_n: int, j: int) -> int:
        return part0_n * part0_n + j

    n0 = spec.parts[0][1]
    junctions = []
    offset_parts = []
    for i, (_, n) in enumerate(spec.parts[1:], start=1):
        junctions.append(
            [(apex_global(n0, j), n * n + j) for j in range(k)]
        )

    base = clique_sum(bases, junctions)
    g1 = clique_sum(f1s, junctions)
    g2 = clique_sum(f2s, junctions)

    # removed apex edges come off the base and factor 2; factor 1 keeps X complete
    if removed:
        apex_ids = [apex_global(n0, j) for j in range(k)]
        rm = []
        for a, b in removed:
            rm.append((apex_ids[a - 1], apex_ids[b - 1]))
        base = _remove_edges(base, rm)
        g2 = _remove_edges(g2, rm)

    merged = _interleave_covers(covers, spec.parts, k)
    f = _make_factorization(base, [g1, g2], [merged])
    bound = sum(n + k for _, n in spec.parts)
    if f.widths[0] > bound:
        raise InvalidFactorization(f"merged width {f.widths[0]} exceeds bound {bound}")
    return f


def _remove_edges(g: Graph, edges: Sequence[tuple[int, int]]) -> Graph:
    masks = list(g._adj)
    for u, v in edges:
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
    return Graph.from_masks(masks, g.labels)


def _interleave_covers(
    covers: Sequence[OrderedCliqueCover],
    parts: Sequence[tuple[int, int]],
    k: int,
) -> OrderedCliqueCover:
    """Merge per-part covers: later parts' column blocks (apex blocks dropped,
    they are already placed by part 0) are interleaved one-for-one after the
    running cover's blocks, in their own order; indices are shifted to the
    clique-sum's global numbering."""
    n0 = parts[0][1]
    merged = list(covers[0].cliques)  # part 0 indices are already global
    offset = n0 * n0 + k
    for i, (_, n) in enumerate(parts[1:], start=1):
        shift = {}
        local = 0
        for v in range(n * n + k):
            if v < n * n:
                shift[v] = offset + local
                local += 1
            else:
                shift[v] = n0 * n0 + (v - n * n)  # apex -> part 0 apex
        offset += n * n
        cols = [
            frozenset(shift[v] for v in blk)
            for blk in covers[i].cliques
            if not any(v >= n * n for v in blk)
        ]
        out: list[frozenset[int]] = []
        for j in range(max(len(merged), len(cols))):
            if j < len(merged):
                out.append(merged[j])
            if j < len(cols):
                out.append(cols[j])
        merged = out
    return OrderedCliqueCover(tuple(merged))


# -- the two unit-width example families -------------------------------------


def example3_i(n: int, k: int) -> Factorization:
    """Chain of k n-cliques with consecutive blocks joined on a fixed
    ceil(n/2)-subset; factor 2 is the graph itself with the width-1 block
    cover, factor 1 completes consecutive blocks into an interval-like graph."""
    if n < 1 or k < 1:
        raise InvalidSize("example3_i requires n, k >= 1")
    h = (n + 1) // 2
    total = n * k

    def block(i: int) -> range:
        return range(i * n, (i + 1) * n)

    edges = []
    for i in range(k):
        vs = list(block(i))
        edges.extend((vs[a], vs[b]) for a in range(n) for b in range(a + 1, n))
        if i + 1 < k:
            nxt = list(block(i + 1))
            edges.extend((vs[a], nxt[b]) for a in range(h) for b in range(h))
    base = Graph.from_edges(total, edges)

    masks1 = list(base._adj)
    for i in range(k - 1):
        for u in block(i):
            for v in block(i + 1):
                masks1[u] |= 1 << v
                masks1[v] |= 1 << u
    g1 = Graph.from_masks(masks1, base.labels)
    g2 = base
    cover = OrderedCliqueCover(tuple(frozenset(block(i)) for i in range(k)))
    return _make_factorization(base, [g1, g2], [cover])


def example3_ii(n: int, k: int) -> Factorization:
    """Grid blow-up: every cell becomes a k-clique, grid edges become complete
    joins; factors are the consecutive-row-band graph and the column-clique
    graph over the blown-up vertices, the latter with a width-1 column cover."""
    if n < 1 or k < 1:
        raise InvalidSize("example3_ii requires n, k >= 1")
    total = n * n * k

    def cell(r: int, c: int) -> int:  # 0-based cell -> first vertex of its clique
        return (r * n + c) * k

    cell_mask = [(((1 << k) - 1) << cell(r, c)) for r in range(n) for c in range(n)]
    row_mask = [0] * n
    col_mask = [0] * n
    for r in range(n):
        for c in range(n):
            row_mask[r] |= cell_mask[r * n + c]
            col_mask[c] |= cell_mask[r * n + c]

    base_masks = [0] * total
    g1_masks = [0] * total
    g2_masks = [0] * total
    for r in range(n):
        for c in range(n):
            m_base = cell_mask[r * n + c]
            if r > 0:
                m_base |= cell_mask[(r - 1) * n + c]
            if r + 1 < n:
                m_base |= cell_mask[(r + 1) * n + c]
            if c > 0:
                m_base |= cell_mask[r * n + c - 1]
            if c + 1 < n:
                m_base |= cell_mask[r * n + c + 1]
            band = row_mask[r]
            if r > 0:
                band |= row_mask[r - 1]
            if r + 1 < n:
                band |= row_mask[r + 1]
            m2 = col_mask[c] | m_base
            for v in range(cell(r, c), cell(r, c) + k):
                base_masks[v] = m_base & ~(1 << v)
                g1_masks[v] = band & ~(1 << v)
                g2_masks[v] = m2 & ~(1 << v)

    base = Graph.from_masks(base_masks)
    g1 = Graph.from_masks(g1_masks, base.labels)
    g2 = Graph.from_masks(g2_masks, base.labels)
    cover = OrderedCliqueCover(
        tuple(
            frozenset(v for v in range(total) if col_mask[c] >> v & 1)
            for c in range(n)
        )
    )
    return _make_factorization(base, [g1, g2], [cover])

"""Balanced separators with clique-cover certificates, and the lower-bound
audit pipeline over apex-grid factorizations."""

from __future__ import annotations

from dataclasses import dataclass

from .chordal import balanced_clique_separator, maximal_cliques_chordal
from .cliquecover import OrderedCliqueCover
from .constructions import Factorization, check_factorization
from .errors import InvalidFactorization, NoApex, NotCliqueInFactorOne
from .graph import Apex, Graph, GridCell, connected_components, is_clique, is_independent
from .measure import Measure


@dataclass(frozen=True)
class SeparatorResult:
    separator: frozenset[int]
    separator_cliques: tuple[frozenset[int], ...]
    side_a: frozenset[int]
    side_b: frozenset[int]
    mu_a: float
    mu_b: float
    lstar: int
    bound_value: float

    def to_json(self) -> dict:
        return {
            "separator": sorted(self.separator),
            "separator_cliques": [sorted(c) for c in self.separator_cliques],
            "side_a": sorted(self.side_a),
            "side_b": sorted(self.side_b),
            "mu_a": self.mu_a,
            "mu_b": self.mu_b,
            "lstar": self.lstar,
            "bound_value": self.bound_value,
        }


@dataclass(frozen=True)
class AuditReport:
    grid_clique_size: int
    indep_size: int
    restricted_cover_sizes: tuple[int, ...]
    product_cells: int

    def to_json(self) -> dict:
        return {
            "grid_clique_size": self.grid_clique_size,
            "indep_size": self.indep_size,
            "restricted_cover_sizes": list(self.restricted_cover_sizes),
            "product_cells": self.product_cells,
        }


def product_cell_cover(
    base: Graph, s: set[int], covers: list[OrderedCliqueCover]
) -> list[frozenset[int]]:
    """Partition a factor-1 clique into base-graph cliques by grouping on the
    tuple of cover block indices: within one block of every remaining factor
    and inside s, a group is a clique in every factor, hence in the base."""
    block_maps = [c.block_of() for c in covers]
    groups: dict[tuple[int, ...], set[int]] = {}
    for v in s:
        key = tuple(bm[v] for bm in block_maps)
        groups.setdefault(key, set()).add(v)
    out = []
    for key in sorted(groups):
        cell = groups[key]
        if not is_clique(base, cell):
            raise NotCliqueInFactorOne(
                "product cell is not a base clique; s is not a clique in factor 1"
            )
        out.append(frozenset(cell))
    return out


def separate(f: Factorization, mu: Measure | None = None) -> SeparatorResult:
    """Balanced separator of the base graph from a clique-tree bag of the
    chordal factor, with a clique cover of the separator certified in the base."""
    check_factorization(f)
    base = f.base
    if mu is None:
        mu = Measure.uniform(base.n)
    total = mu.total(base.n)

    sep = balanced_clique_separator(f.factors[0], mu)
    cliques = product_cell_cover(base, sep, list(f.covers))

    rest = set(range(base.n)) - sep
    comps = connected_components(base, within=rest)
    # each component is within 2mu/3 (it refines a factor-1 component);
    # largest-first into the lighter side keeps both sides within 2mu/3
    sides: list[set[int]] = [set(), set()]
    weights = [0.0, 0.0]
    for comp in sorted(comps, key=mu.of, reverse=True):
        i = 0 if weights[0] <= weights[1] else 1
        sides[i] |= comp
        weights[i] += mu.of(comp)

    d = len(f.factors)
    lstar = f.lstar
    bound = (2**d) * (max(lstar, 1) ** ((d - 1) / d)) * (total ** ((d - 1) / d))
    result = SeparatorResult(
        separator=frozenset(sep),
        separator_cliques=tuple(cliques),
        side_a=frozenset(sides[0]),
        side_b=frozenset(sides[1]),
        mu_a=weights[0],
        mu_b=weights[1],
        lstar=lstar,
        bound_value=bound,
    )
    _assert_separator(base, mu, result)
    return result


def _assert_separator(base: Graph, mu: Measure, r: SeparatorResult) -> None:
    total = mu.total(base.n)
    if r.side_a | r.side_b | r.separator != set(range(base.n)):
        raise InvalidFactorization("separator result does not partition V")
    if r.side_a & r.side_b or r.side_a & r.separator or r.side_b & r.separator:
        raise InvalidFactorization("separator result blocks overlap")
    for u, v in base.edges():
        if (u in r.side_a and v in r.side_b) or (u in r.side_b and v in r.side_a):
            raise InvalidFactorization(f"edge ({u},{v}) crosses the separator")
    if r.mu_a > 2 * total / 3 + 1e-9 or r.mu_b > 2 * total / 3 + 1e-9:
        raise InvalidFactorization("side measure exceeds 2mu(G)/3")
    covered: set[int] = set()
    for c in r.separator_cliques:
        if not is_clique(base, c):
            raise InvalidFactorization("separator clique fails in base graph")
        if covered & c:
            raise InvalidFactorization("separator cliques overlap")
        covered |= c
    if covered != set(r.separator):
        raise InvalidFactorization("separator cliques do not cover the separator")


def audit_lower_bound(f: Factorization, x: int = 1) -> AuditReport:
    """Walk the lower-bound argument on a factorized apex grid: the largest
    grid-restricted clique of the chordal factor, an independent half inside
    it, the covers restricted to that clique plus apex x, and the number of
    product cells needed to cover the independent set."""
    check_factorization(f)
    base = f.base
    grid_vs = [v for v, lbl in enumerate(base.labels) if isinstance(lbl, GridCell)]
    apex_vs = {
        lbl.index: v for v, lbl in enumerate(base.labels) if isinstance(lbl, Apex)
    }
    if x not in apex_vs:
        raise NoApex(f"no apex with index {x}")
    apex = apex_vs[x]

    from .graph import induced_subgraph
    from .chordal import is_chordal

    sub, back = induced_subgraph(f.factors[0], grid_vs)
    chordal, cert = is_chordal(sub)
    if not chordal:
        raise InvalidFactorization("factor 1 restricted to the grid is not chordal")
    cliques = maximal_cliques_chordal(sub, cert.peo)
    s_local = max(cliques, key=len)
    s = {back[v] for v in s_local}

    # independent half of s via the grid bipartition
    colors: dict[int, int] = {}
    for v in s:
        lbl = base.labels[v]
        colors[v] = (lbl.row + lbl.col) % 2
    classes = [
        {v for v in s if colors[v] == 0},
        {v for v in s if colors[v] == 1},
    ]
    s_prime = max(classes, key=len)
    if not is_independent(base, s_prime):
        raise InvalidFactorization("bipartition class is not independent in the base")

    s_hat = s | {apex}
    restricted_sizes = []
    for cover in f.covers:
        block = cover.block_of()
        restricted_sizes.append(len({block[v] for v in s_hat}))

    cells = product_cell_cover(base, s_prime, list(f.covers))
    report = AuditReport(
        grid_clique_size=len(s),
        indep_size=len(s_prime),
        restricted_cover_sizes=tuple(restricted_sizes),
        product_cells=len(cells),
    )
    prod = 1
    for sz in report.restricted_cover_sizes:
        prod *= sz
    if report.indep_size < (report.grid_clique_size + 1) // 2:
        raise InvalidFactorization("independent set smaller than half the clique")
    if report.product_cells > prod:
        raise InvalidFactorization("product cells exceed the block-count product")
    return report

"""Exact bounded colouring of agreement graphs, goodness, and full extension.

A vertical colouring extends to a full colouring without alternating
rectangles exactly when every column pair's agreement graph admits a proper
colouring with at most r classes.  The extension colours the horizontal edge
of row a between columns i and j by the index of a's class in that pair's
witness: two rows sharing a horizontal colour lie in one class, hence never
agree vertically, so no rectangle can close.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .core import (
    AgreementGraph,
    FullGridColoring,
    RowPartition,
    VerticalColoring,
    agreement_graph,
    iter_bits,
)
from .errors import NotGoodError

__all__ = [
    "ProperColoring",
    "GoodnessReport",
    "chromatic_at_most",
    "cached_chromatic_at_most",
    "is_good",
    "extend_to_full",
]


@dataclass(frozen=True)
class ProperColoring:
    """Witness that a graph is r-colourable: disjoint independent classes covering [m]."""

    m: int
    classes: RowPartition

    def __post_init__(self) -> None:
        if self.classes.m != self.m:
            raise ValueError("partition does not cover the vertex set")

    @cached_property
    def _row_class(self) -> dict[int, int]:
        return {
            row: idx
            for idx, cls_ in enumerate(self.classes.classes, start=1)
            for row in cls_
        }

    def class_of(self, row: int) -> int:
        """1-based index of the class containing `row`."""
        return self._row_class[row]

    def class_count(self) -> int:
        return len(self.classes.classes)


@dataclass(frozen=True)
class GoodnessReport:
    """Outcome of checking every agreement graph of a vertical colouring."""

    good: bool
    failing_pair: tuple[int, int] | None
    witnesses: dict[tuple[int, int], ProperColoring] = field(default_factory=dict)


def _greedy_clique(adj: list[int]) -> list[int]:
    """Grow a clique greedily by degree (ties to the lowest vertex index)."""
    m = len(adj)
    if m == 0:
        return []
    deg = [a.bit_count() for a in adj]
    v0 = max(range(m), key=lambda v: (deg[v], -v))
    clique = [v0]
    common = adj[v0]
    while common:
        u = max(iter_bits(common), key=lambda v: (deg[v], -v))
        clique.append(u)
        common &= adj[u]
    return clique


def chromatic_at_most(graph: AgreementGraph, r: int) -> ProperColoring | None:
    """Find a proper colouring of `graph` using at most r classes, or None.

    Backtracking in DSATUR order (most saturated uncoloured vertex first,
    ties to the lowest index), seeded with a greedily grown clique that is
    pre-assigned distinct colours.  A vertex may only open colour t+1 once
    colours 1..t are in use, which kills colour-permutation symmetry and
    makes the witness deterministic for a fixed input.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    m = graph.m
    adj = graph.vertex_adjacency()

    clique = _greedy_clique(adj)
    if len(clique) > r:
        return None

    colors = [0] * m
    nbr_colors = [0] * m  # colours already present among each vertex's neighbours
    for idx, v in enumerate(clique):
        colors[v] = idx + 1
        bit = 1 << idx
        for u in iter_bits(adj[v]):
            nbr_colors[u] |= bit

    def solve(colored: int, max_used: int) -> bool:
        if colored == m:
            return True
        v = -1
        best_sat = -1
        for u in range(m):
            if colors[u] == 0:
                sat = nbr_colors[u].bit_count()
                if sat > best_sat:
                    v, best_sat = u, sat
        forbidden = nbr_colors[v]
        for c in range(1, min(max_used + 1, r) + 1):
            bit = 1 << (c - 1)
            if forbidden & bit:
                continue
            colors[v] = c
            changed = []
            for u in iter_bits(adj[v]):
                if colors[u] == 0 and not nbr_colors[u] & bit:
                    nbr_colors[u] |= bit
                    changed.append(u)
            if solve(colored + 1, max(max_used, c)):
                return True
            colors[v] = 0
            for u in changed:
                nbr_colors[u] ^= bit
        return False

    if not solve(len(clique), len(clique)):
        return None
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v + 1)
    return ProperColoring(m, RowPartition.from_classes(groups.values()))


_witness_cache: dict[tuple[int, int, int], ProperColoring | None] = {}


def cached_chromatic_at_most(graph: AgreementGraph, r: int) -> ProperColoring | None:
    """`chromatic_at_most` behind a process-wide memo keyed on (m, r, mask).

    Searches meet the same agreement graphs over and over; every writer
    computes the identical value, so concurrent use needs no locking.
    """
    key = (graph.m, r, graph.mask)
    try:
        return _witness_cache[key]
    except KeyError:
        pass
    witness = chromatic_at_most(graph, r)
    _witness_cache[key] = witness
    return witness


def is_good(chi: VerticalColoring) -> GoodnessReport:
    """Check that every column pair's agreement graph is r-colourable.

    Pairs are scanned in lexicographic order and the first failure is
    reported; on success the report holds one witness per pair.
    """
    witnesses: dict[tuple[int, int], ProperColoring] = {}
    for i, j in combinations(range(1, chi.n + 1), 2):
        witness = cached_chromatic_at_most(agreement_graph(chi, i, j), chi.r)
        if witness is None:
            return GoodnessReport(False, (i, j), witnesses)
        witnesses[(i, j)] = witness
    return GoodnessReport(True, None, witnesses)


def extend_to_full(chi: VerticalColoring) -> FullGridColoring:
    """Colour all horizontal edges so that no rectangle alternates.

    Raises NotGoodError (carrying the failing column pair) when some
    agreement graph is not r-colourable; otherwise the result has zero
    alternating rectangles by construction.
    """
    report = is_good(chi)
    if not report.good:
        assert report.failing_pair is not None
        raise NotGoodError(report.failing_pair)
    horizontal: list[int] = []
    for i, j in combinations(range(1, chi.n + 1), 2):
        witness = report.witnesses[(i, j)]
        horizontal.extend(witness.class_of(a) for a in range(1, chi.m + 1))
    return FullGridColoring(chi, tuple(horizontal))

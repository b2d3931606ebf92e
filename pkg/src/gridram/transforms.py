"""Colour switching, stabilisation, and partition refinement.

Switching two colours at one row pair (simultaneously in every column)
generates an equivalence on vertical colourings that preserves goodness,
because it preserves every agreement graph.  Stabilisation uses switches to
make initial columns constant: column 1 can always be fixed to c_1, and a
k-stabilised colouring can be pushed to a (k+1)-stabilised one on a large
row subset by a pigeonhole over a refined partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .coloring import cached_chromatic_at_most
from .core import (
    AgreementGraph,
    ColumnColoring,
    GridDims,
    RowPartition,
    VerticalColoring,
    pair_rank,
    row_pairs,
)
from .errors import InternalContradictionError, NotColorableError

__all__ = [
    "SwitchRecord",
    "StabiliseStep",
    "switch",
    "stabilise_first",
    "common_refinement",
    "restrict_rows",
    "stabilise_step",
]


@dataclass(frozen=True)
class SwitchRecord:
    """One applied switch: the row pair and the colour pair swapped there."""

    edge: tuple[int, int]
    colors: tuple[int, int]


@dataclass(frozen=True)
class StabiliseStep:
    """Outcome of one stabilisation step.

    `rows` are the kept rows in the labels of the *input* colouring;
    `coloring` is the restriction to those rows, relabelled 1..|rows|;
    `partition` is the refined partition the largest class was drawn from.
    """

    coloring: VerticalColoring
    rows: tuple[int, ...]
    partition: RowPartition
    switches: tuple[SwitchRecord, ...]


def switch(
    chi: VerticalColoring, edge: tuple[int, int], c: int, c_tilde: int
) -> VerticalColoring:
    """Swap colours c and c_tilde at one row pair, in every column at once.

    Applying the same switch twice is the identity; a switch with c equal to
    c_tilde changes nothing.
    """
    a, b = edge
    rank = pair_rank(a, b, chi.m)
    for colour in (c, c_tilde):
        if not 1 <= colour <= chi.r:
            raise ValueError(f"colour {colour} outside [1, {chi.r}]")
    if c == c_tilde:
        return chi
    new_columns = []
    for col in chi.columns:
        val = col.colors[rank]
        if val == c:
            new_val = c_tilde
        elif val == c_tilde:
            new_val = c
        else:
            new_columns.append(col)
            continue
        colors = list(col.colors)
        colors[rank] = new_val
        new_columns.append(ColumnColoring(col.m, tuple(colors)))
    return VerticalColoring(chi.dims, chi.r, tuple(new_columns))


def stabilise_first(
    chi: VerticalColoring, log: list[SwitchRecord] | None = None
) -> VerticalColoring:
    """Make column 1 the constant colouring c_1.

    Switches c_1 with the column-1 colour at every row pair (identity
    switches are skipped and not logged).  The result is equivalent to the
    input under switching, so it is good exactly when the input is.
    """
    out = chi
    for a, b in row_pairs(chi.m):
        cur = out.column(1).color(a, b)
        if cur != 1:
            out = switch(out, (a, b), 1, cur)
            if log is not None:
                log.append(SwitchRecord((a, b), (1, cur)))
    return out


def common_refinement(parts: Sequence[RowPartition]) -> RowPartition:
    """Partition whose classes are all nonempty intersections of one class per input."""
    if not parts:
        raise ValueError("need at least one partition")
    m = parts[0].m
    if any(p.m != m for p in parts):
        raise ValueError("partitions cover different ground sets")
    index_maps = []
    for p in parts:
        index_maps.append({row: idx for idx, cls_ in enumerate(p.classes) for row in cls_})
    groups: dict[tuple[int, ...], list[int]] = {}
    for row in range(1, m + 1):
        key = tuple(index_map[row] for index_map in index_maps)
        groups.setdefault(key, []).append(row)
    return RowPartition.from_classes(groups.values())


def restrict_rows(chi: VerticalColoring, rows: Iterable[int]) -> VerticalColoring:
    """Keep only the given rows, relabelled 1..|rows| in increasing order."""
    kept = sorted(set(rows))
    if len(kept) < 2:
        raise ValueError("need at least two rows to restrict to")
    if kept[0] < 1 or kept[-1] > chi.m:
        raise ValueError(f"row subset {kept} outside 1..{chi.m}")
    new_m = len(kept)
    columns = tuple(
        ColumnColoring(
            new_m,
            tuple(col.color(kept[s], kept[t]) for s, t in combinations(range(new_m), 2)),
        )
        for col in chi.columns
    )
    return VerticalColoring(GridDims(new_m, chi.n), chi.r, columns)


def stabilise_step(
    chi: VerticalColoring, k: int, log: list[SwitchRecord] | None = None
) -> StabiliseStep:
    """Advance a k-stabilised colouring to a (k+1)-stabilised one on many rows.

    Because columns 1..k are constant, the agreement graph of columns i and
    k+1 (for i <= k) is exactly the graph of row pairs coloured c_i in column
    k+1.  A proper colouring of each yields a partition into c_i-independent
    classes; their common refinement has at most r^k classes, so its largest
    class X keeps at least ceil(M / r^k) rows.  Inside X, column k+1 only
    uses colours outside {c_1..c_k}; switching c_{k+1} with the column-(k+1)
    colour at every pair of X makes that column constant there without
    touching any previously fixed colour.  Restricting to X finishes the step.

    The largest class ties break to the smallest minimum element, and the
    switches run in pair-rank order, so the whole step is deterministic.
    Raises NotColorableError(i) when the i-th graph has no proper colouring;
    with k = r (and at least r^k + 1 rows, as required) this always happens.
    """
    r, m = chi.r, chi.m
    if not 1 <= k <= r:
        raise ValueError(f"level k={k} outside 1..r={r}")
    if chi.n < k + 1:
        raise ValueError(f"no column {k + 1} to stabilise (n={chi.n})")
    if m < r**k + 1:
        raise ValueError(f"need at least r^k + 1 = {r**k + 1} rows, have {m}")
    if not chi.is_stabilised(k):
        raise ValueError(f"input is not {k}-stabilised")

    target = chi.column(k + 1)
    partitions = []
    for i in range(1, k + 1):
        mask = target.color_masks.get(i, 0)
        witness = cached_chromatic_at_most(AgreementGraph(m, mask), r)
        if witness is None:
            raise NotColorableError(i, against=k + 1)
        partitions.append(witness.classes)
    if k == r:
        # All refinement classes would be {c_1..c_r}-independent, i.e.
        # singletons, and r^r of them cannot cover r^r + 1 rows.
        raise InternalContradictionError(
            "all r agreement graphs r-colourable at k = r with more than r^r rows"
        )
    refined = common_refinement(partitions)
    largest = max(refined.classes, key=len)

    switches: list[SwitchRecord] = []
    out = chi
    for s, t in combinations(largest, 2):
        cur = out.column(k + 1).color(s, t)
        if cur != k + 1:
            out = switch(out, (s, t), k + 1, cur)
            record = SwitchRecord((s, t), (k + 1, cur))
            switches.append(record)
            if log is not None:
                log.append(record)
    restricted = restrict_rows(out, largest)
    return StabiliseStep(restricted, tuple(largest), refined, tuple(switches))

"""Data model for edge-colourings of grid graphs.

The grid graph on [m] x [n] is n vertical copies of K_m (one per column)
glued to m horizontal copies of K_n (one per row).  A vertical colouring
assigns a complete edge-colouring of K_m to every column; a full colouring
additionally colours every horizontal edge.  A rectangle spans two rows and
two columns, and is *alternating* when its two vertical edges share a colour
and its two horizontal edges share a colour.

Row pairs of a column are stored densely, indexed by :func:`pair_rank`, and
edge sets over row pairs (the agreement graphs) are plain integers used as
bitmasks, so comparing two columns costs a handful of word operations.  Rows,
columns and colours are 1-based throughout the public interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

__all__ = [
    "pair_rank",
    "row_pairs",
    "iter_bits",
    "GridDims",
    "ColumnColoring",
    "VerticalColoring",
    "FullGridColoring",
    "Rectangle",
    "AgreementGraph",
    "RowPartition",
    "agreement_mask",
    "agreement_graph",
    "is_alternating",
    "enumerate_alternating_rectangles",
]


def pair_rank(a: int, b: int, m: int) -> int:
    """Dense index of the unordered pair {a, b} among all pairs of [m].

    Ranks follow lexicographic (a, b) order: (1,2), (1,3), ..., (1,m),
    (2,3), ... and run from 0 to C(m,2) - 1.
    """
    if not 1 <= a < b <= m:
        raise ValueError(f"need 1 <= a < b <= m, got a={a}, b={b}, m={m}")
    return (a - 1) * m - a * (a - 1) // 2 + (b - a - 1)


@lru_cache(maxsize=None)
def row_pairs(m: int) -> tuple[tuple[int, int], ...]:
    """All unordered pairs of [m], in rank order."""
    return tuple(combinations(range(1, m + 1), 2))


def iter_bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of `mask`, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class GridDims:
    """Grid side lengths: m rows (vertical cliques K_m) by n columns (horizontal cliques K_n)."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"grid dimensions must be positive, got {self.m}x{self.n}")


@dataclass(frozen=True)
class ColumnColoring:
    """A complete edge-colouring of K_m: one colour per row pair, in rank order."""

    m: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = comb(self.m, 2)
        if len(self.colors) != expected:
            raise ValueError(
                f"expected {expected} colours for m={self.m}, got {len(self.colors)}"
            )
        if any(c < 1 for c in self.colors):
            raise ValueError("colours are 1-based; found a value below 1")

    def color(self, a: int, b: int) -> int:
        return self.colors[pair_rank(a, b, self.m)]

    @cached_property
    def color_masks(self) -> dict[int, int]:
        """Bitmask of pair ranks per colour.

        The agreement mask of two columns is the OR over colours of the AND
        of their per-colour masks; this is the innermost comparison of every
        search, so it stays word-parallel.
        """
        masks: dict[int, int] = {}
        for rank, c in enumerate(self.colors):
            masks[c] = masks.get(c, 0) | (1 << rank)
        return masks


@dataclass(frozen=True)
class VerticalColoring:
    """One K_m edge-colouring per column, all using colours from [1, r]."""

    dims: GridDims
    r: int
    columns: tuple[ColumnColoring, ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("colour count r must be at least 1")
        if len(self.columns) != self.dims.n:
            raise ValueError(
                f"expected {self.dims.n} columns, got {len(self.columns)}"
            )
        for pos, col in enumerate(self.columns, start=1):
            if col.m != self.dims.m:
                raise ValueError(f"column {pos} has m={col.m}, expected {self.dims.m}")
            if any(c > self.r for c in col.colors):
                raise ValueError(f"column {pos} uses a colour above r={self.r}")

    @property
    def m(self) -> int:
        return self.dims.m

    @property
    def n(self) -> int:
        return self.dims.n

    def column(self, i: int) -> ColumnColoring:
        """1-based column access."""
        if not 1 <= i <= self.n:
            raise ValueError(f"column {i} out of range 1..{self.n}")
        return self.columns[i - 1]

    def is_stabilised(self, k: int) -> bool:
        """True when columns 1..k are the constant colourings c_1..c_k."""
        if not 0 <= k <= self.n:
            return False
        return all(
            all(c == i for c in self.columns[i - 1].colors) for i in range(1, k + 1)
        )

    @classmethod
    def from_columns(
        cls, m: int, n: int, r: int, column_colors: Sequence[Sequence[int]]
    ) -> "VerticalColoring":
        """Build from per-column colour sequences in pair-rank order."""
        cols = tuple(ColumnColoring(m, tuple(colors)) for colors in column_colors)
        return cls(GridDims(m, n), r, cols)


@dataclass(frozen=True)
class FullGridColoring:
    """A vertical colouring plus a colour for every horizontal edge.

    The horizontal edge of row a between columns {i, j} is stored at index
    ``pair_rank(i, j, n) * m + (a - 1)``.
    """

    vertical: VerticalColoring
    horizontal: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = self.m * comb(self.n, 2)
        if len(self.horizontal) != expected:
            raise ValueError(
                f"expected {expected} horizontal colours, got {len(self.horizontal)}"
            )
        if any(not 1 <= c <= self.r for c in self.horizontal):
            raise ValueError(f"horizontal colour outside [1, {self.r}]")

    @property
    def m(self) -> int:
        return self.vertical.m

    @property
    def n(self) -> int:
        return self.vertical.n

    @property
    def r(self) -> int:
        return self.vertical.r

    def horizontal_color(self, a: int, i: int, j: int) -> int:
        if not 1 <= a <= self.m:
            raise ValueError(f"row {a} out of range 1..{self.m}")
        return self.horizontal[pair_rank(i, j, self.n) * self.m + (a - 1)]


@dataclass(frozen=True, order=True)
class Rectangle:
    """Four grid vertices spanning rows (a, b) and columns (i, j)."""

    rows: tuple[int, int]
    cols: tuple[int, int]

    def __post_init__(self) -> None:
        a, b = self.rows
        i, j = self.cols
        if not (1 <= a < b and 1 <= i < j):
            raise ValueError(f"rectangle needs 1 <= a < b and 1 <= i < j, got {self}")


@dataclass(frozen=True)
class AgreementGraph:
    """Graph on the rows [m] whose edges mark colour agreements of a column pair.

    Edges are held as a single bitmask over pair ranks.
    """

    m: int
    mask: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("vertex count must be positive")
        if not 0 <= self.mask < (1 << comb(self.m, 2)):
            raise ValueError("edge mask out of range for the vertex count")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        pairs = row_pairs(self.m)
        return tuple(pairs[rank] for rank in iter_bits(self.mask))

    def edge_count(self) -> int:
        return self.mask.bit_count()

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.mask >> pair_rank(a, b, self.m) & 1)

    def vertex_adjacency(self) -> list[int]:
        """Per-vertex neighbour bitmasks over 0-based vertices."""
        adj = [0] * self.m
        pairs = row_pairs(self.m)
        for rank in iter_bits(self.mask):
            a, b = pairs[rank]
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
        return adj


@dataclass(frozen=True)
class RowPartition:
    """Partition of a row set [m].

    Classes are sorted tuples, listed in order of their smallest element, so
    equal partitions compare equal and every consumer sees one canonical form.
    """

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for cls_ in self.classes:
            if not cls_:
                raise ValueError("partition classes must be nonempty")
            if list(cls_) != sorted(cls_):
                raise ValueError("class members must be sorted ascending")
            if seen & set(cls_):
                raise ValueError("partition classes must be disjoint")
            seen.update(cls_)
        if not seen:
            raise ValueError("partition must cover a nonempty ground set")
        if seen != set(range(1, max(seen) + 1)):
            raise ValueError("partition must cover exactly [m]")
        mins = [cls_[0] for cls_ in self.classes]
        if mins != sorted(mins):
            raise ValueError("classes must be ordered by smallest element")

    @property
    def m(self) -> int:
        return max(cls_[-1] for cls_ in self.classes)

    @classmethod
    def from_classes(cls, groups: Iterable[Iterable[int]]) -> "RowPartition":
        """Normalise arbitrary groupings into the canonical form."""
        norm = sorted((tuple(sorted(g)) for g in groups if g), key=lambda c: c[0])
        return cls(tuple(norm))


def agreement_mask(col_a: ColumnColoring, col_b: ColumnColoring) -> int:
    """Bitmask of the row-pair ranks where two columns agree."""
    if col_a.m != col_b.m:
        raise ValueError("columns live on different row counts")
    masks_b = col_b.color_masks
    out = 0
    for c, mask_a in col_a.color_masks.items():
        mask_b = masks_b.get(c)
        if mask_b is not None:
            out |= mask_a & mask_b
    return out


def agreement_graph(chi: VerticalColoring, i: int, j: int) -> AgreementGraph:
    """Agreement graph of columns i < j: the row pairs coloured identically."""
    if not 1 <= i < j <= chi.n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={chi.n}")
    return AgreementGraph(chi.m, agreement_mask(chi.column(i), chi.column(j)))


def is_alternating(full: FullGridColoring, rect: Rectangle) -> bool:
    """True when both parallel edge pairs of the rectangle are monochromatic."""
    a, b = rect.rows
    i, j = rect.cols
    if b > full.m or j > full.n:
        raise ValueError(f"rectangle {rect} exceeds the {full.m}x{full.n} grid")
    if full.vertical.column(i).color(a, b) != full.vertical.column(j).color(a, b):
        return False
    return full.horizontal_color(a, i, j) == full.horizontal_color(b, i, j)


def enumerate_alternating_rectangles(full: FullGridColoring) -> list[Rectangle]:
    """All alternating rectangles, sorted lexicographically by (a, b, i, j).

    Column pairs are scanned outermost so each vertical agreement mask is
    built once; only the agreeing row pairs are tested against the two
    horizontal edges of the pair.
    """
    m, n = full.m, full.n
    pairs = row_pairs(m)
    found: list[Rectangle] = []
    for i, j in combinations(range(1, n + 1), 2):
        vmask = agreement_mask(full.vertical.column(i), full.vertical.column(j))
        if not vmask:
            continue
        base = pair_rank(i, j, n) * m
        horiz = full.horizontal[base : base + m]
        for rank in iter_bits(vmask):
            a, b = pairs[rank]
            if horiz[a - 1] == horiz[b - 1]:
                found.append(Rectangle((a, b), (i, j)))
    found.sort()
    return found

"""Line-oriented certificate format for grid colourings.

    gridram v1
    type vertical          (or: type full)
    m <int> n <int> r <int>
    v <col> <a> <b> <color>     one line per vertical edge, a < b
    h <row> <i> <j> <color>     full certificates only, i < j

Lines starting with '#' are comments; blank lines are ignored.  Every edge
must appear exactly once and every colour must lie in [1, r].  Emission is
canonical (no comments, fixed ordering), so parse followed by emit is
byte-stable.  Parse failures raise CertificateError with the offending line.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from pathlib import Path

from .core import (
    ColumnColoring,
    FullGridColoring,
    GridDims,
    VerticalColoring,
    pair_rank,
    row_pairs,
)
from .errors import CertificateError

__all__ = ["emit", "parse", "load", "save"]

_HEADER = "gridram v1"


def emit(obj: VerticalColoring | FullGridColoring) -> str:
    """Canonical text form; vertical edges column-major, horizontal edges row-major."""
    if isinstance(obj, FullGridColoring):
        vertical, full = obj.vertical, obj
    else:
        vertical, full = obj, None
    m, n, r = vertical.m, vertical.n, vertical.r
    lines = [
        _HEADER,
        f"type {'full' if full is not None else 'vertical'}",
        f"m {m} n {n} r {r}",
    ]
    pairs = row_pairs(m)
    for col in range(1, n + 1):
        colors = vertical.column(col).colors
        lines.extend(
            f"v {col} {a} {b} {colors[rank]}" for rank, (a, b) in enumerate(pairs)
        )
    if full is not None:
        for a in range(1, m + 1):
            lines.extend(
                f"h {a} {i} {j} {full.horizontal_color(a, i, j)}"
                for i, j in combinations(range(1, n + 1), 2)
            )
    return "\n".join(lines) + "\n"


def parse(text: str) -> VerticalColoring | FullGridColoring:
    """Parse a certificate, enforcing exhaustiveness and colour ranges."""
    lines = text.splitlines()
    significant: list[tuple[int, str]] = []
    for no, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        significant.append((no, stripped))
    last_line = len(lines) if lines else 1

    if not significant:
        raise CertificateError(last_line, "empty certificate")
    pos = 0

    no, line = significant[pos]
    if line != _HEADER:
        raise CertificateError(no, f"expected {_HEADER!r}, got {line!r}")
    pos += 1

    if pos >= len(significant):
        raise CertificateError(last_line, "missing type line")
    no, line = significant[pos]
    if line not in ("type vertical", "type full"):
        raise CertificateError(no, f"expected 'type vertical' or 'type full', got {line!r}")
    kind = line.split()[1]
    pos += 1

    if pos >= len(significant):
        raise CertificateError(last_line, "missing dimensions line")
    no, line = significant[pos]
    tokens = line.split()
    if len(tokens) != 6 or tokens[0] != "m" or tokens[2] != "n" or tokens[4] != "r":
        raise CertificateError(no, f"expected 'm <int> n <int> r <int>', got {line!r}")
    try:
        m, n, r = int(tokens[1]), int(tokens[3]), int(tokens[5])
    except ValueError:
        raise CertificateError(no, f"non-integer dimension in {line!r}") from None
    if m < 1 or n < 1 or r < 1:
        raise CertificateError(no, f"dimensions must be positive, got m={m} n={n} r={r}")
    pos += 1

    pair_count = comb(m, 2)
    vertical: list[list[int | None]] = [[None] * pair_count for _ in range(n)]
    horizontal: list[int | None] = [None] * (m * comb(n, 2))

    for no, line in significant[pos:]:
        tokens = line.split()
        if len(tokens) != 5 or tokens[0] not in ("v", "h"):
            raise CertificateError(no, f"expected an edge line, got {line!r}")
        try:
            first, a, b, color = (int(t) for t in tokens[1:])
        except ValueError:
            raise CertificateError(no, f"non-integer field in {line!r}") from None
        if not 1 <= color <= r:
            raise CertificateError(no, f"colour {color} outside [1, {r}]")
        if tokens[0] == "v":
            if not 1 <= first <= n:
                raise CertificateError(no, f"column {first} outside [1, {n}]")
            if not 1 <= a < b <= m:
                raise CertificateError(no, f"row pair ({a}, {b}) invalid for m={m}")
            rank = pair_rank(a, b, m)
            if vertical[first - 1][rank] is not None:
                raise CertificateError(no, f"duplicate vertical edge: col {first} pair ({a}, {b})")
            vertical[first - 1][rank] = color
        else:
            if kind != "full":
                raise CertificateError(no, "horizontal edge in a vertical certificate")
            if not 1 <= first <= m:
                raise CertificateError(no, f"row {first} outside [1, {m}]")
            if not 1 <= a < b <= n:
                raise CertificateError(no, f"column pair ({a}, {b}) invalid for n={n}")
            index = pair_rank(a, b, n) * m + (first - 1)
            if horizontal[index] is not None:
                raise CertificateError(no, f"duplicate horizontal edge: row {first} pair ({a}, {b})")
            horizontal[index] = color

    pairs = row_pairs(m)
    for col in range(n):
        for rank, value in enumerate(vertical[col]):
            if value is None:
                a, b = pairs[rank]
                raise CertificateError(
                    last_line, f"missing vertical edge: col {col + 1} pair ({a}, {b})"
                )
    chi = VerticalColoring(
        GridDims(m, n),
        r,
        tuple(ColumnColoring(m, tuple(col)) for col in vertical),  # type: ignore[arg-type]
    )
    if kind == "vertical":
        return chi

    col_pairs = tuple(combinations(range(1, n + 1), 2))
    for index, value in enumerate(horizontal):
        if value is None:
            i, j = col_pairs[index // m]
            raise CertificateError(
                last_line,
                f"missing horizontal edge: row {index % m + 1} pair ({i}, {j})",
            )
    return FullGridColoring(chi, tuple(horizontal))  # type: ignore[arg-type]


def load(path: str | Path) -> VerticalColoring | FullGridColoring:
    return parse(Path(path).read_text(encoding="utf-8"))


def save(obj: VerticalColoring | FullGridColoring, path: str | Path) -> None:
    Path(path).write_text(emit(obj), encoding="utf-8")

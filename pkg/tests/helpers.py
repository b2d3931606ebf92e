"""Seeded random builders shared across the test suite."""

from __future__ import annotations

import random
from math import comb

from gridram import (
    FullGridColoring,
    SetFamily,
    VerticalColoring,
    switch,
)


def random_column(rng: random.Random, m: int, r: int) -> list[int]:
    return [rng.randint(1, r) for _ in range(comb(m, 2))]


def random_vertical(rng: random.Random, m: int, n: int, r: int) -> VerticalColoring:
    return VerticalColoring.from_columns(
        m, n, r, [random_column(rng, m, r) for _ in range(n)]
    )


def random_full(rng: random.Random, m: int, n: int, r: int) -> FullGridColoring:
    vertical = random_vertical(rng, m, n, r)
    horizontal = tuple(rng.randint(1, r) for _ in range(m * comb(n, 2)))
    return FullGridColoring(vertical, horizontal)


def random_stabilised(
    rng: random.Random, m: int, n: int, r: int, k: int
) -> VerticalColoring:
    """Columns 1..k constant c_1..c_k, the rest uniform."""
    columns = [[i] * comb(m, 2) for i in range(1, k + 1)]
    columns += [random_column(rng, m, r) for _ in range(n - k)]
    return VerticalColoring.from_columns(m, n, r, columns)


def random_sunflower(rng: random.Random) -> SetFamily:
    """Distinct sets with one common core and disjoint nonempty petals.

    Every pairwise intersection equals the core, so the family is uniformly
    core-size-intersecting by construction.
    """
    core_size = rng.randint(1, 4)
    petal_size = rng.randint(1, 3)
    petals = rng.randint(2, 6)
    ground = core_size + petal_size * petals + rng.randint(0, 3)
    elements = list(range(1, ground + 1))
    rng.shuffle(elements)
    core = frozenset(elements[:core_size])
    sets = []
    at = core_size
    for _ in range(petals):
        petal = frozenset(elements[at : at + petal_size])
        at += petal_size
        sets.append(core | petal)
    return SetFamily(ground, tuple(sets))


def replay_switches(chi: VerticalColoring, records) -> VerticalColoring:
    out = chi
    for rec in records:
        out = switch(out, rec.edge, *rec.colors)
    return out

"""Shipped example objects: the labeled uniform (3,8) graph, the glued
disconnected (5,10) graph, and the 9-member collection with a hole."""

from __future__ import annotations

import functools

from .collection import WSCollection
from .cyclic import Ground
from .graph import PlabicGraph, make_trivalent
from .positroid import GrassmannNecklace, uniform_necklace
from .tiling import tiling_to_plabic

UNIFORM_8_3_LABELS = (
    "123", "234", "345", "456", "567", "678", "178", "128",
    "127", "137", "136", "135", "134", "167", "156", "145",
)

# Digit 0 denotes ground element 10.
GLUED_10_5_LABELS = (
    "02345", "12345", "23459", "24589", "34589",
    "34579", "45789", "56789", "46789",
)

HOLE_6_3_NECKLACE = ({1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6}, {1, 2, 6})
HOLE_6_3_MEMBERS = (
    {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6},
    {1, 2, 6}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5},
)


def _digits_to_set(label: str) -> set[int]:
    return {10 if ch == "0" else int(ch) for ch in label}


@functools.cache
def uniform_8_3_collection() -> WSCollection:
    g = Ground(8)
    return WSCollection.build(
        g, [_digits_to_set(s) for s in UNIFORM_8_3_LABELS], uniform_necklace(8, 3)
    )


@functools.cache
def glued_10_5_necklace() -> GrassmannNecklace:
    return GrassmannNecklace.of(10, [
        {1, 2, 3, 4, 5}, {2, 3, 4, 5, 9}, {3, 4, 5, 7, 9}, {4, 5, 7, 8, 9},
        {5, 6, 7, 8, 9}, {4, 6, 7, 8, 9}, {4, 5, 7, 8, 9}, {2, 4, 5, 8, 9},
        {2, 3, 4, 5, 9}, {2, 3, 4, 5, 10},
    ])


@functools.cache
def glued_10_5_collection() -> WSCollection:
    g = Ground(10)
    return WSCollection.build(
        g, [_digits_to_set(s) for s in GLUED_10_5_LABELS], glued_10_5_necklace()
    )


@functools.cache
def hole_6_3_collection() -> WSCollection:
    g = Ground(6)
    anchor = GrassmannNecklace.of(6, HOLE_6_3_NECKLACE)
    return WSCollection.build(g, HOLE_6_3_MEMBERS, anchor)


@functools.cache
def uniform_8_3_graph() -> PlabicGraph:
    """Trivalent reduced graph whose 16 face labels are the shipped list."""
    return make_trivalent(tiling_to_plabic(uniform_8_3_collection()))


@functools.cache
def glued_10_5_graph() -> PlabicGraph:
    """Disconnected-positroid graph glued from its three component graphs."""
    return tiling_to_plabic(glued_10_5_collection())

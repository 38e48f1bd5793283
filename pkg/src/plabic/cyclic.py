"""Cyclic ground-set arithmetic: cyclic order, intervals, subsets, weak separation.

The ground set [n] = {1, ..., n} is cyclically ordered.  Subsets are stored
as bitmasks (bit i-1 holds element i), so every set operation is a word
operation and colexicographic order on subsets is numeric order on masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInputError

MAX_GROUND = 64

OPEN = "open"
CLOSED = "closed"
HALF_OPEN_LEFT = "half-open-left"    # (a, b] : open at a, closed at b
HALF_OPEN_RIGHT = "half-open-right"  # [a, b) : closed at a, open at b
_OPENNESS = (OPEN, CLOSED, HALF_OPEN_LEFT, HALF_OPEN_RIGHT)


@dataclass(frozen=True)
class Ground:
    """The cyclically ordered ground set {1, ..., n}."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND:
            raise InvalidInputError(f"ground size must be in 1..{MAX_GROUND}, got {self.n}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def elements(self) -> range:
        return range(1, self.n + 1)

    def check_element(self, x: int) -> None:
        if not 1 <= x <= self.n:
            raise InvalidInputError(f"element {x} outside ground set [1..{self.n}]")


@dataclass(frozen=True)
class Subset:
    """A subset of a cyclically ordered ground set, with bitmask semantics.

    Equality is set equality over the same ground; integer comparison of
    masks is colexicographic comparison of subsets.
    """

    ground: Ground
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask & ~self.ground.full_mask:
            raise InvalidInputError(f"mask {self.mask:#x} not within ground [1..{self.ground.n}]")

    @classmethod
    def of(cls, ground: Ground, members: Iterable[int]) -> "Subset":
        mask = 0
        for x in members:
            ground.check_element(x)
            mask |= 1 << (x - 1)
        return cls(ground, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(mask_members(self.mask))

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.ground.n and bool(self.mask >> (x - 1) & 1)

    def __iter__(self):
        return iter(mask_members(self.mask))

    def with_element(self, x: int) -> "Subset":
        self.ground.check_element(x)
        return Subset(self.ground, self.mask | 1 << (x - 1))

    def without_element(self, x: int) -> "Subset":
        self.ground.check_element(x)
        return Subset(self.ground, self.mask & ~(1 << (x - 1)))

    def union(self, other: "Subset") -> "Subset":
        _same_ground(self, other)
        return Subset(self.ground, self.mask | other.mask)

    def intersection(self, other: "Subset") -> "Subset":
        _same_ground(self, other)
        return Subset(self.ground, self.mask & other.mask)

    def difference(self, other: "Subset") -> "Subset":
        _same_ground(self, other)
        return Subset(self.ground, self.mask & ~other.mask)

    def issubset(self, other: "Subset") -> bool:
        _same_ground(self, other)
        return not self.mask & ~other.mask

    def __repr__(self) -> str:
        return f"Subset[{','.join(map(str, self.members))} of 1..{self.ground.n}]"


@dataclass(frozen=True)
class CyclicInterval:
    """A cyclic interval between two ground-set elements.

    Realizes (a,b), [a,b], (a,b] and [a,b).  By convention the open
    interval (a,a) is the whole ground set minus a, while [a,a] = {a}.
    """

    a: int
    b: int
    openness: str = CLOSED

    def __post_init__(self):
        if self.openness not in _OPENNESS:
            raise InvalidInputError(f"unknown openness {self.openness!r}")


def _same_ground(x: Subset, y: Subset) -> None:
    if x.ground != y.ground:
        raise InvalidInputError("subsets live on different ground sets")


def mask_members(mask: int) -> list[int]:
    """1-based elements of a bitmask in increasing order."""
    out = []
    x = mask
    while x:
        low = x & -x
        out.append(low.bit_length())
        x ^= low
    return out


def mask_of(members: Iterable[int]) -> int:
    mask = 0
    for x in members:
        mask |= 1 << (x - 1)
    return mask


def cyclically_ordered(seq: Sequence[int], g: Ground) -> bool:
    """Whether some rotation of seq is strictly increasing in 1..n.

    >>> cyclically_ordered((2, 3, 1), Ground(3))
    True
    >>> cyclically_ordered((1, 3, 4, 2), Ground(4))
    False
    """
    seen = 0
    for x in seq:
        g.check_element(x)
        bit = 1 << (x - 1)
        if seen & bit:
            raise InvalidInputError(f"duplicate element {x} in sequence")
        seen |= bit
    if len(seq) <= 2:
        return True
    descents = 0
    for prev, cur in zip(seq, tuple(seq[1:]) + (seq[0],)):
        if cur < prev:
            descents += 1
    return descents <= 1


def open_arc_mask(a: int, b: int, n: int) -> int:
    """Bitmask of the open cyclic interval (a, b); (a, a) is [n] minus a."""
    full = (1 << n) - 1
    if a == b:
        return full & ~(1 << (a - 1))
    mask = 0
    x = a % n + 1
    while x != b:
        mask |= 1 << (x - 1)
        x = x % n + 1
    return mask


def interval_members(iv: CyclicInterval, g: Ground) -> Subset:
    """The member set of a cyclic interval under the fixed conventions.

    Degenerate endpoints: (a,a) is everything but a, [a,a] is just a, and
    both half-open forms cover the whole ground set.
    """
    g.check_element(iv.a)
    g.check_element(iv.b)
    if iv.a == iv.b and iv.openness == CLOSED:
        return Subset(g, 1 << (iv.a - 1))
    mask = open_arc_mask(iv.a, iv.b, g.n)
    if iv.openness in (CLOSED, HALF_OPEN_RIGHT):
        mask |= 1 << (iv.a - 1)
    if iv.openness in (CLOSED, HALF_OPEN_LEFT):
        mask |= 1 << (iv.b - 1)
    return Subset(g, mask)


def ws_masks(a: int, b: int, n: int) -> bool:
    """Weak separation of two same-size subsets given as masks.

    True iff the two difference sets occupy disjoint cyclic arcs,
    i.e. walking once around the circle the labelled positions switch
    between the two differences at most twice.
    """
    d1 = a & ~b
    d2 = b & ~a
    if not d1 or not d2:
        return True
    transitions = 0
    first = prev = -1
    for i in range(n):
        bit = 1 << i
        if d1 & bit:
            cur = 0
        elif d2 & bit:
            cur = 1
        else:
            continue
        if first < 0:
            first = cur
        elif cur != prev:
            transitions += 1
        prev = cur
    if first != prev:
        transitions += 1
    return transitions <= 2


def arcs_interleave(a: int, b: int, n: int) -> bool:
    """Whether two disjoint masks interleave around the circle.

    Interleaving means there are cyclically ordered x, y, x', y' with
    x, x' in the first set and y, y' in the second.
    """
    return not ws_masks(a, b, n)


def weakly_separated(I: Subset, J: Subset) -> bool:
    """Weak separation of two equal-size subsets of one ground set."""
    _same_ground(I, J)
    if I.size != J.size:
        raise InvalidInputError(
            f"weak separation needs equal cardinalities, got {I.size} and {J.size}"
        )
    return ws_masks(I.mask, J.mask, I.ground.n)


def shifted_key(i: int, n: int):
    """Sort key realizing the linear order i < i+1 < ... < n < 1 < ... < i-1."""
    return lambda x: (x - i) % n


def leq_shifted_masks(i: int, a: int, b: int, n: int) -> bool:
    """Termwise comparison of two equal-size masks under the i-shifted order."""
    key = shifted_key(i, n)
    xs = sorted((key(x) for x in mask_members(a)))
    ys = sorted((key(y) for y in mask_members(b)))
    return all(x <= y for x, y in zip(xs, ys))


def shifted_leq(i: int, I: Subset, J: Subset) -> bool:
    """Whether I <= J in the termwise partial order sorted by the i-shifted order."""
    _same_ground(I, J)
    I.ground.check_element(i)
    if I.size != J.size:
        raise InvalidInputError(
            f"shifted comparison needs equal cardinalities, got {I.size} and {J.size}"
        )
    return leq_shifted_masks(i, I.mask, J.mask, I.ground.n)


def subsets_of_size(n: int, k: int) -> list[int]:
    """All k-subset masks of [n] in colexicographic (numeric) order."""
    if k < 0 or k > n:
        return []

    def colex(k: int, n: int) -> list[int]:
        if k == 0:
            return [0]
        result = []
        for top in range(k, n + 1):
            bit = 1 << (top - 1)
            for rest in colex(k - 1, top - 1):
                result.append(rest | bit)
        return result

    return colex(k, n)

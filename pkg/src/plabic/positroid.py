"""Grassmann necklaces, decorated permutations, positroids and their decompositions."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .cyclic import (
    Ground,
    Subset,
    leq_shifted_masks,
    mask_members,
    subsets_of_size,
    ws_masks,
)
from .errors import Budget, InvalidInputError

LOOP = 1      # fixed point not in any basis
COLOOP = -1   # fixed point in every basis


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of [n] with each fixed point colored +1 (loop) or -1 (coloop)."""

    ground: Ground
    perm: tuple[int, ...]
    colors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = self.ground.n
        if len(self.perm) != n or sorted(self.perm) != list(range(1, n + 1)):
            raise InvalidInputError(f"perm {self.perm} is not a permutation of 1..{n}")
        fixed = {i for i in range(1, n + 1) if self.perm[i - 1] == i}
        colored = {i for i, _ in self.colors}
        if colored != fixed:
            raise InvalidInputError(
                f"colors must cover exactly the fixed points {sorted(fixed)}, got {sorted(colored)}"
            )
        if any(c not in (LOOP, COLOOP) for _, c in self.colors):
            raise InvalidInputError("fixed-point colors must be +1 or -1")
        if tuple(sorted(self.colors)) != self.colors:
            raise InvalidInputError("colors must be sorted by fixed point")

    @classmethod
    def of(cls, perm: Iterable[int], colors: Mapping[int, int] | None = None,
           n: int | None = None) -> "DecoratedPermutation":
        p = tuple(perm)
        g = Ground(len(p) if n is None else n)
        items = tuple(sorted((colors or {}).items()))
        return cls(g, p, items)

    def apply(self, i: int) -> int:
        self.ground.check_element(i)
        return self.perm[i - 1]

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * self.ground.n
        for i, j in enumerate(self.perm, start=1):
            inv[j - 1] = i
        return tuple(inv)

    def color(self, i: int) -> int:
        for j, c in self.colors:
            if j == i:
                return c
        raise InvalidInputError(f"{i} is not a fixed point")

    @property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.colors)


@dataclass(frozen=True)
class GrassmannNecklace:
    """A cyclic sequence (I_1..I_n) of k-subsets with I_{i+1} containing I_i minus i."""

    ground: Ground
    k: int
    entries: tuple[Subset, ...]

    def __post_init__(self):
        n = self.ground.n
        if len(self.entries) != n:
            raise InvalidInputError(f"necklace needs {n} entries, got {len(self.entries)}")
        for idx, entry in enumerate(self.entries, start=1):
            if entry.ground != self.ground:
                raise InvalidInputError(f"entry {idx} lives on a different ground set")
            if entry.size != self.k:
                raise InvalidInputError(
                    f"entry {idx} has size {entry.size}, expected k={self.k}"
                )
        for i in range(1, n + 1):
            cur = self.entries[i - 1].mask
            nxt = self.entries[i % n].mask
            bit = 1 << (i - 1)
            if (cur & ~bit) & ~nxt:
                raise InvalidInputError(f"entry {i + 1 if i < n else 1} must contain entry {i} minus {i}")
            if not cur & bit and nxt != cur:
                raise InvalidInputError(f"{i} not in entry {i}, so the next entry must equal it")

    @classmethod
    def of(cls, n: int, entries: Iterable[Iterable[int]]) -> "GrassmannNecklace":
        g = Ground(n)
        subs = tuple(Subset.of(g, e) for e in entries)
        k = subs[0].size if subs else 0
        return cls(g, k, subs)

    def entry(self, i: int) -> Subset:
        self.ground.check_element(i)
        return self.entries[i - 1]

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(s.mask for s in self.entries)

    def is_connected(self) -> bool:
        """All entries distinct; equivalent to having one noncrossing component."""
        return len(set(self.masks)) == self.ground.n


@dataclass(frozen=True)
class Positroid:
    """A positroid, stored as its defining Grassmann necklace.

    Bases are filtered on demand from the definitional termwise
    comparisons and memoized; nothing is stored eagerly.
    """

    necklace: GrassmannNecklace

    @property
    def ground(self) -> Ground:
        return self.necklace.ground

    @property
    def k(self) -> int:
        return self.necklace.k


def uniform_necklace(n: int, k: int) -> GrassmannNecklace:
    """The necklace I_i = {i, ..., i+k-1} whose positroid is all of binom([n],k)."""
    g = Ground(n)
    if not 0 <= k <= n:
        raise InvalidInputError(f"k must be in 0..{n}, got {k}")
    entries = []
    for i in range(1, n + 1):
        entries.append(Subset.of(g, (((i - 1 + t) % n) + 1 for t in range(k))))
    return GrassmannNecklace(g, k, tuple(entries))


def decorated_to_necklace(p: DecoratedPermutation) -> GrassmannNecklace:
    """The Grassmann necklace with I_i = {j : j precedes its preimage in the
    i-shifted order} together with the coloop fixed points."""
    n = p.ground.n
    inv = p.inverse()
    coloops = 0
    for j, c in p.colors:
        if c == COLOOP:
            coloops |= 1 << (j - 1)
    entries = []
    for i in range(1, n + 1):
        mask = coloops
        for j in range(1, n + 1):
            pre = inv[j - 1]
            if pre != j and (j - i) % n < (pre - i) % n:
                mask |= 1 << (j - 1)
        entries.append(Subset(p.ground, mask))
    k = entries[0].size
    return GrassmannNecklace(p.ground, k, tuple(entries))


def necklace_to_decorated(nk: GrassmannNecklace) -> DecoratedPermutation:
    """Inverse of decorated_to_necklace: read off each one-step set difference."""
    n = nk.ground.n
    perm = [0] * n
    colors: dict[int, int] = {}
    for i in range(1, n + 1):
        cur = nk.entries[i - 1].mask
        nxt = nk.entries[i % n].mask
        if cur == nxt:
            perm[i - 1] = i
            colors[i] = COLOOP if cur >> (i - 1) & 1 else LOOP
            continue
        removed = cur & ~nxt
        added = nxt & ~cur
        if removed != 1 << (i - 1) or added.bit_count() != 1:
            raise InvalidInputError(f"necklace step {i} is not a single swap of {i}")
        perm[i - 1] = added.bit_length()
    result = DecoratedPermutation(nk.ground, tuple(perm), tuple(sorted(colors.items())))
    return result


def cardinality_class(p: DecoratedPermutation) -> int:
    """The common size k of the necklace entries induced by p."""
    inv = p.inverse()
    n = p.ground.n
    k = sum(1 for j, c in p.colors if c == COLOOP)
    for j in range(1, n + 1):
        pre = inv[j - 1]
        if pre != j and (j - 1) % n < (pre - 1) % n:
            k += 1
    return k


def alignments_and_length(p: DecoratedPermutation, k: int) -> tuple[tuple[tuple[int, int], ...], int]:
    """Aligned ordered pairs of p and the length k(n-k) minus their count.

    The pair (i, j) is aligned when i, p(i), p(j), j are cyclically ordered
    and all four positions are distinct; each unordered pair {i,j} is
    counted once, reported in whichever orientation satisfies the
    condition.  A fixed point's image sits infinitesimally clockwise of the
    point itself when it is a loop and counterclockwise when a coloop, so
    that the length is additive over noncrossing components and equals the
    positroid cell dimension for every coloring.
    """
    n = p.ground.n
    if k != cardinality_class(p):
        raise InvalidInputError(f"k={k} does not match the permutation's cardinality class")
    color = dict(p.colors)

    def image_pos(x: int) -> tuple[int, int]:
        y = p.perm[x - 1]
        if y == x:
            return (x, 1 if color[x] == LOOP else -1)
        return (y, 0)

    def aligned(a: int, b: int) -> bool:
        quad = ((a, 0), image_pos(a), image_pos(b), (b, 0))
        if len(set(quad)) != 4:
            return False
        descents = sum(1 for u, v in zip(quad, quad[1:] + quad[:1]) if v < u)
        return descents <= 1

    pairs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for a, b in ((i, j), (j, i)):
                if aligned(a, b):
                    pairs.append((a, b))
                    break
    length = k * (n - k) - len(pairs)
    return tuple(pairs), length


def necklace_length(nk: GrassmannNecklace) -> int:
    _, length = alignments_and_length(necklace_to_decorated(nk), nk.k)
    return length


def positroid_contains(pos: Positroid, J: Subset) -> bool:
    """Definitional membership: every necklace entry is termwise below J."""
    nk = pos.necklace
    if J.ground != nk.ground:
        raise InvalidInputError("subset lives on a different ground set")
    if J.size != nk.k:
        raise InvalidInputError(f"membership needs a {nk.k}-subset, got size {J.size}")
    n = nk.ground.n
    return all(leq_shifted_masks(i, nk.entries[i - 1].mask, J.mask, n) for i in range(1, n + 1))


@functools.lru_cache(maxsize=4096)
def _bases_masks(necklace: GrassmannNecklace, limit: int) -> tuple[int, ...]:
    n = necklace.ground.n
    k = necklace.k
    budget = Budget(limit)
    entry_masks = necklace.masks
    out = []
    for mask in subsets_of_size(n, k):
        budget.charge()
        if all(leq_shifted_masks(i, entry_masks[i - 1], mask, n) for i in range(1, n + 1)):
            out.append(mask)
    return tuple(out)


def positroid_bases(pos: Positroid, budget: Budget | None = None) -> tuple[Subset, ...]:
    """All member subsets in colexicographic order.

    Results are memoized per necklace; the cache is populated by whichever
    caller gets there first and every interleaving yields identical output.
    """
    limit = budget.limit if budget is not None else Budget().limit
    masks = _bases_masks(pos.necklace, limit)
    g = pos.ground
    return tuple(Subset(g, m) for m in masks)


@dataclass(frozen=True)
class NoncrossingComponents:
    """The finest noncrossing partition of [n] closed under the permutation."""

    blocks: tuple[tuple[int, ...], ...]
    component_perms: tuple[DecoratedPermutation, ...]

    @property
    def is_connected(self) -> bool:
        return len(self.blocks) == 1


def restrict_to_block(p: DecoratedPermutation, block: tuple[int, ...]) -> DecoratedPermutation:
    """Restriction of p to a closed block, relabelled along its inherited cyclic order."""
    pos = {x: t for t, x in enumerate(block, start=1)}
    perm = [0] * len(block)
    colors = {}
    for t, x in enumerate(block, start=1):
        image = p.apply(x)
        if image not in pos:
            raise InvalidInputError(f"block {block} is not closed under the permutation")
        perm[t - 1] = pos[image]
        if image == x:
            colors[t] = p.color(x)
    return DecoratedPermutation(Ground(len(block)), tuple(perm), tuple(sorted(colors.items())))


def connected_components(p: DecoratedPermutation) -> NoncrossingComponents:
    """Merge the permutation's orbits until the partition is noncrossing."""
    n = p.ground.n
    seen = 0
    blocks: list[int] = []
    for i in range(1, n + 1):
        bit = 1 << (i - 1)
        if seen & bit:
            continue
        orbit = 0
        x = i
        while not orbit >> (x - 1) & 1:
            orbit |= 1 << (x - 1)
            x = p.apply(x)
        seen |= orbit
        blocks.append(orbit)

    merged = True
    while merged:
        merged = False
        for a in range(len(blocks)):
            for b in range(a + 1, len(blocks)):
                if not ws_masks(blocks[a], blocks[b], n):
                    blocks[a] |= blocks[b]
                    del blocks[b]
                    merged = True
                    break
            if merged:
                break

    blocks.sort(key=lambda m: (m & -m))
    element_blocks = tuple(tuple(mask_members(m)) for m in blocks)
    perms = tuple(restrict_to_block(p, blk) for blk in element_blocks)
    return NoncrossingComponents(element_blocks, perms)


def is_connected(nk: GrassmannNecklace) -> bool:
    return nk.is_connected()


def cyclic_run(n: int, start: int, stop: int) -> tuple[int, ...]:
    """Elements of the half-open cyclic interval [start, stop) in cyclic order."""
    out = []
    x = start
    while True:
        out.append(x)
        x = x % n + 1
        if x == stop:
            break
        if len(out) > n:
            raise InvalidInputError("degenerate cyclic run")
    return tuple(out)


def direct_sum_split(nk: GrassmannNecklace, i: int, j: int
                     ) -> tuple[GrassmannNecklace, GrassmannNecklace]:
    """Split a necklace with I_i = I_j into its two restricted necklaces.

    The first factor lives on [i, j) relabelled 1.. in cyclic order from i,
    the second on [j, i) from j.  Lengths add over the two factors.
    """
    nk.ground.check_element(i)
    nk.ground.check_element(j)
    if i == j:
        raise InvalidInputError("split points must differ")
    if nk.entries[i - 1].mask != nk.entries[j - 1].mask:
        raise InvalidInputError(f"entries {i} and {j} differ; cannot split there")
    n = nk.ground.n

    def restricted(start: int, stop: int) -> GrassmannNecklace:
        labels = cyclic_run(n, start, stop)
        label_mask = 0
        for x in labels:
            label_mask |= 1 << (x - 1)
        g = Ground(len(labels))
        entries = []
        for m in labels:
            inside = nk.entries[m - 1].mask & label_mask
            entries.append(Subset.of(g, (labels.index(x) + 1 for x in mask_members(inside))))
        k = entries[0].size
        return GrassmannNecklace(g, k, tuple(entries))

    return restricted(i, j), restricted(j, i)


def all_decorated_permutations(n: int):
    """Every decorated permutation of [n], all fixed-point colorings included."""
    import itertools

    for perm in itertools.permutations(range(1, n + 1)):
        fixed = [i for i in range(1, n + 1) if perm[i - 1] == i]
        for coloring in itertools.product((LOOP, COLOOP), repeat=len(fixed)):
            colors = tuple(sorted(zip(fixed, coloring)))
            yield DecoratedPermutation(Ground(n), perm, colors)

"""Unequal-cardinality weak separation, chamber sets, and the padding
reduction onto equal-size weak separation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .cyclic import Ground, Subset, mask_members
from .errors import Budget, InvalidInputError
from .positroid import DecoratedPermutation, decorated_to_necklace
from .collection import enumerate_maximal


@dataclass(frozen=True)
class ChamberContext:
    """A permutation w of [m] whose non-inversions generate upward closure
    constraints on subsets of [m]."""

    m: int
    w: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.w) != list(range(1, self.m + 1)):
            raise InvalidInputError(f"w must be a permutation of 1..{self.m}")

    @classmethod
    def of(cls, w: Iterable[int]) -> "ChamberContext":
        wt = tuple(w)
        return cls(len(wt), wt)

    def inversions(self) -> int:
        return sum(
            1
            for a in range(1, self.m + 1)
            for b in range(a + 1, self.m + 1)
            if self.w[a - 1] > self.w[b - 1]
        )


def _check_subset(I: Iterable[int], m: int) -> frozenset[int]:
    s = frozenset(I)
    for x in s:
        if not 1 <= x <= m:
            raise InvalidInputError(f"element {x} outside 1..{m}")
    return s


def lz_weakly_separated(I: Iterable[int], J: Iterable[int], m: int) -> bool:
    """Weak separation in the linear order, any cardinalities.

    The smaller-or-equal set's surplus must avoid the interval spanned by
    the other set's surplus, splitting into a block before it and a block
    after it.
    """
    A = _check_subset(I, m)
    B = _check_subset(J, m)

    def clause(big: frozenset[int], small: frozenset[int]) -> bool:
        mid = big - small
        out = small - big
        if not mid or not out:
            return True
        lo, hi = min(mid), max(mid)
        return all(x < lo or x > hi for x in out)

    return (len(A) >= len(B) and clause(A, B)) or (len(B) >= len(A) and clause(B, A))


def pad(I: Iterable[int], m: int) -> Subset:
    """Top-fill a subset of [m] to an m-subset of [2m]."""
    s = _check_subset(I, m)
    g = Ground(2 * m)
    return Subset.of(g, sorted(s) + list(range(m + len(s) + 1, 2 * m + 1)))


def w_chamber(ctx: ChamberContext, budget: Budget | None = None) -> list[frozenset[int]]:
    """All subsets closed upward along the non-inversions of w."""
    budget = budget or Budget()
    m = ctx.m
    budget.charge(1 << m)
    constraints = [
        (a, b)
        for a in range(1, m + 1)
        for b in range(a + 1, m + 1)
        if ctx.w[a - 1] < ctx.w[b - 1]
    ]
    out = []
    for bits in range(1 << m):
        members = frozenset(mask_members(bits))
        if all(a not in members or b in members for a, b in constraints):
            out.append(members)
    return out


def w_hat(ctx: ChamberContext) -> DecoratedPermutation:
    """The fixed-point-free permutation of [2m] whose positroid carries the
    padded chamber collections: the top half reversed, then the inverse of
    w read downward."""
    m = ctx.m
    inv = [0] * m
    for a, b in enumerate(ctx.w, start=1):
        inv[b - 1] = a
    values = [2 * m + 1 - p for p in range(1, m + 1)]
    values += [inv[m - q] for q in range(1, m + 1)]
    return DecoratedPermutation.of(values)


@dataclass(frozen=True)
class LZPurityReport:
    ctx: ChamberContext
    expected_size: int
    collection_count: int
    sizes_ok: bool
    padding_bijection_ok: bool

    @property
    def ok(self) -> bool:
        return self.sizes_ok and self.padding_bijection_ok


def maximal_chamber_collections(ctx: ChamberContext,
                                budget: Budget | None = None) -> list[frozenset[frozenset[int]]]:
    """All maximal pairwise LZ-separated families inside the chamber set."""
    budget = budget or Budget()
    chamber = w_chamber(ctx, budget)
    compat = {
        a: frozenset(b for b in chamber if b != a and lz_weakly_separated(a, b, ctx.m))
        for a in chamber
    }
    results: list[frozenset[frozenset[int]]] = []

    def expand(clique: set[frozenset[int]], allowed: frozenset, excluded: frozenset) -> None:
        budget.charge()
        if not allowed and not excluded:
            results.append(frozenset(clique))
            return
        pivot = max(allowed | excluded, key=lambda v: len(compat[v] & allowed))
        for v in sorted(allowed - compat[pivot], key=sorted):
            expand(clique | {v}, allowed & compat[v], excluded & compat[v])
            allowed = allowed - {v}
            excluded = excluded | {v}

    expand(set(), frozenset(chamber), frozenset())
    return results


def verify_lz_purity(ctx: ChamberContext, budget: Budget | None = None) -> LZPurityReport:
    """Check that every maximal chamber collection has m + inversions + 1
    members and that padding carries them exactly onto the maximal
    collections inside the positroid of the doubled permutation."""
    budget = budget or Budget()
    expected = ctx.m + ctx.inversions() + 1
    collections = maximal_chamber_collections(ctx, budget)
    sizes_ok = all(len(c) == expected for c in collections)

    padded = {
        frozenset(pad(s, ctx.m).mask for s in coll)
        for coll in collections
    }
    anchor = decorated_to_necklace(w_hat(ctx))
    target = {frozenset(c.masks) for c in enumerate_maximal(anchor, "closure", budget)}
    return LZPurityReport(
        ctx=ctx,
        expected_size=expected,
        collection_count=len(collections),
        sizes_ok=sizes_ok,
        padding_bijection_ok=padded == target,
    )


def all_permutations(m: int) -> list[ChamberContext]:
    return [ChamberContext.of(w) for w in itertools.permutations(range(1, m + 1))]

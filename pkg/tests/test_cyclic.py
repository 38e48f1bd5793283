"""Ground-set arithmetic: cyclic order, intervals, weak separation, shifted order."""

from __future__ import annotations

import itertools

import pytest

from plabic.cyclic import (
    CLOSED,
    HALF_OPEN_LEFT,
    HALF_OPEN_RIGHT,
    OPEN,
    CyclicInterval,
    Ground,
    Subset,
    cyclically_ordered,
    interval_members,
    shifted_leq,
    subsets_of_size,
    weakly_separated,
    ws_masks,
)
from plabic.errors import InvalidInputError


def brute_force_ws(I: Subset, J: Subset) -> bool:
    """Literal definition: no cyclically ordered a, b, a', b' split across
    the two differences.  Independent of the production predicate."""
    g = I.ground
    A = [x for x in I.members if x not in J]
    B = [x for x in J.members if x not in I]
    for a, ap in itertools.permutations(A, 2) if len(A) >= 2 else ():
        for b, bp in itertools.permutations(B, 2) if len(B) >= 2 else ():
            if cyclically_ordered((a, b, ap, bp), g):
                return False
    return True


def test_cyclically_ordered_examples():
    assert cyclically_ordered((2, 3, 1), Ground(3))
    assert not cyclically_ordered((1, 3, 4, 2), Ground(4))
    assert cyclically_ordered((5, 1, 3), Ground(6))


def test_cyclically_ordered_oracle_small():
    # Against the all-rotations oracle, every sequence of distinct elements.
    g = Ground(5)
    for r in (1, 2, 3, 4):
        for seq in itertools.permutations(range(1, 6), r):
            expect = any(
                all(seq[(s + t) % r] < seq[(s + t + 1) % r] for t in range(r - 1))
                for s in range(r)
            )
            assert cyclically_ordered(seq, g) == expect, seq


def test_cyclically_ordered_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        cyclically_ordered((1, 1, 2), Ground(3))
    with pytest.raises(InvalidInputError):
        cyclically_ordered((0, 1), Ground(3))


def test_interval_members_examples():
    assert interval_members(CyclicInterval(3, 1, OPEN), Ground(4)).members == (4,)
    assert interval_members(CyclicInterval(2, 4, CLOSED), Ground(6)).members == (2, 3, 4)
    assert interval_members(CyclicInterval(2, 2, OPEN), Ground(5)).members == (1, 3, 4, 5)


def test_interval_conventions():
    g = Ground(6)
    # [a,b] = (a,b) plus both endpoints, for distinct endpoints.
    for a in g.elements():
        for b in g.elements():
            if a == b:
                continue
            open_iv = interval_members(CyclicInterval(a, b, OPEN), g)
            closed = interval_members(CyclicInterval(a, b, CLOSED), g)
            assert closed.mask == open_iv.mask | (1 << (a - 1)) | (1 << (b - 1))
            left = interval_members(CyclicInterval(a, b, HALF_OPEN_RIGHT), g)  # [a,b)
            right = interval_members(CyclicInterval(a, b, HALF_OPEN_LEFT), g)  # (a,b]
            assert left.mask == open_iv.mask | (1 << (a - 1))
            assert right.mask == open_iv.mask | (1 << (b - 1))
    assert interval_members(CyclicInterval(3, 3, CLOSED), g).members == (3,)
    # [a,a) covers everything.
    assert interval_members(CyclicInterval(3, 3, HALF_OPEN_RIGHT), g).size == 6


def test_weakly_separated_examples():
    g = Ground(4)
    assert not weakly_separated(Subset.of(g, {1, 3}), Subset.of(g, {2, 4}))
    assert weakly_separated(Subset.of(g, {1, 3}), Subset.of(g, {1, 3}))
    g6 = Ground(6)
    assert weakly_separated(Subset.of(g6, {1, 2, 3}), Subset.of(g6, {3, 4, 5}))


def test_weakly_separated_requires_equal_sizes():
    g = Ground(5)
    with pytest.raises(InvalidInputError):
        weakly_separated(Subset.of(g, {1}), Subset.of(g, {1, 2}))


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (6, 3), (7, 3), (8, 4)])
def test_weakly_separated_matches_brute_force(n, k):
    g = Ground(n)
    masks = subsets_of_size(n, k)
    for a in masks:
        for b in masks:
            I, J = Subset(g, a), Subset(g, b)
            assert weakly_separated(I, J) == brute_force_ws(I, J), (I, J)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_weakly_separated_symmetric_and_shift_invariant(n):
    g = Ground(n)
    k = n // 2
    masks = subsets_of_size(n, k)

    def rotate(mask: int) -> int:
        out = 0
        for x in range(1, n + 1):
            if mask >> (x - 1) & 1:
                out |= 1 << (x % n)
        return out

    for a in masks:
        for b in masks:
            ws = ws_masks(a, b, n)
            assert ws == ws_masks(b, a, n)
            assert ws == ws_masks(rotate(a), rotate(b), n)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_chord_equivalence(n):
    # Separated iff a chord splits the circle into two arcs, one per
    # difference.  The two half-open arcs [c,d) and [d,c) realize the chord;
    # fully open arcs would wrongly exclude pairs whose differences cover
    # the whole ground set.
    from plabic.cyclic import open_arc_mask

    def half_open(c, d):
        return open_arc_mask(c, d, n) | (1 << (c - 1))

    g = Ground(n)
    k = (n + 1) // 2
    masks = subsets_of_size(n, k)
    for a in masks:
        for b in masks:
            d1, d2 = a & ~b, b & ~a
            chord = any(
                not d1 & ~half_open(c, d) and not d2 & ~half_open(d, c)
                for c in range(1, n + 1)
                for d in range(1, n + 1)
                if c != d
            )
            if not d1 or not d2:
                chord = True
            assert chord == ws_masks(a, b, n), (a, b)


def test_shifted_leq_examples():
    g = Ground(5)
    I = Subset.of(g, {1, 2, 4})
    J = Subset.of(g, {2, 4, 5})
    assert shifted_leq(1, I, J)
    assert not shifted_leq(2, I, J)
    assert shifted_leq(3, J, J)


def test_shifted_leq_is_partial_order():
    g = Ground(5)
    masks = subsets_of_size(5, 2)
    for i in g.elements():
        for a in masks:
            A = Subset(g, a)
            assert shifted_leq(i, A, A)
            for b in masks:
                B = Subset(g, b)
                if shifted_leq(i, A, B) and shifted_leq(i, B, A):
                    assert a == b
                for c in masks:
                    C = Subset(g, c)
                    if shifted_leq(i, A, B) and shifted_leq(i, B, C):
                        assert shifted_leq(i, A, C)


def test_subset_basics():
    g = Ground(6)
    s = Subset.of(g, [3, 1, 5])
    assert s.members == (1, 3, 5)
    assert len(s) == 3 and 3 in s and 2 not in s
    assert s.with_element(2).members == (1, 2, 3, 5)
    assert s.without_element(3).members == (1, 5)
    with pytest.raises(InvalidInputError):
        Subset.of(g, [7])
    with pytest.raises(InvalidInputError):
        Ground(0)
    with pytest.raises(InvalidInputError):
        Ground(65)


def test_colex_order_is_mask_order():
    masks = subsets_of_size(5, 3)
    assert masks == sorted(masks)
    # Colex: the largest differing element decides.
    g = Ground(5)
    assert Subset.of(g, {1, 2, 3}).mask < Subset.of(g, {1, 2, 4}).mask < Subset.of(g, {3, 4, 5}).mask

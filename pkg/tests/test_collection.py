"""Weakly separated collections: validation, completion, mutations, enumeration."""

from __future__ import annotations


import pytest

from plabic.collection import (
    WSCollection,
    apply_mutation,
    enumerate_maximal,
    extend_to_maximal,
    is_maximal,
    mutation_sites,
    necklace_collection,
    positroid_hull,
    validate,
)
from plabic.cyclic import Ground, Subset, mask_members, mask_of, subsets_of_size, ws_masks
from plabic.errors import Budget, BudgetExceededError, InvalidInputError
from plabic.fixtures import hole_6_3_collection, uniform_8_3_collection
from plabic.positroid import (
    COLOOP,
    DecoratedPermutation,
    GrassmannNecklace,
    all_decorated_permutations,
    cyclic_run,
    decorated_to_necklace,
    direct_sum_split,
    uniform_necklace,
)


def pentagon() -> WSCollection:
    return WSCollection.build(
        Ground(4), [{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}], uniform_necklace(4, 2)
    )


def test_validate_examples():
    assert validate(uniform_8_3_collection()).ok

    g = Ground(4)
    bad = WSCollection.build(g, [{1, 3}, {2, 4}], check=False)
    report = validate(bad)
    assert len(report.violating_pairs) == 1
    pair = report.violating_pairs[0]
    assert {pair[0].members, pair[1].members} == {(1, 3), (2, 4)}

    nk = uniform_necklace(5, 2)
    assert validate(necklace_collection(nk), nk).ok


def test_validate_reports_anchor_problems():
    nk = GrassmannNecklace.of(5, [{1, 2, 4}, {2, 4, 5}, {3, 4, 5}, {4, 5, 2}, {5, 1, 2}])
    g = Ground(5)
    # {2,3,4} is outside this positroid; necklace entries are missing too.
    C = WSCollection.build(g, [{2, 3, 4}], check=False)
    report = validate(C, nk)
    assert [s.members for s in report.outside_positroid] == [(2, 3, 4)]
    assert report.missing_necklace


def test_is_maximal_examples():
    assert is_maximal(pentagon())
    nk = uniform_necklace(4, 2)
    assert not is_maximal(necklace_collection(nk))
    assert not is_maximal(hole_6_3_collection())
    with pytest.raises(InvalidInputError):
        is_maximal(WSCollection.build(Ground(4), [{1, 2}]))


def test_extend_to_maximal():
    completed = extend_to_maximal(hole_6_3_collection())
    added = set(completed.masks) - set(hole_6_3_collection().masks)
    assert added == {mask_of({1, 4, 5})}
    assert len(completed) == 10
    # Both 145 and 356 are compatible; colex first-fit picks 145.
    members = hole_6_3_collection().masks
    for candidate in ({1, 4, 5}, {3, 5, 6}):
        assert all(ws_masks(mask_of(candidate), m, 6) for m in members)
    assert mask_of({1, 4, 5}) < mask_of({3, 5, 6})

    assert extend_to_maximal(pentagon()).masks == pentagon().masks

    completed42 = extend_to_maximal(necklace_collection(uniform_necklace(4, 2)))
    assert len(completed42) == 5


def test_mutation_sites_examples():
    sites = mutation_sites(pentagon())
    assert len(sites) == 1
    site = sites[0]
    assert (site.S.members, site.a, site.b, site.c, site.d) == ((), 1, 2, 3, 4)
    assert site.removes.members == (1, 3)
    assert site.adds.members == (2, 4)

    assert mutation_sites(necklace_collection(uniform_necklace(4, 2))) == ()

    big = mutation_sites(uniform_8_3_collection())
    assert big
    for s in big:
        mutated = apply_mutation(uniform_8_3_collection(), s)
        assert is_maximal(mutated)


def test_apply_mutation():
    C = pentagon()
    site = mutation_sites(C)[0]
    mutated = apply_mutation(C, site)
    assert {tuple(mask_members(m)) for m in mutated.masks} == {
        (1, 2), (2, 3), (3, 4), (1, 4), (2, 4),
    }
    assert len(mutated) == len(C)
    back = apply_mutation(mutated, site.mirrored())
    assert back.masks == C.masks
    with pytest.raises(InvalidInputError):
        apply_mutation(mutated, site)  # site sets no longer present


def test_low_rank_collections_have_no_sites():
    nk = uniform_necklace(4, 1)
    C = extend_to_maximal(necklace_collection(nk))
    assert mutation_sites(C) == ()


@pytest.mark.parametrize("n,count", [(4, 2), (5, 5), (6, 14)])
def test_enumerate_maximal_modes_agree(n, count):
    closure = enumerate_maximal(uniform_necklace(n, 2), "closure")
    brute = enumerate_maximal(uniform_necklace(n, 2), "bruteforce")
    assert len(closure) == count
    assert [c.masks for c in closure] == [c.masks for c in brute]
    assert all(len(c) == 2 * (n - 2) + 1 for c in closure)


def test_enumerate_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_maximal(uniform_necklace(6, 3), "closure", Budget(3))


def test_enumerate_rejects_unknown_mode():
    with pytest.raises(InvalidInputError):
        enumerate_maximal(uniform_necklace(4, 2), "magic")


def test_scott_bound_and_mutation_invariants():
    for n, k in ((5, 2), (6, 3)):
        nk = uniform_necklace(n, k)
        bound = k * (n - k) + 1
        for C in enumerate_maximal(nk, "bruteforce"):
            assert len(C) <= bound
            assert validate(C, nk).ok
            for site in mutation_sites(C):
                mutated = apply_mutation(C, site)
                assert len(mutated) == len(C)
                assert mutated.anchor is nk
                assert validate(mutated, nk).ok
                assert is_maximal(mutated)


def test_positroid_hull_examples():
    assert len(positroid_hull(uniform_necklace(5, 2))) == 10

    coloops = DecoratedPermutation.of((1, 2, 3), {i: COLOOP for i in (1, 2, 3)})
    nk = decorated_to_necklace(coloops)
    assert [s.members for s in positroid_hull(nk)] == [(1, 2, 3)]

    section4 = GrassmannNecklace.of(5, [{1, 2, 4}, {2, 4, 5}, {3, 4, 5}, {4, 5, 2}, {5, 1, 2}])
    union = set()
    for C in enumerate_maximal(section4, "closure"):
        union |= set(C.masks)
    assert union == {s.mask for s in positroid_hull(section4)}


def _glue(anchor, i, j):
    """Direct-sum factorization oracle: product of component enumerations."""
    n = anchor.ground.n
    left, right = direct_sum_split(anchor, i, j)
    labels_left = cyclic_run(n, i, j)
    labels_right = cyclic_run(n, j, i)
    i_left = anchor.entries[i - 1].mask & mask_of(labels_left)
    i_right = anchor.entries[i - 1].mask & mask_of(labels_right)

    def unrelabel(mask, labels):
        out = 0
        for pos in mask_members(mask):
            out |= 1 << (labels[pos - 1] - 1)
        return out

    glued = set()
    for CL in enumerate_maximal(left, "bruteforce"):
        for CR in enumerate_maximal(right, "bruteforce"):
            members = {unrelabel(m, labels_left) | i_right for m in CL.masks}
            members |= {i_left | unrelabel(m, labels_right) for m in CR.masks}
            glued.add(tuple(sorted(members)))
    return glued


def test_direct_sum_factorization():
    for n in (4, 5, 6):
        for p in all_decorated_permutations(n):
            nk = decorated_to_necklace(p)
            masks = nk.masks
            split_at = None
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    if masks[i - 1] == masks[j - 1]:
                        split_at = (i, j)
                        break
                if split_at:
                    break
            if not split_at:
                continue
            whole = {c.masks for c in enumerate_maximal(nk, "bruteforce")}
            assert whole == _glue(nk, *split_at), (p.perm, p.colors)


def test_collection_canonical_order():
    C = pentagon()
    assert list(C.masks) == sorted(C.masks)
    assert C.sets[0].members == (1, 2)


def test_build_rejects_duplicates_and_mixed_sizes():
    g = Ground(4)
    with pytest.raises(InvalidInputError):
        WSCollection.build(g, [{1, 2}, {1, 2}])
    with pytest.raises(InvalidInputError):
        WSCollection.build(g, [{1, 2}, {1, 2, 3}])

"""One full pass over every decorated permutation of [6].

Checks, per anchor: the necklace bijection round trip, entries inside the
positroid and pairwise separated, length additivity over components,
connectivity criteria, purity, closure-equals-bruteforce, the dual-graph
round trip with its face count, and the exact area identity.  Shares one
enumeration per anchor to keep the sweep around a minute.
"""

from __future__ import annotations

from plabic.collection import enumerate_maximal
from plabic.cyclic import ws_masks
from plabic.graph import face_labels, trace_strands
from plabic.positroid import (
    Positroid,
    all_decorated_permutations,
    alignments_and_length,
    connected_components,
    decorated_to_necklace,
    necklace_to_decorated,
    positroid_contains,
)
from plabic.tiling import tiling_areas, tiling_to_plabic


def test_everything_at_n6():
    anchors = collections = 0
    for p in all_decorated_permutations(6):
        nk = decorated_to_necklace(p)
        q = necklace_to_decorated(nk)
        assert q.perm == p.perm and q.colors == p.colors

        pos = Positroid(nk)
        for entry in nk.entries:
            assert positroid_contains(pos, entry)
        for a in nk.masks:
            for b in nk.masks:
                assert ws_masks(a, b, 6)

        comps = connected_components(p)
        assert nk.is_connected() == comps.is_connected == (len(set(nk.masks)) == 6)
        _, ell = alignments_and_length(p, nk.k)
        assert ell == sum(
            alignments_and_length(sub, decorated_to_necklace(sub).k)[1]
            for sub in comps.component_perms
        )

        closure = enumerate_maximal(nk, "closure")
        brute = enumerate_maximal(nk, "bruteforce")
        assert [c.masks for c in closure] == [c.masks for c in brute], (p.perm, p.colors)
        for C in closure:
            assert len(C) == ell + 1, (p.perm, p.colors)
            G = tiling_to_plabic(C)
            labeling, rank = face_labels(G)
            assert labeling.label_set == frozenset(C.masks)
            assert rank == nk.k
            assert len(labeling.labels) == ell + 1
            trace = trace_strands(G)
            assert trace.permutation.perm == p.perm
            assert trace.permutation.colors == p.colors
            faces_area, curve_area = tiling_areas(C)
            assert faces_area == curve_area, (p.perm, p.colors)
            collections += 1
        anchors += 1
    assert anchors == 1957
    print(f"\nn=6 sweep: {anchors} anchors, {collections} maximal collections verified")

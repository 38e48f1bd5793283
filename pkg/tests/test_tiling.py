"""Plabic tilings: cliques, embedding certification, winding, graph duality."""

from __future__ import annotations

from fractions import Fraction

import pytest

from plabic.collection import WSCollection, enumerate_maximal
from plabic.cyclic import Ground, Subset, mask_of
from plabic.errors import EmbeddingViolation, InvalidInputError
from plabic.fixtures import (
    glued_10_5_collection,
    hole_6_3_collection,
    uniform_8_3_collection,
)
from plabic.geometry import signed_area
from plabic.graph import BLACK, WHITE, check_reduced, face_labels
from plabic.positroid import (
    GrassmannNecklace,
    all_decorated_permutations,
    decorated_to_necklace,
    necklace_to_decorated,
    uniform_necklace,
)
from plabic.tiling import (
    build_tiling,
    embed_tiling,
    inside_necklace_curve,
    necklace_curve,
    plabic_to_tiling,
    tiling_areas,
    tiling_to_plabic,
)

SECTION4_NECKLACE = [{1, 2, 4}, {2, 4, 5}, {3, 4, 5}, {4, 5, 2}, {5, 1, 2}]

SQUARE = (
    (Fraction(0), Fraction(1)),
    (Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(-1)),
    (Fraction(-1), Fraction(0)),
)


def pentagon() -> WSCollection:
    return WSCollection.build(
        Ground(4), [{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}], uniform_necklace(4, 2)
    )


def test_build_tiling_pentagon_faces():
    t = build_tiling(pentagon())
    by_core = {(f.color, f.core.members): [b.members for b in f.boundary] for f in t.faces}
    assert set(by_core) == {
        (WHITE, (1,)), (WHITE, (3,)), (BLACK, (1, 2, 3)), (BLACK, (1, 3, 4)),
    }
    # Every face is a triangle through the central vertex {1,3}.
    for cycle in by_core.values():
        assert len(cycle) == 3 and (1, 3) in cycle


def test_build_tiling_singleton():
    g = Ground(3)
    t = build_tiling(WSCollection.build(g, [{1, 2}]))
    assert t.faces == () and t.edges == () and len(t.vertices) == 1


def test_build_tiling_rejects_invalid():
    with pytest.raises(InvalidInputError):
        build_tiling(WSCollection.build(Ground(4), [{1, 3}, {2, 4}], check=False))


def test_embed_translation_property():
    # Moving from a member through a common core shifts by a polygon-vertex
    # difference: pi(Si) - pi(Sj) is a translate of v_i - v_j.
    C = uniform_8_3_collection()
    e = embed_tiling(build_tiling(C))
    poly = e.polygon
    s135 = e.point(Subset.of(C.ground, {1, 3, 5}))
    s136 = e.point(Subset.of(C.ground, {1, 3, 6}))
    diff = (s135[0] - s136[0], s135[1] - s136[1])
    assert diff == (poly[4][0] - poly[5][0], poly[4][1] - poly[5][1])


def test_embed_detects_coincident_points():
    g = Ground(4)
    bad = WSCollection.build(g, [{1, 3}, {2, 4}], check=False)
    t = build_tiling(bad, check=False)
    with pytest.raises(EmbeddingViolation):
        embed_tiling(t, polygon=SQUARE)


def test_embed_singleton():
    g = Ground(4)
    t = build_tiling(WSCollection.build(g, [{1, 2}]))
    e = embed_tiling(t, polygon=SQUARE)
    assert e.point(Subset.of(g, {1, 2})) == (Fraction(1), Fraction(1))


def test_embedding_certificate_across_enumerations():
    for n, k in ((5, 2), (6, 3), (8, 3)):
        nk = uniform_necklace(n, k)
        sample = enumerate_maximal(nk, "closure")[:6]
        for C in sample:
            embed_tiling(build_tiling(C))  # raises unless certified


def test_winding_examples():
    u52 = uniform_necklace(5, 2)
    g5 = Ground(5)
    assert inside_necklace_curve(u52, Subset.of(g5, {1, 3}))
    assert inside_necklace_curve(u52, Subset.of(g5, {2, 4}))

    # Connected 5-element anchor with a non-member candidate.
    nk = decorated_to_necklace(necklace_to_decorated(
        GrassmannNecklace.of(5, [{1, 2, 4}, {2, 3, 4}, {3, 4, 5}, {4, 5, 1}, {5, 1, 2}])))
    g = nk.ground
    from plabic.positroid import Positroid, positroid_bases

    members = {b.mask for b in positroid_bases(Positroid(nk))}
    assert mask_of({1, 2, 3}) not in members
    assert not inside_necklace_curve(nk, Subset.of(g, {1, 2, 3}))
    assert inside_necklace_curve(nk, Subset.of(g, {1, 3, 4}))


def test_winding_preconditions():
    section4 = GrassmannNecklace.of(5, SECTION4_NECKLACE)
    g = Ground(5)
    with pytest.raises(InvalidInputError):  # disconnected anchor
        inside_necklace_curve(section4, Subset.of(g, {1, 3, 5}))
    u52 = uniform_necklace(5, 2)
    with pytest.raises(InvalidInputError):  # necklace entry itself
        inside_necklace_curve(u52, Subset.of(g, {1, 2}))
    nk = GrassmannNecklace.of(4, [{1, 3}, {2, 3}, {3, 4}, {4, 1}])
    g4 = Ground(4)
    with pytest.raises(InvalidInputError):  # not weakly separated from entries
        inside_necklace_curve(nk, Subset.of(g4, {2, 4}))


def test_necklace_curve_closes():
    curve = necklace_curve(uniform_necklace(6, 2))
    assert len(curve) == 6
    assert abs(signed_area(curve)) > 0


def test_tiling_to_plabic_examples():
    G = tiling_to_plabic(pentagon())
    assert len(G.colors) == 4
    assert check_reduced(G).reduced
    labeling, _ = face_labels(G)
    assert labeling.label_set == frozenset(pentagon().masks)

    G16 = tiling_to_plabic(uniform_8_3_collection())
    assert face_labels(G16)[0].label_set == frozenset(uniform_8_3_collection().masks)

    G10 = tiling_to_plabic(glued_10_5_collection())
    assert face_labels(G10)[0].label_set == frozenset(glued_10_5_collection().masks)


def test_tiling_to_plabic_rejects_non_maximal():
    with pytest.raises(InvalidInputError):
        tiling_to_plabic(hole_6_3_collection())
    with pytest.raises(InvalidInputError):
        tiling_to_plabic(WSCollection.build(Ground(4), [{1, 2}]))


def test_plabic_to_tiling_round_trip():
    t = plabic_to_tiling(tiling_to_plabic(pentagon()))
    assert frozenset(s.mask for s in t.vertices) == frozenset(pentagon().masks)

    for n in (4, 5):
        for p in all_decorated_permutations(n):
            nk = decorated_to_necklace(p)
            for C in enumerate_maximal(nk, "closure"):
                t = plabic_to_tiling(tiling_to_plabic(C))
                assert frozenset(s.mask for s in t.vertices) == frozenset(C.masks)


def test_disk_filling_area_identity():
    for p in all_decorated_permutations(4):
        nk = decorated_to_necklace(p)
        if not nk.is_connected():
            continue
        for C in enumerate_maximal(nk, "closure"):
            faces_area, curve_area = tiling_areas(C)
            assert faces_area == curve_area, (p.perm, p.colors)


def test_hole_area_deficit():
    C = hole_6_3_collection()
    faces_area, curve_area = tiling_areas(C)
    deficit = curve_area - faces_area
    assert deficit > 0
    # The hole is exactly the quadrilateral spanned by 345, 135, 156, 456.
    e = embed_tiling(build_tiling(C))
    quad = tuple(
        e.coord_map[mask_of(s)] for s in ({3, 4, 5}, {1, 3, 5}, {1, 5, 6}, {4, 5, 6})
    )
    assert deficit == abs(signed_area(quad))
    from plabic.collection import extend_to_maximal

    completed = extend_to_maximal(C)
    faces2, curve2 = tiling_areas(completed)
    assert faces2 == curve2

"""Weakly separated collections inside a positroid: validation, completion,
mutations, enumeration, and the alignment hull."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cyclic import Ground, Subset, mask_members, open_arc_mask, ws_masks
from .errors import Budget, InvalidInputError
from .positroid import (
    GrassmannNecklace,
    Positroid,
    alignments_and_length,
    necklace_to_decorated,
    positroid_bases,
)


@dataclass(frozen=True)
class WSCollection:
    """A pairwise weakly separated family of k-subsets, optionally anchored
    to a Grassmann necklace whose positroid must contain it.

    The member list is kept in colexicographic order (numeric mask order),
    which is the canonical form used for equality and deduplication.
    """

    ground: Ground
    k: int
    masks: tuple[int, ...]
    anchor: GrassmannNecklace | None = None

    @classmethod
    def build(cls, ground: Ground, sets, anchor: GrassmannNecklace | None = None,
              check: bool = True) -> "WSCollection":
        items = list(sets)
        masks = []
        for s in items:
            if isinstance(s, Subset):
                if s.ground != ground:
                    raise InvalidInputError("member subset on a different ground set")
                masks.append(s.mask)
            else:
                masks.append(Subset.of(ground, s).mask)
        masks = tuple(sorted(set(masks)))
        if len(masks) != len(items):
            raise InvalidInputError("duplicate member sets")
        if not masks:
            raise InvalidInputError("a collection needs at least one member")
        k = masks[0].bit_count()
        coll = cls(ground, k, masks, anchor)
        if check:
            report = validate(coll, anchor)
            if not report.ok:
                raise InvalidInputError(f"invalid collection: {report.summary()}")
        return coll

    @property
    def sets(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.ground, m) for m in self.masks)

    @property
    def size(self) -> int:
        return len(self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, s: Subset) -> bool:
        return s.ground == self.ground and s.mask in set(self.masks)

    def with_anchor(self, anchor: GrassmannNecklace) -> "WSCollection":
        return WSCollection(self.ground, self.k, self.masks, anchor)


@dataclass(frozen=True)
class MutationSite:
    """A pentagon pattern Sab, Sbc, Scd, Sda, Sac inside a collection.

    Applying the site removes Sac and inserts Sbd; a, b, c, d are
    cyclically ordered elements outside S.
    """

    S: Subset
    a: int
    b: int
    c: int
    d: int

    @property
    def removes(self) -> Subset:
        return Subset(self.S.ground, self.S.mask | _bit(self.a) | _bit(self.c))

    @property
    def adds(self) -> Subset:
        return Subset(self.S.ground, self.S.mask | _bit(self.b) | _bit(self.d))

    def mirrored(self) -> "MutationSite":
        """The site that undoes this one on the mutated collection."""
        return MutationSite(self.S, self.b, self.c, self.d, self.a)


def _bit(x: int) -> int:
    return 1 << (x - 1)


@dataclass(frozen=True)
class ValidationReport:
    violating_pairs: tuple[tuple[Subset, Subset], ...]
    outside_positroid: tuple[Subset, ...]
    missing_necklace: tuple[Subset, ...]
    size_mismatches: tuple[Subset, ...] = ()

    @property
    def ok(self) -> bool:
        return not (self.violating_pairs or self.outside_positroid
                    or self.missing_necklace or self.size_mismatches)

    def summary(self) -> str:
        parts = []
        for I, J in self.violating_pairs:
            parts.append(f"not weakly separated: {set(I.members)} | {set(J.members)}")
        for s in self.size_mismatches:
            parts.append(f"wrong cardinality: {set(s.members)}")
        for s in self.outside_positroid:
            parts.append(f"outside the positroid: {set(s.members)}")
        for s in self.missing_necklace:
            parts.append(f"missing necklace entry: {set(s.members)}")
        return "; ".join(parts) if parts else "ok"


def validate(C: WSCollection, anchor: GrassmannNecklace | None = None) -> ValidationReport:
    """Check pairwise weak separation and, when anchored, containment between
    the necklace and its positroid.  Violations are reported, not raised."""
    n = C.ground.n
    anchor = anchor or C.anchor
    bad_sizes = tuple(Subset(C.ground, m) for m in C.masks if m.bit_count() != C.k)
    pairs = []
    for i, a in enumerate(C.masks):
        for b in C.masks[i + 1:]:
            if a.bit_count() == b.bit_count() and not ws_masks(a, b, n):
                pairs.append((Subset(C.ground, a), Subset(C.ground, b)))
    outside: list[Subset] = []
    missing: list[Subset] = []
    if anchor is not None:
        if anchor.ground != C.ground or anchor.k != C.k:
            raise InvalidInputError("anchor does not match the collection's ground set and k")
        member_masks = set(C.masks)
        base_masks = {s.mask for s in positroid_bases(Positroid(anchor))}
        outside = [Subset(C.ground, m) for m in C.masks if m not in base_masks]
        missing = [e for e in anchor.entries if e.mask not in member_masks]
        seen = set()
        missing = [s for s in missing if not (s.mask in seen or seen.add(s.mask))]
    return ValidationReport(tuple(pairs), tuple(outside), tuple(missing), bad_sizes)


def necklace_collection(anchor: GrassmannNecklace) -> WSCollection:
    """The necklace itself as an anchored collection."""
    return WSCollection.build(anchor.ground, set(anchor.entries), anchor)


def _require_anchor(C: WSCollection) -> GrassmannNecklace:
    if C.anchor is None:
        raise InvalidInputError("operation requires an anchored collection")
    return C.anchor


def _hull_masks(anchor: GrassmannNecklace) -> list[int]:
    """Members of the positroid weakly separated from every necklace entry."""
    n = anchor.ground.n
    entry_masks = anchor.masks
    out = []
    for b in positroid_bases(Positroid(anchor)):
        if all(ws_masks(b.mask, e, n) for e in entry_masks):
            out.append(b.mask)
    return out


def is_maximal(C: WSCollection) -> bool:
    """No further positroid member is weakly separated from the whole collection."""
    anchor = _require_anchor(C)
    n = C.ground.n
    members = set(C.masks)
    for cand in _hull_masks(anchor):
        if cand in members:
            continue
        if all(ws_masks(cand, m, n) for m in C.masks):
            return False
    return True


def extend_to_maximal(C: WSCollection) -> WSCollection:
    """Greedy completion: repeatedly add the colexicographically first
    compatible positroid member.  Deterministic by construction."""
    anchor = _require_anchor(C)
    n = C.ground.n
    members = set(C.masks)
    candidates = [m for m in _hull_masks(anchor) if m not in members]
    grew = True
    while grew:
        grew = False
        for cand in candidates:
            if cand in members:
                continue
            if all(ws_masks(cand, m, n) for m in members):
                members.add(cand)
                grew = True
                break
    return WSCollection(C.ground, C.k, tuple(sorted(members)), anchor)


def _sites_of_masks(masks: frozenset[int] | set[int], n: int, arcs) -> list[tuple]:
    """All pentagon sites in a set of k-subset masks.

    Returns tuples (S_mask, a, b, c, d, removed_mask, added_mask), one per
    site, with a < c and b in (a,c), d in (c,a).
    """
    sites = []
    member = masks if isinstance(masks, (set, frozenset)) else set(masks)
    for X in member:
        elems = mask_members(X)
        for ai in range(len(elems)):
            for ci in range(ai + 1, len(elems)):
                a, c = elems[ai], elems[ci]
                S = X & ~_bit(a) & ~_bit(c)
                bs = []
                rest = arcs[a][c] & ~S
                for b in mask_members(rest):
                    if (S | _bit(a) | _bit(b)) in member and (S | _bit(b) | _bit(c)) in member:
                        bs.append(b)
                if not bs:
                    continue
                for d in mask_members(arcs[c][a] & ~S):
                    if (S | _bit(c) | _bit(d)) in member and (S | _bit(d) | _bit(a)) in member:
                        for b in bs:
                            sites.append((S, a, b, c, d, X, S | _bit(b) | _bit(d)))
    sites.sort(key=lambda t: (t[5], t[0], t[1], t[2], t[3], t[4]))
    return sites


def _arc_table(n: int):
    return [[0] * (n + 1)] + [
        [0] + [open_arc_mask(a, b, n) for b in range(1, n + 1)] for a in range(1, n + 1)
    ]


def mutation_sites(C: WSCollection) -> tuple[MutationSite, ...]:
    """Every pentagon pattern of C, each reported once with its removable set."""
    if C.k < 2:
        return ()
    n = C.ground.n
    arcs = _arc_table(n)
    raw = _sites_of_masks(set(C.masks), n, arcs)
    return tuple(MutationSite(Subset(C.ground, s), a, b, c, d) for s, a, b, c, d, _, _ in raw)


def apply_mutation(C: WSCollection, site: MutationSite) -> WSCollection:
    """Exchange the site's removable set for its replacement."""
    members = set(C.masks)
    needed = [
        site.S.mask | _bit(site.a) | _bit(site.b),
        site.S.mask | _bit(site.b) | _bit(site.c),
        site.S.mask | _bit(site.c) | _bit(site.d),
        site.S.mask | _bit(site.d) | _bit(site.a),
        site.removes.mask,
    ]
    for m in needed:
        if m not in members:
            raise InvalidInputError(f"site sets not all present: missing {mask_members(m)}")
    added = site.adds.mask
    if added in members:
        raise InvalidInputError("replacement set already present; corrupted input collection")
    members.discard(site.removes.mask)
    members.add(added)
    return WSCollection(C.ground, C.k, tuple(sorted(members)), C.anchor)


def _closure_masks(anchor: GrassmannNecklace, budget: Budget) -> list[tuple[int, ...]]:
    """All maximal collections reachable from the greedy completion by mutations."""
    n = anchor.ground.n
    arcs = _arc_table(n)
    start = frozenset(extend_to_maximal(necklace_collection(anchor)).masks)
    seen = {start}
    order: list[frozenset[int]] = [start]
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        budget.charge()
        for _, _, _, _, _, removed, added in _sites_of_masks(cur, n, arcs):
            nxt = cur - {removed} | {added}
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return sorted(tuple(sorted(s)) for s in order)


def _bruteforce_masks(anchor: GrassmannNecklace, budget: Budget) -> list[tuple[int, ...]]:
    """All maximal anchored collections by backtracking over compatible members."""
    n = anchor.ground.n
    required = sorted(set(anchor.masks))
    hull = _hull_masks(anchor)
    candidates = [m for m in hull if m not in set(required)]
    compat = {
        m: frozenset(x for x in candidates if x != m and ws_masks(m, x, n))
        for m in candidates
    }

    results: list[tuple[int, ...]] = []

    def expand(clique: set[int], allowed: frozenset[int], excluded: frozenset[int]) -> None:
        budget.charge()
        if not allowed and not excluded:
            results.append(tuple(sorted(set(required) | clique)))
            return
        pivot_pool = allowed | excluded
        pivot = max(pivot_pool, key=lambda v: len(compat[v] & allowed))
        for v in sorted(allowed - compat[pivot]):
            expand(clique | {v}, allowed & compat[v], excluded & compat[v])
            allowed = allowed - {v}
            excluded = excluded | {v}

    start_allowed = frozenset(candidates)
    expand(set(), start_allowed, frozenset())
    return sorted(results)


def enumerate_maximal(anchor: GrassmannNecklace, mode: str = "closure",
                      budget: Budget | None = None) -> tuple[WSCollection, ...]:
    """All maximal weakly separated collections inside the anchored positroid.

    Closure mode breadth-first-closes the greedy completion under mutations;
    bruteforce mode backtracks over all anchored collections.  Both return
    the same canonically sorted list.
    """
    budget = budget or Budget()
    if mode == "closure":
        masks = _closure_masks(anchor, budget)
    elif mode == "bruteforce":
        masks = _bruteforce_masks(anchor, budget)
    else:
        raise InvalidInputError(f"unknown enumeration mode {mode!r}")
    return tuple(WSCollection(anchor.ground, anchor.k, m, anchor) for m in masks)


def positroid_hull(anchor: GrassmannNecklace) -> tuple[Subset, ...]:
    """Members of the positroid that occur in some maximal collection.

    Computed by the alignment filter: J survives when, for every aligned
    ordered pair (i, j) of the decorated permutation, the image of i lying
    in J forces the image of j into J.
    """
    p = necklace_to_decorated(anchor)
    pairs, _ = alignments_and_length(p, anchor.k)
    implications = [(_bit(p.apply(i)), _bit(p.apply(j))) for i, j in pairs]
    out = []
    for b in positroid_bases(Positroid(anchor)):
        if all(not b.mask & pre or b.mask & post for pre, post in implications):
            out.append(b)
    return tuple(out)

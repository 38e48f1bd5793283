"""Desk-scale exhaustive verification runs shared by the CLI and the test suite.

Each function sweeps a finite family of inputs, cross-checks independent
computations, and returns a report; nothing here tolerates approximation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .collection import enumerate_maximal, extend_to_maximal, positroid_hull
from .cyclic import Subset, subsets_of_size, ws_masks
from .fixtures import hole_6_3_collection
from .graph import check_reduced, face_labels, trace_strands
from .lz import all_permutations, verify_lz_purity
from .positroid import (
    all_decorated_permutations,
    alignments_and_length,
    connected_components,
    decorated_to_necklace,
    uniform_necklace,
)
from .tiling import inside_necklace_curve, tiling_areas, tiling_to_plabic
from .positroid import Positroid, positroid_bases

# Deterministic extra anchors at n=6: a spread of connected, disconnected,
# and decorated shapes used where full n=6 sweeps would be slow.
CANNED_N6_PERMS: tuple[tuple[tuple[int, ...], dict[int, int]], ...] = (
    ((3, 4, 5, 6, 1, 2), {}),
    ((4, 5, 6, 1, 2, 3), {}),
    ((2, 3, 1, 5, 6, 4), {}),
    ((6, 5, 4, 3, 2, 1), {}),
    ((2, 1, 4, 3, 6, 5), {}),
    ((4, 3, 6, 5, 2, 1), {}),
    ((5, 4, 3, 6, 1, 2), {3: 1}),
    ((5, 4, 3, 6, 1, 2), {3: -1}),
    ((6, 4, 2, 5, 3, 1), {}),
    ((1, 3, 4, 5, 6, 2), {1: 1}),
    ((1, 3, 4, 5, 6, 2), {1: -1}),
    ((2, 1, 3, 5, 6, 4), {3: 1}),
    ((2, 1, 3, 5, 6, 4), {3: -1}),
    ((1, 2, 3, 4, 5, 6), {1: 1, 2: 1, 3: -1, 4: 1, 5: -1, 6: -1}),
    ((3, 2, 5, 4, 1, 6), {2: 1, 4: -1, 6: 1}),
)


@dataclass
class VerifyReport:
    name: str
    passed: bool = True
    details: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def note(self, msg: str) -> None:
        self.details.append(msg)

    def fail(self, msg: str) -> None:
        self.passed = False
        self.failures.append(msg)

    def render(self) -> str:
        head = f"[{'PASS' if self.passed else 'FAIL'}] {self.name} ({self.seconds:.1f}s)"
        lines = [head] + [f"  {d}" for d in self.details] + [f"  !! {f}" for f in self.failures]
        return "\n".join(lines)

    def to_doc(self) -> dict:
        return {
            "version": "1",
            "kind": "report",
            "name": self.name,
            "passed": self.passed,
            "details": list(self.details),
            "failures": list(self.failures),
            "seconds": round(self.seconds, 3),
        }


def _timed(fn):
    def wrapper(*args, **kwargs) -> VerifyReport:
        t0 = time.time()
        report = fn(*args, **kwargs)
        report.seconds = time.time() - t0
        return report

    return wrapper


@_timed
def verify_uniform_purity(pairs=((4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (8, 3), (8, 4))) -> VerifyReport:
    """Closure enumeration over uniform anchors: every maximal collection has
    k(n-k)+1 members."""
    report = VerifyReport("purity (uniform anchors)")
    for n, k in pairs:
        collections = enumerate_maximal(uniform_necklace(n, k), "closure")
        expected = k * (n - k) + 1
        sizes = {len(c) for c in collections}
        if sizes == {expected}:
            report.note(f"(n={n}, k={k}): {len(collections)} collections, all of size {expected}")
        else:
            report.fail(f"(n={n}, k={k}): sizes {sorted(sizes)} != {{{expected}}}")
    return report


@_timed
def verify_k2_counts() -> VerifyReport:
    """Maximal collection counts for k=2 equal the polygon triangulation
    numbers; closure and brute force agree up to n=6."""
    report = VerifyReport("enumeration counts (k=2)")
    catalan = {4: 2, 5: 5, 6: 14, 7: 42}
    for n, expected in catalan.items():
        closure = enumerate_maximal(uniform_necklace(n, 2), "closure")
        if len(closure) != expected:
            report.fail(f"n={n}: closure found {len(closure)}, expected {expected}")
            continue
        if n <= 6:
            brute = enumerate_maximal(uniform_necklace(n, 2), "bruteforce")
            if [c.masks for c in closure] != [c.masks for c in brute]:
                report.fail(f"n={n}: closure and brute force disagree")
                continue
            report.note(f"n={n}: {expected} collections, closure == bruteforce")
        else:
            report.note(f"n={n}: {expected} collections (closure)")
    return report


def _canned_n6():
    from .positroid import DecoratedPermutation

    return [DecoratedPermutation.of(perm, colors) for perm, colors in CANNED_N6_PERMS]


@_timed
def verify_positroid_purity(n_max: int = 5, include_duality: bool = True) -> VerifyReport:
    """Sweep all decorated permutations up to n_max plus the canned n=6
    sample: purity, mutation connectedness, and (optionally) the dual-graph
    round trip with its face count."""
    report = VerifyReport("positroid purity, connectedness, duality")
    anchors = 0
    graphs = 0
    perms = []
    for n in range(1, n_max + 1):
        perms.extend(all_decorated_permutations(n))
    perms.extend(_canned_n6())
    for p in perms:
        nk = decorated_to_necklace(p)
        _, ell = alignments_and_length(p, nk.k)
        closure = enumerate_maximal(nk, "closure")
        bad = [len(c) for c in closure if len(c) != ell + 1]
        if bad:
            report.fail(f"perm {p.perm} colors {p.colors}: sizes {bad} != {ell + 1}")
            continue
        if p.ground.n <= n_max:
            brute = enumerate_maximal(nk, "bruteforce")
            if [c.masks for c in closure] != [c.masks for c in brute]:
                report.fail(
                    f"perm {p.perm} colors {p.colors}: mutation closure misses collections"
                )
                continue
        if include_duality:
            for C in closure:
                G = tiling_to_plabic(C)
                verdict = check_reduced(G)
                labeling, rank = face_labels(G)
                trace = trace_strands(G)
                ok = (
                    verdict.reduced
                    and labeling.label_set == frozenset(C.masks)
                    and trace.permutation.perm == p.perm
                    and trace.permutation.colors == p.colors
                    and len(labeling.labels) == ell + 1
                    and rank == nk.k
                )
                if not ok:
                    report.fail(f"duality failed for perm {p.perm} colors {p.colors}")
                    break
                graphs += 1
        anchors += 1
    report.note(f"{anchors} anchors checked" + (f", {graphs} dual graphs verified" if include_duality else ""))
    return report


@_timed
def verify_winding(n_max: int = 6) -> VerifyReport:
    """Winding-number membership agrees with the termwise order for every
    connected necklace and admissible candidate."""
    report = VerifyReport("winding == membership")
    anchors = candidates = 0
    for n in range(3, n_max + 1):
        for p in all_decorated_permutations(n):
            nk = decorated_to_necklace(p)
            if not nk.is_connected():
                continue
            base_masks = {b.mask for b in positroid_bases(Positroid(nk))}
            entry_masks = set(nk.masks)
            anchors += 1
            for m in subsets_of_size(n, nk.k):
                if m in entry_masks:
                    continue
                if not all(ws_masks(m, e, n) for e in nk.masks):
                    continue
                J = Subset(nk.ground, m)
                geometric = inside_necklace_curve(nk, J)
                ordered = m in base_masks
                if geometric != ordered:
                    report.fail(f"perm {p.perm}: J={J.members} winding {geometric} vs {ordered}")
                candidates += 1
    report.note(f"{anchors} connected anchors, {candidates} candidates")
    return report


@_timed
def verify_hull(n_max: int = 5) -> VerifyReport:
    """The alignment-filtered positroid equals the union of all maximal
    collections, for every connected decorated permutation."""
    report = VerifyReport("alignment hull == union of face labels")
    anchors = 0
    for n in range(1, n_max + 1):
        for p in all_decorated_permutations(n):
            if not connected_components(p).is_connected:
                continue
            nk = decorated_to_necklace(p)
            union: set[int] = set()
            for C in enumerate_maximal(nk, "closure"):
                union |= set(C.masks)
            hull = {s.mask for s in positroid_hull(nk)}
            if union != hull:
                report.fail(f"perm {p.perm} colors {p.colors}: hull mismatch")
            anchors += 1
    report.note(f"{anchors} connected anchors")
    return report


@_timed
def verify_lz(ms=(3, 4)) -> VerifyReport:
    """Chamber purity and the padding bijection for all permutations of the
    given sizes."""
    report = VerifyReport("chamber purity and padding bijection")
    for m in ms:
        for ctx in all_permutations(m):
            lz_report = verify_lz_purity(ctx)
            if not lz_report.ok:
                report.fail(
                    f"w={ctx.w}: sizes_ok={lz_report.sizes_ok} "
                    f"bijection_ok={lz_report.padding_bijection_ok}"
                )
        report.note(f"all {len(all_permutations(m))} permutations of S_{m} verified")
    return report


@_timed
def verify_hole() -> VerifyReport:
    """The shipped 9-member collection leaves a hole of positive area that
    greedy completion closes exactly."""
    report = VerifyReport("non-maximal hole detection")
    C = hole_6_3_collection()
    faces_area, curve_area = tiling_areas(C)
    deficit = curve_area - faces_area
    if deficit <= 0:
        report.fail(f"expected a positive deficit, got {deficit}")
    else:
        report.note(f"deficit of the 9-member collection: {deficit} (> 0)")
    completed = extend_to_maximal(C)
    faces2, curve2 = tiling_areas(completed)
    if faces2 != curve2:
        report.fail(f"completion leaves deficit {curve2 - faces2}")
    else:
        report.note(f"completion to {len(completed)} members fills the disk exactly")
    return report


@_timed
def verify_connectedness(n_max: int = 5) -> VerifyReport:
    """Closure equals brute force (the mutation graph is connected) for all
    decorated permutations up to n_max."""
    report = VerifyReport("mutation connectedness")
    anchors = 0
    for n in range(1, n_max + 1):
        for p in all_decorated_permutations(n):
            nk = decorated_to_necklace(p)
            closure = enumerate_maximal(nk, "closure")
            brute = enumerate_maximal(nk, "bruteforce")
            if [c.masks for c in closure] != [c.masks for c in brute]:
                report.fail(f"perm {p.perm} colors {p.colors}")
            anchors += 1
    report.note(f"{anchors} anchors: closure == bruteforce everywhere")
    return report


VERIFIERS = {
    "purity": verify_uniform_purity,
    "counts": verify_k2_counts,
    "connectedness": verify_connectedness,
    "positroid": verify_positroid_purity,
    "winding": verify_winding,
    "duality": verify_positroid_purity,
    "hull": verify_hull,
    "lz": verify_lz,
    "hole": verify_hole,
}

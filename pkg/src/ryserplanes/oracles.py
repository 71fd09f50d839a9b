"""Exhaustive blocking-set searches at small plane order.

These confirm, by direct enumeration, the incidence facts the hypergraph
builds lean on: the minimum blocker of all lines is a line, size-(q+1)
blockers of a conic's tangents and secants fall into three shapes, and the
smallest blocker containing no full line sits at q + sqrt(q) + 1 (square q,
Baer subplanes) or 3(q+1)/2 (prime q).
"""

from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from .errors import NotOddPrime, SearchTooLarge
from .geometry import (
    ProjectivePlane,
    baer_closure,
    classify_line,
    conic_canonical,
    is_arc,
    plane_build,
)
from .gf import _prime_power


@dataclass(frozen=True)
class BlockerReport:
    q: int
    target: str  # all_lines | tangent_secant | nontrivial
    minimum: int
    count: int
    blockers: tuple  # ascending point-id tuples, lexicographically sorted
    classes: tuple  # one label per blocker


def blocks_all(plane: ProjectivePlane, pts, line_ids) -> bool:
    s = set(pts)
    return all(set(plane.lines[lid].points) & s for lid in line_ids)


def is_minimal_blocker(plane: ProjectivePlane, pts, line_ids) -> bool:
    s = set(pts)
    if not blocks_all(plane, s, line_ids):
        return False
    return all(not blocks_all(plane, s - {p}, line_ids) for p in s)


def _minimal_blockers(plane, line_ids, budget):
    """Every minimal blocker of the line family with at most budget points.

    Branches on the first unblocked line; inside a branch node the earlier
    points of that line are forbidden downstream, so each set is built along
    one canonical path.  Output sets need not be minimal and are filtered.
    """
    masks = []
    pts_of = []
    for lid in line_ids:
        pts = sorted(plane.lines[lid].points)
        m = 0
        for p in pts:
            m |= 1 << p
        masks.append(m)
        pts_of.append(pts)
    through = {}
    for m in masks:
        mm = m
        while mm:
            b = mm & -mm
            through[b] = through.get(b, 0) + 1
            mm &= ~b
    max_through = max(through.values())
    found = set()

    def dfs(chosen, size, forbidden):
        first = -1
        unblocked = 0
        for i, m in enumerate(masks):
            if m & chosen == 0:
                unblocked += 1
                if first < 0:
                    first = i
        if first < 0:
            found.add(chosen)
            return
        rem = budget - size
        # each added point blocks at most max_through family lines
        if rem <= 0 or -(-unblocked // max_through) > rem:
            return
        fb = forbidden
        for p in pts_of[first]:
            pb = 1 << p
            if not fb & pb:
                dfs(chosen | pb, size + 1, fb)
            fb |= pb

    dfs(0, 0, 0)
    out = []
    for ch in found:
        private = 0
        for m in masks:
            inter = m & ch
            if inter & (inter - 1) == 0:
                private |= inter
        if private == ch:
            out.append(tuple(_mask_points(ch)))
    return sorted(out)


def _mask_points(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask &= ~b


def _subgroup_size(q: int, n: int, d: int) -> bool:
    # d must be the order of a non-trivial subgroup: the group of order n is
    # cyclic for n in {q-1, q+1} and elementary abelian of order q = p^k
    if d < 2:
        return False
    if n == q:
        p, _ = _prime_power(q)
        while d % p == 0:
            d //= p
        return d == 1
    if n in (q - 1, q + 1):
        return n % d == 0
    return False


def _classify(plane, conic, pts) -> str:
    fs = frozenset(pts)
    if fs in plane._line_sets:
        return "line"
    cset = frozenset(conic.points)
    q = plane.q
    if fs == cset:
        return "conic"
    if len(fs) == q + 1:
        s1 = cset - fs
        s2 = fs - cset
        if s1 and len(s1) == len(s2):
            for line in plane.lines:
                lset = frozenset(line.points)
                if s2 <= lset - cset and not s1 & lset:
                    if _subgroup_size(q, len(cset - lset), len(s1)):
                        return "conic_swap"
    root = isqrt(q)
    if root * root == q and root > 1 and len(fs) == q + root + 1:
        for quad in combinations(sorted(fs), 4):
            if is_arc(plane, quad) and baer_closure(plane, quad) == fs:
                return "baer_subplane"
    return "other"


def min_blocking_sets(q: int) -> BlockerReport:
    """Minimum blockers of every line; the floor is q+1, reached by lines."""
    if q > 5:
        raise SearchTooLarge(f"all-lines blocker search is capped at q = 5, got {q}")
    plane = plane_build(q)
    line_ids = range(len(plane.lines))
    blockers = _minimal_blockers(plane, line_ids, q + 1)
    minimum = min(len(b) for b in blockers)
    at_min = [b for b in blockers if len(b) == minimum]
    conic = conic_canonical(plane)
    classes = tuple(_classify(plane, conic, b) for b in at_min)
    return BlockerReport(q, "all_lines", minimum, len(at_min), tuple(at_min), classes)


def classify_conic_blockers(q: int) -> BlockerReport:
    """Shapes of every size-(q+1) blocker of the conic's tangents and secants."""
    pk = _prime_power(q)
    if pk is None or pk[1] != 1 or q == 2:
        raise NotOddPrime(f"conic blocker classification needs an odd prime, got {q}")
    if q > 5:
        raise SearchTooLarge(f"conic blocker search is capped at q = 5, got {q}")
    plane = plane_build(q)
    conic = conic_canonical(plane)
    fam = [
        line.id
        for line in plane.lines
        if classify_line(conic, line) in ("tangent", "secant")
    ]
    minimal = _minimal_blockers(plane, fam, q + 1)
    npts = len(plane.points)
    seen = set()
    for b in minimal:
        rest = [p for p in range(npts) if p not in b]
        for extra in combinations(rest, q + 1 - len(b)):
            seen.add(tuple(sorted(b + extra)))
    blockers = sorted(seen)
    classes = tuple(_classify(plane, conic, b) for b in blockers)
    return BlockerReport(q, "tangent_secant", q + 1, len(blockers), tuple(blockers), classes)


def min_nontrivial_blocking(q: int) -> BlockerReport:
    """Smallest blocker of all lines that contains no full line.

    A minimal blocker containing a line is that line (a line alone already
    blocks everything), so the nontrivial ones are exactly the minimal
    non-line blockers; the budget deepens until one appears.
    """
    if q not in (3, 4, 5):
        raise SearchTooLarge(f"nontrivial blocker search runs for q in 3..5, got {q}")
    plane = plane_build(q)
    line_ids = range(len(plane.lines))
    conic = conic_canonical(plane)
    budget = q + 2
    while True:
        blockers = _minimal_blockers(plane, line_ids, budget)
        nontrivial = [b for b in blockers if frozenset(b) not in plane._line_sets]
        if nontrivial:
            break
        budget += 1
        assert budget <= 3 * (q + 1), "deepening ran past every known bound"
    minimum = min(len(b) for b in nontrivial)
    at_min = [b for b in nontrivial if len(b) == minimum]
    classes = tuple(_classify(plane, conic, b) for b in at_min)
    return BlockerReport(q, "nontrivial", minimum, len(at_min), tuple(at_min), classes)

"""r-partite hypergraphs with exact matching and vertex cover solvers.

Vertices carry (id, label, side); edges are sorted tuples of vertex ids and
are referred to everywhere by their index in the edge list.  The solvers are
exact branch-and-bound searches over bitmasks, never heuristics: every number
they return comes with a witness and an exhaustiveness flag, and ties are
broken lexicographically so witnesses are stable across runs.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import ArityMismatch, UnknownEdge


@dataclass(frozen=True)
class Vertex:
    id: int
    label: str
    side: int


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable outcome of an exact search."""

    kind: str  # matching | cover | ryser | no_disjoint_pair | disjoint_pair
    value: dict
    witness: object
    exhaustive: bool


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    r: int
    side_sizes: tuple
    violations: tuple


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Hypergraph:
    """Immutable vertex/edge data; solver state is built lazily and cached."""

    def __init__(self, r: int, vertices, edges):
        vs = [v if isinstance(v, Vertex) else Vertex(*v) for v in vertices]
        vs.sort(key=lambda v: v.id)
        self.r = r
        self.vertices = tuple(vs)
        self.edges = tuple(tuple(sorted(e)) for e in edges)
        self._by_id = {v.id: v for v in vs}
        sides = [[] for _ in range(r)]
        for v in vs:
            if 0 <= v.side < r:
                sides[v.side].append(v.id)
        self.sides = tuple(tuple(s) for s in sides)
        self._solver: Optional[_ExactSolver] = None

    def vertex(self, vid: int) -> Vertex:
        return self._by_id[vid]

    def solver(self) -> "_ExactSolver":
        if self._solver is None:
            self._solver = _ExactSolver(self)
        return self._solver

    def __repr__(self):
        return f"Hypergraph(r={self.r}, n={len(self.vertices)}, m={len(self.edges)})"


class _ExactSolver:
    """Bitmask branch-and-bound for matching and cover numbers.

    Edge subfamilies are encoded as bitmasks over edge indices; the cover
    search memoizes exact values and lower bounds per subfamily, so repeated
    queries (restrictions, decomposition searches) share all earlier work.
    """

    def __init__(self, h: Hypergraph):
        self.h = h
        vids = [v.id for v in h.vertices]
        pos = {vid: i for i, vid in enumerate(vids)}
        self.vids = vids
        self.m = len(h.edges)
        self.all_edges = (1 << self.m) - 1
        self.edge_verts = [tuple(pos[v] for v in e) for e in h.edges]
        self.edge_masks = []
        for ev in self.edge_verts:
            m = 0
            for p in ev:
                m |= 1 << p
            self.edge_masks.append(m)
        self.vert_edges = [0] * len(vids)
        for ei, ev in enumerate(self.edge_verts):
            for p in ev:
                self.vert_edges[p] |= 1 << ei
        self.conflict = []
        for ei in range(self.m):
            c = 0
            for p in self.edge_verts[ei]:
                c |= self.vert_edges[p]
            self.conflict.append(c)
        self._match_memo = {}
        self._exact = {0: 0}
        self._lower = {}

    # ---- matching ----

    def max_matching(self, avail: int) -> int:
        memo = self._match_memo
        got = memo.get(avail)
        if got is not None:
            return got
        if avail == 0:
            return 0
        e = (avail & -avail).bit_length() - 1
        skip = self.max_matching(avail & ~(1 << e))
        take = 1 + self.max_matching(avail & ~self.conflict[e])
        best = max(skip, take)
        memo[avail] = best
        return best

    def lex_max_matching(self) -> list:
        """Maximum matching whose sorted edge-id sequence is lexicographically least."""
        nu = self.max_matching(self.all_edges)
        out = []
        avail = self.all_edges
        need = nu
        floor = 0
        while need:
            for e in range(floor, self.m):
                if not (avail >> e) & 1:
                    continue
                rest = avail & ~self.conflict[e]
                rest &= ~((1 << (e + 1)) - 1)
                if 1 + self.max_matching(rest) + (nu - need) == nu:
                    out.append(e)
                    avail = rest
                    need -= 1
                    floor = e + 1
                    break
            else:
                raise AssertionError("matching reconstruction failed")
        return out

    # ---- cover ----

    def packing_lb(self, U: int) -> int:
        used = 0
        cnt = 0
        for ei in _bits(U):
            em = self.edge_masks[ei]
            if em & used == 0:
                cnt += 1
                used |= em
        return cnt

    def greedy_cover_le(self, U: int, b: int) -> bool:
        """Upper-bound witness: True means tau(U) <= b for sure.

        Repeatedly picks a highest-degree vertex; failure proves nothing.
        """
        for _ in range(b):
            if U == 0:
                return True
            best = -1
            seen = 0
            for ei in _bits(U):
                for p in self.edge_verts[ei]:
                    pb = 1 << p
                    if seen & pb:
                        continue
                    seen |= pb
                    d = bin(self.vert_edges[p] & U).count("1")
                    if d > best:
                        best = d
                        pick = p
            U &= ~self.vert_edges[pick]
        return U == 0

    def components(self, U: int) -> list:
        comps = []
        rem = U
        while rem:
            comp = rem & -rem
            while True:
                grown = comp
                for ei in _bits(comp):
                    grown |= self.conflict[ei]
                grown &= U
                if grown == comp:
                    break
                comp = grown
            comps.append(comp)
            rem &= ~comp
        return comps

    def _degree_lb(self, U: int) -> int:
        # tau * (max degree) >= number of edges, per component already split off
        cnt = 0
        seen = 0
        maxdeg = 1
        for ei in _bits(U):
            cnt += 1
            for p in self.edge_verts[ei]:
                b = 1 << p
                if seen & b:
                    continue
                seen |= b
                d = bin(self.vert_edges[p] & U).count("1")
                if d > maxdeg:
                    maxdeg = d
        return -(-cnt // maxdeg)

    def tau_le(self, U: int, b: int) -> bool:
        """Is there a vertex set of size <= b meeting every edge of U?"""
        if U == 0:
            return True
        exact = self._exact.get(U)
        if exact is not None:
            return exact <= b
        if b <= 0:
            return False
        lb = self._lower.get(U, 1)
        if lb <= b:
            lb = max(lb, self.packing_lb(U), self._degree_lb(U))
            self._lower[U] = lb
        if lb > b:
            return False
        comps = self.components(U)
        if len(comps) > 1:
            total = 0
            for c in comps:
                total += self.tau_exact(c)
            self._exact[U] = total
            return total <= b
        # branch on the edge with the fewest distinct vertex roles; the scan
        # is capped, any uncovered edge being a complete branch set anyway
        best_roles = None
        scanned = 0
        for ei in _bits(U):
            roles = {}
            for p in self.edge_verts[ei]:
                inc = self.vert_edges[p] & U
                prev = roles.get(inc)
                if prev is None or p < prev:
                    roles[inc] = p
            if best_roles is None or len(roles) < len(best_roles):
                best_roles = roles
                if len(roles) == 1:
                    break
            scanned += 1
            if scanned >= 8:
                break
        # drop dominated roles: a vertex whose incidence is contained in
        # another candidate's can always be swapped out of a cover
        items = sorted(best_roles.items(), key=lambda kv: -bin(kv[0]).count("1"))
        kept = []
        for inc, p in items:
            if any(inc & ~inc2 == 0 for inc2, _ in kept):
                continue
            kept.append((inc, p))
        for inc, p in kept:
            if self.tau_le(U & ~inc, b - 1):
                return True
        self._lower[U] = b + 1
        return False

    def tau_exact(self, U: int) -> int:
        got = self._exact.get(U)
        if got is not None:
            return got
        d = max(self._lower.get(U, 1), self.packing_lb(U), self._degree_lb(U))
        while not self.tau_le(U, d):
            d += 1
        self._exact[U] = d
        return d

    def lex_min_cover(self, U: int) -> list:
        """Minimum cover of U whose sorted vertex-id list is lexicographically least."""
        tau = self.tau_exact(U)
        chosen = []
        floor = 0
        budget = tau
        while U:
            for p in range(floor, len(self.vids)):
                inc = self.vert_edges[p] & U
                if inc == 0:
                    continue
                if self.tau_le(U & ~inc, budget - 1):
                    chosen.append(self.vids[p])
                    U &= ~inc
                    budget -= 1
                    floor = p + 1
                    break
            else:
                raise AssertionError("cover reconstruction failed")
        return chosen


# ---- public operations ----


def validate_partite(h: Hypergraph) -> ValidationReport:
    """Check the r-partite invariants; violations are reported, not raised."""
    violations = []
    seen_ids = {}
    for v in h.vertices:
        if v.id in seen_ids:
            violations.append({"code": "duplicate_vertex_id", "vertex": v.id})
        seen_ids[v.id] = v
        if not 0 <= v.side < h.r:
            violations.append({"code": "side_out_of_range", "vertex": v.id, "side": v.side})
    seen_edges = {}
    for ei, e in enumerate(h.edges):
        if e in seen_edges:
            violations.append({"code": "duplicate_edge", "edge": ei, "other": seen_edges[e]})
        else:
            seen_edges[e] = ei
        if len(set(e)) != len(e):
            violations.append({"code": "repeated_vertex_in_edge", "edge": ei})
        unknown = [vid for vid in e if vid not in h._by_id]
        if unknown:
            violations.append({"code": "unknown_vertex", "edge": ei, "vertices": unknown})
            continue
        if len(e) != h.r:
            violations.append({"code": "edge_size", "edge": ei, "size": len(e)})
        per_side = {}
        for vid in e:
            per_side.setdefault(h.vertex(vid).side, []).append(vid)
        for side, vids in per_side.items():
            if len(vids) > 1:
                violations.append(
                    {"code": "side_hit_twice", "edge": ei, "side": side, "vertices": vids}
                )
        missing = [s for s in range(h.r) if s not in per_side]
        if missing and len(e) == h.r:
            violations.append({"code": "side_missed", "edge": ei, "sides": missing})
    return ValidationReport(
        ok=not violations,
        r=h.r,
        side_sizes=tuple(len(s) for s in h.sides),
        violations=tuple(violations),
    )


def matching_number(h: Hypergraph) -> Certificate:
    s = h.solver()
    witness = s.lex_max_matching()
    return Certificate(
        kind="matching", value={"nu": len(witness)}, witness=tuple(witness), exhaustive=True
    )


def cover_number(h: Hypergraph) -> Certificate:
    s = h.solver()
    witness = s.lex_min_cover(s.all_edges)
    return Certificate(
        kind="cover", value={"tau": len(witness)}, witness=tuple(witness), exhaustive=True
    )


def is_ryser(h: Hypergraph) -> Certificate:
    matching = matching_number(h)
    cover = cover_number(h)
    nu = matching.value["nu"]
    tau = cover.value["tau"]
    bound = (h.r - 1) * nu
    return Certificate(
        kind="ryser",
        value={
            "r": h.r,
            "nu": nu,
            "tau": tau,
            "is_ryser": tau >= bound,
            "conjecture_holds": tau <= bound,
        },
        witness={"matching": matching.witness, "cover": cover.witness},
        exhaustive=True,
    )


def matching_is_valid(h: Hypergraph, edge_ids) -> bool:
    seen = set()
    for ei in edge_ids:
        e = set(h.edges[ei])
        if seen & e:
            return False
        seen |= e
    return True


def cover_is_valid(h: Hypergraph, vertex_ids) -> bool:
    s = set(vertex_ids)
    return all(s & set(e) for e in h.edges)


def disjoint_union(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    if a.r != b.r:
        raise ArityMismatch(f"r={a.r} vs r={b.r}")
    offset = max((v.id for v in a.vertices), default=-1) + 1
    verts = [Vertex(v.id, "a:" + v.label, v.side) for v in a.vertices]
    verts += [Vertex(v.id + offset, "b:" + v.label, v.side) for v in b.vertices]
    edges = [tuple(e) for e in a.edges]
    edges += [tuple(vid + offset for vid in e) for e in b.edges]
    return Hypergraph(a.r, verts, edges)


def restrict(h: Hypergraph, edge_ids) -> Hypergraph:
    ids = sorted(set(edge_ids))
    for ei in ids:
        if not 0 <= ei < len(h.edges):
            raise UnknownEdge(f"edge {ei} not in hypergraph with {len(h.edges)} edges")
    support = sorted({vid for ei in ids for vid in h.edges[ei]})
    verts = [h.vertex(vid) for vid in support]
    return Hypergraph(h.r, verts, [h.edges[ei] for ei in ids])


def tau_subfamily(h: Hypergraph, edge_ids) -> int:
    """Exact cover number of an edge subfamily, sharing the solver cache.

    A cover of a subfamily only ever needs vertices in its support, so the
    full hypergraph's solver answers this directly on an edge mask.
    """
    s = h.solver()
    U = 0
    for ei in edge_ids:
        U |= 1 << ei
    return s.tau_exact(U)


def tau_subfamily_at_most(h: Hypergraph, edge_ids, b: int) -> bool:
    s = h.solver()
    U = 0
    for ei in edge_ids:
        U |= 1 << ei
    return s.tau_le(U, b)

"""Extremal Ryser hypergraph families built from projective planes.

All families live over the canonical PG(2,q) of `geometry`, so every choice
below is a point or line id and the output is identical across runs:

  truncated_plane   T(q+1): delete a point and its pencil; lines become edges.
  conic_truncated   TC(q+1): keep only the T(q+1) edges meeting C' = C - {Q}.
  build_h1          nu glued planes; plane 1 carries the lines avoiding
                    {Q1, P} plus the line ell through P; every other plane
                    carries the conic family plus two stitched edges.
  build_h2          same gluing, with each extra plane built from a 4-arc
                    {Q2, T1, T2, T3} and a marked point S instead of a conic.
  build_g1          the fixed 24-vertex, 14-edge example, decoded from its
                    positional vectors.

The glued families share exactly one vertex between plane 1 and each later
plane: the common point P.  Sides are the pencils through the deleted points,
paired across planes, with the P-side first.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import (
    ArityMismatch,
    InfeasibleChoice,
    NotOddPrime,
    NuTooSmall,
    QTooSmall,
)
from .gf import _prime_power
from .geometry import ProjectivePlane, classify_line, conic_canonical, is_arc, line_through, plane_build, baer_closure
from .hypergraph import Hypergraph, Vertex


@dataclass(frozen=True)
class ConstructionRecipe:
    family: str
    q: int
    nu: int
    chosen: dict  # named point/line selections and edge bookkeeping, JSON-able


def _coords_str(triple):
    return f"({triple[0]}:{triple[1]}:{triple[2]})"


def parse_point_label(label: str):
    """Inverse of the vertex labels: 'p2:(0:1:1)' -> (2, (0, 1, 1))."""
    plane_part, _, coord_part = label.partition(":(")
    a, b, c = coord_part.rstrip(")").split(":")
    return int(plane_part[1:]), (int(a), int(b), int(c))


def vertex_by_label(h: Hypergraph, label: str) -> int:
    for v in h.vertices:
        if v.label == label:
            return v.id
    raise KeyError(label)


# ---- truncated families ----


def _pencil_sides(plane: ProjectivePlane, deleted: int, first_line: Optional[int] = None):
    """Map point id -> side index, sides being the lines through `deleted`.

    Sides are ordered by line id, except that `first_line` (when given) is
    pulled to the front as side 0.
    """
    pencil = sorted(plane.lines_through(deleted))
    if first_line is not None:
        pencil = [first_line] + [l for l in pencil if l != first_line]
    side_of = {}
    for idx, lid in enumerate(pencil):
        for pid in plane.lines[lid].points:
            if pid != deleted:
                side_of[pid] = idx
    return side_of, pencil


def truncated_plane(q: int) -> Hypergraph:
    """Delete the point Q = (0:0:1) and its pencil; remaining lines are edges."""
    plane = plane_build(q)
    deleted = plane.point_id((0, 0, 1))
    side_of, _ = _pencil_sides(plane, deleted)
    verts = [
        Vertex(p.id, _coords_str(p.coords), side_of[p.id])
        for p in plane.points
        if p.id != deleted
    ]
    edges = [
        tuple(line.points) for line in plane.lines if deleted not in plane.line_points(line.id)
    ]
    return Hypergraph(q + 1, verts, edges)


def conic_truncated(q: int) -> Hypergraph:
    """Keep only the truncated-plane edges that meet C' = conic minus Q."""
    if q < 3:
        raise QTooSmall(f"q={q}: the deleted point must leave q conic points")
    plane = plane_build(q)
    deleted = plane.point_id((0, 0, 1))
    conic = conic_canonical(plane)
    cprime = frozenset(conic.points) - {deleted}
    side_of, _ = _pencil_sides(plane, deleted)
    verts = [
        Vertex(p.id, _coords_str(p.coords), side_of[p.id])
        for p in plane.points
        if p.id != deleted
    ]
    edges = [
        tuple(line.points)
        for line in plane.lines
        if deleted not in plane.line_points(line.id) and cprime & plane.line_points(line.id)
    ]
    return Hypergraph(q + 1, verts, edges)


# ---- glued multi-plane families ----


class _Gluing:
    """Shared vertex bookkeeping for the multi-plane constructions.

    Plane 1 contributes every point except Q; each later plane contributes
    every point except Q and P, with its copy of P identified with plane 1's.
    Extra vertices v_i (one per later plane) go on the P-side, at the end.
    """

    def __init__(self, plane: ProjectivePlane, nu: int):
        self.plane = plane
        self.nu = nu
        self.Q = plane.point_id((0, 0, 1))
        self.P = plane.point_id((0, 1, 0))
        self.tangent = plane.line_id((1, 0, 0))  # the line PQ, tangent to the conic
        self.ell = plane.line_id((0, 0, 1))  # least line through P avoiding Q
        self.side_of, self.side_lines = _pencil_sides(plane, self.Q, self.tangent)
        self.verts = []
        self.vmap = {}  # (plane index, point id) -> vertex id
        vid = 0
        for pid in range(len(plane.points)):
            if pid == self.Q:
                continue
            self.vmap[(1, pid)] = vid
            self.verts.append(
                Vertex(vid, f"p1:{_coords_str(plane.points[pid].coords)}", self.side_of[pid])
            )
            vid += 1
        for i in range(2, nu + 1):
            for pid in range(len(plane.points)):
                if pid in (self.Q, self.P):
                    continue
                self.vmap[(i, pid)] = vid
                self.verts.append(
                    Vertex(vid, f"p{i}:{_coords_str(plane.points[pid].coords)}", self.side_of[pid])
                )
                vid += 1
            self.vmap[(i, self.P)] = self.vmap[(1, self.P)]
        self.extra = {}
        for i in range(2, nu + 1):
            self.extra[i] = vid
            self.verts.append(Vertex(vid, f"v{i}", 0))
            vid += 1

    def line_edge(self, i: int, line_id: int) -> tuple:
        pts = self.plane.lines[line_id].points
        return tuple(sorted(self.vmap[(i, pid)] for pid in pts))

    def checks_ell(self):
        lp = self.plane.line_points(self.ell)
        assert self.P in lp and self.Q not in lp


def _plane1_line_ids(gl: _Gluing):
    plane = gl.plane
    out = [gl.ell]
    for line in plane.lines:
        lp = plane.line_points(line.id)
        if gl.Q not in lp and gl.P not in lp:
            out.append(line.id)
    return sorted(out)


def build_h1(q: int, nu: int):
    """Glue nu planes at P; plane 1 holds the lines off {Q1, P} plus ell,
    the others hold the conic family with the two stitched edges."""
    p, k = _prime_power(q) or (0, 0)
    if k != 1 or q % 2 == 0 or q < 3:
        raise NotOddPrime(f"q={q}: the cover argument needs an odd prime order")
    if nu < 2:
        raise NuTooSmall(f"nu={nu}: at least two glued planes required")
    plane = plane_build(q)
    gl = _Gluing(plane, nu)
    gl.checks_ell()
    conic = conic_canonical(plane)
    cprime = sorted(set(conic.points) - {gl.Q})
    # R: least point of the line PQ besides P and Q
    R = min(p_ for p_ in plane.line_points(gl.tangent) if p_ not in (gl.P, gl.Q))

    edges = []
    plane_ranges = {}
    e1_edges = {}
    e2_edges = {}

    p1_lines = _plane1_line_ids(gl)
    for lid in p1_lines:
        edges.append(gl.line_edge(1, lid))
    plane_ranges[1] = (0, len(edges))

    ell_rest = sorted(
        gl.vmap[(1, pid)] for pid in plane.line_points(gl.ell) if pid != gl.P
    )
    e2_lines = sorted(
        line.id
        for line in plane.lines
        if gl.Q not in plane.line_points(line.id)
        and set(cprime) & plane.line_points(line.id)
    )
    for i in range(2, nu + 1):
        start = len(edges)
        for lid in e2_lines:
            edges.append(gl.line_edge(i, lid))
        plane_ranges[i] = (start, len(edges))
        e1_edges[i] = len(edges)
        edges.append(tuple(sorted(ell_rest + [gl.vmap[(i, R)]])))
        e2_edges[i] = len(edges)
        edges.append(tuple(sorted([gl.vmap[(i, c)] for c in cprime] + [gl.extra[i]])))

    classes = [list(range(*plane_ranges[1])) + [e1_edges[i] for i in range(2, nu + 1)]]
    for i in range(2, nu + 1):
        classes.append(list(range(*plane_ranges[i])) + [e2_edges[i]])

    h = Hypergraph(q + 1, gl.verts, edges)
    recipe = ConstructionRecipe(
        family="h1",
        q=q,
        nu=nu,
        chosen={
            "P": gl.P,
            "Q": gl.Q,
            "R": R,
            "ell_line": gl.ell,
            "tangent_line": gl.tangent,
            "conic_points": list(conic.points),
            "side_lines": list(gl.side_lines),
            "plane_edges": {str(i): list(rng) for i, rng in plane_ranges.items()},
            "e1_edges": {str(i): e for i, e in e1_edges.items()},
            "e2_edges": {str(i): e for i, e in e2_edges.items()},
            "extra_vertices": {str(i): v for i, v in gl.extra.items()},
            "edge_classes": classes,
        },
    )
    return h, recipe


def _h2_arc_points(plane: ProjectivePlane, Q: int, P: int, tangent: int):
    """Lexicographically first (T1, T2, T3, S) for the H2 plane.

    {Q, T1, T2, T3} must be an arc with T1 on the line PQ, S lies on Q T2
    off {Q, T2}, and the line T2T3 avoids P (otherwise the edge through P
    and T3 would miss the stitched edge e2, allowing a third matching edge).
    For q = 4 the subplane generated by the arc must avoid P, and S must
    avoid both that subplane and the line T1T3.
    """
    q = plane.q
    n = len(plane.points)
    pq_points = plane.line_points(tangent)
    for T1 in sorted(pq_points - {P, Q}):
        for T2 in range(n):
            if T2 in (P, Q, T1) or T2 in pq_points:
                continue
            qt2 = line_through(plane, Q, T2).id
            for T3 in range(n):
                if T3 in (P, Q, T1, T2):
                    continue
                if not is_arc(plane, (Q, T1, T2, T3)):
                    continue
                if P in plane.line_points(line_through(plane, T2, T3).id):
                    continue
                closure = None
                if q == 4:
                    closure = baer_closure(plane, (Q, T1, T2, T3))
                    if P in closure:
                        continue
                t1t3 = plane.line_points(line_through(plane, T1, T3).id)
                s_candidates = []
                for S in sorted(plane.line_points(qt2) - {Q, T2}):
                    if q == 4 and (S in closure or S in t1t3):
                        continue
                    s_candidates.append(S)
                if s_candidates:
                    return T1, T2, T3, s_candidates, closure
    raise InfeasibleChoice(f"no (T1,T2,T3,S) tuple exists at q={q}")


def build_h2(q: int, nu: int):
    """Glue nu planes at P; each later plane is built from a 4-arc through Q
    and a marked point S instead of a conic."""
    if q < 4:
        raise QTooSmall(f"q={q}: the arc construction needs q >= 4")
    if nu < 2:
        raise NuTooSmall(f"nu={nu}: at least two glued planes required")
    plane = plane_build(q)  # NotPrimePower for bad q
    gl = _Gluing(plane, nu)
    gl.checks_ell()
    T1, T2, T3, s_candidates, closure = _h2_arc_points(plane, gl.Q, gl.P, gl.tangent)
    S = s_candidates[0]
    arc = (gl.Q, T1, T2, T3)

    t1t2 = line_through(plane, T1, T2).id
    t1s = line_through(plane, T1, S).id
    pt3 = line_through(plane, gl.P, T3).id
    avoid = set(arc)
    full_lines = sorted(
        {t1t2, t1s, pt3}
        | {
            line.id
            for line in plane.lines
            if not (avoid & plane.line_points(line.id))
        }
    )

    edges = []
    plane_ranges = {}
    e1_edges = {}
    e2_edges = {}

    p1_lines = _plane1_line_ids(gl)
    for lid in p1_lines:
        edges.append(gl.line_edge(1, lid))
    plane_ranges[1] = (0, len(edges))

    ell_rest = sorted(
        gl.vmap[(1, pid)] for pid in plane.line_points(gl.ell) if pid != gl.P
    )
    t1t2_rest = sorted(
        pid for pid in plane.line_points(t1t2) if pid not in (T1, T2)
    )
    for i in range(2, nu + 1):
        start = len(edges)
        for lid in full_lines:
            edges.append(gl.line_edge(i, lid))
        plane_ranges[i] = (start, len(edges))
        e1_edges[i] = len(edges)
        edges.append(tuple(sorted(ell_rest + [gl.vmap[(i, T1)]])))
        e2_edges[i] = len(edges)
        edges.append(
            tuple(
                sorted(
                    [gl.vmap[(i, pid)] for pid in t1t2_rest]
                    + [gl.vmap[(i, S)], gl.extra[i]]
                )
            )
        )

    classes = [list(range(*plane_ranges[1])) + [e1_edges[i] for i in range(2, nu + 1)]]
    for i in range(2, nu + 1):
        classes.append(list(range(*plane_ranges[i])) + [e2_edges[i]])

    h = Hypergraph(q + 1, gl.verts, edges)
    recipe = ConstructionRecipe(
        family="h2",
        q=q,
        nu=nu,
        chosen={
            "P": gl.P,
            "Q": gl.Q,
            "T1": T1,
            "T2": T2,
            "T3": T3,
            "S": S,
            "S_candidates": list(s_candidates),
            "closure": sorted(closure) if closure is not None else None,
            "ell_line": gl.ell,
            "tangent_line": gl.tangent,
            "lines": {"T1T2": t1t2, "T1S": t1s, "PT3": pt3},
            "side_lines": list(gl.side_lines),
            "plane_edges": {str(i): list(rng) for i, rng in plane_ranges.items()},
            "e1_edges": {str(i): e for i, e in e1_edges.items()},
            "e2_edges": {str(i): e for i, e in e2_edges.items()},
            "extra_vertices": {str(i): v for i, v in gl.extra.items()},
            "edge_classes": classes,
        },
    )
    return h, recipe


def validate_recipe(recipe: ConstructionRecipe) -> list:
    """Re-check every recorded constraint; returns a list of failures."""
    plane = plane_build(recipe.q)
    c = recipe.chosen
    fails = []

    def expect(cond, msg):
        if not cond:
            fails.append(msg)

    conic = conic_canonical(plane)
    P, Q = c["P"], c["Q"]
    tangent = plane.lines[c["tangent_line"]]
    expect(P in plane.line_points(tangent.id), "P not on the recorded tangent line")
    expect(Q in plane.line_points(tangent.id), "Q not on the recorded tangent line")
    expect(classify_line(conic, tangent) == "tangent", "recorded PQ line is not tangent")
    ell = plane.line_points(c["ell_line"])
    expect(P in ell and Q not in ell, "ell must pass through P and avoid Q")
    if recipe.family == "h1":
        expect(list(conic.points) == c["conic_points"], "conic points drifted")
        R = c["R"]
        expect(
            R in plane.line_points(tangent.id) and R not in (P, Q),
            "R must lie on PQ away from P and Q",
        )
    elif recipe.family == "h2":
        T1, T2, T3, S = c["T1"], c["T2"], c["T3"], c["S"]
        expect(
            T1 in plane.line_points(tangent.id) and T1 not in (P, Q),
            "T1 must lie on PQ away from P and Q",
        )
        expect(is_arc(plane, (Q, T1, T2, T3)), "{Q,T1,T2,T3} is not an arc")
        qt2 = line_through(plane, Q, T2).id
        expect(S in plane.line_points(qt2) and S not in (Q, T2), "S must lie on QT2 away from Q and T2")
        expect(
            P not in plane.line_points(line_through(plane, T2, T3).id),
            "P must avoid the line T2T3",
        )
        if recipe.q == 4:
            closure = baer_closure(plane, (Q, T1, T2, T3))
            expect(sorted(closure) == c["closure"], "recorded subplane closure drifted")
            expect(P not in closure, "P must avoid the arc's subplane closure")
            expect(S not in closure, "S must avoid the arc's subplane closure")
            expect(
                S not in plane.line_points(line_through(plane, T1, T3).id),
                "S must avoid the line T1T3",
            )
    else:
        fails.append(f"unknown family {recipe.family}")
    return fails


# ---- the fixed 14-edge example ----

G1_VECTORS = (
    "1111",
    "1333",
    "1444",
    "5314",
    "6341",
    "6413",
    "2222",
    "2155",
    "3162",
    "4652",
    "4265",
    "2666",
    "2562",
    "1211",
)


def build_g1() -> Hypergraph:
    """24 vertices v_ij (position i, side j); edges decoded digit-by-digit."""
    verts = [
        Vertex((i - 1) * 4 + (j - 1), f"v{i}{j}", j - 1)
        for i in range(1, 7)
        for j in range(1, 5)
    ]
    edges = []
    for vec in G1_VECTORS:
        edges.append(tuple((int(d) - 1) * 4 + j for j, d in enumerate(vec)))
    return Hypergraph(4, verts, edges)


# ---- embedding search ----


def find_embedding(small: Hypergraph, big: Hypergraph, pins: Optional[dict] = None):
    """Injective vertex map plus side bijection sending edges onto edges.

    Vertices of `small` are assigned in ascending id order, candidates in
    ascending id order, so the first embedding found is the lexicographically
    least one; the search is exhaustive and returns None when no embedding
    exists.  `pins` forces chosen assignments (small id -> big id).
    """
    if small.r != big.r:
        raise ArityMismatch(f"r={small.r} vs r={big.r}")
    if len(small.vertices) > len(big.vertices) or len(small.edges) > len(big.edges):
        return None
    order = [v.id for v in small.vertices]
    sside = {v.id: v.side for v in small.vertices}
    bside = {v.id: v.side for v in big.vertices}
    bvids = [v.id for v in big.vertices]
    edges_of = {vid: [] for vid in order}
    for ei, e in enumerate(small.edges):
        for vid in e:
            edges_of[vid].append(ei)
    b_incidence = {}
    for ei, e in enumerate(big.edges):
        for vid in e:
            b_incidence.setdefault(vid, 0)
        for vid in e:
            b_incidence[vid] |= 1 << ei
    full = (1 << len(big.edges)) - 1

    assignment = {}
    side_map = {}
    used_sides = set()
    used_big = set()

    def dfs(k, masks):
        if k == len(order):
            return dict(assignment)
        vid = order[k]
        s = sside[vid]
        pinned = None if pins is None else pins.get(vid)
        for w in (bvids if pinned is None else [pinned]):
            if w in used_big:
                continue
            bs = bside[w]
            if s in side_map:
                if side_map[s] != bs:
                    continue
            elif bs in used_sides:
                continue
            new_masks = masks
            ok = True
            winc = b_incidence.get(w, 0)
            for ei in edges_of[vid]:
                m = new_masks[ei] & winc
                if m == 0:
                    ok = False
                    break
                if new_masks is masks:
                    new_masks = list(masks)
                new_masks[ei] = m
            if not ok:
                continue
            assignment[vid] = w
            used_big.add(w)
            fresh = s not in side_map
            if fresh:
                side_map[s] = bs
                used_sides.add(bs)
            found = dfs(k + 1, new_masks)
            if found is not None:
                return found
            del assignment[vid]
            used_big.discard(w)
            if fresh:
                del side_map[s]
                used_sides.discard(bs)
        return None

    return dfs(0, [full] * len(small.edges))

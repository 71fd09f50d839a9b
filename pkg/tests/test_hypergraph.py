"""Solver behavior on hand-checkable instances plus randomized
cross-validation against plain exhaustive search."""

import random
from itertools import combinations

import pytest

from ryserplanes.errors import ArityMismatch, UnknownEdge
from ryserplanes.hypergraph import (
    Hypergraph,
    Vertex,
    cover_is_valid,
    cover_number,
    disjoint_union,
    is_ryser,
    matching_is_valid,
    matching_number,
    restrict,
    tau_subfamily,
    tau_subfamily_at_most,
    validate_partite,
)


def grid(r, per_side):
    verts = [
        Vertex(i * per_side + j, f"v{i}{j}", i) for i in range(r) for j in range(per_side)
    ]
    return verts


def make(r, per_side, edges):
    return Hypergraph(r, grid(r, per_side), [tuple(sorted(e)) for e in edges])


def brute_nu(h):
    best = 0
    m = len(h.edges)
    sets = [set(e) for e in h.edges]
    for mask in range(1 << m):
        chosen = [sets[i] for i in range(m) if mask >> i & 1]
        if len(chosen) <= best:
            continue
        union = set()
        ok = True
        for s in chosen:
            if union & s:
                ok = False
                break
            union |= s
        if ok:
            best = len(chosen)
    return best


def brute_tau(h):
    # exhaustive: cover the first uncovered edge by one of its vertices
    sets = [set(e) for e in h.edges]

    def covers(depth, chosen):
        rest = [s for s in sets if not s & chosen]
        if not rest:
            return True
        if depth == 0:
            return False
        return any(covers(depth - 1, chosen | {v}) for v in sorted(rest[0]))

    k = 0
    while not covers(k, set()):
        k += 1
    return k


# ---- validation ----


def test_validation_accepts_proper_partite():
    h = make(3, 2, [(0, 2, 4), (1, 3, 5)])
    rep = validate_partite(h)
    assert rep.ok
    assert rep.r == 3
    assert rep.side_sizes == (2, 2, 2)
    assert rep.violations == ()


def test_validation_catches_duplicate_vertex_id():
    h = Hypergraph(2, [Vertex(0, "a", 0), Vertex(0, "b", 1)], [])
    codes = [v["code"] for v in validate_partite(h).violations]
    assert "duplicate_vertex_id" in codes


def test_validation_catches_side_out_of_range():
    h = Hypergraph(2, [Vertex(0, "a", 0), Vertex(1, "b", 5)], [])
    codes = [v["code"] for v in validate_partite(h).violations]
    assert "side_out_of_range" in codes


def test_validation_catches_bad_edges():
    verts = grid(2, 2)
    h = Hypergraph(2, verts, [(0, 2), (0, 2), (1, 1), (0, 9), (0,), (0, 1)])
    codes = {v["code"] for v in validate_partite(h).violations}
    assert "duplicate_edge" in codes
    assert "repeated_vertex_in_edge" in codes
    assert "unknown_vertex" in codes
    assert "edge_size" in codes
    assert "side_hit_twice" in codes


def test_validation_catches_side_missed():
    verts = grid(3, 2)
    h = Hypergraph(3, verts, [(0, 1, 2)])  # two side-0 vertices, side 2 missed
    codes = {v["code"] for v in validate_partite(h).violations}
    assert "side_missed" in codes


# ---- matching and cover ----


def test_single_edge():
    h = make(2, 1, [(0, 1)])
    assert matching_number(h).value["nu"] == 1
    assert cover_number(h).value["tau"] == 1


def test_two_disjoint_edges():
    h = make(2, 2, [(0, 2), (1, 3)])
    assert matching_number(h).value["nu"] == 2
    assert cover_number(h).value["tau"] == 2


def test_intersecting_triangle():
    # pairwise-intersecting through three different vertices: nu = 1, tau = 2
    h = make(3, 3, [(0, 3, 6), (0, 4, 7), (1, 3, 7)])
    assert matching_number(h).value["nu"] == 1
    assert cover_number(h).value["tau"] == 2


def test_matching_certificate_witness_is_lex_least():
    h = make(2, 3, [(0, 3), (1, 4), (2, 5)])
    cert = matching_number(h)
    assert cert.witness == (0, 1, 2)
    assert cert.exhaustive
    assert matching_is_valid(h, cert.witness)


def test_cover_certificate_witness_is_lex_least():
    h = make(2, 2, [(0, 2), (0, 3), (1, 2)])
    cert = cover_number(h)
    assert cert.value["tau"] == 2
    assert cert.witness == (0, 1)
    assert cover_is_valid(h, cert.witness)


def test_empty_hypergraph():
    h = make(2, 2, [])
    assert matching_number(h).value["nu"] == 0
    assert cover_number(h).value["tau"] == 0
    assert cover_is_valid(h, ())


def test_is_ryser_reports_both_witnesses():
    h = make(2, 2, [(0, 2), (1, 3)])
    cert = is_ryser(h)
    assert cert.kind == "ryser"
    assert cert.value == {
        "r": 2, "nu": 2, "tau": 2, "is_ryser": True, "conjecture_holds": True,
    }
    assert matching_is_valid(h, cert.witness["matching"])
    assert cover_is_valid(h, cert.witness["cover"])


def test_witness_validators_reject_garbage():
    h = make(2, 2, [(0, 2), (1, 3)])
    assert not matching_is_valid(h, (0, 0))
    assert not cover_is_valid(h, (0,))


# ---- combinators ----


def test_disjoint_union_offsets_ids_and_labels():
    a = make(2, 1, [(0, 1)])
    b = make(2, 2, [(0, 2), (1, 3)])
    u = disjoint_union(a, b)
    assert len(u.vertices) == 6
    assert len(u.edges) == 3
    assert matching_number(u).value["nu"] == 3
    labels = {v.label for v in u.vertices}
    assert "a:v00" in labels and "b:v00" in labels


def test_disjoint_union_requires_equal_r():
    with pytest.raises(ArityMismatch):
        disjoint_union(make(2, 1, [(0, 1)]), make(3, 1, [(0, 1, 2)]))


def test_restrict_keeps_parent_ids():
    h = make(2, 2, [(0, 2), (1, 3), (0, 3)])
    sub = restrict(h, [0, 2])
    assert [v.id for v in sub.vertices] == [0, 2, 3]
    assert sub.edges == ((0, 2), (0, 3))
    with pytest.raises(UnknownEdge):
        restrict(h, [7])


def test_tau_subfamily_matches_restricted_cover():
    h = make(2, 3, [(0, 3), (1, 4), (2, 5), (0, 4)])
    for ids in [(0,), (0, 1), (0, 1, 2), (0, 3), (1, 2, 3)]:
        sub = restrict(h, ids)
        assert tau_subfamily(h, ids) == cover_number(sub).value["tau"]
        assert tau_subfamily_at_most(h, ids, len(ids))


# ---- randomized cross-checks ----


def random_instance(rng):
    r = rng.randrange(2, 5)
    per_side = rng.randrange(2, 5)
    m = min(rng.randrange(1, 9), per_side ** r)
    edges = set()
    while len(edges) < m:
        edges.add(tuple(sorted(
            side * per_side + rng.randrange(per_side) for side in range(r)
        )))
    return make(r, per_side, sorted(edges))


def test_solver_agrees_with_enumeration():
    rng = random.Random(1721)
    for _ in range(60):
        h = random_instance(rng)
        nu = matching_number(h)
        tau = cover_number(h)
        assert nu.value["nu"] == brute_nu(h), h.edges
        assert tau.value["tau"] == brute_tau(h), h.edges
        assert matching_is_valid(h, nu.witness)
        assert cover_is_valid(h, tau.witness)


def test_nu_tau_sandwich_on_randoms():
    rng = random.Random(404)
    for _ in range(60):
        h = random_instance(rng)
        v = is_ryser(h).value
        assert v["nu"] <= v["tau"] <= h.r * v["nu"]

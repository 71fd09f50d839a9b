from itertools import combinations

import pytest

from ryserplanes.constructions import (
    build_g1,
    build_h1,
    build_h2,
    conic_truncated,
    find_embedding,
    parse_point_label,
    truncated_plane,
    validate_recipe,
    vertex_by_label,
)
from ryserplanes.errors import (
    ArityMismatch,
    NotOddPrime,
    NotPrimePower,
    NuTooSmall,
    QTooSmall,
)
from ryserplanes.geometry import is_arc, plane_build
from ryserplanes.hypergraph import (
    is_ryser,
    restrict,
    tau_subfamily,
    validate_partite,
)


# ---- truncated planes ----


@pytest.mark.parametrize("q", [3, 4, 5])
def test_truncated_plane_shape_and_invariants(q):
    h = truncated_plane(q)
    assert h.r == q + 1
    assert len(h.vertices) == q * (q + 1)
    assert len(h.edges) == q * q
    assert validate_partite(h).ok
    v = is_ryser(h).value
    # one point removed: the remaining lines pairwise meet, cover needs q
    assert v["nu"] == 1
    assert v["tau"] == q
    assert v["is_ryser"]


@pytest.mark.parametrize("q", [3, 4, 5])
def test_conic_truncated_shape_and_invariants(q):
    h = conic_truncated(q)
    assert h.r == q + 1
    assert len(h.vertices) == q * (q + 1)
    assert len(h.edges) == q * (q + 1) // 2
    assert validate_partite(h).ok
    v = is_ryser(h).value
    assert v["nu"] == 1
    assert v["tau"] == q


def test_conic_truncated_rejects_tiny_order():
    with pytest.raises(QTooSmall):
        conic_truncated(2)


def test_truncated_plane_rejects_non_prime_power():
    with pytest.raises(NotPrimePower):
        truncated_plane(6)


# ---- first glued family ----


def test_h1_base_counts_and_certificate(h1_32):
    h, recipe = h1_32
    assert h.r == 4
    assert len(h.vertices) == 24
    assert len(h.edges) == 15
    assert validate_partite(h).ok
    assert validate_recipe(recipe) == []
    v = is_ryser(h).value
    assert v == {"r": 4, "nu": 2, "tau": 6, "is_ryser": True, "conjecture_holds": True}


def test_h1_shared_point_and_extra_vertex(h1_32):
    h, recipe = h1_32
    # vertex 0 is the gluing point; the recipe names plane point ids
    assert h.vertices[0].label == "p1:(0:1:0)"
    assert recipe.chosen["P"] == 1
    assert recipe.chosen["Q"] == 0
    assert recipe.chosen["R"] == 2
    extra = recipe.chosen["extra_vertices"]["2"]
    assert h.vertex(extra).label == "v2"


def test_h1_edge_classes_partition_and_intersect(h1_32):
    h, recipe = h1_32
    classes = recipe.chosen["edge_classes"]
    assert sorted(e for c in classes for e in c) == list(range(len(h.edges)))
    for cls in classes:
        for a, b in combinations(cls, 2):
            assert set(h.edges[a]) & set(h.edges[b])


def test_h1_class_cover_numbers(h1_32):
    h, recipe = h1_32
    # each pairwise-intersecting class needs q vertices to cover
    for cls in recipe.chosen["edge_classes"]:
        assert tau_subfamily(h, cls) == 3


def test_h1_general_nu_counts(h1_33):
    h, recipe = h1_33
    assert len(h.vertices) == 36
    assert len(h.edges) == 23
    assert [len(c) for c in recipe.chosen["edge_classes"]] == [9, 7, 7]
    assert validate_partite(h).ok
    assert validate_recipe(recipe) == []


def test_h1_general_nu_certificate(h1_33):
    # The cover number stays below nu*q for nu >= 3: the shared point, one
    # point of the common line, and q-1 conic points per glued plane make a
    # cover of size nu*(q-1)+2, and exhaustive search confirms optimality.
    h, _ = h1_33
    v = is_ryser(h).value
    assert v["nu"] == 3
    assert v["tau"] == 8
    assert not v["is_ryser"]
    assert v["conjecture_holds"]


def test_h1_nu_four_follows_same_formula():
    h, _ = build_h1(3, 4)
    v = is_ryser(h).value
    assert v["nu"] == 4
    assert v["tau"] == 4 * 2 + 2


def test_h1_larger_field():
    h, recipe = build_h1(5, 2)
    assert h.r == 6
    assert len(h.vertices) == 60
    assert len(h.edges) == 38
    assert validate_recipe(recipe) == []
    v = is_ryser(h).value
    assert v["nu"] == 2
    assert v["tau"] == 10
    assert v["is_ryser"]


@pytest.mark.parametrize("q", [2, 4, 8, 9])
def test_h1_needs_odd_prime(q):
    with pytest.raises(NotOddPrime):
        build_h1(q, 2)


def test_h1_needs_nu_at_least_two():
    with pytest.raises(NuTooSmall):
        build_h1(3, 1)


# ---- second glued family ----


def test_h2_base_counts_and_certificate(h2_42):
    h, recipe = h2_42
    assert h.r == 5
    assert len(h.vertices) == 40
    assert len(h.edges) == 25
    assert validate_partite(h).ok
    assert validate_recipe(recipe) == []
    v = is_ryser(h).value
    assert v == {"r": 5, "nu": 2, "tau": 8, "is_ryser": True, "conjecture_holds": True}


def test_h2_arc_choice_is_recorded(h2_42):
    _, recipe = h2_42
    ch = recipe.chosen
    assert (ch["Q"], ch["P"], ch["T1"], ch["T2"], ch["T3"]) == (0, 1, 2, 5, 11)
    # both exclusion rules delete the same third subplane point of the
    # chosen line, so two candidates survive; the first is taken
    assert ch["S_candidates"] == [6, 7]
    assert ch["S"] == 6
    assert sorted(ch["closure"]) == [0, 2, 3, 5, 8, 10, 11]


def test_h2_closure_excludes_p_and_s(h2_42):
    _, recipe = h2_42
    ch = recipe.chosen
    assert ch["P"] not in ch["closure"]
    assert ch["S"] not in ch["closure"]


def test_h2_edge_classes_partition_and_intersect(h2_42):
    h, recipe = h2_42
    classes = recipe.chosen["edge_classes"]
    assert [len(c) for c in classes] == [14, 11]
    assert sorted(e for c in classes for e in c) == list(range(len(h.edges)))
    for cls in classes:
        for a, b in combinations(cls, 2):
            assert set(h.edges[a]) & set(h.edges[b])


def test_h2_at_q5():
    h, recipe = build_h2(5, 2)
    assert h.r == 6
    assert len(h.vertices) == 60
    assert len(h.edges) == 39
    assert recipe.chosen["closure"] is None  # no subplane rule away from q=4
    assert validate_recipe(recipe) == []
    v = is_ryser(h).value
    assert v["nu"] == 2
    assert v["tau"] == 10
    assert v["is_ryser"]


def test_h2_rejects_small_or_bad_orders():
    with pytest.raises(QTooSmall):
        build_h2(3, 2)
    with pytest.raises(NotPrimePower):
        build_h2(6, 2)
    with pytest.raises(NuTooSmall):
        build_h2(4, 0)


def test_h2_general_nu_builds_and_validates():
    h, recipe = build_h2(4, 3)
    assert validate_partite(h).ok
    assert validate_recipe(recipe) == []
    assert len(recipe.chosen["edge_classes"]) == 3


# ---- labels ----


def test_labels_round_trip(h1_32):
    h, _ = h1_32
    assert parse_point_label("p2:(0:1:1)") == (2, (0, 1, 1))
    vid = vertex_by_label(h, "p1:(1:1:1)")
    assert h.vertex(vid).label == "p1:(1:1:1)"


# ---- hand-sized witness and embeddings ----


def test_g1_counts_and_certificate():
    h = build_g1()
    assert h.r == 4
    assert len(h.vertices) == 24
    assert len(h.edges) == 14
    assert validate_partite(h).ok
    v = is_ryser(h).value
    assert v == {"r": 4, "nu": 2, "tau": 6, "is_ryser": True, "conjecture_holds": True}


def test_g1_two_halves_are_edge_minimal_ryser():
    # first six and next six edges each form an intersecting family
    # with cover number 3; dropping any edge drops the cover number
    h = build_g1()
    for ids in (list(range(6)), list(range(6, 12))):
        assert tau_subfamily(h, ids) == 3
        for e in ids:
            rest = [f for f in ids if f != e]
            assert tau_subfamily(h, rest) < 3


def test_self_embedding_is_identity(h1_32):
    h, _ = h1_32
    m = find_embedding(h, h)
    assert m == {v.id: v.id for v in h.vertices}


def test_g1_embeds_into_h1_pinned(h1_32):
    h, _ = h1_32
    g = build_g1()
    m = find_embedding(g, h, pins={1: 0})
    assert m is not None
    assert m[1] == 0
    assert len(set(m.values())) == len(g.vertices)
    mapped = {tuple(sorted(m[v] for v in e)) for e in g.edges}
    assert mapped <= set(h.edges)


def test_embedding_respects_sides(h1_32):
    h, _ = h1_32
    g = build_g1()
    m = find_embedding(g, h)
    gside = {v.id: v.side for v in g.vertices}
    hside = {v.id: v.side for v in h.vertices}
    side_map = {}
    for gv, hv in m.items():
        assert side_map.setdefault(gside[gv], hside[hv]) == hside[hv]
    assert len(set(side_map.values())) == 4


def test_embedded_conic_triple_maps_to_an_arc(h1_32):
    h, _ = h1_32
    g = build_g1()
    m = find_embedding(g, h, pins={1: 0})
    plane = plane_build(3)
    pids = []
    for gvid in (4, 22, 7):  # second side-1, sixth side-3, second side-4 vertex
        plane_no, triple = parse_point_label(h.vertex(m[gvid]).label)
        assert plane_no == 2
        pids.append(plane.point_id(triple))
    pids.append(plane.point_id((0, 0, 1)))  # the deleted point of that plane
    assert is_arc(plane, pids)


def test_embedding_arity_mismatch(h2_42):
    h2, _ = h2_42
    with pytest.raises(ArityMismatch):
        find_embedding(build_g1(), h2)


def test_no_embedding_when_too_large(h1_32):
    h, _ = h1_32
    assert find_embedding(h, build_g1()) is None

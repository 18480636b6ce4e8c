import random

import pytest

from coxrep import (
    Arrow,
    CoxeterQuiver,
    FusionElem,
    classify_graph,
    is_positive_vec,
    parse_quiver,
    reverse_at,
    unfold,
    unfolded_arrow_count,
)
from coxrep.unfold import fold_dim
from families import family_quiver, path_quiver


def names(uq):
    return [t.name for _, t in classify_graph(uq.to_coxeter())]


def test_unfold_i2_5_is_a4_path():
    Q = parse_quiver("vertex 1\nvertex 2\narrow 1 2 5\n")
    uq = unfold(Q)
    assert len(uq.vertices) == 4
    assert len(uq.arrows) == 3
    assert names(uq) == ["A4"]
    # the path visits (unit,1) - (tau,2) - (tau,1) - (unit,2)
    triples = uq.arrow_set()
    assert ("a0", "5:0@1", "5:2@2") in triples
    assert ("a0", "5:2@1", "5:2@2") in triples
    assert ("a0", "5:2@1", "5:0@2") in triples


def test_unfold_i2_4_is_two_a3():
    Q = parse_quiver("vertex 1\nvertex 2\narrow 1 2 4\n")
    uq = unfold(Q)
    assert len(uq.vertices) == 6
    assert len(uq.arrows) == 4
    assert sorted(names(uq)) == ["A3", "A3"]


def test_unfold_classical_is_identity():
    Q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 3 2\n")
    uq = unfold(Q)
    assert len(uq.vertices) == len(Q.vertices)
    assert len(uq.arrows) == len(Q.arrows)
    got = {(a.provenance, uq.parts[a.source][1], uq.parts[a.target][1]) for a in uq.arrows}
    expect = {(a.id, a.source, a.target) for a in Q.arrows}
    assert got == expect


@pytest.mark.parametrize(
    "name,expected",
    [
        ("B2", ["A3", "A3"]),
        ("B3", ["A5", "D4"]),
        ("B4", ["A7", "D5"]),
        ("B5", ["A9", "D6"]),
        ("B6", ["A11", "D7"]),
        ("F4", ["E6", "E6"]),
        ("G2", ["A5", "A5"]),
        ("H3", ["D6"]),
        ("H4", ["E8"]),
        ("I2(4)", ["A3", "A3"]),
        ("I2(5)", ["A4"]),
        ("I2(6)", ["A5", "A5"]),
        ("I2(7)", ["A6"]),
        ("I2(8)", ["A7", "A7"]),
        ("I2(9)", ["A8"]),
        ("I2(10)", ["A9", "A9"]),
        ("I2(11)", ["A10"]),
        ("I2(12)", ["A11", "A11"]),
        ("I2(13)", ["A12"]),
    ],
)
def test_unfold_finite_type_table(name, expected):
    assert sorted(names(unfold(family_quiver(name)))) == sorted(expected)


def test_unfold_two_label4_arrows_into_middle():
    # both arrows labelled 4 pointing into a middle vertex: nine unfolded
    # vertices, eight arrows, one degree-four star and one four-cycle
    Q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2 4\narrow 3 2 4\n")
    uq = unfold(Q)
    assert len(uq.vertices) == 9
    assert len(uq.arrows) == 8
    triples = uq.arrow_set()
    for prov, src in (("a0", "1"), ("a1", "3")):
        assert (prov, f"4:0@{src}", "4:1@2") in triples
        assert (prov, f"4:1@{src}", "4:0@2") in triples
        assert (prov, f"4:1@{src}", "4:2@2") in triples
        assert (prov, f"4:2@{src}", "4:1@2") in triples
    comps = classify_graph(uq.to_coxeter())
    sizes = sorted(len(vs) for vs, _ in comps)
    assert sizes == [4, 5]
    assert all(t.name == "NotDynkin" for _, t in comps)


def test_unfolded_arrow_count_golden():
    Q5 = parse_quiver("vertex 1\nvertex 2\narrow 1 2 5\n")
    assert unfolded_arrow_count(Q5, "a0") == 3
    Q4 = parse_quiver("vertex 1\nvertex 2\narrow 1 2 4\n")
    assert unfolded_arrow_count(Q4, "a0") == 4
    # classical arrow in a {3,5} quiver acquires one copy per complement
    Q35 = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2 5\narrow 2 3\n")
    assert unfolded_arrow_count(Q35, "a1") == 2


def test_unfolded_arrow_counts_sum():
    rng = random.Random(6)
    for _ in range(15):
        n = rng.randint(2, 4)
        vertices = [str(i) for i in range(1, n + 1)]
        arrows = []
        for k in range(2, n + 1):
            other = str(rng.randint(1, k - 1))
            arrows.append(Arrow(f"a{k}", other, str(k), rng.randint(3, 8)))
        Q = CoxeterQuiver(vertices, arrows)
        uq = unfold(Q)
        assert sum(unfolded_arrow_count(Q, a.id) for a in Q.arrows) == len(uq.arrows)


def test_sink_lifts_and_reversal_commutes():
    Q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2 5\narrow 3 2\n")
    uq = unfold(Q)
    assert Q.is_sink("2")
    over = uq.vertices_over("2")
    assert over and all(not uq.out_arrows(v) for v in over)
    # unfolding the reversed quiver equals reversing all lifted vertices
    for i in Q.vertices:
        lifted = set(uq.vertices_over(i))
        uq_rev = unfold(reverse_at(Q, i))
        flipped = {
            (p, t, s) if (s in lifted or t in lifted) else (p, s, t)
            for p, s, t in uq.arrow_set()
        }
        assert uq_rev.arrow_set() == flipped
        assert uq_rev.vertices == uq.vertices


def test_source_lifts():
    Q = parse_quiver("vertex 1\nvertex 2\narrow 1 2 7\n")
    uq = unfold(Q)
    for v in uq.vertices_over("1"):
        assert not uq.in_arrows(v)


def test_parallel_labelled_arrows_unfold_infinite():
    # two-vertex quivers with parallel arrows never unfold to a disjoint
    # union of finite-type diagrams
    for m in range(3, 9):
        for n in range(3, 9):
            Q = CoxeterQuiver(
                ["1", "2"], [Arrow("a", "1", "2", m), Arrow("b", "1", "2", n)]
            )
            comps = classify_graph(unfold(Q).to_coxeter())
            assert any(not t.is_dynkin for _, t in comps), (m, n)


def test_fold_dim_golden():
    Q = parse_quiver("vertex 1\nvertex 2\narrow 1 2 5\n")
    uq = unfold(Q)
    rv = fold_dim(uq, {"5:0@1": 1, "5:2@1": 1})
    assert rv.entry("1") == FusionElem.from_json({"5:0": 1, "5:2": 1}, (5,))
    assert not rv.entry("2")
    assert is_positive_vec(rv)
    assert not fold_dim(uq, {})


def test_fold_dim_classical_identity():
    Q = parse_quiver("vertex 1\nvertex 2\narrow 1 2\n")
    uq = unfold(Q)
    rv = fold_dim(uq, {"3:0@1": 2, "3:0@2": 1})
    assert rv.entry("1") == FusionElem.unit((3,)) * 2
    assert rv.entry("2") == FusionElem.unit((3,))

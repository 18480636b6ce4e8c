import random

from coxrep import (
    Arrow,
    CoxeterQuiver,
    FusionElem,
    dim_vector,
    enumerate_indecomposables,
    enumerate_paths,
    grade_class,
    is_positive_vec,
    parse_quiver,
    path_algebra_class,
    pf_eval,
)
from families import family_quiver

A2 = parse_quiver("vertex 1\nvertex 2\narrow 1 2\n")
A3 = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 3 2\narrow 2 1\n")
I25 = parse_quiver("vertex 1\nvertex 2\narrow 1 2 5\n")


def unit(Q):
    return FusionElem.unit(Q.label_set)


def test_enumerate_paths_trivial_grade():
    grade = enumerate_paths(A2, 0)
    assert grade.length == 0
    assert grade.paths == ("1", "2")


def test_enumerate_paths_golden():
    assert len(enumerate_paths(A2, 1).paths) == 1
    assert len(enumerate_paths(A3, 2).paths) == 1
    assert enumerate_paths(A3, 3).paths == ()


def test_enumerate_paths_composition_order():
    # the stored tuple reads right to left: last arrow first
    (path,) = enumerate_paths(A3, 2).paths
    arrows = {a.id: a for a in A3.arrows}
    last, first = path
    assert arrows[first].target == arrows[last].source


def test_grade_class_golden():
    assert grade_class(A2, 0) == unit(A2) * 2
    tau = FusionElem.from_json({"5:2": 1}, (5,))
    assert grade_class(I25, 1) == tau


def test_grade_class_two_label5_in_series():
    Q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2 5\narrow 2 3 5\n")
    got = grade_class(Q, 2)
    assert got == FusionElem.from_json({"5:0": 1, "5:2": 1}, (5,))


def test_path_algebra_class_classical():
    assert path_algebra_class(A2) == unit(A2) * 3
    assert path_algebra_class(A3) == unit(A3) * 6


def test_path_algebra_class_i25():
    expected = unit(I25) * 2 + FusionElem.from_json({"5:2": 1}, (5,))
    assert path_algebra_class(I25) == expected


def random_acyclic(rng, n, classical=False):
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = []
    k = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < 0.4:
                lab = 3 if classical else rng.choice([3, 3, 4, 5])
                arrows.append(Arrow(f"a{k}", str(i), str(j), lab))
                k += 1
    return CoxeterQuiver(vertices, arrows)


def count_paths(Q):
    # independent dynamic program over the arrow list
    total = len(Q.vertices)
    frontier = {(a.id,): a for a in Q.arrows}
    while frontier:
        total += len(frontier)
        nxt = {}
        for path, last in frontier.items():
            for b in Q.out_arrows(last.target):
                nxt[path + (b.id,)] = b
        frontier = nxt
    return total


def longest_path(Q):
    depth = {v: 0 for v in Q.vertices}
    changed = True
    while changed:
        changed = False
        for a in Q.arrows:
            if depth[a.target] < depth[a.source] + 1:
                depth[a.target] = depth[a.source] + 1
                changed = True
    return max(depth.values(), default=0)


def test_classical_total_matches_path_count():
    rng = random.Random(21)
    for _ in range(20):
        Q = random_acyclic(rng, rng.randint(1, 5), classical=True)
        total = path_algebra_class(Q)
        expected = count_paths(Q)
        assert total == unit(Q) * expected
        assert pf_eval(total) == expected


def test_nilpotence_past_longest_path():
    rng = random.Random(22)
    for _ in range(25):
        Q = random_acyclic(rng, rng.randint(1, 5))
        bound = longest_path(Q)
        for n in range(bound + 1, bound + 3):
            assert not grade_class(Q, n)
            assert enumerate_paths(Q, n).paths == ()


def test_simple_dim_vectors_generate_positively():
    # every indecomposable's dimension vector is a non-negative combination of
    # the vertex basis over the fusion ring
    for name in ["A3", "I2(5)", "B3"]:
        Q = family_quiver(name)
        for V in enumerate_indecomposables(Q):
            assert is_positive_vec(dim_vector(V))

"""Builders for Coxeter-Dynkin family quivers and their orientations."""

from __future__ import annotations

from itertools import product

from coxrep import Arrow, CoxeterQuiver


def path_quiver(labels, directions=None) -> CoxeterQuiver:
    """Linear quiver on len(labels)+1 vertices named 1..n.

    ``directions[k]`` True orients edge k forward (k+1 -> k+2), False
    backward; default all forward.
    """
    n = len(labels) + 1
    if directions is None:
        directions = [True] * len(labels)
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = []
    for k, (lab, fwd) in enumerate(zip(labels, directions)):
        s, t = str(k + 1), str(k + 2)
        if not fwd:
            s, t = t, s
        arrows.append(Arrow(f"a{k}", s, t, lab))
    return CoxeterQuiver(vertices, arrows)


def star_quiver(arms, directions=None) -> CoxeterQuiver:
    """Tree with one branch vertex "c" and classical arms of the given lengths."""
    vertices = ["c"]
    edges = []
    for ai, length in enumerate(arms):
        prev = "c"
        for k in range(length):
            name = f"{ai}.{k}"
            vertices.append(name)
            edges.append((prev, name))
            prev = name
    if directions is None:
        directions = [True] * len(edges)
    arrows = [
        Arrow(f"a{k}", (s if fwd else t), (t if fwd else s), 3)
        for k, ((s, t), fwd) in enumerate(zip(edges, directions))
    ]
    return CoxeterQuiver(vertices, arrows)


def family_quiver(name: str) -> CoxeterQuiver:
    """A representative orientation of the named Coxeter-Dynkin diagram."""
    fam, param = name[0], name[1:]
    if fam == "A":
        return path_quiver([3] * (int(param) - 1))
    if fam == "B":
        return path_quiver([4] + [3] * (int(param) - 2))
    if fam == "D":
        return star_quiver([1, 1, int(param) - 3])
    if fam == "E":
        return star_quiver({6: [1, 2, 2], 7: [1, 2, 3], 8: [1, 2, 4]}[int(param)])
    if fam == "F":
        return path_quiver([3, 4, 3])
    if fam == "G":
        return path_quiver([6])
    if fam == "H":
        return path_quiver([5] + [3] * (int(param) - 2))
    if fam == "I":
        m = int(name[name.index("(") + 1 : name.index(")")])
        return path_quiver([m])
    raise ValueError(f"unknown family {name!r}")


def all_orientations(Q: CoxeterQuiver):
    """Every choice of arrow directions of Q (trees stay acyclic)."""
    arrows = Q.arrows
    for flips in product([False, True], repeat=len(arrows)):
        yield CoxeterQuiver(
            Q.vertices,
            [
                Arrow(a.id, a.target, a.source, a.label) if flip else a
                for a, flip in zip(arrows, flips)
            ],
        )


ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E6": 36,
    "E7": 63,
    "E8": 120,
    "F4": 24,
    "G2": 6,
    "H3": 15,
    "H4": 60,
    "I2": lambda m: m,
}


def expected_root_count(name: str) -> int:
    if name in ("E6", "E7", "E8", "F4", "G2", "H3", "H4"):
        return ROOT_COUNTS[name]
    if name.startswith("I2("):
        return int(name[name.index("(") + 1 : name.index(")")])
    return ROOT_COUNTS[name[0]](int(name[1:]))

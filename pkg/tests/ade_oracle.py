"""Independent classical positive-root oracle for simply laced graphs.

Brute-force closure of the simple roots under integer reflections; no fusion
ring machinery is involved, so this is a separate route for all root counting
identities.
"""

from __future__ import annotations


def positive_roots_ade(vertices, edges) -> set[tuple[int, ...]]:
    """Positive roots of a simply laced graph as integer vectors.

    ``vertices`` is an ordered list of hashables, ``edges`` a list of pairs.
    The reflection at i sends v to v with v_i replaced by the sum of v over
    the neighbours of i minus v_i.
    """
    order = list(vertices)
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    nbr: list[list[int]] = [[] for _ in range(n)]
    for u, w in edges:
        nbr[idx[u]].append(idx[w])
        nbr[idx[w]].append(idx[u])
    simples = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        simples.append(tuple(e))
    seen: set[tuple[int, ...]] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                pairing = 2 * v[i] - sum(v[j] for j in nbr[i])
                w = list(v)
                w[i] = v[i] - pairing
                tw = tuple(w)
                if tw not in seen:
                    seen.add(tw)
                    nxt.append(tw)
        frontier = nxt
        if len(seen) > 100_000:
            raise RuntimeError("oracle closure exploded; graph is not finite type")
    return {
        v for v in seen if all(x >= 0 for x in v) and any(x > 0 for x in v)
    }


def count_positive_roots_of_components(Q_unfolded) -> int:
    """Sum of classical positive-root counts over the connected components of
    an unfolded quiver, computed purely from its undirected edge list."""
    adj: dict[str, set[str]] = {v: set() for v in Q_unfolded.vertices}
    for a in Q_unfolded.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    seen: set[str] = set()
    total = 0
    for v in Q_unfolded.vertices:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        edges = [
            (a.source, a.target)
            for a in Q_unfolded.arrows
            if a.source in comp and a.target in comp
        ]
        total += len(positive_roots_ade(sorted(comp), edges))
    return total

"""Unfolding a Coxeter quiver to a classical quiver with arrow provenance.

Vertices of the unfolded quiver are pairs (simple object, original vertex),
named "<simple-key>@<vertex-id>".  An arrow labelled n from i to j unfolds to
one arrow (B,i) -> (C,j) for every pair of simples whose n-components satisfy
the label-n summand condition with all other components equal.  Arrows coming
from different original arrows are distinct even between the same vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fusion import FusionElem, SimpleObject, irr_enumerate, tlj_simples, tlj_tensor
from .quiver import Arrow, CoxeterQuiver, UnknownVertex, vertex_key
from .rootsys import RootVector


@dataclass(frozen=True)
class UnfoldedArrow:
    id: str
    source: str
    target: str
    provenance: str


def vertex_name(simple: SimpleObject, v: str) -> str:
    return f"{simple.key}@{v}"


class UnfoldedQuiver:
    """The classical quiver underlying a Coxeter quiver, with provenance."""

    __slots__ = ("source", "irr", "vertices", "parts", "arrows", "_in", "_out")

    def __init__(self, source: CoxeterQuiver, irr, vertices, parts, arrows):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "irr", tuple(irr))
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "parts", dict(parts))
        object.__setattr__(self, "arrows", tuple(arrows))
        incoming = {v: [] for v in self.vertices}
        outgoing = {v: [] for v in self.vertices}
        for a in self.arrows:
            incoming[a.target].append(a)
            outgoing[a.source].append(a)
        object.__setattr__(self, "_in", incoming)
        object.__setattr__(self, "_out", outgoing)

    def __setattr__(self, *args):
        raise AttributeError("UnfoldedQuiver is immutable")

    def in_arrows(self, name: str) -> tuple[UnfoldedArrow, ...]:
        return tuple(self._in[name])

    def out_arrows(self, name: str) -> tuple[UnfoldedArrow, ...]:
        return tuple(self._out[name])

    def arrow_set(self) -> frozenset[tuple[str, str, str]]:
        """Arrows as (provenance, source, target) triples."""
        return frozenset((a.provenance, a.source, a.target) for a in self.arrows)

    def vertices_over(self, v: str) -> tuple[str, ...]:
        v = str(v)
        return tuple(name for name in self.vertices if self.parts[name][1] == v)

    def __eq__(self, other):
        return (
            isinstance(other, UnfoldedQuiver)
            and self.vertices == other.vertices
            and self.arrow_set() == other.arrow_set()
        )

    def __hash__(self):
        return hash((self.vertices, self.arrow_set()))

    def to_coxeter(self) -> CoxeterQuiver:
        """Forget provenance: the same quiver with every arrow classical."""
        return CoxeterQuiver(
            self.vertices,
            [Arrow(a.id, a.source, a.target, 3) for a in self.arrows],
        )

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {
                    "id": a.id,
                    "source": a.source,
                    "target": a.target,
                    "label": 3,
                    "provenance": a.provenance,
                }
                for a in self.arrows
            ],
        }

    def __repr__(self):
        return (
            f"UnfoldedQuiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"
        )


def unfold(Q: CoxeterQuiver) -> UnfoldedQuiver:
    """Construct the unfolded classical quiver of Q."""
    labels = Q.label_set
    irr = irr_enumerate(labels)
    names = []
    parts = {}
    for simple in irr:
        for v in Q.vertices:
            name = vertex_name(simple, v)
            names.append(name)
            parts[name] = (simple, v)
    names.sort(key=lambda nm: (parts[nm][0].key, vertex_key(parts[nm][1])))
    arrows = []
    for alpha in Q.arrows:
        n = alpha.label
        gen = n - 3  # index of the generating simple for this label
        for B in irr:
            for c in tlj_tensor(n, gen, B.index(n)):
                C = B.replace(n, c)
                src = vertex_name(B, alpha.source)
                tgt = vertex_name(C, alpha.target)
                arrows.append(
                    UnfoldedArrow(f"{alpha.id}:{src}>{tgt}", src, tgt, alpha.id)
                )
    arrows.sort(key=lambda a: (vertex_key(a.provenance), a.source, a.target))
    return UnfoldedQuiver(Q, irr, names, parts, arrows)


def unfolded_arrow_count(Q: CoxeterQuiver, arrow_id: str) -> int:
    """Number of unfolded arrows of a given arrow of Q.

    An arrow labelled n contributes 2(n-2) arrows per complement simple when n
    is even and (n-2) when n is odd; the number of complements is
    |Irr| / |simples at n|.
    """
    match = [a for a in Q.arrows if a.id == str(arrow_id)]
    if not match:
        raise UnknownVertex(f"unknown arrow id {arrow_id!r}")
    n = match[0].label
    total = 1
    for m in Q.label_set:
        total *= len(tlj_simples(m))
    r = total // len(tlj_simples(n))
    per = (n - 2) if n % 2 else 2 * (n - 2)
    return r * per


def fold_dim(uq: UnfoldedQuiver, dims: dict[str, int]) -> RootVector:
    """Collapse unfolded dimensions to one fusion-ring class per original vertex."""
    labels = uq.source.label_set
    entries = {v: FusionElem.zero(labels) for v in uq.source.vertices}
    for name, d in dims.items():
        if name not in uq.parts:
            raise UnknownVertex(f"unknown unfolded vertex {name!r}")
        d = int(d)
        if d < 0:
            raise ValueError("dimensions must be non-negative")
        if d:
            simple, v = uq.parts[name]
            entries[v] = entries[v] + FusionElem.simple(labels, simple) * d
    return RootVector(labels, entries)

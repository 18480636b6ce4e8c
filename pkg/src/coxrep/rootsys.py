"""Root systems over fusion rings.

The lattice is the free fusion-ring module on the vertices of the underlying
labelled graph; the symmetric form takes the value 2 on a diagonal pair and
minus the sum of the label classes on an edge pair.  Roots are the orbit of
the standard basis under all simple reflections; positive roots are the orbit
members with non-negative classes at every vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .fusion import (
    FusionElem,
    SimpleObject,
    invertible_simples,
    irr_enumerate,
    is_positive_elem,
)
from .quiver import CoxeterQuiver


class MismatchedQuiver(Exception):
    """Root vector does not live over the given quiver's label set."""


class InvalidOrdering(Exception):
    """The vertex list is not a permutation of the quiver's vertices."""


class CapExceeded(Exception):
    """No depositivizing power was found below the cap."""


class OrbitBudgetExceeded(Exception):
    """Reflection orbit grew past the budget; carries the partial set."""

    def __init__(self, message: str, partial: "RootSet"):
        super().__init__(message)
        self.partial = partial


class RootVector:
    """One fusion-ring class per vertex; zero entries are not stored."""

    __slots__ = ("labels", "entries", "_key")

    def __init__(self, labels, entries: dict[str, FusionElem]):
        labels = tuple(sorted(set(labels)))
        clean = {}
        for v, e in entries.items():
            if e.labels != labels:
                raise MismatchedQuiver(
                    f"entry at {v!r} over labels {e.labels}, expected {labels}"
                )
            if e:
                clean[str(v)] = e
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "entries", clean)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, *args):
        raise AttributeError("RootVector is immutable")

    @classmethod
    def zero(cls, labels) -> "RootVector":
        return cls(labels, {})

    @classmethod
    def basis(cls, Q: CoxeterQuiver, i: str) -> "RootVector":
        Q._require(i)
        labels = Q.label_set
        return cls(labels, {str(i): FusionElem.unit(labels)})

    def entry(self, v: str) -> FusionElem:
        return self.entries.get(str(v), FusionElem.zero(self.labels))

    def __add__(self, other: "RootVector") -> "RootVector":
        if self.labels != other.labels:
            raise MismatchedQuiver("label sets differ")
        out = dict(self.entries)
        for v, e in other.entries.items():
            out[v] = out[v] + e if v in out else e
        return RootVector(self.labels, out)

    def __sub__(self, other: "RootVector") -> "RootVector":
        return self + (-other)

    def __neg__(self) -> "RootVector":
        return RootVector(self.labels, {v: -e for v, e in self.entries.items()})

    def scale(self, x) -> "RootVector":
        """Multiply every entry by a fusion element or integer."""
        return RootVector(self.labels, {v: e * x for v, e in self.entries.items()})

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, RootVector)
            and self.labels == other.labels
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.labels, self.key()))

    def key(self) -> tuple:
        if self._key is None:
            object.__setattr__(
                self,
                "_key",
                tuple(sorted((v, e.key()) for v, e in self.entries.items())),
            )
        return self._key

    def serialize(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def to_json(self) -> dict:
        return {v: e.to_json() for v, e in sorted(self.entries.items())}

    @classmethod
    def from_json(cls, obj, labels) -> "RootVector":
        labels = tuple(sorted(set(labels)))
        return cls(
            labels, {str(v): FusionElem.from_json(e, labels) for v, e in obj.items()}
        )

    def __repr__(self):
        if not self.entries:
            return "RootVector(0)"
        body = "; ".join(f"{v}: {e!r}" for v, e in sorted(self.entries.items()))
        return f"RootVector({body})"


def is_positive_vec(v: RootVector) -> bool:
    """Every stored entry is a positive class and the vector is non-zero."""
    return bool(v.entries) and all(is_positive_elem(e) for e in v.entries.values())


def _edge_classes(Q: CoxeterQuiver) -> dict[str, list[tuple[str, FusionElem]]]:
    # per vertex: (neighbour, label class) with one item per incident edge
    labels = Q.label_set
    out: dict[str, list[tuple[str, FusionElem]]] = {v: [] for v in Q.vertices}
    for a in Q.arrows:
        gen = FusionElem.simple(
            labels, SimpleObject.unit(labels).replace(a.label, a.label - 3)
        )
        out[a.source].append((a.target, gen))
        out[a.target].append((a.source, gen))
    return out


def bilinear_form(Q: CoxeterQuiver, u: RootVector, v: RootVector) -> FusionElem:
    """Fusion-ring valued symmetric form: 2 on the diagonal, minus the sum of
    label classes over the edges between two distinct vertices."""
    labels = Q.label_set
    for w in (u, v):
        if w.labels != labels:
            raise MismatchedQuiver("root vector over a different label set")
        for x in w.entries:
            Q._require(x)
    total = FusionElem.zero(labels)
    for x, ux in u.entries.items():
        vx = v.entries.get(x)
        if vx is not None:
            total = total + ux * vx * 2
    edge_classes = _edge_classes(Q)
    for x, ux in u.entries.items():
        for y, gen in edge_classes[x]:
            vy = v.entries.get(y)
            if vy is not None:
                total = total - gen * ux * vy
    return total


def reflect(Q: CoxeterQuiver, i: str, v: RootVector) -> RootVector:
    """Simple reflection at i: subtract B(e_i, v) from the i-th entry."""
    i = str(i)
    Q._require(i)
    if v.labels != Q.label_set:
        raise MismatchedQuiver("root vector over a different label set")
    labels = Q.label_set
    new_i = -v.entry(i)
    for a in Q.incident_arrows(i):
        j = a.target if a.source == i else a.source
        vj = v.entries.get(j)
        if vj is not None:
            gen = FusionElem.simple(
                labels, SimpleObject.unit(labels).replace(a.label, a.label - 3)
            )
            new_i = new_i + gen * vj
    out = dict(v.entries)
    if new_i:
        out[i] = new_i
    else:
        out.pop(i, None)
    return RootVector(labels, out)


def _check_ordering(Q: CoxeterQuiver, ordering) -> tuple[str, ...]:
    ordering = tuple(str(x) for x in ordering)
    if sorted(ordering) != sorted(Q.vertices):
        raise InvalidOrdering("ordering is not a permutation of the vertices")
    return ordering


def coxeter_apply(Q: CoxeterQuiver, ordering, v: RootVector) -> RootVector:
    """Apply the Coxeter element of the ordering: reflections in list order."""
    ordering = _check_ordering(Q, ordering)
    for i in ordering:
        v = reflect(Q, i, v)
    return v


def coxeter_order(Q: CoxeterQuiver, ordering) -> int:
    """Order of the Coxeter element acting on the standard basis."""
    ordering = _check_ordering(Q, ordering)
    basis = [RootVector.basis(Q, i) for i in Q.vertices]
    current = list(basis)
    for power in range(1, 10000):
        current = [coxeter_apply(Q, ordering, w) for w in current]
        if current == basis:
            return power
    raise CapExceeded("Coxeter element order not found below 10000")


@dataclass(frozen=True)
class RootSet:
    """A deduplicated set of root vectors; closed means stable under all
    simple reflections (up to the sign filter used to build it)."""

    roots: frozenset[RootVector]
    closed: bool

    def __len__(self):
        return len(self.roots)

    def sorted(self) -> list[RootVector]:
        return sorted(self.roots, key=lambda r: r.serialize())


DEFAULT_BUDGET = 10_000


def root_orbit(Q: CoxeterQuiver, budget: int = DEFAULT_BUDGET) -> frozenset[RootVector]:
    """Closure of the simple roots under all simple reflections, both signs."""
    seen: set[RootVector] = set()
    frontier = [RootVector.basis(Q, i) for i in Q.vertices]
    seen.update(frontier)
    while frontier:
        nxt = []
        for w in frontier:
            for i in Q.vertices:
                r = reflect(Q, i, w)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
                    if len(seen) > budget:
                        partial = RootSet(
                            frozenset(x for x in seen if is_positive_vec(x)), False
                        )
                        raise OrbitBudgetExceeded(
                            f"orbit exceeded budget {budget}", partial
                        )
        frontier = nxt
    return frozenset(seen)


def positive_roots(Q: CoxeterQuiver, budget: int = DEFAULT_BUDGET) -> RootSet:
    """Positive members of the reflection orbit of the simple roots, one per
    class under scaling by invertible simple classes.

    When an even label is present its top simple is an invertible involution
    and the raw orbit carries each root twice (the root and its twist); the
    canonical representative is the serialization-minimal one.  This is what
    makes positive root counts match the classical Coxeter tables and the
    extended positive roots a disjoint union over the simples.
    """
    orbit = root_orbit(Q, budget)
    units = [
        FusionElem.simple(Q.label_set, s)
        for s in invertible_simples(Q.label_set)
        if not s.is_unit()
    ]
    chosen: dict[RootVector, RootVector] = {}
    for r in orbit:
        if not is_positive_vec(r):
            continue
        twisted = [r] + [r.scale(u) for u in units]
        rep = min(twisted, key=lambda w: w.serialize())
        chosen[rep] = rep
    return RootSet(frozenset(chosen), True)


def extended_positive_roots(Q: CoxeterQuiver, budget: int = DEFAULT_BUDGET) -> RootSet:
    """All products (simple class) * (positive root), deduplicated."""
    base = positive_roots(Q, budget)
    labels = Q.label_set
    out: set[RootVector] = set()
    for simple in irr_enumerate(labels):
        x = FusionElem.simple(labels, simple)
        for r in base.roots:
            out.add(r.scale(x))
    return RootSet(frozenset(out), base.closed)


def depositivize_exponent(
    Q: CoxeterQuiver, ordering, v: RootVector, cap: int = 1000
) -> int:
    """Least r >= 1 with the r-th Coxeter power of v not positive."""
    ordering = _check_ordering(Q, ordering)
    if not is_positive_vec(v):
        raise ValueError("starting vector must be positive")
    w = v
    for r in range(1, cap + 1):
        w = coxeter_apply(Q, ordering, w)
        if not is_positive_vec(w):
            return r
    raise CapExceeded(f"no depositivizing exponent below {cap}")

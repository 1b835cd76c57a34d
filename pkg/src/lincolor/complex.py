"""Multisets, finite abstract simplicial complexes and elementary constructions.

Complexes are stored by their facets only. Faces are enumerated on demand.
Vertices are small non-negative integers; display tokens are optional and
only used for IO.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from itertools import combinations

from .errors import OverlappingVertexSets, UnknownVertex


class Multiset(Mapping):
    """Finite multiset of hashable symbols, stored as symbol -> multiplicity.

    Symbols with multiplicity zero are never stored. Accepts either a mapping
    of counts or an iterable of (possibly repeated) symbols.
    """

    __slots__ = ("_counts", "_hash")

    def __init__(self, data=()):
        if isinstance(data, Mapping):
            items = data.items()
        else:
            items = Counter(data).items()
        counts = {}
        for s, m in items:
            if m < 0:
                raise ValueError(f"negative multiplicity for {s!r}")
            if m:
                counts[s] = int(m)
        self._counts = counts
        self._hash = None

    def __getitem__(self, s):
        return self._counts[s]

    def __iter__(self):
        return iter(self._counts)

    def __len__(self):
        return len(self._counts)

    def __contains__(self, s):
        return s in self._counts

    def count(self, s):
        return self._counts.get(s, 0)

    def __eq__(self, other):
        if isinstance(other, Multiset):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{s!r}: {m}" for s, m in sorted(self._counts.items()))
        return f"Multiset({{{body}}})"

    @property
    def cardinality(self):
        return sum(self._counts.values())

    def support(self):
        return frozenset(self._counts)

    def union(self, other):
        """Multiplicities add: (M1 u M2)(s) = M1(s) + M2(s)."""
        out = Counter(self._counts)
        out.update(other._counts)
        return Multiset(out)

    def intersection(self, other):
        return Multiset({s: min(m, other.count(s)) for s, m in self._counts.items()})

    def issubset(self, other):
        return all(other.count(s) >= m for s, m in self._counts.items())

    __le__ = issubset

    def __lt__(self, other):
        return self != other and self.issubset(other)

    def sort_key(self):
        return tuple(sorted(self._counts.items()))


def multiset_union_intersect(m1, m2):
    return m1.union(m2), m1.intersection(m2)


def maximal_sets(sets):
    """Return the inclusion-maximal members of ``sets`` as a frozenset."""
    uniq = sorted({frozenset(s) for s in sets}, key=len, reverse=True)
    kept = []
    for s in uniq:
        if not any(s <= t for t in kept):
            kept.append(s)
    return frozenset(kept)


class SimplicialComplex:
    """A finite abstract simplicial complex given by its facets.

    The facet family is pruned to an antichain on construction. The empty
    complex (no facets) is allowed and is distinct from a one-point complex;
    a complex whose only facet is the empty set is rejected.
    """

    __slots__ = ("facets", "vertices", "vertex_labels", "_sorted", "_hash")

    def __init__(self, facets: Iterable[Iterable[int]] = (), vertex_labels: Mapping | None = None):
        sets = [frozenset(f) for f in facets]
        if sets and all(not s for s in sets):
            raise ValueError("a complex whose only facet is empty is not representable")
        self.facets = maximal_sets(s for s in sets if s)
        self.vertices = frozenset().union(*self.facets)
        if vertex_labels is not None:
            vertex_labels = {v: vertex_labels[v] for v in self.vertices if v in vertex_labels}
        self.vertex_labels = vertex_labels or None
        self._sorted = None
        self._hash = None

    @classmethod
    def simplex(cls, vertices):
        return cls([vertices])

    @classmethod
    def boundary_of_simplex(cls, vertices):
        vs = sorted(vertices)
        return cls(combinations(vs, len(vs) - 1))

    @classmethod
    def from_faces(cls, faces):
        return cls(faces)

    def __eq__(self, other):
        if isinstance(other, SimplicialComplex):
            return self.facets == other.facets
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.facets)
        return self._hash

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.sorted_facets())
        return f"SimplicialComplex([{body}])"

    def __len__(self):
        return len(self.facets)

    def sorted_facets(self):
        """Facets as sorted tuples, ordered lexicographically."""
        if self._sorted is None:
            self._sorted = tuple(sorted(tuple(sorted(f)) for f in self.facets))
        return self._sorted

    @property
    def is_empty(self):
        return not self.facets

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def dim(self):
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def is_point(self):
        return len(self.vertices) == 1

    def label(self, v):
        if self.vertex_labels and v in self.vertex_labels:
            return str(self.vertex_labels[v])
        return str(v)

    def with_labels(self, labels):
        return SimplicialComplex(self.facets, labels)

    def contains_face(self, s):
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def faces(self, include_empty=False):
        """Yield every face once, smallest first."""
        seen = set()
        for f in self.sorted_facets():
            for r in range(0 if include_empty else 1, len(f) + 1):
                for s in combinations(f, r):
                    if s not in seen:
                        seen.add(s)
        return sorted((frozenset(s) for s in seen), key=lambda s: (len(s), sorted(s)))

    def faces_by_dim(self):
        out = {}
        for s in self.faces():
            out.setdefault(len(s) - 1, []).append(tuple(sorted(s)))
        for d in out:
            out[d].sort()
        return out

    def face_count(self):
        return len(self.faces())

    def f_vector(self):
        by_dim = self.faces_by_dim()
        return [len(by_dim.get(d, ())) for d in range(self.dim + 1)]

    def facets_containing(self, v):
        return [f for f in self.sorted_facets() if v in f]

    def facet_sets(self):
        """Map each vertex v to the set of facet indices containing v.

        Indices refer to :meth:`sorted_facets`.
        """
        out = {v: set() for v in self.vertices}
        for i, f in enumerate(self.sorted_facets()):
            for v in f:
                out[v].add(i)
        return {v: frozenset(s) for v, s in out.items()}

    def _check_vertex(self, v):
        if v not in self.vertices:
            raise UnknownVertex(v)

    def deletion(self, v):
        self._check_vertex(v)
        return SimplicialComplex((f - {v} for f in self.facets if f != {v}), self.vertex_labels)

    def link(self, v):
        self._check_vertex(v)
        rest = [f - {v} for f in self.facets if v in f]
        if all(not r for r in rest):
            # lk of an isolated vertex is {empty face}; stored as the empty complex
            return SimplicialComplex((), self.vertex_labels)
        return SimplicialComplex(rest, self.vertex_labels)

    def star(self, v):
        self._check_vertex(v)
        return SimplicialComplex((f for f in self.facets if v in f), self.vertex_labels)

    def induced(self, vertices):
        """Induced subcomplex on a vertex subset."""
        w = frozenset(vertices)
        return SimplicialComplex((f & w for f in self.facets if f & w), self.vertex_labels)

    def relabel(self, mapping):
        """Apply an injective vertex map given as a dict or callable."""
        fn = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
        image = {v: fn(v) for v in self.vertices}
        if len(set(image.values())) != len(image):
            raise ValueError("relabeling is not injective")
        labels = None
        if self.vertex_labels:
            labels = {image[v]: t for v, t in self.vertex_labels.items()}
        return SimplicialComplex(([image[v] for v in f] for f in self.facets), labels)

    def shifted(self, offset):
        return self.relabel(lambda v: v + offset)

    def normalized(self):
        """Relabel vertices to 0..n-1 in ascending order."""
        order = {v: i for i, v in enumerate(sorted(self.vertices))}
        return self.relabel(order)

    def is_subcomplex_of(self, other):
        return all(other.contains_face(f) for f in self.facets)

    def cone_points(self):
        """Vertices lying in every facet."""
        if not self.facets:
            return frozenset()
        return frozenset.intersection(*self.facets)


def join(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join of complexes on disjoint vertex sets."""
    if x.vertices & y.vertices:
        raise OverlappingVertexSets(sorted(x.vertices & y.vertices))
    labels = None
    if x.vertex_labels or y.vertex_labels:
        labels = {**(x.vertex_labels or {}), **(y.vertex_labels or {})}
    if x.is_empty:
        return SimplicialComplex(y.facets, labels)
    if y.is_empty:
        return SimplicialComplex(x.facets, labels)
    return SimplicialComplex((f | g for f in x.facets for g in y.facets), labels)


def relabel_disjoint(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """Shift ``y`` so that its vertex ids lie above every id of ``x``."""
    offset = max(x.vertices, default=-1) + 1 - min(y.vertices, default=0)
    return y.shifted(offset) if offset > 0 else y


def link_and_deletion(d: SimplicialComplex, v):
    """Return ``(deletion, link)`` of vertex ``v``."""
    return d.deletion(v), d.link(v)


def point(v=0):
    return SimplicialComplex([[v]])

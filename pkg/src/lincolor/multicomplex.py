"""Multicomplexes and their correspondence with linearly coloured complexes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .coloring import LinearColoring, canonical_labeling, require_linear
from .complex import Multiset, SimplicialComplex
from .errors import EmptyMulticomplex


class Multicomplex:
    """Downward-closed family of multisets, stored by its maximal faces."""

    __slots__ = ("maximal_faces",)

    def __init__(self, faces):
        ms = {m if isinstance(m, Multiset) else Multiset(m) for m in faces}
        ms.discard(Multiset())
        self.maximal_faces = frozenset(m for m in ms if not any(m < o for o in ms))

    def __eq__(self, other):
        return isinstance(other, Multicomplex) and self.maximal_faces == other.maximal_faces

    def __hash__(self):
        return hash(self.maximal_faces)

    def __repr__(self):
        return f"Multicomplex({self.sorted_maximal_faces()})"

    def sorted_maximal_faces(self):
        return sorted(self.maximal_faces, key=Multiset.sort_key)

    @property
    def symbols(self):
        return frozenset().union(*(m.support() for m in self.maximal_faces))

    def max_multiplicity(self, s):
        return max((m.count(s) for m in self.maximal_faces), default=0)

    def __contains__(self, m):
        m = m if isinstance(m, Multiset) else Multiset(m)
        return any(m.issubset(f) for f in self.maximal_faces)

    def faces(self):
        """Every face, including the empty multiset."""
        out = set()
        for f in self.maximal_faces:
            keys = sorted(f)
            for counts in product(*(range(f[s] + 1) for s in keys)):
                out.add(Multiset(dict(zip(keys, counts))))
        return out


def associated_multicomplex(d: SimplicialComplex, kappa: LinearColoring) -> Multicomplex:
    """Colour multisets of the faces of ``d``; maximal faces are the F_kappa."""
    require_linear(d, kappa)
    tops = [kappa.face_multiset(f) for f in d.facets]
    if len(set(tops)) != len(tops) or any(a < b for a in tops for b in tops):
        raise AssertionError("facet colour multisets are not an antichain")
    return Multicomplex(tops)


def underlying_complex(g: Multicomplex) -> SimplicialComplex:
    return SimplicialComplex(m.support() for m in g.maximal_faces)


def realize(g: Multicomplex):
    """Build a complex and linear colouring whose multicomplex is ``g``.

    Colour ``i`` receives vertices ``a^i_1 .. a^i_{n_i}``, numbered
    consecutively by colour, where n_i is the largest multiplicity of i. The
    r-th smallest id of colour i is a^i_r. Each maximal multiset M gives the
    facet {a^i_r : r <= M(i)}.
    """
    if not g.maximal_faces:
        raise EmptyMulticomplex("cannot realise an empty multicomplex")
    k = max(g.symbols)
    if set(g.symbols) != set(range(1, k + 1)):
        raise ValueError("multicomplex symbols must be exactly 1..k")
    ids = {}
    labels = {}
    nxt = 0
    for i in range(1, k + 1):
        for r in range(1, g.max_multiplicity(i) + 1):
            ids[i, r] = nxt
            labels[nxt] = f"a{i}_{r}"
            nxt += 1
    facets = [[ids[i, r] for i in m for r in range(1, m[i] + 1)] for m in g.maximal_faces]
    d = SimplicialComplex(facets, labels)
    kappa = LinearColoring({v: i for (i, _), v in ids.items()})
    if associated_multicomplex(d, kappa) != g:
        raise AssertionError("realisation does not reproduce the multicomplex")
    return d, kappa


def roundtrip_isomorphism(d: SimplicialComplex, kappa: LinearColoring):
    """Explicit isomorphism d -> realize(associated_multicomplex(d, kappa)).

    Sends the r-th vertex of colour i in the canonical labelling to a^i_r.
    Returns ``(f, realised_complex)`` after checking facets go to facets.
    """
    labeling = canonical_labeling(d, kappa)
    target, tkappa = realize(associated_multicomplex(d, kappa))
    by_color = tkappa.classes()
    f = {}
    for i, seq in labeling.items():
        for r, v in enumerate(seq):
            f[v] = by_color[i][r]
    image = {frozenset(f[v] for v in facet) for facet in d.facets}
    if image != set(target.facets) or len(set(f.values())) != len(f):
        raise AssertionError("round-trip map is not an isomorphism")
    return f, target


@dataclass(frozen=True)
class RetractionMaps:
    """phi: faces of d -> faces of u(Gamma); incl: u(Gamma) -> faces of d."""

    complex: SimplicialComplex
    coloring: LinearColoring
    base: SimplicialComplex
    first: dict

    def phi(self, face):
        return frozenset(self.coloring[v] for v in face)

    def incl(self, face):
        return frozenset(self.first[c] for c in face)

    def verify(self):
        d, base = self.complex, self.base
        for s in d.faces():
            img = self.phi(s)
            if not base.contains_face(img):
                raise AssertionError(f"phi({sorted(s)}) is not a face")
            for v in s:
                if not self.phi(s - {v}) <= img:
                    raise AssertionError("phi is not order preserving")
        for s in base.faces():
            img = self.incl(s)
            if not d.contains_face(img):
                raise AssertionError(f"incl({sorted(s)}) is not a face")
            if self.phi(img) != s:
                raise AssertionError("phi o incl is not the identity")
            for c in s:
                if not self.incl(s - {c}) <= img:
                    raise AssertionError("incl is not order preserving")
        return True

    def image(self):
        return SimplicialComplex(self.incl(s) for s in self.base.facets)


def retraction_maps(d: SimplicialComplex, kappa: LinearColoring) -> RetractionMaps:
    labeling = canonical_labeling(d, kappa)
    base = underlying_complex(associated_multicomplex(d, kappa))
    maps = RetractionMaps(d, kappa, base, {c: seq[0] for c, seq in labeling.items()})
    maps.verify()
    return maps

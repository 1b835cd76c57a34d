"""Canonical forms and isomorphism testing for small complexes.

Colour refinement on vertices (iterated facet signatures) followed by
individualisation of the first non-singleton cell. The search is exhaustive
over the refinement tree, so the form is exact; it is fast as long as the
complex is not extremely symmetric, which is fine for ten vertices or so.
"""

from __future__ import annotations

from .complex import SimplicialComplex


def _refine(vertices, incidence, colors):
    n_classes = len(set(colors.values()))
    while True:
        sig = {}
        for v in vertices:
            sig[v] = (colors[v], tuple(sorted(tuple(sorted(colors[w] for w in f)) for f in incidence[v])))
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in vertices}
        k = len(ranks)
        colors = new
        if k == n_classes:
            return colors
        n_classes = k


def _search(vertices, facets, incidence, colors, best):
    colors = _refine(vertices, incidence, colors)
    cells = {}
    for v in vertices:
        cells.setdefault(colors[v], []).append(v)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            target = c
            break
    if target is None:
        order = {v: colors[v] for v in vertices}
        form = tuple(sorted(tuple(sorted(order[v] for v in f)) for f in facets))
        if best[0] is None or form < best[0]:
            best[0] = form
            best[1] = order
        return
    base = {v: 2 * c + 1 for v, c in colors.items()}
    for v in sorted(cells[target]):
        trial = dict(base)
        trial[v] = 2 * target
        _search(vertices, facets, incidence, trial, best)


def canonical_relabeling(d: SimplicialComplex):
    """Return ``(form, mapping)``.

    ``form`` is a tuple of sorted facet tuples over 0..n-1 that is equal for
    two complexes iff they are isomorphic; ``mapping`` sends each vertex of
    ``d`` to its canonical id.
    """
    vertices = sorted(d.vertices)
    facets = d.sorted_facets()
    incidence = {v: [f for f in facets if v in f] for v in vertices}
    best = [None, None]
    _search(vertices, facets, incidence, {v: 0 for v in vertices}, best)
    if best[0] is None:
        return (), {}
    return best[0], best[1]


def canonical_form(d: SimplicialComplex):
    return canonical_relabeling(d)[0]


def canonical_complex(d: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(canonical_form(d))


def are_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    if len(a.vertices) != len(b.vertices) or len(a.facets) != len(b.facets):
        return False
    if sorted(map(len, a.facets)) != sorted(map(len, b.facets)):
        return False
    return canonical_form(a) == canonical_form(b)


def find_isomorphism(a: SimplicialComplex, b: SimplicialComplex):
    """Vertex bijection a -> b carrying facets onto facets, or None."""
    fa, ma = canonical_relabeling(a)
    fb, mb = canonical_relabeling(b)
    if fa != fb:
        return None
    inv_b = {c: v for v, c in mb.items()}
    return {v: inv_b[c] for v, c in ma.items()}


def is_isomorphism(a: SimplicialComplex, b: SimplicialComplex, f) -> bool:
    if set(f) != set(a.vertices) or set(f.values()) != set(b.vertices):
        return False
    return {frozenset(f[v] for v in s) for s in a.facets} == set(b.facets)

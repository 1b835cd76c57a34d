"""Brute-force reference computations used to cross-check fast paths.

These deliberately avoid the facet-set preorder: linearity is judged by the
multiset intersection condition on facet pairs, and the linear chromatic
number by backtracking over all set partitions of the vertices.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations


def _excess(f1, f2, color):
    """sum_c min(#c in F1, #c in F2) - |F1 n F2| over coloured vertices."""
    a = Counter(color[v] for v in f1 if v in color)
    b = Counter(color[v] for v in f2 if v in color)
    inter = sum(min(m, b[c]) for c, m in a.items())
    return inter - sum(1 for v in f1 if v in f2 and v in color)


def multiset_linear(facets, color):
    return all(_excess(f1, f2, color) == 0 for f1, f2 in combinations(facets, 2))


def lchr_bruteforce(d):
    """Minimum number of blocks of a vertex partition satisfying the multiset test."""
    facets = [frozenset(f) for f in d.sorted_facets()]
    verts = sorted(d.vertices)
    # facet pairs touching each vertex, checked when that vertex gets a colour
    touching = {v: [(f1, f2) for f1, f2 in combinations(facets, 2) if v in f1 ^ f2] for v in verts}
    best = [len(verts)]
    color = {}

    def extend(i, k):
        if k >= best[0]:
            return
        if i == len(verts):
            best[0] = k
            return
        v = verts[i]
        for c in range(1, k + 2):
            color[v] = c
            if all(_excess(f1, f2, color) == 0 for f1, f2 in touching[v]):
                extend(i + 1, max(k, c))
            del color[v]

    extend(0, 0)
    return best[0]


def set_partitions(items):
    """All set partitions of ``items`` (restricted growth order)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def homology_ranks_over_q(d):
    """Reduced Betti numbers over Q via exact fraction elimination."""
    from fractions import Fraction

    faces = {}
    for f in d.sorted_facets():
        for r in range(1, len(f) + 1):
            for s in combinations(f, r):
                faces.setdefault(r - 1, set()).add(s)
    top = max(faces, default=-1)
    basis = {i: sorted(faces.get(i, ())) for i in range(top + 1)}
    basis[-1] = [()]

    def rank(i):
        if i not in basis or i - 1 not in basis or i < 0:
            return 0
        rows = {f: n for n, f in enumerate(basis[i - 1])}
        m = [[Fraction(0)] * len(basis[i]) for _ in basis[i - 1]]
        for c, f in enumerate(basis[i]):
            for j in range(len(f)):
                m[rows[f[:j] + f[j + 1:]]][c] += (-1) ** j
        r = 0
        cols = len(basis[i])
        for c in range(cols):
            piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            for k in range(len(m)):
                if k != r and m[k][c] != 0:
                    q = m[k][c] / m[r][c]
                    m[k] = [x - q * y for x, y in zip(m[k], m[r])]
            r += 1
        return r

    return {i: len(basis[i]) - rank(i) - rank(i + 1) for i in range(-1, top + 1)}

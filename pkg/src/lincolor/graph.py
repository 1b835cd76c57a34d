"""Simple graphs, neighborhood complexes and chromatic bounds."""

from __future__ import annotations

import warnings
from itertools import combinations
from typing import NamedTuple

from .coloring import LinearColoring, FacetSetPreorder, is_linear_coloring, lchr
from .complex import SimplicialComplex
from .errors import BoundViolated, BudgetExhausted, NotAProperColoring

DEFAULT_BUDGET = 1_000_000


class SimpleGraph:
    def __init__(self, vertices=(), edges=()):
        adj = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u!r}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self.adj = {v: frozenset(n) for v, n in adj.items()}

    @classmethod
    def cycle(cls, n, start=1):
        vs = list(range(start, start + n))
        return cls(vs, zip(vs, vs[1:] + vs[:1]))

    @classmethod
    def complete(cls, n, start=1):
        vs = list(range(start, start + n))
        return cls(vs, combinations(vs, 2))

    @classmethod
    def complete_bipartite(cls, a, b, start=1):
        left = list(range(start, start + a))
        right = list(range(start + a, start + a + b))
        return cls(left + right, [(u, v) for u in left for v in right])

    @property
    def vertices(self):
        return sorted(self.adj)

    @property
    def edges(self):
        return sorted({tuple(sorted((u, v))) for u in self.adj for v in self.adj[u]})

    def neighborhood(self, v):
        return self.adj[v]

    def isolated(self):
        return [v for v in self.vertices if not self.adj[v]]

    def is_proper_coloring(self, nu):
        return all(nu[u] != nu[v] for u, v in self.edges)

    def __repr__(self):
        return f"SimpleGraph({self.vertices}, {self.edges})"


def neighborhood_complex(g: SimpleGraph) -> SimplicialComplex:
    """Faces are vertex sets with a common neighbour; vertex ids are kept."""
    iso = g.isolated()
    if iso:
        warnings.warn(f"isolated vertices dropped from the neighborhood complex: {iso}", stacklevel=2)
    return SimplicialComplex(g.adj[v] for v in g.vertices if g.adj[v])


def _max_clique(g):
    best = []

    def grow(clique, cand):
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        for i, v in enumerate(cand):
            if len(clique) + len(cand) - i <= len(best):
                return
            grow(clique + [v], [w for w in cand[i + 1:] if w in g.adj[v]])

    grow([], g.vertices)
    return best


def _k_colorable(g, k, budget, counter):
    colors = {}
    order = g.vertices

    def pick():
        # DSATUR: most distinct neighbour colours, then degree, then id
        best = None
        for v in order:
            if v in colors:
                continue
            sat = len({colors[w] for w in g.adj[v] if w in colors})
            key = (-sat, -len(g.adj[v]), v)
            if best is None or key < best[0]:
                best = (key, v)
        return None if best is None else best[1]

    def solve():
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExhausted(nodes=counter[0])
        v = pick()
        if v is None:
            return True
        used = {colors[w] for w in g.adj[v] if w in colors}
        top = max(colors.values(), default=0)
        for c in range(1, min(k, top + 1) + 1):
            if c in used:
                continue
            colors[v] = c
            if solve():
                return True
            del colors[v]
        return False

    return dict(colors) if solve() else None


def chromatic_number(g: SimpleGraph, budget=DEFAULT_BUDGET):
    """Exact chromatic number and an optimal colouring (1..chi)."""
    if not g.vertices:
        return 0, {}
    counter = [0]
    k = max(1, len(_max_clique(g)))
    while True:
        col = _k_colorable(g, k, budget, counter)
        if col is not None:
            return k, col
        k += 1


class GraphBound(NamedTuple):
    chi: int
    lchr_n: int
    bound_holds: bool


def chromatic_vs_lchr(g: SimpleGraph, budget=DEFAULT_BUDGET) -> GraphBound:
    """chi(G), lchr of the neighborhood complex, and whether lchr >= chi.

    Also reads the lchr witness as a vertex colouring of G and insists it is
    proper.
    """
    chi, _ = chromatic_number(g, budget)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        n = neighborhood_complex(g)
    k, kappa = lchr(n)
    sub = [(u, v) for u, v in g.edges if u in n.vertices and v in n.vertices]
    if any(kappa[u] == kappa[v] for u, v in sub):
        raise BoundViolated("linear colouring of the neighborhood complex is not proper")
    bound = k >= chi
    if not bound:
        raise BoundViolated(f"lchr {k} < chi {chi}")
    return GraphBound(chi, k, bound)


class InclusionVerdict(NamedTuple):
    condition_holds: bool
    linear: bool


def inclusion_condition_check(g: SimpleGraph, nu) -> InclusionVerdict:
    """Nested neighbourhoods within colour classes, and actual linearity.

    The nesting condition is sufficient for ``nu`` to be linear on the
    neighborhood complex but not necessary.
    """
    if set(nu) != set(g.vertices) or not g.is_proper_coloring(nu):
        raise NotAProperColoring(nu)
    cond = True
    for u, v in combinations(g.vertices, 2):
        if nu[u] == nu[v]:
            a, b = g.adj[u], g.adj[v]
            if not (a <= b or b <= a):
                cond = False
                break
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        n = neighborhood_complex(g)
    kappa = LinearColoring.from_labels({v: nu[v] for v in n.vertices})
    linear = bool(is_linear_coloring(n, kappa))
    if cond and not linear:
        raise AssertionError("nested neighbourhoods did not give a linear colouring")
    return InclusionVerdict(cond, linear)


def find_inclusion_counterexample(max_vertices=6):
    """Smallest graph (by vertices, then edge mask) with a linear colouring of
    its neighborhood complex whose colour class has incomparable neighbourhoods.

    Returns ``(graph, colouring)`` or None. The colouring gives the offending
    pair one colour and every other vertex its own.
    """
    for n in range(2, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1, 1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = SimpleGraph(range(n), edges)
            if g.isolated():
                continue
            pre = FacetSetPreorder(neighborhood_complex(g))
            for u, v in combinations(range(n), 2):
                a, b = g.adj[u], g.adj[v]
                if (a <= b or b <= a) or not pre.comparable(u, v):
                    continue
                nu = {}
                nxt = 2
                for w in range(n):
                    if w in (u, v):
                        nu[w] = 1
                    else:
                        nu[w] = nxt
                        nxt += 1
                return g, nu
    return None

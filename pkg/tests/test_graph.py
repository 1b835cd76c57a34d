import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import quiet
from lincolor.coloring import LinearColoring, is_linear_coloring, lchr
from lincolor.complex import SimplicialComplex
from lincolor.errors import NotAProperColoring
from lincolor.graph import (
    SimpleGraph,
    chromatic_number,
    chromatic_vs_lchr,
    find_inclusion_counterexample,
    inclusion_condition_check,
    neighborhood_complex,
)

TWO_TRIANGLES = SimplicialComplex([[2, 4], [4, 6], [2, 6], [1, 3], [3, 5], [1, 5]])


def brute_chi(g):
    vs = g.vertices
    for k in range(1, len(vs) + 1):
        for cols in product(range(k), repeat=len(vs)):
            if g.is_proper_coloring(dict(zip(vs, cols))):
                return k
    return 0


@st.composite
def graphs(draw, max_vertices=7):
    n = draw(st.integers(2, max_vertices))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    if not edges:
        edges = [pairs[0]]
    return SimpleGraph(range(n), edges)


class TestGraph:
    def test_loops_rejected(self):
        with pytest.raises(ValueError):
            SimpleGraph([1], [(1, 1)])

    def test_multi_edges_collapse(self):
        assert SimpleGraph([1, 2], [(1, 2), (2, 1)]).edges == [(1, 2)]


class TestNeighborhoodComplex:
    def test_c6(self):
        n = neighborhood_complex(SimpleGraph.cycle(6))
        assert n == TWO_TRIANGLES

    def test_k3(self):
        assert neighborhood_complex(SimpleGraph.complete(3)) == SimplicialComplex.boundary_of_simplex([1, 2, 3])

    def test_single_edge(self):
        assert neighborhood_complex(SimpleGraph([1, 2], [(1, 2)])) == SimplicialComplex([[1], [2]])

    def test_isolated_vertex_warns(self):
        with pytest.warns(UserWarning):
            n = neighborhood_complex(SimpleGraph([1, 2, 3], [(1, 2)]))
        assert n.vertices == {1, 2}


class TestChromatic:
    @pytest.mark.parametrize("g,chi", [
        (SimpleGraph.cycle(5), 3),
        (SimpleGraph.cycle(6), 2),
        (SimpleGraph.complete(4), 4),
        (SimpleGraph.complete_bipartite(2, 3), 2),
    ])
    def test_known(self, g, chi):
        k, col = chromatic_number(g)
        assert k == chi and g.is_proper_coloring(col)

    @settings(max_examples=60, deadline=None)
    @given(graphs(6))
    def test_matches_bruteforce(self, g):
        assert chromatic_number(g)[0] == brute_chi(g)


class TestBound:
    def test_c6(self):
        assert tuple(chromatic_vs_lchr(SimpleGraph.cycle(6))) == (2, 6, True)

    def test_k3(self):
        assert tuple(chromatic_vs_lchr(SimpleGraph.complete(3))) == (3, 3, True)

    def test_k2(self):
        assert tuple(chromatic_vs_lchr(SimpleGraph.complete(2))) == (2, 2, True)

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_bound_and_proper_witness(self, g):
        b = quiet(chromatic_vs_lchr, g)
        assert b.bound_holds and b.lchr_n >= b.chi
        n = quiet(neighborhood_complex, g)
        _, kappa = lchr(n)
        assert all(kappa[u] != kappa[v] for u, v in g.edges if u in n.vertices and v in n.vertices)

    def test_every_linear_coloring_is_proper_on_small_graphs(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randint(3, 5)
            edges = [p for p in combinations(range(n), 2) if rng.random() < 0.5] or [(0, 1)]
            g = SimpleGraph(range(n), edges)
            nc = quiet(neighborhood_complex, g)
            verts = sorted(nc.vertices)
            for cols in product(range(len(verts)), repeat=len(verts)):
                k = LinearColoring.from_labels(dict(zip(verts, cols)))
                if is_linear_coloring(nc, k):
                    assert all(k[u] != k[v] for u, v in g.edges if u in nc.vertices and v in nc.vertices)


class TestInclusion:
    def test_distinct_colors(self):
        g = SimpleGraph.cycle(5)
        assert inclusion_condition_check(g, {v: v for v in g.vertices}) == (True, True)

    def test_bipartite_sides(self):
        g = SimpleGraph.complete_bipartite(2, 3)
        nu = {v: 1 if v <= 2 else 2 for v in g.vertices}
        assert inclusion_condition_check(g, nu) == (True, True)

    def test_not_proper(self):
        g = SimpleGraph.complete(3)
        with pytest.raises(NotAProperColoring):
            inclusion_condition_check(g, {1: 1, 2: 1, 3: 2})

    def test_converse_fails(self):
        found = find_inclusion_counterexample(6)
        assert found is not None
        g, nu = found
        verdict = inclusion_condition_check(g, nu)
        assert verdict.condition_holds is False and verdict.linear is True

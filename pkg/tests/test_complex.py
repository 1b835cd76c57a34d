from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complexes
from lincolor.complex import (
    Multiset,
    SimplicialComplex,
    join,
    link_and_deletion,
    multiset_union_intersect,
    point,
    relabel_disjoint,
)
from lincolor.errors import OverlappingVertexSets, UnknownVertex


def S(*facets):
    return SimplicialComplex(facets)


def brute_faces(d):
    out = set()
    for f in d.facets:
        for r in range(1, len(f) + 1):
            out.update(frozenset(s) for s in combinations(f, r))
    return out


class TestMultiset:
    def test_union_with_empty(self):
        u, i = multiset_union_intersect(Multiset({"a": 1}), Multiset())
        assert u == Multiset({"a": 1})
        assert i == Multiset()

    def test_union_intersection_formula(self):
        u, i = multiset_union_intersect(Multiset({"a": 2, "b": 1}), Multiset({"a": 1, "c": 1}))
        assert u == Multiset({"a": 3, "b": 1, "c": 1})
        assert i == Multiset({"a": 1})

    def test_cardinality_of_union(self):
        u, _ = multiset_union_intersect(Multiset({"a": 2, "b": 1}), Multiset({"a": 1}))
        assert u.cardinality == 4

    def test_zero_multiplicities_dropped(self):
        m = Multiset({"a": 0, "b": 2})
        assert "a" not in m and m.count("a") == 0
        assert m.support() == {"b"}

    def test_from_iterable_counts_repeats(self):
        assert Multiset([1, 1, 2]) == Multiset({1: 2, 2: 1})

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            Multiset({"a": -1})

    def test_order(self):
        assert Multiset({1: 1}) < Multiset({1: 2})
        assert not Multiset({1: 2}) <= Multiset({1: 1, 2: 5})

    @given(
        st.dictionaries(st.integers(0, 4), st.integers(0, 3)),
        st.dictionaries(st.integers(0, 4), st.integers(0, 3)),
    )
    def test_cardinality_laws(self, a, b):
        m1, m2 = Multiset(a), Multiset(b)
        u, i = multiset_union_intersect(m1, m2)
        assert u.cardinality == m1.cardinality + m2.cardinality
        assert i.issubset(m1) and i.issubset(m2)
        assert i == m2.intersection(m1)


class TestComplex:
    def test_prunes_to_antichain(self):
        d = S([1, 2, 3], [1, 2], [4])
        assert d.facets == {frozenset({1, 2, 3}), frozenset({4})}
        assert d.vertices == {1, 2, 3, 4}

    def test_empty_and_point_distinct(self):
        assert SimplicialComplex().is_empty
        assert not point().is_empty
        assert point().is_point
        assert SimplicialComplex() != point()

    def test_single_empty_facet_rejected(self):
        with pytest.raises(ValueError):
            SimplicialComplex([[]])

    def test_f_vector_and_dim(self, boundary_triangle):
        assert boundary_triangle.dim == 1
        assert boundary_triangle.f_vector() == [3, 3]
        assert SimplicialComplex().dim == -1

    def test_facet_sets(self, path3):
        fs = path3.facet_sets()
        assert fs[1] < fs[2] and fs[3] < fs[2]

    def test_link_of_isolated_vertex_is_empty(self):
        d = S([1], [2, 3])
        assert d.link(1).is_empty

    def test_unknown_vertex(self, path3):
        with pytest.raises(UnknownVertex):
            path3.deletion(9)
        with pytest.raises(UnknownVertex):
            link_and_deletion(path3, 9)

    def test_cone_points(self):
        assert S([1, 2, 3], [1, 4]).cone_points() == {1}

    def test_relabel_keeps_labels(self):
        d = SimplicialComplex([[1, 2]], {1: "x", 2: "y"})
        r = d.relabel({1: 10, 2: 20})
        assert r.label(10) == "x" and r.facets == {frozenset({10, 20})}

    def test_relabel_must_be_injective(self, path3):
        with pytest.raises(ValueError):
            path3.relabel({1: 0, 2: 0, 3: 1})


class TestLinkDeletion:
    def test_full_triangle(self):
        dl, lk = link_and_deletion(S([1, 2, 3]), 1)
        assert dl == S([2, 3]) and lk == S([2, 3])

    def test_link_in_seven_facet_complex(self, seven_facet):
        # vertex e has id 5; a,b,d,f are 1,2,4,6
        assert seven_facet.link(5) == S([1, 2], [1, 4], [2, 6], [4, 6])

    def test_boundary_triangle(self, boundary_triangle):
        dl, lk = link_and_deletion(boundary_triangle, 3)
        assert dl == S([1, 2])
        assert lk == S([1], [2])

    @given(complexes(), st.data())
    def test_star_decomposition(self, d, data):
        v = data.draw(st.sampled_from(sorted(d.vertices)))
        dl, lk = link_and_deletion(d, v)
        rebuilt = brute_faces(dl) | {frozenset({v})} | {s | {v} for s in brute_faces(lk)}
        assert rebuilt == brute_faces(d)


class TestJoin:
    def test_cone(self, boundary_triangle):
        assert join(point(9), boundary_triangle) == S([9, 1, 2], [9, 1, 3], [9, 2, 3])

    def test_empty_identity(self, path3):
        assert join(path3, SimplicialComplex()) == path3
        assert join(SimplicialComplex(), path3) == path3

    def test_two_point_pairs_give_square(self):
        assert join(S([1], [2]), S([3], [4])) == S([1, 3], [1, 4], [2, 3], [2, 4])

    def test_overlap_rejected(self, path3):
        with pytest.raises(OverlappingVertexSets):
            join(path3, point(2))

    @settings(max_examples=50)
    @given(complexes(4, 4), complexes(4, 4), complexes(3, 3))
    def test_associative_and_vertex_count(self, x, y, z):
        y = relabel_disjoint(x, y)
        z = relabel_disjoint(join(x, y), z)
        xy = join(x, y)
        assert len(xy.vertices) == len(x.vertices) + len(y.vertices)
        assert join(xy, z) == join(x, join(y, z))
        for f in xy.facets:
            assert not any(f < g for g in xy.facets)

    @given(complexes())
    def test_faces_match_bruteforce(self, d):
        assert set(d.faces()) == brute_faces(d)
        assert d.face_count() == len(brute_faces(d))

from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import complexes
from lincolor.collapse import (
    certify_lc_step,
    collapses_to,
    elementary_collapse,
    free_faces,
    is_collapsible,
    is_nonevasive,
    ne_reduces_to,
)
from lincolor.complex import SimplicialComplex, join, point
from lincolor.errors import FaceNotInComplex, NotAPrimitivePair, NotCollapsible, NotFree, NotReducible
from lincolor.reduction import POINT, is_lc_contractible, primitive_reductions
from lincolor.suite import exhaustive_complexes
from lincolor.trace import ElementaryCollapse, NERemoval
from lincolor.verify import verify_trace


def face_set(d):
    return frozenset(frozenset(s) for f in d.facets for r in range(1, len(f) + 1) for s in combinations(f, r))


@lru_cache(maxsize=None)
def collapsible_oracle(faces):
    """Any-codimension collapses on explicit face sets, no canonical forms."""
    if len(faces) == 1:
        return True
    for s in faces:
        above = [t for t in faces if s < t]
        tops = [t for t in above if not any(t < u for u in faces)]
        if len(tops) == 1 and all(t <= tops[0] for t in above):
            rest = frozenset(t for t in faces if not s <= t)
            if collapsible_oracle(rest):
                return True
    return False


@lru_cache(maxsize=None)
def nonevasive_oracle(faces):
    verts = {v for f in faces for v in f}
    if len(verts) == 1:
        return True
    for v in verts:
        lk = frozenset(f - {v} for f in faces if v in f and len(f) > 1)
        dl = frozenset(f for f in faces if v not in f)
        if lk and nonevasive_oracle(lk) and nonevasive_oracle(dl):
            return True
    return False


class TestElementaryCollapse:
    def test_vertex_of_triangle(self):
        assert elementary_collapse(SimplicialComplex([[1, 2, 3]]), {1}) == SimplicialComplex([[2, 3]])

    def test_free_edge_in_seven_facet_complex(self, seven_facet):
        # {a, c} = {1, 3} lies only in abc
        out = elementary_collapse(seven_facet, {1, 3})
        assert out.facets == seven_facet.facets - {frozenset({1, 2, 3})}

    def test_shared_edge_is_not_free(self, seven_facet):
        # {b, c} lies in abc and bcf
        with pytest.raises(NotFree):
            elementary_collapse(seven_facet, {2, 3})

    def test_boundary_triangle_has_no_free_faces(self, boundary_triangle):
        assert free_faces(boundary_triangle) == []
        for s in boundary_triangle.faces():
            with pytest.raises(NotFree):
                elementary_collapse(boundary_triangle, s)

    def test_missing_face(self, path3):
        with pytest.raises(FaceNotInComplex):
            elementary_collapse(path3, {1, 3})

    @settings(max_examples=150)
    @given(complexes())
    def test_face_count_drop(self, d):
        before = d.face_count()
        for s, f in free_faces(d):
            assert before - elementary_collapse(d, s).face_count() == 2 ** (len(f) - len(s))


class TestCollapsesTo:
    def test_simplex(self):
        t = collapses_to(SimplicialComplex.simplex(range(4)))
        assert verify_trace(t).is_point

    def test_seven_facet_complex(self, seven_facet):
        t = collapses_to(seven_facet, POINT)
        assert verify_trace(t).is_point
        assert all(isinstance(s, ElementaryCollapse) for s in t.steps)

    def test_boundary_triangle(self, boundary_triangle):
        with pytest.raises(NotCollapsible):
            collapses_to(boundary_triangle)

    def test_to_subcomplex(self):
        full = SimplicialComplex.simplex([1, 2, 3])
        target = SimplicialComplex([[1, 2], [2, 3]])
        assert verify_trace(collapses_to(full, target), target) == target

    def test_matches_any_codimension_oracle(self):
        for d in exhaustive_complexes(4):
            assert is_collapsible(d) == collapsible_oracle(face_set(d))


class TestNonevasive:
    def test_point_and_empty(self):
        assert is_nonevasive(point())
        assert not is_nonevasive(SimplicialComplex())

    def test_examples(self, seven_facet, boundary_triangle):
        assert is_nonevasive(seven_facet)
        assert not is_nonevasive(boundary_triangle)

    def test_matches_oracle_on_suite(self):
        for d in exhaustive_complexes(5):
            assert is_nonevasive(d) == nonevasive_oracle(face_set(d))

    def test_implications_on_suite(self):
        for d in exhaustive_complexes(5):
            if is_lc_contractible(d):
                assert is_nonevasive(d)
            if is_nonevasive(d):
                assert is_collapsible(d)


class TestNEReduction:
    @settings(max_examples=60)
    @given(complexes(5))
    def test_cones(self, d):
        t = ne_reduces_to(join(point(99), d))
        assert verify_trace(t).is_point

    def test_seven_facet_complex(self, seven_facet):
        t = ne_reduces_to(seven_facet)
        assert all(isinstance(s, NERemoval) for s in t.steps)
        assert verify_trace(t).is_point

    def test_boundary_triangle(self, boundary_triangle):
        with pytest.raises(NotReducible):
            ne_reduces_to(boundary_triangle)


class TestCertify:
    def test_full_triangle(self):
        d = SimplicialComplex([[1, 2, 3]])
        ne, coll = certify_lc_step(d, 2, 1)
        assert ne.steps == [NERemoval(1, 2)]
        assert d.link(1) == SimplicialComplex([[2, 3]])
        assert coll.steps == [ElementaryCollapse({1, 3}, {1, 2, 3}), ElementaryCollapse({1}, {1, 2})]
        assert verify_trace(coll) == SimplicialComplex([[2, 3]])

    def test_path(self, path3):
        _, coll = certify_lc_step(path3, 2, 1)
        assert coll.steps == [ElementaryCollapse({1}, {1, 2})]

    def test_equal_facet_sets_both_directions(self):
        d = SimplicialComplex([[1, 2, 3], [1, 2, 4]])
        for kept, removed in [(1, 2), (2, 1)]:
            ne, coll = certify_lc_step(d, kept, removed)
            assert verify_trace(ne) == verify_trace(coll) == d.deletion(removed)

    def test_not_primitive(self, path3):
        with pytest.raises(NotAPrimitivePair):
            certify_lc_step(path3, 1, 2)

    @settings(max_examples=150)
    @given(complexes())
    def test_certificates_verify(self, d):
        for kept, removed in primitive_reductions(d):
            target = d.deletion(removed)
            ne, coll = certify_lc_step(d, kept, removed)
            verify_trace(ne, target)
            verify_trace(coll, target)

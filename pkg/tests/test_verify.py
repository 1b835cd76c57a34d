import pytest

from lincolor.collapse import certify_lc_step, collapses_to
from lincolor.complex import SimplicialComplex, point
from lincolor.errors import InvalidTrace
from lincolor.trace import ElementaryCollapse, NERemoval, PrimitiveLC, ReductionTrace
from lincolor.verify import replay, verify_trace


def test_valid_primitive_trace(path3):
    t = ReductionTrace(path3, [PrimitiveLC(2, 1), PrimitiveLC(2, 3)])
    assert verify_trace(t, point(2)) == point(2)


def test_primitive_step_with_wrong_direction(path3):
    with pytest.raises(InvalidTrace):
        replay(path3, [PrimitiveLC(1, 2)])


def test_primitive_step_with_missing_vertex(path3):
    with pytest.raises(InvalidTrace):
        replay(path3, [PrimitiveLC(2, 7)])


def test_ne_step_with_bad_cone_point(path3):
    with pytest.raises(InvalidTrace):
        replay(path3, [NERemoval(1, 3)])


def test_ne_step_without_cone_point_uses_recursion(seven_facet):
    # every vertex link of the seven-facet complex is a path or cycle; find one that passes
    ok = [v for v in sorted(seven_facet.vertices) if _try(seven_facet, [NERemoval(v)])]
    assert ok
    with pytest.raises(InvalidTrace):
        replay(SimplicialComplex.boundary_of_simplex([1, 2, 3]), [NERemoval(1)])


def _try(d, steps):
    try:
        replay(d, steps)
    except InvalidTrace:
        return False
    return True


def test_collapse_of_non_free_face(boundary_triangle):
    with pytest.raises(InvalidTrace):
        replay(boundary_triangle, [ElementaryCollapse({1}, {1, 2})])


def test_collapse_with_non_maximal_facet():
    d = SimplicialComplex([[1, 2, 3]])
    with pytest.raises(InvalidTrace):
        replay(d, [ElementaryCollapse({1}, {1, 2})])


def test_tampered_final(path3):
    t = ReductionTrace(path3, [PrimitiveLC(2, 1)], point(2))
    with pytest.raises(InvalidTrace):
        verify_trace(t)


def test_expected_final_mismatch(seven_facet):
    t = collapses_to(seven_facet)
    with pytest.raises(InvalidTrace):
        verify_trace(t, seven_facet)


def test_reordered_collapses_rejected():
    d = SimplicialComplex([[1, 2, 3]])
    _, coll = certify_lc_step(d, 2, 1)
    with pytest.raises(InvalidTrace):
        replay(d, list(reversed(coll.steps)))


def test_unknown_step(path3):
    with pytest.raises(InvalidTrace):
        replay(path3, ["nonsense"])

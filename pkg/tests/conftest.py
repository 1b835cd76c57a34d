import random
import warnings

import pytest
from hypothesis import strategies as st

from lincolor.complex import SimplicialComplex
from lincolor.fileio import parse_complex

SEVEN_FACET_TEXT = "a b c\na b e\na d e\nb e f\nd e f\nb c f\nc d f\n"

# acceptance results, printed once at the end of the session
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE):
        terminalreporter.write_line(line[1])


@pytest.fixture
def seven_facet():
    """Seven-facet nonevasive, collapsible, LC-irreducible 2-complex (a..f -> 1..6)."""
    return parse_complex(SEVEN_FACET_TEXT)


@pytest.fixture
def boundary_triangle():
    return SimplicialComplex.boundary_of_simplex([1, 2, 3])


@pytest.fixture
def path3():
    return SimplicialComplex([[1, 2], [2, 3]])


@pytest.fixture
def rng():
    return random.Random(20240601)


@st.composite
def complexes(draw, max_vertices=6, max_facets=6):
    n = draw(st.integers(1, max_vertices))
    facets = draw(
        st.lists(
            st.sets(st.integers(0, n - 1), min_size=1, max_size=n),
            min_size=1,
            max_size=max_facets,
        )
    )
    return SimplicialComplex(facets)


@st.composite
def complexes_with_coloring(draw, max_vertices=6):
    d = draw(complexes(max_vertices))
    verts = sorted(d.vertices)
    labels = draw(st.lists(st.integers(1, len(verts)), min_size=len(verts), max_size=len(verts)))
    from lincolor.coloring import LinearColoring

    return d, LinearColoring.from_labels(dict(zip(verts, labels)))


def quiet(fn, *args, **kwargs):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return fn(*args, **kwargs)

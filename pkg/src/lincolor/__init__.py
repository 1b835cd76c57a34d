"""Linear colourings of simplicial complexes and the reductions they induce."""

from .collapse import certify_lc_step, collapses_to, elementary_collapse, is_collapsible, is_nonevasive, ne_reduces_to
from .coloring import LinearColoring, canonical_labeling, is_linear_coloring, lchr, representative_subcomplexes
from .complex import Multiset, SimplicialComplex, join, link_and_deletion
from .errors import *  # noqa: F401,F403
from .graph import SimpleGraph, chromatic_number, chromatic_vs_lchr, neighborhood_complex
from .homology import HomologyProfile, homdim, reduced_homology, smith_normal_form
from .iso import are_isomorphic, canonical_form
from .multicomplex import Multicomplex, associated_multicomplex, realize, retraction_maps
from .poset import FinitePoset, MonotoneMap, closure_reduce, coatom_closure, dominates, order_complex
from .reduction import lc_core_and_lindim, lc_reduce, lindim, primitive_reductions
from .suite import SuiteSpec, enumerate_suite
from .trace import ElementaryCollapse, NERemoval, PrimitiveLC, ReductionTrace
from .verify import verify_trace

__version__ = "0.1.0"

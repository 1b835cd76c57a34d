"""LC-reduction: primitive steps, searches, cores and linear dimension.

Every primitive LC-reduction deletes one vertex, so all complexes reachable
from ``d`` are induced subcomplexes ``d[W]``; searches key their state on
``W`` or, where only the isomorphism type matters, on a canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import LinearColoring, canonical_labeling, lchr
from .complex import SimplicialComplex, join
from .errors import (
    BudgetExhausted,
    InvalidTrace,
    NotASubcomplex,
    NotReducible,
    OverlappingVertexSets,
)
from .iso import canonical_form
from .trace import PrimitiveLC, ReductionTrace

DEFAULT_BUDGET = 200_000
POINT = "point"


def primitive_reductions(d: SimplicialComplex):
    """All ``(kept, removed)`` with F(removed) inside F(kept), by removed then kept."""
    if d.n_vertices < 2:
        return []
    fs = d.facet_sets()
    verts = sorted(fs)
    return [(v, u) for u in verts for v in verts if u != v and fs[u] <= fs[v]]


def is_primitive_pair(d, kept, removed):
    if kept == removed or kept not in d.vertices or removed not in d.vertices:
        return False
    return all(kept in f for f in d.facets if removed in f)


def is_lc_irreducible(d: SimplicialComplex) -> bool:
    irreducible = not primitive_reductions(d)
    if not d.is_empty and irreducible != (lchr(d)[0] == d.n_vertices):
        raise AssertionError("irreducibility disagrees with lchr")
    return irreducible


def _greedy(d):
    steps = []
    cur = d
    while True:
        pairs = primitive_reductions(cur)
        if not pairs:
            return ReductionTrace(d, steps, cur)
        kept, removed = pairs[0]
        steps.append(PrimitiveLC(kept, removed))
        cur = cur.deletion(removed)


def _first_kept(d, removed):
    fs = d.facet_sets()
    for v in sorted(fs):
        if v != removed and fs[removed] <= fs[v]:
            return v
    return None


def lc_reduce(d: SimplicialComplex, target=None, *, strategy="greedy", budget=DEFAULT_BUDGET):
    """LC-reduce ``d``.

    With no target, apply the greedy strategy (first primitive pair, removed
    vertex ascending) until the complex is irreducible. With a target
    subcomplex, or ``"point"``, run a bounded depth-first search over vertex
    subsets. Raises NotReducible when the search space is exhausted and
    BudgetExhausted when ``budget`` expansions did not settle the question.
    """
    if target is None:
        if strategy != "greedy":
            raise ValueError(f"unknown strategy {strategy!r}")
        return _greedy(d)
    if target == POINT:
        goal = lambda w: len(w) == 1  # noqa: E731
        floor = frozenset()
    else:
        if not target.is_subcomplex_of(d):
            raise NotASubcomplex("target is not a subcomplex")
        floor = target.vertices
        if d.induced(floor) != target:
            raise NotReducible("LC-reductions only reach induced subcomplexes")
        goal = lambda w: w == floor  # noqa: E731

    dead = set()
    nodes = 0

    def dfs(w, cur):
        nonlocal nodes
        if goal(w):
            return []
        if w in dead:
            return None
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(nodes=nodes)
        removable = sorted({u for _, u in primitive_reductions(cur)} - floor)
        for u in removable:
            rest = dfs(w - {u}, cur.deletion(u))
            if rest is not None:
                return [PrimitiveLC(_first_kept(cur, u), u)] + rest
        dead.add(w)
        return None

    steps = dfs(d.vertices, d)
    if steps is None:
        raise NotReducible("target is not reachable by LC-reductions")
    final = d
    for s in steps:
        final = final.deletion(s.removed)
    return ReductionTrace(d, steps, final)


def is_lc_contractible(d: SimplicialComplex, budget=DEFAULT_BUDGET) -> bool:
    try:
        lc_reduce(d, POINT, budget=budget)
    except NotReducible:
        return False
    return True


def decompose_to_primitives(d: SimplicialComplex, kappa: LinearColoring) -> ReductionTrace:
    """Primitive steps from ``d`` to its canonical representative subcomplex.

    For each colour i with canonically labelled class v_1..v_n, remove v_n
    (keeping v_{n-1}), then v_{n-1}, ..., then v_2 (keeping v_1).
    """
    labeling = canonical_labeling(d, kappa)
    steps = []
    cur = d
    for c in sorted(labeling):
        seq = labeling[c]
        for j in range(len(seq) - 1, 0, -1):
            if not is_primitive_pair(cur, seq[j - 1], seq[j]):
                raise AssertionError("decomposition produced an invalid step")
            steps.append(PrimitiveLC(seq[j - 1], seq[j]))
            cur = cur.deletion(seq[j])
    return ReductionTrace(d, steps, cur)


@dataclass(frozen=True)
class LowerBound:
    """lindim is at least ``value``; ``best`` is the smallest core seen so far."""

    value: int
    best: int | None = None

    def __int__(self):
        return self.value


def lc_core_and_lindim(d: SimplicialComplex, budget=DEFAULT_BUDGET):
    """LC-cores of ``d`` up to isomorphism and the linear dimension.

    Exhaustive search over primitive steps, memoised on the canonical form of
    each reachable complex. Returns ``(cores, lindim)``; cores are actual
    subcomplexes of ``d``, one per isomorphism class, smallest first. If the
    budget runs out, ``lindim`` is a :class:`LowerBound` from homology.
    """
    memo = {}
    reps = {}
    nodes = 0

    def explore(w, cur):
        nonlocal nodes
        key = canonical_form(cur)
        if key in memo:
            return memo[key]
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(nodes=nodes)
        removable = sorted({u for _, u in primitive_reductions(cur)})
        if not removable:
            reps.setdefault(key, cur)
            found = frozenset([key])
        else:
            found = frozenset()
            for u in removable:
                found |= explore(w - {u}, cur.deletion(u))
        memo[key] = found
        return found

    try:
        keys = explore(d.vertices, d)
    except BudgetExhausted:
        from .homology import reduced_homology

        best = min((c.n_vertices for c in reps.values()), default=None)
        bound = max(1, reduced_homology(d).homdim + 2)
        return sorted(reps.values(), key=lambda c: (c.n_vertices, canonical_form(c))), LowerBound(bound, best)
    cores = sorted((reps[k] for k in keys), key=lambda c: (c.n_vertices, canonical_form(c)))
    return cores, cores[0].n_vertices


def lindim(d: SimplicialComplex, budget=DEFAULT_BUDGET):
    return lc_core_and_lindim(d, budget)[1]


def core_uniqueness_probe(d: SimplicialComplex, budget=DEFAULT_BUDGET):
    """Whether every LC-core found is isomorphic to every other.

    The general question is open; this only gathers evidence.
    """
    cores, _ = lc_core_and_lindim(d, budget)
    return len(cores) <= 1, cores


def lift_reduction_over_join(trace: ReductionTrace, x1: SimplicialComplex, y: SimplicialComplex) -> ReductionTrace:
    """Reinterpret a primitive LC trace on ``x1`` as one on ``x1 * y``."""
    if trace.initial != x1:
        raise InvalidTrace("trace does not start at x1")
    if x1.vertices & y.vertices:
        raise OverlappingVertexSets(sorted(x1.vertices & y.vertices))
    start = join(x1, y)
    cur = start
    for step in trace.steps:
        if not isinstance(step, PrimitiveLC):
            raise InvalidTrace(f"not a primitive LC step: {step}")
        if not is_primitive_pair(cur, step.kept, step.removed):
            raise InvalidTrace(f"step {step} is not valid on the join")
        cur = cur.deletion(step.removed)
    if trace.final is not None and cur != join(trace.final, y):
        raise InvalidTrace("lifted trace does not end at x2 * y")
    return ReductionTrace(start, list(trace.steps), cur)

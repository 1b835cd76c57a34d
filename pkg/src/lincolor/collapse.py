"""Elementary collapses, nonevasiveness and NE-reduction.

Also translates a primitive LC step into an NE step and into a sequence of
elementary collapses, following the constructive arguments for both.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .complex import SimplicialComplex
from .errors import (
    BudgetExhausted,
    FaceNotInComplex,
    NotAPrimitivePair,
    NotASubcomplex,
    NotCollapsible,
    NotFree,
    NotReducible,
)
from .iso import canonical_form
from .reduction import DEFAULT_BUDGET, POINT, is_primitive_pair
from .trace import ElementaryCollapse, NERemoval, ReductionTrace


def elementary_collapse(d: SimplicialComplex, s) -> SimplicialComplex:
    """Remove every face containing the free face ``s``."""
    s = frozenset(s)
    if not s:
        raise NotFree("the empty face is never collapsed")
    if not d.contains_face(s):
        raise FaceNotInComplex(sorted(s))
    containing = [f for f in d.facets if s <= f]
    if s in d.facets or len(containing) != 1:
        raise NotFree(sorted(s))
    (f,) = containing
    rest = [g for g in d.facets if g != f] + [f - {x} for x in s]
    return SimplicialComplex(rest, d.vertex_labels)


def free_faces(d: SimplicialComplex, codim_one=False):
    """``(free_face, facet)`` pairs, sorted; optionally only codimension one."""
    out = []
    facets = d.sorted_facets()
    for f in facets:
        others = [set(f) & set(g) for g in facets if g != f]
        sizes = [len(f) - 1] if codim_one else range(1, len(f))
        for r in sizes:
            for s in combinations(f, r):
                if not any(set(s) <= o for o in others):
                    out.append((frozenset(s), frozenset(f)))
    out.sort(key=lambda p: (sorted(p[1]), sorted(p[0])))
    return out


def collapses_to(d: SimplicialComplex, target=POINT, budget=DEFAULT_BUDGET) -> ReductionTrace:
    """Search for a sequence of elementary collapses from ``d`` to ``target``.

    Only codimension-one collapses are explored; every elementary collapse
    factors into those, so nothing is lost. States are memoised on their
    canonical form when the target is a point and on their facets otherwise.
    Raises NotCollapsible after exhausting the state space.
    """
    if target == POINT:
        done = lambda c: c.is_point  # noqa: E731
        key = canonical_form
    else:
        if not target.is_subcomplex_of(d):
            raise NotASubcomplex("target is not a subcomplex")
        done = lambda c: c == target  # noqa: E731
        key = lambda c: c.facets  # noqa: E731

    dead = set()
    nodes = 0

    def dfs(cur):
        nonlocal nodes
        if done(cur):
            return []
        k = key(cur)
        if k in dead:
            return None
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(nodes=nodes)
        for s, f in free_faces(cur, codim_one=True):
            nxt = elementary_collapse(cur, s)
            if target != POINT and not target.is_subcomplex_of(nxt):
                continue
            rest = dfs(nxt)
            if rest is not None:
                return [ElementaryCollapse(s, f)] + rest
        dead.add(k)
        return None

    steps = dfs(d)
    if steps is None:
        raise NotCollapsible("no sequence of collapses reaches the target")
    cur = d
    for st in steps:
        cur = elementary_collapse(cur, st.free_face)
    return ReductionTrace(d, steps, cur)


def is_collapsible(d: SimplicialComplex, budget=DEFAULT_BUDGET) -> bool:
    try:
        collapses_to(d, POINT, budget)
    except NotCollapsible:
        return False
    return True


@lru_cache(maxsize=1 << 16)
def _nonevasive_form(form) -> bool:
    d = SimplicialComplex(form)
    if d.is_empty:
        return False
    if d.is_point:
        return True
    for v in sorted(d.vertices):
        if _nonevasive_form(canonical_form(d.link(v))) and _nonevasive_form(canonical_form(d.deletion(v))):
            return True
    return False


def is_nonevasive(d: SimplicialComplex) -> bool:
    """A point is nonevasive; otherwise some vertex must have nonevasive
    deletion and link. The empty complex is not nonevasive."""
    return _nonevasive_form(canonical_form(d))


def ne_reduces_to(d: SimplicialComplex, target=POINT, budget=DEFAULT_BUDGET) -> ReductionTrace:
    """Search for vertex removals with nonevasive links from ``d`` to ``target``."""
    if target == POINT:
        goal = lambda w: len(w) == 1  # noqa: E731
        floor = frozenset()
    else:
        if not target.is_subcomplex_of(d):
            raise NotASubcomplex("target is not a subcomplex")
        floor = target.vertices
        if d.induced(floor) != target:
            raise NotReducible("NE-reductions only reach induced subcomplexes")
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
        for u in sorted(w - floor):
            lk = cur.link(u)
            if not is_nonevasive(lk):
                continue
            rest = dfs(w - {u}, cur.deletion(u))
            if rest is not None:
                cones = sorted(lk.cone_points())
                return [NERemoval(u, cones[0] if cones else None)] + rest
        dead.add(w)
        return None

    steps = dfs(d.vertices, d)
    if steps is None:
        raise NotReducible("target is not reachable by NE-reductions")
    cur = d
    for st in steps:
        cur = cur.deletion(st.removed)
    return ReductionTrace(d, steps, cur)


def certify_lc_step(d: SimplicialComplex, kept, removed):
    """NE and collapse certificates for the primitive step removing ``removed``.

    The link of ``removed`` is a cone with apex ``kept``. For collapses,
    repeatedly take the lexicographically smallest facet F containing
    ``removed`` and collapse through F - {kept} until ``removed`` is gone.
    """
    if not is_primitive_pair(d, kept, removed):
        raise NotAPrimitivePair((kept, removed))
    target = d.deletion(removed)
    lk = d.link(removed)
    if kept not in lk.cone_points():
        raise AssertionError("link is not a cone over the kept vertex")
    ne = ReductionTrace(d, [NERemoval(removed, kept)], target)

    steps = []
    cur = d
    while True:
        with_v = [f for f in cur.sorted_facets() if removed in f]
        if not with_v:
            break
        f = frozenset(with_v[0])
        s = f - {kept}
        steps.append(ElementaryCollapse(s, f))
        cur = elementary_collapse(cur, s)
    if cur != target:
        raise AssertionError("collapses did not end at the deletion")
    return ne, ReductionTrace(d, steps, cur)

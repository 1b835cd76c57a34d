"""Independent replay of reduction certificates.

Nothing here calls the producers in ``reduction`` or ``collapse``: the
checks run on explicit face sets, so a bug in a producer cannot vouch for
itself. Only the :class:`SimplicialComplex` container is shared.
"""

from __future__ import annotations

from itertools import combinations

from .complex import SimplicialComplex
from .errors import InvalidTrace
from .trace import ElementaryCollapse, NERemoval, PrimitiveLC, ReductionTrace


def all_faces(facets):
    out = set()
    for f in facets:
        f = tuple(f)
        for r in range(1, len(f) + 1):
            out.update(frozenset(s) for s in combinations(f, r))
    return out


def _maximal(faces):
    return [f for f in faces if not any(f < g for g in faces)]


def _vertices(faces):
    return {v for f in faces if len(f) == 1 for v in f}


def _link(faces, v):
    return {f - {v} for f in faces if v in f and len(f) > 1}


def _delete(faces, v):
    return {f for f in faces if v not in f}


def _nonevasive(faces, memo):
    key = frozenset(faces)
    if key in memo:
        return memo[key]
    verts = _vertices(faces)
    if not verts:
        result = False
    elif len(verts) == 1:
        result = True
    else:
        result = any(_nonevasive(_link(faces, v), memo) and _nonevasive(_delete(faces, v), memo) for v in sorted(verts))
    memo[key] = result
    return result


def _check_primitive(faces, step):
    verts = _vertices(faces)
    if step.kept not in verts or step.removed not in verts or step.kept == step.removed:
        raise InvalidTrace(f"{step}: vertices missing or equal")
    for f in faces:
        if step.removed in f and f | {step.kept} not in faces:
            raise InvalidTrace(f"{step}: face {sorted(f)} does not extend by the kept vertex")
    return _delete(faces, step.removed)


def _check_ne(faces, step, memo):
    if step.removed not in _vertices(faces):
        raise InvalidTrace(f"{step}: vertex missing")
    lk = _link(faces, step.removed)
    if step.cone_point is not None:
        if frozenset([step.cone_point]) not in lk:
            raise InvalidTrace(f"{step}: cone point is not in the link")
        for f in lk:
            if f | {step.cone_point} not in lk:
                raise InvalidTrace(f"{step}: link is not a cone over {step.cone_point}")
    elif not _nonevasive(lk, memo):
        raise InvalidTrace(f"{step}: link is evasive")
    return _delete(faces, step.removed)


def _check_collapse(faces, step):
    s, f = step.free_face, step.facet
    if not s or s not in faces or f not in faces or not s < f:
        raise InvalidTrace(f"{step}: not a proper face pair of the complex")
    above = [t for t in faces if s <= t]
    if any(not t <= f for t in above):
        raise InvalidTrace(f"{step}: face is not free")
    if any(f < t for t in faces):
        raise InvalidTrace(f"{step}: recorded facet is not maximal")
    return {t for t in faces if not s <= t}


def replay(initial: SimplicialComplex, steps) -> SimplicialComplex:
    """Re-check every step from scratch and return the final complex."""
    faces = all_faces(initial.facets)
    memo = {}
    for step in steps:
        if isinstance(step, PrimitiveLC):
            faces = _check_primitive(faces, step)
        elif isinstance(step, NERemoval):
            faces = _check_ne(faces, step, memo)
        elif isinstance(step, ElementaryCollapse):
            faces = _check_collapse(faces, step)
        else:
            raise InvalidTrace(f"unknown step {step!r}")
    return SimplicialComplex(_maximal(faces), initial.vertex_labels)


def verify_trace(trace: ReductionTrace, expected_final: SimplicialComplex | None = None) -> SimplicialComplex:
    final = replay(trace.initial, trace.steps)
    if trace.final is not None and final != trace.final:
        raise InvalidTrace("replay does not end at the recorded final complex")
    if expected_final is not None and final != expected_final:
        raise InvalidTrace("replay does not end at the expected complex")
    return final

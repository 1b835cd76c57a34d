"""Enumeration of small complexes for property suites.

Exhaustive mode grows every complex on at most ``max_vertices`` vertices one
face at a time from a point, keeping one canonical representative per
isomorphism class. Random mode draws seeded random facet families.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .complex import SimplicialComplex, maximal_sets
from .errors import TooLarge
from .iso import canonical_form

EXHAUSTIVE_LIMIT = 6


@dataclass(frozen=True)
class SuiteSpec:
    max_vertices: int
    mode: str = "exhaustive"
    seed: int = 0
    sample_count: int = 100

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown suite mode {self.mode!r}")
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be positive")
        if self.mode == "exhaustive" and self.max_vertices > EXHAUSTIVE_LIMIT:
            raise TooLarge(f"exhaustive mode supports at most {EXHAUSTIVE_LIMIT} vertices")


def _addable_faces(facets, n_used, max_vertices):
    faces = set()
    for f in facets:
        for r in range(1, len(f) + 1):
            faces.update(combinations(f, r))
    out = []
    if n_used < max_vertices:
        out.append((n_used,))
    for face in faces:
        for w in range(n_used):
            if w in face:
                continue
            cand = tuple(sorted(face + (w,)))
            if cand in faces:
                continue
            if all(sub in faces for sub in combinations(cand, len(cand) - 1)):
                out.append(cand)
    return set(out)


@lru_cache(maxsize=None)
def _exhaustive_forms(max_vertices):
    start = ((0,),)
    seen = {start}
    stack = [start]
    while stack:
        form = stack.pop()
        n_used = 1 + max(v for f in form for v in f)
        for cand in _addable_faces(form, n_used, max_vertices):
            cset = frozenset(cand)
            facets = [f for f in form if not set(f) <= cset] + [cand]
            child = canonical_form(SimplicialComplex(facets))
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return tuple(sorted(seen, key=lambda f: (1 + max(v for g in f for v in g), len(f), f)))


def exhaustive_complexes(max_vertices):
    """One complex per isomorphism class with 1..max_vertices vertices."""
    if max_vertices > EXHAUSTIVE_LIMIT:
        raise TooLarge(f"exhaustive mode supports at most {EXHAUSTIVE_LIMIT} vertices")
    return [SimplicialComplex(f) for f in _exhaustive_forms(max_vertices)]


def random_complex(rng: random.Random, max_vertices, min_vertices=1):
    n = rng.randint(min_vertices, max_vertices)
    n_facets = rng.randint(1, max(1, n + 1))
    facets = []
    for _ in range(n_facets):
        size = rng.randint(1, n)
        facets.append(rng.sample(range(n), size))
    # every vertex must occur somewhere
    used = set().union(*map(set, facets))
    for v in range(n):
        if v not in used:
            facets.append([v])
    return SimplicialComplex(maximal_sets(facets)).normalized()


def enumerate_suite(spec: SuiteSpec):
    """Yield complexes according to ``spec``; deterministic for a fixed seed."""
    if spec.mode == "exhaustive":
        yield from exhaustive_complexes(spec.max_vertices)
        return
    rng = random.Random(spec.seed)
    for _ in range(spec.sample_count):
        yield random_complex(rng, spec.max_vertices)

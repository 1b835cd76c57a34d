"""Reduction certificates: ordered lists of reduction steps."""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import SimplicialComplex


@dataclass(frozen=True)
class PrimitiveLC:
    """Remove ``removed`` using a primitive linear colouring pairing it with ``kept``."""

    kept: int
    removed: int


@dataclass(frozen=True)
class NERemoval:
    """Remove a vertex whose link is nonevasive.

    ``cone_point`` names a cone point of the link when there is one; the
    verifier then only checks the cone property.
    """

    removed: int
    cone_point: int | None = None


@dataclass(frozen=True)
class ElementaryCollapse:
    free_face: frozenset
    facet: frozenset

    def __post_init__(self):
        object.__setattr__(self, "free_face", frozenset(self.free_face))
        object.__setattr__(self, "facet", frozenset(self.facet))


@dataclass
class ReductionTrace:
    initial: SimplicialComplex
    steps: list = field(default_factory=list)
    final: SimplicialComplex | None = None

    def __post_init__(self):
        if self.final is None and not self.steps:
            self.final = self.initial

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def kinds(self):
        return {type(s).__name__ for s in self.steps}

    def removed_vertices(self):
        return [s.removed for s in self.steps if not isinstance(s, ElementaryCollapse)]

    def then(self, other: "ReductionTrace") -> "ReductionTrace":
        if other.initial != self.final:
            raise ValueError("traces do not compose")
        return ReductionTrace(self.initial, self.steps + other.steps, other.final)

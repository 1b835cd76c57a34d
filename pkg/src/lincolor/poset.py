"""Finite posets, order complexes, domination and closure operators.

Each element keeps a fixed integer vertex id (its position in the poset it
was first built from), so order complexes of subposets live on the same
vertex ids and LC steps on them can be replayed against the original.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .complex import SimplicialComplex
from .errors import EmptyPoset, NotAClosureOperator, NotDefined, NotMonotone, UnknownElement
from .reduction import is_primitive_pair
from .trace import PrimitiveLC, ReductionTrace


class FinitePoset:
    """A partial order given by strict relations ``(a, b)`` meaning a < b.

    The relation is transitively closed on construction; a cycle raises
    ValueError.
    """

    def __init__(self, elements, relations=(), ids=None):
        self.elements = list(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate poset elements")
        self.ids = dict(ids) if ids is not None else {x: i for i, x in enumerate(self.elements)}
        idx = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)
        lt = [[False] * n for _ in range(n)]
        for a, b in relations:
            if a not in idx or b not in idx:
                raise UnknownElement((a, b))
            if a == b:
                raise ValueError(f"{a!r} < {a!r} is not a strict relation")
            lt[idx[a]][idx[b]] = True
        for k in range(n):
            for i in range(n):
                if lt[i][k]:
                    row_k = lt[k]
                    row_i = lt[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for i in range(n):
            if lt[i][i]:
                raise ValueError("relations contain a cycle")
        self._idx = idx
        self._lt = lt

    @classmethod
    def from_covers(cls, covers, elements=None):
        covers = list(covers)
        if elements is None:
            seen = []
            for a, b in covers:
                for x in (a, b):
                    if x not in seen:
                        seen.append(x)
            elements = seen
        return cls(elements, covers)

    @classmethod
    def chain(cls, elements):
        elements = list(elements)
        return cls(elements, zip(elements, elements[1:]))

    @classmethod
    def antichain(cls, elements):
        return cls(elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._idx

    def __repr__(self):
        return f"FinitePoset({self.elements}, covers={self.covers()})"

    def _i(self, x):
        try:
            return self._idx[x]
        except KeyError:
            raise UnknownElement(x) from None

    def lt(self, x, y):
        return self._lt[self._i(x)][self._i(y)]

    def leq(self, x, y):
        return x == y or self.lt(x, y)

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    def relations(self):
        return [(a, b) for a in self.elements for b in self.elements if self.lt(a, b)]

    def covers(self):
        return [
            (a, b)
            for a, b in self.relations()
            if not any(self.lt(a, z) and self.lt(z, b) for z in self.elements)
        ]

    def minimal_elements(self):
        return [x for x in self.elements if not any(self.lt(z, x) for z in self.elements)]

    def maximal_elements(self):
        return [x for x in self.elements if not any(self.lt(x, z) for z in self.elements)]

    def minimum(self):
        m = self.minimal_elements()
        return m[0] if len(m) == 1 else None

    def maximum(self):
        m = self.maximal_elements()
        return m[0] if len(m) == 1 else None

    def meet(self, subset):
        """Greatest lower bound of ``subset`` or None."""
        subset = list(subset)
        lower = [z for z in self.elements if all(self.leq(z, s) for s in subset)]
        top = [z for z in lower if all(self.leq(w, z) for w in lower)]
        return top[0] if top else None

    def join(self, subset):
        subset = list(subset)
        upper = [z for z in self.elements if all(self.leq(s, z) for s in subset)]
        bottom = [z for z in upper if all(self.leq(z, w) for w in upper)]
        return bottom[0] if bottom else None

    def subposet(self, keep):
        wanted = set(keep)
        keep = [x for x in self.elements if x in wanted]
        rel = [(a, b) for a in keep for b in keep if self.lt(a, b)]
        return FinitePoset(keep, rel, {x: self.ids[x] for x in keep})

    def without(self, x):
        self._i(x)
        return self.subposet(y for y in self.elements if y != x)

    def proper_part(self):
        lo, hi = self.minimum(), self.maximum()
        if lo is None or hi is None:
            raise NotDefined("proper part needs a bounded poset")
        return self.subposet(x for x in self.elements if x not in (lo, hi))

    def maximal_chains(self):
        """Maximal chains as tuples in increasing order, sorted by vertex ids."""
        up = {x: [] for x in self.elements}
        for a, b in self.covers():
            up[a].append(b)
        chains = []

        def walk(x, acc):
            if not up[x]:
                chains.append(tuple(acc))
                return
            for y in up[x]:
                walk(y, acc + [y])

        for m in self.minimal_elements():
            walk(m, [m])
        return sorted(chains, key=lambda c: [self.ids[x] for x in c])

    def chains_through(self, x):
        """Indices (into :meth:`maximal_chains`) of maximal chains through x."""
        self._i(x)
        return frozenset(i for i, c in enumerate(self.maximal_chains()) if x in c)

    def vertex(self, x):
        return self.ids[x]

    def element_of(self, v):
        for x, i in self.ids.items():
            if i == v:
                return x
        raise UnknownElement(v)


def order_complex(p: FinitePoset) -> SimplicialComplex:
    """Complex of chains; facets are the maximal chains."""
    if not len(p):
        raise EmptyPoset("order complex of an empty poset")
    labels = {p.ids[x]: str(x) for x in p.elements}
    return SimplicialComplex(([p.ids[x] for x in c] for c in p.maximal_chains()), labels)


def dominates(p: FinitePoset, x, y) -> bool:
    """True when y dominates x: everything comparable with x is comparable with y."""
    p._i(x)
    p._i(y)
    return all(p.comparable(z, y) for z in p.elements if p.comparable(z, x))


class MonotoneMap:
    """A self-map of a finite poset, given by its values."""

    def __init__(self, image):
        self.image = dict(image)

    def __call__(self, x):
        return self.image[x]

    def __repr__(self):
        return f"MonotoneMap({self.image})"

    def __eq__(self, other):
        return isinstance(other, MonotoneMap) and self.image == other.image

    @classmethod
    def identity(cls, p):
        return cls({x: x for x in p})

    def is_identity(self):
        return all(x == y for x, y in self.image.items())

    def fixed_points(self):
        return [x for x, y in self.image.items() if x == y]

    def restrict(self, elements):
        return MonotoneMap({x: self.image[x] for x in elements})

    def is_order_preserving(self, p):
        return all(p.leq(self(a), self(b)) for a, b in p.relations())

    def is_monotone(self, p):
        if set(self.image) != set(p.elements) or not set(self.image.values()) <= set(p.elements):
            return False
        return self.is_order_preserving(p) and all(p.comparable(x, self(x)) for x in p)

    def is_closure_operator(self, p):
        return self.is_monotone(p) and all(self(self(x)) == self(x) for x in p)


def find_dominated_nonfixed(p: FinitePoset, psi: MonotoneMap):
    """Some x with psi(x) != x and x dominated by psi(x); None for the identity."""
    if not psi.is_monotone(p):
        raise NotMonotone(psi)
    if psi.is_identity():
        return None
    for x in p.elements:
        if psi(x) != x and dominates(p, x, psi(x)):
            return x
    raise AssertionError("monotone non-identity map without a dominated moved point")


def closure_reduce(p: FinitePoset, phi: MonotoneMap) -> ReductionTrace:
    """LC trace from the order complex of ``p`` to that of ``phi(p)``.

    Repeatedly find a non-fixed x dominated by phi(x) in the current poset,
    remove it with a primitive step keeping phi(x), and restrict phi.
    """
    if not phi.is_closure_operator(p):
        raise NotAClosureOperator(phi)
    image = set(phi.image.values())
    start = order_complex(p)
    cur_p, cur = p, start
    steps = []
    while len(cur_p) > len(image):
        psi = phi.restrict(cur_p.elements)
        x = find_dominated_nonfixed(cur_p, psi)
        kept, removed = cur_p.vertex(phi(x)), cur_p.vertex(x)
        if not is_primitive_pair(cur, kept, removed):
            raise AssertionError(f"domination step {x!r} -> {phi(x)!r} is not a primitive LC step")
        steps.append(PrimitiveLC(kept, removed))
        cur = cur.deletion(removed)
        cur_p = cur_p.without(x)
        if cur != order_complex(cur_p):
            raise AssertionError("deletion differs from the order complex of the subposet")
    return ReductionTrace(start, steps, cur)


@dataclass(frozen=True)
class CoatomClosure:
    phi: MonotoneMap
    coatoms: tuple
    meet_of_coatoms: object


def coatom_closure(p: FinitePoset, top=None) -> CoatomClosure:
    """x -> meet of the coatoms above x.

    Coatoms are the elements covered by ``top`` when given, otherwise the
    maximal elements of ``p``. Raises NotDefined if some meet is missing.
    """
    if top is not None:
        co = [a for a, b in p.covers() if b == top]
    else:
        co = p.maximal_elements()
    image = {}
    for x in p.elements:
        above = [c for c in co if p.leq(x, c)]
        bar = p.meet(above)
        if bar is None:
            raise NotDefined(f"meet of the coatoms above {x!r} does not exist")
        image[x] = bar
    phi = MonotoneMap(image)
    if not phi.is_closure_operator(p):
        raise AssertionError("coatom map is not a closure operator")
    return CoatomClosure(phi, tuple(co), p.meet(co) if co else None)


def lc_contract_via_coatoms(p: FinitePoset) -> ReductionTrace:
    """Reduce the order complex to a point through the coatom closure.

    Requires the meet of all coatoms to exist; it is then the minimum of the
    closure image and every other element is removed in its favour.
    """
    cc = coatom_closure(p)
    if cc.meet_of_coatoms is None:
        raise NotDefined("the coatoms have no meet")
    trace = closure_reduce(p, cc.phi)
    image = p.subposet(set(cc.phi.image.values()))
    m = cc.meet_of_coatoms
    if image.minimum() != m:
        raise AssertionError("meet of coatoms is not the minimum of the image")
    cur = trace.final
    steps = list(trace.steps)
    for x in image.elements:
        if x == m:
            continue
        kept, removed = image.vertex(m), image.vertex(x)
        if not is_primitive_pair(cur, kept, removed):
            raise AssertionError("minimum does not dominate")
        steps.append(PrimitiveLC(kept, removed))
        cur = cur.deletion(removed)
    return ReductionTrace(trace.initial, steps, cur)


def random_poset(rng: random.Random, n, density=0.4) -> FinitePoset:
    rel = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    perm = list(range(n))
    rng.shuffle(perm)
    return FinitePoset(range(n), [(perm[i], perm[j]) for i, j in rel])


def random_closure_operator(rng: random.Random, p: FinitePoset, attempts=500) -> MonotoneMap:
    """Random closure operator by rejection sampling over image sets.

    Draw an image set R; send x to the least element of R above it if there
    is exactly one minimal such element, else to the unique maximal element
    of R below it. Reject unless the result is a closure operator.
    """
    elems = p.elements
    for _ in range(attempts):
        image_set = [x for x in elems if rng.random() < 0.5]
        if not image_set:
            continue
        phi = {}
        for x in elems:
            ups = [r for r in image_set if p.leq(x, r)]
            ups = [r for r in ups if not any(p.lt(s, r) for s in ups)]
            if len(ups) == 1:
                phi[x] = ups[0]
                continue
            downs = [r for r in image_set if p.leq(r, x)]
            downs = [r for r in downs if not any(p.lt(r, s) for s in downs)]
            if len(downs) == 1:
                phi[x] = downs[0]
                continue
            break
        else:
            m = MonotoneMap(phi)
            if m.is_closure_operator(p):
                return m
    return MonotoneMap.identity(p)


def _lattice(elements, covers):
    return FinitePoset.from_covers(covers, elements)


def subgroup_lattice(name) -> FinitePoset:
    """Hardcoded subgroup lattices of a few small groups (bottom '1', top 'G')."""
    if name in ("Z4", "Z8", "Z9", "Z27"):
        order = {"Z4": [2], "Z8": [2, 4], "Z9": [3], "Z27": [3, 9]}[name]
        chain = ["1"] + [f"C{k}" for k in order] + ["G"]
        return FinitePoset.chain(chain)
    if name in ("Z2xZ2", "Z3xZ3"):
        p = 2 if name == "Z2xZ2" else 3
        lines = [f"L{i}" for i in range(p + 1)]
        return _lattice(["1"] + lines + ["G"], [("1", x) for x in lines] + [(x, "G") for x in lines])
    if name == "Z2xZ2xZ2":
        vecs = [v for v in product((0, 1), repeat=3) if any(v)]
        lines = {v: "L" + "".join(map(str, v)) for v in vecs}
        planes = {w: "P" + "".join(map(str, w)) for w in vecs}
        covers = [("1", x) for x in lines.values()] + [(x, "G") for x in planes.values()]
        for v in vecs:
            for w in vecs:
                if sum(a * b for a, b in zip(v, w)) % 2 == 0:
                    covers.append((lines[v], planes[w]))
        return _lattice(["1", *lines.values(), *planes.values(), "G"], covers)
    if name == "Q8":
        return _lattice(
            ["1", "Z", "<i>", "<j>", "<k>", "G"],
            [("1", "Z"), ("Z", "<i>"), ("Z", "<j>"), ("Z", "<k>"), ("<i>", "G"), ("<j>", "G"), ("<k>", "G")],
        )
    if name == "Z2xZ4":
        twos = ["<(1,0)>", "<(0,2)>", "<(1,2)>"]
        fours = ["<(0,1)>", "<(1,1)>", "V4"]
        covers = [("1", x) for x in twos] + [(x, "G") for x in fours]
        covers += [("<(0,2)>", "<(0,1)>"), ("<(0,2)>", "<(1,1)>")]
        covers += [(x, "V4") for x in twos]
        return _lattice(["1", *twos, *fours, "G"], covers)
    if name == "D8":
        twos = ["<r2>", "<s>", "<sr>", "<sr2>", "<sr3>"]
        fours = ["<r>", "V1", "V2"]
        covers = [("1", x) for x in twos] + [(x, "G") for x in fours]
        covers += [("<r2>", "<r>"), ("<r2>", "V1"), ("<s>", "V1"), ("<sr2>", "V1")]
        covers += [("<r2>", "V2"), ("<sr>", "V2"), ("<sr3>", "V2")]
        return _lattice(["1", *twos, *fours, "G"], covers)
    raise KeyError(name)


SUBGROUP_LATTICES = ("Z4", "Z8", "Z9", "Z27", "Z2xZ2", "Z3xZ3", "Z2xZ2xZ2", "Q8", "Z2xZ4", "D8")
ELEMENTARY_ABELIAN = frozenset({"Z2xZ2", "Z3xZ3", "Z2xZ2xZ2"})

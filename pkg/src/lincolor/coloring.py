"""Linear colorings: validation, linear chromatic number, representatives.

A coloring is linear when, within every colour class, the facet sets
F(v) = {facets containing v} form a chain under inclusion. The linear
chromatic number is therefore the minimum number of chains covering the
facet-set preorder, which we compute with Dilworth's theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .complex import Multiset, SimplicialComplex
from .errors import EmptyComplex, IncompleteColoring, NotALinearColoring


class LinearColoring:
    """Surjective vertex colouring onto ``1..k``.

    Construction checks surjectivity only; linearity is a property of the
    pair (complex, colouring) and is decided by :func:`is_linear_coloring`.
    """

    __slots__ = ("colors", "k")

    def __init__(self, colors):
        colors = {int(v): int(c) for v, c in dict(colors).items()}
        k = max(colors.values(), default=0)
        if set(colors.values()) != set(range(1, k + 1)):
            raise ValueError("colouring must be surjective onto 1..k")
        self.colors = colors
        self.k = k

    @classmethod
    def from_classes(cls, classes):
        """Build from an iterable of vertex groups; group i gets colour i+1."""
        colors = {}
        for i, group in enumerate(classes, start=1):
            for v in group:
                if v in colors:
                    raise ValueError(f"vertex {v} appears in two classes")
                colors[v] = i
        return cls(colors)

    @classmethod
    def from_labels(cls, mapping):
        """Renumber arbitrary colour labels to 1..k in sorted label order."""
        labels = sorted(set(mapping.values()), key=lambda c: (str(type(c)), c))
        rank = {c: i for i, c in enumerate(labels, start=1)}
        return cls({v: rank[c] for v, c in mapping.items()})

    @classmethod
    def trivial(cls, d: SimplicialComplex):
        return cls({v: i for i, v in enumerate(sorted(d.vertices), start=1)})

    def __getitem__(self, v):
        return self.colors[v]

    def __eq__(self, other):
        return isinstance(other, LinearColoring) and self.colors == other.colors

    def __hash__(self):
        return hash(frozenset(self.colors.items()))

    def __repr__(self):
        return f"LinearColoring({self.classes()})"

    def classes(self):
        out = {i: [] for i in range(1, self.k + 1)}
        for v in sorted(self.colors):
            out[self.colors[v]].append(v)
        return out

    @property
    def type_vector(self):
        cls = self.classes()
        return tuple(len(cls[i]) for i in range(1, self.k + 1))

    def face_multiset(self, face):
        return Multiset(self.colors[v] for v in face)

    def restrict(self, vertices):
        """Restriction to a vertex subset, colours renumbered to stay surjective."""
        sub = {v: self.colors[v] for v in vertices}
        return LinearColoring.from_labels(sub)


class FacetSetPreorder:
    """The preorder u <= v iff F(u) is a subset of F(v)."""

    def __init__(self, d: SimplicialComplex):
        self.complex = d
        self.facet_sets = d.facet_sets()

    def leq(self, u, v):
        return self.facet_sets[u] <= self.facet_sets[v]

    def comparable(self, u, v):
        return self.leq(u, v) or self.leq(v, u)

    def equivalence_classes(self):
        """Groups of vertices with equal facet sets, ordered by smallest id."""
        groups = {}
        for v in sorted(self.facet_sets):
            groups.setdefault(self.facet_sets[v], []).append(v)
        return sorted(groups.values(), key=lambda g: g[0])


@dataclass(frozen=True)
class LinearityVerdict:
    linear: bool
    facets: tuple | None = None
    vertices: tuple | None = None

    def __bool__(self):
        return self.linear


def _check_domain(d, kappa):
    missing = d.vertices - set(kappa.colors)
    if missing:
        raise IncompleteColoring(f"vertices without a colour: {sorted(missing)}")
    extra = set(kappa.colors) - d.vertices
    if extra:
        raise IncompleteColoring(f"colour given for non-vertices: {sorted(extra)}")


def multiset_condition(d, kappa):
    """||F_k n F'_k|| == |F n F'| for every pair of facets."""
    facets = d.sorted_facets()
    ms = [kappa.face_multiset(f) for f in facets]
    for i, j in combinations(range(len(facets)), 2):
        if ms[i].intersection(ms[j]).cardinality != len(set(facets[i]) & set(facets[j])):
            return False
    return True


def facet_pair_witness(d, kappa):
    """First (F1, F2, v1, v2) with v1 in F1-F2, v2 in F2-F1 of equal colour."""
    facets = d.sorted_facets()
    for f1, f2 in combinations(facets, 2):
        a = sorted(set(f1) - set(f2))
        b = sorted(set(f2) - set(f1))
        for v1 in a:
            for v2 in b:
                if kappa[v1] == kappa[v2]:
                    return f1, f2, v1, v2
    return None


def chain_condition(d, kappa):
    pre = FacetSetPreorder(d)
    for members in kappa.classes().values():
        for u, v in combinations(members, 2):
            if not pre.comparable(u, v):
                return False
    return True


def is_linear_coloring(d: SimplicialComplex, kappa: LinearColoring) -> LinearityVerdict:
    """Decide linearity by all three characterisations and insist they agree."""
    _check_domain(d, kappa)
    by_multiset = multiset_condition(d, kappa)
    witness = facet_pair_witness(d, kappa)
    by_chains = chain_condition(d, kappa)
    if not (by_multiset == (witness is None) == by_chains):
        raise AssertionError("linearity characterisations disagree")
    if witness is None:
        return LinearityVerdict(True)
    f1, f2, v1, v2 = witness
    return LinearityVerdict(False, (f1, f2), (v1, v2))


def require_linear(d, kappa):
    if not is_linear_coloring(d, kappa):
        raise NotALinearColoring("colouring is not linear on this complex")


def _max_matching(n, adj):
    """Kuhn's augmenting paths; adj[i] lists right-nodes in preference order."""
    match_right = [-1] * n
    match_left = [-1] * n

    def augment(u, seen):
        for w in adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if match_right[w] == -1 or augment(match_right[w], seen):
                match_right[w] = u
                match_left[u] = w
                return True
        return False

    for u in range(n):
        augment(u, set())
    return match_left, match_right


def lchr(d: SimplicialComplex):
    """Exact linear chromatic number and a witness colouring.

    Vertices with equal facet sets are merged into one node; a minimum chain
    cover of the strict inclusion order on those nodes is obtained from a
    maximum matching (nodes minus matching size).
    """
    if d.is_empty:
        raise EmptyComplex("lchr is undefined for the empty complex")
    pre = FacetSetPreorder(d)
    nodes = pre.equivalence_classes()
    sets = [pre.facet_sets[g[0]] for g in nodes]
    n = len(nodes)
    adj = [[j for j in range(n) if j != i and sets[i] < sets[j]] for i in range(n)]
    match_left, match_right = _max_matching(n, adj)
    chains = []
    for start in range(n):
        if match_right[start] != -1:
            continue
        chain = []
        cur = start
        while cur != -1:
            chain.extend(nodes[cur])
            cur = match_left[cur]
        chains.append(sorted(chain))
    chains.sort(key=lambda c: c[0])
    kappa = LinearColoring.from_classes(chains)
    if not is_linear_coloring(d, kappa):
        raise AssertionError("chain cover produced a non-linear colouring")
    return kappa.k, kappa


def top_vertices(d, kappa):
    """For each colour, the vertices whose facet set is largest in the class."""
    pre = FacetSetPreorder(d)
    out = {}
    for c, members in kappa.classes().items():
        big = max(len(pre.facet_sets[v]) for v in members)
        out[c] = [v for v in members if len(pre.facet_sets[v]) == big]
    return out


def representative_subcomplexes(d: SimplicialComplex, kappa: LinearColoring):
    """All representative subcomplexes, the one on smallest ids first."""
    require_linear(d, kappa)
    tops = top_vertices(d, kappa)
    choices = [tops[c] for c in sorted(tops)]
    return [d.induced(sel) for sel in product(*choices)]


def canonical_labeling(d: SimplicialComplex, kappa: LinearColoring):
    """Order each colour class so that facet sets shrink along the order.

    Returns ``{colour: (v_1, ..., v_n)}``; whenever v_t lies in a facet, so
    does every v_r with r <= t.
    """
    require_linear(d, kappa)
    pre = FacetSetPreorder(d)
    out = {}
    for c, members in kappa.classes().items():
        out[c] = tuple(sorted(members, key=lambda v: (-len(pre.facet_sets[v]), v)))
    for f in d.facets:
        for seq in out.values():
            for t, v in enumerate(seq):
                if v in f and not all(u in f for u in seq[:t]):
                    raise AssertionError("canonical labelling property fails")
    return out

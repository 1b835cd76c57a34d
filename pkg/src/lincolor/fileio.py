"""Line-oriented text formats for complexes, colourings, posets, graphs,
multicomplexes, closure maps and reduction certificates.

Every format ignores blank lines and lines starting with ``#``. See
``docs/formats.md`` for the byte-level description.
"""

from __future__ import annotations

import hashlib
import warnings

from .coloring import LinearColoring
from .complex import SimplicialComplex, maximal_sets
from .errors import ParseError
from .graph import SimpleGraph
from .multicomplex import Multicomplex
from .poset import FinitePoset, MonotoneMap
from .trace import ElementaryCollapse, NERemoval, PrimitiveLC, ReductionTrace

RESERVED = set("#|<>")


def _lines(text):
    """Yield ``(line_number, tokens)`` for every content line."""
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield n, line.split()


def _is_int(tok):
    try:
        int(tok)
    except ValueError:
        return False
    return True


def _atom(tok):
    return int(tok) if _is_int(tok) else tok


def _check_token(tok, n):
    if RESERVED & set(tok) or tok == "--" or tok == "->":
        raise ParseError(f"reserved character in token {tok!r}", n)


# complexes


def parse_complex(text: str) -> SimplicialComplex:
    """One facet per line of whitespace-separated vertex tokens.

    Integer tokens are used as vertex ids directly. Otherwise vertices get
    ids 1..n in sorted token order and keep their tokens as labels.
    Dominated facets are dropped with a warning.
    """
    rows = []
    for n, toks in _lines(text):
        for t in toks:
            _check_token(t, n)
        if len(set(toks)) != len(toks):
            raise ParseError("repeated vertex in a facet", n)
        rows.append((n, toks))
    tokens = sorted({t for _, toks in rows for t in toks})
    if tokens and all(_is_int(t) for t in tokens):
        if len({int(t) for t in tokens}) != len(tokens):
            raise ParseError("two tokens name the same integer vertex")
        ids = {t: int(t) for t in tokens}
        labels = None
    else:
        ids = {t: i for i, t in enumerate(tokens, start=1)}
        labels = {i: t for t, i in ids.items()}
    sets = [frozenset(ids[t] for t in toks) for _, toks in rows]
    kept = maximal_sets(sets)
    if len(kept) != len(sets):
        warnings.warn(f"pruned {len(sets) - len(kept)} dominated or repeated facet(s)", stacklevel=2)
    return SimplicialComplex(kept, labels)


def serialize_complex(d: SimplicialComplex) -> str:
    """Canonical text: vertices ordered by id within a facet, facets sorted."""
    return "".join(" ".join(d.label(v) for v in f) + "\n" for f in d.sorted_facets())


def complex_digest(d: SimplicialComplex) -> str:
    return hashlib.sha256(serialize_complex(d).encode()).hexdigest()


def label_index(d: SimplicialComplex) -> dict:
    """Map from printed vertex label to vertex id."""
    return {d.label(v): v for v in d.vertices}


def _vertex(index, tok, n):
    if tok not in index:
        raise ParseError(f"unknown vertex {tok!r}", n)
    return index[tok]


# colourings


def parse_coloring(text: str, d: SimplicialComplex) -> LinearColoring:
    """Lines ``vertex colour``; colour labels are renumbered 1..k in sorted order."""
    index = label_index(d)
    colors = {}
    for n, toks in _lines(text):
        if len(toks) != 2:
            raise ParseError("expected 'vertex colour'", n)
        v = _vertex(index, toks[0], n)
        if v in colors:
            raise ParseError(f"vertex {toks[0]!r} coloured twice", n)
        colors[v] = _atom(toks[1])
    if colors and len({type(c) for c in colors.values()}) > 1:
        colors = {v: str(c) for v, c in colors.items()}
    return LinearColoring.from_labels(colors)


def serialize_coloring(d: SimplicialComplex, kappa: LinearColoring) -> str:
    return "".join(f"{d.label(v)} {kappa[v]}\n" for v in sorted(kappa.colors))


# posets, closure maps, graphs


def parse_poset(text: str) -> FinitePoset:
    """Lines ``a < b`` (order relations, usually covers) or a lone element."""
    elems, rel = [], []

    def add(x):
        if x not in elems:
            elems.append(x)

    for n, toks in _lines(text):
        if len(toks) == 1:
            add(toks[0])
        elif len(toks) == 3 and toks[1] == "<":
            add(toks[0])
            add(toks[2])
            rel.append((toks[0], toks[2]))
        else:
            raise ParseError("expected 'a < b' or a single element", n)
    if elems and all(_is_int(x) for x in elems):
        elems = [int(x) for x in elems]
        rel = [(int(a), int(b)) for a, b in rel]
    try:
        return FinitePoset(elems, rel)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def serialize_poset(p: FinitePoset) -> str:
    lines = [f"{a} < {b}" for a, b in p.covers()]
    touched = {x for a, b in p.covers() for x in (a, b)}
    lines += [str(x) for x in p.elements if x not in touched]
    return "".join(line + "\n" for line in lines)


def parse_closure(text: str, p: FinitePoset) -> MonotoneMap:
    """Lines ``x -> y``; unlisted elements are fixed."""
    names = {str(x): x for x in p.elements}
    image = {x: x for x in p.elements}
    for n, toks in _lines(text):
        if len(toks) != 3 or toks[1] != "->":
            raise ParseError("expected 'x -> y'", n)
        for t in (toks[0], toks[2]):
            if t not in names:
                raise ParseError(f"unknown element {t!r}", n)
        image[names[toks[0]]] = names[toks[2]]
    return MonotoneMap(image)


def serialize_closure(phi: MonotoneMap) -> str:
    return "".join(f"{x} -> {y}\n" for x, y in phi.image.items() if x != y)


def parse_graph(text: str) -> SimpleGraph:
    """Lines ``u -- v`` (edges) or a lone vertex."""
    verts, edges = [], []
    for n, toks in _lines(text):
        if len(toks) == 1:
            verts.append(toks[0])
        elif len(toks) == 3 and toks[1] == "--":
            if toks[0] == toks[2]:
                raise ParseError("loops are not allowed", n)
            edges.append((toks[0], toks[2]))
        else:
            raise ParseError("expected 'u -- v' or a single vertex", n)
    names = verts + [x for e in edges for x in e]
    if names and all(_is_int(x) for x in names):
        verts = [int(x) for x in verts]
        edges = [(int(a), int(b)) for a, b in edges]
    return SimpleGraph(verts, edges)


def serialize_graph(g: SimpleGraph) -> str:
    lines = [f"{u} -- {v}" for u, v in g.edges] + [str(v) for v in g.isolated()]
    return "".join(line + "\n" for line in lines)


# multicomplexes


def parse_multicomplex(text: str) -> Multicomplex:
    """One face per line; a symbol repeated r times has multiplicity r."""
    faces = []
    for n, toks in _lines(text):
        if not all(_is_int(t) and int(t) > 0 for t in toks):
            raise ParseError("multicomplex symbols are positive integers", n)
        faces.append([int(t) for t in toks])
    return Multicomplex(faces)


def serialize_multicomplex(g: Multicomplex) -> str:
    out = []
    for m in g.sorted_maximal_faces():
        out.append(" ".join(str(s) for s in sorted(m) for _ in range(m.count(s))))
    return "".join(line + "\n" for line in out)


# certificates


def serialize_trace(trace: ReductionTrace) -> str:
    """Header with the digest of the initial complex, then one step per line."""
    d = trace.initial
    lab = d.label
    out = [f"# complex sha256:{complex_digest(d)}", f"# steps {len(trace.steps)}"]
    for s in trace.steps:
        if isinstance(s, PrimitiveLC):
            out.append(f"PRIM {lab(s.kept)} {lab(s.removed)}")
        elif isinstance(s, NERemoval):
            cone = "-" if s.cone_point is None else lab(s.cone_point)
            out.append(f"NE {lab(s.removed)} {cone}")
        elif isinstance(s, ElementaryCollapse):
            free = " ".join(lab(v) for v in sorted(s.free_face))
            facet = " ".join(lab(v) for v in sorted(s.facet))
            out.append(f"COLL {free} | {facet}")
        else:
            raise TypeError(f"unknown step {s!r}")
    return "\n".join(out) + "\n"


def parse_trace(text: str, d: SimplicialComplex) -> ReductionTrace:
    """Read a certificate against ``d``; the header digest must match."""
    digest = None
    steps = []
    index = label_index(d)
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("# complex "):
            digest = line.split()[-1].removeprefix("sha256:")
            continue
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        kind, args = toks[0], toks[1:]
        if kind == "PRIM" and len(args) == 2:
            steps.append(PrimitiveLC(_vertex(index, args[0], n), _vertex(index, args[1], n)))
        elif kind == "NE" and len(args) == 2:
            cone = None if args[1] == "-" else _vertex(index, args[1], n)
            steps.append(NERemoval(_vertex(index, args[0], n), cone))
        elif kind == "COLL" and args.count("|") == 1:
            cut = args.index("|")
            free = [_vertex(index, t, n) for t in args[:cut]]
            facet = [_vertex(index, t, n) for t in args[cut + 1:]]
            steps.append(ElementaryCollapse(free, facet))
        else:
            raise ParseError(f"unrecognised step {line!r}", n)
    if digest is None:
        raise ParseError("missing '# complex sha256:...' header")
    if digest != complex_digest(d):
        raise ParseError("certificate was issued for a different complex")
    return ReductionTrace(d, steps, None)

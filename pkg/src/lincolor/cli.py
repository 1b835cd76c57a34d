"""Command-line interface.

Exit codes: 0 success, 1 verified negative answer, 2 unknown (search budget
ran out), 64 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import fileio
from .collapse import collapses_to, is_nonevasive, ne_reduces_to
from .coloring import is_linear_coloring, lchr
from .errors import (
    BudgetExhausted,
    InvalidTrace,
    LincolorError,
    NotDefined,
    NotReducible,
)
from .graph import chromatic_vs_lchr
from .homology import reduced_homology
from .poset import closure_reduce, lc_contract_via_coatoms, order_complex
from .reduction import DEFAULT_BUDGET, POINT, LowerBound, lc_core_and_lindim, lc_reduce, primitive_reductions
from .suite import SuiteSpec, enumerate_suite
from .verify import verify_trace

OK, NEGATIVE, UNKNOWN, USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


class Reporter:
    """Collects one record per answer and prints it in the chosen format."""

    def __init__(self, fmt, out):
        self.fmt = fmt
        self.out = out

    def emit(self, **record):
        if self.fmt == "json-lines":
            self.out.write(json.dumps(record, sort_keys=False) + "\n")
            return
        for k, v in record.items():
            self.out.write(f"{k}={_text(v)}\n")


def _text(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "unknown"
    if isinstance(v, (list, tuple)):
        return ",".join(_text(x) for x in v)
    return str(v)


def _read(path):
    if path is None:
        raise UsageError("--input is required")
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _load_complex(path):
    return fileio.parse_complex(_read(path))


def _target(args, d):
    if args.target in (None, POINT):
        return POINT
    t = fileio.parse_complex(_read(args.target))
    # target files name vertices by label, so translate into d's ids
    index = fileio.label_index(d)
    try:
        return type(d)(([index[t.label(v)] for v in f] for f in t.facets), d.vertex_labels)
    except KeyError as exc:
        raise UsageError(f"target vertex {exc} is not in the input complex") from exc


def _emit_trace(args, trace):
    if args.emit_trace:
        with open(args.emit_trace, "w") as fh:
            fh.write(fileio.serialize_trace(trace))


def _labels(d, vs):
    return [d.label(v) for v in sorted(vs)]


# subcommands


def cmd_check_coloring(args, rep):
    d = _load_complex(args.input)
    if args.coloring is None:
        raise UsageError("--coloring is required")
    kappa = fileio.parse_coloring(_read(args.coloring), d)
    verdict = is_linear_coloring(d, kappa)
    record = {"linear": verdict.linear, "colors": kappa.k}
    if not verdict.linear:
        f1, f2 = verdict.facets
        record["witness_facets"] = [" ".join(_labels(d, f1)), " ".join(_labels(d, f2))]
        record["witness_vertices"] = _labels(d, verdict.vertices)
    rep.emit(**record)
    return OK if verdict.linear else NEGATIVE


def cmd_lchr(args, rep):
    d = _load_complex(args.input)
    k, kappa = lchr(d)
    rep.emit(lchr=k, classes=[" ".join(_labels(d, c)) for c in kappa.classes().values()])
    return OK


def cmd_reduce(args, rep):
    d = _load_complex(args.input)
    if args.target is None:
        trace = lc_reduce(d)
    else:
        try:
            trace = lc_reduce(d, _target(args, d), strategy="dfs", budget=args.budget)
        except NotReducible:
            rep.emit(reduced=False)
            return NEGATIVE
    verify_trace(trace)
    _emit_trace(args, trace)
    rep.emit(reduced=True, steps=len(trace), removed=[d.label(v) for v in trace.removed_vertices()],
             final=fileio.serialize_complex(trace.final).strip().replace("\n", "; "))
    return OK


def cmd_core(args, rep):
    d = _load_complex(args.input)
    cores, ld = lc_core_and_lindim(d, args.budget)
    bound = isinstance(ld, LowerBound)
    rep.emit(lindim=int(ld), exact=not bound, cores=len(cores),
             core_unique=None if bound else len(cores) == 1,
             smallest_core=fileio.serialize_complex(cores[0]).strip().replace("\n", "; ") if cores else None)
    return UNKNOWN if bound else OK


def cmd_irreducible(args, rep):
    d = _load_complex(args.input)
    pairs = primitive_reductions(d)
    record = {"irreducible": not pairs}
    if pairs:
        kept, removed = pairs[0]
        record["witness"] = [d.label(kept), d.label(removed)]
    rep.emit(**record)
    return NEGATIVE if pairs else OK


def cmd_collapse(args, rep):
    d = _load_complex(args.input)
    try:
        trace = collapses_to(d, _target(args, d), args.budget)
    except NotReducible:
        rep.emit(collapsible=False)
        return NEGATIVE
    verify_trace(trace)
    _emit_trace(args, trace)
    rep.emit(collapsible=True, steps=len(trace), verified=True)
    return OK


def cmd_nonevasive(args, rep):
    d = _load_complex(args.input)
    ne = is_nonevasive(d)
    if ne and args.emit_trace:
        trace = ne_reduces_to(d, POINT, args.budget)
        verify_trace(trace)
        _emit_trace(args, trace)
    rep.emit(nonevasive=ne)
    return OK if ne else NEGATIVE


def cmd_homology(args, rep):
    d = _load_complex(args.input)
    h = reduced_homology(d)
    rep.emit(homology=str(h), homdim=h.homdim,
             betti=[h.betti(i) for i in range(-1, d.dim + 1)],
             euler=h.euler_characteristic())
    return OK


def cmd_poset_reduce(args, rep):
    p = fileio.parse_poset(_read(args.input))
    if args.closure:
        phi = fileio.parse_closure(_read(args.closure), p)
        trace = closure_reduce(p, phi)
        image = sorted(set(phi.image.values()), key=p.vertex)
        contracted = None
    else:
        try:
            trace = lc_contract_via_coatoms(p)
            contracted = True
        except NotDefined:
            # no coatom meet: settle contractibility by exhaustive search
            d = order_complex(p)
            try:
                trace = lc_reduce(d, POINT, strategy="dfs", budget=args.budget)
                contracted = True
            except NotReducible:
                trace = lc_reduce(d)
                contracted = False
        image = [trace.final.label(v) for v in sorted(trace.final.vertices)]
    verify_trace(trace)
    _emit_trace(args, trace)
    rep.emit(steps=len(trace), remaining=[str(x) for x in image], lc_contractible=contracted)
    return NEGATIVE if contracted is False else OK


def cmd_graph_bound(args, rep):
    g = fileio.parse_graph(_read(args.input))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        b = chromatic_vs_lchr(g, args.budget)
    rep.emit(chi=b.chi, lchr=b.lchr_n, bound_holds=b.bound_holds)
    return OK if b.bound_holds else NEGATIVE


def cmd_suite(args, rep):
    from .audit import COLUMNS, audit_complex

    spec = SuiteSpec(args.max_vertices, args.mode, args.seed, args.samples)
    rows = [audit_complex(d, i, args.budget) for i, d in enumerate(enumerate_suite(spec))]
    if args.format == "json-lines":
        for r in rows:
            rep.out.write(json.dumps(r.as_dict()) + "\n")
    else:
        rep.out.write("\t".join(COLUMNS) + "\n")
        for r in rows:
            d = r.as_dict()
            rep.out.write("\t".join(_text(d[c]) if d[c] is not None else "" for c in COLUMNS) + "\n")
    if args.report:
        from .report import write_report

        for path in write_report(rows, args.report):
            print(f"wrote {path}", file=sys.stderr)
    failed = [r.index for r in rows if not r.ok]
    print(f"complexes={len(rows)} failed={len(failed)}", file=sys.stderr)
    if failed:
        return NEGATIVE
    if any(not r.lindim_exact for r in rows):
        return UNKNOWN
    return OK


def cmd_verify_trace(args, rep):
    d = _load_complex(args.input)
    if args.trace is None:
        raise UsageError("--trace is required")
    trace = fileio.parse_trace(_read(args.trace), d)
    target = None if args.target is None else _target(args, d)
    try:
        final = verify_trace(trace)
    except InvalidTrace as exc:
        rep.emit(valid=False, reason=str(exc))
        return NEGATIVE
    if target == POINT and not final.is_point or target not in (None, POINT) and final != target:
        rep.emit(valid=False, reason="replay does not end at the target")
        return NEGATIVE
    rep.emit(valid=True, steps=len(trace), final=fileio.serialize_complex(final).strip().replace("\n", "; "))
    return OK


COMMANDS = {
    "check-coloring": (cmd_check_coloring, "decide whether a colouring is linear"),
    "lchr": (cmd_lchr, "linear chromatic number with a witness colouring"),
    "reduce": (cmd_reduce, "LC-reduce greedily, or search for a reduction to --target"),
    "core": (cmd_core, "LC-cores and linear dimension"),
    "irreducible": (cmd_irreducible, "decide LC-irreducibility"),
    "collapse": (cmd_collapse, "search for elementary collapses to --target"),
    "nonevasive": (cmd_nonevasive, "decide nonevasiveness"),
    "homology": (cmd_homology, "reduced integral homology"),
    "poset-reduce": (cmd_poset_reduce, "reduce an order complex through a closure operator"),
    "graph-bound": (cmd_graph_bound, "chromatic number against lchr of the neighborhood complex"),
    "suite": (cmd_suite, "audit every complex of a small suite"),
    "verify-trace": (cmd_verify_trace, "replay a reduction certificate"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH")
    common.add_argument("--coloring", metavar="PATH")
    common.add_argument("--target", metavar="PATH|point")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="N")
    common.add_argument("--seed", type=int, default=0, metavar="N")
    common.add_argument("--emit-trace", metavar="PATH")
    common.add_argument("--trace", metavar="PATH")
    common.add_argument("--closure", metavar="PATH", help="closure map for poset-reduce")
    common.add_argument("--format", choices=("text", "json-lines"), default="text")

    parser = _Parser(prog="lincolor", description="Linear colourings and reductions of simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if name == "suite":
            sp.add_argument("--max-vertices", type=int, default=4)
            sp.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
            sp.add_argument("--samples", type=int, default=100)
            sp.add_argument("--report", metavar="DIR", help="write suite.tsv and PNG figures here")
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    rep = Reporter(args.format, out)
    if args.budget < 1:
        print("lincolor: error: --budget must be positive", file=sys.stderr)
        return USAGE
    handler = COMMANDS[args.command][0]
    try:
        return handler(args, rep)
    except BudgetExhausted as exc:
        rep.emit(result=None, reason=f"budget exhausted after {exc.nodes} nodes")
        return UNKNOWN
    except NotReducible as exc:
        rep.emit(result=False, reason=str(exc))
        return NEGATIVE
    except (UsageError, LincolorError) as exc:
        print(f"lincolor: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point: ``twelverep <subcommand> ...``.

Exit status is 0 for a positive answer, 1 for a negative one (with a witness
printed where there is one) and 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .graphs import GraphError, LabeledGraph, bipartition
from .io import (
    FormatError,
    dump_model,
    format_labeling,
    load_model,
    parse_graph,
    parse_grid,
    parse_ordering,
    read_word,
)
from .models import (
    IntervalModel,
    ModelError,
    icb_to_representant,
    ordering_to_icb_model,
    ordering_to_triangle_model,
    triangle_to_representant,
    validate_icb,
    validate_triangle,
)
from .oracle import SUITES, cross_validate
from .patterns import FAMILIES, ICB_FAMILY, PatternError, find_pattern_free_ordering
from .recognition import (
    Decision,
    grid_12_representable,
    is_12_representable,
    is_12_representable_bipartite,
    tree_12_representable,
)
from .words import WordError, find_u_match, format_word, parse_pattern_word, represents_witness

OK, NO, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _load(path: str, parser):
    try:
        return parser(_read(path))
    except (FormatError, GraphError, ModelError, WordError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_verify(args) -> int:
    lg = _load(args.graph, parse_graph)
    w = _load(args.word, read_word)
    u = parse_pattern_word(args.u)
    try:
        bad = represents_witness(w, lg, u)
    except WordError as exc:
        raise UsageError(str(exc)) from None
    if bad is None:
        print("REPRESENTS")
        return OK
    print(f"NOT REPRESENTED: pair {bad[0]} {bad[1]}")
    return NO


def cmd_match(args) -> int:
    w = _load(args.word, read_word)
    u = parse_pattern_word(args.u)
    i = find_u_match(w, u)
    if i is None:
        print("NO MATCH")
        return NO
    print(f"MATCH at {i + 1}: {format_word(w[i:i + len(u)])}")
    return OK


def cmd_label_search(args) -> int:
    lg = _load(args.graph, parse_graph)
    g = lg.graph
    family = FAMILIES[args.family]
    coloring = None
    if args.x_first:
        coloring = bipartition(g)
        if coloring is None:
            raise UsageError("--x-first needs a bipartite graph")
        if args.family == "j4q4":
            # equivalent once edges point X to Y; the coloured patterns are the usual statement
            family = ICB_FAMILY
    labels = find_pattern_free_ordering(g, family, coloring, x_first=args.x_first)
    if labels is None:
        print("NONE")
        return NO
    print("labeling: " + format_labeling(labels))
    return OK


def cmd_model_check(args) -> int:
    g = _load(args.graph, parse_graph).graph
    m = _load(args.model, load_model)
    try:
        ok, bad = validate_icb(g, m) if isinstance(m, IntervalModel) else validate_triangle(g, m)
    except ModelError as exc:
        raise UsageError(str(exc)) from None
    if ok:
        print("VALID")
        return OK
    print(f"INVALID: pair {bad[0] + 1} {bad[1] + 1}")
    return NO


def cmd_convert(args) -> int:
    m = _load(args.model, load_model)
    try:
        if isinstance(m, IntervalModel):
            labels, w = icb_to_representant(m)
            note = "12-represents the model's graph"
        else:
            labels, w = triangle_to_representant(m)
            note = "12-represents the complement of the model's graph"
    except ModelError as exc:
        raise UsageError(str(exc)) from None
    print("labeling: " + format_labeling(labels))
    print("word: " + format_word(w))
    print(f"# {note}")
    return OK


def cmd_build_model(args) -> int:
    g = _load(args.graph, parse_graph).graph
    try:
        labels = parse_ordering(args.ordering, g.n)
    except FormatError as exc:
        raise UsageError(str(exc)) from None
    try:
        if args.bipartite:
            coloring = bipartition(g)
            if coloring is None:
                raise UsageError("graph is not bipartite")
            m = ordering_to_icb_model(g, coloring, labels)
        else:
            m = ordering_to_triangle_model(g, labels)
    except ModelError as exc:
        print(f"NO MODEL: {exc}")
        return NO
    text = dump_model(m)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


def _describe_witness(dec: Decision) -> str:
    wit = dec.witness
    if not wit:
        return "none (exhaustive ordering search found no pattern-free ordering)"
    if wit["kind"] == "cycle":
        return f"induced cycle of length {len(wit['vertices'])}: " + " ".join(str(v + 1) for v in wit["vertices"])
    if wit["kind"] == "subgraph":
        return f"induced {wit['name']}: " + " ".join(str(v + 1) for v in wit["vertices"])
    if wit["kind"] == "T3":
        return (f"T3 centred at {wit['centre'] + 1} through "
                + " ".join(str(v + 1) for v in wit["branches"]))
    return repr(wit)


def cmd_recognize(args) -> int:
    if args.grid:
        gg = _load(args.graph, parse_grid)
        dec = grid_12_representable(gg)
        g = gg.graph
    else:
        g = _load(args.graph, parse_graph).graph
        try:
            if args.bipartite:
                dec = is_12_representable_bipartite(g)
            elif args.tree:
                dec = tree_12_representable(g)
            else:
                dec = is_12_representable(g)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not dec.answer:
        print("NO")
        print("witness: " + _describe_witness(dec))
        return NO
    # deciders verify their certificate; check once more before printing it
    if represents_witness(dec.word, LabeledGraph(g, dec.labels)) is not None:
        raise AssertionError("certificate failed verification")
    print("YES")
    print("labeling: " + format_labeling(dec.labels))
    print("word: " + format_word(dec.word))
    if args.emit_model:
        Path(args.emit_model).write_text(dump_model(dec.model))
    return OK


def cmd_oracle(args) -> int:
    report = cross_validate(args.suite)
    print(report.table())
    return OK if report.ok else NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twelverep", description="12-representable graphs toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check that a word 12-represents a labeled graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--word", required=True)
    s.add_argument("--u", default="12")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("match", help="find the first u-match in a word")
    s.add_argument("--word", required=True)
    s.add_argument("--u", default="12")
    s.set_defaults(func=cmd_match)

    s = sub.add_parser("label-search", help="search a pattern-free labeling")
    s.add_argument("--graph", required=True)
    s.add_argument("--family", choices=["i3j4q4", "j4q4"], required=True)
    s.add_argument("--x-first", action="store_true")
    s.set_defaults(func=cmd_label_search)

    s = sub.add_parser("model-check", help="validate a model against a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--model", required=True)
    s.set_defaults(func=cmd_model_check)

    s = sub.add_parser("convert", help="turn a model into a labeling and word")
    s.add_argument("--model", required=True)
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("build-model", help="build a model from a vertex ordering")
    s.add_argument("--graph", required=True)
    s.add_argument("--ordering", required=True, help='vertices in order, e.g. "2 1 3"')
    s.add_argument("--bipartite", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_build_model)

    s = sub.add_parser("recognize", help="decide 12-representability")
    s.add_argument("--graph", required=True)
    kind = s.add_mutually_exclusive_group()
    kind.add_argument("--bipartite", action="store_true")
    kind.add_argument("--grid", action="store_true", help="FILE holds grid points")
    kind.add_argument("--tree", action="store_true")
    s.add_argument("--emit-model", metavar="PATH")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("oracle", help="run a brute-force cross-validation suite")
    s.add_argument("--suite", choices=sorted(SUITES), required=True)
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, WordError, PatternError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 a mathematical claim failed, 2 bad input,
3 a size or budget limit was hit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import bei
from .cover import LFCover, find_lf_cover, is_konig, verify_lf_cover
from .cutsets import cut_sets
from .errors import InputError, KonigError
from .forests import LinearForest
from .graphs import Graph, connected_components, from_graph6, parse_graph
from .groebner import Ideal, colon, intersect
from .poly import format_ideal_file, parse_ideal_file
from .sweep import CHECKS, SWEEP_CLASSES, SweepConfig, run_sweep
from .trees import tree_lf_cover

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SIZE = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str) -> Graph:
    """Edge-list file (``n <count>`` / ``e i j``) or a single graph6 line."""
    text = _read(path)
    lines = [l.split("#", 1)[0].strip() for l in text.splitlines()]
    lines = [l for l in lines if l]
    if lines and not lines[0].startswith("n ") and len(lines) == 1:
        return from_graph6(lines[0])
    return parse_graph(text)


def _edges_str(edges) -> str:
    return " ".join(f"{i}-{j}" for i, j in sorted(edges)) or "(none)"


def _set_str(s) -> str:
    return "{" + ", ".join(map(str, sorted(s))) + "}"


def _print_cover(cover: LFCover):
    print(f"F: {_edges_str(cover.forest.edges)}  ({len(cover.forest.edges)} edges)")
    print(f"S: {_set_str(cover.s)}")


def cmd_info(args) -> int:
    g = load_graph(args.graph)
    report = cut_sets(g)
    verdict = is_konig(g)
    print(f"n {g.n}")
    print(f"edges {g.num_edges()}")
    print(f"components {len(connected_components(g))}")
    print(f"cut sets {len(report.sets)}")
    print(f"grade {verdict.grade}, LF {verdict.lf}, König: {'yes' if verdict.konig else 'no'}")
    if verdict.cover is None:
        print("cover: NONE")
    else:
        _print_cover(verdict.cover)
    return EXIT_OK


def _parse_edge_list(text: str) -> list[tuple[int, int]]:
    edges = []
    for tok in text.replace(",", " ").split():
        parts = tok.split("-")
        if len(parts) != 2:
            raise InputError(f"bad edge {tok!r}; write edges as i-j")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"bad edge {tok!r}") from None
    return edges


def _parse_vertices(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad vertex list {text!r}") from None


def cmd_cover(args) -> int:
    g = load_graph(args.graph)
    if args.action == "find":
        cover = find_lf_cover(g)
        if cover is None:
            print("no LF-cover")
        else:
            _print_cover(cover)
        return EXIT_OK
    if args.forest is None:
        raise InputError("cover verify needs --forest")
    forest = LinearForest(g, frozenset(_parse_edge_list(args.forest)))
    s = _parse_vertices(args.s or "")
    check = verify_lf_cover(g, forest, s)
    if check.ok:
        print("valid LF-cover")
        return EXIT_OK
    print(f"not an LF-cover: criterion {check.criterion}: {check.message}")
    return EXIT_FAIL


def cmd_tree(args) -> int:
    g = load_graph(args.graph)
    trace = tree_lf_cover(g)
    if args.trace:
        print(trace.log())
    cover = trace.result
    _print_cover(cover)
    check = verify_lf_cover(g, cover.forest, cover.s)
    gr = cut_sets(g).grade
    ok = check.ok and len(cover.forest.edges) == gr
    print(f"grade {gr}; verified: {'yes' if ok else 'no'}")
    if not ok:
        print(check.message or f"|E(F)| = {len(cover.forest.edges)} differs from grade {gr}")
        return EXIT_FAIL
    return EXIT_OK


def cmd_sweep(args) -> int:
    if (args.graph_class is None) == (args.graph6 is None):
        raise InputError("give exactly one of --class or --graph6")
    lines = tuple(_read(args.graph6).splitlines()) if args.graph6 else None
    cfg = SweepConfig(
        graph_class=args.graph_class,
        max_n=args.max_n,
        graph6_lines=lines,
        check=args.check,
        jobs=args.jobs,
    )
    result = run_sweep(cfg)
    if args.out:
        out = Path(args.out)
        out.write_text(result.to_csv())
        out.with_suffix(".json").write_text(result.to_json())
    print(result.summary())
    if result.counterexamples:
        return EXIT_FAIL
    if result.errors:
        return EXIT_SIZE
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = []
    for p in args.char:
        reports += bei.suite_reports(args.suite, args.n, p)
    for r in reports:
        print(r.line())
    if args.json:
        Path(args.json).write_text(bei.reports_to_json(reports))
    passed = all(r.passed for r in reports)
    print(f"suite {args.suite}: {'pass' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_FAIL


def _load_ideal(path: str, order: str) -> Ideal:
    data = parse_ideal_file(_read(path), order)
    return Ideal(data.ring, data.gens)


def cmd_ideal(args) -> int:
    a = _load_ideal(args.file, args.order)
    if args.action == "gb":
        sys.stdout.write(format_ideal_file(a.ring, a.gb()))
        return EXIT_OK
    if args.action == "member":
        if args.poly is None:
            raise InputError("member needs --poly")
        inside = a.contains(a.ring.parse(args.poly))
        print("member" if inside else "not a member")
        return EXIT_OK if inside else EXIT_FAIL
    if args.action == "colon":
        if args.poly is not None:
            result = colon(a, a.ring.parse(args.poly))
        elif args.other is not None:
            result = colon(a, _load_ideal(args.other, args.order))
        else:
            raise InputError("colon needs --poly or a second ideal file")
        sys.stdout.write(format_ideal_file(result.ring, result.gb()))
        return EXIT_OK
    if args.other is None:
        raise InputError(f"{args.action} needs a second ideal file")
    b = _load_ideal(args.other, args.order)
    if (a.ring.n, a.ring.p) != (b.ring.n, b.ring.p):
        raise InputError("the two ideal files use different n or characteristic")
    if args.action == "equal":
        same = a == b
        print("equal" if same else "not equal")
        return EXIT_OK if same else EXIT_FAIL
    result = intersect(a, b)
    sys.stdout.write(format_ideal_file(result.ring, result.gb()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="konig", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="grade, LF number, König verdict and a witness cover")
    p.add_argument("graph")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("cover", help="find or verify an LF-cover")
    p.add_argument("action", choices=["find", "verify"])
    p.add_argument("graph")
    p.add_argument("--forest", help="forest edges, e.g. '1-2,2-3'")
    p.add_argument("--s", help="covering set, e.g. '2,4'")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("tree", help="LF-cover of a tree by stripping extremal branch points")
    p.add_argument("graph")
    p.add_argument("--trace", action="store_true", help="print one line per loop iteration")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("sweep", help="check every member of a class or a graph6 stream")
    p.add_argument("--class", dest="graph_class", choices=SWEEP_CLASSES)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--graph6", help="file with one graph6 string per line")
    p.add_argument("--check", choices=CHECKS, default="lf_coverable")
    p.add_argument("--out", help="CSV path; a JSON copy is written next to it")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="ideal-theoretic verification suites")
    p.add_argument("--suite", required=True, choices=bei.SUITES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--char", type=int, nargs="+", default=[2, 3])
    p.add_argument("--json", help="write the reports as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ideal", help="Gröbner bases and ideal operations on ideal files")
    p.add_argument("action", choices=["gb", "member", "colon", "equal", "intersect"])
    p.add_argument("file")
    p.add_argument("other", nargs="?")
    p.add_argument("--poly")
    p.add_argument("--order", choices=["degrevlex", "lex"], default="degrevlex")
    p.set_defaults(func=cmd_ideal)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except KonigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except RecursionError:
        print("error: recursion limit hit", file=sys.stderr)
        return EXIT_SIZE


if __name__ == "__main__":
    sys.exit(main())

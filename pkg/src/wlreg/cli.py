"""Command line front end.

    wlreg gen NAME [--out FILE]
    wlreg count --pattern SPEC --host (FILE|NAME) [--roots i,j] [--kind sub|inj|hom]
    wlreg wl --k K (FILE|NAME)...
    wlreg tw --pattern SPEC
    wlreg htw --pattern SPEC [--no-merged-roots]
    wlreg verify SUITE|all [--json] [--parallel]

Exit status: 0 on success, 1 if a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import os
import sys
from collections import Counter

from .counting import RootedHost, hom_count, inj_hom_count, rooted_counts, sub_count
from .graph import Graph, parse_generator, read_graph6_file, write_graph6
from .patterns import parse_pattern
from .suites import SUITES, run_suite
from .width import htw, rooted_treewidth
from .wl import wl2_stable, wlk_stable


class UsageError(Exception):
    pass


def _load(source: str) -> list[tuple[str, Graph]]:
    if os.path.exists(source):
        graphs = read_graph6_file(source)
        if not graphs:
            raise UsageError(f"{source}: no graphs in file")
        if len(graphs) == 1:
            return [(source, graphs[0])]
        return [(f"{source}:{i + 1}", g) for i, g in enumerate(graphs)]
    try:
        return [(source, parse_generator(source))]
    except ValueError as exc:
        raise UsageError(f"{source!r} is neither a file nor a generator: {exc}") from None


def _cmd_gen(args) -> int:
    try:
        g = parse_generator(args.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    code = write_graph6(g)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(code + "\n")
    else:
        print(code)
    return 0


def _cmd_count(args) -> int:
    spec = parse_pattern(args.pattern)
    pattern = spec.to_pattern()
    hosts = _load(args.host)
    if len(hosts) != 1:
        raise UsageError(f"{args.host}: expected exactly one host graph, found {len(hosts)}")
    g = hosts[0][1]
    fn = {"sub": sub_count, "inj": inj_hom_count, "hom": hom_count}[args.kind]
    if args.roots is None and pattern.arity:
        # no host roots: distribution of the count over all root tuples
        counts = rooted_counts(pattern, g, itertools.permutations(range(g.n), pattern.arity), args.kind)
        for value, mult in sorted(Counter(counts.values()).items()):
            print(f"{value}\t{mult}")
        return 0
    roots: tuple[int, ...] = ()
    if args.roots:
        try:
            roots = tuple(int(r) for r in args.roots.split(","))
        except ValueError:
            raise UsageError(f"bad --roots {args.roots!r}; expected comma separated vertex ids") from None
    if len(roots) != pattern.arity:
        raise UsageError(f"pattern {spec} has {pattern.arity} roots but --roots gives {len(roots)}")
    try:
        host = RootedHost(g, roots)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(fn(pattern, host))
    return 0


def _cmd_wl(args) -> int:
    named = [item for src in args.graphs for item in _load(src)]
    graphs = [g for _, g in named]
    try:
        c = wl2_stable(graphs) if args.k == 2 else wlk_stable(graphs, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"WL-{args.k}: {c.rounds} refinement rounds, {c.num_colors} colors in the session palette")
    for i, (name, g) in enumerate(named):
        sizes = c.class_sizes(i)
        print(f"{name}: n={g.n} classes={len(sizes)} sizes={sorted(sizes.values(), reverse=True)}")
    if len(named) > 1:
        ref = c.multiset(0)
        same = all(c.multiset(i) == ref for i in range(1, len(named)))
        print(f"all WL-{args.k}-equivalent: {'yes' if same else 'no'}")
    return 0


def _cmd_tw(args) -> int:
    r = rooted_treewidth(parse_pattern(args.pattern).to_pattern())
    print(r.value)
    if args.witness:
        print("elimination order:", " ".join(map(str, r.witness)))
    return 0


def _cmd_htw(args) -> int:
    r = htw(parse_pattern(args.pattern).to_pattern(), merged_roots=not args.no_merged_roots)
    print(r.value)
    if args.witness:
        print("blocks:", r.partition.blocks if r.partition else None)
        print("elimination order:", " ".join(map(str, r.witness)))
    return 0


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITES)}")
    ok = True
    for name in names:
        report = run_suite(name, parallel=args.parallel)
        ok &= report.passed
        print(report.to_json() if args.json else report.format())
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wlreg", description="WL refinement, pattern counts and widths")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a named graph as graph6")
    p.add_argument("name", help="e.g. shrikhande, rook(4), cycle(7), cayley(4,4,[(1,0),(0,1)])")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("count", help="count a pattern in a host graph")
    p.add_argument("--pattern", required=True, help="e.g. P6, P6[1,6], C8[1,2], K4")
    p.add_argument("--host", required=True, help="graph6 file or generator name")
    p.add_argument("--roots", help="host root vertex ids (0-based), comma separated")
    p.add_argument("--kind", choices=("sub", "inj", "hom"), default="sub")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("wl", help="stable k-WL coloring of one or more graphs")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("graphs", nargs="+", help="graph6 files or generator names")
    p.set_defaults(func=_cmd_wl)

    for name, fn, text in (("tw", _cmd_tw, "treewidth of a (rooted) pattern"),
                           ("htw", _cmd_htw, "homomorphism-hereditary treewidth of a pattern")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--pattern", required=True)
        p.add_argument("--witness", action="store_true", help="also print the witness")
        if name == "htw":
            p.add_argument("--no-merged-roots", action="store_true",
                           help="ignore images that identify two roots")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of: all, {', '.join(SUITES)}")
    p.add_argument("--json", action="store_true", help="emit each report as one JSON object per line")
    p.add_argument("--parallel", action="store_true", help="evaluate checks on a thread pool")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"wlreg: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"wlreg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

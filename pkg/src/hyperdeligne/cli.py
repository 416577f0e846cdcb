"""Command-line interface: ``hyperdeligne <verb> [--gen NAME | --file PATH] ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from .arrangement import Arrangement, format_arrangement, generator, negate_id, parse_arrangement
from .deligne import deligne_nf, extend_atom, nf_validate, word_problem
from .errors import ArrangementError, CapExceeded
from .paths import (
    DEFAULT_CAP,
    PositivePath,
    begin_walls,
    canonical_atom,
    complete_to_opposite,
    end_walls,
    is_atom,
    minimal_paths,
    parse_path,
)
from .shadow import degree_report, orient, path_monotone
from .skeleton import ChamberGraph, build_graph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_NOT_EQUAL = 3
EXIT_CAP = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is reserved for `check`
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    source = _Parser(add_help=False)
    src = source.add_mutually_exclusive_group()
    src.add_argument("--gen", metavar="NAME", help="built-in arrangement generator")
    src.add_argument("--file", metavar="PATH", help="arrangement file")
    source.add_argument("--format", choices=("text", "json", "dot"), default="text")
    source.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="maximum equivalence class size (default %(default)s)")

    parser = _Parser(prog="hyperdeligne", description="Chambers, atoms and Deligne normal forms "
                     "of real simplicial hyperplane arrangements.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="print a generated arrangement file")
    p.add_argument("name")
    sub.add_parser("chambers", parents=[source], help="chamber count, ids and witnesses")
    sub.add_parser("graph", parents=[source], help="the 1-skeleton")
    p = sub.add_parser("atoms", parents=[source], help="minimal paths between two chambers")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p = sub.add_parser("nf", parents=[source], help="Deligne normal form of a path")
    p.add_argument("--path", required=True)
    p = sub.add_parser("equal", parents=[source], help="decide equivalence of two paths")
    p.add_argument("--path1", required=True)
    p.add_argument("--path2", required=True)
    p = sub.add_parser("order", parents=[source], help="skeleton oriented from a base chamber")
    p.add_argument("--base", required=True)
    p = sub.add_parser("degrees", parents=[source], help="top nonvanishing degree of a path")
    p.add_argument("--path", required=True)
    p.add_argument("--d", type=int, default=2)
    sub.add_parser("check", parents=[source], help="run the invariant suites")
    return parser


def load(args) -> Arrangement:
    if (args.gen is None) == (args.file is None):
        raise UsageError("exactly one of --gen or --file is required")
    if args.gen is not None:
        return generator(args.gen)
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    return parse_arrangement(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- verbs --------------------------------------------------------------------

def cmd_chambers(args, arr: Arrangement, out) -> int:
    chambers = arr.chambers
    if args.format == "json":
        out.write(_dump({"count": len(chambers), "chambers": [
            {"id": c.id, "witness": [str(x) for x in c.witness]} for c in chambers]}))
        return EXIT_OK
    out.write(f"{len(chambers)}\n")
    for c in chambers:
        out.write(f"{c.id} ({', '.join(map(str, c.witness))})\n")
    return EXIT_OK


def cmd_graph(args, arr: Arrangement, out) -> int:
    g = build_graph(arr)
    if args.format == "json":
        out.write(_dump(g.to_json()))
    elif args.format == "dot":
        out.write(g.to_dot())
    else:
        out.write(f"{len(g.chambers)} chambers, {g.arrow_count} arrows\n")
        for c in g.chambers:
            out.write(f"{c.id}: {' '.join(f'{a.hyperplane}>{a.target}' for a in g.arrows[c.id])}\n")
    return EXIT_OK


def cmd_atoms(args, arr: Arrangement, out) -> int:
    g = build_graph(arr)
    paths = minimal_paths(g, args.src, args.dst)
    if args.format == "json":
        out.write(_dump([list(p.crossings) for p in paths]))
    else:
        for p in paths:
            out.write(p.literal + "\n")
    return EXIT_OK


def cmd_nf(args, arr: Arrangement, out) -> int:
    g = build_graph(arr)
    nf = deligne_nf(g, parse_path(args.path), args.cap)
    if args.format == "json":
        out.write(_dump(nf.to_json(g)))
    else:
        out.write(f"k={nf.k} lengths={nf.lengths}\n{nf.to_text(g)}\n")
    return EXIT_OK


def cmd_equal(args, arr: Arrangement, out) -> int:
    g = build_graph(arr)
    same = word_problem(g, parse_path(args.path1), parse_path(args.path2), args.cap)
    if args.format == "json":
        out.write(_dump({"equivalent": same}))
    else:
        out.write("equivalent\n" if same else "not equivalent\n")
    return EXIT_OK if same else EXIT_NOT_EQUAL


def cmd_order(args, arr: Arrangement, out) -> int:
    g = build_graph(arr)
    order = orient(g, arr, args.base)
    if args.format == "dot":
        out.write(order.to_dot())
        return EXIT_OK
    edges = []
    for (c, d, h), big in sorted(order.orientation.items()):
        edges.append((big, d if big == c else c, h))
    if args.format == "json":
        out.write(_dump({"base": order.base, "edges": [
            {"greater": b, "smaller": s, "hyperplane": h} for b, s, h in edges]}))
    else:
        for b, s, h in edges:
            out.write(f"{b} > {s} [{h}]\n")
    return EXIT_OK


def cmd_degrees(args, arr: Arrangement, out) -> int:
    g = build_graph(arr)
    rep = degree_report(g, deligne_nf(g, parse_path(args.path), args.cap), args.d, args.cap)
    if args.format == "json":
        out.write(_dump(rep.to_json()))
    else:
        out.write(f"k={rep.k} d={rep.d} max_degree={rep.max_degree} "
                  f"achieving_walls={sorted(rep.achieving_walls)} at {rep.chamber}\n")
    return EXIT_OK


# -- invariant suites ---------------------------------------------------------

def _suite_chambers(arr: Arrangement, g: ChamberGraph, cap: int):
    n = arr.dim
    for c in g.chambers:
        yield len(c.walls) == n and negate_id(c.id) in g.index and arr.sign_id(c.witness) == c.id


def _suite_skeleton(arr: Arrangement, g: ChamberGraph, cap: int):
    for c in g.chambers:
        arrows = g.arrows[c.id]
        yield len(arrows) == arr.dim and all(a.inverse() in g.arrows[a.target] for a in arrows)


def _suite_atoms(arr: Arrangement, g: ChamberGraph, cap: int):
    for c in g.ids:
        for d in g.ids:
            paths = minimal_paths(g, c, d)
            yield (bool(paths) and all(len(p) == g.distance(c, d) and is_atom(g, p) for p in paths)
                   and canonical_atom(g, c, d) == paths[0])


def _suite_opposite(arr: Arrangement, g: ChamberGraph, cap: int):
    for c in g.ids:
        for d in g.ids:
            a = canonical_atom(g, c, d)
            p = complete_to_opposite(g, a)
            yield p.start == negate_id(d) and is_atom(g, p.then(a))


def _suite_extension(arr: Arrangement, g: ChamberGraph, cap: int):
    for c in g.ids:
        for d in g.ids:
            a = canonical_atom(g, c, d)
            if not a.crossings:
                continue
            for h in sorted(g.walls(d)):
                direct = is_atom(g, PositivePath(c, a.crossings + (h,)))
                yield (extend_atom(g, a, h, "append") is not None) == direct == (h not in end_walls(g, a, cap).walls)
            for h in sorted(g.walls(c)):
                direct = is_atom(g, PositivePath(g.step(c, h), (h,) + a.crossings))
                yield (extend_atom(g, a, h, "prepend") is not None) == direct == (h not in begin_walls(g, a, cap).walls)


def _suite_order(arr: Arrangement, g: ChamberGraph, cap: int):
    for base in g.ids:
        order = orient(g, arr, base)
        for d in g.ids:
            a = canonical_atom(g, base, d)
            yield path_monotone(order, a)
        for h in sorted(g.walls(base)):
            yield not path_monotone(order, PositivePath(base, (h, h)))


def _suite_normal_form(arr: Arrangement, g: ChamberGraph, cap: int):
    # a full atom to the opposite chamber, then one more crossing of each wall
    for c in g.ids:
        a = canonical_atom(g, c, negate_id(c))
        for h in sorted(g.walls(negate_id(c))):
            p = PositivePath(c, a.crossings + (h,))
            nf = deligne_nf(g, p, cap)
            rep = degree_report(g, nf, 2, cap)
            yield nf_validate(g, nf) and nf.k == 2 and rep.max_degree == 4 and word_problem(g, nf.path(), p, cap)


SUITES: list[tuple[str, Callable]] = [
    ("chambers", _suite_chambers),
    ("skeleton", _suite_skeleton),
    ("atoms", _suite_atoms),
    ("opposite-completion", _suite_opposite),
    ("extension", _suite_extension),
    ("order", _suite_order),
    ("normal-form", _suite_normal_form),
]


def cmd_check(args, arr: Arrangement, out) -> int:
    results = []
    ok = arr.essential and arr.simplicial
    results.append(("simplicial", int(ok), 1))
    if ok:
        g = build_graph(arr)
        for name, suite in SUITES:
            try:
                outcomes = list(suite(arr, g, args.cap))
            except CapExceeded:
                raise
            except ArrangementError:
                outcomes = [False]
            results.append((name, sum(outcomes), len(outcomes)))
    if args.format == "json":
        out.write(_dump([{"suite": n, "passed": p, "total": t} for n, p, t in results]))
    else:
        for n, p, t in results:
            out.write(f"{n}: {p}/{t} {'ok' if p == t else 'FAIL'}\n")
    return EXIT_OK if all(p == t for _, p, t in results) else EXIT_VIOLATION


VERBS = {
    "chambers": cmd_chambers,
    "graph": cmd_graph,
    "atoms": cmd_atoms,
    "nf": cmd_nf,
    "equal": cmd_equal,
    "order": cmd_order,
    "degrees": cmd_degrees,
    "check": cmd_check,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.verb == "gen":
            out.write(format_arrangement(generator(args.name)))
            return EXIT_OK
        if args.cap < 1:
            raise UsageError("--cap must be positive")
        arr = load(args)
        return VERBS[args.verb](args, arr, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except CapExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except ArrangementError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

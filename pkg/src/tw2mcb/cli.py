"""Command-line front end.

    tw2mcb mcb GRAPH [--explicit | --stats] [--format text|json]
    tw2mcb gen --n N [--delete-prob P] [--wmin A] [--wmax B] [--seed S]
    tw2mcb verify GRAPH [--max-n K]
    tw2mcb bench [--sizes 10000,100000,1000000]

Exit codes: 0 success, 1 input error, 2 not a partial 2-tree,
3 internal invariant violation (or a failed verification).
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .assembly import (
    explicit_document,
    format_explicit,
    format_implicit,
    format_stats,
    implicit_document,
    minimum_cycle_basis,
    report_explicit,
    stats_document,
    to_json,
)
from .errors import InvalidParam, MCBError, NotPartial2Tree, ParseError
from .graph import dump_graph, gen_random_partial_2tree, load_graph

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_TW2 = 2
EXIT_INTERNAL = 3


def _read_graph(path: str):
    if path == "-":
        return load_graph(sys.stdin.buffer)
    with open(path, "rb") as fh:
        return load_graph(fh)


def cmd_mcb(args, out) -> int:
    g = _read_graph(args.input)
    mcb = minimum_cycle_basis(g)
    if args.stats:
        stats = mcb.stats()
        out.write(to_json(stats_document(stats)) if args.format == "json" else format_stats(stats))
    elif args.explicit:
        cycles = report_explicit(mcb)
        out.write(to_json(explicit_document(cycles)) if args.format == "json" else format_explicit(cycles))
    else:
        out.write(to_json(implicit_document(mcb)) if args.format == "json" else format_implicit(mcb))
    return EXIT_OK


def cmd_gen(args, out) -> int:
    g = gen_random_partial_2tree(args.n, args.delete_prob, (args.wmin, args.wmax), args.seed)
    out.write(
        dump_graph(
            g,
            f"n={args.n} delete_prob={args.delete_prob} w=[{args.wmin},{args.wmax}] seed={args.seed}",
        )
    )
    return EXIT_OK


def _inject(g, cycles, kind: str):
    """Corrupt a correct basis on purpose (test hook)."""
    cycles = [frozenset(c.edges) for c in cycles]
    if not cycles:
        return cycles
    if kind == "duplicate":
        return cycles[:-1] + [cycles[0]] if len(cycles) > 1 else cycles + [cycles[0]]
    if kind == "drop":
        return cycles[:-1]
    if kind == "heavier":
        from .reference import _Gf2Basis, simple_cycles

        def bits(c):
            r = 0
            for e in c:
                r |= 1 << e
            return r

        current = set(cycles)
        for i, c in enumerate(cycles):
            wc = g.weight_of(c)
            for d in simple_cycles(g):
                if d in current or g.weight_of(d) <= wc:
                    continue
                trial = cycles[:i] + [d] + cycles[i + 1 :]
                basis = _Gf2Basis()
                if all(basis.add(bits(x)) for x in trial):
                    return trial
        raise InvalidParam("no heavier independent replacement exists for this graph")
    raise InvalidParam(f"unknown fault {kind!r}")


def cmd_verify(args, out) -> int:
    from .reference import verify_basis

    g = _read_graph(args.input)
    mcb = minimum_cycle_basis(g, check=True)
    cycles = report_explicit(mcb)
    if args.inject:
        cycles = _inject(g, cycles, args.inject)
    report = verify_basis(g, cycles, max_n=args.max_n)
    for line in report.lines():
        out.write(line + "\n")
    return EXIT_OK if report.ok else EXIT_INTERNAL


def cmd_bench(args, out) -> int:
    from .bench import format_table, run_bench, scaling_ratios

    def progress(row):
        print(f"# n={row.n} done in {row.seconds:.2f}s", file=sys.stderr, flush=True)

    rows = run_bench(args.sizes, seed=args.seed, repeats=args.repeats, progress=progress)
    out.write(format_table(rows))
    ratios = scaling_ratios(rows)
    if ratios:
        out.write("ratios " + " ".join(f"{r:.2f}" for r in ratios) + "\n")
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(float(x)) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}")
    if not sizes or any(s < 3 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be integers >= 3")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tw2mcb", description="Minimum cycle bases of weighted partial 2-trees."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mcb", help="compute a minimum cycle basis")
    p.add_argument("input", help="graph file, or - for stdin")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--explicit", action="store_true", help="print every cycle as a vertex list")
    mode.add_argument("--stats", action="store_true", help="print summary counts only")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_mcb)

    p = sub.add_parser("gen", help="generate a random partial 2-tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delete-prob", type=float, default=0.0)
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="compute and check a basis against the reference")
    p.add_argument("input", help="graph file, or - for stdin")
    p.add_argument("--max-n", type=int, default=14, help="largest n for the exact weight check")
    p.add_argument("--inject", choices=("duplicate", "heavier", "drop"), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the pipeline on generated graphs")
    p.add_argument("--sizes", type=_sizes, default=[10_000, 100_000, 1_000_000])
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except NotPartial2Tree as exc:
        print(f"error: not a partial 2-tree: {exc}", file=sys.stderr)
        return EXIT_NOT_TW2
    except (ParseError, InvalidParam, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MCBError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

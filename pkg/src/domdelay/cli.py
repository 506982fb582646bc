"""Command-line front end.

Subcommands: classify, enum-rn, enum-dir, enum-dom, oracle, gen,
reduce-3sat and bench.  Vertices are printed 1-indexed in ascending order,
one solution per line; internals stay 0-indexed.  Exit codes: 0 success,
1 usage or input error, 2 class-certificate failure, 3 size-limit or
budget exhaustion.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import __version__
from ._kernel import compiled_available
from .errors import (
    BudgetExceededError,
    DomDelayError,
    GraphFormatError,
    NotInClassError,
    SizeLimitError,
)
from .graph import Graph, parse_graph, serialize_dimacs, serialize_plain
from .domenum import enumerate_dom
from .generators import exhaustive_corpus, gen_chordal, gen_pk_free_chordal, split_stream
from .irext import enumerate_dir
from .oracle import brute_dir, brute_dom, brute_drn, brute_drn_member, brute_iep
from .redundancy import classify
from .rnenum import component_instance, enumerate_rn
from .satreduction import build_reduction, parse_dimacs_cnf


def _read_graph(path: str) -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def _fmt(vertices) -> str:
    return " ".join(str(v + 1) for v in sorted(vertices))


def _parse_set(text: str) -> frozenset[int]:
    text = text.strip()
    if not text or text == "none":
        return frozenset()
    parts = text.replace(",", " ").split()
    return frozenset(int(p) - 1 for p in parts)


def _emit_stream(stream, limit, count_only, out):
    count = 0
    for sol in stream:
        count += 1
        if not count_only:
            print(_fmt(sol), file=out)
        if limit is not None and count >= limit:
            break
    if count_only:
        print(count, file=out)
    return count


def _add_stream_flags(p):
    p.add_argument("--limit", type=int, default=None, help="stop after N solutions")
    p.add_argument("--count-only", action="store_true", help="print only the count")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="domdelay",
        description="bounded-delay enumeration of minimal dominating sets "
        "in P7- and P8-free chordal graphs",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print the IR/RN bipartition")
    p.add_argument("graph")

    for name in ("enum-rn", "enum-dom"):
        p = sub.add_parser(
            name,
            help="enumerate redundant parts" if name == "enum-rn" else "enumerate minimal dominating sets",
        )
        p.add_argument("graph")
        p.add_argument("--mode", choices=("p7", "p8"), default="p7")
        p.add_argument("--verify-class", action="store_true",
                       help="run the exact class recognizers first")
        p.add_argument("--pk-budget", type=int, default=None,
                       help="node budget for the induced-path search of --verify-class")
        p.add_argument("--kernel", choices=("auto", "compiled", "python"), default="auto")
        _add_stream_flags(p)

    p = sub.add_parser("enum-dir", help="enumerate irredundant extensions of a given set")
    p.add_argument("graph")
    p.add_argument("--set", required=True, help="1-indexed vertices, e.g. '2,5' ('none' for empty)")
    p.add_argument("--mode", choices=("p7", "p8"), default="p7")
    _add_stream_flags(p)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    p.add_argument("kind", choices=("dom", "drn", "dir", "iep", "drn-member"))
    p.add_argument("graph")
    p.add_argument("--set", default=None, help="1-indexed vertex set ('auto-rn' for all redundant)")
    p.add_argument("--component", type=int, default=None, help="1-based component index (iep)")
    p.add_argument("--limit-n", type=int, default=16, help="vertex cap for subset oracles")
    _add_stream_flags(p)

    p = sub.add_parser("gen", help="write generated corpora")
    p.add_argument("--family", choices=("chordal", "pk-free", "exhaustive"), default="pk-free")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--k", type=int, default=7)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=None,
                   help="default from DOMDELAY_SEED, else 0")
    p.add_argument("--plain", action="store_true", help="plain format instead of DIMACS")
    p.add_argument("-o", "--output", required=True,
                   help="output file (concatenated blocks) or existing directory")

    p = sub.add_parser("reduce-3sat", help="build the extension-hardness gadget graph")
    p.add_argument("cnf")
    p.add_argument("-o", "--output", required=True, help="graph output file")
    p.add_argument("--map", dest="role_map", default=None, help="role map output (JSON lines)")

    p = sub.add_parser("bench", help="per-solution delay profile as CSV")
    p.add_argument("graph")
    p.add_argument("--mode", choices=("p7", "p8"), default="p7")
    p.add_argument("--verify-class", action="store_true")
    p.add_argument("--kernel", choices=("auto", "compiled", "python"), default="auto")
    p.add_argument("--limit", type=int, default=10000)
    return ap


def cmd_classify(args, out) -> int:
    g = _read_graph(args.graph)
    cls = classify(g)
    print(f"IR: {_fmt(cls.ir)}", file=out)
    print(f"RN: {_fmt(cls.rn)}", file=out)
    for i, comp in enumerate(cls.components, start=1):
        print(f"component {i}: {_fmt(comp)}", file=out)
    for y in sorted(cls.rn):
        print(f"witness {y + 1}: {cls.witness[y] + 1}", file=out)
    return 0


def cmd_enum_rn(args, out) -> int:
    g = _read_graph(args.graph)
    if args.verify_class:
        from .domenum import verify_class_certificate

        verify_class_certificate(g, args.mode, args.pk_budget)
    stream = enumerate_rn(g, mode=args.mode, kernel=args.kernel)
    _emit_stream(stream, args.limit, args.count_only, out)
    return 0


def cmd_enum_dom(args, out) -> int:
    g = _read_graph(args.graph)
    stream = enumerate_dom(
        g,
        args.mode,
        verify_class=args.verify_class,
        pk_budget=args.pk_budget,
        kernel=args.kernel,
    )
    _emit_stream(stream, args.limit, args.count_only, out)
    return 0


def cmd_enum_dir(args, out) -> int:
    g = _read_graph(args.graph)
    cls = classify(g)
    a_set = _parse_set(args.set)
    stream = enumerate_dir(g, cls, a_set, args.mode)
    _emit_stream(stream, args.limit, args.count_only, out)
    return 0


def cmd_oracle(args, out) -> int:
    g = _read_graph(args.graph)
    cls = classify(g)
    if args.set == "auto-rn":
        a_set = cls.rn
    elif args.set is not None:
        a_set = _parse_set(args.set)
    else:
        a_set = None
    if args.kind == "dom":
        _emit_stream(iter(brute_dom(g, args.limit_n)), args.limit, args.count_only, out)
    elif args.kind == "drn":
        _emit_stream(iter(brute_drn(g, cls, args.limit_n)), args.limit, args.count_only, out)
    elif args.kind == "dir":
        if a_set is None:
            raise GraphFormatError("--set is required for the dir oracle")
        _emit_stream(iter(brute_dir(g, cls, a_set, args.limit_n)), args.limit, args.count_only, out)
    elif args.kind == "iep":
        if a_set is None or args.component is None:
            raise GraphFormatError("--set and --component are required for the iep oracle")
        inst = component_instance(g, cls, a_set, args.component)
        print("YES" if brute_iep(inst) else "NO", file=out)
    else:  # drn-member
        if a_set is None:
            raise GraphFormatError("--set is required for drn-member")
        print("YES" if brute_drn_member(g, cls, a_set) else "NO", file=out)
    return 0


def cmd_gen(args, out) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("DOMDELAY_SEED", "0"))
    graphs = []
    if args.family == "exhaustive":
        graphs = list(exhaustive_corpus(args.n))
    else:
        for i in range(args.count):
            rng = split_stream(seed, i)
            sub_seed = rng.next_u64()
            if args.family == "chordal":
                graphs.append(gen_chordal(args.n, args.density, sub_seed))
            else:
                graphs.append(gen_pk_free_chordal(args.n, args.k, sub_seed))
    serialize = serialize_plain if args.plain else serialize_dimacs
    if os.path.isdir(args.output):
        for i, g in enumerate(graphs):
            ext = "plain" if args.plain else "graph"
            path = os.path.join(args.output, f"g{i:04d}.{ext}")
            with open(path, "w") as fh:
                fh.write(serialize(g))
    else:
        with open(args.output, "w") as fh:
            for g in graphs:
                fh.write(serialize(g))
    print(f"wrote {len(graphs)} graph(s)", file=sys.stderr)
    return 0


def cmd_reduce_3sat(args, out) -> int:
    with open(args.cnf, "rb") as fh:
        phi = parse_dimacs_cnf(fh.read())
    g, a_set, gmap = build_reduction(phi)
    with open(args.output, "w") as fh:
        fh.write(serialize_dimacs(g))
    if args.role_map:
        with open(args.role_map, "w") as fh:
            fh.write(gmap.to_jsonl())
    print(f"graph: {g.n} vertices, {g.m} edges; |A| = {len(a_set)}", file=sys.stderr)
    print(f"A: {_fmt(a_set)}", file=out)
    return 0


def cmd_bench(args, out) -> int:
    import gc

    g = _read_graph(args.graph)
    t0 = time.perf_counter_ns()
    stream = enumerate_dom(
        g, args.mode, verify_class=args.verify_class, kernel=args.kernel
    )
    # preprocessing covers everything up to the first available solution
    # (classification, engine state); the first CSV row reports it with
    # delay 0 and later rows carry the gap to their predecessor
    gc.disable()
    try:
        first = next(stream, None)
        prep_done = time.perf_counter_ns()
        print("solution_index,size,delay_ns", file=out)
        count = 0
        delays = []
        if first is not None:
            count = 1
            print(f"1,{len(first)},0", file=out)
            last = prep_done
            if args.limit is None or count < args.limit:
                for sol in stream:
                    now = time.perf_counter_ns()
                    delay = now - last
                    last = now
                    delays.append(delay)
                    count += 1
                    print(f"{count},{len(sol)},{delay}", file=out)
                    if args.limit is not None and count >= args.limit:
                        break
    finally:
        gc.enable()
    prep_ms = (prep_done - t0) / 1e6
    kern = "compiled" if (args.kernel == "compiled" or (args.kernel == "auto" and compiled_available())) else "python"
    print(
        f"kernel={kern} preprocessing_ms={prep_ms:.3f} solutions={count} "
        f"max_delay_ns={max(delays) if delays else 0} "
        f"mean_delay_ns={sum(delays) / len(delays) if delays else 0:.0f}",
        file=sys.stderr,
    )
    return 0


_COMMANDS = {
    "classify": cmd_classify,
    "enum-rn": cmd_enum_rn,
    "enum-dom": cmd_enum_dom,
    "enum-dir": cmd_enum_dir,
    "oracle": cmd_oracle,
    "gen": cmd_gen,
    "reduce-3sat": cmd_reduce_3sat,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except (SizeLimitError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotInClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, OSError, ValueError, DomDelayError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

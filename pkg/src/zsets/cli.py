"""Command-line entry point: ``zsets <command> ...``.

Exit status is 0 on success, 2 for usage errors, 3 when a request violates a
mathematical precondition, and 4 if an internal invariant check fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import constructors as C
from . import formats as F
from .core import PcSet, interval_content, interval_function, parse_set, patterson
from .enumeration import build_table, census
from .errors import DomainError, InvariantError
from .homometry import block_family, classify
from .levi import build_levi, homometric_blocks, z_automorphism_group

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 2, 3, 4


def _int_range(text: str) -> list[int]:
    """``"8:19"`` (inclusive) or ``"8,10,12"`` or ``"16"``."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from None


def _fmt_tuple(xs) -> str:
    return "(" + ",".join(map(str, xs)) + ")"


def _emit(args, doc: dict, schema: str, text: str) -> str:
    if args.format == "json":
        F.validate(doc, schema)
        return F.dumps(doc)
    return text


# ---------------------------------------------------------------------------
# commands


def cmd_ivec(args) -> str:
    a = parse_set(args.set, args.n)
    lines = [f"set: {a}", f"ifunc: {_fmt_tuple(interval_function(a, a))}"]
    if a.modulus >= 2:
        lines.append(f"ic: {_fmt_tuple(interval_content(a).digits)}")
    lines.append(f"patterson: {patterson(a)}")
    return _emit(args, F.ivec_doc(a), "ivec", "\n".join(lines) + "\n")


def cmd_zcheck(args) -> str:
    a, b = parse_set(args.a, args.n), parse_set(args.b, args.n)
    v = classify(a, b)
    text = (
        f"{v.kind.value}\n"
        f"ic(a): {interval_content(a)}\n"
        f"ic(b): {interval_content(b)}\n"
    )
    return _emit(args, F.zcheck_doc(a, b, v), "zcheck", text)


def _base_pair(args) -> C.ZPair:
    a, b = parse_set(args.a, args.n), parse_set(args.b, args.n)
    # a bad pair on the command line is a user error, not a broken invariant
    if not classify(a, b).related:
        raise DomainError(f"{a} and {b} are not Z-related in Z_{args.n}")
    return C.ZPair(args.n, a, b)


def cmd_construct(args) -> str:
    rule = args.rule
    if rule == "complement":
        p = C.complement_pair(_base_pair(args))
    elif rule == "multiply":
        p = C.multiply_pair(_base_pair(args), args.m)
    elif rule == "replicate":
        p = C.replicate(_base_pair(args), args.m)
    elif rule == "multiply-replicate":
        p = C.multiply_replicate(_base_pair(args), args.m)
    elif rule == "rosenblatt":
        p = C.rosenblatt(args.type, args.n, args.a)
    elif rule == "interlaced":
        p = C.interlaced_family(args.k)
    else:
        p = C.empirical_family(args.family, args.n)
    text = f"{p.first} Z_{p.modulus} {p.second}\nic: {interval_content(p.first)}\nkind: {p.kind.value}\n"
    return _emit(args, F.pair_doc(p), "pair", text)


def cmd_enumerate(args) -> str:
    c = census(args.n, args.k, workers=args.workers)
    return _emit(args, F.census_doc(c), "census", F.census_text(c))


def cmd_table(args) -> str:
    sizes = args.k
    table = build_table(args.n, sizes, workers=args.workers, half=args.half)
    if args.format == "csv":
        return table.to_csv()
    if args.format == "json":
        return _emit(args, F.table_doc(table), "table", "")
    return F.table_text(table)


def _blocks_from_args(args) -> tuple[int, list[PcSet]]:
    if args.blocks:
        lines = Path(args.blocks).read_text().split()
        return args.n, [parse_set(w, args.n) for w in lines]
    if args.k is None:
        raise DomainError("autgrp needs --k or --blocks")
    return args.n, homometric_blocks(args.n, args.k, workers=args.workers)


def cmd_autgrp(args) -> str:
    n, blocks = _blocks_from_args(args)
    r = z_automorphism_group(n, blocks)
    return _emit(args, F.autgroup_doc(r), "autgroup", F.autgroup_text(r))


def cmd_export(args) -> str:
    if args.what == "levi":
        n, blocks = _blocks_from_args(args)
        return build_levi(n, block_family(blocks)).to_dot()
    if args.what == "table1":
        rep = F.verify_table1()
        text = (
            f"chords={len(rep.chords)} unique={len(set(rep.chords))} expected={len(rep.expected)} "
            f"match={'yes' if rep.matches else 'no'}\n"
        )
        for s in rep.missing:
            text += f"missing {s}\n"
        for s in rep.extra:
            text += f"extra {s}\n"
        return _emit(args, rep.to_doc(), "table1", text)
    # schema
    return F.dumps(F.schema(args.name))


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zsets", description="Z-related (homometric) subsets of Z_N.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default=choices[0])

    def workers(p):
        p.add_argument("--workers", type=int, default=1, help="worker processes for enumeration")

    p = sub.add_parser("ivec", help="interval function, content and Patterson polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True)
    fmt(p)
    p.set_defaults(func=cmd_ivec)

    p = sub.add_parser("zcheck", help="classify two sets as not-related, trivial or strict")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    fmt(p)
    p.set_defaults(func=cmd_zcheck)

    p = sub.add_parser("construct", help="build a Z-related pair from a rule")
    rules = p.add_subparsers(dest="rule", required=True)
    for name, needs_m in (("complement", False), ("multiply", True), ("replicate", True), ("multiply-replicate", True)):
        r = rules.add_parser(name)
        r.add_argument("--n", type=int, required=True, help="modulus of the base pair")
        r.add_argument("--a", required=True)
        r.add_argument("--b", required=True)
        if needs_m:
            r.add_argument("--m", type=int, required=True)
        fmt(r)
    r = rules.add_parser("rosenblatt")
    r.add_argument("--type", choices=("i", "ii"), required=True)
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--a", type=int)
    fmt(r)
    r = rules.add_parser("interlaced")
    r.add_argument("--k", type=int, required=True)
    fmt(r)
    r = rules.add_parser("empirical")
    r.add_argument("--family", type=int, choices=(1, 2), required=True)
    r.add_argument("--n", type=int, required=True)
    fmt(r)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", help="census of homometric tuples for one (N, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    fmt(p)
    workers(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="census table over ranges of N and k")
    p.add_argument("--n", type=_int_range, required=True, help="e.g. 8:19")
    p.add_argument("--k", type=_int_range, required=True, help="e.g. 4:9")
    p.add_argument("--half", action="store_true", help="leave cells with k > N/2 blank; they mirror N - k")
    fmt(p, ("text", "csv", "json"))
    workers(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("autgrp", help="automorphism group of a homometric block family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--blocks", help="file of whitespace-separated set literals")
    fmt(p)
    workers(p)
    p.set_defaults(func=cmd_autgrp)

    p = sub.add_parser("export", help="DOT Levi graph, 48-chord network check, or a JSON schema")
    what = p.add_subparsers(dest="what", required=True)
    r = what.add_parser("levi")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--k", type=int)
    r.add_argument("--blocks")
    workers(r)
    r = what.add_parser("table1")
    fmt(r)
    r = what.add_parser("schema")
    r.add_argument("name", choices=F.SCHEMAS)
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except InvariantError as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

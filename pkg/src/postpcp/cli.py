"""Command-line front end.

Exit status: 0 found/true/success, 1 absent/false, 2 usage or parse error.
"""

import argparse
import os
import sys

from . import bridge
from .normal_system import ParseError, derive_bounded, read_system
from .pcp import parse_solution, read_instance, solve_bounded, verify_solution
from .reductions import NEW, POST, REDUCERS, format_artifact, size_report
from .words import WordError, format_word, parse_word

ABSENT = "absent within bounds"


def _word(text):
    try:
        return parse_word(text)
    except WordError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _count(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("bound must be >= 0")
    return n


def build_parser():
    p = argparse.ArgumentParser(prog="postpcp", description="Post normal systems and reductions to the PCP.")
    sub = p.add_subparsers(dest="command", required=True)

    def search_flags(q):
        q.add_argument("--max-steps", type=_count, default=32)
        q.add_argument("--max-len", type=_count, default=64)

    def pcp_flags(q):
        q.add_argument("--max-indices", type=_count, default=64)
        q.add_argument("--max-overhang", type=_count, default=128)

    q = sub.add_parser("derive", help="bounded derivation search")
    q.add_argument("--system", required=True)
    q.add_argument("--target", required=True, type=_word)
    search_flags(q)

    q = sub.add_parser("reduce", help="write a reduction artifact")
    q.add_argument("--system", required=True)
    q.add_argument("--target", required=True, type=_word)
    q.add_argument("--method", required=True, choices=[NEW, POST])
    q.add_argument("--out", required=True)

    q = sub.add_parser("solve", help="bounded PCP search")
    q.add_argument("--instance", required=True)
    pcp_flags(q)

    q = sub.add_parser("verify", help="check a PCP solution")
    q.add_argument("--instance", required=True)
    q.add_argument("--solution", required=True)

    q = sub.add_parser("roundtrip", help="compare derivation search with the new reduction")
    q.add_argument("--system", required=True)
    q.add_argument("--target", required=True, type=_word)
    search_flags(q)
    pcp_flags(q)

    q = sub.add_parser("sizes", help="instance sizes of both reductions")
    q.add_argument("--system", required=True)
    return p


def cmd_derive(args, out):
    sys_ = read_system(args.system)
    d = derive_bounded(sys_, args.target, args.max_steps, args.max_len)
    if d is None:
        print(ABSENT, file=out)
        return 1
    words = d.words(sys_)
    print(f"start: {format_word(d.start)}", file=out)
    for n, ((i, x), w) in enumerate(zip(d.steps, words[1:]), 1):
        print(f"step {n}: rule {i} x={format_word(x)} -> {format_word(w)}", file=out)
    return 0


def cmd_reduce(args, out):
    sys_ = read_system(args.system)
    art = REDUCERS[args.method](sys_, args.target)
    ref = os.path.relpath(os.path.abspath(args.system), os.path.dirname(os.path.abspath(args.out)))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(format_artifact(art, ref))
    print(f"size={art.instance.size}", file=out)
    return 0


def cmd_solve(args, out):
    inst = read_instance(args.instance)
    sol = solve_bounded(inst, max(args.max_indices, 1), args.max_overhang)
    print(ABSENT if sol is None else str(sol), file=out)
    return 1 if sol is None else 0


def cmd_verify(args, out):
    inst = read_instance(args.instance)
    sol = parse_solution(args.solution)
    try:
        ok = verify_solution(inst, sol.indices)
    except IndexError as exc:
        raise ParseError(str(exc)) from None
    print("true" if ok else "false", file=out)
    return 0 if ok else 1


def cmd_roundtrip(args, out):
    sys_ = read_system(args.system)
    rep = bridge.equivalence_experiment(sys_, args.target, (args.max_steps, args.max_len),
                                        (max(args.max_indices, 1), args.max_overhang))
    print(rep.line(), file=out)
    return 0 if rep.verdict in (bridge.BOTH_FOUND, bridge.OUTSIDE_SCOPE) else 1


def cmd_sizes(args, out):
    post, new = size_report(read_system(args.system))
    print(f"post={post} new={new}", file=out)
    return 0


COMMANDS = {
    "derive": cmd_derive,
    "reduce": cmd_reduce,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "roundtrip": cmd_roundtrip,
    "sizes": cmd_sizes,
}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[args.command](args, out)
    except (ParseError, WordError, ValueError) as exc:
        print(f"postpcp: error: {exc}", file=err)
        return 2
    except OSError as exc:
        print(f"postpcp: error: {exc}", file=err)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

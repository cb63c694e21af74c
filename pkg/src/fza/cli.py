"""``fza`` command-line interface.

Exit status is 0 on success (or equivalence), 1 when ``equiv`` finds a
counterexample, and 2 on any error. Results go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io_format, oracle, semantics, transforms
from .errors import FzaError, KindMismatchError
from .fuzzy import format_value

EPSILON = "ε"
ASCII_EPSILON = "<eps>"


class _Failure(Exception):
    pass


def _load(path):
    try:
        return io_format.load(path)
    except OSError as exc:
        raise _Failure(f"{path}: {exc.strerror or exc}") from None
    except FzaError as exc:
        raise _Failure(f"{path}: {exc}") from None


def _show(toks, ascii_eps=False) -> str:
    if not toks:
        return ASCII_EPSILON if ascii_eps else EPSILON
    return " ".join(toks)


def _write(machine, out) -> None:
    text = io_format.serialize_automaton(machine)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_validate(args) -> int:
    m = _load(args.file)
    print(f"ok: {m.kind}, |Q|={len(m.states)}, |Σ|={len(m.alphabet)}")
    return 0


def cmd_eval(args) -> int:
    m = _load(args.file)
    toks = () if args.empty else tuple(args.input.split())
    if not args.empty and not toks:
        raise _Failure("--input is blank; use --empty for the empty string")
    toks = semantics.tokens(m, toks)
    degree = semantics.language_degree(m, toks)
    if args.oracle:
        checked = oracle.run_degree_oracle(m, toks)
        if checked != degree:
            raise _Failure(
                f"oracle disagrees with recursive evaluation: {format_value(checked)} vs {format_value(degree)}"
            )
        degree = checked
    if args.format == "json":
        print(json.dumps({"string": list(toks), "degree": format_value(degree)}, ensure_ascii=False))
    else:
        print(format_value(degree))
    return 0


def cmd_determinize(args) -> int:
    m = _load(args.file)
    _write(transforms.determinize(m), args.output)
    return 0


def cmd_rm_epsilon(args) -> int:
    m = _load(args.file)
    result = transforms.eliminate_epsilon(m)
    if args.prune:
        result = transforms.prune_machine(result)
    _write(result, args.output)
    return 0


def cmd_compile(args) -> int:
    m = _load(args.file)
    _write(transforms.compile(m), args.output)
    return 0


def cmd_equiv(args) -> int:
    a, b = _load(args.file_a), _load(args.file_b)
    verdict = oracle.equiv_up_to(a, b, args.max_len, oracle=args.oracle)
    if args.format == "json":
        payload = {"equivalent": verdict.equivalent, "max_len": verdict.bound}
        if not verdict.equivalent:
            s, da, db = verdict.counterexample
            payload["counterexample"] = {"string": list(s), "degree_a": format_value(da), "degree_b": format_value(db)}
        print(json.dumps(payload, ensure_ascii=False))
    elif verdict.equivalent:
        print(f"equivalent up to {verdict.bound}")
    else:
        s, da, db = verdict.counterexample
        print(f"not equivalent: {_show(s)}\t{format_value(da)}\t{format_value(db)}")
    return 0 if verdict.equivalent else 1


def cmd_language(args) -> int:
    m = _load(args.file)
    rows = [
        (s, d)
        for s, d in oracle.iter_language(m, args.max_len, oracle=args.oracle)
        if d or not args.nonzero
    ]
    if args.format == "json":
        print(json.dumps([{"string": list(s), "degree": format_value(d)} for s, d in rows], ensure_ascii=False))
    else:
        for s, d in rows:
            print(f"{_show(s, args.ascii)}\t{format_value(d)}")
    return 0


def _non_negative(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fza", description="Fuzzy automata under max-min semantics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a machine file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("eval", help="degree to which a string is accepted")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--input", help="whitespace-separated symbol tokens")
    g.add_argument("--empty", action="store_true", help="evaluate the empty string")
    p.add_argument("--oracle", action="store_true", help="use run enumeration and cross-check")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("determinize", help="nfa -> dfa")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_determinize)

    p = sub.add_parser("rm-epsilon", help="enfa -> nfa")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--prune", action="store_true", help="drop dominated distributions")
    p.set_defaults(func=cmd_rm_epsilon)

    p = sub.add_parser("compile", help="enfa -> dfa")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("equiv", help="compare two machines on all strings up to a length")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--max-len", type=_non_negative, required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("language", help="tabulate degrees of all strings up to a length")
    p.add_argument("file")
    p.add_argument("--max-len", type=_non_negative, required=True)
    p.add_argument("--nonzero", action="store_true")
    p.add_argument("--ascii", action="store_true", help=f"print {ASCII_EPSILON} instead of {EPSILON}")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_language)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Failure as exc:
        print(f"fza: error: {exc}", file=sys.stderr)
    except KindMismatchError as exc:
        print(f"fza: error: {args.file}: {exc}", file=sys.stderr)
    except FzaError as exc:
        print(f"fza: error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())

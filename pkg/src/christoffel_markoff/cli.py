"""Command-line interface.

Exit status: 0 on success, 1 when ``check`` finds a collision, 2 on usage,
domain or invariant errors.  Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .conjecture import cross_check, injectivity_scan
from .errors import DomainError, InvariantViolation
from .markoff import MarkoffTriple, check_equation, is_proper, markoff_tree, triple_of_word, word_of_triple
from .words import (
    FactoredWord,
    as_word,
    christoffel_tree,
    christoffel_word,
    is_christoffel,
    render_path,
    standard_factorization,
)

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_ERROR = 2

CSV_COLUMNS = ("a", "b", "c", "word", "w1", "w2")


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _christoffel_arg(text: str) -> str:
    word = as_word(text.strip().lower())
    if is_christoffel(word) is None:
        raise DomainError(f"{word!r} is not a Christoffel word")
    return word


def _proper_factored(args: Sequence[str]) -> FactoredWord:
    if len(args) == 1:
        word = _christoffel_arg(args[0])
    elif len(args) == 2:
        word = christoffel_word(_non_negative(args[0]), _non_negative(args[1]))
    else:
        raise DomainError("expected a word or two integers p q")
    return standard_factorization(word)


def _write_out(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _csv_text(rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()


def _provenance_row(fw: FactoredWord) -> tuple:
    a, b, c = triple_of_word(fw).triple
    return (a, b, c, fw.word, fw.w1, fw.w2)


def cmd_word(args: argparse.Namespace) -> int:
    word = christoffel_word(args.p, args.q)
    if args.render is None:
        print(word)
    elif args.render == "ascii":
        print(word)
        _write_out(render_path(word, "ascii"), args.out)
    else:
        if args.out:
            print(word)
        _write_out(render_path(word, "svg"), args.out)
    return EXIT_OK


def cmd_factor(args: argparse.Namespace) -> int:
    fw = standard_factorization(_christoffel_arg(args.word))
    print(fw)
    return EXIT_OK


def cmd_triple(args: argparse.Namespace) -> int:
    prov = triple_of_word(_proper_factored(args.input))
    print(prov.triple)
    print(prov.describe())
    return EXIT_OK


def cmd_unword(args: argparse.Namespace) -> int:
    a, b, c = args.a, args.b, args.c
    if not check_equation(a, b, c):
        raise DomainError(f"({a}, {b}, {c}) is not a Markoff triple")
    t = MarkoffTriple(*sorted((a, b, c)))
    if not is_proper(t):
        raise DomainError(f"{t} is improper: {{1,1,1}} and {{1,1,2}} have no Christoffel word")
    fw = word_of_triple(t)
    print(f"{fw.word} = {fw}")
    return EXIT_OK


def cmd_tree(args: argparse.Namespace) -> int:
    if args.depth is not None:
        pairs = christoffel_tree(args.depth)
        if args.format == "csv":
            text = _csv_text([_provenance_row(fw) for fw in pairs])
        else:
            entries = []
            for fw in pairs:
                t = triple_of_word(fw).triple
                entries.append(
                    {"w1": fw.w1, "w2": fw.w2, "word": fw.word, "triple": [str(v) for v in t]}
                )
            text = json.dumps(entries, indent=2)
    else:
        triples = markoff_tree(args.bound)
        if args.format == "csv":
            rows = []
            for t in triples:
                if is_proper(t):
                    fw = word_of_triple(t)
                    rows.append((*t, fw.word, fw.w1, fw.w2))
                else:
                    rows.append((*t, "", "", ""))
            text = _csv_text(rows)
        else:
            text = json.dumps([[str(v) for v in t] for t in triples], indent=2)
    _write_out(text, None)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    report = injectivity_scan(args.depth)
    consistent = cross_check(report.bound)
    payload = report.to_dict()
    payload["cross_check"] = consistent
    print(json.dumps(payload, indent=2))
    if not consistent:
        raise InvariantViolation(
            f"triple maxima and Christoffel numbers disagree below {report.bound}"
        )
    return EXIT_OK if report.injective else EXIT_FINDING


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="christoffel-markoff",
        description="Christoffel words, Markoff triples and the trace map between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", help="Christoffel word with p letters x and q letters y")
    p.add_argument("p", type=_non_negative)
    p.add_argument("q", type=_non_negative)
    p.add_argument("--render", choices=("ascii", "svg"))
    p.add_argument("--out", help="write the drawing to this file instead of stdout")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("factor", help="standard factorization of a proper Christoffel word")
    p.add_argument("word")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("triple", help="Markoff triple of a proper Christoffel word")
    p.add_argument("input", nargs="+", metavar="WORD | P Q")
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("unword", help="Christoffel word of a proper Markoff triple")
    p.add_argument("a", type=_positive)
    p.add_argument("b", type=_positive)
    p.add_argument("c", type=_positive)
    p.set_defaults(func=cmd_unword)

    p = sub.add_parser("tree", help="enumerate the Christoffel tree or the Markoff tree")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--depth", type=_non_negative)
    mode.add_argument("--bound", type=_positive)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("check", help="bounded injectivity scan and cross-check")
    p.add_argument("--depth", type=_non_negative, required=True)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: census, analyze, generate, verify.

Structured results (including findings) go to stdout; diagnostics go to
stderr.  Exit codes: 0 clean, 1 usage or I/O error, 2 mathematical finding.
JSON output carries a top-level ``schema_version`` and is byte-stable for
identical invocations; ``--deterministic`` suppresses the one timing field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import CensusReport, render_census_tsv, s_sequence
from .construct import RunReport, build_run, extend_equal_run, extend_unequal
from .double_squares import classify_mate_detail, find_fs_double_squares
from .errors import FindingError, SweepInterrupted
from .pairs import find_double_square_pairs
from .sweep import ALL_PROPERTIES, SweepConfig, SweepReport, exhaustive_verify
from .words import Word

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FINDING = 2


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _read_words_arg(arg: str) -> list[Word]:
    """A word given literally, or a path to a file with one word per line."""
    if os.path.exists(arg):
        with open(arg, encoding="ascii") as fh:
            lines = [line.strip() for line in fh]
        words = [Word.from_text(line) for line in lines if line]
        if not words:
            raise ValueError(f"no words found in {arg}")
        return words
    return [Word.from_text(arg)]


# ------------------------------------------------------------------- census

def _census_plain(report: CensusReport) -> str:
    text = report.word.text
    lines = [f"word: {text}", f"n: {len(text)}"]
    width = 30
    for base in range(0, len(text), width):
        chunk = range(base, min(base + width, len(text)))
        lines.append("  i " + " ".join(f"{i + 1:2d}" for i in chunk))
        lines.append("  w " + " ".join(f"{text[i]:>2s}" for i in chunk))
        lines.append("  s " + " ".join(f"{report.s[i]:2d}" for i in chunk))
    lines.append(f"distinct squares: {report.distinct_square_count}")
    start, length = report.longest_run
    lines.append(f"longest run of 2s: start {start}, length {length}")
    return "\n".join(lines)


def cmd_census(args: argparse.Namespace) -> int:
    words = _read_words_arg(args.word)
    for word in words:
        report = s_sequence(word)
        if args.format == "tsv":
            sys.stdout.write(render_census_tsv(report))
            print(f"# distinct_squares={report.distinct_square_count} "
                  f"longest_run={report.longest_run[0]},{report.longest_run[1]}",
                  file=sys.stderr)
        elif args.format == "json":
            payload = report.to_json_dict()
            payload["schema_version"] = SCHEMA_VERSION
            _print_json(payload)
        else:
            print(_census_plain(report))
    return EXIT_OK


# ------------------------------------------------------------------ analyze

def _analysis_payload(word: Word) -> tuple[dict, bool]:
    findings: list[dict] = []
    report = s_sequence(word)
    if report.max_s > 2:
        findings.append({"property": "census_max_two", "detail": f"max s_i = {report.max_s}"})
    squares = find_fs_double_squares(word)
    pairs = find_double_square_pairs(word, squares)
    pair_dicts = []
    for pair in pairs:
        d = pair.to_json_dict()
        mate = classify_mate_detail(pair.first, pair.second)
        d["mate"] = mate.label.value
        if mate.delta_rule is not None:
            d["mate_rule"] = mate.delta_rule
        pair_dicts.append(d)
        for check in pair.checks:
            if not check.passed:
                findings.append({
                    "property": f"{pair.kind.value}_pair_checks",
                    "detail": f"position {pair.position}: failed {check.name}",
                })
    payload = {
        "schema_version": SCHEMA_VERSION,
        "word": word.text,
        "n": len(word),
        "s": list(report.s),
        "double_squares": [sq.to_json_dict() for sq in squares],
        "pairs": pair_dicts,
        "findings": findings,
    }
    return payload, bool(findings)


def cmd_analyze(args: argparse.Namespace) -> int:
    word = Word.from_text(args.word)
    try:
        payload, dirty = _analysis_payload(word)
    except FindingError as exc:
        record = {"schema_version": SCHEMA_VERSION, "word": args.word,
                  "findings": [{"property": "structure", "detail": str(exc)}]}
        _print_json(record)
        return EXIT_FINDING
    if args.format == "json":
        _print_json(payload)
    elif args.format == "tsv":
        print("kind\tposition\tsq_len\tSQ_len\tx1\tx2\tp1\tp2")
        for sq in payload["double_squares"]:
            print(f"double_square\t{sq['position']}\t{sq['sq_len']}\t{sq['SQ_len']}"
                  f"\t{sq['x1']}\t{sq['x2']}\t{sq['p1']}\t{sq['p2']}")
        for pair in payload["pairs"]:
            print(f"pair_{pair['kind']}\t{pair['position']}\t{pair['first']['sq_len']}"
                  f"\t{pair['second']['SQ_len']}\t{pair['mate']}\tcase={pair['case']}\t\t")
    else:
        print(f"word: {payload['word']}")
        if not payload["double_squares"]:
            print("no FS-double squares")
        for sq in payload["double_squares"]:
            print(f"FS-double square at {sq['position']}: |sq|={sq['sq_len']} "
                  f"|SQ|={sq['SQ_len']} x1={sq['x1']} x2={sq['x2']} "
                  f"p1={sq['p1']} p2={sq['p2']}")
        for pair in payload["pairs"]:
            checks = " ".join(f"{c['name']}={'ok' if c['pass'] else 'FAIL'}"
                              for c in pair["checks"])
            rule = f" ({pair['mate_rule']})" if "mate_rule" in pair else ""
            print(f"adjacent pair at {pair['position']}: {pair['kind']} "
                  f"(case {pair['case']}), mate {pair['mate']}{rule}; {checks}")
        for finding in payload["findings"]:
            print(f"FINDING {finding['property']}: {finding['detail']}")
    return EXIT_FINDING if dirty else EXIT_OK


# ----------------------------------------------------------------- generate

def _run_report_out(report: RunReport, fmt: str) -> int:
    if fmt == "json":
        payload = report.to_json_dict()
        payload["schema_version"] = SCHEMA_VERSION
        _print_json(payload)
    elif fmt == "tsv":
        print("word\tn\tT\tratio_num\tratio_den")
        print(f"{report.word.text}\t{report.n}\t{report.T}"
              f"\t{report.ratio.numerator}\t{report.ratio.denominator}")
    else:
        print(report.word.text)
        print(f"n: {report.n}")
        print(f"T: {report.T}")
        print(f"ratio: {report.ratio.numerator}/{report.ratio.denominator}")
        for step in report.steps:
            print(f"step {step.kind}: +{len(step.letters)} letters")
        for finding in report.findings:
            print(f"FINDING: {finding}")
    return EXIT_FINDING if report.findings else EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "run":
        if args.target is None:
            raise ValueError("--target is required for --kind run")
        report = build_run(args.target, args.alphabet_size, variant=args.variant,
                           budget=args.budget)
    elif args.kind == "equal":
        if args.seed is None:
            raise ValueError("--seed is required for --kind equal")
        report = extend_equal_run(Word.from_text(args.seed))
    else:
        if args.seed is None:
            raise ValueError("--seed is required for --kind unequal")
        report = extend_unequal(Word.from_text(args.seed), args.variant,
                                budget=args.budget)
    return _run_report_out(report, args.format)


# ------------------------------------------------------------------- verify

def _verify_out(report: SweepReport, fmt: str, deterministic: bool) -> int:
    if fmt == "json":
        _print_json(report.to_json_dict(include_timing=not deterministic))
    elif fmt == "tsv":
        print("n\twords\tmax_distinct_squares\tmax_run\tpairs_equal"
              "\tpairs_unequal\tdouble_square_positions")
        for n, st in sorted(report.per_length.items()):
            print(f"{n}\t{st.words}\t{st.max_distinct_squares}\t{st.max_run}"
                  f"\t{st.pairs_equal}\t{st.pairs_unequal}\t{st.double_square_positions}")
        for f in report.findings:
            print(f"finding\t{f.property}\t{f.word}\t{f.detail}")
    else:
        print(f"alphabet size: {report.alphabet_size}")
        print(f"max length: {report.max_len}")
        print(f"words checked: {report.total_words}")
        if not deterministic:
            print(f"elapsed: {report.elapsed_seconds:.2f}s")
        for n, st in sorted(report.per_length.items()):
            print(f"  n={n}: words={st.words} max_distinct={st.max_distinct_squares} "
                  f"max_run={st.max_run} pairs={st.pairs_equal}+{st.pairs_unequal}")
        print(f"findings: {len(report.findings)}")
        for f in report.findings:
            print(f"FINDING {f.property} {f.word}: {f.detail}")
    return EXIT_FINDING if report.findings else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    properties = tuple(args.properties.split(",")) if args.properties else ALL_PROPERTIES
    config = SweepConfig(
        alphabet_size=args.alphabet_size,
        max_len=args.max_len,
        properties=properties,
        checkpoint_path=args.checkpoint,
        parallelism=args.jobs,
        block_prefix_len=args.block_prefix_len,
        allow_over_ceiling=args.override_ceiling,
    )
    report = exhaustive_verify(config)
    return _verify_out(report, args.format, args.deterministic)


# --------------------------------------------------------------------- main

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fsdsq",
        description="Rightmost distinct squares, FS-double squares and runs of 2's")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("-f", "--format", choices=("plain", "tsv", "json"),
                       default="plain")
        p.add_argument("--deterministic", action="store_true",
                       help="suppress timing fields for byte-stable output")

    p = sub.add_parser("census", help="s_i sequence of a word (or file of words)")
    p.add_argument("word", help="word text, or path to a file with one word per line")
    add_format(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("analyze", help="FS-double squares, adjacent pairs, mates")
    p.add_argument("word")
    add_format(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="construct words with long runs of 2's")
    p.add_argument("--kind", choices=("equal", "unequal", "run"), required=True)
    p.add_argument("--seed", help="seed word for equal/unequal extension")
    p.add_argument("--target", type=int, help="target run length for --kind run")
    p.add_argument("--variant", choices=("short", "long"), default="short")
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--budget", type=int, default=20000,
                   help="candidate budget for the fallback search")
    add_format(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="exhaustive property sweep")
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checkpoint", help="checkpoint file for resumable sweeps")
    p.add_argument("--properties", help="comma-separated property subset")
    p.add_argument("--block-prefix-len", type=int, default=7)
    p.add_argument("--override-ceiling", action="store_true",
                   help="run even past the cost ceiling")
    add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FindingError as exc:
        print(json.dumps({"schema_version": SCHEMA_VERSION,
                          "findings": [{"property": "structure", "detail": str(exc)}]},
                         sort_keys=True))
        return EXIT_FINDING
    except SweepInterrupted as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

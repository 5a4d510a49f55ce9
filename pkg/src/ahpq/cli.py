"""Command-line front end.

Subcommands mirror the three-step workflow (prepare a model file, validate
and visualize it, analyze it) plus scaffolding, what-if exploration, and
serving the HTTP API. Exit codes: 0 success, 1 validation errors, 2 parse
error, 3 strict-consistency failure, 4 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import scaffold_model
from .errors import AhpError
from .format import ParseError, parse_model, serialize_model
from .model import validate_model
from .priority import ACCEPTABLE_LIMIT
from .report import ReportFormat, render_report, render_tree
from .synthesis import evaluate, whatif
from .wire import delta_to_dict, parse_issues_to_dicts, report_to_dict

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2
EXIT_INCONSISTENT = 3
EXIT_USAGE = 4

PORT_ENV_VAR = "AHPQ_PORT"
DEFAULT_PORT = 8400


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems instead of exiting itself."""

    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ahpq",
                     description="Pairwise-comparison decision analysis for "
                                 "chatbot quality assessment.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a model file for structural problems")
    p.add_argument("file", help="model file (version 2.0 format)")

    p = sub.add_parser("visualize", help="draw the decision hierarchy")
    p.add_argument("file")
    p.add_argument("--format", choices=["ascii", "dot"], default="ascii")

    p = sub.add_parser("analyze", help="compute priorities, totals, and consistency")
    p.add_argument("file")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--strict", action="store_true",
                   help="fail (exit 3) if any node's consistency ratio exceeds 20%%")
    p.add_argument("--warn-threshold", type=float, default=10.0, metavar="PCT",
                   help="emit a warning for nodes above this consistency "
                        "percentage (default 10)")

    p = sub.add_parser("whatif", help="preview the effect of changing one judgment")
    p.add_argument("file")
    p.add_argument("--node", required=True, metavar="PATH",
                   help="slash path, e.g. Goal/Performance/Escalation")
    p.add_argument("--pair", required=True, metavar="A,B")
    p.add_argument("--value", required=True, metavar="RATIO",
                   help="new ratio for the pair, e.g. 3 or 1/7")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("init", help="scaffold a model from catalog attributes")
    p.add_argument("--attribute", action="append", default=[], metavar="CATEGORY:NAME",
                   help="repeatable; e.g. Performance:UnexpectedInput")
    p.add_argument("--alternatives", required=True, metavar="A,B[,...]")
    p.add_argument("--name", default="Quality Assessment")
    p.add_argument("-o", "--output", metavar="FILE",
                   help="write the scaffold here instead of standard output")

    p = sub.add_parser("serve", help="serve the HTTP API (and optionally the UI)")
    p.add_argument("--port", type=int, default=None,
                   help=f"default {DEFAULT_PORT}, or ${PORT_ENV_VAR} when set")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", metavar="DIR", help="serve static UI assets from DIR at /")

    return parser


def _parse_ratio_arg(text: str) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"cannot read {text!r} as a ratio") from None
    if value <= 0:
        raise _UsageError(f"ratio must be positive, got {text!r}")
    return value


def _load_model(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from None
    return parse_model(text)


def _cmd_validate(args) -> int:
    model = _load_model(args.file)
    report = validate_model(model)
    for issue in model.parse_warnings:
        print(f"warning: line {issue.span.line}, column {issue.span.column}: "
              f"{issue.kind}: {issue.message}", file=sys.stderr)
    for issue in report.warnings:
        print(f"warning: {'/'.join(issue.path) or '(model)'}: {issue.code}: "
              f"{issue.message}", file=sys.stderr)
    if report.errors:
        for issue in report.errors:
            print(f"error: {'/'.join(issue.path) or '(model)'}: {issue.code}: "
                  f"{issue.message}")
        print(f"{len(report.errors)} error(s), {len(report.warnings)} warning(s)")
        return EXIT_VALIDATION
    print(f"OK: model is valid ({len(report.warnings)} warning(s))")
    return EXIT_OK


def _cmd_visualize(args) -> int:
    model = _load_model(args.file)
    format = ReportFormat.DOT if args.format == "dot" else ReportFormat.ASCII_TREE
    sys.stdout.write(render_tree(model, format))
    return EXIT_OK


def _require_valid(model) -> int | None:
    report = validate_model(model)
    if report.errors:
        for issue in report.errors:
            print(f"error: {'/'.join(issue.path) or '(model)'}: {issue.code}: "
                  f"{issue.message}", file=sys.stderr)
        return EXIT_VALIDATION
    return None


def _cmd_analyze(args) -> int:
    model = _load_model(args.file)
    failed = _require_valid(model)
    if failed is not None:
        return failed
    result = evaluate(model)
    sys.stdout.write(render_report(result, ReportFormat(args.format)))
    warn_limit = args.warn_threshold / 100.0
    for row in result.rows:
        if row.consistency_ratio > warn_limit:
            print(f"warning: {'/'.join(row.path)}: consistency ratio "
                  f"{row.consistency_ratio * 100:.1f}% exceeds "
                  f"{args.warn_threshold:.1f}%", file=sys.stderr)
    if args.strict:
        worst = max(result.rows, key=lambda r: r.consistency_ratio)
        if worst.consistency_ratio > ACCEPTABLE_LIMIT:
            print(f"error: {'/'.join(worst.path)}: consistency ratio "
                  f"{worst.consistency_ratio * 100:.1f}% exceeds "
                  f"{ACCEPTABLE_LIMIT * 100:.0f}%", file=sys.stderr)
            return EXIT_INCONSISTENT
    return EXIT_OK


def _cmd_whatif(args) -> int:
    model = _load_model(args.file)
    failed = _require_valid(model)
    if failed is not None:
        return failed
    pair = tuple(part.strip() for part in args.pair.split(","))
    if len(pair) != 2:
        raise _UsageError(f"--pair expects two names, got {args.pair!r}")
    path = tuple(seg for seg in args.node.split("/") if seg)
    delta = whatif(model, path, pair, _parse_ratio_arg(args.value))
    if args.format == "json":
        sys.stdout.write(json.dumps(delta_to_dict(delta), indent=2) + "\n")
        return EXIT_OK
    c = delta.changed
    print(f"{'/'.join(c.path)} ({c.pair[0]}, {c.pair[1]}): "
          f"{c.old_value} -> {c.new_value}")
    print("  ".join(["alternative", "before", "after", "shift"]))
    for name in delta.before.alternative_totals:
        before = delta.before.alternative_totals[name]
        after = delta.after.alternative_totals[name]
        print("  ".join([name, f"{before * 100:.1f}%", f"{after * 100:.1f}%",
                         f"{delta.total_shift[name] * 100:+.1f}%"]))
    return EXIT_OK


def _cmd_init(args) -> int:
    selection = []
    for raw in args.attribute:
        category, sep, attribute = raw.partition(":")
        if not sep or not category.strip() or not attribute.strip():
            raise _UsageError(f"--attribute expects CATEGORY:NAME, got {raw!r}")
        selection.append((category.strip(), attribute.strip()))
    alternatives = [a.strip() for a in args.alternatives.split(",") if a.strip()]
    try:
        model = scaffold_model(selection, alternatives, name=args.name)
    except AhpError as exc:
        if exc.code in ("EMPTY_SELECTION", "TOO_FEW_ALTERNATIVES"):
            raise _UsageError(exc.message) from None
        raise
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    text = serialize_model(model)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    port = args.port
    if port is None:
        port = int(os.environ.get(PORT_ENV_VAR, DEFAULT_PORT))
    app = create_app(ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=port, log_level="info")
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "visualize": _cmd_visualize,
    "analyze": _cmd_analyze,
    "whatif": _cmd_whatif,
    "init": _cmd_init,
    "serve": _cmd_serve,
}


def run(argv: list[str]) -> int:
    """Dispatch one invocation; never raises for expected failure modes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version print and stop
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AhpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

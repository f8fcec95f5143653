"""Command line entry point: ``unruh-ent {sweep,report,selftest}``."""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path

from .errors import ConfigError, ConvergenceFailure, EmptyInput, UnruhEntError
from .selftest import run_selftest
from .sweep import (
    FORMATS,
    OUTPUT_GROUPS,
    SCENARIOS,
    SweepConfig,
    compare_report,
    records_from_csv,
    records_from_json,
    records_to_csv,
    records_to_json,
    run_sweep,
)

log = logging.getLogger("unruh_ent")

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2

CONFIG_KEYS = {"scenario", "grid", "rb", "rc", "outputs", "format", "seed", "workers"}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for numeric failures
    def error(self, message):
        raise ConfigError(message)


def _key_line(text: str, key: str):
    m = re.search(rf'"{re.escape(key)}"\s*:', text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def load_config_file(path) -> dict:
    """Read a JSON object of sweep settings; errors carry line and field."""
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(exc.msg, line=exc.lineno) from None
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object", line=1)
    for key in data:
        if key not in CONFIG_KEYS:
            raise ConfigError("unknown setting", field=key, line=_key_line(text, key))
    if isinstance(data.get("outputs"), str):
        data["outputs"] = tuple(s.strip() for s in data["outputs"].split(","))
    return data


def build_config(args) -> SweepConfig:
    settings = {}
    text = None
    if args.config:
        settings.update(load_config_file(args.config))
        text = Path(args.config).read_text()
    from_file = set(settings)
    # flags win over file values
    for key in ("scenario", "grid", "rb", "rc", "format", "seed", "workers"):
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
            from_file.discard(key)
    if getattr(args, "outputs", None):
        settings["outputs"] = tuple(s.strip() for s in args.outputs.split(","))
        from_file.discard("outputs")
    try:
        return SweepConfig(**settings).validate()
    except ConfigError as exc:
        if exc.field in from_file and exc.line is None:
            exc.line = _key_line(text, exc.field)
            exc.args = (f"line {exc.line}, {exc.args[0]}",)
        raise


def _add_sweep_flags(p):
    p.add_argument("--config", help="JSON file of settings; flags override it")
    p.add_argument("--scenario", choices=SCENARIOS)
    p.add_argument("--rb", type=float, help="fixed Bob acceleration (custom scenario)")
    p.add_argument("--rc", type=float, help="fixed Charlie acceleration (custom scenario)")
    p.add_argument("--grid", type=int, help="grid points over [0, pi/4] (default 201)")
    p.add_argument("--outputs", help=f"comma list from {','.join(OUTPUT_GROUPS)}")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int, help="worker processes for the grid")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unruh-ent", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sweep", help="evaluate quantifiers on an acceleration grid")
    _add_sweep_flags(p)

    p = sub.add_parser("report", help="compare numerics against published closed forms")
    _add_sweep_flags(p)
    p.add_argument("--input", help="read records from a CSV/JSON sweep file instead")

    p = sub.add_parser("selftest", help="run randomised invariant checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200, help="random samples per check")
    return parser


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_sweep(args):
    cfg = build_config(args)
    records = run_sweep(cfg)
    _emit(records_to_csv(records) if cfg.format == "csv" else records_to_json(records), args.out)
    return EXIT_OK


def _cmd_report(args):
    if args.input:
        text = Path(args.input).read_text()
        records = records_from_json(text) if text.lstrip().startswith("[") else records_from_csv(text)
    else:
        records = run_sweep(build_config(args))
    report = compare_report(records)
    if args.format == "json":
        _emit(json.dumps(report.to_dict(), indent=1) + "\n", args.out)
    else:
        _emit(report.to_text(), args.out)
    return EXIT_OK


def _cmd_selftest(args):
    if args.count < 1:
        raise ConfigError("count must be positive", field="count")
    results = run_selftest(seed=args.seed, n=args.count)
    for res in results:
        print(res.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERIC


def main(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    commands = {"sweep": _cmd_sweep, "report": _cmd_report, "selftest": _cmd_selftest}
    try:
        return commands[args.command](args)
    except (ConfigError, EmptyInput) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConvergenceFailure, UnruhEntError, ArithmeticError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

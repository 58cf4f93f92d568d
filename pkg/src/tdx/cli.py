"""The ``tdx`` command.

Exit codes: 0 success, 1 analysis error, 2 configuration or usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from .config import ENV_VAR, MODEL_IDS, AnalysisConfig, ConfigError, load_config
from .frontend import AnalysisError
from .pipeline import analyze
from .report import FORMATS, UsageError, render

EXIT_OK, EXIT_ANALYSIS, EXIT_CONFIG = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits 2 as well; keep the message short
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"tdx: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tdx", description="Compare technical-debt and maintainability "
                                             "models over one codebase.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze a source tree and print the comparison report")
    an.add_argument("root", help="source root to analyze")
    an.add_argument("--models", help=f"comma-separated subset of {','.join(MODEL_IDS)}")
    an.add_argument("--format", choices=FORMATS, default="json")
    an.add_argument("--config", help=f"INI config file (default: ${ENV_VAR}, else built-in)")
    an.add_argument("--commit-log", help="commit log for hotspots and temporal coupling")
    an.add_argument("--benchmark", help="JSON benchmark for bch star ratings")
    an.add_argument("--out", help="write the report here instead of stdout")

    cf = sub.add_parser("config", help="show the effective configuration")
    cf.add_argument("--config", help=f"INI config file (default: ${ENV_VAR}, else built-in)")
    cf.add_argument("--dump", action="store_true", help="print every effective value as INI")
    cf.add_argument("--provenance", action="store_true",
                    help="list constants that are overrides or local defaults")
    return parser


def _configure(args: argparse.Namespace) -> AnalysisConfig:
    config = load_config(args.config)
    config.set("analysis.source_root", args.root)
    if args.commit_log:
        config.set("analysis.commit_log", args.commit_log)
    if args.benchmark:
        config.set("analysis.benchmark", args.benchmark)
    if args.models:
        config.set("analysis.models", args.models)
    elif config.commit_log and "analysis.models" not in config.explicit:
        config.set("analysis.models", ",".join((*config.enabled_models, "codescene")))
    return config


def _write(data: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="tdx: %(message)s")
    try:
        if args.command == "config":
            config = load_config(args.config)
            if args.provenance:
                text = "".join(f"{p['key']} = {p['value']}  [{p['source']}] {p['note']}\n"
                               for p in config.provenance())
            else:
                text = config.dump()
            _write(text.encode(), None)
            return EXIT_OK
        config = _configure(args)
        report = analyze(config)
        _write(render(report, args.format), args.out)
    except (ConfigError, UsageError) as exc:
        print(f"tdx: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except AnalysisError as exc:
        print(f"tdx: analysis error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS
    except OSError as exc:
        print(f"tdx: cannot write {exc.filename}: {exc.strerror}", file=sys.stderr)
        return EXIT_ANALYSIS
    return EXIT_OK


def main() -> None:
    sys.exit(run())

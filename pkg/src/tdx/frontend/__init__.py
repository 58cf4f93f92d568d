"""MiniSrc / text frontends and base-metric extraction."""

from __future__ import annotations

import os
from pathlib import Path

from .clones import IDENTICAL, SIMILAR, detect_clones, matching_windows
from .lexer import LexError, Token, TokenKind, tokenize
from .metrics import (
    MINISRC,
    TEXT,
    CloneBlock,
    ClonePair,
    CodebaseMetrics,
    FileMetrics,
    analyze_minisrc,
    analyze_text,
    halstead_volume,
    whitespace_complexity,
)
from .units import ParseError, UnitMetrics, parse_units

__all__ = [
    "IDENTICAL", "SIMILAR", "MINISRC", "TEXT",
    "AnalysisError", "CloneBlock", "ClonePair", "CodebaseMetrics", "FileMetrics",
    "LexError", "ParseError", "Token", "TokenKind", "UnitMetrics",
    "analyze_file", "analyze_minisrc", "analyze_text", "analyze_tree", "attach_clones",
    "detect_clones", "halstead_volume", "matching_windows", "parse_units", "tokenize",
    "whitespace_complexity",
]


class AnalysisError(Exception):
    """A file or directory could not be analyzed."""


def analyze_file(path: str, source_text: str, minisrc: bool, indent_width: int = 4) -> FileMetrics:
    try:
        if minisrc:
            return analyze_minisrc(path, source_text, indent_width)
        return analyze_text(path, source_text, indent_width)
    except (LexError, ParseError) as exc:
        raise AnalysisError(f"{path}:{exc.line}: {exc}") from exc


def analyze_tree(
    root: str | os.PathLike,
    minisrc_extensions: tuple[str, ...] = (".ms",),
    indent_width: int = 4,
    identical_window: int = 6,
    similar_window: int = 6,
    exclude: tuple[str, ...] = (),
) -> tuple[CodebaseMetrics, list[str]]:
    """Analyze every regular file under ``root``.

    Returns the metrics and a list of notes about skipped files. Paths in the
    result are relative to ``root`` with forward slashes.
    """
    base = Path(root)
    if not base.is_dir():
        raise AnalysisError(f"cannot read source root {str(base)!r}: not a directory")
    notes: list[str] = []
    files: list[FileMetrics] = []
    for dirpath, dirnames, filenames in os.walk(base):
        dirnames[:] = sorted(d for d in dirnames if not d.startswith("."))
        for name in sorted(filenames):
            if name.startswith("."):
                continue
            full = Path(dirpath) / name
            rel = full.relative_to(base).as_posix()
            if rel in exclude:
                continue
            try:
                text = full.read_text(encoding="utf-8")
            except UnicodeDecodeError:
                notes.append(f"{rel}: skipped, not UTF-8 text")
                continue
            except OSError as exc:
                raise AnalysisError(f"cannot read {str(full)!r}: {exc.strerror}") from exc
            minisrc = full.suffix in minisrc_extensions
            files.append(analyze_file(rel, text, minisrc, indent_width))
    metrics = CodebaseMetrics(files)
    attach_clones(metrics, identical_window, similar_window)
    return metrics, notes


def attach_clones(metrics: CodebaseMetrics, identical_window: int, similar_window: int) -> None:
    """Fill ``duplicate_blocks`` on every file taking part in a clone pair."""
    by_path = {f.path: f for f in metrics.files}
    for f in metrics.files:
        f.duplicate_blocks = []
    pairs = detect_clones(metrics.files, identical_window, IDENTICAL)
    pairs += [p for p in detect_clones(metrics.files, similar_window, SIMILAR) if not p.textual]
    for pair in pairs:
        by_path[pair.first.path].duplicate_blocks.append(pair)
        if pair.second.path != pair.first.path:
            by_path[pair.second.path].duplicate_blocks.append(pair)

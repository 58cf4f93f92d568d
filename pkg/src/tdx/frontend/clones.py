"""Duplicate-block detection over fixed-size line windows.

``identical`` compares whitespace-normalized code lines; ``similar``
compares lines reduced to token kinds with every operand erased, so renamed
copies still match. Matching windows on the same diagonal (same offset
between the two positions) are merged into maximal blocks.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from .metrics import CloneBlock, ClonePair, FileMetrics

IDENTICAL = "identical"
SIMILAR = "similar"
MODES = (IDENTICAL, SIMILAR)


def _sequence(f: FileMetrics, mode: str) -> list[tuple[int, str]]:
    return f.code_lines if mode == IDENTICAL else f.shape_lines


def matching_windows(
    files: list[FileMetrics], window: int, mode: str
) -> set[tuple[int, int, int, int]]:
    """All matching window pairs as (file_a, start_a, file_b, start_b) indices.

    Files are indexed in path order; pairs are canonical ((a, i) < (b, j))
    and windows overlapping within one file are not matches.
    """
    ordered = sorted(files, key=lambda f: f.path)
    buckets: dict[tuple[str, ...], list[tuple[int, int]]] = defaultdict(list)
    for fi, f in enumerate(ordered):
        texts = [t for _, t in _sequence(f, mode)]
        for i in range(len(texts) - window + 1):
            buckets[tuple(texts[i:i + window])].append((fi, i))
    found = set()
    for positions in buckets.values():
        for x in range(len(positions)):
            fa, i = positions[x]
            for y in range(x + 1, len(positions)):
                fb, j = positions[y]
                if fa == fb and j - i < window:
                    continue
                found.add((fa, i, fb, j))
    return found


def detect_clones(files: list[FileMetrics], window: int, mode: str = IDENTICAL) -> list[ClonePair]:
    """Maximal duplicate blocks of at least ``window`` code lines, each pair once."""
    if window < 2:
        raise ValueError("window must be >= 2")
    if mode not in MODES:
        raise ValueError(f"unknown clone mode {mode!r}; expected one of {MODES}")
    ordered = sorted(files, key=lambda f: f.path)
    diagonals: dict[tuple[int, int, int], list[int]] = defaultdict(list)
    for fa, i, fb, j in matching_windows(ordered, window, mode):
        diagonals[(fa, fb, j - i)].append(i)

    pairs = []
    for (fa, fb, d), starts in diagonals.items():
        for lo, hi in _runs(sorted(starts)):
            pairs.append(_make_pair(ordered[fa], ordered[fb], lo, lo + d, hi - lo + window, mode))
    pairs.sort(key=lambda p: (p.first.path, p.first.start_line, p.second.path,
                              p.second.start_line, p.length))
    return pairs


def _runs(sorted_starts: list[int]) -> Iterable[tuple[int, int]]:
    lo = prev = sorted_starts[0]
    for s in sorted_starts[1:]:
        if s != prev + 1:
            yield lo, prev
            lo = s
        prev = s
    yield lo, prev


def _make_pair(a: FileMetrics, b: FileMetrics, i: int, j: int, length: int, mode: str) -> ClonePair:
    seq_a = _sequence(a, mode)
    seq_b = _sequence(b, mode)
    texts_a = [t for _, t in a.code_lines[i:i + length]]
    texts_b = [t for _, t in b.code_lines[j:j + length]]
    return ClonePair(
        first=CloneBlock(a.path, seq_a[i][0], seq_a[i + length - 1][0]),
        second=CloneBlock(b.path, seq_b[j][0], seq_b[j + length - 1][0]),
        length=length,
        mode=mode,
        textual=texts_a == texts_b,
    )

"""Change-history analysis: hotspots and temporal coupling from a commit log.

Log format (UTF-8, records separated by blank lines)::

    commit <id>
    ts <ISO-8601 timestamp>
    path/one.ms
    path/two.ms

Lines before the path list that start with another ``<word> `` header are
ignored. Timestamps must be non-decreasing (oldest commit first).
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .frontend import CodebaseMetrics

logger = logging.getLogger(__name__)


class CommitLogError(ValueError):
    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Commit:
    id: str
    timestamp: datetime
    paths: tuple[str, ...]


@dataclass(frozen=True)
class CommitLog:
    commits: tuple[Commit, ...] = ()

    def commit_counts(self) -> Counter:
        return Counter(p for c in self.commits for p in set(c.paths))


@dataclass(frozen=True)
class HotspotEntry:
    path: str
    loc: int
    commit_count: int
    score: int


@dataclass(frozen=True)
class CouplingPair:
    path_a: str
    path_b: str
    shared_commits: int
    degree: float


_KNOWN_HEADERS = ("commit", "ts")


def parse_commit_log_text(text: str) -> CommitLog:
    commits: list[Commit] = []
    previous: datetime | None = None
    record: list[tuple[int, str]] = []
    for ln, raw in enumerate(text.splitlines() + [""], start=1):
        line = raw.strip()
        if line:
            record.append((ln, line))
            continue
        if not record:
            continue
        commit = _parse_record(record)
        if previous is not None and commit.timestamp < previous:
            raise CommitLogError(f"timestamp of commit {commit.id} goes backwards", record[1][0])
        previous = commit.timestamp
        commits.append(commit)
        record = []
    return CommitLog(tuple(commits))


def _parse_record(record: list[tuple[int, str]]) -> Commit:
    first_ln, first = record[0]
    head, _, commit_id = first.partition(" ")
    if head != "commit" or not commit_id.strip():
        raise CommitLogError("record must start with 'commit <id>'", first_ln)
    if len(record) < 2:
        raise CommitLogError(f"commit {commit_id} is missing its 'ts' line", first_ln)
    ts_ln, ts_line = record[1]
    head, _, ts_text = ts_line.partition(" ")
    if head != "ts":
        raise CommitLogError(f"commit {commit_id} is missing its 'ts' line", ts_ln)
    try:
        ts = datetime.fromisoformat(ts_text.strip().replace("Z", "+00:00"))
    except ValueError:
        raise CommitLogError(f"bad timestamp {ts_text.strip()!r}", ts_ln) from None
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    paths = []
    for ln, line in record[2:]:
        head, sep, _ = line.partition(" ")
        if sep and head.isalpha() and head.islower() and head not in _KNOWN_HEADERS and not paths:
            continue  # unknown header field
        paths.append(line)
    return Commit(commit_id.strip(), ts, tuple(paths))


def parse_commit_log(path: str | Path) -> CommitLog:
    return parse_commit_log_text(Path(path).read_text(encoding="utf-8"))


def hotspots(
    log: CommitLog,
    metrics: CodebaseMetrics,
    top_n: int = 10,
    complexity: str = "loc",
) -> list[HotspotEntry]:
    """Files ranked by complexity x commit count, highest first, ties by path.

    ``complexity`` picks the size axis: ``loc`` or ``whitespace``. Files in
    the log but not in ``metrics`` are skipped (logged).
    """
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    if complexity not in ("loc", "whitespace"):
        raise ValueError(f"unknown complexity axis {complexity!r}")
    counts = log.commit_counts()
    known = {f.path for f in metrics.files}
    for missing in sorted(set(counts) - known):
        logger.info("hotspots: %s not in the analyzed tree, skipped", missing)
    entries = []
    for f in metrics.files:
        size = f.loc if complexity == "loc" else f.whitespace_complexity
        n = counts.get(f.path, 0)
        entries.append(HotspotEntry(f.path, size, n, size * n))
    entries.sort(key=lambda e: (-e.score, e.path))
    return entries[:top_n]


def temporal_coupling(
    log: CommitLog, min_shared: int = 2, max_files_per_commit: int = 30
) -> list[CouplingPair]:
    """File pairs changed together at least ``min_shared`` times.

    degree = shared / mean(commits of a, commits of b). Commits touching more
    than ``max_files_per_commit`` files are left out of every count.
    """
    if min_shared < 1:
        raise ValueError("min_shared must be >= 1")
    revisions: Counter = Counter()
    shared: Counter = Counter()
    for commit in log.commits:
        paths = sorted(set(commit.paths))
        if len(paths) > max_files_per_commit:
            continue
        revisions.update(paths)
        shared.update(itertools.combinations(paths, 2))
    pairs = []
    for (a, b), n in shared.items():
        if n < min_shared:
            continue
        degree = min(1.0, n / ((revisions[a] + revisions[b]) / 2))
        pairs.append(CouplingPair(a, b, n, degree))
    pairs.sort(key=lambda p: (-p.degree, -p.shared_commits, p.path_a, p.path_b))
    return pairs


def excluded_paths(log: CommitLog, metrics: CodebaseMetrics) -> list[str]:
    known = {f.path for f in metrics.files}
    return sorted(set(log.commit_counts()) - known)

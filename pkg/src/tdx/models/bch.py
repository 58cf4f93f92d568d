"""Ten-guideline compliance check with benchmark-relative star ratings.

Only guideline (a) has published thresholds. The others are scored by
declared proxies over the shared metrics and violations; each proxy score is
in [0, 1] with higher meaning better, and passes at a configurable minimum.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from ..frontend import CodebaseMetrics
from ..rules import Violation
from .params import BchParams
from .result import ModelResult

GUIDELINES = {
    "a": "Write Short Units of Code",
    "b": "Write Simple Units of Code",
    "c": "Write Code Once",
    "d": "Keep Unit Interfaces Small",
    "e": "Separate Concerns in Modules",
    "f": "Couple Architecture Components Loosely",
    "g": "Keep Architecture Components Balanced",
    "h": "Keep Your Codebase Small",
    "i": "Automate Tests",
    "j": "Write Clean Code",
}

MIN_BENCHMARK_ENTRIES = 20
# star thresholds as benchmark percentiles: 5% / 30% / 30% / 30% / 5%
STAR_PERCENTILES = ((5, 95.0), (4, 65.0), (3, 35.0), (2, 5.0))


class BenchmarkError(ValueError):
    pass


@dataclass
class GuidelineResult:
    name: str
    compliant: bool | None  # None: not assessable
    score: float | None
    basis: str


def unit_size_profile(unit_locs: Sequence[int], bins: tuple[int, int, int] = (15, 30, 60)
                      ) -> tuple[float, float, float, float]:
    """Shares of units with LOC <= b1, in (b1, b2], in (b2, b3], and > b3."""
    total = len(unit_locs)
    if total == 0:
        raise ValueError("no units")
    b1, b2, b3 = bins
    counts = [0, 0, 0, 0]
    for loc in unit_locs:
        if loc <= b1:
            counts[0] += 1
        elif loc <= b2:
            counts[1] += 1
        elif loc <= b3:
            counts[2] += 1
        else:
            counts[3] += 1
    return tuple(c / total for c in counts)


def short_units_compliant(profile: Sequence[float], params: BchParams = BchParams()) -> bool:
    s1, s2, s3, s4 = profile
    return (s1 >= params.min_short_share and s2 <= params.max_share_bin2
            and s3 <= params.max_share_bin3 and s4 <= params.max_share_bin4)


def _gini(values: Sequence[float]) -> float:
    xs = sorted(values)
    n = len(xs)
    total = sum(xs)
    if n == 0 or total == 0:
        return 0.0
    weighted = sum((i + 1) * x for i, x in enumerate(xs))
    return (2 * weighted) / (n * total) - (n + 1) / n


def bch_guidelines(
    metrics: CodebaseMetrics,
    violations: Iterable[Violation],
    params: BchParams = BchParams(),
) -> dict[str, GuidelineResult]:
    violations = list(violations)
    units = metrics.units
    results: dict[str, GuidelineResult] = {}

    def flagged_unit_share(rule_ids: set[str]) -> float:
        hit = {(v.path, v.unit_name) for v in violations if v.rule_id in rule_ids}
        bad = sum(1 for f, u in units if (f.path, u.name) in hit)
        return bad / len(units)

    def add(letter: str, compliant: bool | None, score: float | None, basis: str) -> None:
        results[letter] = GuidelineResult(GUIDELINES[letter], compliant, score, basis)

    if units:
        profile = unit_size_profile([u.loc for _, u in units], params.unit_size_bins)
        add("a", short_units_compliant(profile, params), profile[0],
            "unit LOC distribution " + "/".join(f"{p:.3f}" for p in profile))
        simple = 1.0 - flagged_unit_share({"high-cc", "complex-boolean"})
        add("b", simple >= params.min_simple_units, simple,
            "share of units without high-cc or complex-boolean violations")
        small = 1.0 - flagged_unit_share({"too-many-args"})
        add("d", small >= params.min_small_interfaces, small,
            "share of units without too-many-args violations")
    else:
        for letter in "abd":
            add(letter, None, None, "no units")

    total_loc = metrics.total_loc
    if total_loc > 0:
        dup = _duplicated_lines(metrics)
        unique = 1.0 - dup / total_loc
        add("c", unique >= params.min_unique_code, unique, f"{dup} of {total_loc} code lines duplicated")
    else:
        add("c", None, None, "no code lines")

    files = metrics.files
    if files:
        bad_files = {v.path for v in violations if v.rule_id in ("too-many-units", "long-file")}
        separated = 1.0 - len(bad_files) / len(files)
        add("e", separated >= params.min_separated_modules, separated,
            "share of files without too-many-units or long-file violations")
        coupled = {p for f in files for pair in f.duplicate_blocks
                   if pair.first.path != pair.second.path
                   for p in (pair.first.path, pair.second.path)}
        loose = 1.0 - len(coupled) / len(files)
        add("f", loose >= params.min_loose_coupling, loose,
            "share of files sharing no duplicated block with another file")
        balance = 1.0 - _gini([f.loc for f in files])
        add("g", balance >= params.min_balance, balance, "1 - Gini coefficient of file LOC")
    else:
        for letter in "efg":
            add(letter, None, None, "no files")

    small_codebase = max(0.0, 1.0 - total_loc / params.max_codebase_loc)
    add("h", total_loc <= params.max_codebase_loc, small_codebase,
        f"total LOC {total_loc} against limit {params.max_codebase_loc}")
    add("i", None, None, "not assessable: no test information in MiniSrc")
    add("j", None, None, "not assessable: no clean-code rule set in MiniSrc")
    return dict(sorted(results.items()))


def _duplicated_lines(metrics: CodebaseMetrics) -> int:
    code_lines = {f.path: {ln for ln, _ in f.code_lines} for f in metrics.files}
    covered: dict[str, set[int]] = {p: set() for p in code_lines}
    for f in metrics.files:
        for pair in f.duplicate_blocks:
            for block in (pair.first, pair.second):
                covered[block.path].update(range(block.start_line, block.end_line + 1))
    return sum(len(covered[p] & code_lines[p]) for p in code_lines)


def load_benchmark(path: str | Path) -> dict[str, list[float]]:
    """Read a JSON object mapping guideline letter to a list of reference scores."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise BenchmarkError(f"cannot read benchmark {str(path)!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise BenchmarkError("benchmark must be a JSON object keyed by guideline letter")
    out: dict[str, list[float]] = {}
    for letter, scores in data.items():
        if letter not in GUIDELINES:
            raise BenchmarkError(f"unknown guideline {letter!r} in benchmark")
        if not isinstance(scores, list) or not all(isinstance(s, (int, float)) for s in scores):
            raise BenchmarkError(f"benchmark entry {letter!r} must be a list of numbers")
        if len(scores) < MIN_BENCHMARK_ENTRIES:
            raise BenchmarkError(f"benchmark entry {letter!r} has {len(scores)} scores, "
                                 f"need at least {MIN_BENCHMARK_ENTRIES}")
        out[letter] = [float(s) for s in scores]
    return out


def stars_for(score: float, reference: Sequence[float]) -> int:
    if len(reference) < MIN_BENCHMARK_ENTRIES:
        raise BenchmarkError(f"need at least {MIN_BENCHMARK_ENTRIES} reference scores")
    ref = np.asarray(reference, dtype=float)
    for stars, pct in STAR_PERCENTILES:
        if score >= np.percentile(ref, pct):
            return stars
    return 1


def bch_stars(
    scores: Mapping[str, float | None], benchmark: Mapping[str, Sequence[float]]
) -> tuple[dict[str, int], int | None]:
    """Per-guideline stars and their rounded (half-up) mean."""
    stars = {g: stars_for(s, benchmark[g]) for g, s in sorted(scores.items())
             if s is not None and g in benchmark}
    if not stars:
        return stars, None
    mean = sum(stars.values()) / len(stars)
    return stars, int(math.floor(mean + 0.5))


def bch_model(
    metrics: CodebaseMetrics,
    violations: Iterable[Violation],
    params: BchParams = BchParams(),
    benchmark: Mapping[str, Sequence[float]] | None = None,
) -> ModelResult:
    guidelines = bch_guidelines(metrics, violations, params)
    assessed = [g for g in guidelines.values() if g.compliant is not None]
    result = ModelResult(model_id="bch")
    table = {k: {"name": g.name, "compliant": g.compliant, "score": g.score, "basis": g.basis}
             for k, g in guidelines.items()}
    result.intermediates["guidelines"] = table
    result.intermediates["compliant"] = sum(1 for g in assessed if g.compliant)
    result.intermediates["assessable"] = len(assessed)
    result.intermediates["compliance_ratio"] = (
        result.intermediates["compliant"] / len(assessed) if assessed else None)
    if benchmark is None:
        result.notes.append("no benchmark supplied: stars omitted")
    else:
        stars, overall = bch_stars({k: g.score for k, g in guidelines.items()}, benchmark)
        for k, s in stars.items():
            table[k]["stars"] = s
        result.rating = overall
    result.notes.append("guidelines b-h are scored by declared proxies")
    return result

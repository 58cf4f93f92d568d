"""Cross-model comparison report and its JSON / text renderings."""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from scipy.stats import rankdata

from .behavioral import CouplingPair, HotspotEntry
from .models.result import ModelResult
from .rules import Violation, violation_counts

FORMATS = ("json", "text")

# best-to-worst label order for every model that grades files
RATING_ORDERS: dict[str, tuple[str, ...]] = {
    "climate": ("A", "B", "C", "D", "F"),
    "ndepend": ("A", "B", "C", "D", "E"),
    "sonar": ("A", "B", "C", "D", "E"),
    "vsmi": ("high", "moderate", "low"),
}

# method choices that are not constants and so never show up as config keys
METHOD_NOTES = (
    "Halstead volume uses the natural logarithm; an empty or one-symbol vocabulary gives 0",
    "cyclomatic complexity: decisions + 1 (visual studio) and decisions (aip)",
    "sonar range effort categories are charged at their midpoints",
    "sonar rating upper edges are inclusive, closing the gaps between published ranges",
    "ndepend annual interest per issue: band midpoint, lower bound for the open blocker band",
    "bch guidelines b-h use declared proxies; i and j are not assessable; overall stars are "
    "the half-up rounded mean",
    "codescene coupling degree = shared commits / mean commits of the two files",
    "report rank agreement: Spearman coefficient over files both models score",
)


class UsageError(ValueError):
    pass


@dataclass
class ComparisonReport:
    models: dict[str, ModelResult] = field(default_factory=dict)
    codebase_ratings: dict[str, Any] = field(default_factory=dict)
    per_file_ratings: dict[str, dict[str, str]] = field(default_factory=dict)
    rank_correlations: dict[str, dict[str, float | None]] = field(default_factory=dict)
    rating_spread: dict[str, float] = field(default_factory=dict)
    violations: list[dict[str, Any]] = field(default_factory=list)
    violation_counts: dict[str, int] = field(default_factory=dict)
    hotspots: list[dict[str, Any]] = field(default_factory=list)
    couplings: list[dict[str, Any]] = field(default_factory=list)
    provenance: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        data = dataclasses.asdict(self)
        data["models"] = {k: v.to_dict() for k, v in self.models.items()}
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ComparisonReport":
        data = dict(data)
        data["models"] = {k: ModelResult.from_dict(v) for k, v in data["models"].items()}
        return cls(**data)


def spearman(x: Sequence[float], y: Sequence[float]) -> float | None:
    """Rank correlation with average ranks for ties; None when undefined."""
    if len(x) != len(y):
        raise ValueError("sequences differ in length")
    if len(x) < 2:
        return None
    rx, ry = rankdata(x), rankdata(y)
    mx, my = sum(rx) / len(rx), sum(ry) / len(ry)
    cov = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    vx = sum((a - mx) ** 2 for a in rx)
    vy = sum((b - my) ** 2 for b in ry)
    if vx == 0 or vy == 0:
        return None
    return max(-1.0, min(1.0, float(cov / math.sqrt(vx * vy))))


def rank_matrix(results: Sequence[ModelResult]) -> dict[str, dict[str, float | None]]:
    matrix: dict[str, dict[str, float | None]] = {}
    for a in results:
        row: dict[str, float | None] = {}
        for b in results:
            if a.model_id == b.model_id:
                row[b.model_id] = 1.0
                continue
            common = sorted(set(a.per_file) & set(b.per_file))
            row[b.model_id] = spearman([a.per_file[p] for p in common],
                                       [b.per_file[p] for p in common])
        matrix[a.model_id] = row
    return matrix


def normalized_rank(model_id: str, label: str) -> float:
    order = RATING_ORDERS[model_id]
    return order.index(label) / (len(order) - 1)


def build_report(
    results: Iterable[ModelResult],
    violations: Iterable[Violation],
    hotspots: Iterable[HotspotEntry] = (),
    couplings: Iterable[CouplingPair] = (),
    provenance: Iterable[dict[str, Any]] = (),
    notes: Iterable[str] = (),
) -> ComparisonReport:
    results = sorted(results, key=lambda r: r.model_id)
    if not results:
        raise ValueError("at least one model result is required")
    ids = [r.model_id for r in results]
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate model results: {ids}")
    violations = sorted(violations, key=Violation.sort_key)

    per_file: dict[str, dict[str, str]] = {}
    for r in results:
        if r.model_id not in RATING_ORDERS:
            continue
        for path, label in r.per_file_rating.items():
            per_file.setdefault(path, {})[r.model_id] = label
    spread = {}
    for path, labels in sorted(per_file.items()):
        ranks = [normalized_rank(m, lab) for m, lab in labels.items()]
        spread[path] = max(ranks) - min(ranks)

    return ComparisonReport(
        models={r.model_id: r for r in results},
        codebase_ratings={r.model_id: r.rating for r in results},
        per_file_ratings={p: dict(sorted(v.items())) for p, v in sorted(per_file.items())},
        rank_correlations=rank_matrix(results),
        rating_spread=spread,
        violations=[dataclasses.asdict(v) for v in violations],
        violation_counts=violation_counts(violations),
        hotspots=[dataclasses.asdict(h) for h in hotspots],
        couplings=[dataclasses.asdict(c) for c in couplings],
        provenance=[*provenance, *({"key": "method", "value": "", "source": "method",
                                    "note": n} for n in METHOD_NOTES)],
        notes=list(notes),
    )


def render(report: ComparisonReport, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), sort_keys=True, indent=2, allow_nan=False) + "\n").encode()
    if fmt == "text":
        return _render_text(report).encode()
    raise UsageError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def _num(x: Any, unit: str = "") -> str:
    if x is None:
        return "n/a"
    if isinstance(x, float):
        return f"{x:,.2f}{unit}"
    return f"{x}{unit}"


def _render_text(report: ComparisonReport) -> str:
    out: list[str] = []
    w = out.append
    w("Technical debt / maintainability comparison")
    w("=" * 44)
    w("")
    w(f"{'model':<10} {'TD (min)':>12} {'TD (money)':>12} {'ratio':>8}  rating")
    for mid, r in report.models.items():
        ratio = "n/a" if r.ratio is None else f"{r.ratio:.4f}"
        rating = "-" if r.rating is None else str(r.rating)
        w(f"{mid:<10} {_num(r.td_time):>12} {_num(r.td_money):>12} {ratio:>8}  {rating}")
    w("")
    for mid, r in report.models.items():
        w(f"[{mid}]")
        for key, value in sorted(r.intermediates.items()):
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
                if len(value) > 100:
                    value = value[:97] + "..."
            w(f"  {key}: {value}")
        for note in r.notes:
            w(f"  note: {note}")
        w("")

    w("Violations by rule")
    for rule_id, n in report.violation_counts.items():
        w(f"  {rule_id:<26} {n}")
    if not report.violation_counts:
        w("  none")
    w("")

    if report.per_file_ratings:
        models = sorted({m for v in report.per_file_ratings.values() for m in v})
        w("Per-file ratings (spread: 0 = all models agree, 1 = opposite ends)")
        w(f"  {'file':<32}" + "".join(f"{m:>10}" for m in models) + f"{'spread':>8}")
        for path, labels in report.per_file_ratings.items():
            cells = "".join(f"{labels.get(m, '-'):>10}" for m in models)
            w(f"  {path:<32}{cells}{report.rating_spread[path]:>8.2f}")
        w("")

    ids = list(report.rank_correlations)
    w("Rank agreement of per-file debt orderings")
    w("  " + " " * 10 + "".join(f"{m:>10}" for m in ids))
    for a in ids:
        row = report.rank_correlations[a]
        w(f"  {a:<10}" + "".join(f"{'n/a' if row[b] is None else format(row[b], '.2f'):>10}"
                                 for b in ids))
    w("")

    if report.hotspots:
        w("Hotspots")
        for h in report.hotspots:
            w(f"  {h['path']:<32} loc={h['loc']} commits={h['commit_count']} score={h['score']}")
        w("")
    if report.couplings:
        w("Temporal coupling")
        for c in report.couplings:
            w(f"  {c['path_a']} <-> {c['path_b']}  shared={c['shared_commits']} "
              f"degree={c['degree']:.3f}")
        w("")

    w("Constants and methods not taken from vendor documentation")
    for p in report.provenance:
        if p["source"] == "method":
            w(f"  [method] {p['note']}")
            continue
        value = f" = {p['value']}" if p["value"] else ""
        note = f"  ({p['note']})" if p["note"] else ""
        w(f"  [{p['source']}] {p['key']}{value}{note}")
    if report.notes:
        w("")
        w("Notes")
        for n in report.notes:
            w(f"  {n}")
    return "\n".join(out) + "\n"

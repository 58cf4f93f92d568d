"""Rule catalog and the evaluator that turns metrics into violations."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Iterable

from .frontend import IDENTICAL, SIMILAR, CodebaseMetrics, FileMetrics, detect_clones

CHARACTERISTICS = ("maintainability", "reliability", "efficiency", "security", "portability")
AIP_SEVERITIES = ("low", "medium", "high")
KIUWAN_PRIORITIES = ("very_hard", "hard", "normal", "easy", "very_easy")
NDEPEND_SEVERITIES = ("info", "minor", "major", "critical", "blocker")
SONAR_EFFORTS = ("trivial", "easy", "medium", "major", "high", "complex")
SQUORE_COSTS = ("tiny", "low", "medium", "high", "huge")
CLIMATE_CHECKS = (
    "argument_count", "complex_logic", "file_length", "identical_blocks", "unit_complexity",
    "unit_count", "method_length", "nested_control_flow", "return_statements", "similar_blocks",
)

# (scope, metric) pairs the evaluator knows how to measure
UNIT_METRICS = ("loc", "cc_original", "param_count", "max_nesting", "return_count", "bool_op_max")
FILE_METRICS = ("loc", "unit_count")
SCOPES = ("unit", "file", "clone", "comment", "condition")


@dataclass(frozen=True)
class Rule:
    id: str
    description: str
    scope: str
    metric: str
    threshold: float
    # breach when measured >= threshold (True) or measured > threshold (False)
    inclusive: bool
    characteristic: str
    aip_severity: str
    kiuwan_priority: str
    ndepend_severity: str
    ndepend_debt_minutes: float
    sonar_effort: str
    squore_cost: str
    climate_check: str | None
    enabled: bool = True

    def breached(self, value: float) -> bool:
        return value >= self.threshold if self.inclusive else value > self.threshold

    @property
    def needs_minisrc(self) -> bool:
        if self.scope == "clone":
            return self.metric == SIMILAR
        if self.scope == "file":
            return self.metric == "unit_count"
        return True


@dataclass(frozen=True)
class Violation:
    rule_id: str
    path: str
    line: int
    measured_value: float
    unit_name: str | None = None
    detail: str = ""

    def sort_key(self) -> tuple:
        return (self.path, self.line, self.rule_id, self.unit_name or "",
                self.measured_value, self.detail)


@dataclass(frozen=True)
class SkippedCheck:
    rule_id: str
    path: str
    reason: str


def default_catalog() -> list[Rule]:
    """The twelve built-in checks with their default thresholds and metadata."""
    m = "maintainability"
    return [
        Rule("long-unit", "Unit has too many lines of code",
             "unit", "loc", 60, False, m, "medium", "hard", "major", 30, "medium", "medium",
             "method_length"),
        Rule("high-cc", "Avoid units with high cyclomatic complexity",
             "unit", "cc_original", 20, False, m, "medium", "hard", "critical", 60, "major", "high",
             "unit_complexity"),
        Rule("too-many-args", "Unit takes too many arguments",
             "unit", "param_count", 4, False, m, "low", "normal", "minor", 10, "easy", "low",
             "argument_count"),
        Rule("deep-nesting", "Control flow is nested too deeply",
             "unit", "max_nesting", 3, False, m, "medium", "normal", "major", 20, "medium", "medium",
             "nested_control_flow"),
        Rule("too-many-returns", "Unit has too many return statements",
             "unit", "return_count", 4, False, m, "low", "normal", "minor", 10, "easy", "low",
             "return_statements"),
        Rule("complex-boolean", "Boolean expression has too many operators",
             "unit", "bool_op_max", 3, False, m, "medium", "normal", "major", 15, "easy", "low",
             "complex_logic"),
        Rule("long-file", "File has too many lines of code",
             "file", "loc", 750, False, m, "low", "very_hard", "major", 120, "high", "high",
             "file_length"),
        Rule("too-many-units", "File defines too many units",
             "file", "unit_count", 20, False, m, "low", "hard", "major", 60, "major", "high",
             "unit_count"),
        Rule("identical-clone", "Identical blocks of code",
             "clone", IDENTICAL, 6, True, m, "high", "normal", "major", 30, "medium", "medium",
             "identical_blocks"),
        Rule("similar-clone", "Structurally similar blocks of code",
             "clone", SIMILAR, 6, True, m, "medium", "hard", "minor", 45, "major", "medium",
             "similar_blocks"),
        Rule("commented-out-code", "Commented-out source code is not allowed",
             "comment", "tokens", 3, True, m, "low", "very_easy", "info", 2, "trivial", "tiny",
             None),
        Rule("assignment-in-condition", "Avoid assignments inside conditional expressions",
             "condition", "assignments", 1, True, "reliability", "high", "easy", "critical", 5,
             "trivial", "low", None),
    ]


def catalog_index(catalog: Iterable[Rule]) -> dict[str, Rule]:
    index: dict[str, Rule] = {}
    for rule in catalog:
        if rule.id in index:
            raise ValueError(f"duplicate rule id {rule.id!r}")
        index[rule.id] = rule
    return index


def with_overrides(catalog: list[Rule], overrides: dict[str, dict]) -> list[Rule]:
    """Apply per-rule field overrides, e.g. {"long-unit": {"threshold": 80}}."""
    index = catalog_index(catalog)
    unknown = set(overrides) - set(index)
    if unknown:
        raise KeyError(f"unknown rule id(s): {', '.join(sorted(unknown))}")
    return [dataclasses.replace(r, **overrides.get(r.id, {})) for r in catalog]


def skipped_checks(metrics: CodebaseMetrics, catalog: list[Rule]) -> list[SkippedCheck]:
    """(rule, file) combinations that cannot be evaluated in text mode."""
    skipped = []
    for f in sorted(metrics.files, key=lambda f: f.path):
        if f.is_minisrc:
            continue
        for rule in catalog:
            if rule.enabled and rule.needs_minisrc:
                skipped.append(SkippedCheck(rule.id, f.path,
                                            f"{rule.scope}:{rule.metric} unavailable in text mode"))
    return skipped


def evaluate(metrics: CodebaseMetrics, catalog: list[Rule]) -> list[Violation]:
    """One violation per (enabled rule, offending location), ordered by path, line, rule."""
    catalog_index(catalog)
    out: list[Violation] = []
    for rule in catalog:
        if not rule.enabled:
            continue
        if rule.scope == "clone":
            out.extend(_clone_violations(metrics, rule))
            continue
        for f in metrics.files:
            if rule.needs_minisrc and not f.is_minisrc:
                continue
            out.extend(_file_violations(f, rule))
    out.sort(key=Violation.sort_key)
    return out


def _file_violations(f: FileMetrics, rule: Rule) -> Iterable[Violation]:
    if rule.scope == "unit":
        for u in f.units:
            value = getattr(u, rule.metric)
            if rule.breached(value):
                yield Violation(rule.id, f.path, u.start_line, value, u.name)
    elif rule.scope == "file":
        value = len(f.units) if rule.metric == "unit_count" else getattr(f, rule.metric)
        if rule.breached(value):
            yield Violation(rule.id, f.path, 1, value)
    elif rule.scope == "comment":
        for line, count in f.commented_code:
            if rule.breached(count):
                yield Violation(rule.id, f.path, line, count, _unit_at(f, line))
    elif rule.scope == "condition":
        for line, count, unit in f.condition_assignments:
            if rule.breached(count):
                yield Violation(rule.id, f.path, line, count, unit)
    else:
        raise ValueError(f"rule {rule.id!r} has unknown scope {rule.scope!r}")


def _clone_violations(metrics: CodebaseMetrics, rule: Rule) -> Iterable[Violation]:
    # window = smallest block length that breaches
    window = int(rule.threshold) if rule.inclusive else int(rule.threshold) + 1
    window = max(window, 2)
    for pair in detect_clones(metrics.files, window, rule.metric):
        if rule.metric == SIMILAR and pair.textual:
            continue  # reported by the identical-clone check
        if not rule.breached(pair.length):
            continue
        a, b = pair.first, pair.second
        f = metrics.file(b.path)
        yield Violation(rule.id, b.path, b.start_line, pair.length,
                        _unit_at(f, b.start_line) if f else None,
                        f"{a.path}:{a.start_line}-{a.end_line}")


def _unit_at(f: FileMetrics, line: int) -> str | None:
    for u in f.units:
        if u.start_line <= line <= u.end_line:
            return u.name
    return None


def violation_counts(violations: Iterable[Violation]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for v in violations:
        counts[v.rule_id] = counts.get(v.rule_id, 0) + 1
    return dict(sorted(counts.items()))

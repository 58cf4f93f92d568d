"""Severity-weighted debt in currency and the SEI maintainability indices."""

from __future__ import annotations

import math
from typing import Iterable, Mapping

from ..frontend import CodebaseMetrics
from ..rules import Rule, Violation
from .params import AipParams
from .result import MetricDomainError, ModelResult, per_file_sum

SEVERITIES = ("low", "medium", "high")


def aip_td(
    violations: Iterable[Violation],
    catalog: Mapping[str, Rule],
    params: AipParams = AipParams(),
    files: Iterable[str] = (),
) -> ModelResult:
    """Debt = (sum over severities of ratio * count * hours) * hourly staff cost."""
    violations = list(violations)
    ratio = {s: getattr(params, f"r_{s}") for s in SEVERITIES}
    hours = {s: getattr(params, f"t_{s}") for s in SEVERITIES}
    counts = {s: 0 for s in SEVERITIES}
    for v in violations:
        counts[catalog[v.rule_id].aip_severity] += 1

    td_hours = sum(ratio[s] * counts[s] * hours[s] for s in SEVERITIES)

    def minutes(v: Violation) -> float:
        s = catalog[v.rule_id].aip_severity
        return ratio[s] * hours[s] * 60.0

    intermediates = {f"n_{s}": counts[s] for s in SEVERITIES}
    intermediates.update({f"r_{s}": ratio[s] for s in SEVERITIES})
    intermediates.update({f"t_{s}_hours": hours[s] for s in SEVERITIES})
    intermediates["c_staff_hour"] = params.c_staff_hour
    intermediates["td_hours"] = td_hours
    return ModelResult(
        model_id="aip",
        td_time=td_hours * 60.0,
        td_money=td_hours * params.c_staff_hour,
        intermediates=intermediates,
        per_file=per_file_sum(violations, minutes, files),
    )


def mi_sei(v_hal: float, cc: float, loc: float, r_comment: float = 0.0) -> tuple[float, float]:
    """(MI without comments, MI with the comment-ratio correction)."""
    if v_hal <= 0:
        raise MetricDomainError("V_Hal_avg", v_hal)
    if loc <= 0:
        raise MetricDomainError("LOC_avg", loc)
    if r_comment < 0:
        raise MetricDomainError("r_comment_avg", r_comment, ">= 0")
    mi3 = 171.0 - 5.2 * math.log(v_hal) - 0.23 * cc - 16.2 * math.log(loc)
    mi4 = mi3 - 50.0 * math.sin(math.sqrt(2.4 * r_comment))
    return mi3, mi4


def aip_mi(metrics: CodebaseMetrics) -> tuple[float, float]:
    """MI_SEI_3 and MI_SEI_4 from the per-module averages (CC in the e - n + p form)."""
    return mi_sei(metrics.v_hal_avg, metrics.cc_avg, metrics.loc_avg, metrics.comment_ratio_avg)


def aip_model(
    metrics: CodebaseMetrics,
    violations: Iterable[Violation],
    catalog: Mapping[str, Rule],
    params: AipParams = AipParams(),
) -> ModelResult:
    result = aip_td(violations, catalog, params, files=[f.path for f in metrics.files])
    result.intermediates.update(
        v_hal_avg=metrics.v_hal_avg,
        cc_avg=metrics.cc_avg,
        loc_avg=metrics.loc_avg,
        comment_ratio_avg=metrics.comment_ratio_avg,
    )
    try:
        mi3, mi4 = aip_mi(metrics)
    except MetricDomainError as exc:
        result.intermediates.update(mi_sei3=None, mi_sei4=None)
        result.notes.append(f"maintainability index undefined: {exc}")
    else:
        result.intermediates.update(mi_sei3=mi3, mi_sei4=mi4)
    return result

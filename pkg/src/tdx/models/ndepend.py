"""Per-issue debt in man-days, annual interest, and the SQALE-style A-E rating."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..rules import Rule, Violation
from .params import EffortMaps, NDependParams
from .result import ModelResult, clamp01, exact_ratio, per_file_sum


def dev_cost_minutes(lloc: int, params: NDependParams = NDependParams()) -> float:
    return lloc * params.dev_minutes_per_lloc


def ndepend_td(
    violations: Iterable[Violation],
    catalog: Mapping[str, Rule],
    lloc: int,
    params: NDependParams = NDependParams(),
    efforts: EffortMaps = EffortMaps(),
    file_lloc: Mapping[str, int] | None = None,
) -> ModelResult:
    violations = list(violations)

    def debt(v: Violation) -> float:
        return catalog[v.rule_id].ndepend_debt_minutes

    c_rem = sum(debt(v) for v in violations)
    interest = sum(efforts.ndepend_interest(catalog[v.rule_id].ndepend_severity)
                   for v in violations)
    by_severity: dict[str, int] = {}
    for v in violations:
        sev = catalog[v.rule_id].ndepend_severity
        by_severity[sev] = by_severity.get(sev, 0) + 1
    c_dev = dev_cost_minutes(lloc, params)
    t_work = params.t_work_minutes

    result = ModelResult(
        model_id="ndepend",
        td_time=c_rem,
        td_money=c_rem / 60.0 * params.price_per_hour,
        intermediates={
            "c_rem_minutes": c_rem,
            "td_man_days": c_rem / t_work,
            "c_dev_minutes": c_dev,
            "c_dev_man_days": c_dev / t_work,
            "t_work_minutes": t_work,
            "price_per_hour": params.price_per_hour,
            "lloc": lloc,
            "annual_interest_minutes": interest,
            "issues_by_severity": dict(sorted(by_severity.items())),
        },
        per_file=per_file_sum(violations, debt, file_lloc or ()),
    )
    result.notes.append("annual interest uses band midpoints (open-ended band: lower bound)")
    if lloc <= 0:
        result.notes.append("LLOC is 0: TD ratio undefined, no rating")
    else:
        result.ratio = clamp01(exact_ratio(c_rem, lloc, params.dev_minutes_per_lloc))
        result.rating = params.scale.rate(result.ratio)
    for path, size in (file_lloc or {}).items():
        if size > 0:
            ratio = clamp01(exact_ratio(result.per_file.get(path, 0.0), size,
                                        params.dev_minutes_per_lloc))
            result.per_file_rating[path] = params.scale.rate(ratio)
    return result

"""Code-smell remediation cost and the maintainability (SQALE) rating."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..rules import Rule, Violation
from .params import EffortMaps, SonarParams
from .result import ModelResult, clamp01, exact_ratio, per_file_sum


def sonar_td(
    violations: Iterable[Violation],
    catalog: Mapping[str, Rule],
    loc: int,
    efforts: EffortMaps = EffortMaps(),
    params: SonarParams = SonarParams(),
    file_loc: Mapping[str, int] | None = None,
) -> ModelResult:
    violations = list(violations)

    def effort(v: Violation) -> float:
        return efforts.sonar_minutes(catalog[v.rule_id].sonar_effort)

    c_rem = sum(effort(v) for v in violations)
    per_line = params.c_per_line_minutes
    result = ModelResult(
        model_id="sonar",
        td_time=c_rem,
        intermediates={
            "c_rem_minutes": c_rem,
            "td_man_days": c_rem / params.manday_minutes,
            "c_per_line_days": params.c_per_line_days,
            "c_per_line_minutes": per_line,
            "loc": loc,
        },
        per_file=per_file_sum(violations, effort, file_loc or ()),
    )
    result.notes.append("range effort categories use their midpoints")
    if loc <= 0:
        result.notes.append("LOC is 0: TD ratio undefined, no rating")
    else:
        result.ratio = clamp01(exact_ratio(c_rem, params.c_per_line_days, params.manday_minutes, loc))
        result.rating = params.scale.rate(result.ratio)
    for path, size in (file_loc or {}).items():
        if size > 0:
            ratio = clamp01(exact_ratio(result.per_file.get(path, 0.0), params.c_per_line_days,
                                        params.manday_minutes, size))
            result.per_file_rating[path] = params.scale.rate(ratio)
    return result

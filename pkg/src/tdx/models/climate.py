"""Remediation-time over implementation-time ratio with an A-F grade (no E)."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..rules import Rule, Violation
from .params import ClimateParams
from .result import ModelResult, clamp01, exact_ratio, per_file_sum


def climate_td(
    violations: Iterable[Violation],
    catalog: Mapping[str, Rule],
    loc: int,
    params: ClimateParams = ClimateParams(),
    file_loc: Mapping[str, int] | None = None,
) -> ModelResult:
    """t_TD sums the per-check minutes of violations mapped to one of the ten checks.

    ``file_loc`` (path -> LOC) enables per-file ratios and grades.
    """
    checked = [v for v in violations if catalog[v.rule_id].climate_check is not None]

    def minutes(v: Violation) -> float:
        return params.check_minutes[catalog[v.rule_id].climate_check]

    t_td = sum(minutes(v) for v in checked)
    t_impl = loc * params.impl_minutes_per_loc
    result = ModelResult(
        model_id="climate",
        td_time=t_td,
        intermediates={
            "t_td": t_td,
            "t_est_impl": t_impl,
            "impl_minutes_per_loc": params.impl_minutes_per_loc,
            "checked_violations": len(checked),
        },
        per_file=per_file_sum(checked, minutes, file_loc or ()),
    )
    result.notes.append("per-check minutes and impl_minutes_per_loc are local defaults, "
                        "not vendor-published values")
    if loc <= 0:
        result.notes.append("LOC is 0: ratio undefined, no rating")
    else:
        result.ratio = clamp01(exact_ratio(t_td, loc, params.impl_minutes_per_loc))
        result.rating = params.scale.rate(result.ratio)
    for path, size in (file_loc or {}).items():
        if size > 0:
            ratio = clamp01(exact_ratio(result.per_file.get(path, 0.0), size,
                                        params.impl_minutes_per_loc))
            result.per_file_rating[path] = params.scale.rate(ratio)
    return result

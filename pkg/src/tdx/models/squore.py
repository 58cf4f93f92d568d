from __future__ import annotations

from typing import Iterable, Mapping

from ..rules import CHARACTERISTICS, Rule, Violation
from .params import EffortMaps, SquoreParams
from .result import ModelResult, per_file_sum


def squore_td(
    violations: Iterable[Violation],
    catalog: Mapping[str, Rule],
    efforts: EffortMaps = EffortMaps(),
    params: SquoreParams = SquoreParams(),
    files: Iterable[str] = (),
) -> ModelResult:
    """Sum of violation counts times remediation cost, split by quality characteristic.

    Maintainability is the share of that sum owed to maintainability rules.
    """
    violations = list(violations)

    def cost(v: Violation) -> float:
        return efforts.squore[catalog[v.rule_id].squore_cost]

    by_rule: dict[str, int] = {}
    for v in violations:
        by_rule[v.rule_id] = by_rule.get(v.rule_id, 0) + 1
    td = sum(n * efforts.squore[catalog[rid].squore_cost] for rid, n in sorted(by_rule.items()))
    by_char = {c: 0.0 for c in CHARACTERISTICS}
    for v in violations:
        by_char[catalog[v.rule_id].characteristic] += cost(v)
    return ModelResult(
        model_id="squore",
        td_time=td,
        intermediates={
            "td_man_days": td / params.manday_minutes,
            "manday_minutes": params.manday_minutes,
            "violations_by_rule": by_rule,
            "td_by_characteristic": by_char,
            "maintainability_minutes": by_char["maintainability"],
        },
        per_file=per_file_sum(violations, cost, files),
    )

"""Priority-weighted effort over all defects; maintainability as a defect count."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

from ..rules import Rule, Violation
from .params import EffortMaps
from .result import ModelResult, per_file_sum


def kiuwan_td(
    violations: Iterable[Violation],
    catalog: Mapping[str, Rule],
    efforts: EffortMaps = EffortMaps(),
    files: Iterable[str] = (),
) -> ModelResult:
    violations = list(violations)

    def effort(v: Violation) -> float:
        return efforts.kiuwan[catalog[v.rule_id].kiuwan_priority]

    td = sum(effort(v) for v in violations)
    by_char = Counter(catalog[v.rule_id].characteristic for v in violations)
    by_priority = Counter(catalog[v.rule_id].kiuwan_priority for v in violations)
    return ModelResult(
        model_id="kiuwan",
        td_time=td,
        intermediates={
            "td_hours": td / 60.0,
            "defects": len(violations),
            "maintainability_defects": by_char.get("maintainability", 0),
            "defects_by_characteristic": dict(sorted(by_char.items())),
            "defects_by_priority": dict(sorted(by_priority.items())),
        },
        per_file=per_file_sum(violations, effort, files),
    )

"""Normalized 0-100 maintainability index with three display levels."""

from __future__ import annotations

import math
from statistics import fmean

from ..frontend import CodebaseMetrics, FileMetrics, UnitMetrics
from .result import MetricDomainError, ModelResult

LEVELS = ("high", "moderate", "low")


def vs_mi_value(v_hal: float, cc: float, loc: float) -> float:
    if v_hal <= 0:
        raise MetricDomainError("V_Hal", v_hal)
    if loc <= 0:
        raise MetricDomainError("LOC", loc)
    raw = 171.0 - 5.2 * math.log(v_hal) - 0.232 * cc - 16.22 * math.log(loc)
    # V < 1 or LOC < 1 (possible only for averages) would push past 100
    return min(100.0, max(0.0, raw * 100.0 / 171.0))


def vs_level(mi: float) -> str:
    band = math.floor(mi)
    if band >= 20:
        return "high"
    if band >= 10:
        return "moderate"
    return "low"


def vs_mi(scope: UnitMetrics | FileMetrics) -> tuple[float, str]:
    """MI and level for one unit or file; CC in the e - n + 2p form."""
    if isinstance(scope, FileMetrics) and not scope.is_minisrc:
        raise MetricDomainError("V_Hal", 0.0, "> 0 (text-mode file has no Halstead volume)")
    mi = vs_mi_value(scope.halstead_volume, scope.cc_original, scope.loc)
    return mi, vs_level(mi)


def vsmi_model(metrics: CodebaseMetrics) -> ModelResult:
    """Per-file index; the codebase value is the mean over scorable files."""
    result = ModelResult(model_id="vsmi")
    file_mi: dict[str, float] = {}
    for f in sorted(metrics.modules, key=lambda f: f.path):
        try:
            mi, level = vs_mi(f)
        except MetricDomainError as exc:
            result.notes.append(f"{f.path}: skipped, {exc}")
            continue
        file_mi[f.path] = mi
        result.per_file_rating[f.path] = level
        # ordering key: lower index means more debt
        result.per_file[f.path] = 100.0 - mi

    unit_levels = {lv: 0 for lv in LEVELS}
    for _, u in metrics.units:
        try:
            unit_levels[vs_mi(u)[1]] += 1
        except MetricDomainError:
            continue
    result.intermediates = {"file_mi": file_mi, "unit_levels": unit_levels}
    if file_mi:
        mean = fmean(file_mi.values())
        result.intermediates["mi"] = mean
        result.rating = vs_level(mean)
    else:
        result.intermediates["mi"] = None
        result.notes.append("no file with a defined index")
    return result

"""The measurement models, each a pure function returning a ModelResult."""

from .aip import aip_mi, aip_model, aip_td, mi_sei
from .bch import (
    BenchmarkError,
    bch_guidelines,
    bch_model,
    bch_stars,
    load_benchmark,
    short_units_compliant,
    stars_for,
    unit_size_profile,
)
from .climate import climate_td
from .codescene import codescene_model
from .kiuwan import kiuwan_td
from .ndepend import dev_cost_minutes, ndepend_td
from .params import (
    AipParams,
    BchParams,
    ClimateParams,
    CodesceneParams,
    EffortMaps,
    NDependParams,
    SonarParams,
    SquoreParams,
    climate_scale,
    ndepend_scale,
    sonar_scale,
)
from .result import MetricDomainError, ModelResult, RatingScale
from .sonar import sonar_td
from .squore import squore_td
from .vsmi import vs_level, vs_mi, vs_mi_value, vsmi_model

__all__ = [
    "AipParams", "BchParams", "BenchmarkError", "ClimateParams", "CodesceneParams",
    "EffortMaps", "MetricDomainError", "ModelResult", "NDependParams", "RatingScale",
    "SonarParams", "SquoreParams",
    "aip_mi", "aip_model", "aip_td", "bch_guidelines", "bch_model", "bch_stars",
    "climate_scale", "climate_td", "codescene_model", "dev_cost_minutes", "kiuwan_td",
    "load_benchmark", "mi_sei", "ndepend_scale", "ndepend_td", "short_units_compliant",
    "sonar_scale", "sonar_td", "squore_td", "stars_for", "unit_size_profile", "vs_level",
    "vs_mi", "vs_mi_value", "vsmi_model",
]

import math

import pytest

from tdx.frontend import CodebaseMetrics, analyze_file
from tdx.models import (
    AipParams,
    BchParams,
    ClimateParams,
    EffortMaps,
    MetricDomainError,
    NDependParams,
    RatingScale,
    SonarParams,
    aip_model,
    aip_td,
    bch_guidelines,
    bch_model,
    bch_stars,
    climate_scale,
    climate_td,
    dev_cost_minutes,
    kiuwan_td,
    mi_sei,
    ndepend_td,
    short_units_compliant,
    sonar_td,
    squore_td,
    stars_for,
    unit_size_profile,
    vs_level,
    vs_mi,
    vs_mi_value,
    vsmi_model,
)
from tdx.models.result import exact_ratio
from tdx.rules import Violation, catalog_index, default_catalog, with_overrides

CAT = catalog_index(default_catalog())


def vs(rule_id, n, path="a.ms"):
    return [Violation(rule_id, path, i + 1, 0) for i in range(n)]


# -- aip ---------------------------------------------------------------------

def aip_counts(n_med, n_high):
    # deep-nesting is medium, identical-clone is high
    return vs("deep-nesting", n_med) + vs("identical-clone", n_high)


def test_aip_default_example():
    r = aip_td(aip_counts(100, 10), CAT)
    assert r.td_money == pytest.approx(5557.50, rel=1e-12)
    assert r.intermediates["n_medium"] == 100 and r.intermediates["n_high"] == 10


def test_aip_no_violations():
    assert aip_td([], CAT).td_money == 0


def test_aip_low_severity_is_inert_by_default():
    assert aip_td(vs("too-many-args", 50), CAT).td_money == 0


def test_aip_doubling():
    base = aip_td(aip_counts(7, 3), CAT).td_money
    assert aip_td(aip_counts(14, 6), CAT).td_money == pytest.approx(2 * base, rel=1e-12)


def test_aip_configurable():
    r = aip_td(aip_counts(0, 1), CAT, AipParams(c_staff_hour=100))
    assert r.td_money == pytest.approx(256.0)


@pytest.mark.parametrize("bad", [{"r_low": 1.5}, {"t_high": -1}])
def test_aip_params_validated(bad):
    with pytest.raises(ValueError):
        AipParams(**bad)


def test_mi_sei_trivial_case():
    mi3, mi4 = mi_sei(1, 1, 1, 0)
    assert mi3 == pytest.approx(170.77, abs=1e-12)
    assert mi4 == mi3


def test_mi_sei_example():
    mi3, _ = mi_sei(8, 3, 20)
    assert mi3 == pytest.approx(171 - 5.2 * math.log(8) - 0.69 - 16.2 * math.log(20))
    assert round(mi3, 2) == 110.97


def test_mi_sei_comment_correction():
    mi3, mi4 = mi_sei(8, 3, 20, 0.1)
    assert mi3 - mi4 == pytest.approx(50 * math.sin(math.sqrt(0.24)))
    assert round(mi3 - mi4, 2) == 23.53


@pytest.mark.parametrize("args, symbol", [((0, 1, 1), "V_Hal_avg"), ((1, 1, 0), "LOC_avg")])
def test_mi_sei_domain(args, symbol):
    with pytest.raises(MetricDomainError, match=symbol):
        mi_sei(*args)


def test_aip_model_on_empty_codebase_notes_domain_error():
    r = aip_model(CodebaseMetrics([]), [], CAT)
    assert r.intermediates["mi_sei3"] is None
    assert any("V_Hal_avg" in n for n in r.notes)


# -- code climate ------------------------------------------------------------

def test_climate_zero_loc_flagged():
    r = climate_td(vs("too-many-args", 12), CAT, 0)
    assert r.rating is None and r.ratio is None
    assert any("LOC is 0" in n for n in r.notes)


def test_climate_ratio_at_a_edge():
    params = ClimateParams(impl_minutes_per_loc=24.0)
    r = climate_td(vs("too-many-args", 12), CAT, 100, params)  # 120 / 2400
    assert r.ratio == 0.05 and r.rating == "A"


def test_climate_zero_debt():
    r = climate_td([], CAT, 500)
    assert (r.ratio, r.rating) == (0, "A")


def test_climate_only_counts_mapped_checks():
    r = climate_td(vs("commented-out-code", 5) + vs("assignment-in-condition", 2), CAT, 10)
    assert r.td_time == 0


def test_climate_scale_f():
    assert climate_scale().rate(0.51) == "F"


def test_climate_ratio_clamped():
    r = climate_td(vs("long-file", 100), CAT, 1)
    assert r.ratio == 1.0 and r.rating == "F"


def test_climate_flags_local_defaults():
    assert any("local defaults" in n for n in climate_td([], CAT, 1).notes)


# -- kiuwan ------------------------------------------------------------------

def test_kiuwan_example():
    # long-file is very_hard, assignment-in-condition is easy
    r = kiuwan_td(vs("long-file", 2) + vs("assignment-in-condition", 4), CAT)
    assert r.td_time == 984


def test_kiuwan_empty():
    r = kiuwan_td([], CAT)
    assert r.td_time == 0 and r.intermediates["maintainability_defects"] == 0


def test_kiuwan_maintainability_defects():
    viol = vs("long-unit", 3) + vs("too-many-args", 2)
    assert kiuwan_td(viol, CAT).intermediates["maintainability_defects"] == 5
    viol += vs("assignment-in-condition", 1)
    assert kiuwan_td(viol, CAT).intermediates["maintainability_defects"] == 5


def test_kiuwan_effort_map():
    assert EffortMaps().kiuwan == {"very_hard": 480, "hard": 240, "normal": 30, "easy": 6,
                                   "very_easy": 3}


# -- ndepend -----------------------------------------------------------------

def test_ndepend_dev_cost():
    assert dev_cost_minutes(1000) == 8640
    assert dev_cost_minutes(1000) / NDependParams().t_work_minutes == 18


def test_ndepend_one_man_day():
    cat = catalog_index(with_overrides(default_catalog(),
                                       {"long-unit": {"ndepend_debt_minutes": 480}}))
    r = ndepend_td(vs("long-unit", 1), cat, 1000)
    assert r.intermediates["td_man_days"] == 1
    assert r.td_money == 8 * 50


def test_ndepend_ratio_example():
    cat = catalog_index(with_overrides(default_catalog(),
                                       {"long-unit": {"ndepend_debt_minutes": 864}}))
    r = ndepend_td(vs("long-unit", 1), cat, 1000)
    assert r.ratio == 0.1 and r.rating == "C"


def test_ndepend_zero_lloc_flagged():
    r = ndepend_td(vs("long-unit", 1), CAT, 0)
    assert r.ratio is None and r.rating is None and r.notes


def test_ndepend_interest_midpoints():
    # long-unit major (20-120 -> 70), high-cc critical (120-600 -> 360), info 0-2 -> 1
    r = ndepend_td(vs("long-unit", 2) + vs("high-cc", 1) + vs("commented-out-code", 1), CAT, 100)
    assert r.intermediates["annual_interest_minutes"] == 2 * 70 + 360 + 1
    assert EffortMaps().ndepend_interest("blocker") == 600


def test_ndepend_bands_must_increase():
    with pytest.raises(ValueError):
        EffortMaps(ndepend_interest_bands={"info": (5, 10), "minor": (2, 20)})


# -- sonarqube ---------------------------------------------------------------

def test_sonar_midpoints():
    e = EffortMaps()
    assert [e.sonar_minutes(c) for c in ("trivial", "easy", "medium", "major", "high", "complex")] \
        == [7.5, 15, 25, 60, 180, 480]


def test_sonar_c_per_line():
    assert SonarParams().c_per_line_days == 0.06
    assert SonarParams().c_per_line_minutes == 28.8


def test_sonar_example():
    # high-cc is a "major" (60 min) smell
    r = sonar_td(vs("high-cc", 4), CAT, 1000)
    assert r.td_time == 240
    assert r.ratio == pytest.approx(240 / 28800, rel=1e-12)
    assert r.rating == "A"


def test_sonar_no_smells():
    r = sonar_td([], CAT, 10)
    assert (r.ratio, r.rating) == (0, "A")


def test_sonar_exact_edge_not_nudged_by_float_product():
    r = sonar_td(vs("high-cc", 24), CAT, 1000)  # 1440 / 28800
    assert r.ratio == 0.05 and r.rating == "A"


def test_sonar_zero_loc():
    r = sonar_td(vs("high-cc", 1), CAT, 0)
    assert r.rating is None and r.notes


def test_exact_ratio():
    assert exact_ratio(864, 1000, 8.64) == 0.1
    assert exact_ratio(1440, 0.06, 480, 1000) == 0.05


# -- squore ------------------------------------------------------------------

def test_squore_example():
    cat = catalog_index(with_overrides(default_catalog(), {"long-file": {"squore_cost": "huge"}}))
    # long-unit, deep-nesting, identical-clone are medium cost
    viol = vs("long-unit", 1) + vs("deep-nesting", 1) + vs("identical-clone", 1) + vs("long-file", 1)
    assert squore_td(viol, cat).td_time == 570


def test_squore_zero():
    assert squore_td([], CAT).td_time == 0


def test_squore_maintainability_subset():
    viol = vs("long-unit", 2) + vs("assignment-in-condition", 3)
    r = squore_td(viol, CAT)
    assert r.intermediates["maintainability_minutes"] <= r.td_time
    assert r.intermediates["td_by_characteristic"]["reliability"] == 30


def test_squore_cost_map():
    assert EffortMaps().squore == {"tiny": 1, "low": 10, "medium": 30, "high": 60, "huge": 480}


# -- visual studio -----------------------------------------------------------

def test_vs_mi_trivial():
    mi = vs_mi_value(1, 1, 1)
    assert mi == pytest.approx((171 - 0.232) * 100 / 171)
    assert round(mi, 2) == 99.86 and vs_level(mi) == "high"


def test_vs_mi_clamped_to_zero():
    mi = vs_mi_value(1e30, 500, 1e9)
    assert mi == 0 and vs_level(mi) == "low"


@pytest.mark.parametrize("mi, level", [(19.4, "moderate"), (20.0, "high"), (19.99, "moderate"),
                                       (10.0, "moderate"), (9.99, "low"), (0, "low"), (100, "high")])
def test_vs_levels(mi, level):
    assert vs_level(mi) == level


def test_vs_mi_domain():
    with pytest.raises(MetricDomainError):
        vs_mi_value(0, 1, 1)
    with pytest.raises(MetricDomainError):
        vs_mi_value(1, 1, 0)


def test_vs_mi_uses_original_cc():
    f = analyze_file("a.ms", "fn f(a) {\n  if (a) {\n    a = 1;\n  }\n  return a;\n}\n", True)
    (u,) = f.units
    mi, _ = vs_mi(u)
    assert mi == pytest.approx(vs_mi_value(u.halstead_volume, u.cc_original, u.loc))


def test_vsmi_model_skips_text_files():
    files = [analyze_file("a.ms", "fn f(a) {\n  return a + 1;\n}\n", True),
             analyze_file("n.txt", "words\n", False)]
    r = vsmi_model(CodebaseMetrics(files))
    assert list(r.per_file_rating) == ["a.ms"]
    assert r.rating == "high"


# -- bch ---------------------------------------------------------------------

def test_bch_unit_profile_examples():
    p = unit_size_profile([10] * 8 + [20])
    assert p == pytest.approx((8 / 9, 1 / 9, 0, 0))
    assert short_units_compliant(p)
    assert not short_units_compliant(unit_size_profile([5, 5, 5, 40, 40, 40]))
    assert short_units_compliant(unit_size_profile([1, 15, 15]))


def test_bch_default_thresholds():
    p = BchParams()
    assert (p.min_short_share, p.max_share_bin2, p.max_share_bin3, p.max_share_bin4) == \
        (0.567, 0.214, 0.154, 0.069)


def test_bch_no_units_not_assessable():
    g = bch_guidelines(CodebaseMetrics([]), [])
    assert g["a"].compliant is None and g["i"].compliant is None and g["j"].compliant is None
    assert len(g) == 10


def test_bch_stars():
    bench = list(range(100))
    assert stars_for(1000, bench) == 5
    assert stars_for(-1, bench) == 1
    assert stars_for(49.5, bench) == 3


def test_bch_overall_is_rounded_mean():
    bench = {"a": list(range(100)), "b": list(range(100))}
    stars, overall = bch_stars({"a": 1000, "b": 49.5}, bench)  # 5 and 3
    assert stars == {"a": 5, "b": 3} and overall == 4
    stars, overall = bch_stars({"a": 1000, "b": 70}, bench)  # 5 and 4 -> 4.5 rounds up
    assert overall == 5


def test_bch_missing_benchmark_keeps_compliance():
    files = [analyze_file("a.ms", "fn f(a) {\n  return a;\n}\n", True)]
    r = bch_model(CodebaseMetrics(files), [])
    assert r.rating is None and r.intermediates["assessable"] == 8
    assert any("benchmark" in n for n in r.notes)


# -- rating scales -----------------------------------------------------------

def test_rating_scale_validates():
    with pytest.raises(ValueError):
        RatingScale(("A", "B", "C"), (0.2, 0.1), True)
    with pytest.raises(ValueError):
        RatingScale(("A", "B"), (0.1, 0.2), True)

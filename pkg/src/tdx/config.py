"""Sectioned key/value configuration (INI syntax).

Every tunable lives in one registry entry that records its default, how to
parse and validate it, and whether the default is a documented vendor value
("documented") or a local choice ("local"). Example::

    [analysis]
    models = sonar, ndepend

    [aip]
    c_staff_hour = 100

    [sonar]
    rating.A_max = 0.05

    [rule.long-unit]
    threshold = 80
"""

from __future__ import annotations

import configparser
import dataclasses
import io
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .models.params import (
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
from .rules import (
    AIP_SEVERITIES,
    CHARACTERISTICS,
    CLIMATE_CHECKS,
    KIUWAN_PRIORITIES,
    NDEPEND_SEVERITIES,
    SONAR_EFFORTS,
    SQUORE_COSTS,
    Rule,
    default_catalog,
)

MODEL_IDS = ("bch", "aip", "climate", "kiuwan", "ndepend", "sonar", "squore", "vsmi", "codescene")
DEFAULT_MODELS = tuple(m for m in MODEL_IDS if m != "codescene")
ENV_VAR = "TDX_CONFIG"

DOCUMENTED = "documented"
LOCAL = "local"


class ConfigError(ValueError):
    pass


# -- value codecs ---------------------------------------------------------


def _number(lo: float = -math.inf, hi: float = math.inf, integer: bool = False,
            lo_open: bool = False) -> Callable[[str], Any]:
    def parse(text: str) -> Any:
        try:
            value = int(text) if integer else float(text)
        except ValueError:
            kind = "an integer" if integer else "a number"
            raise ConfigError(f"expected {kind}, got {text!r}") from None
        below = value <= lo if lo_open else value < lo
        if below or value > hi:
            left = "(" if lo_open else "["
            raise ConfigError(f"expected value in {left}{lo:g}, {hi:g}], got {text}")
        return value
    return parse


def _range_pair(text: str) -> tuple[float, float]:
    parts = [p.strip() for p in text.split(",")]
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        raise ConfigError(f"expected 'min,max' or a single number, got {text!r}") from None
    if len(nums) == 1:
        nums = nums * 2
    if len(nums) != 2 or nums[0] < 0 or nums[1] < nums[0]:
        raise ConfigError(f"expected 0 <= min <= max, got {text!r}")
    return nums[0], nums[1]


def _choice(options: tuple[str, ...], optional: bool = False) -> Callable[[str], Any]:
    def parse(text: str) -> Any:
        if optional and text in ("", "none"):
            return None
        if text not in options:
            raise ConfigError(f"expected one of {', '.join(options)}, got {text!r}")
        return text
    return parse


def _boolean(text: str) -> bool:
    low = text.lower()
    if low in ("true", "yes", "on", "1"):
        return True
    if low in ("false", "no", "off", "0"):
        return False
    raise ConfigError(f"expected true or false, got {text!r}")


def _models(text: str) -> tuple[str, ...]:
    ids = tuple(m.strip() for m in text.split(",") if m.strip())
    bad = [m for m in ids if m not in MODEL_IDS]
    if bad:
        raise ConfigError(f"unknown model id(s) {', '.join(bad)}; valid ids: {', '.join(MODEL_IDS)}")
    if not ids:
        raise ConfigError(f"at least one model must be enabled; valid ids: {', '.join(MODEL_IDS)}")
    return tuple(dict.fromkeys(ids))


def _string_list(text: str) -> tuple[str, ...]:
    return tuple(s.strip() for s in text.split(",") if s.strip())


def _path(text: str) -> str | None:
    return text or None


def _fmt(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return repr(value)
    if isinstance(value, tuple):
        return ",".join(_fmt(v) for v in value)
    return str(value)


@dataclass(frozen=True)
class Key:
    default: Any
    parse: Callable[[str], Any]
    source: str
    note: str = ""


def _registry() -> dict[str, Key]:
    reg: dict[str, Key] = {}
    unit = _number(0.0, 1.0)
    nonneg = _number(0.0)
    positive = _number(0.0, lo_open=True)

    reg["analysis.models"] = Key(DEFAULT_MODELS, _models, LOCAL,
                                 "codescene joins the defaults when a commit log is given")
    reg["analysis.source_root"] = Key(None, _path, LOCAL)
    reg["analysis.commit_log"] = Key(None, _path, LOCAL)
    reg["analysis.benchmark"] = Key(None, _path, LOCAL)
    reg["analysis.minisrc_extensions"] = Key((".ms",), _string_list, LOCAL)
    reg["analysis.indent_width"] = Key(4, _number(1, integer=True), LOCAL)

    aip = AipParams()
    for sev in AIP_SEVERITIES:
        reg[f"aip.r_{sev}"] = Key(getattr(aip, f"r_{sev}"), unit, DOCUMENTED)
    reg["aip.t_low"] = Key(aip.t_low, nonneg, LOCAL, "inert while r_low = 0")
    reg["aip.t_medium"] = Key(aip.t_medium, nonneg, DOCUMENTED)
    reg["aip.t_high"] = Key(aip.t_high, nonneg, DOCUMENTED)
    reg["aip.c_staff_hour"] = Key(aip.c_staff_hour, nonneg, DOCUMENTED)

    climate = ClimateParams()
    reg["climate.impl_minutes_per_loc"] = Key(
        climate.impl_minutes_per_loc, positive, LOCAL,
        "vendor does not publish the implementation-time factor; borrows 0.06 day/line")
    for check, minutes in climate.check_minutes.items():
        reg[f"climate.check.{check}"] = Key(minutes, nonneg, LOCAL,
                                            "per-check remediation minutes are not published")
    for letter, bound in zip("ABCD", climate.scale.bounds):
        reg[f"climate.rating.{letter}_max"] = Key(bound, unit, DOCUMENTED)

    efforts = EffortMaps()
    for prio, minutes in efforts.kiuwan.items():
        reg[f"kiuwan.effort.{prio}"] = Key(minutes, nonneg, DOCUMENTED)

    nd = NDependParams()
    reg["ndepend.t_work_minutes"] = Key(nd.t_work_minutes, positive, DOCUMENTED)
    reg["ndepend.price_per_hour"] = Key(nd.price_per_hour, nonneg, DOCUMENTED)
    reg["ndepend.dev_minutes_per_lloc"] = Key(nd.dev_minutes_per_lloc, positive, DOCUMENTED)
    for letter, bound in zip("ABCD", nd.scale.bounds):
        reg[f"ndepend.rating.{letter}_max"] = Key(bound, unit, DOCUMENTED)
    for sev, band in efforts.ndepend_interest_bands.items():
        reg[f"ndepend.interest.{sev}"] = Key(band, _interest_band, DOCUMENTED)

    sonar = SonarParams()
    reg["sonar.c_per_line_days"] = Key(sonar.c_per_line_days, positive, DOCUMENTED)
    reg["sonar.manday_minutes"] = Key(sonar.manday_minutes, positive, DOCUMENTED)
    for cat, rng in efforts.sonar.items():
        reg[f"sonar.effort.{cat}"] = Key(rng, _range_pair, DOCUMENTED)
    for letter, bound in zip("ABCD", sonar.scale.bounds):
        reg[f"sonar.rating.{letter}_max"] = Key(bound, unit, DOCUMENTED)

    reg["squore.manday_minutes"] = Key(
        SquoreParams().manday_minutes, positive, LOCAL,
        "manuals leave the man-day length open; the UI suggests 500 min")
    for cost, minutes in efforts.squore.items():
        reg[f"squore.cost.{cost}"] = Key(minutes, nonneg, DOCUMENTED)

    bch = BchParams()
    reg["bch.min_short_share"] = Key(bch.min_short_share, unit, DOCUMENTED)
    reg["bch.max_share_bin2"] = Key(bch.max_share_bin2, unit, DOCUMENTED)
    reg["bch.max_share_bin3"] = Key(bch.max_share_bin3, unit, DOCUMENTED)
    reg["bch.max_share_bin4"] = Key(bch.max_share_bin4, unit, DOCUMENTED)
    for name in ("min_simple_units", "min_unique_code", "min_small_interfaces",
                 "min_separated_modules", "min_loose_coupling", "min_balance"):
        reg[f"bch.{name}"] = Key(getattr(bch, name), unit, LOCAL, "proxy guideline pass mark")
    reg["bch.max_codebase_loc"] = Key(bch.max_codebase_loc, _number(1, integer=True), LOCAL,
                                      "proxy guideline pass mark")

    cs = CodesceneParams()
    reg["codescene.top_n"] = Key(cs.top_n, _number(1, integer=True), LOCAL)
    reg["codescene.min_shared"] = Key(cs.min_shared, _number(1, integer=True), LOCAL)
    reg["codescene.max_files_per_commit"] = Key(cs.max_files_per_commit, _number(1, integer=True),
                                                LOCAL, "bulk commits excluded from coupling")
    reg["codescene.complexity"] = Key(cs.complexity, _choice(("loc", "whitespace")), LOCAL)

    for rule in default_catalog():
        _register_rule(reg, rule)
    return reg


def _interest_band(text: str) -> tuple[float, float]:
    parts = [p.strip() for p in text.split(",")]
    try:
        lo, hi = (float(p) for p in parts)
    except ValueError:
        raise ConfigError(f"expected 'min,max' (max may be inf), got {text!r}") from None
    if lo < 0 or hi <= lo:
        raise ConfigError(f"expected 0 <= min < max, got {text!r}")
    return lo, hi


_RULE_FIELDS: dict[str, Callable[[str], Any]] = {
    "enabled": _boolean,
    "threshold": _number(0.0),
    "characteristic": _choice(CHARACTERISTICS),
    "aip_severity": _choice(AIP_SEVERITIES),
    "kiuwan_priority": _choice(KIUWAN_PRIORITIES),
    "ndepend_severity": _choice(NDEPEND_SEVERITIES),
    "ndepend_debt_minutes": _number(0.0),
    "sonar_effort": _choice(SONAR_EFFORTS),
    "squore_cost": _choice(SQUORE_COSTS),
    "climate_check": _choice(CLIMATE_CHECKS, optional=True),
}

# rule metadata whose default is documented rather than chosen here
_DOCUMENTED_RULE_FIELDS = {
    ("high-cc", "threshold"),
    ("high-cc", "aip_severity"),
    ("assignment-in-condition", "kiuwan_priority"),
}


def _register_rule(reg: dict[str, Key], rule: Rule) -> None:
    for name, parse in _RULE_FIELDS.items():
        value = getattr(rule, name)
        if name in ("threshold", "ndepend_debt_minutes"):
            value = float(value)
        source = DOCUMENTED if (rule.id, name) in _DOCUMENTED_RULE_FIELDS or name == "enabled" else LOCAL
        reg[f"rule.{rule.id}.{name}"] = Key(value, parse, source)


REGISTRY = _registry()


def _split_key(full: str) -> tuple[str, str]:
    """'rule.long-unit.threshold' -> ('rule.long-unit', 'threshold'); 'aip.r_low' -> ('aip', 'r_low')."""
    if full.startswith("rule."):
        _, rule_id, name = (full.split(".", 2) + ["", ""])[:3]
        return f"rule.{rule_id}", name
    section, _, name = full.partition(".")
    return section, name


# -- the typed configuration -------------------------------------------------


@dataclass
class AnalysisConfig:
    values: dict[str, Any] = field(default_factory=lambda: {k: v.default for k, v in REGISTRY.items()})
    # keys explicitly set by the user (file or command line)
    explicit: set[str] = field(default_factory=set)

    def __post_init__(self) -> None:
        self.validate()

    def get(self, key: str) -> Any:
        return self.values[key]

    def set(self, key: str, raw: str | Any) -> None:
        if key not in REGISTRY:
            section, name = _split_key(key)
            raise ConfigError(f"unknown key {name!r} in section [{section}]")
        value = REGISTRY[key].parse(raw) if isinstance(raw, str) else raw
        self.values[key] = value
        self.explicit.add(key)

    def validate(self) -> None:
        for model in ("climate", "ndepend", "sonar"):
            bounds = [self.values[f"{model}.rating.{x}_max"] for x in "ABCD"]
            if any(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:])):
                raise ConfigError(f"[{model}] rating.A_max < B_max < C_max < D_max required, got {bounds}")
        lows = [self.values[f"ndepend.interest.{s}"][0] for s in NDEPEND_SEVERITIES]
        if any(b <= a for a, b in zip(lows, lows[1:])):
            raise ConfigError(f"[ndepend] interest band lower bounds must increase strictly, got {lows}")

    # typed views ------------------------------------------------------------

    def _section(self, section: str) -> dict[str, Any]:
        prefix = section + "."
        return {k[len(prefix):]: v for k, v in self.values.items() if k.startswith(prefix)}

    @property
    def source_root(self) -> str | None:
        return self.values["analysis.source_root"]

    @property
    def enabled_models(self) -> tuple[str, ...]:
        return self.values["analysis.models"]

    @property
    def commit_log(self) -> str | None:
        return self.values["analysis.commit_log"]

    @property
    def benchmark(self) -> str | None:
        return self.values["analysis.benchmark"]

    @property
    def indent_width(self) -> int:
        return self.values["analysis.indent_width"]

    @property
    def minisrc_extensions(self) -> tuple[str, ...]:
        return self.values["analysis.minisrc_extensions"]

    @property
    def identical_window(self) -> int:
        return _window(self.catalog_rule("identical-clone"))

    @property
    def similar_window(self) -> int:
        return _window(self.catalog_rule("similar-clone"))

    @property
    def aip(self) -> AipParams:
        return AipParams(**self._section("aip"))

    @property
    def efforts(self) -> EffortMaps:
        return EffortMaps(
            kiuwan={k[len("effort."):]: v for k, v in self._section("kiuwan").items()},
            sonar={k[len("effort."):]: v for k, v in self._section("sonar").items()
                   if k.startswith("effort.")},
            squore={k[len("cost."):]: v for k, v in self._section("squore").items()
                    if k.startswith("cost.")},
            ndepend_interest_bands={k[len("interest."):]: v for k, v in self._section("ndepend").items()
                                    if k.startswith("interest.")},
        )

    def _bounds(self, model: str) -> tuple[float, ...]:
        return tuple(self.values[f"{model}.rating.{x}_max"] for x in "ABCD")

    @property
    def climate(self) -> ClimateParams:
        sec = self._section("climate")
        return ClimateParams(
            check_minutes={k[len("check."):]: v for k, v in sec.items() if k.startswith("check.")},
            impl_minutes_per_loc=sec["impl_minutes_per_loc"],
            scale=climate_scale(*self._bounds("climate")),
        )

    @property
    def ndepend(self) -> NDependParams:
        sec = self._section("ndepend")
        return NDependParams(
            t_work_minutes=sec["t_work_minutes"],
            price_per_hour=sec["price_per_hour"],
            dev_minutes_per_lloc=sec["dev_minutes_per_lloc"],
            scale=ndepend_scale(*self._bounds("ndepend")),
        )

    @property
    def sonar(self) -> SonarParams:
        sec = self._section("sonar")
        return SonarParams(
            c_per_line_days=sec["c_per_line_days"],
            manday_minutes=sec["manday_minutes"],
            scale=sonar_scale(*self._bounds("sonar")),
        )

    @property
    def squore(self) -> SquoreParams:
        return SquoreParams(manday_minutes=self.values["squore.manday_minutes"])

    @property
    def bch(self) -> BchParams:
        return BchParams(**self._section("bch"))

    @property
    def codescene(self) -> CodesceneParams:
        return CodesceneParams(**self._section("codescene"))

    @property
    def catalog(self) -> list[Rule]:
        rules = []
        for rule in default_catalog():
            fields = {name: self.values[f"rule.{rule.id}.{name}"] for name in _RULE_FIELDS}
            rules.append(dataclasses.replace(rule, **fields))
        return rules

    def catalog_rule(self, rule_id: str) -> Rule:
        return next(r for r in self.catalog if r.id == rule_id)

    # provenance ------------------------------------------------------------

    def provenance(self) -> list[dict[str, Any]]:
        """Every constant whose effective value is not a documented vendor default."""
        out = []
        for key, entry in REGISTRY.items():
            if key in _SELECTIONS:
                continue
            value = self.values[key]
            if value != entry.default:
                out.append({"key": key, "value": _fmt(value), "source": "override",
                            "note": f"default {_fmt(entry.default)}"})
            elif entry.source == LOCAL and not key.startswith("analysis."):
                out.append({"key": key, "value": _fmt(value), "source": "local-default",
                            "note": entry.note})
        return out

    # serialization ---------------------------------------------------------

    def dump(self) -> str:
        """INI text of every effective value; loading it reproduces this config."""
        parser = _new_parser()
        for key in REGISTRY:
            section, name = _split_key(key)
            if not parser.has_section(section):
                parser.add_section(section)
            parser.set(section, name, _fmt(self.values[key]))
        buf = io.StringIO()
        parser.write(buf)
        return buf.getvalue()


# run selections rather than constants; kept out of provenance
_SELECTIONS = ("analysis.models", "analysis.source_root", "analysis.commit_log",
               "analysis.benchmark")


def _window(rule: Rule) -> int:
    t = int(rule.threshold)
    return max(2, t if rule.inclusive else t + 1)


def _new_parser() -> configparser.ConfigParser:
    parser = configparser.ConfigParser(interpolation=None, default_section="__defaults__")
    parser.optionxform = str  # keep key case (rating.A_max)
    return parser


def parse_config_text(text: str, origin: str = "<config>") -> AnalysisConfig:
    parser = _new_parser()
    try:
        parser.read_string(text, source=origin)
    except configparser.Error as exc:
        raise ConfigError(f"{origin}: {exc}") from None
    cfg = AnalysisConfig()
    sections = {_split_key(k)[0] for k in REGISTRY}
    for section in parser.sections():
        if section not in sections:
            raise ConfigError(f"{origin}: unknown section [{section}]")
        for name, raw in parser.items(section):
            key = f"{section}.{name}"
            if key not in REGISTRY:
                raise ConfigError(f"{origin}: unknown key {name!r} in section [{section}]")
            try:
                cfg.set(key, raw.strip())
            except ConfigError as exc:
                raise ConfigError(f"{origin}: [{section}] {name}: {exc}") from None
    cfg.validate()
    return cfg


def load_config(path: str | os.PathLike | None = None) -> AnalysisConfig:
    """Read a config file; with no path, fall back to $TDX_CONFIG, then to defaults."""
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    if path is None:
        return AnalysisConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {str(path)!r}: {exc.strerror}") from None
    return parse_config_text(text, origin=str(path))

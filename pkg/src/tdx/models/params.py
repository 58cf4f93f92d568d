"""Tunable constants for every model, defaulted to the documented vendor values."""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, field

from .result import RatingScale

MANDAY_MINUTES = 480.0


@dataclass(frozen=True)
class AipParams:
    r_low: float = 0.0
    r_medium: float = 0.5
    r_high: float = 1.0
    # hours per violation; t_low is inert while r_low = 0
    t_low: float = 0.97
    t_medium: float = 0.97
    t_high: float = 2.56
    c_staff_hour: float = 75.0

    def __post_init__(self) -> None:
        for name in ("r_low", "r_medium", "r_high"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")
        for name in ("t_low", "t_medium", "t_high", "c_staff_hour"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


def _kiuwan() -> dict[str, float]:
    return {"very_hard": 480.0, "hard": 240.0, "normal": 30.0, "easy": 6.0, "very_easy": 3.0}


def _sonar() -> dict[str, tuple[float, float]]:
    return {
        "trivial": (5.0, 10.0), "easy": (10.0, 20.0), "medium": (20.0, 30.0),
        "major": (60.0, 60.0), "high": (180.0, 180.0), "complex": (480.0, 480.0),
    }


def _squore() -> dict[str, float]:
    return {"tiny": 1.0, "low": 10.0, "medium": 30.0, "high": 60.0, "huge": 480.0}


def _interest_bands() -> dict[str, tuple[float, float]]:
    return {
        "info": (0.0, 2.0), "minor": (2.0, 20.0), "major": (20.0, 120.0),
        "critical": (120.0, 600.0), "blocker": (600.0, math.inf),
    }


@dataclass(frozen=True)
class EffortMaps:
    """Per-category remediation effort in minutes (ndepend bands: minutes/year)."""

    kiuwan: dict[str, float] = field(default_factory=_kiuwan)
    sonar: dict[str, tuple[float, float]] = field(default_factory=_sonar)
    squore: dict[str, float] = field(default_factory=_squore)
    ndepend_interest_bands: dict[str, tuple[float, float]] = field(default_factory=_interest_bands)

    def __post_init__(self) -> None:
        for name, m in (("kiuwan", self.kiuwan), ("squore", self.squore)):
            for k, v in m.items():
                if v < 0:
                    raise ValueError(f"{name} effort for {k!r} must be >= 0")
        for k, (lo, hi) in self.sonar.items():
            if lo < 0 or hi < lo:
                raise ValueError(f"sonar effort range for {k!r} must satisfy 0 <= min <= max")
        lows = [lo for lo, _ in self.ndepend_interest_bands.values()]
        if any(b <= a for a, b in zip(lows, lows[1:])) or any(lo < 0 for lo in lows):
            raise ValueError("ndepend interest band lower bounds must be >= 0 and strictly increasing")

    def sonar_minutes(self, category: str) -> float:
        lo, hi = self.sonar[category]
        return (lo + hi) / 2

    def ndepend_interest(self, severity: str) -> float:
        """Representative annual interest: band midpoint, lower bound for open-ended bands."""
        lo, hi = self.ndepend_interest_bands[severity]
        return lo if math.isinf(hi) else (lo + hi) / 2


def climate_scale(a: float = 0.05, b: float = 0.1, c: float = 0.2, d: float = 0.5) -> RatingScale:
    # A:[0,.05] B:(.05,.1] C:(.1,.2] D:(.2,.5] F:(.5,1]; no E
    return RatingScale(("A", "B", "C", "D", "F"), (a, b, c, d), right_closed=True)


def ndepend_scale(a: float = 0.05, b: float = 0.1, c: float = 0.2, d: float = 0.5) -> RatingScale:
    # A:[0,.05) B:[.05,.1) C:[.1,.2) D:[.2,.5) E:[.5,1]
    return RatingScale(("A", "B", "C", "D", "E"), (a, b, c, d), right_closed=False)


def sonar_scale(a: float = 0.05, b: float = 0.1, c: float = 0.2, d: float = 0.5) -> RatingScale:
    # documented as A=0-0.05, B=0.06-0.1, C=0.11-0.20, D=0.21-0.5, E=0.51-1;
    # the gaps between those ranges are closed by making every upper edge inclusive
    return RatingScale(("A", "B", "C", "D", "E"), (a, b, c, d), right_closed=True)


DEFAULT_CLIMATE_CHECK_MINUTES = {
    "argument_count": 10.0,
    "complex_logic": 20.0,
    "file_length": 60.0,
    "identical_blocks": 30.0,
    "unit_complexity": 45.0,
    "unit_count": 60.0,
    "method_length": 30.0,
    "nested_control_flow": 20.0,
    "return_statements": 10.0,
    "similar_blocks": 30.0,
}


@dataclass(frozen=True)
class ClimateParams:
    check_minutes: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_CLIMATE_CHECK_MINUTES))
    impl_minutes_per_loc: float = 28.8
    scale: RatingScale = field(default_factory=climate_scale)

    def __post_init__(self) -> None:
        if self.impl_minutes_per_loc <= 0:
            raise ValueError("impl_minutes_per_loc must be > 0")


@dataclass(frozen=True)
class NDependParams:
    t_work_minutes: float = MANDAY_MINUTES
    price_per_hour: float = 50.0
    # 18 man-days per 1000 LLOC at 480 min/day
    dev_minutes_per_lloc: float = 8.64
    scale: RatingScale = field(default_factory=ndepend_scale)

    def __post_init__(self) -> None:
        if self.t_work_minutes <= 0:
            raise ValueError("t_work_minutes must be > 0")
        if self.price_per_hour < 0 or self.dev_minutes_per_lloc <= 0:
            raise ValueError("price_per_hour must be >= 0 and dev_minutes_per_lloc > 0")


@dataclass(frozen=True)
class SonarParams:
    c_per_line_days: float = 0.06
    manday_minutes: float = MANDAY_MINUTES
    scale: RatingScale = field(default_factory=sonar_scale)

    @property
    def c_per_line_minutes(self) -> float:
        return float(Fraction(repr(self.c_per_line_days)) * Fraction(repr(self.manday_minutes)))


@dataclass(frozen=True)
class SquoreParams:
    manday_minutes: float = MANDAY_MINUTES


@dataclass(frozen=True)
class BchParams:
    # upper LOC edges of the first three unit-size bins, and the share limits per bin
    unit_size_bins: tuple[int, int, int] = (15, 30, 60)
    min_short_share: float = 0.567
    max_share_bin2: float = 0.214
    max_share_bin3: float = 0.154
    max_share_bin4: float = 0.069
    # proxy guidelines pass when their score reaches this value
    min_simple_units: float = 0.9
    min_unique_code: float = 0.95
    min_small_interfaces: float = 0.9
    min_separated_modules: float = 0.9
    min_loose_coupling: float = 0.8
    min_balance: float = 0.5
    max_codebase_loc: int = 200_000


@dataclass(frozen=True)
class CodesceneParams:
    top_n: int = 10
    min_shared: int = 2
    max_files_per_commit: int = 30
    complexity: str = "loc"  # or "whitespace"

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any


class MetricDomainError(ValueError):
    """A formula input lies outside the formula's domain (e.g. ln of zero)."""

    def __init__(self, symbol: str, value: float, requirement: str = "> 0") -> None:
        super().__init__(f"{symbol} must be {requirement}, got {value!r}")
        self.symbol = symbol
        self.value = value


@dataclass(frozen=True)
class RatingScale:
    """Maps a ratio onto ordered labels, best first.

    ``bounds[k]`` is the upper edge of ``labels[k]``; the last label takes
    everything above. With ``right_closed`` the upper edge belongs to the
    lower label (``(lo, hi]`` intervals), otherwise to the next one
    (``[lo, hi)`` intervals).
    """

    labels: tuple[str, ...]
    bounds: tuple[float, ...]
    right_closed: bool

    def __post_init__(self) -> None:
        if len(self.bounds) != len(self.labels) - 1:
            raise ValueError("need exactly one bound fewer than labels")
        if any(b2 <= b1 for b1, b2 in zip(self.bounds, self.bounds[1:])):
            raise ValueError(f"rating bounds must be strictly increasing: {self.bounds}")

    def rate(self, ratio: float) -> str:
        for label, bound in zip(self.labels, self.bounds):
            if (ratio <= bound) if self.right_closed else (ratio < bound):
                return label
        return self.labels[-1]

    def ordinal(self, label: str) -> int:
        return self.labels.index(label)


def _exact(x: float) -> Fraction:
    # the shortest decimal that round-trips, so 0.06 means 6/100 rather than its binary neighbour
    return Fraction(repr(float(x)))


def exact_ratio(numerator: float, *denominator: float) -> float:
    """numerator / product(denominator), rounded once.

    Configured constants are decimals; multiplying them in binary first would
    nudge results that sit exactly on a rating edge (1440 / (0.06 * 480 * 1000)
    must be 0.05, not 0.05000000000000001).
    """
    den = Fraction(1)
    for d in denominator:
        den *= _exact(d)
    return float(_exact(numerator) / den)


def clamp01(x: float) -> float:
    return min(1.0, max(0.0, x))


@dataclass
class ModelResult:
    model_id: str
    td_time: float | None = None  # minutes
    td_money: float | None = None
    ratio: float | None = None
    rating: str | int | None = None
    intermediates: dict[str, Any] = field(default_factory=dict)
    # per-file debt measure used for cross-model ordering (higher = more debt)
    per_file: dict[str, float] = field(default_factory=dict)
    per_file_rating: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ModelResult":
        return cls(**data)


def per_file_sum(items, weight, files=()) -> dict[str, float]:
    """Sum ``weight(v)`` per ``v.path``; every path in ``files`` appears, zero-filled."""
    out = {p: 0.0 for p in files}
    for v in items:
        out[v.path] = out.get(v.path, 0.0) + weight(v)
    return dict(sorted(out.items()))

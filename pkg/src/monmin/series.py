"""Yearly money-stock aggregates re-expressed in Monetary Minutes.

Given per-year (M1, GDP, population) triples, each year's M1 is divided
by that year's minute value, i.e. M1 * population * minutes_per_year /
GDP.  A simple strict local-extrema scan over the resulting curve finds
its peaks and troughs; runs of exactly equal values count once, at the
first year of the run, and the series endpoints are never extrema.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal

from .core import CurrencyCode, TimeStandard, as_decimal
from .errors import EmptySeries, NonMonotoneYears, NonPositiveInput, TooShort


@dataclass(frozen=True)
class AggregateYear:
    """One year's M1 and GDP (absolute currency units) plus population."""

    year: int
    m1: Decimal
    gdp: Decimal
    population: int
    events: str = ""  # pass-through annotation, never interpreted

    def __post_init__(self):
        object.__setattr__(self, "m1", as_decimal(self.m1))
        object.__setattr__(self, "gdp", as_decimal(self.gdp))
        if self.m1 < 0:
            raise NonPositiveInput(f"{self.year}: m1 must be >= 0, got {self.m1}")
        if self.gdp <= 0:
            raise NonPositiveInput(f"{self.year}: gdp must be > 0, got {self.gdp}")
        if self.population <= 0:
            raise NonPositiveInput(
                f"{self.year}: population must be > 0, got {self.population}"
            )


@dataclass(frozen=True)
class AggregateSeries:
    """Ordered yearly aggregates for one economy."""

    currency: CurrencyCode
    years: tuple[AggregateYear, ...]
    std: TimeStandard = TimeStandard()

    def __post_init__(self):
        object.__setattr__(self, "years", tuple(self.years))
        if not self.years:
            raise EmptySeries("a series needs at least one year")
        labels = [y.year for y in self.years]
        for prev, cur in zip(labels, labels[1:]):
            if cur <= prev:
                raise NonMonotoneYears(
                    f"years must be strictly increasing: {prev} then {cur}"
                )


@dataclass(frozen=True)
class ExtremaReport:
    """Years of local peaks and troughs; the two sets never overlap."""

    peaks: tuple[int, ...]
    troughs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "peaks", tuple(self.peaks))
        object.__setattr__(self, "troughs", tuple(self.troughs))
        overlap = set(self.peaks) & set(self.troughs)
        if overlap:
            raise ValueError(f"years cannot be both peak and trough: {sorted(overlap)}")


def m1_in_monmin(y: AggregateYear, std: TimeStandard = TimeStandard()) -> Decimal:
    """One year's M1 in minutes: m1 * population * minutes_per_year / gdp."""
    if y.gdp <= 0 or y.population <= 0:
        raise NonPositiveInput(f"{y.year}: gdp and population must be > 0")
    return y.m1 * y.population * std.minutes_per_year / y.gdp


def series_in_monmin(s: AggregateSeries) -> list[tuple[int, Decimal]]:
    """Element-wise :func:`m1_in_monmin` over a series, order preserved."""
    if not s.years:
        raise EmptySeries("cannot convert an empty series")
    out = []
    for y in s.years:
        try:
            out.append((y.year, m1_in_monmin(y, s.std)))
        except NonPositiveInput as exc:
            raise NonPositiveInput(f"year {y.year}: {exc}") from exc
    return out


def detect_extrema(values) -> ExtremaReport:
    """Strict local peaks and troughs of a (year, value) sequence.

    A year is a peak when its value strictly exceeds both neighbouring
    values, a trough when strictly below; a run of equal values is
    treated as a single point attributed to its first year.  Endpoints
    are never extrema.  Needs at least three points.
    """
    points = list(values)
    if len(points) < 3:
        raise TooShort(f"extrema detection needs >= 3 points, got {len(points)}")
    for (y0, _), (y1, _) in zip(points, points[1:]):
        if y1 <= y0:
            raise NonMonotoneYears(f"years must be strictly increasing: {y0} then {y1}")

    # collapse plateaus to their first year, then triple-scan
    compressed: list[tuple[int, Decimal]] = []
    for year, value in points:
        if not compressed or compressed[-1][1] != value:
            compressed.append((year, value))

    peaks: list[int] = []
    troughs: list[int] = []
    for i in range(1, len(compressed) - 1):
        before, here, after = compressed[i - 1][1], compressed[i][1], compressed[i + 1][1]
        if here > before and here > after:
            peaks.append(compressed[i][0])
        elif here < before and here < after:
            troughs.append(compressed[i][0])
    return ExtremaReport(peaks=tuple(peaks), troughs=tuple(troughs))

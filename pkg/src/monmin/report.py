"""Deterministic table rendering with per-column rounding rules.

Computation upstream keeps full precision; every figure is rounded here,
exactly once, with half-away-from-zero ties.  Two output variants exist:
CSV for machines and aligned text for humans.  Identical inputs always
produce byte-identical output.

Builders assemble the six standard report tables (per-country minute
values, cross-rate minute values, commodity and food baskets in minutes,
percent-of-salary, and the yearly M1 series) plus the plot-data file for
the series figure.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Mapping, Sequence

from .core import (
    CmSource,
    MonMinValue,
    RateTable,
    TimeStandard,
    as_decimal,
    compute_cm,
    cross_cm,
    invert_cm,
    percent_of_salary,
    to_monmin,
)
from .errors import CurrencyMismatch, EmptySeries, ShapeMismatch, UnknownCurrency
from .ingest import Basket
from .series import AggregateSeries, ExtremaReport, series_in_monmin

_BILLION = Decimal("1e9")


class TableId(Enum):
    T1 = "1"
    T2 = "2"
    T3 = "3"
    T4 = "4"
    T4B = "4b"
    T5 = "5"


@dataclass(frozen=True)
class ColumnRule:
    """One column's rounding rule; with neither field set, cells pass verbatim."""

    name: str
    decimals: int | None = None
    sig_figures: int | None = None

    def __post_init__(self):
        if self.decimals is not None and self.sig_figures is not None:
            raise ValueError(f"column {self.name}: decimals and sig_figures are exclusive")
        if self.decimals is not None and self.decimals < 0:
            raise ValueError(f"column {self.name}: decimals must be >= 0")
        if self.sig_figures is not None and self.sig_figures < 1:
            raise ValueError(f"column {self.name}: sig_figures must be >= 1")

    @property
    def numeric(self) -> bool:
        return self.decimals is not None or self.sig_figures is not None


@dataclass(frozen=True)
class TableSpec:
    """A table identity plus exactly one rounding rule per column."""

    table_id: TableId
    columns: tuple[ColumnRule, ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        names = [c.name for c in self.columns]
        if len(names) != len(set(names)):
            raise ValueError(f"duplicate column names in table {self.table_id.value}")


def round_half_away(value: Decimal, decimals: int) -> Decimal:
    """Round to a fixed number of decimals, ties away from zero."""
    quantum = Decimal(1).scaleb(-decimals)
    rounded = as_decimal(value).quantize(quantum, rounding=ROUND_HALF_UP)
    return abs(rounded) if rounded == 0 else rounded  # avoid "-0.00"


def round_significant(value: Decimal, figures: int) -> Decimal:
    """Round to a number of significant digits, ties away from zero."""
    value = as_decimal(value)
    if value == 0:
        return Decimal(0)
    quantum = Decimal(1).scaleb(value.adjusted() - figures + 1)
    return value.quantize(quantum, rounding=ROUND_HALF_UP)


def format_cell(rule: ColumnRule, value) -> str:
    if not rule.numeric:
        return "" if value is None else str(value)
    number = as_decimal(value)
    if rule.decimals is not None:
        return str(round_half_away(number, rule.decimals))
    text = format(round_significant(number, rule.sig_figures), "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def render_table(spec: TableSpec, rows: Sequence[Mapping[str, object]], fmt: str = "csv") -> str:
    """Render rows under a spec as CSV or aligned text.

    Every row must supply exactly the spec's columns.
    """
    if fmt not in ("csv", "text"):
        raise ValueError(f"unknown format {fmt!r}")
    names = [c.name for c in spec.columns]
    cells: list[list[str]] = []
    for index, row in enumerate(rows):
        if set(row.keys()) != set(names):
            raise ShapeMismatch(
                f"table {spec.table_id.value} row {index}: expected columns {names}, "
                f"got {sorted(row.keys())}"
            )
        cells.append([format_cell(rule, row[rule.name]) for rule in spec.columns])

    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(names)
        writer.writerows(cells)
        return buffer.getvalue()

    widths = [
        max(len(name), *(len(row[i]) for row in cells)) if cells else len(name)
        for i, name in enumerate(names)
    ]
    lines = []
    for row in [names] + cells:
        padded = [
            cell.rjust(widths[i]) if spec.columns[i].numeric else cell.ljust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(padded).rstrip())
    return "\n".join(lines) + "\n"


def _plain(value: Decimal) -> str:
    return format(value, "f")


# ---------------------------------------------------------------------------
# table builders: full-precision rows plus the pinned rounding profile


def build_table1(snapshots, std: TimeStandard = TimeStandard()):
    """Per-country minute values from GDP and population."""
    spec = TableSpec(
        TableId.T1,
        (
            ColumnRule("country"),
            ColumnRule("currency"),
            ColumnRule("gdp", decimals=0),
            ColumnRule("population", decimals=0),
            ColumnRule("gdp_per_capita", decimals=0),
            ColumnRule("cm", decimals=7),
            ColumnRule("source"),
        ),
    )
    rows = []
    for snapshot in snapshots:
        cm = compute_cm(snapshot, std)
        rows.append(
            {
                "country": snapshot.country,
                "currency": snapshot.currency.code,
                "gdp": snapshot.gdp,
                "population": snapshot.population,
                "gdp_per_capita": snapshot.gdp_per_capita(),
                "cm": cm.value,
                "source": cm.source.value,
            }
        )
    return spec, rows


def build_table2(
    base_cm: MonMinValue,
    rates: RateTable,
    overrides: Mapping[str, MonMinValue] | None = None,
):
    """Minute values across currencies from one base value and a rate table.

    A quote currency with an override uses that value verbatim (and its
    provenance label); otherwise the value is derived through the rate.
    The inverse column is minutes per one unit of the currency.
    """
    overrides = overrides or {}
    spec = TableSpec(
        TableId.T2,
        (
            ColumnRule("currency"),
            ColumnRule("rate"),
            ColumnRule("cm", sig_figures=6),
            ColumnRule("source"),
            ColumnRule("inverse_cm", decimals=2),
        ),
    )
    quotes = {rate.quote.code for rate in rates}
    for code in overrides:
        if code not in quotes:
            raise UnknownCurrency(f"override {code} has no rate row")
    rows = [
        {
            "currency": base_cm.currency.code,
            "rate": "1",
            "cm": base_cm.value,
            "source": base_cm.source.value,
            "inverse_cm": invert_cm(base_cm),
        }
    ]
    for rate in rates:
        if rate.base != base_cm.currency:
            raise CurrencyMismatch(
                f"rate {rate.base}->{rate.quote} does not start from {base_cm.currency}"
            )
        cm = overrides.get(rate.quote.code) or cross_cm(base_cm, rate)
        rows.append(
            {
                "currency": rate.quote.code,
                "rate": _plain(rate.rate),
                "cm": cm.value,
                "source": cm.source.value,
                "inverse_cm": invert_cm(cm),
            }
        )
    return spec, rows


def _aligned_quotes(baskets: Sequence[Basket]):
    """Items of the first basket, each resolved in every basket."""
    if not baskets:
        return []
    order = [(q.item, q.unit) for q in baskets[0].items]
    lookup = []
    for basket in baskets:
        index = {(q.item, q.unit): q for q in basket.items}
        missing = [key for key in order if key not in index]
        if missing or len(basket.items) != len(order):
            raise ShapeMismatch(
                f"basket {basket.country}/{basket.currency} does not carry the "
                f"same items as {baskets[0].country}/{baskets[0].currency}"
            )
        lookup.append(index)
    return [(key, [index[key] for index in lookup]) for key in order]


def _cm_for(basket: Basket, cms: Mapping[str, MonMinValue]) -> MonMinValue:
    cm = cms.get(basket.currency.code)
    if cm is None:
        raise UnknownCurrency(f"no minute value for currency {basket.currency}")
    return cm


def build_table3(baskets: Sequence[Basket], cms: Mapping[str, MonMinValue]):
    """One market's commodity prices, raw and in minutes, per currency context."""
    codes = [b.currency.code for b in baskets]
    if len(codes) != len(set(codes)):
        raise ShapeMismatch("table 3 needs one basket per currency context")
    columns = [ColumnRule("item"), ColumnRule("unit")]
    columns += [ColumnRule(f"price_{code}", decimals=2) for code in codes]
    columns += [ColumnRule(f"monmin_{code}", decimals=0) for code in codes]
    spec = TableSpec(TableId.T3, tuple(columns))
    values = [_cm_for(b, cms) for b in baskets]
    rows = []
    for (item, unit), quotes in _aligned_quotes(baskets):
        row = {"item": item, "unit": unit}
        for code, quote, cm in zip(codes, quotes, values):
            row[f"price_{code}"] = quote.amount
            row[f"monmin_{code}"] = to_monmin(quote, cm).monmin
        rows.append(row)
    return spec, rows


def build_table4(baskets: Sequence[Basket], cms: Mapping[str, MonMinValue]):
    """Food-basket prices and salaries in minutes, one column per country."""
    countries = [b.country for b in baskets]
    if len(countries) != len(set(countries)):
        raise ShapeMismatch("table 4 needs one basket per country")
    spec = TableSpec(
        TableId.T4,
        tuple(
            [ColumnRule("item"), ColumnRule("unit")]
            + [ColumnRule(country, decimals=0) for country in countries]
        ),
    )
    values = [_cm_for(b, cms) for b in baskets]
    rows = []
    for (item, unit), quotes in _aligned_quotes(baskets):
        row = {"item": item, "unit": unit}
        for country, quote, cm in zip(countries, quotes, values):
            row[country] = to_monmin(quote, cm).monmin
        rows.append(row)
    salaries = [b.salary for b in baskets]
    if any(s is not None for s in salaries):
        if any(s is None for s in salaries):
            raise ShapeMismatch("either every basket carries a salary row or none does")
        row = {"item": salaries[0].item, "unit": salaries[0].unit}
        for country, salary, cm in zip(countries, salaries, values):
            row[country] = to_monmin(salary, cm).monmin
        rows.append(row)
    return spec, rows


def build_table4b(baskets: Sequence[Basket]):
    """Basket items as percent of the salary; minute values cancel out."""
    countries = [b.country for b in baskets]
    if len(countries) != len(set(countries)):
        raise ShapeMismatch("table 4b needs one basket per country")
    for basket in baskets:
        if basket.salary is None:
            raise ShapeMismatch(f"basket {basket.country} has no salary row")
    spec = TableSpec(
        TableId.T4B,
        tuple(
            [ColumnRule("item"), ColumnRule("unit")]
            + [ColumnRule(country, decimals=2) for country in countries]
        ),
    )
    # unit minute value per context: percent_of_salary only needs the ratio
    units = [MonMinValue(b.currency, Decimal(1), CmSource.MANUAL) for b in baskets]
    rows = []
    for (item, unit), quotes in _aligned_quotes(baskets):
        row = {"item": item, "unit": unit}
        for basket, one, country, quote in zip(baskets, units, countries, quotes):
            row[country] = percent_of_salary(to_monmin(quote, one), to_monmin(basket.salary, one))
        rows.append(row)
    row = {"item": baskets[0].salary.item, "unit": baskets[0].salary.unit}
    for country in countries:
        row[country] = Decimal(100)
    rows.append(row)
    return spec, rows


def build_table5(series: AggregateSeries):
    """Yearly M1 and GDP in billions plus M1 in billions of minutes."""
    spec = TableSpec(
        TableId.T5,
        (
            ColumnRule("year"),
            ColumnRule("m1_billions", decimals=0),
            ColumnRule("m1_monmin_billions", decimals=0),
            ColumnRule("gdp_billions", decimals=0),
            ColumnRule("events"),
        ),
    )
    minutes = dict(series_in_monmin(series))
    rows = []
    for y in series.years:
        rows.append(
            {
                "year": y.year,
                "m1_billions": y.m1 / _BILLION,
                "m1_monmin_billions": minutes[y.year] / _BILLION,
                "gdp_billions": y.gdp / _BILLION,
                "events": y.events,
            }
        )
    return spec, rows


def emit_plot_data(series: AggregateSeries, extrema: ExtremaReport | None = None) -> str:
    """Plot-data CSV: year, raw M1, M1 in minutes, raw GDP, full precision.

    With an extrema report, a marker column labels peak/trough years.
    """
    if not series.years:
        raise EmptySeries("cannot emit plot data for an empty series")
    minutes = series_in_monmin(series)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = ["year", "m1_currency", "m1_monmin", "gdp_currency"]
    if extrema is not None:
        header.append("extremum")
    writer.writerow(header)
    for y, (year, value) in zip(series.years, minutes):
        row = [str(year), _plain(y.m1), _plain(value), _plain(y.gdp)]
        if extrema is not None:
            marker = "peak" if year in extrema.peaks else "trough" if year in extrema.troughs else ""
            row.append(marker)
        writer.writerow(row)
    return buffer.getvalue()

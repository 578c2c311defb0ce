"""CSV loaders and writers for the four input file formats.

All files are UTF-8, comma-separated, header-first, with "." as the
decimal point and no thousands separators:

    economies.csv  country,currency,gdp,population,as_of
    rates.csv      base,quote,rate,as_of
    basket.csv     country,currency,item,unit,amount,role   (role: item|salary)
    series.csv     year,m1,gdp,population[,events]

A ``# scale=<factor>`` comment line before the header multiplies the
monetary columns (gdp; m1 and gdp for series) into absolute units, so
"billions" tables can be transcribed verbatim.  Other ``#`` lines are
ignored.  Loading is all-or-nothing: any error row means the returned
dataset is empty and the report lists every problem with its 1-based
physical line number.
"""
from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import NamedTuple

from .core import CurrencyCode, EconomySnapshot, ExchangeRate, PriceQuote, RateTable, TimeStandard
from .errors import NonPositiveInput
from .series import AggregateSeries, AggregateYear

_DIRECTIVE_RE = re.compile(r"^#\s*([a-z_]+)\s*=\s*(\S+)\s*$")

_ECONOMIES_HEADER = ["country", "currency", "gdp", "population", "as_of"]
_RATES_HEADER = ["base", "quote", "rate", "as_of"]
_BASKET_HEADER = ["country", "currency", "item", "unit", "amount", "role"]
_SERIES_HEADER = ["year", "m1", "gdp", "population"]


class Issue(NamedTuple):
    line: int
    message: str


@dataclass(frozen=True)
class IngestReport:
    """Outcome of one file load; errors imply an empty dataset."""

    records_accepted: int
    warnings: tuple[Issue, ...] = ()
    errors: tuple[Issue, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors


@dataclass(frozen=True)
class Basket:
    """Price quotes of one country/currency context, salary kept apart."""

    country: str
    currency: CurrencyCode
    items: tuple[PriceQuote, ...]
    salary: PriceQuote | None = None


class _Scan(NamedTuple):
    directives: dict[str, tuple[int, str]]  # name -> (line, value)
    header_line: int
    rows: list[tuple[int, list[str]]]
    errors: list[Issue]


def _read_table(path, expected: list[str], optional: tuple[str, ...] = ()) -> _Scan:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"file not found: {path}")
    directives: dict[str, tuple[int, str]] = {}
    header: list[str] | None = None
    header_line = 0
    rows: list[tuple[int, list[str]]] = []
    errors: list[Issue] = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        text = raw.strip()
        if not text:
            continue
        if text.startswith("#"):
            match = _DIRECTIVE_RE.match(text)
            if match and header is None:
                directives[match.group(1)] = (lineno, match.group(2))
            continue
        cells = next(csv.reader([raw]))
        if header is None:
            header = [c.strip() for c in cells]
            header_line = lineno
            if header != expected and header != expected + list(optional):
                errors.append(
                    Issue(lineno, f"MalformedRow: header {header} does not match {expected}")
                )
            continue
        rows.append((lineno, cells))
    if header is None:
        errors.append(Issue(1, "MalformedRow: missing header row"))
    return _Scan(directives, header_line, rows, errors)


def _scale_factor(scan: _Scan, errors: list[Issue]) -> Decimal:
    if "scale" not in scan.directives:
        return Decimal(1)
    lineno, text = scan.directives["scale"]
    try:
        scale = Decimal(text)
    except InvalidOperation:
        errors.append(Issue(lineno, f"MalformedRow: bad scale factor {text!r}"))
        return Decimal(1)
    if scale <= 0:
        errors.append(Issue(lineno, f"NonPositiveInput: scale must be > 0, got {text}"))
        return Decimal(1)
    return scale


def load_economies(path) -> tuple[list[EconomySnapshot], IngestReport]:
    """Load country snapshots; gdp is multiplied by any declared scale."""
    scan = _read_table(path, _ECONOMIES_HEADER)
    errors = list(scan.errors)
    scale = _scale_factor(scan, errors)
    snapshots: list[EconomySnapshot] = []
    seen: dict[str, int] = {}
    for lineno, cells in scan.rows:
        if len(cells) != 5:
            errors.append(Issue(lineno, f"MalformedRow: expected 5 columns, got {len(cells)}"))
            continue
        country, code, gdp_text, pop_text, as_of = (c.strip() for c in cells)
        try:
            snapshot = EconomySnapshot(
                country=country,
                currency=CurrencyCode(code),
                gdp=Decimal(gdp_text) * scale,
                population=int(pop_text),
                as_of=as_of,
            )
        except NonPositiveInput as exc:
            errors.append(Issue(lineno, f"NonPositiveInput: {exc}"))
            continue
        except (InvalidOperation, ValueError) as exc:
            errors.append(Issue(lineno, f"MalformedRow: {exc}"))
            continue
        if country in seen:
            errors.append(
                Issue(lineno, f"DuplicateCountry: {country} already defined on line {seen[country]}")
            )
            continue
        seen[country] = lineno
        snapshots.append(snapshot)
    if errors:
        return [], IngestReport(0, errors=tuple(errors))
    return snapshots, IngestReport(len(snapshots))


def load_rates(path) -> tuple[RateTable, IngestReport]:
    """Load a directed rate table; reciprocal drift is a warning, not an error."""
    scan = _read_table(path, _RATES_HEADER)
    errors = list(scan.errors)
    warnings: list[Issue] = []
    rates: list[ExchangeRate] = []
    seen: dict[tuple[str, str], int] = {}
    for lineno, cells in scan.rows:
        if len(cells) != 4:
            errors.append(Issue(lineno, f"MalformedRow: expected 4 columns, got {len(cells)}"))
            continue
        base, quote, rate_text, as_of = (c.strip() for c in cells)
        try:
            rate = ExchangeRate(
                base=CurrencyCode(base),
                quote=CurrencyCode(quote),
                rate=Decimal(rate_text),
                as_of=as_of or None,
            )
        except NonPositiveInput as exc:
            errors.append(Issue(lineno, f"NonPositiveInput: {exc}"))
            continue
        except (InvalidOperation, ValueError) as exc:
            errors.append(Issue(lineno, f"MalformedRow: {exc}"))
            continue
        key = (rate.base.code, rate.quote.code)
        if key in seen:
            errors.append(
                Issue(lineno, f"DuplicatePair: {key[0]}->{key[1]} already defined on line {seen[key]}")
            )
            continue
        seen[key] = lineno
        rates.append(rate)
    if errors:
        return RateTable(), IngestReport(0, errors=tuple(errors))
    table = RateTable(rates)
    for fwd, back, product in table.reciprocal_mismatches():
        lineno = max(
            seen[(fwd.base.code, fwd.quote.code)], seen[(back.base.code, back.quote.code)]
        )
        warnings.append(
            Issue(
                lineno,
                f"reciprocal rates {fwd.base}->{fwd.quote} and {back.base}->{back.quote} "
                f"multiply to {product}, expected 1",
            )
        )
    return table, IngestReport(len(rates), warnings=tuple(warnings))


def load_basket(path, known_currencies=None) -> tuple[list[Basket], IngestReport]:
    """Load price quotes grouped by (country, currency) context.

    When ``known_currencies`` is given, rows in other currencies are
    rejected with UnknownCurrency.  At most one salary row per group.
    """
    known = None if known_currencies is None else {str(c) for c in known_currencies}
    scan = _read_table(path, _BASKET_HEADER)
    errors = list(scan.errors)
    groups: dict[tuple[str, str], dict] = {}
    for lineno, cells in scan.rows:
        if len(cells) != 6:
            errors.append(Issue(lineno, f"MalformedRow: expected 6 columns, got {len(cells)}"))
            continue
        country, code, item, unit, amount_text, role = (c.strip() for c in cells)
        if role not in ("item", "salary"):
            errors.append(Issue(lineno, f"MalformedRow: role must be item or salary, got {role!r}"))
            continue
        if known is not None and code not in known:
            errors.append(Issue(lineno, f"UnknownCurrency: {code} is not in the known set"))
            continue
        try:
            quote = PriceQuote(
                item=item, unit=unit, currency=CurrencyCode(code), amount=Decimal(amount_text)
            )
        except NonPositiveInput as exc:
            errors.append(Issue(lineno, f"NonPositiveInput: {exc}"))
            continue
        except (InvalidOperation, ValueError) as exc:
            errors.append(Issue(lineno, f"MalformedRow: {exc}"))
            continue
        group = groups.setdefault(
            (country, code), {"currency": quote.currency, "items": [], "salary": None}
        )
        if role == "salary":
            if group["salary"] is not None:
                errors.append(Issue(lineno, f"MalformedRow: duplicate salary row for {country}"))
                continue
            group["salary"] = quote
        else:
            group["items"].append(quote)
    if errors:
        return [], IngestReport(0, errors=tuple(errors))
    baskets = [
        Basket(country=country, currency=g["currency"], items=tuple(g["items"]), salary=g["salary"])
        for (country, _), g in groups.items()
    ]
    return baskets, IngestReport(sum(len(b.items) + (1 if b.salary else 0) for b in baskets))


def load_series(
    path,
    currency: CurrencyCode = CurrencyCode("USD"),
    std: TimeStandard = TimeStandard(),
) -> tuple[AggregateSeries | None, IngestReport]:
    """Load a yearly aggregate series; m1 and gdp honour any declared scale.

    The file format carries no currency column, so the caller names the
    series currency (default USD).
    """
    scan = _read_table(path, _SERIES_HEADER, optional=("events",))
    errors = list(scan.errors)
    scale = _scale_factor(scan, errors)
    years: list[AggregateYear] = []
    last_year: int | None = None
    for lineno, cells in scan.rows:
        if len(cells) not in (4, 5):
            errors.append(Issue(lineno, f"MalformedRow: expected 4 or 5 columns, got {len(cells)}"))
            continue
        year_text, m1_text, gdp_text, pop_text = (c.strip() for c in cells[:4])
        events = cells[4].strip() if len(cells) == 5 else ""
        try:
            year = AggregateYear(
                year=int(year_text),
                m1=Decimal(m1_text) * scale,
                gdp=Decimal(gdp_text) * scale,
                population=int(pop_text),
                events=events,
            )
        except NonPositiveInput as exc:
            errors.append(Issue(lineno, f"NonPositiveInput: {exc}"))
            continue
        except (InvalidOperation, ValueError) as exc:
            errors.append(Issue(lineno, f"MalformedRow: {exc}"))
            continue
        if last_year is not None and year.year <= last_year:
            errors.append(
                Issue(lineno, f"NonMonotoneYears: {year.year} does not follow {last_year}")
            )
            continue
        last_year = year.year
        years.append(year)
    if not errors and not years:
        errors.append(Issue(scan.header_line or 1, "EmptySeries: no data rows"))
    if errors:
        return None, IngestReport(0, errors=tuple(errors))
    return AggregateSeries(currency=currency, years=tuple(years), std=std), IngestReport(len(years))


def _plain(value: Decimal) -> str:
    return format(value, "f")


def write_economies(path, snapshots) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(_ECONOMIES_HEADER)
        for s in snapshots:
            out.writerow([s.country, s.currency.code, _plain(s.gdp), s.population, s.as_of.isoformat()])


def write_rates(path, table: RateTable) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(_RATES_HEADER)
        for r in table:
            out.writerow([r.base.code, r.quote.code, _plain(r.rate), r.as_of.isoformat() if r.as_of else ""])


def write_basket(path, baskets) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(_BASKET_HEADER)
        for b in baskets:
            for q in b.items:
                out.writerow([b.country, b.currency.code, q.item, q.unit, _plain(q.amount), "item"])
            if b.salary is not None:
                s = b.salary
                out.writerow([b.country, b.currency.code, s.item, s.unit, _plain(s.amount), "salary"])


def write_series(path, series: AggregateSeries) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(_SERIES_HEADER + ["events"])
        for y in series.years:
            out.writerow([y.year, _plain(y.m1), _plain(y.gdp), y.population, y.events])

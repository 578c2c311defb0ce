"""Command-line front door wiring ingest -> core/series -> report.

Exit codes: 0 success, 1 usage error, 2 data error.  Results go to
stdout (or ``--out``), diagnostics to stderr.  ``MONMIN_TETCY`` overrides
the default minutes-per-year constant; an explicit ``--tetcy`` flag wins
over the environment, which wins over an optional JSON config file.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from decimal import Decimal, InvalidOperation
from pathlib import Path

import click

from . import ingest, report
from .core import (
    CmSource,
    CurrencyCode,
    ExchangeRate,
    MonMinPrice,
    MonMinValue,
    PriceQuote,
    TimeStandard,
    compute_cm,
    parity_rate,
    percent_of_salary,
    to_monmin,
)
from .errors import CurrencyMismatch, IngestFailure, MonMinError, ShapeMismatch
from .report import round_half_away
from .series import detect_extrema, series_in_monmin

_TETCY_HELP = "Minutes per year (default 525600; env MONMIN_TETCY)."


def _load_config(path) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise click.UsageError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"config file {path} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise click.UsageError(f"config file {path} must hold a JSON object")
    return data


def _decimal_flag(text, flag: str) -> Decimal:
    try:
        return Decimal(str(text))
    except InvalidOperation:
        raise click.UsageError(f"{flag} expects a decimal number, got {text!r}")


def _resolve_std(tetcy, config: dict) -> TimeStandard:
    raw = tetcy if tetcy is not None else config.get("tetcy")
    if raw is None:
        return TimeStandard()
    value = _decimal_flag(raw, "--tetcy")
    if value <= 0:
        raise click.UsageError(f"--tetcy must be > 0, got {value}")
    return TimeStandard(value)


def _resolve_fmt(fmt, config: dict) -> str:
    choice = fmt if fmt is not None else config.get("format", "csv")
    if choice not in ("csv", "text"):
        raise click.UsageError(f"format must be csv or text, got {choice!r}")
    return choice


def _run_load(loader, path, **kwargs):
    """Run a loader, echo its report to stderr, fail on any error."""
    data, rep = loader(path, **kwargs)
    for issue in rep.warnings:
        click.echo(f"{path}:{issue.line}: warning: {issue.message}", err=True)
    if rep.errors:
        for issue in rep.errors:
            click.echo(f"{path}:{issue.line}: error: {issue.message}", err=True)
        raise IngestFailure(path, rep)
    return data


def _deliver(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="")
    else:
        click.echo(text, nl=False)


def _parse_cm_options(entries) -> dict[str, MonMinValue]:
    values: dict[str, MonMinValue] = {}
    for raw in entries:
        code, sep, number = raw.partition("=")
        code = code.strip().upper()
        if not sep or not code or not number.strip():
            raise click.UsageError(f"--cm expects CODE=VALUE, got {raw!r}")
        try:
            currency = CurrencyCode(code)
        except ValueError as exc:
            raise click.UsageError(f"--cm {raw!r}: {exc}")
        if code in values:
            raise click.UsageError(f"--cm given twice for {code}")
        values[code] = MonMinValue(currency, _decimal_flag(number, "--cm"), CmSource.MANUAL)
    return values


def _cms_from_economies(path, std: TimeStandard) -> dict[str, MonMinValue]:
    snapshots = _run_load(ingest.load_economies, path)
    values: dict[str, MonMinValue] = {}
    for snapshot in snapshots:
        if snapshot.currency.code in values:
            raise CurrencyMismatch(
                f"multiple economies share currency {snapshot.currency}; pass --cm explicitly"
            )
        values[snapshot.currency.code] = compute_cm(snapshot, std)
    return values


def _gather_cms(cm_entries, economies_path, std: TimeStandard) -> dict[str, MonMinValue]:
    values = _cms_from_economies(economies_path, std) if economies_path else {}
    values.update(_parse_cm_options(cm_entries))  # explicit flags win
    if not values:
        raise click.UsageError("missing minute-value source: pass --cm CODE=VALUE or --economies")
    return values


def _note_cm_sources(values: dict[str, MonMinValue]) -> None:
    for code in values:
        cm = values[code]
        click.echo(f"cm {code}={format(cm.value, 'f')} source={cm.source.value}", err=True)


@click.group()
def cli():
    """Monetary Minute toolkit: time-standard unit-of-account calculations."""


@cli.command("cm")
@click.option("--economies", "economies_path", required=True, help="Economies CSV file.")
@click.option("--tetcy", envvar="MONMIN_TETCY", default=None, help=_TETCY_HELP)
@click.option("--config", "config_path", default=None, help="Optional JSON config file.")
@click.option("--format", "fmt", type=click.Choice(["csv", "text"]), default=None)
@click.option("--out", default=None, help="Write the table to this path instead of stdout.")
def cmd_cm(economies_path, tetcy, config_path, fmt, out):
    """Per-country Monetary Minute values from an economies file."""
    config = _load_config(config_path)
    snapshots = _run_load(ingest.load_economies, economies_path)
    spec, rows = report.build_table1(snapshots, _resolve_std(tetcy, config))
    _deliver(report.render_table(spec, rows, _resolve_fmt(fmt, config)), out)


@cli.command("convert")
@click.option("--amount", required=True, help="Price in currency units.")
@click.option("--currency", default=None, help="Currency code of the amount.")
@click.option("--cm", "cm_value", default=None, help="Explicit minute value (currency per minute).")
@click.option("--economies", "economies_path", default=None, help="Compute the minute value from this file.")
@click.option("--country", default=None, help="Country to pick from the economies file.")
@click.option("--tetcy", envvar="MONMIN_TETCY", default=None, help=_TETCY_HELP)
@click.option("--decimals", type=int, default=None, help="Decimals for the printed result (default 0).")
@click.option("--config", "config_path", default=None, help="Optional JSON config file.")
def cmd_convert(amount, currency, cm_value, economies_path, country, tetcy, decimals, config_path):
    """Convert a currency price into Monetary Minutes."""
    config = _load_config(config_path)
    std = _resolve_std(tetcy, config)
    if cm_value is not None and economies_path:
        raise click.UsageError("use either --cm or --economies, not both")
    if cm_value is not None:
        code = CurrencyCode((currency or "XXX").upper())
        cm = MonMinValue(code, _decimal_flag(cm_value, "--cm"), CmSource.MANUAL)
    elif economies_path:
        if not country:
            raise click.UsageError("--economies needs --country")
        snapshots = _run_load(ingest.load_economies, economies_path)
        snapshot = next((s for s in snapshots if s.country == country), None)
        if snapshot is None:
            raise MonMinError(f"country {country!r} not found in {economies_path}")
        if currency and snapshot.currency.code != currency.upper():
            raise CurrencyMismatch(
                f"{country} is in {snapshot.currency}, not {currency.upper()}"
            )
        cm = compute_cm(snapshot, std)
    else:
        raise click.UsageError(
            "missing minute-value source: pass --cm or --economies with --country"
        )
    quote = PriceQuote("amount", "", cm.currency, _decimal_flag(amount, "--amount"))
    places = decimals if decimals is not None else int(config.get("decimals", 0))
    if places < 0:
        raise click.UsageError("--decimals must be >= 0")
    click.echo(str(round_half_away(to_monmin(quote, cm).monmin, places)))


@cli.command("parity")
@click.option("--rate", required=True, help="Current rate, local per reference unit.")
@click.option("--ref", "ref_value", required=True, help="Reference-market minute price.")
@click.option("--local", "local_value", required=True, help="Local-market minute price.")
@click.option("--item", default="item", help="Item label for both prices.")
def cmd_parity(rate, ref_value, local_value, item):
    """Hypothetical rate that equalizes an item's minute price."""
    current = ExchangeRate(CurrencyCode("REF"), CurrencyCode("LOC"), _decimal_flag(rate, "--rate"))
    ref_price = MonMinPrice(item, CurrencyCode("REF"), _decimal_flag(ref_value, "--ref"))
    local_price = MonMinPrice(item, CurrencyCode("LOC"), _decimal_flag(local_value, "--local"))
    click.echo(str(round_half_away(parity_rate(current, ref_price, local_price), 3)))


@cli.command("basket")
@click.option("--basket", "basket_path", required=True, help="Basket CSV file.")
@click.option("--economies", "economies_path", default=None, help="Minute values from this file.")
@click.option("--cm", "cm_entries", multiple=True, help="CODE=VALUE manual minute value (repeatable).")
@click.option("--tetcy", envvar="MONMIN_TETCY", default=None, help=_TETCY_HELP)
@click.option("--config", "config_path", default=None, help="Optional JSON config file.")
@click.option("--out", default=None, help="Write the listing to this path instead of stdout.")
def cmd_basket(basket_path, economies_path, cm_entries, tetcy, config_path, out):
    """Re-express every basket quote in Monetary Minutes."""
    config = _load_config(config_path)
    std = _resolve_std(tetcy, config)
    cms = _gather_cms(cm_entries, economies_path, std)
    baskets = _run_load(ingest.load_basket, basket_path, known_currencies=cms.keys())
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["country", "currency", "item", "unit", "amount", "role", "monmin", "cm_source"])
    used: dict[str, MonMinValue] = {}
    for basket in baskets:
        cm = cms[basket.currency.code]
        used[basket.currency.code] = cm
        quotes = [(q, "item") for q in basket.items]
        if basket.salary is not None:
            quotes.append((basket.salary, "salary"))
        for quote, role in quotes:
            writer.writerow(
                [
                    basket.country,
                    basket.currency.code,
                    quote.item,
                    quote.unit,
                    format(quote.amount, "f"),
                    role,
                    str(round_half_away(to_monmin(quote, cm).monmin, 0)),
                    cm.source.value,
                ]
            )
    _note_cm_sources(used)
    _deliver(buffer.getvalue(), out)


@cli.command("percent")
@click.option("--basket", "basket_path", required=True, help="Basket CSV file with salary rows.")
@click.option("--out", default=None, help="Write the listing to this path instead of stdout.")
def cmd_percent(basket_path, out):
    """Each basket item as a percent of that basket's salary."""
    baskets = _run_load(ingest.load_basket, basket_path)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["country", "currency", "item", "unit", "percent"])
    for basket in baskets:
        if basket.salary is None:
            raise MonMinError(f"basket {basket.country} has no salary row")
        one = MonMinValue(basket.currency, Decimal(1), CmSource.MANUAL)
        salary = to_monmin(basket.salary, one)
        for quote in list(basket.items) + [basket.salary]:
            value = percent_of_salary(to_monmin(quote, one), salary)
            writer.writerow(
                [basket.country, basket.currency.code, quote.item, quote.unit,
                 str(round_half_away(value, 2))]
            )
    _deliver(buffer.getvalue(), out)


@cli.command("series")
@click.option("--series", "series_path", required=True, help="Yearly aggregates CSV file.")
@click.option("--currency", default="USD", help="Currency of the series (default USD).")
@click.option("--tetcy", envvar="MONMIN_TETCY", default=None, help=_TETCY_HELP)
@click.option("--config", "config_path", default=None, help="Optional JSON config file.")
@click.option("--format", "fmt", type=click.Choice(["csv", "text"]), default=None)
@click.option("--extrema", is_flag=True, help="Also report local peak and trough years.")
@click.option("--plot-data", "plot_path", default=None, help="Write plot data to this path.")
@click.option("--out", default=None, help="Write the table to this path instead of stdout.")
def cmd_series(series_path, currency, tetcy, config_path, fmt, extrema, plot_path, out):
    """Yearly M1 in Monetary Minutes: table, optional extrema and plot data."""
    config = _load_config(config_path)
    std = _resolve_std(tetcy, config)
    aggregate = _run_load(
        ingest.load_series, series_path, currency=CurrencyCode(currency.upper()), std=std
    )
    spec, rows = report.build_table5(aggregate)
    _deliver(report.render_table(spec, rows, _resolve_fmt(fmt, config)), out)
    found = None
    if extrema:
        found = detect_extrema(series_in_monmin(aggregate))
        click.echo(f"peaks: {' '.join(str(y) for y in found.peaks)}")
        click.echo(f"troughs: {' '.join(str(y) for y in found.troughs)}")
    if plot_path:
        Path(plot_path).write_text(
            report.emit_plot_data(aggregate, found), encoding="utf-8", newline=""
        )


@cli.command("report")
@click.option("--table", "table_id", required=True, type=click.Choice(["1", "2", "3", "4", "4b", "5"]))
@click.option("--economies", "economies_path", default=None, help="Economies CSV file.")
@click.option("--rates", "rates_path", default=None, help="Exchange-rate CSV file.")
@click.option("--basket", "basket_path", default=None, help="Basket CSV file.")
@click.option("--series", "series_path", default=None, help="Yearly aggregates CSV file.")
@click.option("--cm", "cm_entries", multiple=True, help="CODE=VALUE manual minute value (repeatable).")
@click.option("--currency", default="USD", help="Series currency (table 5 only).")
@click.option("--tetcy", envvar="MONMIN_TETCY", default=None, help=_TETCY_HELP)
@click.option("--config", "config_path", default=None, help="Optional JSON config file.")
@click.option("--format", "fmt", type=click.Choice(["csv", "text"]), default=None)
@click.option("--out", default=None, help="Write the table to this path instead of stdout.")
def cmd_report(
    table_id, economies_path, rates_path, basket_path, series_path,
    cm_entries, currency, tetcy, config_path, fmt, out,
):
    """Render one of the standard tables (1, 2, 3, 4, 4b, 5)."""
    config = _load_config(config_path)
    std = _resolve_std(tetcy, config)

    if table_id == "1":
        if not economies_path:
            raise click.UsageError("table 1 needs --economies")
        snapshots = _run_load(ingest.load_economies, economies_path)
        spec, rows = report.build_table1(snapshots, std)
    elif table_id == "2":
        if not rates_path:
            raise click.UsageError("table 2 needs --rates")
        rates = _run_load(ingest.load_rates, rates_path)
        bases = {rate.base.code for rate in rates}
        if len(bases) != 1:
            raise ShapeMismatch(f"table 2 needs a single-base rate table, got bases {sorted(bases)}")
        base_code = bases.pop()
        cms = _parse_cm_options(cm_entries)
        base_cm = cms.pop(base_code, None)
        if base_cm is None:
            raise click.UsageError(f"table 2 needs --cm {base_code}=<value> for the base currency")
        spec, rows = report.build_table2(base_cm, rates, cms)
    elif table_id in ("3", "4"):
        if not basket_path:
            raise click.UsageError(f"table {table_id} needs --basket")
        cms = _gather_cms(cm_entries, economies_path, std)
        baskets = _run_load(ingest.load_basket, basket_path, known_currencies=cms.keys())
        build = report.build_table3 if table_id == "3" else report.build_table4
        spec, rows = build(baskets, cms)
        _note_cm_sources({b.currency.code: cms[b.currency.code] for b in baskets})
    elif table_id == "4b":
        if not basket_path:
            raise click.UsageError("table 4b needs --basket")
        baskets = _run_load(ingest.load_basket, basket_path)
        spec, rows = report.build_table4b(baskets)
    else:
        if not series_path:
            raise click.UsageError("table 5 needs --series")
        aggregate = _run_load(
            ingest.load_series, series_path, currency=CurrencyCode(currency.upper()), std=std
        )
        spec, rows = report.build_table5(aggregate)

    _deliver(report.render_table(spec, rows, _resolve_fmt(fmt, config)), out)


def main(argv=None) -> int:
    """Run the CLI and map outcomes to exit codes (0 ok, 1 usage, 2 data)."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        hint = exc.ctx.get_usage() if exc.ctx else None
        if hint:
            click.echo(hint, err=True)
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except (MonMinError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

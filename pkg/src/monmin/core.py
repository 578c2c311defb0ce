"""Core Monetary Minute types and arithmetic.

A Monetary Minute is the 1/525600 share of an economy's yearly time
capacity; its price in a currency equals GDP per capita divided by the
minutes-per-year constant.  This module holds the immutable domain types
and the pure operations on them: computing per-economy minute values,
deriving them across exchange rates, re-pricing quotes in minutes,
hypothetical parity rates, and salary normalization.

All arithmetic is `decimal.Decimal` at the interpreter's default 28-digit
precision; nothing here rounds for display (that is the report layer's
job).  Every type is a frozen value, every operation a pure function, so
everything is safe to share across threads.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from datetime import date
from decimal import Decimal
from enum import Enum

from .errors import (
    CurrencyMismatch,
    DuplicatePair,
    ItemMismatch,
    ItemMismatchWarning,
    NonPositiveInput,
)

#: Postulated minutes in a year (365 d x 24 h x 60 min).
MINUTES_PER_YEAR = Decimal("525600")

#: Astronomical year length in minutes, selectable instead of the postulate.
MINUTES_PER_YEAR_ASTRONOMICAL = Decimal("525948.766")

_CODE_RE = re.compile(r"^[A-Z0-9]{3,4}$")


def as_decimal(value) -> Decimal:
    """Coerce int/str/float/Decimal to Decimal.

    Floats go through ``str()`` so that binary representation noise does
    not leak into exact decimal arithmetic.
    """
    if isinstance(value, Decimal):
        return value
    if isinstance(value, (int, str)):
        return Decimal(value)
    if isinstance(value, float):
        return Decimal(str(value))
    raise TypeError(f"cannot convert {type(value).__name__} to Decimal")


@dataclass(frozen=True)
class CurrencyCode:
    """ISO-style currency identifier, e.g. USD or CZK.

    Equality and hashing use the code only; the display symbol is
    cosmetic.
    """

    code: str
    symbol: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.code, str) or not _CODE_RE.match(self.code):
            raise ValueError(
                f"currency code must be 3-4 uppercase characters, got {self.code!r}"
            )

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class TimeStandard:
    """The minutes-per-year constant a Monetary Minute is defined against."""

    minutes_per_year: Decimal = MINUTES_PER_YEAR

    def __post_init__(self):
        object.__setattr__(self, "minutes_per_year", as_decimal(self.minutes_per_year))
        if self.minutes_per_year <= 0:
            raise NonPositiveInput(
                f"minutes_per_year must be > 0, got {self.minutes_per_year}"
            )


@dataclass(frozen=True)
class EconomySnapshot:
    """One country's GDP, population and currency at a reference date.

    ``gdp`` is in absolute currency units, never in billions; loaders
    multiply out any scale factor before building a snapshot.
    """

    country: str
    currency: CurrencyCode
    gdp: Decimal
    population: int
    as_of: date

    def __post_init__(self):
        object.__setattr__(self, "gdp", as_decimal(self.gdp))
        if isinstance(self.as_of, str):
            object.__setattr__(self, "as_of", date.fromisoformat(self.as_of))
        if self.gdp <= 0:
            raise NonPositiveInput(f"{self.country}: gdp must be > 0, got {self.gdp}")
        if not isinstance(self.population, int) or self.population <= 0:
            raise NonPositiveInput(
                f"{self.country}: population must be a positive integer, "
                f"got {self.population!r}"
            )

    def gdp_per_capita(self) -> Decimal:
        return self.gdp / self.population


class CmSource(Enum):
    """Provenance of a minute value; provenances are never silently mixed."""

    COMPUTED_FROM_GDP = "computed_from_gdp"
    CROSS_RATE = "cross_rate"
    MANUAL = "manual"


@dataclass(frozen=True)
class MonMinValue:
    """Price of one Monetary Minute: currency units per minute."""

    currency: CurrencyCode
    value: Decimal
    source: CmSource = CmSource.MANUAL

    def __post_init__(self):
        object.__setattr__(self, "value", as_decimal(self.value))
        if self.value <= 0:
            raise NonPositiveInput(
                f"minute value must be > 0, got {self.value} {self.currency}"
            )


@dataclass(frozen=True)
class ExchangeRate:
    """Directed rate: units of ``quote`` per 1 unit of ``base``."""

    base: CurrencyCode
    quote: CurrencyCode
    rate: Decimal
    as_of: date | None = None

    def __post_init__(self):
        object.__setattr__(self, "rate", as_decimal(self.rate))
        if isinstance(self.as_of, str):
            object.__setattr__(self, "as_of", date.fromisoformat(self.as_of))
        if self.rate <= 0:
            raise NonPositiveInput(
                f"rate {self.base}->{self.quote} must be > 0, got {self.rate}"
            )
        if self.base == self.quote:
            raise ValueError(f"base and quote must differ, both are {self.base}")


class RateTable:
    """Exchange rates keyed by (base, quote), at most one per pair.

    Immutable after construction; iteration preserves insertion order so
    rendered output is deterministic.
    """

    def __init__(self, rates=()):
        self._rates: dict[tuple[str, str], ExchangeRate] = {}
        for rate in rates:
            key = (rate.base.code, rate.quote.code)
            if key in self._rates:
                raise DuplicatePair(f"duplicate rate for {key[0]}->{key[1]}")
            self._rates[key] = rate

    def get(self, base, quote) -> ExchangeRate | None:
        return self._rates.get((str(base), str(quote)))

    def __iter__(self):
        return iter(self._rates.values())

    def __len__(self) -> int:
        return len(self._rates)

    def __contains__(self, pair) -> bool:
        base, quote = pair
        return (str(base), str(quote)) in self._rates

    def __eq__(self, other) -> bool:
        if not isinstance(other, RateTable):
            return NotImplemented
        return self._rates == other._rates

    def __repr__(self) -> str:
        return f"RateTable({list(self._rates.values())!r})"

    def reciprocal_mismatches(self, rel_tol: Decimal = Decimal("1e-6")):
        """Pairs (a,b)/(b,a) whose rate product strays from 1 beyond rel_tol."""
        found = []
        for (base, quote), fwd in self._rates.items():
            if base > quote:
                continue  # report each pair once
            back = self._rates.get((quote, base))
            if back is None:
                continue
            product = fwd.rate * back.rate
            if abs(product - 1) > rel_tol:
                found.append((fwd, back, product))
        return found


@dataclass(frozen=True)
class PriceQuote:
    """A priced item (or salary) in a named currency."""

    item: str
    unit: str
    currency: CurrencyCode
    amount: Decimal

    def __post_init__(self):
        object.__setattr__(self, "amount", as_decimal(self.amount))
        if self.amount < 0:
            raise NonPositiveInput(
                f"{self.item}: amount must be >= 0, got {self.amount}"
            )


@dataclass(frozen=True)
class MonMinPrice:
    """A price re-expressed in Monetary Minutes of one currency context."""

    item: str
    currency_context: CurrencyCode
    monmin: Decimal

    def __post_init__(self):
        object.__setattr__(self, "monmin", as_decimal(self.monmin))
        if self.monmin < 0:
            raise NonPositiveInput(
                f"{self.item}: minute price must be >= 0, got {self.monmin}"
            )


def compute_cm(econ: EconomySnapshot, std: TimeStandard = TimeStandard()) -> MonMinValue:
    """Minute value of an economy: gdp / population / minutes_per_year.

    Full 28-digit precision is kept; callers round only when reporting.
    """
    if econ.gdp <= 0 or econ.population <= 0:
        raise NonPositiveInput(f"{econ.country}: gdp and population must be > 0")
    value = econ.gdp / econ.population / std.minutes_per_year
    return MonMinValue(currency=econ.currency, value=value, source=CmSource.COMPUTED_FROM_GDP)


def cross_cm(ref: MonMinValue, rate: ExchangeRate) -> MonMinValue:
    """Minute value in another currency: ref value times the directed rate."""
    if rate.base != ref.currency:
        raise CurrencyMismatch(
            f"rate base {rate.base} does not match reference currency {ref.currency}"
        )
    return MonMinValue(
        currency=rate.quote, value=ref.value * rate.rate, source=CmSource.CROSS_RATE
    )


def invert_cm(cm: MonMinValue) -> Decimal:
    """Minutes represented by one unit of the currency: 1 / value."""
    if cm.value <= 0:
        raise NonPositiveInput(f"minute value must be > 0, got {cm.value}")
    return 1 / cm.value


def to_monmin(price: PriceQuote, cm: MonMinValue) -> MonMinPrice:
    """Re-express a currency price in Monetary Minutes: amount / value."""
    if price.currency != cm.currency:
        raise CurrencyMismatch(
            f"price in {price.currency} cannot use a {cm.currency} minute value"
        )
    if cm.value <= 0:
        raise NonPositiveInput(f"minute value must be > 0, got {cm.value}")
    return MonMinPrice(
        item=price.item, currency_context=cm.currency, monmin=price.amount / cm.value
    )


def from_monmin(mp: MonMinPrice, cm: MonMinValue, unit: str = "") -> PriceQuote:
    """Inverse of :func:`to_monmin`: amount = minutes times the minute value."""
    if mp.currency_context != cm.currency:
        raise CurrencyMismatch(
            f"minute price in {mp.currency_context} context cannot use a "
            f"{cm.currency} minute value"
        )
    return PriceQuote(
        item=mp.item, unit=unit, currency=cm.currency, amount=mp.monmin * cm.value
    )


def parity_rate(
    current_rate: ExchangeRate,
    ref_price: MonMinPrice,
    local_price: MonMinPrice,
    strict_items: bool = False,
) -> Decimal:
    """Hypothetical rate equalizing an item's nominal minute price.

    Scales the current rate by the ratio of the reference to the local
    minute price; at that rate the local market's minute price of the
    item would equal the reference market's.

    Differing item names warn by default (``ItemMismatchWarning``) and
    raise :class:`ItemMismatch` when ``strict_items`` is set.
    """
    if local_price.monmin <= 0:
        raise NonPositiveInput(
            f"local minute price must be > 0, got {local_price.monmin}"
        )
    if ref_price.item != local_price.item:
        message = (
            f"parity compares different items: {ref_price.item!r} vs "
            f"{local_price.item!r}"
        )
        if strict_items:
            raise ItemMismatch(message)
        warnings.warn(message, ItemMismatchWarning, stacklevel=2)
    return current_rate.rate * ref_price.monmin / local_price.monmin


def percent_of_salary(price: MonMinPrice, salary: MonMinPrice) -> Decimal:
    """Price as a percentage of a salary, both in the same minute context.

    The minute value cancels, so the result equals 100 * raw price /
    raw salary computed in the underlying currency.
    """
    if price.currency_context != salary.currency_context:
        raise CurrencyMismatch(
            f"price context {price.currency_context} differs from salary "
            f"context {salary.currency_context}"
        )
    if salary.monmin <= 0:
        raise NonPositiveInput(f"salary must be > 0, got {salary.monmin}")
    return 100 * price.monmin / salary.monmin

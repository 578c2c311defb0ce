from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


def golden_runs() -> list[tuple[str, list[str]]]:
    """The report invocations whose outputs are frozen as golden files."""
    fix = str(FIXTURES)
    return [
        ("table1.csv", ["report", "--table", "1", "--economies", f"{fix}/economies_table1.csv"]),
        ("table1.txt", ["report", "--table", "1", "--economies", f"{fix}/economies_table1.csv",
                        "--format", "text"]),
        ("table2.csv", ["report", "--table", "2", "--rates", f"{fix}/rates_table2.csv",
                        "--cm", "USD=0.11918", "--cm", "GBP=0.170789",
                        "--cm", "JPY=0.00157685", "--cm", "CNY=0.00023033"]),
        ("table3.csv", ["report", "--table", "3", "--basket", f"{fix}/basket_commodities.csv",
                        "--cm", "USD=0.121001", "--cm", "CZK=0.951979",
                        "--cm", "EUR=0.077722", "--cm", "GBP=0.014648"]),
        ("table4.csv", ["report", "--table", "4", "--basket", f"{fix}/basket_food.csv",
                        "--cm", "USD=0.12101", "--cm", "EUR=0.07772", "--cm", "GBP=0.014548",
                        "--cm", "JPY=8.2873", "--cm", "CNY=0.0347", "--cm", "CZK=0.95198"]),
        ("table4b.csv", ["report", "--table", "4b", "--basket", f"{fix}/basket_food.csv"]),
        ("table5.csv", ["report", "--table", "5", "--series", f"{fix}/series_us.csv"]),
    ]

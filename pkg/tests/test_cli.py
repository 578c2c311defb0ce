import json
from decimal import Decimal as D

from monmin.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def economies_arg(fixtures):
    return str(fixtures / "economies_table1.csv")


class TestCm:
    def test_table1_default_standard(self, capsys, fixtures):
        code, out, err = run(capsys, "cm", "--economies", economies_arg(fixtures))
        assert code == 0
        us = next(line for line in out.splitlines() if line.startswith("United States"))
        assert ",0.1210095," in us

    def test_alternative_standard_via_flag(self, capsys, fixtures):
        code, out, _ = run(
            capsys, "cm", "--economies", economies_arg(fixtures), "--tetcy", "525948.766"
        )
        assert code == 0
        us = next(line for line in out.splitlines() if line.startswith("United States"))
        cell = D(us.split(",")[5])
        assert abs(cell - D("0.1209293")) <= D("5e-7")

    def test_env_var_sets_standard(self, capsys, fixtures, monkeypatch):
        monkeypatch.setenv("MONMIN_TETCY", "525948.766")
        code, out, _ = run(capsys, "cm", "--economies", economies_arg(fixtures))
        us = next(line for line in out.splitlines() if line.startswith("United States"))
        assert abs(D(us.split(",")[5]) - D("0.1209293")) <= D("5e-7")

    def test_flag_wins_over_env_var(self, capsys, fixtures, monkeypatch):
        monkeypatch.setenv("MONMIN_TETCY", "525948.766")
        code, out, _ = run(
            capsys, "cm", "--economies", economies_arg(fixtures), "--tetcy", "525600"
        )
        us = next(line for line in out.splitlines() if line.startswith("United States"))
        assert ",0.1210095," in us

    def test_missing_file_exits_2(self, capsys):
        code, out, err = run(capsys, "cm", "--economies", "missing.csv")
        assert code == 2
        assert out == ""
        assert "file not found" in err

    def test_ingest_errors_exit_2_with_line_messages(self, capsys, tmp_path):
        bad = tmp_path / "e.csv"
        bad.write_text("country,currency,gdp,population,as_of\nX,USD,100,0,2019-01-01\n")
        code, out, err = run(capsys, "cm", "--economies", str(bad))
        assert code == 2
        assert ":2: error: NonPositiveInput" in err

    def test_missing_required_flag_exits_1(self, capsys):
        code, _, err = run(capsys, "cm")
        assert code == 1

    def test_text_format(self, capsys, fixtures):
        code, out, _ = run(
            capsys, "cm", "--economies", economies_arg(fixtures), "--format", "text"
        )
        assert code == 0
        assert out.splitlines()[0].startswith("country")
        assert "," not in out.splitlines()[1]


class TestConvert:
    def test_gold_with_explicit_cm(self, capsys):
        code, out, _ = run(capsys, "convert", "--amount", "1447", "--cm", "0.121001")
        assert code == 0
        assert abs(int(out.strip()) - 11958) <= 1

    def test_cotton(self, capsys):
        code, out, _ = run(capsys, "convert", "--amount", "61.71", "--cm", "0.121001")
        assert abs(int(out.strip()) - 510) <= 1

    def test_zero(self, capsys):
        code, out, _ = run(capsys, "convert", "--amount", "0", "--cm", "1")
        assert code == 0 and out.strip() == "0"

    def test_decimals_flag(self, capsys):
        code, out, _ = run(
            capsys, "convert", "--amount", "1447", "--cm", "0.121001", "--decimals", "2"
        )
        assert out.strip() == "11958.58"

    def test_from_economies(self, capsys, fixtures):
        code, out, _ = run(
            capsys, "convert", "--amount", "1447", "--economies", economies_arg(fixtures),
            "--country", "United States",
        )
        assert code == 0
        assert abs(int(out.strip()) - 11958) <= 2  # full-precision cm, not the printed one

    def test_unknown_country_exits_2(self, capsys, fixtures):
        code, _, err = run(
            capsys, "convert", "--amount", "1", "--economies", economies_arg(fixtures),
            "--country", "Atlantis",
        )
        assert code == 2 and "Atlantis" in err

    def test_currency_mismatch_exits_2(self, capsys, fixtures):
        code, _, err = run(
            capsys, "convert", "--amount", "1", "--economies", economies_arg(fixtures),
            "--country", "Japan", "--currency", "USD",
        )
        assert code == 2

    def test_missing_cm_source_is_usage_error(self, capsys):
        code, _, err = run(capsys, "convert", "--amount", "1")
        assert code == 1
        assert "usage error" in err

    def test_both_cm_sources_is_usage_error(self, capsys, fixtures):
        code, _, _ = run(
            capsys, "convert", "--amount", "1", "--cm", "1",
            "--economies", economies_arg(fixtures), "--country", "Japan",
        )
        assert code == 1


class TestParity:
    def test_gold_czk_per_gbp(self, capsys):
        code, out, _ = run(capsys, "parity", "--rate", "28.409", "--ref", "11958", "--local", "79155")
        assert code == 0 and out.strip() == "4.292"

    def test_equal_prices(self, capsys):
        code, out, _ = run(capsys, "parity", "--rate", "5", "--ref", "100", "--local", "100")
        assert out.strip() == "5.000"

    def test_mcmeal_jpy(self, capsys):
        code, out, _ = run(capsys, "parity", "--rate", "108.33", "--ref", "58", "--local", "82")
        assert abs(D(out.strip()) - D("76.617")) <= D("0.01")

    def test_zero_local_exits_2(self, capsys):
        code, _, err = run(capsys, "parity", "--rate", "1", "--ref", "1", "--local", "0")
        assert code == 2


class TestBasketAndPercent:
    def test_basket_listing(self, capsys, fixtures):
        code, out, err = run(
            capsys, "basket", "--basket", str(fixtures / "basket_commodities.csv"),
            "--cm", "USD=0.121001", "--cm", "CZK=0.951979",
            "--cm", "EUR=0.077722", "--cm", "GBP=0.014648",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "country,currency,item,unit,amount,role,monmin,cm_source"
        gold_usd = next(line for line in lines if ",USD,Gold," in line)
        assert ",11959,manual" in gold_usd or ",11958,manual" in gold_usd
        assert "cm USD=0.121001 source=manual" in err

    def test_basket_from_economies(self, capsys, fixtures):
        code, out, err = run(
            capsys, "basket", "--basket", str(fixtures / "basket_commodities.csv"),
            "--economies", economies_arg(fixtures),
        )
        assert code == 0
        assert "source=computed_from_gdp" in err

    def test_basket_unknown_currency_exits_2(self, capsys, fixtures):
        code, _, err = run(
            capsys, "basket", "--basket", str(fixtures / "basket_commodities.csv"),
            "--cm", "USD=0.121001",
        )
        assert code == 2
        assert "UnknownCurrency" in err

    def test_basket_needs_cm_source(self, capsys, fixtures):
        code, _, _ = run(capsys, "basket", "--basket", str(fixtures / "basket_commodities.csv"))
        assert code == 1

    def test_percent(self, capsys, fixtures):
        code, out, _ = run(capsys, "percent", "--basket", str(fixtures / "basket_food.csv"))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "country,currency,item,unit,percent"
        mcmeal = next(line for line in lines if line.startswith("United States") and "McMeal" in line)
        assert mcmeal.endswith("0.22")
        salary = next(line for line in lines if line.startswith("United States") and "Salary" in line)
        assert salary.endswith("100.00")

    def test_percent_requires_salary(self, capsys, fixtures):
        code, _, err = run(capsys, "percent", "--basket", str(fixtures / "basket_commodities.csv"))
        assert code == 2
        assert "salary" in err


class TestSeries:
    def test_table_and_extrema(self, capsys, fixtures):
        code, out, _ = run(
            capsys, "series", "--series", str(fixtures / "series_us.csv"), "--extrema"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "year,m1_billions,m1_monmin_billions,gdp_billions,events"
        assert len([line for line in lines if line[:4].isdigit()]) == 57
        troughs = next(line for line in lines if line.startswith("troughs:"))
        assert "2008" in troughs
        peaks = next(line for line in lines if line.startswith("peaks:"))
        assert "1987" in peaks and "1994" in peaks

    def test_plot_data_file(self, capsys, fixtures, tmp_path):
        plot = tmp_path / "plot.csv"
        code, _, _ = run(
            capsys, "series", "--series", str(fixtures / "series_us.csv"),
            "--extrema", "--plot-data", str(plot),
        )
        assert code == 0
        lines = plot.read_text().splitlines()
        assert len(lines) == 58
        assert next(line for line in lines if line.startswith("2008,")).endswith(",trough")

    def test_two_row_series_with_extrema_exits_2(self, capsys, tmp_path):
        short = tmp_path / "s.csv"
        short.write_text("year,m1,gdp,population,events\n1960,1,2,3,\n1961,1,2,3,\n")
        code, _, err = run(capsys, "series", "--series", str(short), "--extrema")
        assert code == 2
        assert "3 points" in err

    def test_out_file_matches_stdout(self, capsys, fixtures, tmp_path):
        code, out, _ = run(capsys, "series", "--series", str(fixtures / "series_us.csv"))
        target = tmp_path / "t5.csv"
        code2, out2, _ = run(
            capsys, "series", "--series", str(fixtures / "series_us.csv"), "--out", str(target)
        )
        assert code == code2 == 0
        assert target.read_text() == out
        assert out2 == ""


class TestReportCommand:
    def test_usage_error_when_input_missing(self, capsys):
        code, _, err = run(capsys, "report", "--table", "1")
        assert code == 1
        assert "needs --economies" in err

    def test_bad_table_choice_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "report", "--table", "7")
        assert code == 1

    def test_table2_requires_base_cm(self, capsys, fixtures):
        code, _, err = run(
            capsys, "report", "--table", "2", "--rates", str(fixtures / "rates_table2.csv")
        )
        assert code == 1
        assert "USD=" in err

    def test_table1_out_file(self, capsys, fixtures, tmp_path):
        target = tmp_path / "t1.csv"
        code, out, _ = run(
            capsys, "report", "--table", "1", "--economies", economies_arg(fixtures),
            "--out", str(target),
        )
        assert code == 0 and out == ""
        assert "0.1210095" in target.read_text()


class TestConfigFile:
    def test_tetcy_from_config(self, capsys, fixtures, tmp_path):
        config = tmp_path / "monmin.json"
        config.write_text(json.dumps({"tetcy": "525948.766"}))
        code, out, _ = run(
            capsys, "cm", "--economies", economies_arg(fixtures), "--config", str(config)
        )
        us = next(line for line in out.splitlines() if line.startswith("United States"))
        assert abs(D(us.split(",")[5]) - D("0.1209293")) <= D("5e-7")

    def test_flag_wins_over_config(self, capsys, fixtures, tmp_path):
        config = tmp_path / "monmin.json"
        config.write_text(json.dumps({"tetcy": "525948.766"}))
        code, out, _ = run(
            capsys, "cm", "--economies", economies_arg(fixtures),
            "--config", str(config), "--tetcy", "525600",
        )
        us = next(line for line in out.splitlines() if line.startswith("United States"))
        assert ",0.1210095," in us

    def test_bad_config_is_usage_error(self, capsys, fixtures, tmp_path):
        config = tmp_path / "monmin.json"
        config.write_text("[1, 2]")
        code, _, _ = run(
            capsys, "cm", "--economies", economies_arg(fixtures), "--config", str(config)
        )
        assert code == 1

import csv
import io
import json

import pytest

from fuzzyreason.evaluation import TargetMode, expected_target, rpcf_single
from fuzzyreason.harness import (
    ROSTER,
    ConfigError,
    ExperimentConfig,
    config_from_mapping,
    load_config,
    oracle_check,
    parse_variant,
    render_report,
    report_from_json,
    run_suite,
    select_variants,
)
from fuzzyreason.harness.cli import main
from fuzzyreason.harness.golden import GOLDEN, ERRATUM, UNRECONSTRUCTABLE, printed_match
from fuzzyreason.harness.oracle import BUG, ERRATUM_LABEL, MATCHES, has_bugs
from fuzzyreason.harness.render import CSV_HEADER


@pytest.fixture(scope="module")
def class1():
    return run_suite(load_config())


@pytest.fixture(scope="module")
def both_classes():
    return run_suite(load_config().replace(classes=(1, 2)))


class TestConfig:
    def test_defaults(self):
        config = load_config()
        assert config.classes == (1,)
        assert config.target_mode is TargetMode.HEDGED
        assert config.methods == ROSTER
        assert config.tilted_fmt_premise is not None

    def test_inline_toml(self):
        config = load_config('methods = ["cri", "DMM-three"]\nclasses = [2, 1]\ntarget_mode = "plain"\n')
        assert {v.method for v in config.methods} == {"CRI", "DMM"}
        assert config.classes == (1, 2)
        assert config.target_mode is TargetMode.PLAIN

    def test_file(self, tmp_path):
        path = tmp_path / "run.toml"
        path.write_text("format = 'csv'\ntolerance = 0.1\n")
        config = load_config(str(path))
        assert config.output_format == "csv" and config.tolerance == 0.1

    @pytest.mark.parametrize("data, field", [
        ({"antecedent": [1.2, 0]}, "antecedent"),
        ({"antecedent": []}, "antecedent"),
        ({"methods": ["hamacher"]}, "methods"),
        ({"classes": [3]}, "classes"),
        ({"target_mode": "max"}, "target_mode"),
        ({"tolerance": -1}, "tolerance"),
        ({"format": "xml"}, "format"),
        ({"fmt_tilt": "sideways"}, "fmt_tilt"),
        ({"colour": "blue"}, "colour"),
        ({"tilted_fmp_premise": [1, 0]}, "tilted_fmp_premise"),
    ])
    def test_errors_name_the_field(self, data, field):
        with pytest.raises(ConfigError) as info:
            config_from_mapping(data)
        assert info.value.field == field

    def test_custom_rule_needs_tilts_for_class_2(self):
        with pytest.raises(ConfigError):
            config_from_mapping({"antecedent": [1, 0.5, 0], "consequent": [0, 0.5, 1], "classes": [2]})
        config = config_from_mapping({"antecedent": [1, 0.5, 0], "consequent": [0, 0.5, 1]})
        assert config.tilted_fmp_premise is None

    def test_nested_tables_rejected(self):
        with pytest.raises(ConfigError):
            load_config("[section]\nkey = 1\n")

    def test_malformed_toml(self):
        with pytest.raises(ConfigError):
            load_config("methods = [\n")


class TestVariants:
    def test_roster(self):
        assert len(ROSTER) == 17

    def test_parse(self):
        assert parse_variant("cri:goedel").label == "CRI-Goedel"
        assert parse_variant("QIP-Gödel").label == "QIP-Goedel"
        assert parse_variant("dmm:three").method == "DMM"
        with pytest.raises(ValueError):
            parse_variant("TIP-Zadeh")

    def test_select_keeps_roster_order(self):
        chosen = select_variants(["dmm", "cri:r0"])
        assert [v.label for v in chosen] == ["CRI-R0", "DMM-P(+1,0,-1)", "DMM-P(+1,-1)"]


class TestRunner:
    def test_row_count(self, class1, both_classes):
        assert len(class1.rows) == 17 * 8
        assert len(both_classes.rows) == 17 * 10

    def test_every_rpcf_recomputes_from_its_row(self, both_classes):
        config = load_config().replace(classes=(1, 2))
        for r in both_classes.rows:
            assert r.rpcf == rpcf_single(r.conclusion, r.target)
            assert r.target == expected_target(config.rule, config.case(r.case))

    def test_deterministic(self):
        config = load_config()
        first, second = run_suite(config), run_suite(config)
        assert render_report(first, "csv") == render_report(second, "csv")
        assert render_report(first, "json") == render_report(second, "json")

    def test_best_mode_never_scores_lower(self, class1):
        best = run_suite(load_config().replace(target_mode=TargetMode.BEST))
        for r in class1.rows:
            assert best.row(r.label, r.case).rpcf >= r.rpcf

    def test_aggregates(self, class1):
        agg = class1.aggregate("DMM-P(+1,0,-1)")
        assert agg.fmp_aggregate == pytest.approx(88.0615, abs=1e-4)
        assert class1.aggregate("QIP-Goedel").fmp_aggregate == pytest.approx(79.2114, abs=1e-4)

    def test_notes_only_on_default_rule(self, class1):
        assert any(r.note for r in class1.rows)
        custom = run_suite(config_from_mapping({"antecedent": [1, 0.5, 0], "consequent": [0, 0.5, 1]}))
        assert not any(r.note for r in custom.rows)


class TestRender:
    def test_csv(self, class1):
        text = render_report(class1, "csv")
        rows = list(csv.reader(io.StringIO(text)))
        assert tuple(rows[0]) == CSV_HEADER
        assert len(rows) == 137
        assert float(rows[1][4]) == class1.rows[0].rpcf

    def test_json_round_trip(self, both_classes):
        text = render_report(both_classes, "json")
        back = report_from_json(text)
        assert back.rows == both_classes.rows
        assert back.aggregates == both_classes.aggregates
        assert render_report(back, "json") == text
        data = json.loads(text)
        assert set(data["methods"]["CRI"]) == {"Zadeh", "Lukasiewicz", "Goedel", "R0", "Goguen"}

    def test_markdown(self, class1):
        text = render_report(class1, "markdown")
        assert "### DMM FMP, class 1" in text
        assert "| RPCF |  | 88.06 |" in text
        assert "## Notes" in text

    def test_unknown_format(self, class1):
        with pytest.raises(ValueError):
            render_report(class1, "xml")


class TestCheck:
    def test_default_config_has_no_bugs(self):
        records = oracle_check(load_config().replace(classes=(1, 2)))
        assert not has_bugs(records)
        assert {r.verdict for r in records} == {MATCHES, ERRATUM_LABEL}

    def test_known_erratum_is_recorded(self):
        records = oracle_check(load_config())
        hit = [r for r in records if r.label == "QIP-Lukasiewicz" and r.case == 8 and r.quantity == "rpcf"]
        assert hit and all(r.verdict == ERRATUM_LABEL for r in hit)
        assert any(r.oracle == pytest.approx(30.95, abs=5e-3) for r in hit)

    def test_fixture_statuses(self):
        statuses = {c.status for c in GOLDEN}
        assert ERRATUM in statuses and UNRECONSTRUCTABLE in statuses

    def test_printed_match(self):
        # 95.046 -> 95.05 -> 95.1 when printed to one decimal
        assert printed_match(95.046, "95.1", 0.05)
        assert not printed_match(95.046, "95.10", 0.04)
        assert printed_match(79.2114, "79.21", 0.05)
        assert not printed_match(30.95, "42.95", 0.05)


class TestCli:
    def test_run_csv(self, capsys):
        assert main(["run", "--method", "cri:goedel", "--format", "csv"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert len(out) == 1 + 8 and out[1].startswith("CRI,Goedel,FMP,1,")

    def test_check_exits_zero(self, tmp_path):
        out = tmp_path / "check.txt"
        assert main(["check", "--class", "1", "--out", str(out)]) == 0
        assert f"{BUG}=0" in out.read_text()

    def test_bad_config_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.toml"
        bad.write_text("classes = [7]\n")
        assert main(["run", "--config", str(bad)]) == 2
        assert "classes" in capsys.readouterr().err

    def test_missing_config_exits_2(self, tmp_path):
        assert main(["run", "--config", str(tmp_path / "nope.toml")]) == 2

    def test_bad_tolerance_exits_2(self):
        assert main(["check", "--tolerance", "0"]) == 2

    def test_unknown_method_exits_2(self):
        assert main(["run", "--method", "hamacher"]) == 2

    def test_tables(self, tmp_path):
        assert main(["tables", "--out-dir", str(tmp_path)]) == 0
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == ["check.txt", "class1.csv", "class1.json", "class1.md",
                         "class2.csv", "class2.json", "class2.md"]


def test_config_dataclass_is_frozen():
    with pytest.raises(Exception):
        ExperimentConfig().classes = (2,)

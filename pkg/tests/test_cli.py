"""CLI driver: exit-code classes, formats, determinism, validation errors."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from shiftchaos import catalog
from shiftchaos.cli import main, validate_config, CLIError


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSuiteMode:
    def test_bare_example_agrees(self, capsys):
        code, out, _ = run_cli(capsys, "run", "--example", "ex2_kothe_dc_not_hc")
        assert code == 0
        assert "agrees" in out

    @pytest.mark.parametrize("name", ["ex1_s_Z_hc_not_dc", "rolewicz_lp_N",
                                      "unweighted_lp_N"])
    def test_all_suites_exit_zero(self, capsys, name):
        code, out, _ = run_cli(capsys, "run", "--example", name)
        assert code == 0


class TestVerdictClassMode:
    def test_negative_check_exits_one(self, capsys):
        code, out, _ = run_cli(capsys, "run", "--example", "unweighted_lp_N",
                               "--check", "dc_search")
        assert code == 1
        assert "no-witness-found-at-horizon" in out

    def test_positive_check_exits_zero(self, capsys):
        code, out, _ = run_cli(capsys, "run", "--example", "ex2_kothe_dc_not_hc",
                               "--check", "dc")
        assert code == 0
        assert "condition-B-holds-at-horizon" in out or "certified" in out

    def test_inconclusive_exits_two(self, capsys, tmp_path):
        cfg = catalog.export_config("rolewicz_lp_N")
        # a deep anchor neither dips nor clears a refutation floor
        cfg["checks"] = [{"kind": "mly",
                          "condition_A": {"anchor": 1000, "horizon": 200}}]
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps(cfg))
        code, out, _ = run_cli(capsys, "run", "--config", str(path))
        assert code == 2
        assert "inconclusive" in out

    def test_exported_refutation_entry_exits_one(self, capsys, tmp_path):
        # entries whose checks include deliberate refutations report class 1
        path = tmp_path / "ex4.json"
        path.write_text(json.dumps(catalog.export_config("ex4_lp_mly_not_hc")))
        code, out, _ = run_cli(capsys, "run", "--config", str(path))
        assert code == 1


class TestHorizonOverride:
    def test_override_applies_everywhere(self, capsys):
        code, out, _ = run_cli(capsys, "run", "--example", "ex3_s_Z_hc_not_mly",
                               "--check", "mly", "--horizon", "5000",
                               "--format", "json")
        assert code == 1  # the refutation still holds at the shorter horizon
        doc = json.loads(out)
        assert [c["params"]["horizon"] for c in doc["checks"]] == [5000]


class TestErrors:
    def test_requires_exactly_one_source(self, capsys, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text("{}")
        code, _, err = run_cli(capsys, "run")
        assert code == 3 and "exactly one" in err
        code, _, err = run_cli(capsys, "run", "--config", str(path),
                               "--example", "rolewicz_lp_N")
        assert code == 3 and "exactly one" in err

    def test_unknown_example(self, capsys):
        code, _, err = run_cli(capsys, "run", "--example", "nope")
        assert code == 3

    def test_unknown_check_kind(self, capsys):
        code, _, err = run_cli(capsys, "run", "--example", "rolewicz_lp_N",
                               "--check", "nope")
        assert code == 3

    def test_check_kind_absent_from_entry(self, capsys):
        code, _, err = run_cli(capsys, "run", "--example", "rolewicz_lp_N",
                               "--check", "f3")
        assert code == 3 and "no check of kind" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "run", "--config",
                               str(tmp_path / "absent.json"))
        assert code == 3 and "cannot read config" in err

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "run", "--config", str(path))
        assert code == 3 and "cannot read config" in err

    def test_schema_rejection_message(self, capsys, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text("{}")
        code, _, err = run_cli(capsys, "run", "--config", str(path))
        assert code == 3
        assert "config rejected at (top level):" in err
        assert "required property" in err

    def test_schema_rejects_bad_subtree(self, tmp_path):
        cfg = catalog.export_config("rolewicz_lp_N")
        cfg["space"]["kind"] = "hilbert"
        with pytest.raises(CLIError, match="config rejected at space"):
            validate_config(cfg)

    def test_exported_configs_validate(self):
        for name in catalog.names():
            validate_config(catalog.export_config(name))


class TestFormats:
    def test_json_shape(self, capsys):
        code, out, _ = run_cli(capsys, "run", "--example", "rolewicz_lp_N",
                               "--check", "lp_c0_dc", "--format", "json")
        doc = json.loads(out)
        assert doc["name"] == "rolewicz_lp_N"
        for check in doc["checks"]:
            assert {"kind", "verdict", "params", "rows"} <= set(check)

    def test_csv_shape(self, capsys):
        code, out, _ = run_cli(capsys, "run", "--example", "rolewicz_lp_N",
                               "--check", "lp_c0_dc", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "# rolewicz_lp_N"
        assert any(line.startswith("# check=") for line in lines)
        header = next(l for l in lines if not l.startswith("#"))
        assert "," in header

    def test_report_format_mentions_verdict(self, capsys):
        code, out, _ = run_cli(capsys, "run", "--example", "rolewicz_lp_N",
                               "--check", "lp_c0_dc")
        assert "run: rolewicz_lp_N" in out
        assert "verdict" in out

    def test_out_flag_writes_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, "run", "--example", "rolewicz_lp_N",
                               "--check", "lp_c0_dc", "--format", "json",
                               "--out", str(path))
        assert code == 0 and out == ""
        json.loads(path.read_text())

    def test_byte_identical_reruns(self, capsys):
        outs = []
        for _ in range(2):
            _, out, _ = run_cli(capsys, "run", "--example",
                                "ex3_s_Z_hc_not_mly", "--format", "json")
            outs.append(out)
        assert outs[0] == outs[1]


class TestExportAndList:
    def test_export_round_trips(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "export", "--example",
                               "halfweights_bilateral")
        assert code == 0
        assert json.loads(out) == catalog.export_config("halfweights_bilateral")

    def test_export_then_run(self, capsys, tmp_path):
        path = tmp_path / "hw.json"
        run_cli(capsys, "export", "--example", "halfweights_bilateral",
                "--out", str(path))
        code, out, _ = run_cli(capsys, "run", "--config", str(path))
        # refutation checks inside the entry put the rerun in class 1
        assert code in (0, 1)
        assert "verdict" in out

    def test_list_names(self, capsys):
        code, out, _ = run_cli(capsys, "list")
        assert code == 0
        for name in catalog.names():
            assert name in out


class TestConsoleScript:
    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-c",
             "import sys; from shiftchaos.cli import main; "
             "sys.exit(main(['list']))"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "rolewicz_lp_N" in proc.stdout

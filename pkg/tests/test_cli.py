import json
import math

import pytest

from graphenergy import cli, laws


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_complete_bipartite_edges(self, capsys):
        code, out, err = run_cli(
            capsys, ["gen", "--n", "4", "--p", "1", "--parts", "0.5,0.5", "--seed", "1"]
        )
        assert code == 0
        assert out.splitlines() == ["0 2", "0 3", "1 2", "1 3"]
        assert "edges=4" in err
        assert "seed=1" in err

    def test_empty_graph(self, capsys):
        code, out, err = run_cli(capsys, ["gen", "--n", "100", "--p", "0", "--seed", "2"])
        assert code == 0
        assert out == ""
        assert "edges=0" in err

    def test_matrix_format_header(self, capsys):
        code, out, _ = run_cli(
            capsys, ["gen", "--n", "3", "--p", "1", "--seed", "0", "--format", "matrix"]
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "3"
        assert lines[1].split() == ["0", "1", "1"]

    def test_byte_identical_repeat(self, tmp_path, capsys):
        paths = [tmp_path / "a.txt", tmp_path / "b.txt"]
        for path in paths:
            code, _, _ = run_cli(
                capsys,
                ["gen", "--n", "30", "--p", "0.5", "--seed", "42", "--out", str(path)],
            )
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_random_seed_is_printed(self, capsys):
        code, _, err = run_cli(capsys, ["gen", "--n", "4", "--p", "0"])
        assert code == 0
        assert "seed=" in err

    def test_bad_fractions_exit_2(self, capsys):
        code, _, err = run_cli(
            capsys, ["gen", "--n", "4", "--p", "0.5", "--parts", "0.5,0.4", "--seed", "1"]
        )
        assert code == 2
        assert "error" in err


class TestEnergy:
    def test_complete_graph(self, capsys):
        code, out, _ = run_cli(capsys, ["energy", "--n", "5", "--p", "1", "--seed", "3"])
        assert code == 0
        assert out.splitlines()[0] == "energy=8"

    def test_empty_graph(self, capsys):
        code, out, _ = run_cli(capsys, ["energy", "--n", "20", "--p", "0", "--seed", "3"])
        assert code == 0
        assert out.splitlines()[0] == "energy=0"

    def test_coeff_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, ["energy", "--n", "50", "--p", "1", "--seed", "3", "--coeff"]
        )
        assert code == 0
        lines = out.splitlines()
        coeff = float(lines[1].split("=")[1])
        assert coeff == pytest.approx(2 * 49 / 50**1.5, rel=1e-9)

    def test_in_file_round_trip(self, tmp_path, capsys):
        path = tmp_path / "m.txt"
        code, _, _ = run_cli(
            capsys,
            ["gen", "--n", "6", "--p", "1", "--seed", "0", "--format", "matrix",
             "--out", str(path)],
        )
        assert code == 0
        code, out, _ = run_cli(capsys, ["energy", "--in", str(path)])
        assert code == 0
        assert out.splitlines()[0] == "energy=10"

    def test_centered_complete_bipartite_is_zero(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["energy", "--n", "4", "--p", "1", "--parts", "0.5,0.5", "--seed", "1",
             "--centered"],
        )
        assert code == 0
        assert out.splitlines()[0] == "energy=0"

    def test_missing_input_exit_2(self, capsys):
        code, _, err = run_cli(capsys, ["energy"])
        assert code == 2
        assert "error" in err

    def test_large_sample_coefficient_band(self, capsys):
        # energy / n^{3/2} of one G(2000, 1/2) sample sits near the 0.4244 limit
        code, out, _ = run_cli(
            capsys,
            ["energy", "--n", "2000", "--p", "0.5", "--seed", "6", "--coeff"],
        )
        assert code == 0
        coeff = float(out.splitlines()[1].split("=")[1])
        assert 0.40 <= coeff <= 0.45


class TestSpectrum:
    def test_complete_graph_lines(self, capsys):
        code, out, _ = run_cli(capsys, ["spectrum", "--n", "4", "--p", "1", "--seed", "1"])
        assert code == 0
        values = [float(line) for line in out.splitlines()]
        assert values == pytest.approx([-1, -1, -1, 3], abs=1e-12)

    def test_scaled(self, capsys):
        code, out, _ = run_cli(
            capsys, ["spectrum", "--n", "4", "--p", "1", "--seed", "1", "--scaled"]
        )
        values = [float(line) for line in out.splitlines()]
        assert values == pytest.approx([-0.5, -0.5, -0.5, 1.5], abs=1e-12)

    def test_repeat_invocation_identical(self, capsys):
        argv = ["spectrum", "--n", "25", "--p", "0.5", "--seed", "4", "--centered"]
        _, first, _ = run_cli(capsys, argv)
        _, second, _ = run_cli(capsys, argv)
        assert first == second


class TestLaw:
    def test_semicircle_coeff(self, capsys):
        code, out, _ = run_cli(capsys, ["law", "--law", "semicircle", "--p", "0.5", "--coeff"])
        assert code == 0
        assert out.strip() == "0.4244131816"

    def test_full_precision(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["law", "--law", "semicircle", "--p", "0.5", "--coeff", "--full-precision"],
        )
        assert float(out.strip()) == pytest.approx(4 / (3 * math.pi), abs=1e-16)

    def test_semicircle_at(self, capsys):
        code, out, _ = run_cli(
            capsys, ["law", "--law", "semicircle", "--p", "0.5", "--at", "0"]
        )
        lines = dict(line.split("=") for line in out.splitlines())
        assert float(lines["density"]) == pytest.approx(2 / math.pi, rel=1e-9)
        assert float(lines["cdf"]) == 0.5

    def test_mp_pointmass(self, capsys):
        code, out, _ = run_cli(
            capsys, ["law", "--law", "mp", "--y", "2", "--p", "0.5", "--pointmass"]
        )
        assert code == 0
        assert out.strip() == "0.5"

    def test_lambda_flag(self, capsys):
        code, out, _ = run_cli(capsys, ["law", "--lambda", "--y", "1", "--p", "0.5"])
        assert code == 0
        assert out.strip() == "0.4244131816"

    def test_psi_coeff(self, capsys):
        code, out, _ = run_cli(
            capsys, ["law", "--law", "psi", "--p", "0.5", "--m", "3", "--coeff"]
        )
        assert float(out.strip()) == pytest.approx(
            laws.balanced_multipartite_coeff(0.5, 3), rel=1e-9
        )

    def test_degenerate_mp_exit_2(self, capsys):
        code, _, err = run_cli(
            capsys, ["law", "--law", "mp", "--y", "1", "--p", "0", "--pointmass"]
        )
        assert code == 2
        assert "error" in err

    def test_missing_selector_exit_2(self, capsys):
        assert run_cli(capsys, ["law"])[0] == 2


class TestTable:
    def test_default_reproduces_reference(self, capsys):
        from graphenergy import reference

        code, out, _ = run_cli(capsys, ["table", "--p", "0.5", "--ymax", "10"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "y,theory_coeff,lower_bound"
        assert len(lines) == 11
        for line, (y, coeff_str, lower_str) in zip(lines[1:], reference.TABLE_P_HALF):
            got_y, got_coeff, got_lower = line.split(",")
            assert int(float(got_y)) == y
            assert abs(float(got_coeff) - float(coeff_str)) <= reference.quoted_unit(coeff_str)
            assert abs(float(got_lower) - float(lower_str)) <= reference.quoted_unit(lower_str)


class TestExperiment:
    def test_inline_run_passes(self, capsys, tmp_path):
        out_path = tmp_path / "rec.json"
        code, out, _ = run_cli(
            capsys,
            ["experiment", "--kind", "er", "--n", "60", "--trials", "2", "--seed", "3",
             "--tolerance", "0.5", "--out", str(out_path)],
        )
        assert code == 0
        assert "passed=yes" in out
        saved = json.loads(out_path.read_text())
        assert saved["format"] == "graphenergy-run"

    def test_forced_tolerance_failure_exit_1(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["experiment", "--kind", "er", "--n", "50", "--trials", "1", "--seed", "3",
             "--tolerance", "0.001"],
        )
        assert code == 1
        assert "passed=no" in out

    def test_config_file_run(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"kind": "kyfan", "n": 8, "trials": 10, "seed": 5}))
        code, out, _ = run_cli(capsys, ["experiment", "--config", str(cfg)])
        assert code == 0
        assert "kind=kyfan" in out

    def test_malformed_config_exit_2(self, capsys, tmp_path):
        cfg = tmp_path / "bad.json"
        cfg.write_text("{oops")
        assert run_cli(capsys, ["experiment", "--config", str(cfg)])[0] == 2

    def test_unknown_config_field_exit_2(self, capsys, tmp_path):
        cfg = tmp_path / "bad2.json"
        cfg.write_text(json.dumps({"kind": "er", "n": 50, "bogus": True}))
        assert run_cli(capsys, ["experiment", "--config", str(cfg)])[0] == 2

    def test_missing_kind_exit_2(self, capsys):
        assert run_cli(capsys, ["experiment"])[0] == 2


class TestUsage:
    def test_unknown_subcommand_exit_2(self, capsys):
        assert run_cli(capsys, ["frobnicate"])[0] == 2

    def test_unknown_flag_exit_2(self, capsys):
        assert run_cli(capsys, ["gen", "--n", "4", "--unknown-flag"])[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run_cli(capsys, ["--help"])[0] == 0
        for sub in ("gen", "spectrum", "energy", "law", "table", "experiment", "check"):
            code, out, _ = run_cli(capsys, [sub, "--help"])
            assert code == 0
            assert "--help" in out

    def test_version(self, capsys):
        code, out, _ = run_cli(capsys, ["--version"])
        assert code == 0
        assert "graphenergy" in out


class TestCheck:
    def test_fresh_build_passes(self, capsys):
        code, out, _ = run_cli(capsys, ["check"])
        assert code == 0
        lines = [line for line in out.splitlines() if line.startswith("check ")]
        assert len(lines) == 6
        assert all("PASS" in line for line in lines)

    def test_injected_perturbation_fails(self, capsys):
        code, out, _ = run_cli(capsys, ["check", "--perturb-eigensolver"])
        assert code == 1
        assert any("FAIL" in line for line in out.splitlines())

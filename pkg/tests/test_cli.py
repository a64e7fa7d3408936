"""End-to-end CLI tests through dispatch(); one subprocess smoke test."""

import subprocess

import pytest

from qce.cli import dispatch
from qce.codegen import read_alist, write_alist
from qce.gf2core import BitMatrix


@pytest.fixture()
def small_alist(tmp_path):
    path = tmp_path / "small.alist"
    code = dispatch(["construct", "--n", "40", "--rows", "12",
                     "--row-weight", "6", "--seed", "3",
                     "--out", str(path)])
    assert code == 0
    return path


class TestConstructValidate:
    def test_construct_then_validate(self, small_alist, capsys):
        assert dispatch(["validate", str(small_alist)]) == 0
        out = capsys.readouterr().out
        assert "rank = 12" in out
        assert "self_orthogonal = True" in out
        assert "row_weights = {6: 12}" in out

    def test_construct_prints_config(self, tmp_path, capsys):
        out_path = tmp_path / "c.alist"
        dispatch(["construct", "--n", "12", "--rows", "4", "--row-weight", "4",
                  "--seed", "2", "--out", str(out_path)])
        out = capsys.readouterr().out
        assert "config: command=construct" in out
        assert "seed=2" in out
        assert read_alist(out_path).rows == 4

    def test_validate_rejects_non_orthogonal(self, tmp_path, capsys):
        path = tmp_path / "bad.alist"
        write_alist(BitMatrix.from_dense([[1, 1, 0], [0, 1, 1]]), path)
        assert dispatch(["validate", str(path)]) == 1
        assert "self_orthogonal = False" in capsys.readouterr().out

    def test_validate_rejects_rank_deficient(self, tmp_path, capsys):
        path = tmp_path / "rankdef.alist"
        write_alist(BitMatrix.from_dense([[1, 1], [1, 1]]), path)
        assert dispatch(["validate", str(path)]) == 1
        out = capsys.readouterr().out
        assert "self_orthogonal = True" in out
        assert "rank = 1" in out

    def test_construct_domain_error_exits_1(self, tmp_path, capsys):
        code = dispatch(["construct", "--n", "11", "--rows", "4",
                         "--row-weight", "4", "--out", str(tmp_path / "x")])
        assert code == 1
        assert "error:" in capsys.readouterr().err


class TestEstimate:
    def test_zero_weight_gives_zero_estimate(self, small_alist, capsys):
        assert dispatch(["estimate", "--matrix", str(small_alist),
                         "--syndrome-weight", "0"]) == 0
        out = capsys.readouterr().out
        assert "p_hat = 0.0" in out
        assert "estimated_error_count = 0" in out

    def test_weight_above_rows_is_domain_error(self, small_alist, capsys):
        assert dispatch(["estimate", "--matrix", str(small_alist),
                         "--syndrome-weight", "13"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_missing_matrix_file(self, tmp_path, capsys):
        assert dispatch(["estimate", "--matrix", str(tmp_path / "nope.alist"),
                         "--syndrome-weight", "1"]) == 1


class TestDecode:
    def test_decodes_simple_syndrome(self, tmp_path, capsys):
        matrix = tmp_path / "h.alist"
        write_alist(BitMatrix.from_dense([[1, 1, 0], [0, 1, 1]]), matrix)
        syndrome = tmp_path / "s.txt"
        syndrome.write_text("1 0\n")
        assert dispatch(["decode", "--matrix", str(matrix),
                         "--syndrome", str(syndrome), "--p", "0.1"]) == 0
        out = capsys.readouterr().out
        assert "converged = True" in out
        assert "error_weight = 1" in out
        assert "error_support = 0" in out

    def test_accepts_unseparated_bits(self, tmp_path, capsys):
        matrix = tmp_path / "h.alist"
        write_alist(BitMatrix.from_dense([[1, 1, 0], [0, 1, 1]]), matrix)
        syndrome = tmp_path / "s.txt"
        syndrome.write_text("10")
        assert dispatch(["decode", "--matrix", str(matrix),
                         "--syndrome", str(syndrome), "--p", "0.1"]) == 0
        assert "error_support = 0" in capsys.readouterr().out

    def test_length_mismatch_is_domain_error(self, tmp_path, capsys):
        matrix = tmp_path / "h.alist"
        write_alist(BitMatrix.from_dense([[1, 1, 0], [0, 1, 1]]), matrix)
        syndrome = tmp_path / "s.txt"
        syndrome.write_text("1 0 1")
        assert dispatch(["decode", "--matrix", str(matrix),
                         "--syndrome", str(syndrome), "--p", "0.1"]) == 1
        assert "3 bits" in capsys.readouterr().err

    def test_junk_syndrome_file(self, tmp_path, capsys):
        matrix = tmp_path / "h.alist"
        write_alist(BitMatrix.from_dense([[1, 1, 0], [0, 1, 1]]), matrix)
        syndrome = tmp_path / "s.txt"
        syndrome.write_text("1 x")
        assert dispatch(["decode", "--matrix", str(matrix),
                         "--syndrome", str(syndrome), "--p", "0.1"]) == 1


class TestExperimentCommands:
    def test_mse_writes_csv(self, small_alist, tmp_path, capsys):
        out = tmp_path / "mse.csv"
        code = dispatch(["mse", "--matrix", str(small_alist),
                         "--p-list", "0.05,0.02", "--trials", "20",
                         "--seed", "7", "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 3
        assert lines[0].startswith("p,trials,mse_phat")
        stdout = capsys.readouterr().out
        assert "config: command=mse" in stdout
        assert "master_seed=7" in stdout

    def test_mse_empty_p_list_header_only(self, small_alist, tmp_path):
        out = tmp_path / "empty.csv"
        assert dispatch(["mse", "--matrix", str(small_alist), "--p-list", "",
                         "--trials", "5", "--out", str(out)]) == 0
        assert out.read_text().count("\n") == 1

    def test_bler_default_scenarios(self, small_alist, tmp_path, capsys):
        out = tmp_path / "bler.csv"
        code = dispatch(["bler", "--matrix", str(small_alist),
                         "--p-list", "0.03", "--trials", "10",
                         "--max-iters", "15", "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 4
        assert "fixed:0.02" in lines[1]
        assert "perfect" in lines[2]
        assert "estimated" in lines[3]

    def test_bler_bad_scenario_token_exits_1(self, small_alist, tmp_path, capsys):
        code = dispatch(["bler", "--matrix", str(small_alist),
                         "--scenarios", "oracle", "--trials", "5",
                         "--out", str(tmp_path / "x.csv")])
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_p_out_of_range_exits_1(self, small_alist, tmp_path, capsys):
        code = dispatch(["mse", "--matrix", str(small_alist),
                         "--p-list", "0.7", "--trials", "5",
                         "--out", str(tmp_path / "x.csv")])
        assert code == 1

    def test_workers_env_fallback(self, small_alist, tmp_path, capsys,
                                  monkeypatch):
        monkeypatch.setenv("QCE_WORKERS", "2")
        out = tmp_path / "w.csv"
        code = dispatch(["mse", "--matrix", str(small_alist),
                         "--p-list", "0.04", "--trials", "10",
                         "--out", str(out)])
        assert code == 0
        assert "workers=2" in capsys.readouterr().out

    def test_workers_flag_overrides_env(self, small_alist, tmp_path, capsys,
                                        monkeypatch):
        monkeypatch.setenv("QCE_WORKERS", "8")
        code = dispatch(["mse", "--matrix", str(small_alist),
                         "--p-list", "0.04", "--trials", "10", "--workers", "1",
                         "--out", str(tmp_path / "w.csv")])
        assert code == 0
        assert "workers=1" in capsys.readouterr().out

    def test_bad_workers_env_exits_1(self, small_alist, tmp_path, monkeypatch):
        monkeypatch.setenv("QCE_WORKERS", "many")
        assert dispatch(["mse", "--matrix", str(small_alist),
                         "--p-list", "0.04", "--trials", "5",
                         "--out", str(tmp_path / "x.csv")]) == 1


class TestUsageErrors:
    def test_unknown_subcommand_exits_2(self, capsys):
        assert dispatch(["frobnicate"]) == 2
        capsys.readouterr()

    def test_unknown_flag_exits_2(self, capsys):
        assert dispatch(["validate", "--bogus", "x"]) == 2
        capsys.readouterr()

    def test_missing_required_flag_exits_2(self, capsys):
        assert dispatch(["construct", "--n", "8"]) == 2
        capsys.readouterr()

    def test_help_exits_0(self, capsys):
        assert dispatch(["--help"]) == 0
        assert "construct" in capsys.readouterr().out

    def test_console_script_runs(self):
        result = subprocess.run(["qce", "--help"], capture_output=True,
                                text=True)
        assert result.returncode == 0
        assert "estimate" in result.stdout

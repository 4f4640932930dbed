import json

import pytest

from hardylog import library as lib
from hardylog.cli import (EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION,
                          RunConfig, load_config, main)
from hardylog.grid import make_grid, save_function

SMALL = ["--grid-L", "16", "--grid-n", "1024"]


def write_named(tmp_path, name, grid=None):
    g = grid or make_grid(16, 1024)
    f = lib.named_function(name, g)
    path = tmp_path / f"{name}.txt"
    save_function(f, path)
    return path


class TestConfig:
    def test_precedence(self, tmp_path, monkeypatch):
        cfgfile = tmp_path / "run.cfg"
        cfgfile.write_text("grid_n=512\nseed=1\n# comment\n")
        monkeypatch.setenv("HARDYLOG_SEED", "2")
        cfg = load_config(str(cfgfile), {"HARDYLOG_SEED": "2"},
                          {"seed": 3, "grid_n": None})
        assert cfg.grid_n == 512          # file survives (no override)
        assert cfg.seed == 3              # flag beats env beats file

    def test_bad_key_rejected(self, tmp_path):
        cfgfile = tmp_path / "run.cfg"
        cfgfile.write_text("grid_m=512\n")
        with pytest.raises(Exception):
            load_config(str(cfgfile), {}, {})

    def test_hash_ignores_out_dir(self):
        a = RunConfig(out="/tmp/a")
        b = RunConfig(out="/tmp/b")
        assert a.digest() == b.digest()
        assert a.digest() != RunConfig(seed=999, out="/tmp/a").digest()

    def test_env_override_end_to_end(self, tmp_path, monkeypatch):
        monkeypatch.setenv("HARDYLOG_GRID_N", "1024")
        monkeypatch.setenv("HARDYLOG_GRID_L", "16")
        rc = main(["--out", str(tmp_path), "norm",
                   "--function", "chi_half", "--norm", "llog"])
        assert rc == EXIT_OK
        rep = json.loads((tmp_path / "norm_llog.json").read_text())
        assert abs(rep["report"]["value"] - 1.0) <= 1e-6


class TestNormCommand:
    def test_llog_of_indicator_file(self, tmp_path):
        path = write_named(tmp_path, "chi_half")
        rc = main(SMALL + ["--out", str(tmp_path), "norm",
                           "--input", str(path), "--norm", "llog"])
        assert rc == EXIT_OK
        report = json.loads((tmp_path / "norm_llog.json").read_text())
        assert abs(report["report"]["value"] - 1.0) <= 1e-6
        assert report["version"] and report["config_hash"]

    def test_zero_input_any_norm(self, tmp_path):
        path = write_named(tmp_path, "zero")
        for norm in ("l1", "llog", "bmo", "bmoplus"):
            rc = main(SMALL + ["--out", str(tmp_path), "norm",
                               "--input", str(path), "--norm", norm])
            assert rc == EXIT_OK
            rep = json.loads((tmp_path / f"norm_{norm}.json").read_text())
            assert rep["report"]["value"] == 0.0

    def test_log_growth_l1_precondition(self, tmp_path):
        path = write_named(tmp_path, "logabs")
        rc = main(SMALL + ["--out", str(tmp_path), "norm",
                           "--input", str(path), "--norm", "l1"])
        assert rc == EXIT_PRECONDITION

    def test_field_norm_from_function(self, tmp_path):
        rc = main(SMALL + ["--y-min", "0.05", "--out", str(tmp_path), "norm",
                           "--function", "gbump_odd", "--norm", "h1"])
        assert rc == EXIT_OK

    def test_extension_of_nonzero_mean_data_rejected(self, tmp_path):
        # the projection of an indicator keeps a flat component, so its
        # extension is honestly not L1 along heights: precondition, not 0
        rc = main(SMALL + ["--y-min", "0.05", "--out", str(tmp_path), "norm",
                           "--function", "chi_half", "--norm", "h1"])
        assert rc == EXIT_PRECONDITION

    def test_unknown_function(self, tmp_path):
        rc = main(SMALL + ["--out", str(tmp_path), "norm",
                           "--function", "nope", "--norm", "l1"])
        assert rc == EXIT_PARSE

    def test_malformed_file(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("garbage\n")
        rc = main(SMALL + ["--out", str(tmp_path), "norm",
                           "--input", str(bad), "--norm", "l1"])
        assert rc == EXIT_PARSE

    def test_requires_exactly_one_source(self, tmp_path):
        rc = main(SMALL + ["--out", str(tmp_path), "norm", "--norm", "l1"])
        assert rc == EXIT_PARSE


class TestFactorizeCommand:
    def test_named_field(self, tmp_path):
        rc = main(SMALL + ["--out", str(tmp_path), "factorize",
                           "--field", "inv_sq"])
        assert rc == EXIT_OK
        rep = json.loads((tmp_path / "factorization.json").read_text())
        assert rep["residual"] <= 1e-10
        assert rep["b_min"] >= 1.0 and rep["g0_abs_min"] >= 1.0
        for stem in ("factor_f0", "factor_g0", "factor_b"):
            assert (tmp_path / f"{stem}.txt").exists()

    def test_unknown_field(self, tmp_path):
        rc = main(SMALL + ["--out", str(tmp_path), "factorize",
                           "--field", "nope"])
        assert rc == EXIT_PARSE

    def test_boundary_function_input(self, tmp_path):
        # boundary data route: project, extend, then factorize
        rc = main(SMALL + ["--y-min", "0.05", "--out", str(tmp_path),
                           "factorize", "--function", "gbump_odd"])
        assert rc == EXIT_OK
        rep = json.loads((tmp_path / "factorization.json").read_text())
        assert rep["residual"] <= 1e-10


class TestVerifyCommand:
    def test_cr_suite(self, tmp_path):
        rc = main(SMALL + ["--out", str(tmp_path), "verify", "--suite", "cr"])
        assert rc == EXIT_OK
        lines = (tmp_path / "verify_cr.csv").read_text().splitlines()
        assert lines[0] == "case,lhs,rhs,ratio"
        assert len(lines) > 3
        rep = json.loads((tmp_path / "verify_cr.json").read_text())
        assert rep["pass"] is True

    def test_empty_family(self, tmp_path):
        rc = main(SMALL + ["--out", str(tmp_path), "verify",
                           "--suite", "prop31", "--cases", "0"])
        assert rc == EXIT_PRECONDITION

    def test_determinism(self, tmp_path):
        out1, out2 = tmp_path / "a", tmp_path / "b"
        for out in (out1, out2):
            rc = main(SMALL + ["--out", str(out), "verify", "--suite", "cr"])
            assert rc == EXIT_OK
        assert (out1 / "verify_cr.csv").read_bytes() == \
            (out2 / "verify_cr.csv").read_bytes()
        assert (out1 / "verify_cr.json").read_bytes() == \
            (out2 / "verify_cr.json").read_bytes()


class TestHankelCommand:
    def test_study_runs(self, tmp_path):
        rc = main(SMALL + ["--seed", "3", "--out", str(tmp_path), "hankel",
                           "--function", "exp_ix", "--trials", "2"])
        assert rc == EXIT_OK
        rep = json.loads((tmp_path / "hankel_study.json").read_text())
        assert rep["trials"] == 2
        assert rep["degenerate"] is False

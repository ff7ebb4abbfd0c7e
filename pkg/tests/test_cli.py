"""End-to-end CLI tests through subprocess: exit codes, CSV, determinism."""

import math
import os
import subprocess
import sys

CLI = [sys.executable, "-m", "hgf"]


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("HGF_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([*CLI, *args], capture_output=True, text=True, env=env)


class TestEval:
    def test_lambda_at_one(self):
        r = run_cli("eval", "lambda_K", "K=1")
        assert r.returncode == 0
        assert r.stdout.strip() == "1"

    def test_mu_symmetric_point(self):
        r = run_cli("eval", "mu", "r=0.7071067811865476")
        assert r.returncode == 0
        # printed at 15 significant digits
        assert abs(float(r.stdout) - math.pi / 2) < 1e-13

    def test_h_metric_with_points(self):
        r = run_cli("eval", "h_metric", "dom=half-plane", "c=1", "x=0,1", "y=0,2")
        assert r.returncode == 0
        assert float(r.stdout) - 0.534799996739570 < 1e-12

    def test_point_valued_function(self):
        r = run_cli("eval", "stretch_map", "K=2", "p=0,2")
        assert r.returncode == 0
        assert r.stdout.strip() == "0,4"

    def test_unknown_function_exits_2(self):
        r = run_cli("eval", "frobnicate", "x=1")
        assert r.returncode == 2
        assert "unknown function" in r.stderr

    def test_missing_argument_exits_2(self):
        r = run_cli("eval", "mu")
        assert r.returncode == 2
        assert "missing" in r.stderr

    def test_domain_error_exits_2(self):
        r = run_cli("eval", "mu", "r=2")
        assert r.returncode == 2


class TestVerify:
    def test_fuji_defaults_pass(self):
        r = run_cli("verify", "fuji", "--seed", "42")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert lines[0] == "suite,c,K,t,lhs,rhs,margin,pass"
        assert all(line.endswith(",true") for line in lines[1:])
        assert "violations=0" in r.stderr

    def test_remark310_expected_violation_exit_0(self):
        r = run_cli("verify", "remark310")
        assert r.returncode == 0
        assert sum(1 for line in r.stdout.splitlines() if line.endswith(",false")) == 1

    def test_mistolerated_run_exits_1(self):
        # tolerance masks the expected violation: expectation fails
        r = run_cli("verify", "remark310", "--tol", "1.0")
        assert r.returncode == 1

    def test_disk_triangle_expects_violations(self):
        r = run_cli("verify", "disk-triangle", "c=1", "--samples", "200")
        assert r.returncode == 0
        assert any(line.endswith(",false") for line in r.stdout.splitlines()[1:])
        r = run_cli("verify", "disk-triangle", "c=2", "--samples", "200")
        assert r.returncode == 0
        assert not any(line.endswith(",false") for line in r.stdout.splitlines()[1:])

    def test_unknown_suite_exits_2(self):
        r = run_cli("verify", "nonsense")
        assert r.returncode == 2

    def test_bad_grid_exits_2(self):
        r = run_cli("verify", "fuji", "--grid", "t=1:2:3:cubic")
        assert r.returncode == 2
        r = run_cli("verify", "fuji", "t=oops")
        assert r.returncode == 2

    def test_deterministic_csv(self, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        r1 = run_cli("verify", "fuji", "--seed", "42", "--out", str(out1))
        r2 = run_cli("verify", "fuji", "--seed", "42", "--out", str(out2))
        assert r1.returncode == r2.returncode == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_deterministic_sampled_csv(self, tmp_path):
        args = ("verify", "triangle-half-plane", "--samples", "500", "--seed", "42")
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        run_cli(*args, "--out", str(out1))
        run_cli(*args, "--out", str(out2))
        assert out1.read_bytes() == out2.read_bytes()

    def test_seed_changes_sampled_rows(self, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        run_cli("verify", "comp-rho", "--samples", "100", "--seed", "1", "--out", str(out1))
        run_cli("verify", "comp-rho", "--samples", "100", "--seed", "2", "--out", str(out2))
        assert out1.read_bytes() != out2.read_bytes()

    def test_env_seed_fallback(self, tmp_path):
        out1, out2, out3 = (tmp_path / n for n in ("a.csv", "b.csv", "c.csv"))
        run_cli("verify", "comp-rho", "--samples", "100", "--out", str(out1),
                env_extra={"HGF_SEED": "777"})
        run_cli("verify", "comp-rho", "--samples", "100", "--seed", "777",
                "--out", str(out2))
        assert out1.read_bytes() == out2.read_bytes()
        # an explicit flag wins over the environment
        run_cli("verify", "comp-rho", "--samples", "100", "--seed", "9",
                "--out", str(out3), env_extra={"HGF_SEED": "777"})
        assert out3.read_bytes() != out2.read_bytes()

    def test_config_file_precedence(self, tmp_path):
        cfg = tmp_path / "hgf.cfg"
        cfg.write_text("seed=555\nsamples=120\n# comment\ngrid.c=1:2:2\n")
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        r = run_cli("verify", "comp-rho", "--config", str(cfg), "--out", str(out1))
        assert r.returncode == 0
        assert "seed=555" in r.stderr
        n_rows = len(out1.read_text().splitlines()) - 1
        assert n_rows == 2 * 120  # c grid from config, samples from config
        # flags override the config file
        r = run_cli("verify", "comp-rho", "--config", str(cfg), "--samples", "10",
                    "--out", str(out2))
        assert len(out2.read_text().splitlines()) - 1 == 2 * 10

    def test_stdout_gets_csv_stderr_gets_summary(self):
        r = run_cli("verify", "lambda-bound")
        assert r.stdout.startswith("suite,K,lhs,rhs,margin,pass")
        assert "expectation" in r.stderr and "suite=lambda-bound" in r.stderr


class TestSearch:
    def test_disk_triangle_c1_finds(self):
        r = run_cli("search", "disk-triangle", "c=1", "--samples", "200")
        assert r.returncode == 0
        assert len(r.stdout.splitlines()) > 1

    def test_disk_triangle_c2_empty(self):
        r = run_cli("search", "disk-triangle", "c=2", "--samples", "200")
        assert r.returncode == 0
        assert len(r.stdout.splitlines()) == 1  # header only

    def test_k2_exponent_includes_paper_point(self):
        r = run_cli("search", "k2-exponent")
        assert r.returncode == 0
        hits = [line for line in r.stdout.splitlines()[1:]
                if line.split(",")[1] == "5" and line.split(",")[2] == "1.2"]
        assert any(abs(float(h.split(",")[3]) - 0.001) < 1e-12 for h in hits)

    def test_unknown_target_exits_2(self):
        r = run_cli("search", "perpetual-motion")
        assert r.returncode == 2


class TestList:
    def test_lists_everything(self):
        r = run_cli("list")
        assert r.returncode == 0
        for name in ("ellint_K", "fuji", "remark310", "disk-triangle", "k2-exponent"):
            assert name in r.stdout

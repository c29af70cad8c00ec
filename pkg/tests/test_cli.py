import json
import subprocess
import sys

CLI = [sys.executable, "-m", "arccalc.cli"]


def run(*args, env=None):
    import os

    full_env = dict(os.environ)
    full_env.pop("ARCCALC_FORMAT", None)
    if env:
        full_env.update(env)
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, env=full_env
    )


class TestExitCodes:
    def test_pass_is_zero(self):
        assert run("exceptions", "--case", "inj-s11").returncode == 0

    def test_usage_error_is_two(self):
        assert run("exceptions").returncode == 2
        assert run("nonsense").returncode == 2
        assert run().returncode == 2
        assert run("invariants", "--perm", "1,1", "--side", "1").returncode == 2
        assert run("homology", "--genus", "1", "--side", "1").returncode == 2

    def test_check_failure_is_one(self, monkeypatch, capsys):
        # every real suite passes by design, so exercise the failure path by
        # stubbing a runner in-process
        from arccalc import cli

        monkeypatch.setitem(
            cli.RUNNERS, "exceptions", lambda args, parser: ({"rows": []}, ("case",), False)
        )
        assert cli.main(["exceptions", "--case", "inj-s11"]) == 1

    def test_describe_exits_zero(self):
        assert run("--describe").returncode == 0


class TestInvariants:
    def test_with_ambient(self):
        res = run(
            "invariants", "--perm", "1,2,0", "--side", "2", "--ambient", "5,3",
            "--format", "json",
        )
        assert res.returncode == 0
        data = json.loads(res.stdout)
        row = data["rows"][0]
        assert row["simplex_genus"] == 0
        assert row["neighborhood_boundary"] == 5
        assert (row["stabilizer_g"], row["stabilizer_r"]) == (3, 4)

    def test_formula_vs_trace_shown(self):
        res = run("invariants", "--perm", "0,2,1", "--side", "1", "--format", "json")
        row = json.loads(res.stdout)["rows"][0]
        assert row["neighborhood_boundary"] == row["trace_count"] == 3

    def test_unrealizable_ambient_is_usage_error(self):
        res = run("invariants", "--perm", "0,1,2", "--side", "1", "--ambient", "1,1")
        assert res.returncode == 2


class TestSuites:
    def test_oracle_diff(self):
        res = run("oracle-diff", "--max-degree", "5", "--format", "json")
        assert res.returncode == 0
        data = json.loads(res.stdout)
        assert data["ok"] and data["rows"] == []
        assert data["checked"] == 2 * (1 + 2 + 6 + 24 + 120)

    def test_oracle_diff_threads_match_serial(self):
        a = run("oracle-diff", "--max-degree", "4", "--format", "json")
        b = run("oracle-diff", "--max-degree", "4", "--threads", "2", "--format", "json")
        assert a.stdout == b.stdout

    def test_homology(self):
        res = run("homology", "--genus", "2", "--side", "1", "--format", "json")
        assert res.returncode == 0
        rows = json.loads(res.stdout)["rows"]
        guaranteed = [r for r in rows if r["guaranteed"]]
        assert guaranteed and all(r["trivial"] for r in guaranteed)

    def test_homotopy_with_quotient_and_samples(self):
        res = run(
            "homotopy", "--max-degree", "4", "--genus", "2", "--side", "2",
            "--samples", "50", "--sample-degree", "7", "--format", "json",
        )
        assert res.returncode == 0
        checks = {r["check"] for r in json.loads(res.stdout)["rows"]}
        assert checks == {"full-complex", "quotient-lift", "sampled"}

    def test_e1_with_d1(self):
        res = run(
            "e1", "--ambient", "3,2", "--side", "1", "--max-p", "4",
            "--with-d1", "--format", "json",
        )
        assert res.returncode == 0
        data = json.loads(res.stdout)
        assert data["vanishing_bound"] == 5
        assert set(data["d1"]) == {"2", "3", "4"}
        # the emitted triples rebuild the library's matrix exactly
        from arccalc.e1page import d1_matrix, e1_skeleton
        from arccalc.intmat import SparseIntMatrix
        from arccalc.surfaces import SurfaceType

        page = e1_skeleton(SurfaceType(3, 2), 1, 4)
        for p in ("2", "3", "4"):
            assert SparseIntMatrix.from_triples(data["d1"][p]) == d1_matrix(page, int(p))

    def test_ledger_csv(self):
        res = run("ledger", "--g-max", "6", "--k-max", "3", "--format", "csv")
        assert res.returncode == 0
        lines = res.stdout.splitlines()
        assert lines[0] == "claim,params,inequality,holds"
        assert all(line.endswith("True") for line in lines[1:])

    def test_exceptions_csv(self):
        res = run("exceptions", "--case", "surj-s11", "--format", "csv")
        assert res.returncode == 0
        assert res.stdout.splitlines()[0] == "case,l,m,n,g,k"
        assert len(res.stdout.splitlines()) == 6


class TestOutputContract:
    def test_byte_identical_reruns(self):
        args = ("homology", "--genus", "2", "--side", "2", "--format", "json")
        assert run(*args).stdout == run(*args).stdout

    def test_env_var_format(self):
        res = run("exceptions", "--case", "inj-s11", env={"ARCCALC_FORMAT": "json"})
        json.loads(res.stdout)

    def test_flag_overrides_env(self):
        res = run(
            "exceptions", "--case", "inj-s11", "--format", "csv",
            env={"ARCCALC_FORMAT": "json"},
        )
        assert res.stdout.startswith("case,")

    def test_output_file(self, tmp_path):
        path = tmp_path / "report.json"
        res = run(
            "exceptions", "--case", "inj-s11", "--format", "json",
            "--output", str(path),
        )
        assert res.returncode == 0 and res.stdout == ""
        assert json.loads(path.read_text())["ok"]

    def test_describe_round_trips_with_help(self):
        described = json.loads(run("--describe").stdout)
        for name, info in described["commands"].items():
            help_text = run(name, "--help").stdout
            for flag in info["flags"]:
                assert flag in help_text, (name, flag)

    def test_describe_lists_all_commands(self):
        described = json.loads(run("--describe").stdout)
        assert set(described["commands"]) == {
            "invariants", "oracle-diff", "homology", "homotopy", "e1",
            "ledger", "exceptions",
        }
        assert described["exit_codes"] == {
            "pass": 0, "check_failure": 1, "usage_error": 2,
        }

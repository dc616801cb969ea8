import json

import pytest

from nilcone.cli import main, parse_multipartition, parse_partition


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    def test_partition_forms(self):
        assert parse_partition("2,1") == (2, 1)
        assert parse_partition("") == ()
        assert parse_partition("()") == ()
        assert parse_partition("(3,1)") == (3, 1)
        with pytest.raises(ValueError):
            parse_partition("a,b")

    def test_multipartition(self):
        assert parse_multipartition("(1);(2);(1)") == ((1,), (2,), (1,))
        assert parse_multipartition("();(1)") == ((), (1,))


class TestChiCommand:
    def test_one_column_family(self, capsys, tmp_path):
        code, out, _ = run(capsys, "chi", "1,1,1", "1,1", "--cache", str(tmp_path / "c.json"))
        assert code == 0 and out.strip() == "3"

    def test_empty_partition(self, capsys):
        code, out, _ = run(capsys, "chi", "3", "", "--no-cache")
        assert code == 0 and out.strip() == "0"

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "chi", "2,1", "2,2", "--no-cache", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"lam": [2, 1], "mu": [2, 2], "chi": 2}

    def test_cache_file_written_and_reused(self, capsys, tmp_path):
        cache = tmp_path / "chi.json"
        code1, out1, _ = run(capsys, "chi", "2,2", "2,1,1", "--cache", str(cache))
        assert code1 == 0 and cache.exists()
        code2, out2, _ = run(capsys, "chi", "2,2", "2,1,1", "--cache", str(cache))
        assert code2 == 0 and out1 == out2

    def test_env_var_cache(self, capsys, tmp_path, monkeypatch):
        target = tmp_path / "envcache.json"
        monkeypatch.setenv("NILCONE_CACHE", str(target))
        code, _, _ = run(capsys, "chi", "1,1", "1,1")
        assert code == 0 and target.exists()

    def test_usage_error_exit_code(self, capsys):
        code, _, err = run(capsys, "chi", "2,x", "1", "--no-cache")
        assert code == 2 and "error" in err


class TestCensusCommand:
    def test_an(self, capsys):
        code, out, _ = run(capsys, "census", "an", "2,3", "--no-cache")
        assert code == 0
        assert "components: 3" in out and "dimension:  6" in out

    def test_tn_small_loop_case(self, capsys):
        code, out, _ = run(capsys, "census", "tn", "1,1", "--no-cache")
        assert code == 0
        assert "count=2" in out and "dim=1" in out

    def test_tn_symbolic(self, capsys):
        code, out, _ = run(capsys, "census", "tn", "2,4", "--no-cache", "--format", "json")
        assert code == 0
        blob = json.loads(out)
        kinds = {json.dumps(r["count"])[:1] for r in blob["records"]}
        assert "{" in kinds  # at least one symbolic record

    def test_tn_top(self, capsys):
        code, out, _ = run(capsys, "census", "tn-top", "1,3", "--no-cache")
        assert code == 0
        assert "components: 1" in out and "dimension:  10" in out and "codim:      1" in out

    def test_tn_small(self, capsys):
        code, out, _ = run(capsys, "census", "tn-small", "2,2", "--no-cache")
        assert code == 0
        assert "components: 3" in out and "dimension:  7" in out

    def test_tn_small_rejects(self, capsys):
        code, _, err = run(capsys, "census", "tn-small", "2,3", "--no-cache")
        assert code == 2 and "error" in err


class TestBuildVerifyProbe:
    def test_roundtrip(self, capsys, tmp_path):
        rep_file = tmp_path / "rep.json"
        code, _, _ = run(
            capsys, "build", "an", "1,2,1", "--strata", "(1);(2);(1)",
            "--no-cache", "--out", str(rep_file),
        )
        assert code == 0 and rep_file.exists()

        code, out, _ = run(
            capsys, "verify", str(rep_file), "--strata", "(1);(2);(1)", "--no-cache"
        )
        assert code == 0 and "verdict: pass" in out

    def test_verify_negative_control(self, capsys, tmp_path):
        rep_file = tmp_path / "rep.json"
        run(capsys, "build", "an", "1,2,1", "--strata", "(1);(2);(1)",
            "--no-cache", "--out", str(rep_file))
        code, out, _ = run(
            capsys, "verify", str(rep_file), "--strata", "(1);(1,1);(1)", "--no-cache"
        )
        assert code == 1 and "verdict: FAIL" in out

    def test_build_tadpole_and_probe(self, capsys, tmp_path):
        rep_file = tmp_path / "trep.json"
        code, _, _ = run(
            capsys, "build", "tn", "1,3", "--strata", "(1);(2,1)",
            "--no-cache", "--out", str(rep_file),
        )
        assert code == 0

        code, out, _ = run(capsys, "verify", str(rep_file), "--strata", "(1);(2,1)",
                           "--no-cache")
        assert code == 0

        code, out, _ = run(capsys, "probe", str(rep_file), "--no-cache",
                           "--format", "json")
        assert code == 0
        blob = json.loads(out)
        assert blob["ambient_dim"] == 24
        assert blob["local_dim_bound"] == blob["ambient_dim"] - blob["jac_rank"]

    def test_probe_certification_exit_codes(self, capsys, tmp_path):
        rep_file = tmp_path / "arep.json"
        run(capsys, "build", "an", "1,1", "--strata", "(1);(1)",
            "--no-cache", "--out", str(rep_file))
        code, _, _ = run(capsys, "probe", str(rep_file), "--predict", "1", "--no-cache")
        assert code == 0  # built point of ((1),(1)) is the one-sided generic one
        code, _, _ = run(capsys, "probe", str(rep_file), "--predict", "2", "--no-cache")
        assert code == 1

    def test_build_bad_strata(self, capsys):
        code, _, err = run(capsys, "build", "an", "1,2", "--strata", "(1);(1)",
                           "--no-cache")
        assert code == 2 and "error" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", str(tmp_path / "nope.json"),
                           "--strata", "(1)", "--no-cache")
        assert code == 2


class TestHistCommand:
    def test_small_dim(self, capsys):
        code, out, _ = run(capsys, "hist", "2", "--trials", "25", "--no-cache")
        assert code == 0 and "(1,1)  25" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "hist", "3", "--trials", "30", "--seed", "4",
                           "--no-cache", "--format", "json")
        assert code == 0
        blob = json.loads(out)
        assert blob["trials"] == 30 and sum(blob["counts"].values()) == 30

    def test_deterministic_given_seed(self, capsys):
        _, out1, _ = run(capsys, "hist", "4", "--trials", "40", "--seed", "2", "--no-cache")
        _, out2, _ = run(capsys, "hist", "4", "--trials", "40", "--seed", "2", "--no-cache")
        assert out1 == out2

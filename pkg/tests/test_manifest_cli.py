import json
import subprocess
import sys

import pytest

from cycaut.cli import main
from cycaut.manifest import (
    default_manifest_path,
    expand_source,
    extended_manifest_path,
    load_manifest,
    run_entry,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFactorCommand:
    def test_factor_7(self, capsys):
        code, out, _ = run_cli(capsys, "factor", "7")
        assert code == 0
        assert out.splitlines() == ["(x+1)^1", "(x^3+x+1)^1", "(x^3+x^2+1)^1"]

    def test_factor_14(self, capsys):
        code, out, _ = run_cli(capsys, "factor", "14")
        assert code == 0
        assert out.splitlines() == ["(x+1)^2", "(x^3+x+1)^2", "(x^3+x^2+1)^2"]

    def test_factor_15(self, capsys):
        code, out, _ = run_cli(capsys, "factor", "15")
        assert code == 0
        assert out.splitlines() == [
            "(x+1)^1",
            "(x^2+x+1)^1",
            "(x^4+x+1)^1",
            "(x^4+x^3+1)^1",
            "(x^4+x^3+x^2+x+1)^1",
        ]

    def test_factor_1(self, capsys):
        code, out, _ = run_cli(capsys, "factor", "1")
        assert code == 0
        assert out.strip() == "(x+1)^1"

    def test_factor_bad_n(self, capsys):
        code, _, err = run_cli(capsys, "factor", "0")
        assert code == 2
        assert "error" in err

    def test_factor_json(self, capsys):
        code, out, _ = run_cli(capsys, "--json", "factor", "7")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "n": 7,
            "factors": [["x+1", 1], ["x^3+x+1", 1], ["x^3+x^2+1", 1]],
        }


class TestCodeInfoCommand:
    def test_hamming(self, capsys):
        code, out, _ = run_cli(capsys, "code-info", "7", "x^3+x+1")
        assert code == 0
        assert out.splitlines()[0] == "[7,4]"
        assert "1101000" in out

    def test_squared_cubic(self, capsys):
        code, out, _ = run_cli(capsys, "code-info", "14", "(x^3+x+1)^2")
        assert code == 0
        assert out.splitlines()[0] == "[14,8]"

    def test_non_divisor(self, capsys):
        code, _, err = run_cli(capsys, "code-info", "7", "x^2+x+1")
        assert code == 2
        assert "remainder" in err


class TestAutBruteCommand:
    def test_hamming(self, capsys):
        code, out, _ = run_cli(capsys, "aut-brute", "7", "x^3+x+1")
        assert code == 0
        assert out.splitlines()[0] == "168"

    def test_repetition(self, capsys):
        code, out, _ = run_cli(capsys, "aut-brute", "7", "(x^3+x+1)(x^3+x^2+1)")
        assert code == 0
        assert out.splitlines()[0] == "5040"

    def test_guard(self, capsys):
        code, _, err = run_cli(capsys, "aut-brute", "14", "(x^3+x+1)^2")
        assert code == 2
        assert "cutoff" in err

    def test_emit_gens(self, capsys):
        code, out, _ = run_cli(capsys, "--json", "aut-brute", "7", "x^3+x+1", "--emit-gens")
        payload = json.loads(out)
        assert payload["order"] == "168"
        assert payload["generators"]


class TestMultipliersCommand:
    def test_two_quintics(self, capsys):
        code, out, _ = run_cli(capsys, "multipliers", "31", "(x^5+x^2+1)(x^5+x^3+1)")
        assert code == 0
        lines = out.splitlines()
        assert lines[1] == "count: 10"
        assert lines[2] == "order: 310"

    def test_three_quintics(self, capsys):
        code, out, _ = run_cli(
            capsys, "multipliers", "31", "(x^5+x^2+1)(x^5+x^3+1)(x^5+x^3+x^2+x+1)"
        )
        assert code == 0
        assert "count: 5" in out
        assert "order: 155" in out

    def test_hamming(self, capsys):
        code, out, _ = run_cli(capsys, "multipliers", "7", "x^3+x+1")
        assert code == 0
        assert "units: 1 2 4" in out
        assert "order: 21" in out


class TestAutConstructCommand:
    SPEC = json.dumps(
        [
            {"kind": "interleaved_lift", "rows": [1, 2],
             "inner": {"source": "brute", "n": 7, "generator": "x^3+x+1"}},
            {"kind": "pair_swap"},
        ]
    )

    def test_computes_order(self, capsys):
        code, out, _ = run_cli(
            capsys, "aut-construct", "14", "(x^3+x+1)^2", "--spec", self.SPEC
        )
        assert code == 0
        assert out.splitlines()[0] == "56448"

    def test_expect_mismatch(self, capsys):
        code, _, err = run_cli(
            capsys, "aut-construct", "14", "(x^3+x+1)^2",
            "--spec", self.SPEC, "--expect", "99",
        )
        assert code == 1
        assert "56448" in err

    def test_requires_spec(self, capsys):
        code, _, _ = run_cli(capsys, "aut-construct", "14", "(x^3+x+1)^2")
        assert code == 2

    def test_spec_file(self, tmp_path, capsys):
        path = tmp_path / "spec.json"
        path.write_text(self.SPEC)
        code, out, _ = run_cli(
            capsys, "aut-construct", "14", "(x^3+x+1)^2",
            "--spec-file", str(path), "--expect", "56448",
        )
        assert code == 0
        assert out.splitlines()[0] == "56448"


class TestVerifyTable:
    def test_fast_entries_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify-table", "--filter", "len7")
        assert code == 0
        assert "2/2 entries passed" in out

    def test_len31_entries(self, capsys):
        code, out, _ = run_cli(capsys, "verify-table", "--filter", "len31")
        assert code == 0
        assert "2/2 entries passed" in out

    def test_wrong_order_negative_control(self, tmp_path, capsys):
        manifest = [
            {
                "name": "hamming-wrong",
                "n": 7,
                "generator": "x^3+x+1",
                "expected_order": "169",
                "method": "brute",
            }
        ]
        path = tmp_path / "wrong.json"
        path.write_text(json.dumps(manifest))
        code, out, _ = run_cli(capsys, "verify-table", str(path))
        assert code == 1
        assert "168" in out and "169" in out

    def test_empty_manifest(self, tmp_path, capsys):
        path = tmp_path / "empty.json"
        path.write_text("[]")
        code, out, _ = run_cli(capsys, "verify-table", str(path))
        assert code == 0
        assert "0/0 entries passed" in out

    def test_manifest_parse_failure(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{np.whatever}")
        code, _, err = run_cli(capsys, "verify-table", str(path))
        assert code == 2

    def test_env_var_sets_default_manifest(self, tmp_path, monkeypatch, capsys):
        path = tmp_path / "tiny.json"
        path.write_text(
            json.dumps(
                [{"name": "t", "n": 7, "generator": "x^3+x+1",
                  "expected_order": "168", "method": "brute"}]
            )
        )
        monkeypatch.setenv("CYCAUT_MANIFEST", str(path))
        code, out, _ = run_cli(capsys, "verify-table")
        assert code == 0
        assert "1/1 entries passed" in out

    def test_json_output_deterministic(self, capsys):
        code1, out1, _ = run_cli(capsys, "--json", "verify-table", "--filter", "len7")
        code2, out2, _ = run_cli(capsys, "--json", "verify-table", "--filter", "len7")
        assert code1 == code2 == 0

        def strip_elapsed(text):
            rows = [json.loads(line) for line in text.splitlines()]
            for row in rows:
                row.pop("elapsed_ms")
            return rows

        assert strip_elapsed(out1) == strip_elapsed(out2)
        row = json.loads(out1.splitlines()[0])
        assert set(row) == {
            "name", "n", "generator", "expected_order",
            "computed_order", "pass", "elapsed_ms", "seed",
        }

    def test_jobs_parallel_matches_serial(self, capsys):
        code1, out1, _ = run_cli(capsys, "--json", "verify-table", "--filter", "len31")
        code2, out2, _ = run_cli(
            capsys, "--json", "--jobs", "2", "verify-table", "--filter", "len31"
        )
        assert code1 == code2 == 0

        def strip_elapsed(text):
            rows = [json.loads(line) for line in text.splitlines()]
            for row in rows:
                row.pop("elapsed_ms")
            return rows

        assert strip_elapsed(out1) == strip_elapsed(out2)


class TestManifestSchema:
    def test_default_manifest_loads(self):
        entries = load_manifest(default_manifest_path())
        names = [e["name"] for e in entries]
        assert len(names) == len(set(names))
        assert {e["n"] for e in entries} == {7, 14, 31, 49, 62, 98}

    def test_extended_manifest_loads(self):
        entries = load_manifest(extended_manifest_path())
        assert {e["n"] for e in entries} == {961, 1922}

    def test_rejects_unknown_method(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps([{"name": "x", "n": 7, "generator": "x^3+x+1",
                         "expected_order": "168", "method": "magic"}])
        )
        with pytest.raises(ValueError, match="method"):
            load_manifest(str(path))

    def test_rejects_non_divisor_generator(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps([{"name": "x", "n": 7, "generator": "x^2+x+1",
                         "expected_order": "1", "method": "brute"}])
        )
        with pytest.raises(ValueError, match="divide"):
            load_manifest(str(path))

    def test_rejects_inconsistent_factored_order(self):
        entry = {
            "name": "bad-factors",
            "n": 7,
            "generator": "x^3+x+1",
            "expected_order": "168",
            "expected_order_factors": [[169, 1]],
            "method": "brute",
        }
        report = run_entry(entry)
        assert not report.passed
        assert "factored" in report.reason

    def test_expand_source_perms(self):
        gens = expand_source({"source": "perms", "degree": 5, "cycles": ["(1,2)", "(1,2,3,4,5)"]})
        assert len(gens) == 2 and gens[0].degree == 5


class TestModuleEntryPoint:
    def test_python_m_invocation(self):
        result = subprocess.run(
            [sys.executable, "-m", "cycaut", "factor", "7"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert "(x^3+x+1)^1" in result.stdout

"""Command-line interface: payload shapes, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from sipq import identities
from sipq.cli import main
from sipq.reporting import CheckReport


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    def test_json_payload(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--class", "g1", "--weight", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema_version"] == 1
        assert payload["command"] == "enumerate"
        assert payload["params"] == {"class": "g1", "weight": 5}
        got = {tuple(r["partition"]): r["omega"] for r in payload["results"]}
        assert got == {
            (5,): {"a": 3, "b": 2, "c": 0, "d": 0},
            (3, 2): {"a": 2, "b": 1, "c": 1, "d": 1},
        }

    def test_csv_payload(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--class", "g1", "--weight", "5", "--format", "csv"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "partition,weight,length,alt_sum,odd_parts,bg_rank,a,b,c,d"
        assert lines[1:] == ["5,5,1,5,1,1,3,2,0,0", '"3,2",5,2,1,1,1,2,1,1,1']

    def test_empty_class_weight(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--class", "g2", "--weight", "1")
        assert code == 0
        assert json.loads(out)["results"] == []

    def test_negative_weight(self, capsys):
        code, _, err = run(capsys, "enumerate", "--class", "all", "--weight", "-3")
        assert code == 2
        assert "nonnegative" in err


class TestDecompose:
    def test_worked_example(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--class", "g1", "--partition", "11,8,7,4"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["results"] == {"beta": [5, 4, 3, 2], "mu": [6, 4, 4, 2], "modulus": 2}

    def test_not_in_class(self, capsys):
        code, _, err = run(capsys, "decompose", "--class", "g1", "--partition", "3,3")
        assert code == 2
        assert "not in class" in err

    def test_bad_literal(self, capsys):
        code, _, err = run(capsys, "decompose", "--class", "g1", "--partition", "3,x")
        assert code == 2
        assert "invalid partition literal" in err


class TestVerify:
    def test_single_identity(self, capsys):
        code, out, err = run(capsys, "verify", "g1-four", "--trunc", "8")
        assert code == 0
        payload = json.loads(out)
        results = payload["results"]
        assert len(results) == 1
        assert results[0]["name"] == "identity[g1-four]"
        assert results[0]["passed"] is True
        # timing goes to stderr, never into the payload
        assert "s" in err and "seconds" not in out

    def test_unknown_identity(self, capsys):
        code, _, err = run(capsys, "verify", "nope", "--trunc", "8")
        assert code == 2
        assert "unknown identity key" in err

    def test_no_selection(self, capsys):
        code, _, err = run(capsys, "verify")
        assert code == 2

    def test_failure_exit_code(self, capsys, monkeypatch):
        def fake(spec, trunc):
            return CheckReport(f"identity[{spec.key}]", False, 1, ("forced",))

        monkeypatch.setattr(identities, "verify_spec", fake)
        code, out, _ = run(capsys, "verify", "g1-four", "--trunc", "4")
        assert code == 1
        assert json.loads(out)["results"][0]["failures"] == ["forced"]

    def test_full_battery_is_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "verify", "--all", "--trunc", "4")
        code2, out2, _ = run(capsys, "verify", "--all", "--trunc", "4")
        assert code1 == code2 == 0
        assert out1 == out2
        results = json.loads(out1)["results"]
        assert all(r["passed"] for r in results)
        assert len(results) >= 30

    def test_env_default_truncation(self, capsys, monkeypatch):
        monkeypatch.setenv("SIPQ_TRUNC", "5")
        code, out, _ = run(capsys, "verify", "g1-four")
        assert code == 0
        assert json.loads(out)["params"]["trunc"] == 5

    def test_negative_trunc(self, capsys):
        code, _, err = run(capsys, "verify", "g1-four", "--trunc", "-2")
        assert code == 2


class TestSeries:
    def test_product_terms(self, capsys):
        code, out, _ = run(
            capsys, "series", "--spec", "boulet-p", "--side", "product", "--trunc", "2"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["results"]["variables"] == ["a", "b", "c", "d"]
        # weights of (), (1), (1,1), (2) in canonical order
        assert payload["results"]["terms"] == [
            {"ea": 0, "eb": 0, "ec": 0, "ed": 0, "coeff": "1"},
            {"ea": 1, "eb": 0, "ec": 0, "ed": 0, "coeff": "1"},
            {"ea": 1, "eb": 0, "ec": 1, "ed": 0, "coeff": "1"},
            {"ea": 1, "eb": 1, "ec": 0, "ed": 0, "coeff": "1"},
        ]

    def test_missing_side(self, capsys):
        code, _, err = run(
            capsys, "series", "--spec", "boulet-p", "--side", "product-alt", "--trunc", "2"
        )
        assert code == 2
        assert "no alternate product" in err

    def test_unknown_spec(self, capsys):
        code, _, _ = run(capsys, "series", "--spec", "zzz", "--side", "series", "--trunc", "2")
        assert code == 2


class TestTable:
    def test_grid_shape_and_values(self, capsys):
        code, out, _ = run(
            capsys, "table", "--basis", "g1", "--method", "closed-form",
            "--n-max", "2", "--h-max", "2",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "class,method,n,h,polynomial"
        assert len(lines) == 10  # header + 3x3 grid
        cells = {tuple(row.split(",")[2:4]): row.split(",")[4] for row in lines[1:]}
        assert cells[("0", "0")] == "1"
        assert cells[("1", "1")] == "a"
        assert cells[("1", "2")] == "a*b"
        assert cells[("2", "1")] == "0"

    def test_methods_agree(self, capsys):
        outs = []
        for method in ("enumerated", "recurrence", "closed-form"):
            code, out, _ = run(
                capsys, "table", "--basis", "p2", "--method", method,
                "--n-max", "4", "--h-max", "6",
            )
            assert code == 0
            outs.append([line.split(",", 2)[2] for line in out.splitlines()[1:]])
        assert outs[0] == outs[1] == outs[2]


class TestTablesCheck:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "tables-check", "--basis", "g2", "--n-max", "6", "--h-max", "6")
        assert code == 0
        payload = json.loads(out)
        assert payload["results"][0]["passed"] is True

    def test_negative_bound(self, capsys):
        code, _, _ = run(capsys, "tables-check", "--basis", "g2", "--n-max", "-1")
        assert code == 2


def test_unknown_subcommand_exits_with_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2

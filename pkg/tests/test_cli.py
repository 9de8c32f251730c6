import argparse
import json

import pytest

from torushom import cli
from torushom.knotcomplex import BigradedGroup


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_range():
    assert cli.parse_range("3") == (3, 3)
    assert cli.parse_range("2..5") == (2, 5)
    assert cli.parse_range("-3..3") == (-3, 3)
    with pytest.raises(argparse.ArgumentTypeError):
        cli.parse_range("5..2")
    with pytest.raises(argparse.ArgumentTypeError):
        cli.parse_range("a..b")


def test_compute_table_grid(capsys):
    code, out, _ = run(capsys, ["compute", "--n", "2..5", "--m", "1..5"])
    assert code == 0
    rows = [l for l in out.splitlines() if l.strip() and not l.startswith("  N")]
    assert len(rows) == 20
    assert any("Z^4 + Z/2" in l for l in rows)


def test_compute_json(capsys):
    code, out, _ = run(capsys, ["compute", "--n", "3", "--m", "3", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    (result,) = data["results"]
    assert result["kr_total"] == {"free": 7, "torsion": [3]}
    assert result["kr_total_str"] == "Z^7 + Z/3"
    assert result["isomorphic"] is True


def test_compute_bigrading_round_trip(capsys):
    code, out, _ = run(
        capsys,
        ["compute", "--n", "2", "--m", "3", "--format", "json", "--bigrading"],
    )
    assert code == 0
    data = json.loads(out)
    table = data["results"][0]["kr_bigraded"]
    parsed = BigradedGroup.from_json(table)
    from torushom.knotcomplex import torus_link_homology

    assert parsed == torus_link_homology(2, 3)


def test_compute_negative_m(capsys):
    code, out, _ = run(capsys, ["compute", "--n", "2", "--m=-3"])
    assert code == 0
    assert "Z^4 + Z/2" in out


def test_compute_dump_matrices(capsys):
    code, out, _ = run(
        capsys,
        ["compute", "--n", "2", "--m", "2", "--format", "json", "--dump-matrices"],
    )
    assert code == 0
    diffs = json.loads(out)["results"][0]["differentials"]
    assert set(diffs) == {"-2", "-1"}
    assert all(isinstance(row, list) for mat in diffs.values() for row in mat)


def test_verify_small_grid(capsys):
    code, out, _ = run(capsys, ["verify", "--n", "2", "--m", "1"])
    assert code == 0
    assert "4 run, 4 passed" in out
    assert "all checks passed" in out


def test_verify_default_grid_mentions_counts(capsys):
    code, out, _ = run(capsys, ["verify", "--n", "2", "--m", "0..2"])
    assert code == 0
    assert "12 run, 12 passed" in out


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "--n", "9", "--m", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "--n", "2", "--m", "12"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["table", "--n", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2


def test_table_command(capsys):
    code, out, _ = run(capsys, ["table", "--n", "2"])
    assert code == 0
    assert "trefoil" in out and "Z^4 + Z/2" in out
    assert "MISMATCH" not in out
    code, out, _ = run(capsys, ["table", "--n", "5"])
    assert code == 0
    assert "Z^25" in out  # Hopf link row
    code, out, _ = run(capsys, ["table", "--n", "4"])
    assert "Z^16 + (Z/4)^2" in out  # cinquefoil row


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(
        capsys, ["compute", "--n", "2", "--m", "1", "--format", "json", "--out", str(path)]
    )
    assert code == 0
    assert out == ""
    data = json.loads(path.read_text())
    assert data["results"][0]["n"] == 2


def test_injected_fault_fails_named_check(capsys, monkeypatch):
    # sabotage the Euler class seen by the complex builders (a + b instead
    # of a - b); the representation-space side is untouched, so the
    # observation check must fail by name
    def bad_euler_class(n):
        from torushom.cohomring import flag_ring

        ring = flag_ring(n)
        out = dict(ring.reduce_monomial((1, 0)))
        for mono, c in ring.reduce_monomial((0, 1)).items():
            out[mono] = out.get(mono, 0) + c
        return {m: c for m, c in out.items() if c}

    monkeypatch.setattr("torushom.knotcomplex.euler_class", bad_euler_class)
    code, out, _ = run(capsys, ["verify", "--n", "3", "--m", "3"])
    assert code == 1
    assert "FAIL n=3 m=3 check=observation" in out
    assert "first failure" in out

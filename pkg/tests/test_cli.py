import json
import subprocess
import sys

import pytest

from newtonian.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_row(capsys):
    assert call(capsys, "row", "--y", "2", "--n", "3") == (0, "1 6 12 8", "")
    code, out, _ = call(capsys, "row", "--y", "1/2", "--n", "2", "--json")
    assert json.loads(out)["entries"] == ["1", "1", "1/4"]


def test_delta(capsys):
    assert call(capsys, "delta", "--y", "1", "--n", "5", "--carry")[:2] == (0, "161051")
    assert call(capsys, "delta", "--y", "2", "--n", "3")[:2] == (0, "1728")
    assert call(capsys, "delta", "--y", "-1/2", "--n", "2")[:2] == (0, "361/4")


def test_carry_on_fraction_is_usage_error(capsys):
    code, _, err = call(capsys, "delta", "--y", "1/2", "--n", "2", "--carry")
    assert code == 1 and "carry undefined" in err


def test_malformed_rational_names_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["qpoly", "--n", "3", "--a", "1.5"])
    assert exc.value.code == 1
    assert "--a" in capsys.readouterr().err


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["row", "--y", "1", "--n", "2", "--colour"])
    assert exc.value.code == 1


def test_qpoly(capsys):
    assert call(capsys, "qpoly", "--n", "3", "--a", "1")[1] == "3*y^2 + 63*y + 331"
    assert call(capsys, "qpoly", "--n", "3", "--a", "1", "--eval", "0")[1] == "331"
    assert call(capsys, "qpoly", "--n", "3", "--a", "0")[0] == 1


def test_triple(capsys):
    assert call(capsys, "triple", "--p", "1", "--q", "3", "--x", "0", "--a", "1")[1] == "3 4 5"
    code, out, _ = call(capsys, "triple", "--p", "1", "--q", "3", "--x", "0", "--a", "1",
                        "--order", "beta-min", "--json")
    assert json.loads(out) == {"alpha": "4", "beta": "3", "gamma": "5", "gcd": 1}


def test_partition(tmp_path, capsys):
    path = tmp_path / "t.json"
    path.write_text(json.dumps([[3, 4, 5], [6, 8, 10], [5, 12, 13]]))
    code, out, _ = call(capsys, "partition", "--file", str(path))
    assert code == 0 and out.splitlines() == ["1: (3,4,5) (5,12,13)", "2: (6,8,10)"]
    txt = tmp_path / "t.txt"
    txt.write_text("9 12 15\n3 4 5\n")
    assert call(capsys, "partition", "--file", str(txt))[1].splitlines() == ["1: (3,4,5)", "3: (9,12,15)"]


def test_ring(capsys):
    assert call(capsys, "ring", "--op", "add", "--y1", "2", "--y2", "3", "--n", "3")[1] == "N(5,3)"
    assert call(capsys, "ring", "--op", "mul", "--y1", "2", "--y2", "1", "--n", "3")[1] == "N(2,3)"
    assert call(capsys, "ring", "--op", "scale", "--alpha", "3", "--y1", "2", "--depth", "4")[1] == "T(6,4)"
    assert call(capsys, "ring", "--op", "add", "--y1", "2", "--y2", "3",
                "--depth", "2", "--depth2", "5")[1] == "T(5,5)"
    assert call(capsys, "ring", "--op", "add", "--y1", "2", "--y2", "3")[0] == 1


def test_group(capsys):
    code, out, _ = call(capsys, "group", "--op", "id", "--z", "0", "--a", "1", "--json")
    assert json.loads(out)["x"] == "-10" and json.loads(out)["y"] == "1"
    code, out, _ = call(capsys, "group", "--op", "inv", "--p", "2", "--q", "3", "--z", "0", "--a", "1", "--json")
    assert (json.loads(out)["p"], json.loads(out)["q"]) == ("1/2", "1/3")
    code, out, _ = call(capsys, "group", "--op", "mul", "--p", "2", "--q", "1", "--p2", "3",
                        "--q2", "5", "--z", "0", "--a", "1", "--json")
    assert (json.loads(out)["p"], json.loads(out)["q"]) == ("6", "5")


def test_ea(capsys):
    code, out, _ = call(capsys, "ea", "--p", "1", "--q", "1", "--z", "0", "--k", "1", "--json")
    assert json.loads(out)["residual"] == "1/108"


def test_search_json(capsys):
    code, out, _ = call(capsys, "search", "fermat", "--n", "3", "--bound", "50", "--json")
    data = json.loads(out)
    assert code == 0 and data["witnesses"] == [] and data["exhaustive"] is True
    code, out, _ = call(capsys, "search", "pyth", "--bound", "25", "--json")
    assert json.loads(out)["primitive"] == 4


def test_search_respects_bound_cap(capsys, monkeypatch):
    monkeypatch.setenv("NEWTONIAN_MAX_BOUND", "20")
    code, out, _ = call(capsys, "search", "pyth", "--bound", "1000", "--json")
    assert json.loads(out)["bounds"]["bound"] == 20


@pytest.mark.parametrize("argv", [
    ["row", "--y", "-3/7", "--n", "4", "--json", "--base", "3"],
    ["search", "cubsq", "--bound", "12", "--json"],
    ["search", "r3", "--bound", "8", "--json"],
    ["triple", "--p", "1/2", "--q", "1", "--x", "0", "--a", "1", "--json"],
    ["ea", "--p", "2", "--q", "-1", "--z", "1/3", "--k", "-2", "--json"],
])
def test_json_round_trip(capsys, argv):
    _, out, _ = call(capsys, *argv)
    assert json.dumps(json.loads(out), ensure_ascii=False) == out


def test_verify_exit_code_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["verify", "--ledger", str(a)]) == 2
    assert run(["verify", "--ledger", str(b)]) == 2
    capsys.readouterr()
    assert a.read_text() == b.read_text()
    ledger = json.loads(a.read_text())
    status = {e["claim_id"]: e["status"] for e in ledger}
    assert status["vartheta-at-x0"] == "refuted-at-desk-scale"
    assert status["ea-membership"] == "refuted-at-desk-scale"
    assert status["delta-identity"] == "verified"
    assert status["galois-order-n>=5"] == "claim-only"
    assert set(status.values()) <= {"verified", "refuted-at-desk-scale", "claim-only"}
    for e in ledger:
        assert set(e) == {"claim_id", "paper_ref", "status", "witnesses"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "newtonian", "row", "--y", "2", "--n", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1 8 24 32 16"

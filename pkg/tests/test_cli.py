import json
import subprocess
import sys

import pytest

from pipedreams.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stats_text(capsys):
    code, out, _ = run(capsys, "stats", "4617352")
    assert code == 0
    assert "rajcode      (4, 4, 2, 3, 1, 1)" in out
    assert "rajcode_inv  (4, 5, 3, 1, 2)" in out
    assert "movecode     (1, 3, 2, 0, 2)" in out
    assert "reg          3" in out


def test_stats_json_keys(capsys):
    code, out, _ = run(capsys, "stats", "4617352", "--json")
    data = json.loads(out)
    assert code == 0
    assert list(data) == [
        "one_line", "invcode", "rajcode", "rajcode_inv", "movecode", "reg", "ir", "max_pipedream", "k_weights",
    ]
    assert data["one_line"] == [4, 6, 1, 7, 3, 5, 2]
    assert data["ir"][0] == [3, 4, 0, 3, 1, 1] and data["ir"][-1] == [4, 4, 2, 3, 1, 1]
    assert data["k_weights"] == data["ir"][1:]


def test_maximal(capsys):
    code, out, _ = run(capsys, "maximal", "14523")
    assert code == 0
    assert out.splitlines()[:4] == [".++.", "+.+", "++", "."]
    assert "row weight   (2, 2, 2)" in out and "col weight   (2, 2, 2)" in out
    assert "K weights    (1, 2, 2) (2, 2, 2)" in out


def test_maximal_trace(capsys):
    code, out, _ = run(capsys, "maximal", "14523", "--trace")
    assert code == 0
    assert out.startswith("start:\n....\n++.\n++\n.\n")
    assert "bar=1 col=2 moves=[(2→1,R),(3→2,K)]" in out
    code, out, _ = run(capsys, "maximal", "14523", "--trace", "--json")
    assert json.loads(out)["trace"]["k_events"] == [[1, [1, 2, 2]], [2, [2, 2, 2]]]


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "132", "--count")[1] == "3\n"
    code, out, _ = run(capsys, "enumerate", "132")
    assert out.splitlines() == ["(1,2)", "(2,1)", "(1,2) (2,1)"]
    assert run(capsys, "enumerate", "123")[1] == "-\n"


def test_poly(capsys):
    assert run(capsys, "poly", "21")[1] == "-x1*y1 + x1 + y1\n"
    assert run(capsys, "poly", "21", "--top")[1] == "-x1*y1\n"
    assert run(capsys, "poly", "132", "--single")[1] == "x1*x2 + x2 + x1\n"
    assert run(capsys, "poly", "132", "--single", "--degree", "1")[1] == "x2 + x1\n"
    assert json.loads(run(capsys, "poly", "21", "--json")[1]) == [[[1], [1], -1], [[1], [], 1], [[], [1], 1]]


def test_ir(capsys):
    code, out, _ = run(capsys, "ir", "516342")
    assert out.splitlines() == ["(4, 0, 3, 1, 1)", "(4, 1, 3, 1, 1)", "(4, 2, 3, 1, 1)"]


def test_render(capsys):
    out = run(capsys, "render", "14523")[1]
    assert out.splitlines()[1] == "· ● □ · ·"
    snow = run(capsys, "render", "4617352", "--snow")[1].splitlines()
    assert snow[2] == "· * · · * · ·"
    left = run(capsys, "render", "4617352", "--left-snow")[1].splitlines()
    assert left[3] == "* □ □ * ● · ·"
    assert run(capsys, "render", "14523", "--bottom")[1] == "....\n++.\n++\n.\n"
    assert run(capsys, "render", "14523", "--maximal")[1] == ".++.\n+.+\n++\n.\n"


def test_verify(capsys):
    code, out, err = run(capsys, "verify", "--n", "4")
    assert code == 0
    assert "PASS thm1.2 n=4 checked=24" in out
    assert "ok" in err and "ok" not in out
    code, out, _ = run(capsys, "verify", "--n", "3", "--claims", "thm1.2", "prop4.3", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and [c["claim"] for c in data["checks"]] == ["thm1.2", "prop4.3"]
    code, out, _ = run(capsys, "verify", "--n", "3", "--upto", "--claims", "cor4.6")
    assert out.splitlines() == [f"PASS cor4.6 n={k} checked={c}" for k, c in ((1, 1), (2, 2), (3, 6))]


def test_verify_counterexample_exit_code(capsys, monkeypatch):
    from pipedreams import verify as verify_module

    monkeypatch.setitem(verify_module.CLAIMS, "thm1.2", verify_module.Claim("thm1.2", "broken", _never))
    code, out, _ = run(capsys, "verify", "--n", "3", "--claims", "thm1.2")
    assert code == 1
    assert out.startswith("FAIL thm1.2 n=3 checked=6 counterexamples=1,2,3 1,3,2")


def _never(w):
    return False


@pytest.mark.parametrize(
    "argv",
    [["stats", "1224"], ["stats", "abc"], ["verify", "--n", "2", "--claims", "nope"]],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors_use_the_usage_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["stats"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["render", "12", "--rothe", "--snow"])
    assert exc.value.code == 2


def test_guard_exit_code(capsys, monkeypatch):
    assert run(capsys, "poly", "12345678")[0] == 3
    assert run(capsys, "verify", "--n", "6", "--claims", "thm1.1")[0] == 3
    monkeypatch.setenv("PIPEDREAM_MAX_N", "2")
    assert run(capsys, "enumerate", "132", "--count")[0] == 0
    assert run(capsys, "verify", "--n", "3", "--claims", "thm1.2")[0] == 3


@pytest.mark.parametrize(
    "argv",
    [["stats", "4617352", "--json"], ["maximal", "4617352", "--trace"], ["poly", "1432"], ["verify", "--n", "3", "--json"]],
)
def test_output_is_repeatable(capsys, argv):
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pipedreams", "enumerate", "132", "--count"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "3\n"
    proc = subprocess.run([sys.executable, "-m", "pipedreams", "stats", "0"], capture_output=True, text=True)
    assert proc.returncode == 2

import json
import subprocess
import sys

import pytest

from schurweyl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_rsk_forward_json(capsys):
    code, env = run_json(capsys, "rsk", "--config", "3,1,2,3,2", "--n", "5")
    assert code == 0 and env["command"] == "rsk" and env["exact"] is True
    assert env["inputs"] == {"config": [3, 1, 2, 3, 2], "n": 5}
    assert env["result"]["insertion"] == [[3, 2, 0, 0, 0], [3, 2, 0, 0], [3, 2, 0], [3, 0], [1]]
    assert env["result"]["recording"][0] == [1]


def test_rsk_text_and_trivial(capsys):
    code, out, _ = run(capsys, "rsk", "--config", "1", "--n", "1")
    assert code == 0 and "t = (1)" in out and "y = (1)" in out
    code, out, _ = run(capsys, "rsk", "--config", "3,1,2,3,2", "--n", "5")
    assert "t = (122/33)" in out and "y = (134/25)" in out


def test_rsk_inverse_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "rsk", "--config", "3,1,2,3,2", "--n", "5", "--format", "json")
    path = tmp_path / "d.json"
    path.write_text(out)
    code, env = run_json(capsys, "rsk", "--inverse", "--input", str(path))
    assert code == 0 and env["result"] == [3, 1, 2, 3, 2]
    code, out, _ = run(capsys, "rsk", "--inverse", "--t", "122/33", "--y", "134/25", "--n", "5")
    assert code == 0 and out.strip() == "3,1,2,3,2"


def test_amplitude(capsys):
    args = ["amplitude", "--config", "1,3,2,2", "--lambda", "3,1", "--t", "123/2", "--y", "134/2"]
    code, out, _ = run(capsys, *args)
    assert code == 0 and out.startswith("sqrt(3)/6")
    code, env = run_json(capsys, *args)
    assert env["result"]["amplitude"]["terms"] == [{"num": 1, "den": 6, "radicand": 3}]
    code, out, _ = run(capsys, *args, "--show-graph")
    assert "210/20/1" in out and "210/11/1" in out and "3/4" in out
    code, env = run_json(capsys, "amplitude", "--config", "1,1,1,2", "--lambda", "3,1",
                         "--t", "123/2", "--y", "134/2")
    assert code == 0 and env["result"]["amplitude"]["terms"] == []


def test_state(capsys):
    code, env = run_json(capsys, "state", "--lambda", "3,1", "--t", "123/2", "--y", "134/2")
    assert code == 0 and env["exact"]
    amps = {tuple(a["config"]): a["value"]["float"] for a in env["result"]["amplitudes"]}
    assert len(amps) == 12 and amps[(2, 2, 1, 3)] == 0
    code, out, _ = run(capsys, "state", "--lambda", "3", "--t", "111", "--y", "123")
    assert code == 0 and "norm^2 = 1" in out


def test_json_is_deterministic(capsys):
    args = ("state", "--lambda", "2,1", "--t", "12/2", "--y", "13/2", "--format", "json")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b


def test_verify(capsys):
    code, env = run_json(capsys, "verify", "--N", "4", "--n", "3")
    assert code == 0 and env["result"]["passed"]
    code, out, _ = run(capsys, "verify", "--N", "1", "--n", "1")
    assert code == 0 and "OK" in out


def test_verify_refuses_oracle_beyond_budget(capsys):
    code, env = run_json(capsys, "verify", "--N", "12", "--budget", "8", "--max-orbit", "50")
    assert code == 0
    stages = {s["stage"]: s for s in env["result"]["stages"]}
    assert stages["oracle-equivalence"]["skipped"]
    assert "479001600" in stages["oracle-equivalence"]["detail"]
    assert stages["unitarity"]["passed"] and not stages["unitarity"]["skipped"]


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--N-range", "1", "--n", "3", "--repeats", "1")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "N,n,lambda,graph_seconds,oracle_seconds,amplitude"
    assert lines[1].startswith("1,3,1,")
    code, out, _ = run(capsys, "bench", "--N-range", "9..10", "--n", "3", "--budget", "8",
                       "--repeats", "1")
    assert all(",refused," in ln for ln in out.strip().splitlines()[1:])


@pytest.mark.parametrize("argv", [
    ["rsk", "--config", "1,x", "--n", "2"],
    ["rsk", "--config", "1,3", "--n", "2"],
    ["state", "--lambda", "3,1", "--t", "123/2", "--y", "12/34"],
    ["state", "--lambda", "3,1", "--t", "132/2", "--y", "134/2"],
    ["amplitude", "--config", "1,2", "--lambda", "3,1", "--t", "123/2", "--y", "134/2"],
    ["rsk", "--inverse"],
])
def test_input_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "schurweyl", "rsk", "--config", "2,1", "--n", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "t = (1/2)" in res.stdout

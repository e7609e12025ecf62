import io
import json
import subprocess
import sys

import pytest

from artinstab import cli
from artinstab.errors import CounterexampleFound

from conftest import B_SEED_TEXT, D_SEED_TEXT


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def seeds(tmp_path):
    paths = {}
    for name, text in (("b2", B_SEED_TEXT), ("d", D_SEED_TEXT), ("iso", "generators: 2\n"),
                       ("bad", "generators: 2\nm 1 2 3\nm 2 1 5\n")):
        path = tmp_path / f"{name}.dgm"
        path.write_text(text)
        paths[name] = str(path)
    return paths


def test_verify_empty_seed():
    code, out = run("verify", "--seed", "empty", "--n", "2", "--max-len", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass" and doc["schema"] == 1
    (cfg,) = doc["configs"]
    assert [c["k"] for c in cfg["connectivity"]] == [0, 1, 2, 3, 4]
    assert cfg["shelling"]["point_A"]["passed"] and cfg["shelling"]["point_B"]["passed"]


def test_verify_b_seed(seeds):
    code, out = run("verify", "--seed", seeds["b2"], "--n", "3", "--max-len", "2")
    assert code == 0 and json.loads(out)["status"] == "pass"


@pytest.mark.parametrize("argv", [
    ["verify", "--n", "-1"],
    ["verify", "--n", "2", "--n-range", "1..2"],
    ["verify", "--max-len", "-2"],
    ["verify", "--jobs", "0"],
    ["verify", "--n-range", "3..1"],
    ["verify", "--seed", "/does/not/exist"],
    ["frobnicate"],
])
def test_usage_errors_exit_1(argv, capsys):
    assert run(*argv)[0] == 1


def test_bad_seed_file_exit_1(seeds):
    assert run("verify", "--seed", seeds["bad"])[0] == 1


def test_caps_exit_3():
    assert run("verify", "--n", "3", "--max-len", "3", "--cell-cap", "10")[0] == 3
    code, out = run("verify", "--n", "3", "--max-len", "3", "--class-cap", "2")
    assert code == 3 and json.loads(out)["status"] == "cap"
    cli.set_default_class_cap(cli.DEFAULT_CLASS_CAP)


def test_counterexample_exit_2(monkeypatch):
    def boom(*a, **k):
        raise CounterexampleFound("planted", {"where": "test"})
    monkeypatch.setattr(cli, "check_simplicial_identities", boom)
    code, out = run("verify", "--n", "2", "--max-len", "1")
    assert code == 2
    assert json.loads(out)["configs"][0]["counterexample"]["where"] == "test"


def _ranks(out):
    return [int(line.split()[1]) for line in out.splitlines()[1:]]


def test_h1_tables(seeds):
    code, out = run("h1", "--seed", "empty", "--n-range", "1..6")
    assert code == 0 and _ranks(out) == [1] * 6
    assert "<- stable" in out.splitlines()[1]
    assert _ranks(run("h1", "--seed", seeds["b2"], "--n-range", "1..5")[1]) == [2] * 5
    assert _ranks(run("h1", "--seed", seeds["d"], "--n-range", "1..5")[1]) == [1] * 5
    assert _ranks(run("h1", "--seed", seeds["iso"], "--n-range", "1..4")[1]) == [2] * 4


def test_h1_json(tmp_path):
    path = tmp_path / "h1.json"
    assert run("h1", "--json", str(path))[0] == 0
    doc = json.loads(path.read_text())
    assert [r["rank"] for r in doc["rows"]] == [1] * 6 and doc["constant_from_2"]


def test_enumerate():
    code, out = run("enumerate", "--n", "2", "--max-len", "3")
    assert code == 0
    assert "A+_2  lengths 0..3: 1,2,4,7" in out
    assert "A+(2;1): 1,1,2,3  convolution ok" in out
    assert "lengths 0..0: 1\n" in run("enumerate", "--max-len", "0")[1]


def test_json_file_identical_across_jobs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("verify", "--n-range", "2..3", "--max-len", "2", "--jobs", "1", "--json", str(a))[0] == 0
    assert run("verify", "--n-range", "2..3", "--max-len", "2", "--jobs", "3", "--json", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point_and_logging(tmp_path):
    env = {"ARTINSTAB_LOG": "info", "PATH": "/usr/bin:/bin"}
    proc = subprocess.run([sys.executable, "-m", "artinstab", "verify", "--n", "2", "--max-len", "1",
                           "--json", str(tmp_path / "r.json")], capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert "INFO artinstab" in proc.stderr

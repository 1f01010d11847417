import json

import pytest

from solvlie import generators as gen
from solvlie.cli import main
from solvlie.exactfield import GF, QQ
from solvlie.liealg import algebra_to_json, dump_algebra, make_algebra


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, L in [("example", gen.example_2_4(GF(2))), ("heis", gen.heisenberg(GF(2))),
                    ("abelian", gen.abelian(GF(3), 3)), ("weyl", gen.weyl_block(GF(2)))]:
        paths[name] = tmp_path / f"{name}.json"
        dump_algebra(L, paths[name])
    rot = make_algebra(QQ, 4, {(0, 2): {0: 1}, (1, 2): {1: 1}, (0, 3): {1: 1}, (1, 3): {0: -1}})
    paths["rotation"] = tmp_path / "rotation.json"
    dump_algebra(rot, paths["rotation"])
    obj = algebra_to_json(gen.heisenberg(GF(2)))
    obj["brackets"].append({"i": 0, "j": 2, "coeffs": {"0": 1}})
    paths["jacobi"] = tmp_path / "jacobi.json"
    paths["jacobi"].write_text(json.dumps(obj))
    paths["broken"] = tmp_path / "broken.json"
    paths["broken"].write_text("{oops")
    return paths


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_exit_codes(files, capsys):
    assert run(["check", files["heis"]], capsys)[0] == 0
    code, out, err = run(["check", files["jacobi"]], capsys)
    assert code == 1 and "(" in out + err
    assert run(["check", files["broken"]], capsys)[0] == 2


def test_analyze_example(files, capsys):
    code, out, _ = run(["analyze", files["example"]], capsys)
    assert code == 0
    rep = json.loads(out)
    s = rep["structure"]
    assert s["derived_length"] == 3
    assert s["nilradical"]["value"]["dim"] == 2 and s["monolith"]["value"]["dim"] == 2
    assert s["frattini"]["value"]["dim"] == 0
    assert rep["certificate"]["verdict"] is True
    assert rep["theorems"]["T3.3"]["status"] == "pass"


def test_analyze_heisenberg_and_abelian(files, capsys, tmp_path):
    rep = json.loads(run(["analyze", files["heis"], "--no-theorems"], capsys)[1])
    assert rep["structure"]["strongly_solvable"] is True
    assert rep["certificate"]["verdict"] is False and "witness" in rep["certificate"]
    out = tmp_path / "r.json"
    assert run(["analyze", files["abelian"], "--no-theorems", "--out", out], capsys)[0] == 0
    rep = json.loads(out.read_text())
    assert rep["structure"]["nilradical"]["value"]["dim"] == 3
    assert rep["decomposition"]["dims"] == [3]


def test_is_a_exit_codes(files, capsys):
    assert run(["is-a", files["example"]], capsys)[0] == 0
    code, out, _ = run(["is-a", files["heis"]], capsys)
    assert code == 3 and "witness" in out
    assert run(["is-a", files["rotation"]], capsys)[0] == 4
    assert run(["is-a", files["example"], "--method", "structural"], capsys)[0] == 0


def test_decompose(files, capsys):
    code, out, _ = run(["decompose", files["example"]], capsys)
    assert code == 0 and json.loads(out)["dims"] == [2, 1, 1]
    assert run(["decompose", files["weyl"]], capsys)[0] == 3


def test_generate_round_trip(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert run(["generate", "theorem-6-6", "--field", "gf3", "--n", "1", "--lambdas", "1", "--out", out], capsys)[0] == 0
    assert run(["check", out], capsys)[0] == 0
    code, text, _ = run(["generate", "random-a", "--field", "gf4", "--seed", "5"], capsys)
    assert code == 0 and json.loads(text)["field"]["deg"] == 2


def test_verify_small_corpus(capsys):
    code, out, _ = run(["verify", "--field", "gf2,gf3", "--count", "12", "--a-count", "6", "--seed", "3"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t")[:3] == ["theorem", "pass", "fail"]
    assert all(line.split("\t")[2] == "0" for line in lines[1:])


def test_verify_files_with_heisenberg(files, capsys):
    code, out, _ = run(["verify", "--corpus", "files", "--files", files["heis"], files["example"]], capsys)
    assert code == 0
    rows = {line.split("\t")[0]: line.split("\t")[1:] for line in out.strip().splitlines()[1:]}
    assert rows["L2.5"][0] == "2"


def test_verify_mutation_exit_code(monkeypatch, capsys):
    monkeypatch.setenv("SOLVLIE_MUTATE", "cor32")
    code, _, err = run(["verify", "--field", "gf2", "--count", "10", "--seed", "1"], capsys)
    assert code == 5
    assert "C3.2" in err

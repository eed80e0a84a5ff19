import json

import pytest

from orbitlab.cli import main, run


def run_ok(*argv):
    code, text, _ = run(list(argv))
    assert code == 0, text
    return text


def test_poset_json_small():
    data = json.loads(run_ok("poset", "--lambda", "2,1", "--format", "json"))
    assert len(data["nodes"]) == 3
    assert len(data["covers"]) == 2
    nodes = [(n["r"], n["k"]) for n in data["nodes"]]
    edges = {(nodes[a], nodes[b]) for a, b in data["covers"]}
    assert edges == {((0, 2), (0, 1)), ((0, 1), (1, 2))}


def test_poset_counts():
    data = json.loads(run_ok("poset", "--lambda", "1", "--format", "json"))
    assert (len(data["nodes"]), len(data["covers"])) == (1, 0)
    data = json.loads(run_ok("poset", "--lambda", "7,5,3,3,2", "--format", "json"))
    assert len(data["nodes"]) == 17


def test_poset_dot():
    text = run_ok("poset", "--lambda", "2,1", "--format", "dot")
    assert text.startswith("digraph")
    assert 'label="(1, 2)"' in text and 'label="(p, 2)"' in text
    assert text.count("->") == 2


def test_json_is_byte_stable():
    argv = ["orbits", "--lambda", "3,2,1", "--p", "3", "--format", "json"]
    assert run_ok(*argv) == run_ok(*argv)
    text = run_ok(*argv)
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2)


def test_orbits_paper():
    data = json.loads(run_ok("orbits", "--lambda", "7,5,3,3,2", "--format", "json"))
    assert len(data["orbits"]) == 54
    assert set(data["counts"].values()) == {54}
    row = next(r for r in data["orbits"] if r["rvec"] == [3, 1, 0, 0, 0])
    assert row["weighted_size"] == 16
    assert row["max"] == [{"k": 5, "r": 1}, {"k": 3, "r": 0}]


def test_orbits_with_p():
    data = json.loads(run_ok("orbits", "--lambda", "1", "--p", "5", "--format", "json"))
    assert sorted(r["size_at_p"] for r in data["orbits"]) == [1, 4]
    data = json.loads(run_ok("orbits", "--lambda", "2,1", "--p", "2", "--format", "json"))
    assert sorted(r["size_at_p"] for r in data["orbits"]) == [1, 1, 2, 4]
    assert all("canonical_rep" in r for r in data["orbits"])
    text = run_ok("orbits", "--lambda", "2,1", "--p", "2")
    assert "orbits: 4" in text


def test_orbit_size():
    text = run_ok("orbit-size", "--lambda", "7,5,3,3,2", "--rvec", "3,1,0,0,0")
    assert text.splitlines()[0] == "p^16 - p^15 - p^14 + p^13"
    assert run_ok("orbit-size", "--lambda", "7,5,3,3,2", "--rvec", "7,5,3,3,2").splitlines()[0] == "1"
    data = json.loads(run_ok("orbit-size", "--lambda", "7,5,3,3,2", "--rvec", "4,3,1,1,1", "--p", "2", "--format", "json"))
    # 1024 - 512 - 256 + 128
    assert data["size_at_p"] == 384
    assert data["monic"] and data["degree"] == 10 and data["formulas_agree"]


def test_orbit_size_bad_rvec():
    code, text, _ = run(["orbit-size", "--lambda", "7,5,3,3,2", "--rvec", "5,1,0,0,0"])
    assert code == 2
    assert "NotAnIdeal" in text and "index 2" in text


def test_degenerates():
    assert run_ok("degenerates", "--lambda", "7,5,3,3,2", "--p", "2",
                  "--a", "32,2,4,1,2", "--b", "16,16,2,2,0").startswith("true")
    data = json.loads(run_ok("degenerates", "--lambda", "2,1", "--p", "3", "--a", "4,1", "--b", "0,0", "--format", "json"))
    assert data["degenerates"] is True and data["brute_force"] is True
    data = json.loads(run_ok("degenerates", "--lambda", "2", "--mu", "1", "--p", "2", "--a", "2", "--b", "1", "--format", "json"))
    assert data["degenerates"] is False and data["brute_force"] is False


def test_degenerates_out_of_range():
    code, _, _ = run(["degenerates", "--lambda", "2", "--p", "2", "--a", "9", "--b", "0"])
    assert code == 2


def test_subquotient():
    data = json.loads(run_ok("subquotient", "--lambda", "7,5,3,3,2", "--outer", "3,1,0,0,0",
                             "--inner", "4,3,1,1,1", "--format", "json"))
    assert len(data["orbits"]) == 13
    data = json.loads(run_ok("subquotient", "--lambda", "2,1", "--outer", "1,0", "--inner", "1,0", "--format", "json"))
    assert len(data["orbits"]) == 1 and data["orbits"][0]["polynomial"] == [{"coef": 1, "exp": 0}]
    data = json.loads(run_ok("subquotient", "--lambda", "2,1", "--outer", "0,0", "--inner", "2,1",
                             "--p", "2", "--format", "json"))
    assert len(data["orbits"]) == 4
    assert sum(r["size_at_p"] for r in data["orbits"]) == 8
    assert data["max_orbit_density"] == "1/2"


def test_subquotient_not_subideal():
    code, text, _ = run(["subquotient", "--lambda", "2,1", "--outer", "1,1", "--inner", "0,0"])
    assert code == 2 and "NotSubideal" in text


def test_verify():
    text = run_ok("verify", "--lambda", "2,1", "--p", "2")
    assert text.splitlines()[-1] == "PASS (4 orbits, sizes 1,1,2,4)"
    report = json.loads(run_ok("verify", "--lambda", "1", "--p", "2", "--format", "json"))
    assert report["pass"] and all(c["pass"] for c in report["checks"])
    assert {c["name"] for c in report["checks"]} >= {"orbit_count", "orbit_sizes", "degeneration_equivalence"}


def test_verify_errors():
    code, text, _ = run(["verify", "--lambda", "2,1", "--p", "4"])
    assert code == 2 and "NotPrime" in text
    code, _, _ = run(["verify", "--lambda", "2,1", "--p", "2", "--max-aut-space", "8"])
    assert code == 5


def test_verify_env_bound(monkeypatch):
    monkeypatch.setenv("ORBITLAB_MAX_AUT_SPACE", "8")
    code, _, _ = run(["verify", "--lambda", "2,2", "--p", "2"])
    assert code == 5


def test_chains():
    assert run_ok("chains", "--n", "1").splitlines()[0] == "1"
    assert run_ok("chains", "--n", "3").splitlines()[0] == "2"
    data = json.loads(run_ok("chains", "--n", "6", "--format", "json"))
    assert data == {"n": 6, "chains": 42, "catalan_index": 5}
    code, _, _ = run(["chains", "--n", "13"])
    assert code == 5


def test_bad_partition_exit_code():
    code, text, _ = run(["orbits", "--lambda", "3,0"])
    assert code == 2


def test_main_writes_output(tmp_path, capsys):
    out = tmp_path / "p.dot"
    assert main(["poset", "--lambda", "2,1", "--format", "dot", "--output", str(out)]) == 0
    assert out.read_text().startswith("digraph")
    assert capsys.readouterr().out == ""


def test_main_error_goes_to_stderr(capsys):
    assert main(["orbits", "--lambda", "x"]) == 2
    assert "MalformedToken" in capsys.readouterr().err


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["orbits"])
    assert info.value.code == 2

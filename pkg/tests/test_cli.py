import json

import pytest

from graphconf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_graph(capsys, tmp_path, family, *params):
    path = tmp_path / f"{family}.json"
    code, out, err = run(capsys, "gen", family, *params, "--out", str(path))
    assert code == 0, err
    return str(path)


def test_gen_writes_graph(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "s1_min")
    data = json.loads(open(path).read())
    assert data["vertices"] == ["v"]
    assert data["edges"][0]["ends"] == ["v", "v"]


def test_gen_families(capsys, tmp_path):
    for args in [("s1_sd", "-n", "3"), ("y",), ("w", "-k", "2", "-l", "1"), ("theta",), ("path", "-n", "2"), ("xb", "-x", "1", "-k", "1", "-l", "1", "-p", "0", "-q", "1")]:
        code, out, _ = run(capsys, "gen", *args)
        assert code == 0
        json.loads(out)


def test_gen_rejects_out_of_range(capsys):
    code, _, err = run(capsys, "gen", "s1_sd", "-n", "9")
    assert code == 3 and "parameter" in err


def test_model_square(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "s1_min")
    code, out, _ = run(capsys, "model", "--graph", path, "-k", "2")
    report = json.loads(out)
    assert report["fvector"] == [4, 4]
    assert report["betti"] == [1, 1]
    assert report["dimension"] == 1
    assert report["components"] == 1


def test_model_quotient(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "s1_min")
    code, out, _ = run(capsys, "model", "--graph", path, "-k", "2", "--quotient")
    report = json.loads(out)
    assert report["fvector"] == [2, 2] and report["betti"] == [1, 1]


def test_model_collapse_dodecagon(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "y")
    code, out, _ = run(capsys, "model", "--graph", path, "-k", "2", "--remove-leaves", "--collapse")
    report = json.loads(out)
    assert report["fvector"] == [12, 12]


def test_model_output_byte_stable(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "w", "-k", "1", "-l", "1")
    _, out1, _ = run(capsys, "model", "--graph", path, "-k", "2")
    _, out2, _ = run(capsys, "model", "--graph", path, "-k", "2")
    assert out1 == out2


def test_braidgroup_hub(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "w", "-k", "2", "-l", "1")
    code, out, _ = run(capsys, "braidgroup", "--graph", path, "-k", "2", "--remove-leaves")
    report = json.loads(out)
    assert report["ordered"]["abelianization"]["rank"] == 7
    assert report["unordered"]["abelianization"]["rank"] == 4
    assert report["ordered"]["free_rank"] == 7
    assert len(report["ordered"]["presentation"]["generators"]) == 7


def test_braidgroup_circle(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "w", "-k", "0", "-l", "1")
    code, out, _ = run(capsys, "braidgroup", "--graph", path, "-k", "2")
    report = json.loads(out)
    assert report["ordered"]["abelianization"]["rank"] == 1
    assert report["unordered"]["abelianization"]["rank"] == 1


def test_braidgroup_double_hub_rank(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "xb", "-x", "1", "-k", "1", "-l", "1", "-p", "1", "-q", "1")
    code, out, _ = run(capsys, "braidgroup", "--graph", path, "-k", "2")
    report = json.loads(out)
    assert report["unordered"]["abelianization"]["rank"] == 8


def test_compare_circle(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "s1_min")
    code, out, _ = run(capsys, "compare", "--graph", path, "-k", "2", "--subdivide", "3")
    report = json.loads(out)
    assert report["match"] is True
    assert report["abrams"]["fvector"] == [6, 6]
    assert report["model"]["fvector"] == [4, 4]
    assert report["conditions"]["ok"] is True


def test_compare_unsubdivided_circle_mismatch(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "s1_min")
    code, out, _ = run(capsys, "compare", "--graph", path, "-k", "2")
    report = json.loads(out)
    assert code == 0
    assert report["match"] is False
    assert report["conditions"]["ok"] is False


def test_compare_y(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "y")
    code, out, _ = run(capsys, "compare", "--graph", path, "-k", "2", "--subdivide", "3")
    report = json.loads(out)
    assert report["match"] is True
    assert report["model"]["betti"][:2] == [1, 1]


def test_reduced_command(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "w", "-k", "1", "-l", "1")
    code, out, _ = run(capsys, "reduced", "--graph", path, "--remove-leaves")
    report = json.loads(out)
    assert report["fvector"] == [8, 10, 0]
    assert report["betti"] == [1, 3]
    assert len(report["cells"]["edges"]) == 10
    assert report["cells"]["faces"] == []


def test_reduced_quotient(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "s1_min")
    code, out, _ = run(capsys, "reduced", "--graph", path, "--quotient")
    report = json.loads(out)
    assert report["fvector"] == [2, 2] and report["betti"] == [1, 1]


def test_exit_code_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(capsys, "model", "--graph", str(bad), "-k", "2")
    assert code == 2 and out == "" and err


def test_exit_code_invalid_graph_content(capsys, tmp_path):
    bad = tmp_path / "dup.json"
    bad.write_text(json.dumps({"vertices": ["v", "v"], "edges": []}))
    code, _, _ = run(capsys, "model", "--graph", str(bad), "-k", "2")
    assert code == 2


def test_exit_code_invalid_config(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "s1_min")
    code, _, _ = run(capsys, "model", "--graph", path, "-k", "0")
    assert code == 3
    code, _, _ = run(capsys, "reduced", "--graph", path, "-k", "3")
    assert code == 3


def test_reduced_rejects_leaves(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "y")
    code, _, err = run(capsys, "reduced", "--graph", path)
    assert code == 3 and "leaves" in err


def test_stdout_carries_json_only(capsys, tmp_path):
    path = write_graph(capsys, tmp_path, "s1_min")
    code, out, _ = run(capsys, "model", "--graph", path, "-k", "2")
    json.loads(out)  # a single JSON document, nothing else
    assert out.endswith("\n") and out.count("\n") == 1

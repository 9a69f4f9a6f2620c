from __future__ import annotations

import json
import subprocess
import sys

import pytest

from fusionscope import catalog
from fusionscope.cli import main
from fusionscope.document import dump, serialize


@pytest.fixture
def emit(tmp_path):
    def _emit(name):
        path = tmp_path / f"{name}.json"
        dump(catalog.get(name), path)
        return str(path)
    return _emit


def test_isomorphic_d4_q8(emit, capsys):
    assert main(["isomorphic", emit("D4"), emit("Q8")]) == 0
    out = capsys.readouterr().out
    assert "2 -> 2" in out and "1 -> 1" in out


def test_isomorphic_negative(emit, capsys):
    assert main(["isomorphic", emit("Z4"), emit("Z2xZ2")]) == 1


def test_chain_group_su2(emit, capsys):
    assert main(["chain-group", emit("SU2-trunc-jmax5")]) == 0
    out = capsys.readouterr().out
    assert "Z2" in out
    assert "class 0: 0, 1, 2, 3, 4, 5" in out
    assert "class 1: 1/2, 3/2, 5/2, 7/2, 9/2" in out


def test_validate_broken(tmp_path, capsys):
    doc = json.loads(serialize(catalog.get("D4")))
    doc["fusion"] = [e for e in doc["fusion"] if e != [4, 4, 0, 1]]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    assert main(["validate", str(path)]) == 1
    out = capsys.readouterr().out
    assert "duality at [4, 4, 0]" in out


def test_validate_ok(emit, capsys):
    assert main(["validate", emit("A4")]) == 0
    assert main(["validate", emit("SU2-trunc-jmax2")]) == 0
    assert "complete products only" in capsys.readouterr().out


def test_usage_errors(emit, tmp_path, capsys):
    assert main(["validate", "--bogus", emit("Z2")]) == 2
    assert "usage" in capsys.readouterr().err
    assert main([]) == 2
    assert main(["validate", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["validate", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err
    assert main(["examples", "emit", "nope"]) == 2
    assert main(["su2", "derive", "--jmax", "1/3"]) == 2


def test_resource_limit_exit(emit):
    assert main(["subrings", emit("D4"), "--max-rank", "2"]) == 3


def test_subrings_and_char_table(emit, capsys):
    assert main(["subrings", emit("D4")]) == 0
    assert "6 representation subrings" in capsys.readouterr().out
    assert main(["char-table", emit("D4"), "--integer-solutions"]) == 0
    out = capsys.readouterr().out
    assert "5 solutions" in out and "(1, 1, 1, 1, 2)" in out


def test_su2_derive(tmp_path, capsys):
    ring_path = tmp_path / "su2.json"
    assert main(["su2", "derive", "--jmax", "5/2", "--emit-ring", str(ring_path)]) == 0
    out = capsys.readouterr().out
    assert "D_1/2 x D_1/2 = D_0 + D_1" in out
    assert json.loads(ring_path.read_text())["name"] == "SU2-trunc-jmax5_2"
    assert main(["validate", str(ring_path)]) == 0


def test_examples(tmp_path, capsys):
    assert main(["examples", "list"]) == 0
    assert capsys.readouterr().out.split() == catalog.catalog_names()
    out = tmp_path / "s3.json"
    assert main(["examples", "emit", "S3", "-o", str(out)]) == 0
    assert out.read_bytes() == serialize(catalog.get("S3"))


def test_analyze_json_stable(emit):
    path = emit("A4")
    cmd = [sys.executable, "-m", "fusionscope.cli", "analyze", "--json", path, "--seed", "11"]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1]
    report = json.loads(runs[0])
    assert report["seed"] == 11
    assert report["sections"]["chain_group"]["invariant_factors"] == []
    assert report["sections"]["invertible_characters"]["invariant_factors"] == [3]


def test_analyze_text_truncated(emit, capsys):
    assert main(["analyze", emit("SU2-trunc-jmax5")]) == 0
    out = capsys.readouterr().out
    assert "truncation artifact" in out
    assert "[oddfusion_pseudoreal_center] pass" in out


def test_every_catalog_analysis_completes(capsys):
    from fusionscope.report import analyze
    for doc in catalog.catalog():
        rep = analyze(doc)
        statuses = {name: sec["status"] for name, sec in rep.sections.items()}
        assert rep.valid, doc.name
        assert not {"error", "resource-limit"} & set(statuses.values()), (doc.name, statuses)

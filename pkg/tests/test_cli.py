"""CLI behaviour: exit codes, conversions, enumeration, verification."""

from __future__ import annotations

import json

import pytest

from plabic.cli import main
from plabic.documents import serialize
from plabic.positroid import DecoratedPermutation, uniform_necklace
from plabic.collection import WSCollection, necklace_collection
from plabic.cyclic import Ground


@pytest.fixture
def pentagon_file(tmp_path):
    C = WSCollection.build(
        Ground(4), [{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}], uniform_necklace(4, 2)
    )
    path = tmp_path / "pentagon.json"
    path.write_text(serialize(C))
    return str(path)


def test_check_valid(pentagon_file, capsys):
    assert main(["check", pentagon_file]) == 0
    assert "ok" in capsys.readouterr().out


def test_check_reports_bad_pair(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "version": "1", "kind": "collection", "n": 4, "k": 2, "sets": [[1, 3], [2, 4]],
    }))
    assert main(["check", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "{1, 3}" in err and "{2, 4}" in err


def test_enumerate_count(capsys):
    assert main(["enumerate", "--uniform", "-n", "5", "-k", "2",
                 "--mode", "bruteforce", "--count"]) == 0
    assert capsys.readouterr().out.strip() == "5"


def test_enumerate_closure_matches(capsys):
    assert main(["enumerate", "--uniform", "-n", "6", "-k", "2", "--count"]) == 0
    assert capsys.readouterr().out.strip() == "14"


def test_necklace_conversion(tmp_path, capsys):
    perm_file = tmp_path / "perm.json"
    perm_file.write_text(serialize(DecoratedPermutation.of((3, 4, 1, 2))))
    assert main(["necklace", str(perm_file)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "necklace"
    assert doc["entries"] == [[1, 2], [2, 3], [3, 4], [1, 4]]

    neck_file = tmp_path / "neck.json"
    neck_file.write_text(json.dumps(doc))
    assert main(["necklace", str(neck_file)]) == 0
    back = json.loads(capsys.readouterr().out)
    assert back["perm"] == [3, 4, 1, 2]


def test_bases(capsys):
    assert main(["bases", "--uniform", "-n", "4", "-k", "2"]) == 0
    bases = json.loads(capsys.readouterr().out)
    assert len(bases) == 6


def test_maximalize(tmp_path, capsys):
    nk = uniform_necklace(4, 2)
    start = tmp_path / "start.json"
    start.write_text(serialize(necklace_collection(nk)))
    assert main(["maximalize", str(start)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["sets"]) == 5


def test_mutations_and_mutate(pentagon_file, capsys):
    assert main(["mutations", pentagon_file]) == 0
    sites = json.loads(capsys.readouterr().out)
    assert sites == [{
        "S": [], "a": 1, "b": 2, "c": 3, "d": 4, "removes": [1, 3], "adds": [2, 4],
    }]
    assert main(["mutate", pentagon_file, "--site", "0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [2, 4] in doc["sets"] and [1, 3] not in doc["sets"]


def test_mutate_usage_error(pentagon_file, capsys):
    assert main(["mutate", pentagon_file]) == 2


def test_verify_purity_quick(capsys):
    assert main(["verify", "counts"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out


def test_verify_purity_single_pair(capsys):
    assert main(["verify", "purity", "-n", "4", "-k", "2"]) == 0
    out = capsys.readouterr().out
    assert "all of size 5" in out


def test_render(tmp_path, pentagon_file, capsys):
    out = tmp_path / "out.svg"
    assert main(["render", pentagon_file, "-o", str(out)]) == 0
    assert out.read_text().startswith("<svg ")


def test_usage_error_exit_code(capsys):
    assert main(["no-such-command"]) == 2

import io
import json

import pytest

from bgk import fixtures
from bgk.cli import main
from bgk.core import to_document


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, doc):
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def docs(tmp_path):
    return {name: write(tmp_path, name, to_document(E))
            for name, E in fixtures.all_fixtures().items()} | {
        "tree": write(tmp_path, "tree", to_document(fixtures.path_tree(2, 3))),
    }


def test_validate_ok(capsys, docs):
    code, out, _ = run(capsys, "validate", docs["weakly-symmetric"])
    assert code == 0 and json.loads(out)["valid"] is True


def test_validate_reports_path(capsys, tmp_path):
    doc = to_document(fixtures.weakly_symmetric())
    doc["tau"]["a"] = "b"
    code, out, _ = run(capsys, "validate", write(tmp_path, "bad", doc))
    body = json.loads(out)
    assert code == 1 and body["valid"] is False
    issues = body["violations"] + body["malformed"]
    assert any(i["path"].startswith("$.tau") for i in issues)


def test_classify(capsys, docs):
    code, out, _ = run(capsys, "classify", docs["weakly-symmetric"])
    body = json.loads(out)
    assert code == 0
    assert (body["type"], body["case"], body["r"]) == ("domestic", 1, 1)
    assert body["schema"] == "bgk/1"


def test_construct_then_tubes_through_stdin(capsys, docs, monkeypatch):
    code, out, _ = run(capsys, "construct", "--case", "3", "--r", "3", "--l", "1", docs["two-cycle"])
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "tubes", "-")
    assert code == 0
    assert json.loads(out)["orbits"] == [{"count": 4, "value": 3}]


def test_output_is_byte_stable(capsys, docs):
    first = run(capsys, "algebra", "--flavor", "full", docs["weakly-symmetric"])[1]
    second = run(capsys, "algebra", "--flavor", "full", docs["weakly-symmetric"])[1]
    assert first == second


def test_algebra_dot(capsys, docs):
    code, out, _ = run(capsys, "algebra", "--dot", docs["weakly-symmetric"])
    assert code == 0 and out.startswith("digraph quiver {")


def test_dot_on_unsupported_command(capsys, docs):
    code, _, err = run(capsys, "classify", "--dot", docs["weakly-symmetric"])
    assert code == 2 and "DOT" in err


def test_bad_arguments_exit_2(capsys, docs):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "construct", "--case", "7", docs["ex1"])[0] == 2
    assert run(capsys, "stats", "/no/such/file.json")[0] == 2
    assert run(capsys, "fixture", "nope")[0] == 2


def test_domain_errors_exit_1(capsys, docs, tmp_path):
    code, _, err = run(capsys, "ar-descriptor", docs["weakly-symmetric"])
    assert code == 1 and "representation-finite" in err
    bad = tmp_path / "x.json"
    bad.write_text("{not json")
    assert run(capsys, "stats", str(bad))[0] == 1


def test_schema_errors(capsys, tmp_path):
    doc = to_document(fixtures.ex1())
    doc["schema"] = "other/9"
    code, _, err = run(capsys, "stats", write(tmp_path, "s", doc))
    assert code == 1 and "$.schema" in err
    code, _, err = run(capsys, "stats", write(tmp_path, "g", {"degree": {}}))
    assert code == 1 and "$.g" in err


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


def test_iso_witness(capsys, docs):
    code, out, _ = run(capsys, "iso", docs["two-cycle"], docs["two-cycle"])
    assert code == 0 and json.loads(out)["isomorphic"] is True


@pytest.mark.parametrize("argv,fixture", [
    (["stats"], "ex1"),
    (["quotient"], "weakly-symmetric"),
    (["hat"], "ex1"),
    (["reduce"], "weakly-symmetric"),
    (["bands", "--max-period", "2"], "weakly-symmetric"),
    (["pi1", "presentation"], "weakly-symmetric"),
    (["pi1", "abelian"], "two-cycle"),
    (["pi1", "class"], "two-cycle"),
    (["monodromy"], "weakly-symmetric"),
    (["algebra", "--flavor", "string"], "two-cycle"),
    (["strings", "--max-len", "3"], "two-cycle"),
    (["strings"], "tree"),
    (["dtr"], "weakly-symmetric"),
    (["tubes"], "two-cycle"),
    (["ar-summary"], "weakly-symmetric"),
    (["ar-summary", "--dot"], "weakly-symmetric"),
    (["ar-descriptor"], "tree"),
    (["ball", "--radius", "1"], "two-cycle"),
    (["construct", "--case", "1", "--r", "2"], "ex1"),
])
def test_every_command_runs(capsys, docs, argv, fixture):
    code, out, err = run(capsys, *argv, docs[fixture])
    assert code == 0, err
    if "--dot" not in argv:
        assert json.loads(out)["schema"] == "bgk/1"


def test_fixture_command(capsys):
    code, out, _ = run(capsys, "fixture", "ex2")
    assert code == 0 and json.loads(out)["name"] == "ex2"

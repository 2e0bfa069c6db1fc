import json
import shutil

from click.testing import CliRunner
import pytest

import suites.stanley
from cli import main, run_command
from suites.report import VerificationReport


@pytest.fixture
def corpus(tmp_path, monkeypatch, corpus_dir):
    """A private copy of the corpus, with no .env in the working directory."""
    target = tmp_path / "corpus"
    shutil.copytree(corpus_dir, target)
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("PEDESTAL_LAB_CORPUS_DIR", str(target))
    return target


@pytest.fixture
def invoke(corpus):
    runner = CliRunner()

    def run(*args):
        return runner.invoke(main, list(args))

    return run


def output(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_syt_count(invoke):
    result = invoke("syt", "count", "--shape", "3,2")
    assert result.exit_code == 0
    assert result.stdout.strip() == "5"


def test_syt_list(invoke):
    rows = [t["rows"] for t in output(invoke("syt", "list", "--shape", "2,1"))]
    assert rows == [[[1, 2], [3]], [[1, 3], [2]]]


def test_gf_plinth(invoke):
    assert output(invoke("gf", "plinth", "--shape", "2,1")) == {"coeffs": [0, 1, 1]}
    text = invoke("--format", "text", "gf", "plinth", "--shape", "2,1")
    assert text.stdout.strip() == "q + q^2"


def test_gf_series(invoke):
    assert output(invoke("gf", "ssyt", "--shape", "2,1", "--series-degree", "2")) == {
        "coeffs": [0, 1, 2],
        "truncation_degree": 2,
    }
    stanley = output(invoke("gf", "stanley", "--shape", "2,1", "--series-degree", "2"))
    assert stanley["coeffs"] == [0, 1, 2]
    semistandard = output(invoke("gf", "semistandard", "--shape", "3,2", "--series-degree", "2"))
    assert semistandard["coeffs"] == [0, 0, 1]
    trivial = output(invoke("gf", "semistandard", "--shape", "1", "--filter", "trivial", "--series-degree", "3"))
    assert trivial["coeffs"] == [1, 1, 1, 1]
    x = output(invoke("gf", "x-partitions", "--poset", "diamond", "--series-degree", "1"))
    assert x["coeffs"] == [1, 1]
    text = invoke("--format", "text", "gf", "ssyt", "--shape", "1", "--series-degree", "2")
    assert text.stdout.strip() == "1 + q + q^2 + O(q^3)"


def test_gf_pedestal(invoke):
    assert output(invoke("gf", "pedestal", "--shape", "3,2", "--reference", "3")) == {"coeffs": [1, 1, 1, 1, 1]}


def test_plinth(invoke):
    rows = output(invoke("plinth", "--shape", "2,1"))
    assert [(r["maj"], r["volume"]) for r in rows] == [(2, 1), (1, 2)]
    assert rows[1]["plinth"] == [[0, 1], [1]]


def test_pedestal(invoke):
    doc = output(invoke("pedestal", "--poset", "diamond"))
    assert doc["polynomial"] == {"coeffs": [1, 0, 1]}
    assert [p["volume"] for p in doc["pedestals"]] == [0, 2]
    assert doc["pedestals"][1]["ascents"] == [2]
    result = invoke("pedestal", "--poset", "diamond", "--reference", "3")
    assert result.exit_code == 2


def test_matrix(invoke):
    doc = output(invoke("matrix", "--shape", "3,2"))
    assert doc["dim"] == 5
    assert sorted(doc["reference_permutation"]) == [0, 1, 2, 3, 4]
    assert "reference_permutation" not in output(invoke("matrix", "--shape", "2,1"))
    assert invoke("matrix", "--shape", "1,1,1,1,1/1").exit_code == 0


def test_eigen(invoke):
    doc = output(invoke("eigen", "--poset", "diamond"))
    assert [e["coeffs"] for e in doc["eigenvalues"]] == [[1, 0, 1], [1, 0, -1]]
    assert doc["certified"]
    text = invoke("--format", "text", "eigen", "--shape", "3,2").stdout
    assert "(1 - q)^2*(1 + q + q^2)" in text
    assert invoke("eigen", "--shape", "4,1", "--max-extensions", "2").exit_code == 2


def test_rsk(invoke):
    assert output(invoke("rsk", "insert", "--word", "2,3,1")) == {"P": [[1, 3], [2]], "Q": [[1, 2], [3]]}
    assert output(invoke("rsk", "inverse", "--shape", "2,1", "--p-index", "2", "--q-index", "1")) == [2, 3, 1]
    items = output(invoke("rsk", "schuetzenberger", "--shape", "2,1"))
    assert items[0] == {"Q": [[1, 2], [3]], "sch": [[1, 3], [2]], "maj": 2, "plinth_volume": 2}
    assert invoke("rsk", "insert", "--word", "1,1").exit_code == 2
    assert invoke("rsk", "schuetzenberger", "--shape", "2,1/1").exit_code == 2


def test_verify(invoke):
    result = invoke("verify", "stanley", "--max-cells", "3", "--series-degree", "6")
    report = output(result)
    assert report["suite"] == "stanley"
    assert report["passed"]
    assert report["failures"] == []


def test_verify_eigen_reference(invoke):
    report = output(invoke("verify", "eigen", "--shape", "3,2"))
    assert report["passed"]
    assert report["details"]["3,2"]["eigenvalues"][0]["coeffs"] == [1, 1, 1, 1, 1]


def test_verify_pedestal_independence_over_directory(invoke, corpus):
    report = output(invoke("verify", "pedestal-independence", "--poset", str(corpus)))
    assert report["passed"]
    assert report["cases_run"] == 8


def test_verify_failure_exits_one(invoke, monkeypatch):
    def failing(context):
        report = VerificationReport("stanley")
        report.case("1")
        report.fail("1", [1], [2])
        return report

    monkeypatch.setattr(suites.stanley, "run", failing)
    result = invoke("verify", "stanley")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["failures"] == [{"case": "1", "expected": [1], "actual": [2]}]


@pytest.mark.parametrize(
    'args, message',
    (
        (["verify", "nonsense"], "unknown suite"),
        (["syt", "count", "--shape", "2,3"], "weakly decreasing"),
        (["syt", "count"], "--shape is required"),
        (["gf", "pedestal", "--shape", "2", "--poset", "diamond"], "exactly one"),
        (["eigen", "--poset", "missing"], "not found"),
        (["verify", "stanley", "--max-cells", "-1"], "non-negative"),
    ),
)
def test_input_errors(invoke, args, message):
    result = invoke(*args)
    assert result.exit_code == 2
    assert message in result.stderr


def test_corpus_commands(invoke, tmp_path):
    source = tmp_path / "pair.yaml"
    source.write_text("elements: [a, b]\ncovers: [[a, b]]\n", encoding="utf-8")
    assert output(invoke("corpus", "add", "pair", str(source)))["saved"].endswith("pair.json")
    assert "pair" in output(invoke("corpus", "list"))
    assert output(invoke("corpus", "show", "pair")) == {"elements": ["a", "b"], "covers": [["a", "b"]]}
    assert output(invoke("corpus", "remove", "pair")) == {"removed": "pair"}
    assert invoke("corpus", "remove", "pair").exit_code == 2
    bad = tmp_path / "bad.yaml"
    bad.write_text("elements: [a]\ncovers: [[a, z]]\n", encoding="utf-8")
    result = invoke("corpus", "add", "bad", str(bad))
    assert result.exit_code == 2
    assert "$.covers[0]" in result.stderr


def test_run_command(corpus, capsys):
    assert run_command(["syt", "count", "--shape", "3,2"]) == 0
    assert capsys.readouterr().out.strip() == "5"
    assert run_command(["verify", "nonsense"]) == 2
    assert run_command(["syt", "count", "--bogus"]) == 2
    assert run_command(["--log-level", "debug", "syt", "count", "--shape", "2"]) == 0


def test_format_after_the_verb(invoke):
    text = invoke("eigen", "--shape", "3,2", "--format", "text")
    assert text.exit_code == 0, text.output
    assert "(1 - q)^2*(1 + q + q^2)" in text.stdout
    assert invoke("syt", "count", "--shape", "2,1", "--format", "text").stdout.strip() == "2"
    overridden = invoke("--format", "text", "gf", "plinth", "--shape", "2,1", "--format", "json")
    assert overridden.stdout.strip() == '{"coeffs":[0,1,1]}'
    assert invoke("rsk", "insert", "--word", "2,1", "--format", "text").stdout.startswith("P:")

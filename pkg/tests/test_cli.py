import io
import json
import sys

import pytest

from koszul_check.cli import main
from koszul_check.parsers import parse_input
from koszul_check.utils.logger import configure_logger


def one_vertex_document(relations, field="q"):
    return {
        "field": field,
        "quiver": {
            "vertices": ["1"],
            "arrows": [{"name": "x", "src": "1", "tgt": "1"}, {"name": "y", "src": "1", "tgt": "1"}],
        },
        "relations": relations,
    }


XY = one_vertex_document([[{"coeff": "1", "path": ["x", "y"]}]])
COMMUTATIVE = one_vertex_document([[{"coeff": "1", "path": ["x", "y"]}, {"coeff": "-1", "path": ["y", "x"]}]])

THREE_CYCLE = {
    "field": "q",
    "quiver": {
        "vertices": ["0", "1", "2"],
        "arrows": [
            {"name": "a", "src": "0", "tgt": "1"},
            {"name": "b", "src": "1", "tgt": "2"},
            {"name": "c", "src": "2", "tgt": "0"},
        ],
    },
    "relations": [],
}

STAR_D4 = {
    "field": "q",
    "quiver": {
        "vertices": ["c", "l1", "l2", "l3", "l4"],
        "arrows": [{"name": f"a{k}", "src": f"l{k}", "tgt": "c"} for k in range(1, 5)],
    },
    "relations": [],
}


@pytest.fixture
def run_cli(capsys):
    """Run the CLI and return its exit code with the parsed JSON report."""

    def run(*argv):
        with pytest.raises(SystemExit) as info:
            main(list(argv) + ["--format", "json"])
        out = capsys.readouterr().out
        return info.value.code, (json.loads(out) if out.strip() else None)

    return run


@pytest.fixture
def document(write_input):
    def write(data, name="input.json"):
        return write_input(json.dumps(data), name)

    return write


def preprojective_of(run_cli, document, quiver):
    code, report = run_cli("preprojective", "--input", document(quiver, "quiver.json"))
    assert code == 0
    return document(report["result"]["presentation"], "preprojective.json")


def test_oracle_finds_the_xy_zero_product(run_cli, document):
    code, report = run_cli("oracle", "--input", document(XY), "--max-degree", "5", "--max-syzygy", "3")
    assert code == 3
    assert report["status"] == "witness"
    witness = report["result"]["zeroDivisors"]["witness"]
    assert witness["degrees"] == [1, 1]
    assert witness["verified"]
    assert report["settings"]["field"] == "p2"


def test_xy_is_not_a_piecewise_domain(run_cli, document):
    code, report = run_cli("classify", "--input", document(XY), "--max-degree", "6", "--max-syzygy", "3")
    assert code == 0
    result = report["result"]
    assert result["piecewiseDomain"]["status"] == "no"
    assert result["prime"]["status"] == "no"
    assert result["prime"]["witness"] == {"annihilatingArrows": {"left": "x", "right": "y"}}
    condition = result["syzygyCondition"]
    assert condition["status"] == "fails"
    assert condition["witness"]["kernelVerdict"]["status"] == "fails"


def test_syzygy_condition_command_on_xy(run_cli, document):
    code, report = run_cli(
        "syzygy-condition", "--input", document(XY), "--max-degree", "5", "--max-syzygy", "3", "--field", "p2",
    )
    assert code == 0
    assert report["result"]["algebra"] == "dual"
    condition = report["result"]["syzygyCondition"]
    assert condition["witness"]["step"] == 1
    assert condition["detectorDisagreements"] == []


def test_polynomial_ring_is_a_domain(run_cli, document):
    code, report = run_cli("classify", "--input", document(COMMUTATIVE), "--max-degree", "6", "--max-syzygy", "3")
    assert code == 0
    assert report["status"] == "definitive"
    result = report["result"]
    assert result["piecewiseDomain"]["status"] == "yes"
    assert result["piecewiseDomain"]["unconditional"]
    assert result["domain"]["status"] == "yes"


def test_short_window_is_undetermined(run_cli, document):
    code, report = run_cli("classify", "--input", document(COMMUTATIVE), "--max-degree", "3", "--max-syzygy", "6")
    assert code == 2
    assert report["status"] == "undetermined"


def test_preprojective_a2_is_a_prime_piecewise_domain(run_cli, document):
    path = preprojective_of(run_cli, document, THREE_CYCLE)
    code, report = run_cli("cy2", "--input", path, "--max-degree", "6", "--max-syzygy", "3")
    assert code == 0
    result = report["result"]
    assert result["piecewiseDomain"]["status"] == "yes"
    assert result["prime"]["status"] == "yes"
    assert result["cy2Screen"]["passes"]


def test_dual_hilbert_series_of_preprojective_a2(run_cli, document):
    path = preprojective_of(run_cli, document, THREE_CYCLE)
    code, report = run_cli("hilbert", "--input", path, "--dual", "--max-degree", "4")
    assert code == 0
    series = report["result"]["hilbert"]["vertexSeries"]
    assert set(series.values()) == {"1 + 2t + t^2"}


def test_preprojective_d4_is_not_a_piecewise_domain(run_cli, document):
    path = preprojective_of(run_cli, document, STAR_D4)
    code, report = run_cli("cy2", "--input", path, "--max-degree", "4", "--max-syzygy", "2")
    assert code == 2
    assert report["result"]["semiprime"]["status"] == "no"
    verdict = report["result"]["piecewiseDomain"]
    assert verdict["status"] == "no"
    assert verdict["witness"]["zeroProduct"]["degrees"] == [1, 1]


def test_hilbert_of_the_dual_checks_the_numerical_identity(run_cli, document):
    code, report = run_cli("hilbert", "--input", document(COMMUTATIVE), "--dual", "--max-degree", "6")
    assert code == 0
    assert report["result"]["algebra"] == "dual"
    assert report["result"]["hilbert"]["totalSeries"] == "1 + 2t + t^2"
    assert report["result"]["numericalIdentity"]["holds"]


def test_ext_reconstructs_the_polynomial_ring(run_cli, document):
    code, report = run_cli("ext", "--input", document(COMMUTATIVE), "--max-degree", "4", "--max-syzygy", "3")
    assert code == 0
    assert report["result"]["match"]
    assert report["result"]["depth"] == 3


def test_dual_command(run_cli, document):
    code, report = run_cli("dual", "--input", document(COMMUTATIVE))
    assert code == 0
    arrows = report["result"]["presentation"]["quiver"]["arrows"]
    assert [a["name"] for a in arrows] == ["x*", "y*"]
    assert len(report["result"]["relations"]) == 3


def test_report_header_and_digest_are_stable(run_cli, document):
    path = document(COMMUTATIVE)
    _, first = run_cli("koszul", "--input", path, "--max-degree", "5", "--max-syzygy", "2")
    _, second = run_cli("koszul", "--input", path, "--max-degree", "5", "--max-syzygy", "2")
    assert first["inputHash"] == second["inputHash"] == parse_input(path).digest()
    assert first["schemaVersion"] == 1
    assert first["generator"].startswith("koszul-check ")
    assert first["result"] == second["result"]


def test_settings_precedence(run_cli, document, tmp_path):
    config = tmp_path / "koszul.toml"
    config.write_text("[koszul-check]\nmaxDegree = 3\nmaxSyzygy = 2\nbudget = 500\n", encoding="utf-8")
    path = document({**COMMUTATIVE, "options": {"maxDegree": 5}})
    _, report = run_cli("dual", "--input", path, "--config", str(config))
    assert report["settings"]["maxDegree"] == 5
    assert report["settings"]["maxSyzygy"] == 2
    assert report["settings"]["budget"] == 500
    _, report = run_cli("dual", "--input", path, "--config", str(config), "--max-degree", "4")
    assert report["settings"]["maxDegree"] == 4


def test_bad_input_exits_with_one(run_cli, document):
    bad = {**XY, "relations": [[{"coeff": "2/0", "path": ["x", "y"]}]]}
    code, report = run_cli("classify", "--input", document(bad))
    assert code == 1
    assert report is None


def test_missing_input_exits_with_one(run_cli, tmp_path):
    code, _ = run_cli("dual", "--input", str(tmp_path / "absent.json"))
    assert code == 1


def test_output_file(document, tmp_path, capsys):
    target = tmp_path / "report.json"
    with pytest.raises(SystemExit) as info:
        main(["dual", "--input", document(COMMUTATIVE), "--format", "json", "--output", str(target)])
    assert info.value.code == 0
    assert "Report saved to" in capsys.readouterr().err
    assert json.loads(target.read_text(encoding="utf-8"))["command"] == "dual"


def test_text_report(document, capsys):
    with pytest.raises(SystemExit) as info:
        main(["classify", "--input", document(COMMUTATIVE), "--max-degree", "6", "--max-syzygy", "3"])
    assert info.value.code == 0
    assert "Koszul Check Report" in capsys.readouterr().out


def test_logging_follows_a_replaced_stderr(document, monkeypatch):
    path = document(COMMUTATIVE)
    for _ in range(2):
        stream = io.StringIO()
        monkeypatch.setattr(sys, "stderr", stream)
        with pytest.raises(SystemExit) as info:
            main(["dual", "--input", path, "--format", "json", "--output", path + ".out"])
        assert info.value.code == 0
        assert "Running dual on" in stream.getvalue()
        stream.close()
    monkeypatch.undo()
    configure_logger()


def test_text_report_shows_annihilating_arrows(document, capsys):
    with pytest.raises(SystemExit) as info:
        main(["classify", "--input", document(XY), "--max-degree", "5", "--max-syzygy", "2"])
    assert info.value.code == 0
    assert "witness: x·A·y = 0" in capsys.readouterr().out

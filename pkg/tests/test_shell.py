"""Tests for the spec-file loader, the built-in library and the CLI."""

import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "data" / "fixtures"


def _reports(captured: str):
    return [json.loads(line) for line in captured.splitlines() if line.strip()]


# ============================================================================
# Loader
# ============================================================================

def test_load_infinitesimal_fixture():
    from entwine.diagrams import check_entwining
    from entwine.structures import EntwinedTriple
    from rigidity.verify import rigidity_verify
    from shell.loader import load_spec

    loaded = load_spec(str(FIXTURES / "infinitesimal_n3.json"))
    t = loaded.lookup("entwinings", "infinitesimal")
    assert isinstance(t, EntwinedTriple)
    assert check_entwining(t).passed
    assert not loaded.warnings
    b = loaded.only("bialgebras", "test")
    assert b.space.weights == (1, 2, 3)
    assert rigidity_verify(b).prim_dim == 1


def test_fixture_matches_builtin_K():
    """The hand-written bialgebra is exactly K(V) of the built-in triple."""
    from shell.library import builtin_spec
    from shell.loader import load_spec

    loaded = load_spec(str(FIXTURES / "infinitesimal_n3.json"))
    builtin = builtin_spec("infinitesimal", 3, 1)
    assert loaded.bialgebras["K"].action == builtin.bialgebras["K"].action
    assert loaded.bialgebras["K"].coaction == builtin.bialgebras["K"].coaction
    assert loaded.entwinings["infinitesimal"].lam.same_matrices(builtin.entwinings["infinitesimal"].lam)


def test_fixtures_serialize_back_to_themselves():
    from shell.loader import JSONSpecPersistence, resolve, serialize

    persistence = JSONSpecPersistence()
    for name in ("infinitesimal_n3.json", "identity_n2.json"):
        model = persistence.load(str(FIXTURES / name))
        assert serialize(resolve(model)) == model


def test_save_and_load(tmp_path):
    from shell.library import builtin_spec
    from shell.loader import JSONSpecPersistence, load_spec, serialize

    model = serialize(builtin_spec("identity", 2, 2))
    path = tmp_path / "identity.json"
    assert JSONSpecPersistence().save(model, str(path))
    loaded = load_spec(str(path))
    assert set(loaded.entwinings) == {"identity"}
    assert loaded.bialgebras["K"].dim == 2


def test_strict_load_refuses_corrupted_fixture():
    from shell.loader import SpecLoadError, UnknownReferenceError, load_spec

    with pytest.raises(SpecLoadError) as excinfo:
        load_spec(str(FIXTURES / "corrupted_lambda_n3.json"), strict=True)
    assert not isinstance(excinfo.value, UnknownReferenceError)
    assert "entwinings.corrupted-infinitesimal" in str(excinfo.value)


def test_lenient_load_keeps_failures_as_warnings():
    from entwine.diagrams import check_entwining
    from shell.loader import load_spec

    loaded = load_spec(str(FIXTURES / "corrupted_lambda_n3.json"), strict=False)
    assert len(loaded.warnings) == 1
    report = check_entwining(loaded.only("entwinings", "test"))
    assert not report.passed
    assert report.first_witness() is not None


def test_unknown_reference():
    from data.schemas import SpecFileModel
    from shell.loader import UnknownReferenceError, resolve

    model = SpecFileModel.model_validate({
        "max_arity": 2,
        "entwinings": {"e": {"operad": "missing", "cooperad": "missing", "lambda": []}},
    })
    with pytest.raises(UnknownReferenceError) as excinfo:
        resolve(model)
    assert excinfo.value.name == "missing"


def test_malformed_files(tmp_path):
    from shell.loader import SpecLoadError, load_spec

    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    with pytest.raises(SpecLoadError):
        load_spec(str(bad_json))

    with pytest.raises(SpecLoadError):
        load_spec(str(tmp_path / "absent.json"))

    float_entry = json.loads((FIXTURES / "identity_n2.json").read_text())
    float_entry["operads"]["I"]["mult"][0] = [["0.5"]]
    path = tmp_path / "float.json"
    path.write_text(json.dumps(float_entry))
    with pytest.raises(SpecLoadError) as excinfo:
        load_spec(str(path))
    assert "rational" in str(excinfo.value)


def test_wrong_block_shape():
    from data.schemas import SpecFileModel
    from shell.loader import SpecLoadError, resolve

    model = SpecFileModel.model_validate({
        "max_arity": 2,
        "sequences": {"As": {"max_arity": 2, "dims": [1, 1]}},
        "operads": {"As": {"carrier": "As", "mult": [[["1"]], [["1"]]]}},
    })
    with pytest.raises(SpecLoadError):
        resolve(model)


def test_builtin_spec_names():
    from shell.library import BUILTIN_EXAMPLES, builtin_spec

    assert set(BUILTIN_EXAMPLES) == {"infinitesimal", "identity", "corrupted-lambda", "com"}
    assert "K" not in builtin_spec("corrupted-lambda", 3).bialgebras
    with pytest.raises(KeyError):
        builtin_spec("nope", 3)


# ============================================================================
# CLI
# ============================================================================

def test_cli_demo_infinitesimal(capsys):
    from shell.cli import EXIT_OK, main

    assert main(["demo-infinitesimal", "--dim", "1", "--trunc", "3"]) == EXIT_OK
    reports = _reports(capsys.readouterr().out)
    assert len(reports) == 8
    primitives = [r for r in reports if r["subject"].startswith("primitives")]
    assert primitives[0]["prim_dim"] == 1
    assert reports[-1]["verdict"] == "PASS"


def test_cli_corrupted_entwining_fails_with_witness(capsys):
    from shell.cli import EXIT_FAIL, main

    assert main(["check-entwining", "--example", "corrupted-lambda"]) == EXIT_FAIL
    (report,) = _reports(capsys.readouterr().out)
    assert report["passed"] is False
    assert any(entry["witness_label"] for entry in report["entries"] if entry["status"] == "FAIL")


def test_cli_check_commands_load_leniently(capsys):
    from shell.cli import EXIT_FAIL, main

    path = str(FIXTURES / "corrupted_lambda_n3.json")
    assert main(["check-entwining", "--file", path]) == EXIT_FAIL
    assert main(["check-operad", "--file", path]) == 0


def test_cli_pipeline_commands_load_strictly(capsys):
    from shell.cli import EXIT_MALFORMED, EXIT_UNKNOWN_REF, main

    path = str(FIXTURES / "corrupted_lambda_n3.json")
    assert main(["phi", "--file", path]) == EXIT_MALFORMED
    # lenient loading succeeds, but the file carries no bialgebra
    assert main(["rigidity", "--file", path, "--lenient"]) == EXIT_UNKNOWN_REF


def test_cli_primitives_of_identity(capsys):
    from shell.cli import main

    assert main(["primitives", "--example", "identity", "--dim", "2"]) == 0
    (report,) = _reports(capsys.readouterr().out)
    assert report["prim_dim"] == 2


def test_cli_antipode_and_rigidity(capsys):
    from shell.cli import main

    assert main(["solve-antipode", "--trunc", "4"]) == 0
    assert main(["rigidity", "--file", str(FIXTURES / "infinitesimal_n3.json")]) == 0
    antipode, rigidity = _reports(capsys.readouterr().out)
    assert antipode["matrices"]["S_4"] == [["-1"]]
    assert rigidity["verdict"] == "PASS"


def test_cli_show_and_dump(tmp_path, capsys):
    from shell.cli import main
    from shell.loader import load_spec

    assert main(["show", "--example", "com", "--trunc", "4"]) == 0
    (summary,) = _reports(capsys.readouterr().out)
    assert summary["dims"] == [1, 2, 5, 15]

    out = tmp_path / "dump.json"
    assert main(["dump", "--trunc", "3", "--out", str(out)]) == 0
    assert "infinitesimal" in load_spec(str(out)).entwinings


def test_cli_usage_and_reference_errors(capsys):
    from shell.cli import EXIT_UNKNOWN_REF, main

    with pytest.raises(SystemExit) as excinfo:
        main(["check-operad", "--trunc", "7"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit):
        main(["no-such-command"])
    assert main(["check-operad", "--example", "nope"]) == EXIT_UNKNOWN_REF
    assert main(["check-entwining", "--name", "nope"]) == EXIT_UNKNOWN_REF


def test_cli_finds_bare_fixture_names(capsys):
    from shell.cli import main, spec_path

    assert spec_path("identity_n2.json") == str(FIXTURES / "identity_n2.json")
    assert spec_path("nowhere.json") == "nowhere.json"
    assert main(["rigidity", "--file", "infinitesimal_n3.json"]) == 0
    (report,) = _reports(capsys.readouterr().out)
    assert report["verdict"] == "PASS"


def test_cli_reports_are_deterministic(capsys):
    from shell.cli import main

    runs = [
        ["demo-infinitesimal", "--dim", "2", "--trunc", "3"],
        ["rigidity", "--file", str(FIXTURES / "infinitesimal_n3.json")],
    ]
    for argv in runs:
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        second = capsys.readouterr().out
        assert first
        assert first == second

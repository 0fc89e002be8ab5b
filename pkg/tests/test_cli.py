import json
import math

import pytest

from pstnet.cli import main, parse_angle
from pstnet.documents import PlanDocument, dumps, read_document
from pstnet.errors import ParameterError


def test_parse_angle():
    assert parse_angle("0.5") == 0.5
    assert parse_angle("pi") == math.pi
    assert parse_angle("pi/3") == math.pi / 3
    assert parse_angle("-2*pi/7") == -2 * math.pi / 7
    assert parse_angle("2pi/3") == 2 * math.pi / 3
    for bad in ("", "junk", "import os", "p/3", "1i"):
        with pytest.raises(ParameterError):
            parse_angle(bad)


def test_group_info(capsys):
    assert main(["group", "info", "--family", "u6n", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert "order: 12" in out
    assert "center" in out


def test_scheme_build(tmp_path, capsys):
    out = tmp_path / "scheme.json"
    assert main(["scheme", "build", "--family", "v8n", "--n", "3",
                 "--out", str(out)]) == 0
    doc = read_document(out)
    assert doc["order"] == 24
    assert doc["num_classes"] == 9
    assert doc["bose_mesner"]["closed"] is True


def test_couplings_verify_roundtrip(tmp_path, capsys):
    plan = tmp_path / "plan.json"
    argv = ["couplings", "--family", "u6n", "--n", "2", "--target", "a^2",
            "--theta", "pi/7", "--t0", "1", "--out", str(plan)]
    assert main(argv) == 0
    text = plan.read_text()
    doc = json.loads(text)
    assert doc["provenance"]["target_label"] == "a^2"
    assert {"re", "im"} == set(doc["couplings"][0])
    # parse -> serialize is byte-identical
    assert dumps(read_document(plan)) == text
    # identical invocation produces a byte-identical artifact
    plan2 = tmp_path / "plan2.json"
    assert main(argv[:-1] + [str(plan2)]) == 0
    assert plan2.read_text() == text
    assert main(["verify", "--plan", str(plan), "--oracle", "--qudit", "2"]) == 0
    out = capsys.readouterr().out
    assert "all checks passed" in out


def test_simulate_trace(tmp_path):
    plan = tmp_path / "plan.json"
    main(["couplings", "--family", "cyclic", "--n", "4", "--strategy",
          "paper-cyclic", "--out", str(plan)])
    trace = tmp_path / "trace.csv"
    assert main(["simulate", "--plan", str(plan), "--steps", "50",
                 "--out", str(trace)]) == 0
    lines = trace.read_text().splitlines()
    assert lines[0] == "t,abs_f,arg_f"
    t0_rows = [l for l in lines[1:] if abs(float(l.split(",")[0]) - 1.0) < 1e-12]
    assert len(t0_rows) == 1
    assert abs(float(t0_rows[0].split(",")[1]) - 1.0) < 1e-9


def test_verify_exit_one_on_bad_plan(tmp_path, capsys):
    plan = tmp_path / "plan.json"
    main(["couplings", "--family", "dihedral_even", "--n", "4", "--out", str(plan)])
    doc = read_document(plan)
    doc["tilde"][1] += 0.5
    plan.write_text(json.dumps(doc))
    assert main(["verify", "--plan", str(plan)]) == 1
    err = capsys.readouterr().err
    detail = json.loads(err.strip().splitlines()[-1])
    assert detail["error"] == "VerificationFailure"


def test_exit_two_on_bad_parameters(tmp_path, capsys):
    assert main(["couplings", "--family", "cyclic", "--n", "5",
                 "--out", str(tmp_path / "x.json")]) == 2
    assert main(["couplings", "--family", "u6n", "--n", "2", "--target", "b",
                 "--out", str(tmp_path / "x.json")]) == 2
    assert main(["group", "info", "--family", "nope", "--n", "2"]) == 2
    assert main(["verify", "--plan", str(tmp_path / "missing.json")]) == 2
    err = capsys.readouterr().err
    assert all(json.loads(l)["exit_code"] == 2 for l in err.strip().splitlines())


def test_reconcile(capsys):
    assert main(["reconcile", "--family", "u6n", "--n", "2", "--seed", "7"]) == 0
    assert "eigenspaces matched" in capsys.readouterr().out


def test_plan_document_rejects_stale_class_order(tmp_path):
    plan = tmp_path / "plan.json"
    main(["couplings", "--family", "u6n", "--n", "2", "--out", str(plan)])
    doc = read_document(plan)
    doc["provenance"]["class_order"][2] = "bogus"
    with pytest.raises(ParameterError):
        PlanDocument.from_dict(doc).rebuild_system()

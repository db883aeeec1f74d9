import json

import pytest

from ratcuboid.cli import analyze_report, curves_report, golden_report, main
from ratcuboid.cuboid import cuboid_from_squares
from ratcuboid.report import Report


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json_roundtrip(capsys):
    code, out, _ = run(capsys, "analyze", "104", "672", "153", "--json")
    assert code == 0
    d = json.loads(out)
    assert set(d) == {"command", "inputs", "checks", "errata", "exit_code"}
    assert all({"name", "paper_ref", "expected", "actual", "pass"} <= set(c) for c in d["checks"])
    assert Report.from_json(out).to_dict() == d
    cls = [c for c in d["checks"] if c["name"] == "class"][0]
    assert cls["actual"] == "BodyCuboid"


def test_analyze_squares_negative(capsys):
    code, out, _ = run(capsys, "analyze", "--squares", "--json", "--", "-183616", "462400", "207025")
    assert code == 0
    d = json.loads(out)
    g = [c for c in d["checks"] if c["name"] == "g^2"][0]
    assert g["actual"] == "485809 = 697^2"


def test_analyze_erratum_item3():
    r = analyze_report(cuboid_from_squares(-344000, 451584, 378225))
    assert r.exit_code == 0
    assert any("-458616750400" in e and "-458615750400" in e for e in r.errata)


def test_analyze_precision_field():
    r = analyze_report(cuboid_from_squares(44 ** 2, 117 ** 2, 240 ** 2))
    floats = [c for c in r.checks if c.precision is not None]
    assert floats and all(c.passed for c in floats)


def test_analyze_bad_edge(capsys):
    code, _, _ = run(capsys, "analyze", "0", "1", "2")
    assert code == 1


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "1", "2"])
    assert exc.value.code == 1


def test_curves_brick_erratum(capsys):
    code, out, _ = run(capsys, "curves", "240", "44", "117", "--json")
    d = json.loads(out)
    assert code == 0
    assert any("108000" in e and "1080000" in e for e in d["errata"])
    names = {c["name"]: c for c in d["checks"]}
    assert names["published-model-N"]["actual"] == "-14157"


def test_curves_unit_cube(capsys):
    code, _, _ = run(capsys, "curves", "1", "1", "1")
    assert code == 1


def test_curves_body_points():
    r = curves_report(104, 672, 153)
    pub = [c for c in r.checks if c.name.startswith("published-point")]
    assert len(pub) == 4 and all(c.passed for c in pub)


def test_generate_euler(capsys):
    code, out, _ = run(capsys, "generate", "euler", "2")
    assert code == 0 and "117,44,240" in out


def test_generate_multiply(capsys):
    code, out, _ = run(capsys, "generate", "multiply", "9,40,41", "8,15,17", "--json")
    d = json.loads(out)
    assert code == 0 and d["exit_code"] == 0
    derived = [c for c in d["checks"] if c["name"].startswith("derived")]
    assert len(derived) == 4 and all(c["pass"] for c in derived)


def test_generate_bad(capsys):
    assert run(capsys, "generate", "euler", "1")[0] == 1
    assert run(capsys, "generate", "multiply", "3,4,6", "8,15,17")[0] == 1
    assert run(capsys, "generate", "nope")[0] == 1


def test_search_csv_shards(capsys, tmp_path):
    code, out1, _ = run(capsys, "search", "--limit", "300")
    assert code == 0
    code, out8, _ = run(capsys, "search", "--limit", "300", "--shards", "8")
    assert out1 == out8 and "44,117,240" in out1
    path = tmp_path / "hits.csv"
    run(capsys, "search", "--limit", "300", "--csv", str(path), "--near")
    assert path.read_text() == out1


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "cuboid", "--samples", "50", "--json")
    d = json.loads(out)
    assert code == 0 and len(d["checks"]) == 2


def test_verify_unknown(capsys):
    assert run(capsys, "verify", "nope")[0] == 1


def test_golden():
    r = golden_report()
    assert r.exit_code == 0
    assert any("g697-3" in e for e in r.errata)
    assert any("108000" in e for e in r.errata)


def test_text_output(capsys):
    code, out, _ = run(capsys, "analyze", "44", "117", "240")
    assert out.splitlines()[-1] == "exit_code = 0"
    assert any(line.startswith("PASS heron-difference") for line in out.splitlines())

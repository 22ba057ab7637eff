"""End-to-end tests of the command-line interface."""

import json

import pytest

from quadtorus.cli import main, parse_point
from quadtorus.qfield import QuadElem


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_point():
    assert parse_point("(0,1/3)") == (QuadElem.from_int(0), QuadElem.rational(1, 3))
    assert parse_point(" 1/2 , 0 ") == (QuadElem.rational(1, 2), QuadElem.from_int(0))
    x, y = parse_point("((1+1*sqrt(5))/2, (0+1*sqrt(2)))")
    assert x == QuadElem(1, 1, 2, 5)
    assert y == QuadElem.sqrt(2)
    with pytest.raises(ValueError):
        parse_point("1/2")
    with pytest.raises(ValueError):
        parse_point("1,2,3")


def test_decide_text(capsys):
    code, out = run(capsys, "decide", "--case", "gamma", "--point", "(0,1/3)")
    assert code == 0
    assert "aperiodic" in out
    assert "S-cycle" in out


def test_decide_periodic_json(capsys):
    code, out = run(
        capsys, "decide", "--case", "sqrt2", "--point", "(0,1/2)", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "periodic"
    assert data["period"] == 4
    assert data["cycle"] == []


def test_decide_dashed_case_tag(capsys):
    code, out = run(capsys, "decide", "--case", "neg-inv-gamma", "--point", "(0,0)")
    assert code == 0
    assert "periodic" in out


def test_certify_text_and_json(capsys):
    code, out = run(capsys, "certify", "--case", "sqrt2", "--q", "2")
    assert code == 0
    assert "all-periodic" in out
    code, out = run(capsys, "certify", "--case", "sqrt2", "--q", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["conclusion"] == "all-periodic"


def test_scan_csv(capsys):
    code, out = run(capsys, "scan", "--case", "gamma", "--q", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,y,verdict,period"
    assert len(lines) == 10
    assert any("aperiodic" in line for line in lines[1:])


def test_scan_svg(capsys, tmp_path):
    out_file = tmp_path / "scan.svg"
    code, _ = run(
        capsys,
        "scan", "--case", "gamma", "--q", "3", "--format", "svg", "--out", str(out_file),
    )
    assert code == 0
    text = out_file.read_text()
    assert text.startswith("<svg")
    assert "</svg>" in text


def test_period_table(capsys):
    code, out = run(capsys, "period-table", "--case", "sqrt2", "--n", "1")
    assert code == 0
    assert "ok" in out


def test_thue_morse(capsys):
    code, out = run(capsys, "thue-morse", "--n", "500")
    assert code == 0
    assert "pass" in out.lower()


def test_verify_one_case(capsys):
    code, out = run(capsys, "verify", "--case", "gamma", "--samples", "1")
    assert code == 0
    assert "PASS" in out


def test_usage_errors(capsys):
    assert run(capsys, "decide", "--case", "nope", "--point", "(0,0)")[0] == 2
    assert run(capsys, "decide", "--case", "gamma", "--point", "bogus")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["decide", "--case", "gamma"])  # missing --point
    assert exc.value.code == 2

import json

import pytest
from click.testing import CliRunner

from cupkl.cli import main
from cupkl.tangles import generator


@pytest.fixture
def runner():
    return CliRunner()


def run_ok(runner, args, **kw):
    res = runner.invoke(main, args, **kw)
    assert res.exit_code == 0, res.output
    return res.output


def test_wp_listing(runner):
    out = run_ok(runner, ["wp", "-n", "3"])
    assert out.split() == ["+++", "+--", "-+-", "--+"]
    data = json.loads(run_ok(runner, ["wp", "-n", "3", "--format", "json"]))
    assert data["n"] == 3
    assert data["elements"][0] == {"w": "+++", "length": 0, "word": []}


def test_word_both_directions(runner):
    assert run_ok(runner, ["word", "-n", "4", "-w", "-++-"]).strip() == "0,2,3"
    out = run_ok(runner, ["word", "-n", "4", "-r", "0,2,3", "--format", "json"])
    assert json.loads(out)["w"] == "-++-"


def test_klpoly_example(runner):
    out = run_ok(runner, ["klpoly", "-n", "4", "-v", "--++", "-w", "-+-+"])
    assert out.strip() == "q"
    oracle = run_ok(
        runner, ["klpoly", "-n", "4", "-v", "--++", "-w", "-+-+", "--oracle"]
    )
    assert oracle == out
    zero = run_ok(runner, ["klpoly", "-n", "4", "-v", "-+-+", "-w", "--++"])
    assert zero.strip() == "0"


def test_klbasis_output(runner):
    out = run_ok(runner, ["klbasis", "-n", "4", "-w", "--++"])
    assert out.splitlines() == ["++++: q", "--++: 1"]


def test_cup_ascii_and_json(runner):
    out = run_ok(runner, ["cup", "-n", "4", "-w", "--++"])
    assert out == "1 2 3 4\n(*) | |\n"
    data = json.loads(run_ok(runner, ["cup", "-n", "4", "-w", "--++", "--format", "json"]))
    assert data["cups"] == [{"from": 1, "to": 2, "dotted": True}]


def test_homdim_single_and_matrix(runner):
    assert run_ok(runner, ["homdim", "-n", "4", "-w", "----", "-x", "----"]).strip() == "4"
    data = json.loads(run_ok(runner, ["homdim", "-n", "4", "--format", "json"]))
    assert sum(sum(row) for row in data["dims"]) == 67
    assert data["order"][0] == "++++"
    oracle = run_ok(runner, ["homdim", "-n", "4", "--oracle", "-w", "----", "-x", "----"])
    assert oracle.strip() == "4"


def test_poincare_table(runner):
    out = run_ok(runner, ["poincare", "-n", "4"])
    lines = dict(line.split(": ") for line in out.strip().splitlines())
    assert lines["++++"] == "1 + q + q^2"
    assert lines["-+-+"] == "1 + 4q + 3q^2 + q^3"
    assert lines["total"] == "67"
    assert run_ok(runner, ["poincare", "-n", "4", "--oracle"]) == out


def test_tl_commands(runner):
    assert run_ok(runner, ["tl", "dim", "-n", "4"]).strip() == "26"
    out = run_ok(runner, ["tl", "basis", "-n", "3"])
    assert out.splitlines()[0] == "10"
    act = run_ok(runner, ["tl", "act", "-n", "4", "-i", "0", "-w", "++++"])
    assert "coeff: 1" in act
    assert run_ok(runner, ["tl", "act", "-n", "4", "-i", "1", "-w", "++++"]).strip() == "0"
    cell = run_ok(runner, ["tl", "cell", "-n", "3"])
    assert cell.splitlines() == ["lambda=3: 1", "lambda=1: 3", "total: 10"]


def test_render_tangle_generator_and_stdin(runner):
    out = run_ok(runner, ["render", "tangle", "-n", "4", "-g", "1"])
    assert "(" in out and ")" in out
    t = generator(4, 2)
    piped = run_ok(
        runner, ["render", "tangle", "-n", "4"], input=json.dumps(t.to_json())
    )
    assert piped == run_ok(runner, ["render", "tangle", "-n", "4", "-g", "2"])


def test_render_circle(runner):
    out = run_ok(runner, ["render", "circle", "-n", "4", "-w", "----", "-x", "----"])
    assert out.count("black") == 4
    data = json.loads(
        run_ok(
            runner,
            ["render", "circle", "-n", "4", "-w", "----", "-x", "----", "--format", "json"],
        )
    )
    assert len(data["circles"]) == 8


def test_verify_reports(runner):
    out = run_ok(runner, ["verify", "-n", "3", "cellular"])
    assert "dims 1,3" in out and "total 10" in out
    assert "cellular: pass" in out
    out = run_ok(runner, ["verify", "-n", "3", "all"])
    for suite in ("kl", "homdim", "commute", "cellular", "faithful"):
        assert f"{suite}: pass" in out


def test_usage_errors_exit_2(runner):
    cases = [
        ["word", "-n", "4"],
        ["word", "-n", "4", "-w", "-+-+", "-r", "0"],
        ["word", "-n", "4", "-w", "+-+"],
        ["word", "-n", "4", "-w", "++-x"],
        ["word", "-n", "4", "-r", "1"],
        ["klpoly", "-n", "3", "-v", "+-+", "-w", "+--"],
        ["tl", "basis", "-n", "2"],
        ["tl", "act", "-n", "4", "-i", "7", "-w", "++++"],
        ["verify", "-n", "9", "kl"],
        ["verify", "-n", "6", "all"],
        ["homdim", "-n", "4", "-w", "-+-+"],
        ["render", "tangle", "-n", "4", "-g", "9"],
    ]
    for args in cases:
        res = runner.invoke(main, args)
        assert res.exit_code == 2, (args, res.output)


def test_bad_stdin_tangle_exits_2(runner):
    res = runner.invoke(main, ["render", "tangle", "-n", "4"], input="not json")
    assert res.exit_code == 2

import json

import pytest
from click.testing import CliRunner

from bel import cli
from bel.graphs import Graph, net_graph, to_text
from bel.suite import CriterionResult


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def graph_file(tmp_path):
    def write(G, name="g.graph"):
        p = tmp_path / name
        p.write_text(to_text(G))
        return str(p)

    return write


def test_classify_text(runner, graph_file):
    res = runner.invoke(cli.main, ["classify", graph_file(Graph.path(3))])
    assert res.exit_code == 0
    assert "caterpillar: True" in res.output
    assert "closed: True" in res.output


def test_classify_json(runner, graph_file):
    res = runner.invoke(cli.main, ["classify", "--json", graph_file(net_graph())])
    assert res.exit_code == 0
    rep = json.loads(res.output)
    assert rep["command"] == "classify"
    assert rep["graph"]["n"] == 6
    assert rep["results"]["net_free"] is False
    assert rep["results"]["generalized_caterpillar"] is True
    assert rep["results"]["weakly_closed"] is False
    assert "seconds" in rep and "kernel" in rep


def test_gb_with_check(runner, graph_file):
    res = runner.invoke(
        cli.main, ["gb", "--check-buchberger", "--json", graph_file(Graph.star(3))]
    )
    assert res.exit_code == 0
    rep = json.loads(res.output)
    assert rep["results"]["size"] == 6
    assert rep["results"]["buchberger_agrees"] is True
    assert rep["field"] == "QQ"


def test_gb_prime_field(runner, graph_file):
    res = runner.invoke(
        cli.main, ["gb", "--field", "fp:32003", "--json", graph_file(Graph.path(3))]
    )
    assert res.exit_code == 0
    assert json.loads(res.output)["field"] == "Fp(32003)"


def test_primes_json(runner, graph_file):
    res = runner.invoke(cli.main, ["primes", "--json", graph_file(Graph.path(3))])
    assert res.exit_code == 0
    rep = json.loads(res.output)
    assert rep["results"]["count"] == 2
    assert [c["U"] for c in rep["results"]["components"]] == [[], [2]]


def test_powers_equal(runner, graph_file):
    res = runner.invoke(cli.main, ["powers", "--t", "2", graph_file(Graph.path(3))])
    assert res.exit_code == 0
    assert "True" in res.output


def test_powers_unequal_exit_code(runner, graph_file):
    res = runner.invoke(cli.main, ["powers", "--t", "2", "--json", graph_file(net_graph())])
    assert res.exit_code == 1
    rep = json.loads(res.output)
    assert rep["results"]["equal"] is False
    assert rep["results"]["witness"]


def test_complex_cycles(runner, graph_file):
    res = runner.invoke(
        cli.main, ["complex", "--special-odd-cycles", "--json", graph_file(net_graph())]
    )
    assert res.exit_code == 0
    rep = json.loads(res.output)
    assert rep["results"]["special_odd_cycle"] is not None


def test_parse_error_exit_2(runner, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("definitely not a graph\n")
    res = runner.invoke(cli.main, ["powers", str(bad)])
    assert res.exit_code == 2
    assert "error" in res.output


def test_bad_field_exit_2(runner, graph_file):
    res = runner.invoke(cli.main, ["gb", "--field", "gf:9", graph_file(Graph.path(3))])
    assert res.exit_code == 2


def test_bad_t_exit_2(runner, graph_file):
    res = runner.invoke(cli.main, ["powers", "--t", "0", graph_file(Graph.path(3))])
    assert res.exit_code == 2


def test_size_cap_exit_3(runner, graph_file):
    res = runner.invoke(cli.main, ["powers", graph_file(Graph.path(9))])
    assert res.exit_code == 3
    res = runner.invoke(cli.main, ["classify", graph_file(Graph.path(9))])
    assert res.exit_code == 3


def test_suite_command_exit_codes(runner, monkeypatch):
    def fake_suite(quick=False):
        return [CriterionResult(1, "stub", True, 0.1, "ok")]

    monkeypatch.setattr(cli, "run_suite", fake_suite)
    res = runner.invoke(cli.main, ["suite", "--json"])
    assert res.exit_code == 0
    rep = json.loads(res.output)
    assert rep["results"][0]["status"] == "PASS"

    def failing_suite(quick=False):
        return [CriterionResult(1, "stub", False, 0.1, "broken")]

    monkeypatch.setattr(cli, "run_suite", failing_suite)
    res = runner.invoke(cli.main, ["suite"])
    assert res.exit_code == 1
    assert "[FAIL]" in res.output

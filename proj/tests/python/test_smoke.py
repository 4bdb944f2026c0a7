import json
import os
import subprocess
from fractions import Fraction

import pytest

import genmult


def test_monomial_values():
    assert genmult.j([[3, 0], [1, 1], [0, 3]]) == 6
    assert genmult.j([[3, 0], [0, 3]]) == 9
    assert genmult.analytic_spread([[1, 1, 0], [0, 1, 1], [1, 0, 1]]) == 3


def test_epsilon_is_exact():
    triangle = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert genmult.epsilon(triangle) == Fraction(1, 2)
    assert genmult.epsilon(triangle, region="box") == Fraction(1, 2)


def test_edge_ideals():
    c5 = [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "a"]]
    assert genmult.j_edge(c5) == 2
    assert genmult.epsilon_edge(c5) == Fraction(1, 3)
    k4 = [[a, b] for i, a in enumerate("wxyz") for b in "wxyz"[i + 1:]]
    assert genmult.j_edge(k4) == 8


def test_report():
    r = genmult.report([["x", "y"], ["y", "z"], ["x", "z"]], oracle=True)
    assert r["j"] == "2"
    assert r["epsilon"] == "1/2"
    assert r["analytic_spread"] == 3
    assert all(c["pass"] for c in r["cross_checks"])


def test_fixtures_all_pass():
    rows = genmult.fixtures()
    assert len(rows) >= 50
    assert all(row["pass"] for row in rows)


def test_bad_input():
    with pytest.raises(ValueError):
        genmult.j([])
    with pytest.raises(ValueError):
        genmult.j_edge([["a", "b"], ["a", "b"]])
    with pytest.raises(ValueError):
        genmult.report([["a", "b"], ["b", "a"]])


@pytest.mark.skipif("GENMULT_CLI" not in os.environ, reason="executable not supplied")
def test_cli_round_trip():
    doc = json.dumps({"edges": [["x", "y"], ["y", "z"], ["x", "z"]]})
    out = subprocess.run(
        [os.environ["GENMULT_CLI"], "epsilon", "--stdin", "--format", "json"],
        input=doc, capture_output=True, text=True, check=True,
    ).stdout
    assert json.loads(out)["epsilon"] == "1/2"

"""Exact j- and epsilon-multiplicities of monomial ideals and edge ideals.

Thin wrapper over the compiled core: rationals come back as Fractions.
"""

import json
from fractions import Fraction

from . import _core
from ._core import CrossCheckError

__all__ = [
    "CrossCheckError",
    "analytic_spread",
    "epsilon",
    "epsilon_edge",
    "fixtures",
    "j",
    "j_edge",
    "report",
]


def _ideal(generators):
    generators = [list(g) for g in generators]
    if not generators:
        raise ValueError("an ideal needs at least one generator")
    return len(generators[0]), generators


def j(generators):
    return Fraction(_core.j_monomial(*_ideal(generators)))


def epsilon(generators, region="simplex"):
    return Fraction(_core.epsilon_monomial(*_ideal(generators), region))


def analytic_spread(generators):
    return _core.analytic_spread(*_ideal(generators))


def j_edge(edges, nodes=()):
    return Fraction(_core.j_edge([list(e) for e in edges], list(nodes)))


def epsilon_edge(edges, nodes=()):
    return Fraction(_core.epsilon_edge([list(e) for e in edges], list(nodes)))


def report(edges, nodes=(), oracle=False):
    """Full report as a dict, as emitted by `genmult report --format json`."""
    doc = json.dumps({"nodes": list(nodes), "edges": [list(e) for e in edges]})
    code, out, err = _core.run("report", doc, oracle)
    if code == 1:
        raise ValueError(json.loads(err)["error"]["message"])
    if code == 2:
        raise CrossCheckError(json.loads(err)["error"]["message"])
    return json.loads(out)


def fixtures():
    return _core.fixtures()

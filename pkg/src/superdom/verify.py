"""Bound checks that compute every exact value themselves.

Each function builds the relevant graph, solves it exactly and returns a
:class:`BoundReport` saying whether the value falls in the stated interval.
"""
from __future__ import annotations

from dataclasses import dataclass

from .formulas import chain_bounds, glue_bounds, hajos_bounds, ncorona_hypotheses, ncorona_value
from .graph import Graph, disjoint_union
from .products import GlueSpec, HajosSpec, chain, hajos_sum, neighbourhood_corona, r_glue
from .solver import domination_number, super_domination_number


@dataclass(frozen=True)
class BoundReport:
    name: str
    lo: int
    value: int
    hi: int
    passed: bool

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} lo={self.lo} value={self.value} hi={self.hi}"


def _gsp(g: Graph) -> int:
    return super_domination_number(g).value


def _interval(name: str, lo: int, value: int, hi: int, extra: bool = True) -> BoundReport:
    return BoundReport(name, lo, value, hi, extra and lo <= value <= hi)


def verify_thm1(g: Graph) -> BoundReport:
    """gamma <= n/2 <= gamma_sp <= n - 1 for isolate-free graphs with n >= 2."""
    if g.n < 2 or g.has_isolated_vertex():
        raise ValueError("the general bounds need a graph with n >= 2 and no isolated vertex")
    gamma = domination_number(g).value
    lo, hi = -(-g.n // 2), g.n - 1
    return _interval("thm1", lo, _gsp(g), hi, 1 <= gamma <= g.n // 2)


def verify_prop_disconnect(g1: Graph, g2: Graph) -> BoundReport:
    """The disjoint union is searched whole, not split into components."""
    expected = _gsp(g1) + _gsp(g2)
    value = super_domination_number(disjoint_union(g1, g2), decompose=False).value
    return _interval("prop-disconnect", expected, value, expected)


def verify_chain2(g1: Graph, g2: Graph, a1: tuple[int, int], a2: tuple[int, int]) -> BoundReport:
    if not (g1.is_connected() and g2.is_connected()):
        raise ValueError("chain bounds need connected graphs")
    b = chain_bounds(_gsp(g1), _gsp(g2))
    return _interval("chain2", b.lo, _gsp(chain([g1, g2], [a1, a2])), b.hi)


def verify_glue(g1: Graph, g2: Graph, spec: GlueSpec) -> BoundReport:
    b = glue_bounds(_gsp(g1), _gsp(g2), spec.r)
    return _interval("glue", b.lo, _gsp(r_glue(g1, g2, spec)), b.hi)


def verify_hajos(g1: Graph, g2: Graph, spec: HajosSpec) -> BoundReport:
    b = hajos_bounds(_gsp(g1), _gsp(g2))
    return _interval("hajos", b.lo, _gsp(hajos_sum(g1, g2, spec)), b.hi)


def verify_ncorona(g: Graph, h: Graph) -> BoundReport:
    """Exact value when the hypotheses hold, otherwise only the upper bound.

    The upper bound n_G (gamma_sp(H) + 1) needs G and H connected.
    """
    if not (g.is_connected() and h.is_connected()):
        raise ValueError("neighbourhood corona bounds need connected graphs")
    target = ncorona_value(g.n, _gsp(h))
    value = _gsp(neighbourhood_corona(g, h))
    lo = target if ncorona_hypotheses(g, h) else 0
    return _interval("ncorona", lo, value, target)

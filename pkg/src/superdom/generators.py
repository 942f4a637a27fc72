"""Deterministic constructors for the named graph classes."""
from __future__ import annotations

from itertools import combinations

from .graph import Graph

CLASSES = ("path", "cycle", "complete", "complete_bipartite", "star", "friendship")

# number of integer parameters and their minimum values
_ARITY = {
    "path": (1,),
    "cycle": (3,),
    "complete": (1,),
    "complete_bipartite": (1, 1),
    "star": (1,),
    "friendship": (1,),
}


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(n: int, m: int) -> Graph:
    """K_{n,m} with sides ``0..n-1`` and ``n..n+m-1``."""
    return Graph.from_edges(n + m, ((i, n + j) for i in range(n) for j in range(m)))


def star(n: int) -> Graph:
    """K_{1,n}: centre 0 and leaves ``1..n``."""
    return complete_bipartite(1, n)


def friendship(n: int) -> Graph:
    """F_n: centre 0, triangle ``i`` (1-based) on ``0, 2i-1, 2i``."""
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * n + 1, edges)


def generate(kind: str, *params: int) -> Graph:
    """Build a graph of class ``kind`` from its integer parameters.

    >>> generate("friendship", 3).m
    9
    """
    if kind not in _ARITY:
        raise ValueError(f"unknown graph class {kind!r}; expected one of {', '.join(CLASSES)}")
    minima = _ARITY[kind]
    if len(params) != len(minima):
        raise ValueError(f"{kind} takes {len(minima)} parameter(s), got {len(params)}")
    for value, low in zip(params, minima):
        if not isinstance(value, int) or value < low:
            raise ValueError(f"{kind} needs parameters >= {low}, got {value}")
    return _BUILDERS[kind](*params)


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "friendship": friendship,
}


# Auxiliary families used by the examples and tightness checks.

def paw() -> Graph:
    """Triangle 0-1-2 with pendant vertex 3 attached to 0."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def clique_with_leaves(r: int, leaves_per_vertex: int | list[int]) -> Graph:
    """K_r on ``0..r-1`` with pendant leaves appended after the clique.

    ``leaves_per_vertex`` is either one count for every clique vertex or a
    list of per-vertex counts. Leaves are numbered clique vertex by clique
    vertex.
    """
    if isinstance(leaves_per_vertex, int):
        leaves_per_vertex = [leaves_per_vertex] * r
    if len(leaves_per_vertex) != r:
        raise ValueError("need one leaf count per clique vertex")
    edges = list(combinations(range(r), 2))
    nxt = r
    for v, count in enumerate(leaves_per_vertex):
        for _ in range(count):
            edges.append((v, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)

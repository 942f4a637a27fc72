"""Composite graph constructions: corona, neighbourhood corona, r-gluing,
Hajos sum and chains.

Every constructor fixes a documented vertex layout so witnesses computed on
the result are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, bits_of


@dataclass(frozen=True)
class GlueSpec:
    """Identify ``left_clique[i]`` of G1 with ``right_clique[i]`` of G2."""

    left_clique: tuple[int, ...] = field(default=())
    right_clique: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "left_clique", tuple(self.left_clique))
        object.__setattr__(self, "right_clique", tuple(self.right_clique))

    @property
    def r(self) -> int:
        return len(self.left_clique)

    def validate(self, g1: Graph, g2: Graph) -> None:
        if len(self.left_clique) != len(self.right_clique):
            raise ValueError("left and right cliques must have the same size")
        for name, g, clique in (("left", g1, self.left_clique), ("right", g2, self.right_clique)):
            if len(set(clique)) != len(clique):
                raise ValueError(f"{name} clique has repeated vertices")
            for v in clique:
                if not 0 <= v < g.n:
                    raise ValueError(f"{name} clique vertex {v} out of range for n={g.n}")
            for i, u in enumerate(clique):
                for v in clique[i + 1:]:
                    if not g.adj[u] >> v & 1:
                        raise ValueError(f"{name} clique vertices {u} and {v} are not adjacent")


@dataclass(frozen=True)
class HajosSpec:
    """Edge ``x1y1`` of G1 and edge ``x2y2`` of G2; ``x1`` and ``x2`` merge."""

    x1: int
    y1: int
    x2: int
    y2: int

    def validate(self, g1: Graph, g2: Graph) -> None:
        for g, x, y, label in ((g1, self.x1, self.y1, "first"), (g2, self.x2, self.y2, "second")):
            if not (0 <= x < g.n and 0 <= y < g.n) or x == y or not g.adj[x] >> y & 1:
                raise ValueError(f"({x}, {y}) is not an edge of the {label} graph")


def corona(g: Graph, h: Graph) -> Graph:
    """G o H: copy ``i`` of H occupies ``n_G + i*n_H ..`` and is joined to vertex ``i``."""
    edges = g.edges()
    for i in range(g.n):
        base = g.n + i * h.n
        edges += [(u + base, v + base) for u, v in h.edges()]
        edges += [(i, base + j) for j in range(h.n)]
    return Graph.from_edges(g.n * (1 + h.n), edges)


def neighbourhood_corona(g: Graph, h: Graph) -> Graph:
    """G * H with the corona layout; copy ``i`` is joined to every neighbour of ``i``."""
    edges = g.edges()
    for i in range(g.n):
        base = g.n + i * h.n
        edges += [(u + base, v + base) for u, v in h.edges()]
        for w in bits_of(g.adj[i]):
            edges += [(w, base + j) for j in range(h.n)]
    return Graph.from_edges(g.n * (1 + h.n), edges)


def r_glue(g1: Graph, g2: Graph, spec: GlueSpec) -> Graph:
    """Glue G2 onto G1 along the paired cliques of ``spec``.

    G1 keeps its indices; the unmatched vertices of G2 follow in ascending
    original order. With an empty spec this is the disjoint union.
    """
    spec.validate(g1, g2)
    index = dict(zip(spec.right_clique, spec.left_clique))
    nxt = g1.n
    for v in range(g2.n):
        if v not in index:
            index[v] = nxt
            nxt += 1
    edges = set(g1.edges())
    for u, v in g2.edges():
        a, b = index[u], index[v]
        edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(nxt, sorted(edges))


def hajos_sum(g1: Graph, g2: Graph, spec: HajosSpec) -> Graph:
    """Hajos sum: drop x1y1 and x2y2, merge x1 with x2 at index 0, add y1y2.

    The remaining G1 vertices follow in ascending order, then those of G2.
    """
    spec.validate(g1, g2)
    map1 = {spec.x1: 0}
    nxt = 1
    for v in range(g1.n):
        if v != spec.x1:
            map1[v] = nxt
            nxt += 1
    map2 = {spec.x2: 0}
    for v in range(g2.n):
        if v != spec.x2:
            map2[v] = nxt
            nxt += 1
    drop1 = {(min(spec.x1, spec.y1), max(spec.x1, spec.y1))}
    drop2 = {(min(spec.x2, spec.y2), max(spec.x2, spec.y2))}
    edges = [(map1[u], map1[v]) for u, v in g1.edges() if (u, v) not in drop1]
    edges += [(map2[u], map2[v]) for u, v in g2.edges() if (u, v) not in drop2]
    edges.append((map1[spec.y1], map2[spec.y2]))
    return Graph.from_edges(nxt, edges)


def chain(graphs: Sequence[Graph], anchors: Sequence[tuple[int, int]]) -> Graph:
    """Chain ``C(G_1, ..., G_k)``: ``y_i`` of graph ``i`` is merged with ``x_{i+1}``.

    Graphs are laid out left to right; a merged vertex keeps the index it
    already had from the left graph.
    """
    if len(graphs) < 2:
        raise ValueError("a chain needs at least two graphs")
    if len(anchors) != len(graphs):
        raise ValueError("need one (x, y) anchor pair per graph")
    for i, (g, (x, y)) in enumerate(zip(graphs, anchors)):
        if not (0 <= x < g.n and 0 <= y < g.n):
            raise ValueError(f"anchor ({x}, {y}) out of range for graph {i} of order {g.n}")
        if x == y:
            raise ValueError(f"anchor of graph {i} must use two distinct vertices")

    edges = list(graphs[0].edges())
    index = list(range(graphs[0].n))
    nxt = graphs[0].n
    for i in range(1, len(graphs)):
        tail = index[anchors[i - 1][1]]
        x = anchors[i][0]
        index = []
        for v in range(graphs[i].n):
            if v == x:
                index.append(tail)
            else:
                index.append(nxt)
                nxt += 1
        edges += [(index[u], index[v]) for u, v in graphs[i].edges()]
    return Graph.from_edges(nxt, edges)

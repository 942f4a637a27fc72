"""Immutable simple graphs with bitset adjacency rows.

Vertices are the dense indices ``0..n-1``. Every adjacency row and every
vertex subset is a Python ``int`` used as a bitset, so set algebra over the
neighbourhoods reduces to ``&``, ``|`` and ``~``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 1024


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0..n-1}`` stored as a bitset.

    Iteration is ascending. Ordering compares the ascending member tuples,
    which is the lexicographic order used for witnesses and enumerations.
    """

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"vertex set {self.bits:#x} has members outside 0..{self.n - 1}")

    @classmethod
    def from_iterable(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
        return cls(mask_of(vertices), n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __lt__(self, other: "VertexSet") -> bool:
        return tuple(self) < tuple(other)

    def __le__(self, other: "VertexSet") -> bool:
        return tuple(self) <= tuple(other)

    def complement(self) -> "VertexSet":
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, n={self.n})"


@dataclass(frozen=True)
class WitnessMap:
    """Pairs ``(v, u)`` where ``v`` in S super dominates ``u`` outside S.

    Entries are sorted by ``v``.
    """

    entries: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def dominator_of(self, u: int) -> int:
        for v, w in self.entries:
            if w == u:
                return v
        raise KeyError(u)


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitset of neighbours of ``v``. Instances are immutable
    and hashable; two graphs are equal iff their adjacency rows are equal.
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, adj: Sequence[int]):
        if not isinstance(n, int) or n < 1:
            raise ValueError("a graph needs at least one vertex")
        if n > MAX_VERTICES:
            raise ValueError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        adj = tuple(int(row) for row in adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        degree_sum = 0
        for v, row in enumerate(adj):
            if row < 0 or row & ~full:
                raise ValueError(f"row {v} references vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits_of(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
            degree_sum += row.bit_count()
        self._n = n
        self._adj = adj
        self._m = degree_sum // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not isinstance(n, int) or n < 1:
            raise ValueError("a graph needs at least one vertex")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise IndexError(f"vertex {v} out of range for n={self._n}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._n) for v in bits_of(self._adj[u] >> u + 1 << u + 1)]

    def vertex_set(self, vertices: Iterable[int] | VertexSet) -> VertexSet:
        if isinstance(vertices, VertexSet):
            if vertices.n != self._n:
                raise ValueError(f"vertex set belongs to a graph of order {vertices.n}, not {self._n}")
            return vertices
        return VertexSet.from_iterable(self._n, vertices)

    def is_complete(self) -> bool:
        return self._m == self._n * (self._n - 1) // 2

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self._adj)

    def is_connected(self) -> bool:
        return len(connected_components(self)) == 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph.from_edges(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the list mapping new indices to old ones."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            adj.append(mask_of(index[u] for u in bits_of(self._adj[v]) if u in index))
        return Graph(len(order), adj), order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph, (self._n, self._adj))


def neighborhood(g: Graph, v: int, closed: bool = False) -> VertexSet:
    """Open neighbourhood N(v), or the closed one N[v] when ``closed``."""
    g._check_vertex(v)
    row = g.adj[v]
    if closed:
        row |= 1 << v
    return VertexSet(row, g.n)


def _as_mask(g: Graph, s) -> int:
    if isinstance(s, int):
        if s < 0 or s & ~g.all_mask:
            raise ValueError("vertex mask has bits outside the graph")
        return s
    return g.vertex_set(s).bits


def is_dominating(g: Graph, s) -> bool:
    """True iff every vertex outside ``s`` has a neighbour in ``s``."""
    s = _as_mask(g, s)
    outside = g.all_mask & ~s
    return all(g.adj[u] & s for u in bits_of(outside))


def witness_entries(g: Graph, s: int) -> list[tuple[int, int]] | None:
    """Bitset core of :func:`is_super_dominating`.

    For every ``u`` outside ``s`` pick the smallest ``v`` in ``s`` with
    ``N(v) & ~s == {u}``. Returns ``None`` as soon as some ``u`` has none.
    """
    adj = g.adj
    outside = g.all_mask & ~s
    entries = []
    for u in bits_of(outside):
        bit = 1 << u
        for v in bits_of(adj[u] & s):
            if adj[v] & outside == bit:
                entries.append((v, u))
                break
        else:
            return None
    entries.sort()
    return entries


def is_super_dominating(g: Graph, s) -> tuple[bool, WitnessMap | None]:
    """Check the super domination condition and return a witness map.

    Every ``u`` outside ``s`` must have some ``v`` in ``s`` whose
    neighbourhood meets the complement in exactly ``{u}``. Such a ``v`` is
    adjacent to ``u``, so a super dominating set is also dominating.
    """
    s = _as_mask(g, s)
    entries = witness_entries(g, s)
    if entries is None:
        return False, None
    return True, WitnessMap(tuple(entries))


def connected_components(g: Graph) -> list[VertexSet]:
    """Components ordered by their smallest vertex."""
    unseen = g.all_mask
    parts = []
    while unseen:
        start = unseen & -unseen
        comp = frontier = start
        while frontier:
            reach = 0
            for v in bits_of(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        parts.append(VertexSet(comp, g.n))
        unseen &= ~comp
    return parts


def classify_cycle(g: Graph) -> int | None:
    """Return ``n`` if ``g`` is a cycle (connected and 2-regular), else None."""
    if g.n < 3 or any(row.bit_count() != 2 for row in g.adj):
        return None
    return g.n if g.is_connected() else None


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, list(g1.adj) + [row << shift for row in g2.adj])

"""Exact domination and super domination numbers.

Super domination is searched from the complement side. Call a vertex set T
*coverable* when every ``u`` in T has some ``v`` outside T with
``N(v) & T == {u}``; S is super dominating iff ``V - S`` is coverable.
Removing a vertex from a coverable set keeps it coverable, so the coverable
sets form a hereditary family and gamma_sp is ``n`` minus the size of the
largest member. The search grows T in ascending vertex order, keeps only
candidates that individually extend T, and prunes on ``|T| + |candidates|``.

Each connected component is solved on its own and the results are combined
(values add, counts multiply, enumerations take the product).
"""
from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product

from .graph import Graph, VertexSet, bits_of, connected_components, mask_of, witness_entries

COUNT_GUARD = 28


class SizeGuardError(ValueError):
    """Raised when counting or enumeration is requested on a graph that is too large."""


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: VertexSet


@dataclass(frozen=True)
class PartitionDecomposition:
    """The exchange ``(S', D, f)`` built from a super dominating set S.

    ``f`` holds pairs ``(a, b)``: ``a`` leaves S, ``b`` enters, and each
    super dominates the other in its own set.
    """

    s: VertexSet
    s_prime: VertexSet
    d: VertexSet
    f: tuple[tuple[int, int], ...]

    def check(self, g: Graph) -> list[str]:
        """Return the list of violated invariants (empty when all hold)."""
        problems = []
        s, sp, d = self.s.bits, self.s_prime.bits, self.d.bits
        full = g.all_mask
        s_bar, sp_bar = full & ~s, full & ~sp
        if s_bar & ~sp:
            problems.append("complement of S is not contained in S'")
        if sp_bar & ~s:
            problems.append("complement of S' is not contained in S")
        if s.bit_count() != sp.bit_count():
            problems.append("|S'| != |S|")
        if d != s & sp:
            problems.append("D != S & S'")
        if s_bar & sp_bar or s_bar & d or sp_bar & d or (s_bar | sp_bar | d) != full:
            problems.append("complement of S, complement of S' and D do not partition V")
        left = [a for a, _ in self.f]
        right = [b for _, b in self.f]
        if mask_of(left) != sp_bar or len(set(left)) != len(left):
            problems.append("f is not defined exactly on the complement of S'")
        if mask_of(right) != s_bar or len(set(right)) != len(right):
            problems.append("f is not onto the complement of S")
        for a, b in self.f:
            if g.adj[a] & s_bar != 1 << b:
                problems.append(f"{a} does not super dominate {b} with respect to S")
            if g.adj[b] & sp_bar != 1 << a:
                problems.append(f"{b} does not super dominate {a} with respect to S'")
        if 2 * s.bit_count() == g.n and (sp != s_bar or d):
            problems.append("|S| = n/2 but S' != complement of S or D is non-empty")
        return problems


class _CoverSearch:
    """Search over coverable complements of one graph (normally a component)."""

    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.full = (1 << self.n) - 1

    def extensions(self, t: int, cands: int) -> int:
        """Members ``c`` of ``cands`` for which ``t | {c}`` is still coverable.

        ``t`` must be coverable. For every ``u`` in ``t`` we collect the
        outside vertices whose neighbourhood meets ``t`` exactly in ``u``;
        adding ``c`` removes ``c`` and its neighbours from those pools. The new
        vertex ``c`` needs a neighbour with no neighbour in ``t``.
        """
        adj = self.adj
        touched = 0
        for u in bits_of(t):
            touched |= adj[u]
        outside = self.full & ~t
        free = outside & ~touched
        pools: dict[int, int] = {}
        for v in bits_of(touched & outside):
            hit = adj[v] & t
            if not hit & (hit - 1):
                pools[hit] = pools.get(hit, 0) | 1 << v
        pools_list = list(pools.values())
        good = 0
        for c in bits_of(cands):
            row = adj[c]
            if not row & free:
                continue
            kill = row | 1 << c
            for pool in pools_list:
                if not pool & ~kill:
                    break
            else:
                good |= 1 << c
        return good

    def root_candidates(self) -> int:
        return self.extensions(0, self.full)

    def max_size(self) -> int:
        limit = self.n // 2
        best = 0

        class _Done(Exception):
            pass

        def grow(t: int, size: int, cands: int) -> None:
            nonlocal best
            if size > best:
                best = size
                if best >= limit:
                    raise _Done
            while cands:
                if size + cands.bit_count() <= best:
                    return
                low = cands & -cands
                cands ^= low
                grow(t | low, size + 1, self.extensions(t | low, cands))

        try:
            grow(0, 0, self.root_candidates())
        except _Done:
            pass
        return best

    def count(self, target: int, t: int = 0, size: int = 0, cands: int | None = None) -> int:
        if cands is None:
            cands = self.root_candidates()
        need = target - size
        if need == 0:
            return 1
        if need == 1:
            return cands.bit_count()
        total = 0
        while cands.bit_count() >= need:
            low = cands & -cands
            cands ^= low
            total += self.count(target, t | low, size + 1, self.extensions(t | low, cands))
        return total

    def count_block(self, target: int, firsts: list[int]) -> int:
        """Count coverable sets of size ``target`` whose smallest member is in ``firsts``."""
        if target == 0:
            return 0
        cands = self.root_candidates()
        total = 0
        for w in firsts:
            above = cands >> (w + 1) << (w + 1)
            if target == 1:
                total += 1
            elif above.bit_count() >= target - 1:
                t = 1 << w
                total += self.count(target, t, 1, self.extensions(t, above))
        return total

    def collect(self, target: int, t: int = 0, size: int = 0, cands: int | None = None, out=None) -> list[int]:
        if out is None:
            out = []
        if cands is None:
            cands = self.root_candidates()
        if size == target:
            out.append(t)
            return out
        need = target - size
        while cands.bit_count() >= need:
            low = cands & -cands
            cands ^= low
            nxt = self.extensions(t | low, cands) if need > 1 else 0
            self.collect(target, t | low, size + 1, nxt, out)
        return out

    def lex_largest(self, target: int, t: int = 0, size: int = 0, cands: int | None = None) -> int | None:
        """Coverable set of size ``target`` with the largest ascending tuple.

        Its complement is the lexicographically smallest super dominating set
        of that size.
        """
        if cands is None:
            cands = self.root_candidates()
        if size == target:
            return t
        need = target - size
        rest = cands
        while rest:
            w = rest.bit_length() - 1
            rest ^= 1 << w
            above = cands >> (w + 1) << (w + 1)
            if above.bit_count() < need - 1:
                continue
            nxt = self.extensions(t | 1 << w, above) if need > 1 else 0
            found = self.lex_largest(target, t | 1 << w, size + 1, nxt)
            if found is not None:
                return found
        return None


def _parts(g: Graph, decompose: bool) -> list[tuple[Graph, list[int]]]:
    if not decompose:
        return [(g, list(range(g.n)))]
    return [g.induced_subgraph(comp) for comp in connected_components(g)]


def _lift(mask: int, order: list[int]) -> int:
    return mask_of(order[i] for i in bits_of(mask))


def domination_number(g: Graph) -> SolveResult:
    """Minimum dominating set, lexicographically smallest among the minimum ones."""
    total = 0
    witness = 0
    for sub, order in _parts(g, True):
        adj = sub.adj
        closed = [row | 1 << v for v, row in enumerate(adj)]
        found = None
        for k in range(1, sub.n + 1):
            for combo in combinations(range(sub.n), k):
                covered = 0
                for v in combo:
                    covered |= closed[v]
                if covered == sub.all_mask:
                    found = combo
                    break
            if found is not None:
                break
        total += len(found)
        witness |= mask_of(order[v] for v in found)
    return SolveResult(total, VertexSet(witness, g.n))


def super_domination_number(g: Graph, decompose: bool = True) -> SolveResult:
    """Exact gamma_sp with the lexicographically smallest minimum witness.

    Isolated vertices can never be super dominated, so they end up in every
    solution. With ``decompose=False`` the whole graph is searched at once,
    which is only useful for cross-checking the component split.
    """
    total = 0
    witness = 0
    for sub, order in _parts(g, decompose):
        search = _CoverSearch(sub.adj)
        best = search.max_size()
        t = search.lex_largest(best)
        s = sub.all_mask & ~t
        total += sub.n - best
        witness |= _lift(s, order)
    return SolveResult(total, VertexSet(witness, g.n))


def _guard(g: Graph, allow_large: bool) -> None:
    if g.n > COUNT_GUARD:
        if not allow_large:
            raise SizeGuardError(
                f"graph has {g.n} vertices; counting is limited to {COUNT_GUARD} "
                "unless allow_large=True"
            )
        warnings.warn(f"counting on {g.n} vertices may take very long", RuntimeWarning, stacklevel=3)


def enumerate_min_super_dom(g: Graph, allow_large: bool = False) -> list[VertexSet]:
    """All minimum super dominating sets, sorted lexicographically."""
    _guard(g, allow_large)
    per_part = []
    for sub, order in _parts(g, True):
        search = _CoverSearch(sub.adj)
        best = search.max_size()
        per_part.append([_lift(sub.all_mask & ~t, order) for t in search.collect(best)])
    sets = []
    for choice in product(*per_part):
        mask = 0
        for part in choice:
            mask |= part
        sets.append(VertexSet(mask, g.n))
    sets.sort(key=tuple)
    return sets


def _count_job(adj: tuple[int, ...], target: int, firsts: list[int]) -> int:
    return _CoverSearch(adj).count_block(target, firsts)


def _blocks(items: list[int], n_blocks: int) -> list[list[int]]:
    n_blocks = max(1, min(n_blocks, len(items)))
    size, extra = divmod(len(items), n_blocks)
    out, start = [], 0
    for i in range(n_blocks):
        end = start + size + (i < extra)
        out.append(items[start:end])
        start = end
    return out


def count_min_super_dom(g: Graph, workers: int = 1, blocks: int | None = None,
                        allow_large: bool = False) -> int:
    """Number of minimum super dominating sets, without listing them.

    Each component's search space is split into contiguous blocks by the
    smallest vertex of the complement; block counts are summed, so the result
    does not depend on ``blocks`` or ``workers``. ``workers > 1`` runs the
    blocks in a process pool.
    """
    _guard(g, allow_large)
    if workers < 1:
        raise ValueError("workers must be positive")
    if blocks is None:
        blocks = workers
    jobs = []
    for sub, _ in _parts(g, True):
        search = _CoverSearch(sub.adj)
        best = search.max_size()
        if best == 0:
            continue
        firsts = list(bits_of(search.root_candidates()))
        jobs.append([(sub.adj, best, block) for block in _blocks(firsts, blocks)])
    total = 1
    if workers == 1:
        for part in jobs:
            total *= sum(_count_job(*job) for job in part)
        return total
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [[pool.submit(_count_job, *job) for job in part] for part in jobs]
        for part in futures:
            total *= sum(f.result() for f in part)
    return total


def partition_decomposition(g: Graph, s) -> PartitionDecomposition:
    """Exchange every super dominated vertex with its smallest dominator.

    For each ``b`` outside S the smallest ``a`` in S with
    ``N(a) & (V - S) == {b}`` is chosen; those ``a`` are swapped out for the
    complement, giving ``S' = (S - A) | (V - S)`` and ``D = S - A``.
    """
    s = g.vertex_set(s)
    entries = witness_entries(g, s.bits)
    if entries is None:
        raise ValueError(f"{s.to_list()} is not a super dominating set")
    s_bar = g.all_mask & ~s.bits
    chosen = mask_of(a for a, _ in entries)
    d = s.bits & ~chosen
    return PartitionDecomposition(
        s=s,
        s_prime=VertexSet(d | s_bar, g.n),
        d=VertexSet(d, g.n),
        f=tuple(entries),
    )

"""Closed-form values and bound intervals for super domination."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .graph import Graph


@dataclass(frozen=True)
class BoundInterval:
    lo: int
    hi: int
    source: str

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, value: int) -> bool:
        return self.lo <= value <= self.hi


@dataclass(frozen=True)
class NecklaceContent:
    """Bead multiset of a necklace: ``q[i]`` beads of colour ``i``."""

    q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(self.q))
        if not self.q or any(not isinstance(x, int) or x < 1 for x in self.q):
            raise ValueError("bead counts must be positive integers")

    @property
    def n(self) -> int:
        return sum(self.q)


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def _check(kind: str, params: tuple[int, ...], arity: int) -> None:
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(params)}")


def _domain(kind: str, params: tuple[int, ...]) -> None:
    """Reject parameters outside the range where the class formulas are stated."""
    lows = {"path": 1, "cycle": 3, "complete": 2, "star": 1, "friendship": 1}
    if kind == "complete_bipartite":
        _check(kind, params, 2)
        if min(params) < 2:
            raise ValueError("complete_bipartite formulas need both sides >= 2; use star for K_{1,n}")
        return
    if kind not in lows:
        raise ValueError(f"no closed form for graph class {kind!r}")
    _check(kind, params, 1)
    if params[0] < lows[kind]:
        raise ValueError(f"{kind} formula needs n >= {lows[kind]}, got {params[0]}")


def gamma_sp_formula(kind: str, *params: int) -> int:
    """Closed-form super domination number of a named class.

    >>> gamma_sp_formula("cycle", 6)
    4
    """
    _domain(kind, params)
    if kind == "complete_bipartite":
        n, m = params
        return n + m - 2
    (n,) = params
    if kind == "path":
        return _ceil_half(n)
    if kind == "cycle":
        # kept as ceil((n+1)/2) rather than the simplified (n+2)/2
        return _ceil_half(n + 1) if n % 4 == 2 else _ceil_half(n)
    if kind == "complete":
        return n - 1
    if kind == "star":
        return n
    return n + 1  # friendship


def nsp_formula(kind: str, *params: int) -> int:
    """Closed-form number of minimum super dominating sets of a named class."""
    _domain(kind, params)
    if kind == "complete_bipartite":
        n, m = params
        return n * m
    (n,) = params
    if kind == "complete":
        return n
    if kind == "star":
        return n + 1
    if kind == "friendship":
        return 2 ** n
    if kind == "path":
        if n == 1:
            return 1
        return 2 if n % 2 == 0 else 3 * (n - 1) // 2
    return {0: 4, 1: 2 * n, 2: (5 * n * n - 10 * n) // 8, 3: n}[n % 4]


def ncorona_value(n_g: int, gamma_sp_h: int) -> int:
    """gamma_sp(G * H) = n_G (gamma_sp(H) + 1), valid under :func:`ncorona_hypotheses`."""
    return n_g * (gamma_sp_h + 1)


def ncorona_hypotheses(g: Graph, h: Graph) -> bool:
    """Whether G and H satisfy the conditions for the exact neighbourhood corona value.

    Both must be connected, H must have order other than 1, and H must be
    complete or have gamma_sp(H) < |V(H)| - 1. Solves H exactly.
    """
    from .solver import super_domination_number

    if not (g.is_connected() and h.is_connected()) or h.n == 1:
        return False
    if h.is_complete():
        return True
    return super_domination_number(h).value < h.n - 1


def ncorona_trivial_upper(gamma_sp_g: int, n: int, m: int) -> int:
    """Bound from putting every copy of H into the set: gamma_sp(G) + n*m."""
    return gamma_sp_g + n * m


def glue_bounds(gsp1: int, gsp2: int, r: int) -> BoundInterval:
    if r < 0:
        raise ValueError("r must be non-negative")
    return BoundInterval(gsp1 + gsp2 - r, gsp1 + gsp2, "r-gluing")


def hajos_bounds(gsp1: int, gsp2: int) -> BoundInterval:
    return BoundInterval(gsp1 + gsp2 - 2, gsp1 + gsp2, "hajos")


def chain_bounds(gsp1: int, gsp2: int) -> BoundInterval:
    return BoundInterval(gsp1 + gsp2 - 1, gsp1 + gsp2, "chain")


def _totient(n: int) -> int:
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _multinomial(parts: list[int]) -> int:
    total, out = 0, 1
    for k in parts:
        total += k
        out *= comb(total, k)
    return out


def necklace_count(content: NecklaceContent | tuple[int, ...] | list[int]) -> int:
    """Number of necklaces with the given bead counts, up to rotation.

    Burnside over the cyclic group: a rotation by ``n/d`` steps (``d``
    dividing every count) fixes ``multinomial(n/d; q/d)`` arrangements, and
    there are ``phi(d)`` such rotations.
    """
    if not isinstance(content, NecklaceContent):
        content = NecklaceContent(tuple(content))
    n = content.n
    g = 0
    for q in content.q:
        g = gcd(g, q)
    total = 0
    for d in range(1, g + 1):
        if g % d == 0:
            total += _totient(d) * _multinomial([q // d for q in content.q])
    return total // n

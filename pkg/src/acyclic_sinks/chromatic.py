"""Chromatic polynomials of multigraphs by three independent routes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .graph import GraphError, Multigraph, contract_edge, delete_edge


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in ``n``; ``coeffs[i]`` is the coefficient of ``n**i``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, degree: int, length: int | None = None) -> "IntPolynomial":
        length = degree + 1 if length is None else length
        return cls(tuple(1 if i == degree else 0 for i in range(length)))

    @classmethod
    def zero(cls, length: int = 1) -> "IntPolynomial":
        return cls((0,) * length)

    @property
    def degree(self) -> int:
        """Index of the last stored coefficient (``d`` for a graph on ``d`` vertices)."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        k = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (k - len(self.coeffs))
        b = other.coeffs + (0,) * (k - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __call__(self, n: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * n + c
        return total

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return _trim(self.coeffs) == _trim(other.coeffs)

    def __hash__(self):
        return hash(_trim(self.coeffs))

    def __str__(self):
        return " ".join(str(c) for c in self.coeffs)


def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    k = len(coeffs)
    while k > 0 and coeffs[k - 1] == 0:
        k -= 1
    return coeffs[:k]


def coefficient(p: IntPolynomial, i: int) -> int:
    if not 0 <= i <= p.degree:
        raise IndexError(f"coefficient index {i} outside 0..{p.degree}")
    return p.coeffs[i]


def chromatic_bruteforce(G: Multigraph, n: int) -> int:
    """Count maps ``V -> {1..n}`` with distinct colours on the ends of every edge."""
    if n < 0:
        raise ValueError("number of colours must be nonnegative")
    if G.has_loop():
        return 0
    pairs = sorted({(min(u, v) - 1, max(u, v) - 1) for u, v in G.edges})
    count = 0
    for colouring in product(range(n), repeat=G.d):
        if all(colouring[u] != colouring[v] for u, v in pairs):
            count += 1
    return count


def chromatic_delcon(G: Multigraph) -> IntPolynomial:
    """Chromatic polynomial via chi(G) = chi(G - e) - chi(G / e).

    Pivots on the first non-loop edge; parallel edges are not merged.
    """
    return _delcon(G.canonical_key())


@lru_cache(maxsize=None)
def _delcon(key) -> IntPolynomial:
    d, edges = key
    G = Multigraph(d, edges)
    if G.has_loop():
        return IntPolynomial.zero(d + 1)
    if not edges:
        return IntPolynomial.monomial(d)
    deleted = _delcon(delete_edge(G, 1).canonical_key())
    contracted = _delcon(contract_edge(G, 1).canonical_key())
    return deleted - IntPolynomial(contracted.coeffs + (0,))


def chromatic_whitney(G: Multigraph) -> IntPolynomial:
    """Sum of ``(-1)^|S| n^(d-|S|)`` over the broken circuit complex."""
    from .nbc import nbc_sets

    if G.has_loop():
        raise GraphError("broken-circuit expansion is undefined for graphs with loops")
    coeffs = [0] * (G.d + 1)
    for S in nbc_sets(G):
        coeffs[G.d - len(S)] += (-1) ** len(S)
    return IntPolynomial(tuple(coeffs))


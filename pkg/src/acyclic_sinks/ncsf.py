"""Symmetric functions in noncommuting variables, indexed by set partitions.

A :class:`SetPartition` of ``[d]`` is stored as its restricted-growth string
(entry ``i`` is the block of element ``i + 1``, blocks numbered by first
appearance).  :class:`NCSym` holds exact rational coefficients on either the
monomial basis ``m`` or the elementary basis ``e``, where

    e_pi = sum of m_sigma over all sigma with sigma ^ pi = 0.

Basis changes go through the power-sum basis ``p_sigma = sum_{tau >= sigma}
m_tau``, in which ``e_pi = sum_{sigma <= pi} mu(0, sigma) p_sigma``.  Both
steps are Moebius inversions on the partition lattice.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .graph import Multigraph, contract_edge, delete_edge, relabel_graph


class PartitionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SetPartition:
    rgs: tuple[int, ...]

    def __post_init__(self):
        rgs = tuple(self.rgs)
        top = -1
        for x in rgs:
            if not 0 <= x <= top + 1:
                raise PartitionError(f"{rgs} is not a restricted growth string")
            top = max(top, x)
        object.__setattr__(self, "rgs", rgs)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], d: int | None = None) -> "SetPartition":
        blocks = [sorted(b) for b in blocks if b]
        elems = sorted(x for b in blocks for x in b)
        d = len(elems) if d is None else d
        if elems != list(range(1, d + 1)):
            raise PartitionError(f"blocks {blocks} do not partition 1..{d}")
        owner = {x: i for i, b in enumerate(blocks) for x in b}
        relabel: dict[int, int] = {}
        return cls(tuple(relabel.setdefault(owner[x], len(relabel)) for x in range(1, d + 1)))

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Read block-slash notation such as ``124/3`` (single-digit elements)."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls.from_blocks([int(c) for c in part] for part in text.split("/"))
        except ValueError as exc:
            raise PartitionError(f"cannot parse set partition {text!r}") from exc

    @classmethod
    def bottom(cls, d: int) -> "SetPartition":
        return cls(tuple(range(d)))

    @classmethod
    def top(cls, d: int) -> "SetPartition":
        return cls((0,) * d)

    @classmethod
    def from_labels(cls, labels: Sequence) -> "SetPartition":
        """Kernel of a word: ``i ~ j`` iff ``labels[i] == labels[j]``."""
        seen: dict = {}
        return cls(tuple(seen.setdefault(x, len(seen)) for x in labels))

    @property
    def d(self) -> int:
        return len(self.rgs)

    @property
    def nblocks(self) -> int:
        return max(self.rgs) + 1 if self.rgs else 0

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.nblocks)]
        for i, b in enumerate(self.rgs, 1):
            out[b].append(i)
        return tuple(tuple(b) for b in out)

    @property
    def shape(self) -> tuple[int, ...]:
        """Block sizes as an integer partition (weakly decreasing)."""
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def plus(self) -> "SetPartition":
        """Insert ``d + 1`` into the block holding ``d``."""
        if not self.rgs:
            raise PartitionError("the empty partition has no last element")
        return SetPartition(self.rgs + (self.rgs[-1],))

    def relabel(self, delta: Sequence[int]) -> "SetPartition":
        """Image under the permutation ``i -> delta[i-1]``."""
        return SetPartition.from_blocks(([delta[i - 1] for i in b] for b in self.blocks), self.d)

    def __str__(self):
        return "/".join("".join(str(i) for i in b) for b in self.blocks)

    def __repr__(self):
        return f"SetPartition({str(self)!r})"


def _same_length(a: SetPartition, b: SetPartition) -> None:
    if a.d != b.d:
        raise PartitionError(f"partitions of different sets: {a} and {b}")


def meet(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    _same_length(pi, sigma)
    return SetPartition.from_labels(list(zip(pi.rgs, sigma.rgs)))


def leq(tau: SetPartition, sigma: SetPartition) -> bool:
    """Whether ``tau`` refines ``sigma``."""
    _same_length(tau, sigma)
    image: dict[int, int] = {}
    return all(image.setdefault(t, s) == s for t, s in zip(tau.rgs, sigma.rgs))


@lru_cache(maxsize=None)
def partitions(d: int) -> tuple[SetPartition, ...]:
    """All of ``Pi_d``, ordered by number of blocks (descending), then by RGS."""
    out: list[tuple[int, ...]] = []

    def grow(prefix: list[int], top: int):
        if len(prefix) == d:
            out.append(tuple(prefix))
            return
        for x in range(top + 2):
            prefix.append(x)
            grow(prefix, max(top, x))
            prefix.pop()

    grow([], -1)
    parts = [SetPartition(r) for r in out]
    return tuple(sorted(parts, key=lambda p: (-p.nblocks, p.rgs)))


@lru_cache(maxsize=None)
def _upper(d: int) -> dict[SetPartition, tuple[SetPartition, ...]]:
    """For each partition, the partitions above it, in the order of :func:`partitions`."""
    ps = partitions(d)
    return {t: tuple(s for s in ps if leq(t, s)) for t in ps}


@lru_cache(maxsize=None)
def _mobius_from(tau: SetPartition) -> dict[SetPartition, int]:
    # mu(tau, tau) = 1 and sum_{tau <= rho <= sigma} mu(tau, rho) = 0 for tau < sigma;
    # the upper set is listed with more blocks first, so every rho < sigma is done
    # before sigma.
    above = _upper(tau.d)[tau]
    mu: dict[SetPartition, int] = {}
    for sigma in above:
        if sigma == tau:
            mu[sigma] = 1
        else:
            mu[sigma] = -sum(m for rho, m in mu.items() if leq(rho, sigma))
    return mu


def mobius(tau: SetPartition, sigma: SetPartition) -> int:
    _same_length(tau, sigma)
    if not leq(tau, sigma):
        raise PartitionError(f"{tau} is not below {sigma}")
    return _mobius_from(tau)[sigma]


@dataclass
class NCSym:
    d: int
    basis: str = "m"
    coeffs: dict[SetPartition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("m", "e"):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean: dict[SetPartition, Fraction] = {}
        for pi, c in self.coeffs.items():
            if pi.d != self.d:
                raise PartitionError(f"{pi} is not a partition of [{self.d}]")
            c = Fraction(c)
            if c:
                clean[pi] = c
        self.coeffs = clean

    @classmethod
    def single(cls, pi: SetPartition, basis: str = "m", c=1) -> "NCSym":
        return cls(pi.d, basis, {pi: Fraction(c)})

    @classmethod
    def zero(cls, d: int, basis: str = "m") -> "NCSym":
        return cls(d, basis)

    def __getitem__(self, pi: SetPartition) -> Fraction:
        return self.coeffs.get(pi, Fraction(0))

    def _combine(self, other: "NCSym", sign: int) -> "NCSym":
        if (self.d, self.basis) != (other.d, other.basis):
            raise ValueError("cannot combine functions of different degree or basis")
        out = dict(self.coeffs)
        for pi, c in other.coeffs.items():
            out[pi] = out.get(pi, Fraction(0)) + sign * c
        return NCSym(self.d, self.basis, out)

    def __add__(self, other: "NCSym") -> "NCSym":
        return self._combine(other, 1)

    def __sub__(self, other: "NCSym") -> "NCSym":
        return self._combine(other, -1)

    def __neg__(self) -> "NCSym":
        return NCSym(self.d, self.basis, {p: -c for p, c in self.coeffs.items()})

    def scale(self, c) -> "NCSym":
        return NCSym(self.d, self.basis, {p: c * x for p, x in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, NCSym):
            return NotImplemented
        return (self.d, self.basis, self.coeffs) == (other.d, other.basis, other.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for pi in sorted(self.coeffs):
            c = self.coeffs[pi]
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign}({abs(c)})·{self.basis}_{{{pi}}}")
        return " ".join(terms)


def e_in_m(pi: SetPartition) -> NCSym:
    bottom = SetPartition.bottom(pi.d)
    return NCSym(pi.d, "m", {s: Fraction(1) for s in partitions(pi.d) if meet(s, pi) == bottom})


def e_to_m(f: NCSym) -> NCSym:
    if f.basis == "m":
        return f
    out = NCSym.zero(f.d, "m")
    for pi, c in f.coeffs.items():
        out = out + e_in_m(pi).scale(c)
    return out


def to_e_basis(f: NCSym) -> NCSym:
    """Rewrite an ``m``-expansion in the ``e`` basis.

    m -> p:  m_sigma = sum_{tau >= sigma} mu(sigma, tau) p_tau.
    p -> e:  the p-coefficient b_sigma equals mu(0, sigma) times the sum of
    the e-coefficients c_pi over pi >= sigma; Moebius inversion from above
    recovers c_pi.  Both passes are triangular in the refinement order.
    """
    if f.basis == "e":
        return f
    d = f.d
    upper = _upper(d)
    bottom = SetPartition.bottom(d)
    mu0 = _mobius_from(bottom)
    b: dict[SetPartition, Fraction] = defaultdict(Fraction)
    for sigma, a in f.coeffs.items():
        for tau, m in _mobius_from(sigma).items():
            b[tau] += a * m
    g = {s: c / mu0[s] for s, c in b.items() if c}
    c: dict[SetPartition, Fraction] = {}
    for pi in partitions(d):
        mu = _mobius_from(pi)
        total = sum((mu[s] * g[s] for s in upper[pi] if s in g), Fraction(0))
        if total:
            c[pi] = total
    return NCSym(d, "e", c)


def induct_m(f: NCSym) -> NCSym:
    """The map ``m_pi -> m_{pi + (d)}``, extended linearly."""
    if f.basis != "m":
        raise ValueError("induct_m expects an m-basis expansion")
    if f.d < 1:
        raise PartitionError("cannot induct a degree-0 function")
    return NCSym(f.d + 1, "m", {pi.plus(): c for pi, c in f.coeffs.items()})


def induct_e(pi: SetPartition) -> NCSym:
    """``e_pi`` raised one degree, expanded directly in the e basis.

        e_pi up = sum_{sigma <= pi} mu(0, sigma) / mu(0, sigma + (d))
                  * sum_{tau <= sigma + (d)} mu(tau, sigma + (d)) e_tau
    """
    if pi.d < 1:
        raise PartitionError("cannot induct a degree-0 function")
    d = pi.d + 1
    small_mu0 = _mobius_from(SetPartition.bottom(pi.d))
    big_mu0 = _mobius_from(SetPartition.bottom(d))
    out: dict[SetPartition, Fraction] = defaultdict(Fraction)
    for sigma in partitions(pi.d):
        if not leq(sigma, pi):
            continue
        up = sigma.plus()
        weight = Fraction(small_mu0[sigma], big_mu0[up])
        for tau in partitions(d):
            if leq(tau, up):
                out[tau] += weight * _mobius_from(tau)[up]
    return NCSym(d, "e", dict(out))


def relabel(delta: Sequence[int], f: NCSym) -> NCSym:
    """The action on positions: ``m_pi -> m_{delta(pi)}`` (same for ``e``)."""
    if sorted(delta) != list(range(1, f.d + 1)):
        raise PartitionError(f"{tuple(delta)} is not a permutation of 1..{f.d}")
    return NCSym(f.d, f.basis, {pi.relabel(delta): c for pi, c in f.coeffs.items()})


def _inverse_perm(delta: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(delta)
    for i, j in enumerate(delta, 1):
        inv[j - 1] = i
    return tuple(inv)


def Y_delcon(G: Multigraph) -> NCSym:
    """Chromatic function ``Y_G`` in the m basis, by deletion-contraction.

    The last non-loop edge is moved to position ``v_{d-1} v_d`` by a vertex
    relabelling, the rule ``Y = Y_{G - e} - (Y_{G / e}) up`` is applied there,
    and the result is relabelled back.
    """
    return _Y(G.canonical_key())


@lru_cache(maxsize=None)
def _Y(key) -> NCSym:
    d, edges = key
    G = Multigraph(d, edges)
    if G.has_loop():
        return NCSym.zero(d)
    if not edges:
        return NCSym(d, "m", {pi: Fraction(1) for pi in partitions(d)})
    e = G.q
    u, v = sorted(G.edges[e - 1])
    others = [w for w in G.vertices if w not in (u, v)]
    delta = [0] * d
    for i, w in enumerate(others + [u, v], 1):
        delta[w - 1] = i
    H = relabel_graph(G, delta)
    # edge e is now v_{d-1} v_d; contracting it keeps the label v_{d-1}
    deleted = _Y(delete_edge(H, e).canonical_key())
    contracted = _Y(contract_edge(H, e).canonical_key())
    Y_H = deleted - induct_m(contracted)
    return relabel(_inverse_perm(delta), Y_H)


def Y_stable_oracle(G: Multigraph) -> NCSym:
    """``Y_G`` from its definition: ``m_pi`` appears iff every block of ``pi`` is independent.

    A proper colouring's kernel partition has independent blocks, and each
    such partition is the kernel of some proper colouring.
    """
    if G.has_loop():
        return NCSym.zero(G.d)
    stable = {}
    for pi in partitions(G.d):
        if all(pi.rgs[u - 1] != pi.rgs[v - 1] for u, v in G.edges):
            stable[pi] = Fraction(1)
    return NCSym(G.d, "m", stable)


def leading_e_coefficient(G: Multigraph) -> Fraction:
    """Coefficient of ``e_[d]`` in ``Y_G``."""
    return to_e_basis(Y_delcon(G))[SetPartition.top(G.d)]


def unique_sink_count_via_c(G: Multigraph) -> int:
    """``(d - 1)! * c_[d]``; asserted to be a nonnegative integer."""
    value = factorial(G.d - 1) * leading_e_coefficient(G)
    assert value.denominator == 1 and value >= 0, f"(d-1)! c_[d] = {value}"
    return int(value)


@dataclass
class CSym:
    """Commutative symmetric function in the e_lambda basis."""

    d: int
    coeffs: dict[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for lam in self.coeffs:
            if sum(lam) != self.d or list(lam) != sorted(lam, reverse=True) or min(lam, default=1) < 1:
                raise PartitionError(f"{lam} is not an integer partition of {self.d}")
        self.coeffs = {k: Fraction(v) for k, v in self.coeffs.items() if v}

    def sum_by_length(self) -> dict[int, Fraction]:
        out: dict[int, Fraction] = defaultdict(Fraction)
        for lam, c in self.coeffs.items():
            out[len(lam)] += c
        return dict(sorted(out.items()))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for lam in sorted(self.coeffs, reverse=True):
            c = self.coeffs[lam]
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign}({abs(c)})·e_{{{','.join(map(str, lam))}}}")
        return " ".join(terms)


def commutativize(f: NCSym) -> CSym:
    """Let the variables commute.

    Each block ``B`` of ``pi`` contributes a sum over injective colourings
    of ``B``, which commutes to ``|B|! e_|B|``; hence ``e_pi`` becomes
    ``lambda! e_lambda`` with ``lambda`` the block sizes of ``pi`` and
    ``lambda! = prod(lambda_i!)``.
    """
    f = to_e_basis(f)
    out: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for pi, c in f.coeffs.items():
        lam = pi.shape
        out[lam] += c * prod(factorial(k) for k in lam)
    return CSym(f.d, dict(out))


def _falling(n: int, k: int) -> int:
    return prod(n - i for i in range(k))


def specialize_ones(f: NCSym, n: int) -> Fraction:
    """Value at ``x_1 = ... = x_n = 1``, ``x_i = 0`` otherwise."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = Fraction(0)
    for pi, c in f.coeffs.items():
        if f.basis == "m":
            total += c * _falling(n, pi.nblocks)
        else:
            total += c * prod(_falling(n, len(b)) for b in pi.blocks)
    return total


def as_m_dict(f: NCSym) -> Mapping[str, Fraction]:
    """``{"13/2": c, ...}`` view, handy for comparisons against literals."""
    return {str(pi): c for pi, c in e_to_m(f).coeffs.items()}

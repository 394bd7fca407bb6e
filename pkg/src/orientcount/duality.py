"""Orientation counts as signed sums over edge subsets.

``duality_count`` evaluates

    N(G; prod P_v) = 2**-m * sum_{F <= E} (-1)**|F| prod_v T_v[d_F(v)]

with ``T_v = vertex_table(d_v, P_v)``. Subsets are visited in Gray-code order,
so each step moves one edge in or out of ``F`` and touches the degree of its
two endpoints only. The running product is stored as (number of zero factors,
product of the non-zero factors) and updated by one multiplication and one
exact division per endpoint.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import product
from typing import Sequence

import numpy as np

from ._parallel import run_blocks
from .constraints import ConstraintProfile
from .errors import InvariantError, check_cap
from .graph import Graph
from .poly import rational_coeff_sum, rational_poly_mul, vertex_table

ENUMERATION_CAP = 24
COLORING_CAP = 10**7


@dataclass
class CountReport:
    algorithm: str
    count: int
    terms: int
    numerator: int | None = None
    modulus: int | None = None
    workers: int = 1
    blocks: list[tuple[int, int]] = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "count": str(self.count),
            "terms": self.terms,
            "numerator": None if self.numerator is None else str(self.numerator),
            "modulus": None if self.modulus is None else str(self.modulus),
            "workers": self.workers,
            "blocks": [list(b) for b in self.blocks],
            "seconds": self.seconds,
        }


def tables_for(g: Graph, prof: ConstraintProfile) -> list[tuple[int, ...]]:
    prof.check(g)
    return [vertex_table(d, p) for d, p in zip(g.degrees, prof)]


def _gray_block(high: int, g: Graph, tables: Sequence[Sequence[int]], low_bits: int,
                signed: bool = True) -> int:
    """Sum of ``(-1)**|F| prod_v tables[v][d_F(v)]`` over the ``2**low_bits`` subsets
    whose edges at index ``>= low_bits`` are given by the bits of ``high``.

    With ``signed=False`` the ``(-1)**|F|`` factor is dropped.
    """
    edges = g.edges
    deg = [0] * g.n
    size = 0
    for i in range(low_bits, g.m):
        if high >> (i - low_bits) & 1:
            u, v = edges[i]
            deg[u] += 1
            deg[v] += 1
            size += 1
    zeros = 0
    prod = 1
    for w in range(g.n):
        t = tables[w][deg[w]]
        if t:
            prod *= t
        else:
            zeros += 1
    sign = -1 if signed and size & 1 else 1
    flip = -1 if signed else 1
    total = sign * prod if not zeros else 0
    in_f = [False] * low_bits
    eu = [e[0] for e in edges[:low_bits]]
    ev = [e[1] for e in edges[:low_bits]]
    for i in range(1, 1 << low_bits):
        b = (i & -i).bit_length() - 1
        step = -1 if in_f[b] else 1
        in_f[b] = not in_f[b]
        for w in (eu[b], ev[b]):
            tw = tables[w]
            old = tw[deg[w]]
            deg[w] += step
            new = tw[deg[w]]
            if old:
                if new:
                    prod = prod * new // old
                else:
                    prod //= old
                    zeros += 1
            elif new:
                prod *= new
                zeros -= 1
        sign *= flip
        if not zeros:
            total += sign * prod
    return total


def shard_layout(m: int, workers: int) -> tuple[int, list[int]]:
    """Number of low (walked) edge bits and the fixed high-bit values, one per block."""
    k = min(m, max(0, math.ceil(math.log2(workers)))) if workers > 1 else 0
    return m - k, list(range(1 << k))


def duality_sum(g: Graph, prof: ConstraintProfile, *, workers: int = 1) -> int:
    """The integer ``sum_F (-1)**|F| prod_v T_v[d_F(v)]`` (before division by ``2**m``)."""
    tables = tables_for(g, prof)
    low, highs = shard_layout(g.m, workers)
    parts = run_blocks(partial(_gray_block, g=g, tables=tables, low_bits=low), highs, workers)
    return sum(parts)


def duality_sum_naive(g: Graph, prof: ConstraintProfile) -> int:
    """Same sum with every term recomputed from scratch; benchmark baseline."""
    tables = tables_for(g, prof)
    total = 0
    for mask in range(1 << g.m):
        deg = g.subset_degrees(mask)
        term = 1
        for w in range(g.n):
            term *= tables[w][deg[w]]
        total += -term if bin(mask).count("1") & 1 else term
    return total


def duality_count(g: Graph, prof: ConstraintProfile, *, workers: int = 1,
                  cap: int = ENUMERATION_CAP) -> CountReport:
    check_cap(g.m, cap, "edge count for the subset sum")
    t0 = time.perf_counter()
    tables = tables_for(g, prof)
    low, highs = shard_layout(g.m, workers)
    parts = run_blocks(partial(_gray_block, g=g, tables=tables, low_bits=low), highs, workers)
    s = sum(parts)
    modulus = 1 << g.m
    count, r = divmod(s, modulus)
    if r:
        raise InvariantError(f"subset sum {s} is not divisible by 2**{g.m}")
    return CountReport(
        algorithm="duality",
        count=count,
        terms=modulus,
        numerator=s,
        modulus=modulus,
        workers=workers,
        blocks=[(h << low, (h + 1) << low) for h in highs],
        seconds=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class GaugePair:
    """Weights ``alpha`` and nodes ``beta`` replacing the +-1 signs of the subset sum.

    Valid pairs satisfy ``sum(alpha) == 0``, ``sum(alpha * beta**2) == 0`` and
    ``sum(alpha * beta) == 1`` exactly.
    """

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def __post_init__(self):
        a = tuple(Fraction(x) for x in self.alpha)
        b = tuple(Fraction(x) for x in self.beta)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        if len(a) != len(b) or len(a) < 2:
            raise ValueError("alpha and beta must have the same length N >= 2")
        if sum(a) != 0:
            raise ValueError(f"sum(alpha) = {sum(a)}, expected 0")
        if sum(x * y for x, y in zip(a, b)) != 1:
            raise ValueError(f"sum(alpha*beta) = {sum(x * y for x, y in zip(a, b))}, expected 1")
        if sum(x * y * y for x, y in zip(a, b)) != 0:
            raise ValueError(f"sum(alpha*beta^2) = {sum(x * y * y for x, y in zip(a, b))}, expected 0")

    @property
    def size(self) -> int:
        return len(self.alpha)

    @classmethod
    def signs(cls) -> "GaugePair":
        """The pair that reproduces the plain +-1 subset sum."""
        return cls((Fraction(1, 2), Fraction(-1, 2)), (Fraction(1), Fraction(-1)))

    @classmethod
    def parse(cls, text: str) -> "GaugePair":
        """Two non-blank lines of space-separated rationals ``p/q``: alpha, then beta."""
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
        if len(lines) != 2:
            raise ValueError("gauge text needs exactly two lines (alpha, beta)")
        return cls(*(tuple(Fraction(x) for x in ln.split()) for ln in lines))


def _coloring_dfs(g: Graph, colors: int, edge_weight, vertex_factor, one, zero, mul, is_zero,
                  prune: bool = True):
    """Sum over all colorings ``f: E -> range(colors)`` of
    ``prod_e edge_weight[f(e)] * prod_v vertex_factor(v, sorted colors at v)``.

    Each vertex factor is applied as soon as its last incident edge is coloured,
    and (with ``prune``) zero partial products cut the subtree. Returns
    (sum, leaves reached).
    """
    m = g.m
    closes: list[list[int]] = [[] for _ in range(m)]
    isolated = []
    for v, inc in enumerate(g.incidence):
        if inc:
            closes[max(inc)].append(v)
        else:
            isolated.append(v)
    f = [0] * m
    base = one
    for v in isolated:
        base = mul(base, vertex_factor(v, ()))
    total = None
    leaves = 0

    def rec(i, acc):
        nonlocal total, leaves
        if i == m:
            leaves += 1
            total = acc if total is None else total + acc
            return
        for c in range(colors):
            f[i] = c
            nxt = mul(acc, edge_weight[c])
            for v in closes[i]:
                if prune and is_zero(nxt):
                    break
                nxt = mul(nxt, vertex_factor(v, tuple(sorted(f[e] for e in g.incidence[v]))))
            if not (prune and is_zero(nxt)):
                rec(i + 1, nxt)

    if not (prune and is_zero(base)):
        rec(0, base)
    return (total if total is not None else zero), leaves


def _coloring_frontier(g: Graph, colors: int, edge_weight, vertex_factor, one, is_zero):
    """Same sum as :func:`_coloring_dfs`, merging colourings that agree on the
    colour counts seen so far at every partially coloured vertex.

    Returns (sum, number of state transitions).
    """
    m = g.m
    last = {v: max(inc) for v, inc in enumerate(g.incidence) if inc}
    closes: list[list[int]] = [[] for _ in range(m)]
    for v, i in last.items():
        closes[i].append(v)
    base = one
    for v, inc in enumerate(g.incidence):
        if not inc:
            base = base * vertex_factor(v, ())
    states = {} if is_zero(base) else {(): base}
    steps = 0
    for i, (u, w) in enumerate(g.edges):
        nxt: dict = {}
        for key, acc in states.items():
            active = dict(key)
            for c in range(colors):
                steps += 1
                counts = dict(active)
                for x in (u, w):
                    cur = list(counts.get(x, (0,) * colors))
                    cur[c] += 1
                    counts[x] = tuple(cur)
                val = acc * edge_weight[c]
                for x in closes[i]:
                    if is_zero(val):
                        break
                    cols = tuple(k for k, n in enumerate(counts.pop(x)) for _ in range(n))
                    val = val * vertex_factor(x, cols)
                if is_zero(val):
                    continue
                k2 = tuple(sorted(counts.items()))
                nxt[k2] = nxt[k2] + val if k2 in nxt else val
        states = nxt
    total = sum(states.values(), one * 0) if states else one * 0
    return total, steps


def generalized_duality_count(g: Graph, prof: ConstraintProfile, gauge: GaugePair, *,
                              cap: int = COLORING_CAP, method: str = "frontier") -> CountReport:
    """Sum over colourings ``f: E -> [N]`` of
    ``prod_e alpha(f(e)) * prod_v C(prod_{e at v} (1 + beta(f(e)) z); P_v)``.

    ``method="enumerate"`` visits colourings one by one (depth first, cutting
    zero subtrees); ``"frontier"`` merges colourings with equal colour counts at
    the partially coloured vertices. ``terms`` counts leaves or transitions.
    """
    prof.check(g)
    check_cap(gauge.size ** g.m, cap, "colouring count")
    t0 = time.perf_counter()
    cache: dict = {}

    def vertex_factor(v, cols):
        key = (v, cols)
        if key not in cache:
            poly = [Fraction(1)]
            for c in cols:
                poly = rational_poly_mul(poly, [Fraction(1), gauge.beta[c]])
            cache[key] = Fraction(rational_coeff_sum(poly, prof[v]))
        return cache[key]

    if method == "enumerate":
        value, leaves = _coloring_dfs(
            g, gauge.size, gauge.alpha, vertex_factor, Fraction(1), Fraction(0),
            lambda a, b: a * b, lambda a: a == 0,
        )
    elif method == "frontier":
        value, leaves = _coloring_frontier(g, gauge.size, gauge.alpha, vertex_factor,
                                           Fraction(1), lambda a: a == 0)
    else:
        raise ValueError(f"unknown method {method!r}")
    if value.denominator != 1:
        raise InvariantError(f"colouring sum {value} is not an integer")
    return CountReport(algorithm="gauge", count=int(value), terms=leaves,
                       seconds=time.perf_counter() - t0)


@dataclass(frozen=True)
class MCEstimate:
    samples: int
    mean: Fraction
    stderr: float
    seed: int | None
    exhaustive: bool = False

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "mean": str(self.mean),
            "stderr": self.stderr,
            "seed": self.seed,
            "exhaustive": self.exhaustive,
        }


def _statistics(neg: np.ndarray, g: Graph, tables, dtype) -> list[int]:
    """Per-row statistic ``prod_e eps_e * prod_v T_v[#negative edges at v]``.

    ``neg`` is a 0/1 array (rows = draws, columns = edges), 1 meaning ``eps_e = -1``.
    """
    inc = np.zeros((g.m, g.n), dtype=np.int64)
    for i, (u, v) in enumerate(g.edges):
        inc[i, u] += 1
        inc[i, v] += 1
    k = neg.astype(np.int64) @ inc
    val = np.ones(len(neg), dtype=dtype)
    for w in range(g.n):
        val = val * np.array(tables[w], dtype=dtype)[k[:, w]]
    odd = neg.sum(axis=1) & 1
    val = np.where(odd == 1, -val, val)
    return [int(x) for x in val.tolist()]


def mc_estimate(g: Graph, prof: ConstraintProfile, samples: int = 10_000, seed: int | None = 0, *,
                exhaustive: bool = False, batch: int = 1 << 15) -> MCEstimate:
    """Average of the random-sign statistic, an unbiased estimator of the count.

    Each draw picks independent fair signs ``eps_e`` and evaluates
    ``prod_e eps_e * prod_v C(prod_{e at v} (1 + eps_e z); P_v)``. Draws come
    from ``numpy.random.default_rng(seed)`` (PCG64). With ``exhaustive=True``
    every sign vector is used once, ``samples`` is ignored and the mean is the
    exact count.
    """
    tables = tables_for(g, prof)
    bound = sum(max(abs(x) for x in t).bit_length() for t in tables)
    dtype = np.int64 if bound < 62 else object
    total = 0
    total_sq = 0
    if exhaustive:
        check_cap(g.m, ENUMERATION_CAP, "edge count for exhaustive sign enumeration")
        samples = 1 << g.m
        shifts = np.arange(g.m, dtype=np.int64)
        for lo in range(0, samples, batch):
            masks = np.arange(lo, min(samples, lo + batch), dtype=np.int64)
            stats = _statistics((masks[:, None] >> shifts) & 1, g, tables, dtype)
            total += sum(stats)
            total_sq += sum(x * x for x in stats)
    else:
        if samples < 1:
            raise ValueError("samples must be >= 1")
        rng = np.random.default_rng(seed)
        done = 0
        while done < samples:
            b = min(batch, samples - done)
            stats = _statistics(rng.integers(0, 2, size=(b, g.m), dtype=np.int8), g, tables, dtype)
            total += sum(stats)
            total_sq += sum(x * x for x in stats)
            done += b
    mean = Fraction(total, samples)
    if samples > 1:
        var = (Fraction(total_sq) - Fraction(total * total, samples)) / (samples - 1)
        stderr = math.sqrt(float(var) / samples)
    else:
        stderr = float("inf")
    return MCEstimate(samples=samples, mean=mean, stderr=stderr,
                      seed=None if exhaustive else seed, exhaustive=exhaustive)

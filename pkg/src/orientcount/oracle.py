"""Brute-force ground truth.

Two unrelated routes to the orientation count: direct enumeration of all
``2**m`` orientations, and expansion of the orientation polynomial
``prod_{uv in E} (z_u + z_v)`` into a table of out-degree vectors. Both are
kept deliberately simple.

An orientation is an ``m``-bit mask. Bit ``i`` clear means edge ``i = (u, v)``
points ``u -> v`` (``u`` gains out-degree); bit set means ``v -> u``.
"""

from __future__ import annotations

from collections import Counter
from functools import partial

import numpy as np

from ._parallel import run_blocks
from .constraints import ConstraintProfile
from .errors import check_cap
from .graph import Graph

ENUMERATION_CAP = 24
_CHUNK = 1 << 16


def out_degrees(g: Graph, mask: int) -> list[int]:
    out = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        out[v if mask >> i & 1 else u] += 1
    return out


def _count_block(bounds, g: Graph, prof: ConstraintProfile) -> int:
    lo, hi = bounds
    m, n = g.m, g.n
    tail = np.zeros((m, n), dtype=np.int64)
    head = np.zeros((m, n), dtype=np.int64)
    for i, (u, v) in enumerate(g.edges):
        tail[i, u] = 1
        head[i, v] = 1
    allowed = [np.array([k in prof[v] for k in range(g.degree(v) + 1)]) for v in range(n)]
    shifts = np.arange(m, dtype=np.int64)
    total = 0
    for start in range(lo, hi, _CHUNK):
        masks = np.arange(start, min(hi, start + _CHUNK), dtype=np.int64)
        bits = (masks[:, None] >> shifts) & 1
        outdeg = (1 - bits) @ tail + bits @ head
        ok = np.ones(len(masks), dtype=bool)
        for v in range(n):
            ok &= allowed[v][outdeg[:, v]]
        total += int(ok.sum())
    return total


def brute_force_count(g: Graph, prof: ConstraintProfile, *, cap: int = ENUMERATION_CAP,
                      workers: int = 1) -> int:
    """Number of orientations whose out-degree at each ``v`` lies in ``prof[v]``."""
    prof.check(g)
    check_cap(g.m, cap, "edge count for brute-force enumeration")
    total = 1 << g.m
    if g.n == 0:
        return 1
    step = max(1, -(-total // max(workers, 1)))
    blocks = [(lo, min(total, lo + step)) for lo in range(0, total, step)]
    return sum(run_blocks(partial(_count_block, g=g, prof=prof), blocks, workers))


def expand_orientation_polynomial(g: Graph, *, cap: int = ENUMERATION_CAP) -> dict[tuple[int, ...], int]:
    """Monomial table of ``prod_{uv in E} (z_u + z_v)``: exponent vector -> coefficient.

    The exponent vector is an out-degree vector and its coefficient is the number
    of orientations realising it.
    """
    check_cap(g.m, cap, "edge count for polynomial expansion")
    terms: Counter = Counter({(0,) * g.n: 1})
    for u, v in g.edges:
        nxt: Counter = Counter()
        for vec, c in terms.items():
            a = list(vec)
            a[u] += 1
            nxt[tuple(a)] += c
            a[u] -= 1
            a[v] += 1
            nxt[tuple(a)] += c
        terms = nxt
    return dict(terms)


def count_from_expansion(expansion: dict[tuple[int, ...], int], prof: ConstraintProfile) -> int:
    """Sum of the coefficients whose exponent vector lies in ``prod_v prof[v]``."""
    total = 0
    for vec, c in expansion.items():
        if len(vec) != len(prof):
            raise ValueError(f"expansion is over {len(vec)} vertices, profile over {len(prof)}")
        if all(k in p for k, p in zip(vec, prof)):
            total += c
    return total

"""Closed forms and specialised sums for particular constraint profiles.

* even orientations (out-degree even everywhere), per connected component;
* N-divisible orientations through the edge-colouring sum with N-th roots of
  unity, evaluated exactly in the group ring Z[z]/(z^N - 1);
* mixed orientations: Eulerian on one part, even on the other, with the
  existence lower bound;
* Eulerian orientations of regular graphs through the subgraph degree
  enumerator ``F_G`` at the weights ``s_k``.

Functions that take ``verify=True`` cross-check their result against the
generic subset sum (or the brute-force oracle) and raise
:class:`~orientcount.errors.InvariantError` on disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Iterator

from .constraints import ConstraintProfile
from .duality import COLORING_CAP, ENUMERATION_CAP, _coloring_dfs, _gray_block, duality_count
from .errors import InvariantError, check_cap
from .graph import Graph, VertexPartition, connected_components, induced_subgraph
from .oracle import brute_force_count
from .poly import AdmissibleSet, IntPoly, cyclotomic, poly_divmod


def even_orientation_count(g: Graph) -> int:
    """Orientations with every out-degree even: ``prod_c 2**(|E_c|-|V_c|) * (1 + (-1)**|E_c|)``."""
    comps = connected_components(g)
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    edge_count = [0] * len(comps)
    for u, _ in g.edges:
        edge_count[comp_of[u]] += 1
    total = 1
    for c, e in zip(comps, edge_count):
        if e % 2:
            return 0
        total <<= e - len(c) + 1
    return total


class CyclicElement:
    """Element of Z[z]/(z^N - 1): integer coefficients of ``1, z, ..., z^(N-1)``.

    ``z**j`` stands for ``exp(2*pi*i*j/N)``; the evaluation map to the complex
    numbers is a ring homomorphism, so identities proved here hold there too.
    """

    __slots__ = ("c",)

    def __init__(self, c):
        self.c = tuple(c)

    @classmethod
    def power(cls, j: int, n: int, coeff: int = 1) -> "CyclicElement":
        c = [0] * n
        c[j % n] = coeff
        return cls(c)

    def __add__(self, other):
        return CyclicElement(a + b for a, b in zip(self.c, other.c))

    def __mul__(self, other):
        n = len(self.c)
        out = [0] * n
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        out[(i + j) % n] += a * b
        return CyclicElement(out)

    def __eq__(self, other):
        return isinstance(other, CyclicElement) and self.c == other.c

    def __repr__(self):
        return f"CyclicElement({list(self.c)})"

    def is_zero(self) -> bool:
        return not any(self.c)

    def to_integer(self) -> int:
        """The value at a primitive N-th root of unity, which must be a rational integer."""
        n = len(self.c)
        _, r = poly_divmod(IntPoly(self.c), cyclotomic(n))
        if r.degree > 0:
            raise InvariantError(f"{self} does not reduce to an integer modulo Phi_{n}")
        return r.coeff(0)


@dataclass(frozen=True)
class ColoringFilter:
    """Colourings in which no vertex sees all ``modulus`` colours."""

    modulus: int

    def vertex_ok(self, colors) -> bool:
        return len(set(colors)) <= self.modulus - 1

    def passes(self, g: Graph, f) -> bool:
        return all(self.vertex_ok([f[e] for e in inc]) for inc in g.incidence)


def n_divisible_sum(g: Graph, modulus: int, *, filtered: bool = True,
                    cap: int = COLORING_CAP) -> tuple[CyclicElement, int]:
    """``sum_f prod_e w^f(e) prod_v sum_j prod_{e at v} (1 - w^(j - f(e)))`` in Z[z]/(z^N - 1).

    With ``filtered`` the outer sum runs over colourings passing
    :class:`ColoringFilter` and ``j`` over the colours absent at ``v``;
    otherwise over all colourings and all ``j``. Returns (sum, colourings used).
    """
    n = modulus
    if n < 2:
        raise ValueError("modulus must be >= 2")
    check_cap(n ** g.m, cap, "colouring count")
    filt = ColoringFilter(n)
    one = CyclicElement.power(0, n)
    cache: dict = {}

    def bracket(v, cols):
        if cols not in cache:
            if filtered and not filt.vertex_ok(cols):
                cache[cols] = CyclicElement([0] * n)
            else:
                js = [j for j in range(n) if not filtered or j not in cols]
                acc = CyclicElement([0] * n)
                for j in js:
                    term = one
                    for c in cols:
                        term = term * (one + CyclicElement.power(j - c, n, -1))
                    acc = acc + term
                cache[cols] = acc
        return cache[cols]

    weights = [CyclicElement.power(c, n) for c in range(n)]
    return _coloring_dfs(g, n, weights, bracket, one, CyclicElement([0] * n),
                         lambda a, b: a * b, CyclicElement.is_zero, prune=filtered)


def n_divisible_count(g: Graph, modulus: int, *, cap: int = COLORING_CAP,
                      verify: bool = True) -> int:
    """Orientations with every out-degree divisible by ``modulus``, via edge colourings."""
    s, _ = n_divisible_sum(g, modulus, filtered=True, cap=cap)
    value = s.to_integer()
    scale = modulus ** (g.m + g.n)
    count, r = divmod(value if g.m % 2 == 0 else -value, scale)
    if r:
        raise InvariantError(f"colouring sum {value} is not divisible by {modulus}^{g.m + g.n}")
    if verify and g.m <= ENUMERATION_CAP:
        ref = duality_count(g, ConstraintProfile.uniform(g, AdmissibleSet.residue(0, modulus))).count
        if ref != count:
            raise InvariantError(f"colouring sum gives {count}, subset sum gives {ref}")
    return count


def _check_mixed(g: Graph, part: VertexPartition) -> None:
    part.check(g)
    odd = sorted(v for v in part.part1 if g.degree(v) % 2)
    if odd:
        raise ValueError(f"vertices {odd} in the Eulerian part have odd degree")


def _v2_components(g: Graph, part: VertexPartition) -> list[frozenset[int]]:
    sub, relabel = induced_subgraph(g, part.part2)
    back = {i: v for v, i in relabel.items()}
    return [frozenset(back[i] for i in c) for c in connected_components(sub)]


def mixed_prefactor(g: Graph, part: VertexPartition) -> Fraction:
    """``prod_{V1} C(d, d/2) / 2**(d/2) * 2**(sum_{V2} d / 2 - |V2|)``.

    Isolated vertices of ``V2`` are left out of ``|V2|``: their coefficient
    sum is 1, not ``2**(d - 1)``.
    """
    _check_mixed(g, part)
    deg = g.degrees
    out = Fraction(1)
    for v in part.part1:
        out *= Fraction(comb(deg[v], deg[v] // 2), 2 ** (deg[v] // 2))
    half_sum = sum(deg[v] for v in part.part2) // 2
    live = sum(1 for v in part.part2 if deg[v])
    return out * Fraction(2) ** (half_sum - live)


def mixed_support(g: Graph, part: VertexPartition) -> Iterator[int]:
    """Edge masks ``F`` with even ``d_F`` on ``V1`` and ``d_F(v)`` in ``{0, d_v}`` on ``V2``.

    Each component of ``G[V2]`` takes all of its incident edges or none; only
    edges with both ends in ``V1`` are enumerated freely.
    """
    _check_mixed(g, part)
    forced = []
    for comp in _v2_components(g, part):
        mask = 0
        for v in comp:
            for e in g.incidence[v]:
                mask |= 1 << e
        if mask:
            forced.append(mask)
    free = [i for i, (u, v) in enumerate(g.edges) if u in part.part1 and v in part.part1]
    v1 = sorted(part.part1)
    for choice in range(1 << len(forced)):
        base = 0
        for j, mask in enumerate(forced):
            if choice >> j & 1:
                base |= mask
        for sub in range(1 << len(free)):
            f = base
            for j, e in enumerate(free):
                if sub >> j & 1:
                    f |= 1 << e
            deg = g.subset_degrees(f)
            if all(deg[v] % 2 == 0 for v in v1):
                yield f


def mixed_count(g: Graph, part: VertexPartition, *, cap: int = ENUMERATION_CAP,
                verify: bool = True) -> int:
    """Orientations that are Eulerian on ``part1`` and even on ``part2``."""
    _check_mixed(g, part)
    check_cap(g.m, cap, "edge count for the mixed sum")
    deg = g.degrees
    total = Fraction(0)
    for f in mixed_support(g, part):
        df = g.subset_degrees(f)
        w = Fraction(1)
        for v in part.part1:
            w *= Fraction(comb(deg[v] // 2, df[v] // 2), comb(deg[v], df[v]))
        if sum(df[v] for v in part.part2) // 2 % 2:
            w = -w
        total += w
    value = mixed_prefactor(g, part) * total
    if value.denominator != 1 or value < 0:
        raise InvariantError(f"mixed sum evaluated to {value}, not a non-negative integer")
    count = int(value)
    if verify:
        ref = brute_force_count(g, ConstraintProfile.mixed(g, part.part1), cap=cap)
        if ref != count:
            raise InvariantError(f"mixed sum gives {count}, brute force gives {ref}")
    return count


def mixed_lower_bound(g: Graph, part: VertexPartition, *, check: bool = True,
                      cap: int = ENUMERATION_CAP) -> tuple[Fraction, bool]:
    """Existence bound for mixed orientations and whether its hypothesis holds.

    The flag is true when every component of ``G[V2]`` has degree sum (in ``G``)
    divisible by 4. With ``check`` and a true flag, the exact count is computed
    and required to be at least the bound.
    """
    bound = mixed_prefactor(g, part)
    deg = g.degrees
    flag = all(sum(deg[v] for v in comp) % 4 == 0 for comp in _v2_components(g, part))
    if check and flag and g.m <= cap:
        count = mixed_count(g, part, cap=cap, verify=False)
        if count < bound:
            raise InvariantError(f"mixed count {count} is below the bound {bound}")
    return bound, flag


@dataclass(frozen=True)
class RegularWeights:
    """``s_k = C(d, d/2) C(d/2, k/2) / (2**(d/2) C(d, k))`` for even ``k``, 0 for odd ``k``."""

    d: int
    s: tuple[Fraction, ...]

    @classmethod
    def for_degree(cls, d: int) -> "RegularWeights":
        if d < 0 or d % 2:
            raise ValueError(f"degree {d} is not a non-negative even number")
        h = d // 2
        s = tuple(
            Fraction(comb(d, h) * comb(h, k // 2), 2 ** h * comb(d, k)) if k % 2 == 0 else Fraction(0)
            for k in range(d + 1)
        )
        return cls(d, s)


def degree_enumerator(g: Graph, x) -> Fraction:
    """``F_G(x) = sum_{A <= E} prod_v x[d_A(v)]`` for exact rational weights ``x``."""
    x = [Fraction(t) for t in x]
    if len(x) <= max(g.degrees, default=0):
        raise ValueError("need a weight for every degree up to the maximum degree")
    den = lcm(*(t.denominator for t in x))
    ints = [int(t * den) for t in x]
    s = _gray_block(0, g, [ints] * g.n, g.m, signed=False)
    return Fraction(s, den ** g.n)


def eulerian_regular_count(g: Graph, *, cap: int = ENUMERATION_CAP, verify: bool = True) -> int:
    """Eulerian orientations of a ``d``-regular graph with ``d`` even, as ``F_G(s_0, ..., s_d)``."""
    if not g.is_regular():
        raise ValueError("graph is not regular")
    d = g.degrees[0] if g.n else 0
    weights = RegularWeights.for_degree(d)
    check_cap(g.m, cap, "edge count for the degree enumerator")
    value = degree_enumerator(g, weights.s)
    if value.denominator != 1:
        raise InvariantError(f"F_G(s) = {value} is not an integer")
    count = int(value)
    if verify:
        ref = duality_count(g, ConstraintProfile.half(g), cap=cap).count
        if ref != count:
            raise InvariantError(f"F_G(s) gives {count}, subset sum gives {ref}")
    return count

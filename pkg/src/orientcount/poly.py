"""Exact univariate integer polynomials, admissible degree sets and the
coefficient-sum functional ``coeff_sum(q, P)``.

Exact rationals are :class:`fractions.Fraction` throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

BigRational = Fraction


class IntPoly:
    """Dense polynomial over the integers; ``coeffs[l]`` multiplies ``z**l``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, j: int, c: int = 1) -> "IntPoly":
        return cls([0] * j + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, l: int) -> int:
        return self.coeffs[l] if 0 <= l < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, IntPoly) else -int(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, j: int) -> "IntPoly":
        """Multiply by ``z**j`` (``j >= 0``)."""
        if j < 0:
            raise ValueError("shift must be non-negative")
        return IntPoly([0] * j + list(self.coeffs)) if self.coeffs else self


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a.coeffs or not b.coeffs:
        return IntPoly()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPoly(out)


def binom_expand(k: int, t: int) -> IntPoly:
    """``(1 - z)**k * (1 + z)**t`` built from binomial coefficients."""
    if k < 0 or t < 0:
        raise ValueError("exponents must be non-negative")
    minus = [(-1) ** i * comb(k, i) for i in range(k + 1)]
    plus = [comb(t, i) for i in range(t + 1)]
    return poly_mul(IntPoly(minus), IntPoly(plus))


@dataclass(frozen=True)
class AdmissibleSet:
    """A subset of the integers allowed as an out-degree.

    ``kind`` is one of ``"set"`` (finite, ``values`` sorted; a singleton is a
    one-element set), ``"residue"`` (``values == (r,)`` modulo ``modulus``) or
    ``"all"``. ``shift`` represents ``P - shift``: ``x`` is a member iff
    ``x + shift`` is in the base set.
    """

    kind: str
    values: tuple[int, ...] = ()
    modulus: int = 0
    shift: int = 0

    def __post_init__(self):
        if self.kind == "set":
            vals = tuple(sorted(set(int(x) for x in self.values)))
            object.__setattr__(self, "values", vals)
        elif self.kind == "residue":
            if self.modulus < 1:
                raise ValueError("modulus must be >= 1")
            (r,) = self.values
            if not 0 <= r < self.modulus:
                raise ValueError(f"residue {r} not in [0, {self.modulus})")
        elif self.kind != "all":
            raise ValueError(f"unknown admissible set kind {self.kind!r}")

    @classmethod
    def singleton(cls, a: int) -> "AdmissibleSet":
        return cls("set", (a,))

    @classmethod
    def finite(cls, values: Iterable[int]) -> "AdmissibleSet":
        return cls("set", tuple(values))

    @classmethod
    def residue(cls, r: int, modulus: int) -> "AdmissibleSet":
        return cls("residue", (r,), modulus)

    @classmethod
    def all(cls) -> "AdmissibleSet":
        return cls("all")

    def __contains__(self, x: int) -> bool:
        x += self.shift
        if self.kind == "all":
            return True
        if self.kind == "residue":
            return x % self.modulus == self.values[0]
        return x in self.values

    def shifted(self, j: int) -> "AdmissibleSet":
        """The set ``P - j``."""
        return AdmissibleSet(self.kind, self.values, self.modulus, self.shift + j)

    def members(self, lo: int, hi: int) -> list[int]:
        """Members in the closed range ``[lo, hi]``."""
        return [x for x in range(lo, hi + 1) if x in self]

    def reflect(self, d: int) -> "AdmissibleSet":
        """``{d - p : p in P}`` restricted to ``[0, d]``."""
        return AdmissibleSet.finite(d - p for p in self.members(0, d))

    def __str__(self):
        if self.kind == "all":
            base = "any"
        elif self.kind == "residue":
            base = f"mod {self.modulus} = {self.values[0]}"
        else:
            base = "set {" + ",".join(map(str, self.values)) + "}"
        return base if not self.shift else f"({base}) - {self.shift}"


def coeff_sum(q: IntPoly, p: AdmissibleSet) -> int:
    """Sum of the coefficients of ``z**l`` in ``q`` over ``l`` in ``p``."""
    return sum(c for l, c in enumerate(q.coeffs) if l in p)


@lru_cache(maxsize=4096)
def vertex_table(d: int, p: AdmissibleSet) -> tuple[int, ...]:
    """``T[k] = coeff_sum((1 - z)**k * (1 + z)**(d - k), p)`` for ``k = 0..d``."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return tuple(coeff_sum(binom_expand(k, d - k), p) for k in range(d + 1))


def rational_poly_mul(a: Sequence, b: Sequence) -> list:
    """Product of dense coefficient lists over any exact ring (ints, Fractions)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def rational_coeff_sum(coeffs: Sequence, p: AdmissibleSet):
    return sum((c for l, c in enumerate(coeffs) if l in p), 0)


def poly_divmod(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Quotient and remainder for a monic (leading coefficient +-1) divisor ``b``."""
    if not b.coeffs or abs(b.coeffs[-1]) != 1:
        raise ValueError("divisor must have leading coefficient +-1")
    lead = b.coeffs[-1]
    rem = list(a.coeffs)
    db = b.degree
    quot = [0] * max(0, len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] * lead
        if c:
            quot[i - db] = c
            for j, y in enumerate(b.coeffs):
                rem[i - db + j] -= c * y
    return IntPoly(quot), IntPoly(rem[:db])


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The ``n``-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    q = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            q, r = poly_divmod(q, cyclotomic(d))
            assert not r.coeffs
    return q

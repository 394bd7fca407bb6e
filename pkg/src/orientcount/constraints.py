"""Per-vertex constraint profiles and the constraint mini-language.

Grammar (one rule per line; ``;`` also separates rules)::

    rule   := target ":" form
    target := "all" | "vertex" INT
    form   := "mod" INT "=" INT      residue class, 0 <= r < N
            | "half"                 {d_v / 2}; empty when d_v is odd
            | "set" "{" INT,... "}"  finite set, may be empty
            | "any"                  every integer

Blank lines and lines starting with ``#`` are ignored. Rules apply in order, so
later rules override earlier ones. Vertices no rule touches get ``any``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph
from .poly import AdmissibleSet


class ConstraintParseError(ValueError):
    pass


@dataclass(frozen=True)
class ConstraintProfile:
    """One admissible set per vertex, indexed by vertex id."""

    sets: tuple[AdmissibleSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))

    def __getitem__(self, v: int) -> AdmissibleSet:
        return self.sets[v]

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    @classmethod
    def uniform(cls, g: Graph, p: AdmissibleSet) -> "ConstraintProfile":
        return cls((p,) * g.n)

    @classmethod
    def half(cls, g: Graph) -> "ConstraintProfile":
        """Eulerian profile ``P_v = {d_v / 2}``."""
        return cls(tuple(_half(d) for d in g.degrees))

    @classmethod
    def mixed(cls, g: Graph, part1: Iterable[int]) -> "ConstraintProfile":
        """``{d_v / 2}`` on ``part1``, even out-degree elsewhere."""
        p1 = set(part1)
        even = AdmissibleSet.residue(0, 2)
        return cls(tuple(_half(d) if v in p1 else even for v, d in enumerate(g.degrees)))

    def check(self, g: Graph) -> None:
        if len(self.sets) != g.n:
            raise ValueError(f"profile has {len(self.sets)} entries for a graph on {g.n} vertices")

    def reflect(self, g: Graph) -> "ConstraintProfile":
        """``d_v - P_v`` at every vertex (the profile of the reversed orientations)."""
        return ConstraintProfile(tuple(p.reflect(d) for p, d in zip(self.sets, g.degrees)))

    def restrict(self, vertices: Sequence[int]) -> "ConstraintProfile":
        return ConstraintProfile(tuple(self.sets[v] for v in sorted(vertices)))


def _half(d: int) -> AdmissibleSet:
    return AdmissibleSet.singleton(d // 2) if d % 2 == 0 else AdmissibleSet.finite(())


_RULE = re.compile(r"^\s*(all|vertex\s+(\d+))\s*:\s*(.*?)\s*$")
_MOD = re.compile(r"^mod\s+(\d+)\s*=\s*(\d+)$")
_SET = re.compile(r"^set\s*\{\s*(.*?)\s*\}$")


def _parse_form(form: str, where: str):
    if form == "any":
        return "any"
    if form == "half":
        return "half"
    m = _MOD.match(form)
    if m:
        n, r = int(m.group(1)), int(m.group(2))
        if n < 1 or r >= n:
            raise ConstraintParseError(f"{where}: need N >= 1 and 0 <= r < N in {form!r}")
        return AdmissibleSet.residue(r, n)
    m = _SET.match(form)
    if m:
        body = m.group(1)
        try:
            vals = [int(x) for x in body.split(",")] if body else []
        except ValueError:
            raise ConstraintParseError(f"{where}: bad integer list in {form!r}") from None
        return AdmissibleSet.finite(vals)
    raise ConstraintParseError(f"{where}: unknown constraint form {form!r}")


def parse_constraints(text: str, g: Graph) -> ConstraintProfile:
    """Resolve a constraint description against ``g``."""
    sets: list[AdmissibleSet] = [AdmissibleSet.all()] * g.n
    rules = [r for line in text.splitlines() for r in line.split(";")]
    for idx, rule in enumerate(rules, start=1):
        if not rule.strip() or rule.strip().startswith("#"):
            continue
        where = f"rule {idx}"
        m = _RULE.match(rule)
        if not m:
            raise ConstraintParseError(f"{where}: cannot parse {rule.strip()!r}")
        form = _parse_form(m.group(3), where)
        if m.group(2) is None:
            targets = range(g.n)
        else:
            v = int(m.group(2))
            if v >= g.n:
                raise ConstraintParseError(f"{where}: vertex {v} not in graph on {g.n} vertices")
            targets = [v]
        for v in targets:
            if form == "any":
                sets[v] = AdmissibleSet.all()
            elif form == "half":
                sets[v] = _half(g.degree(v))
            else:
                sets[v] = form
    return ConstraintProfile(tuple(sets))

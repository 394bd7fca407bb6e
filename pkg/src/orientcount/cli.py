"""``orientcount count``: run one counting algorithm on an edge-list file.

Exit status: 0 success, 2 unreadable or invalid input, 3 enumeration cap
refused, 4 internal invariant failure (a bug; please report it).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .constraints import ConstraintParseError, ConstraintProfile, parse_constraints
from .duality import (COLORING_CAP, ENUMERATION_CAP, GaugePair, duality_count,
                      generalized_duality_count, mc_estimate)
from .errors import CapExceededError, InvariantError
from .graph import Graph, GraphParseError, VertexPartition, parse_graph
from .oracle import brute_force_count, count_from_expansion, expand_orientation_polynomial
from .poly import AdmissibleSet
from .special import eulerian_regular_count, even_orientation_count, mixed_count, n_divisible_count

ALGORITHMS = ("brute", "expansion", "duality", "gauge", "even", "ndiv", "mixed",
              "eulerian-regular", "mc", "selfcheck")
_NEEDS_PROFILE = {"brute", "expansion", "duality", "gauge", "mc", "selfcheck"}

BUG_BANNER = (
    "*** internal invariant failure: this is a bug in orientcount, not in your input ***\n"
    "*** please report it together with the graph and the command line            ***"
)


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    graph: Graph
    profile: ConstraintProfile | None
    algorithm: str
    modulus: int | None = None
    partition: VertexPartition | None = None
    gauge: GaugePair | None = None
    samples: int = 10_000
    seed: int = 0
    exhaustive: bool = False
    workers: int = 1
    cap: int = ENUMERATION_CAP
    coloring_cap: int = COLORING_CAP
    fmt: str = "text"

    @property
    def caps(self) -> dict:
        return {"enumeration": self.cap, "coloring": self.coloring_cap}


def parse_partition(text: str, g: Graph) -> VertexPartition:
    """``v1=0,3,5``: the listed vertices form the Eulerian part, the rest the even part."""
    key, sep, body = text.partition("=")
    if key.strip() != "v1" or not sep:
        raise UsageError(f"partition must look like 'v1=0,3,5', got {text!r}")
    try:
        verts = [int(x) for x in body.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad vertex list in partition {text!r}") from None
    return VertexPartition.from_part1(g, verts)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orientcount", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("count", help="count constrained orientations of a graph")
    c.add_argument("--graph", required=True, help="edge-list file")
    src = c.add_mutually_exclusive_group()
    src.add_argument("--constraints", help="inline constraint rules, e.g. 'all: mod 2 = 0'")
    src.add_argument("--constraints-file", help="file of constraint rules")
    c.add_argument("--algorithm", required=True, choices=ALGORITHMS)
    c.add_argument("--modulus", "-N", type=int, help="divisor for --algorithm ndiv")
    c.add_argument("--partition", help="Eulerian part for --algorithm mixed, e.g. 'v1=0,3,5'")
    c.add_argument("--gauge", help="gauge file: alpha line, beta line of rationals p/q")
    c.add_argument("--samples", type=int, default=10_000)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--exhaustive", action="store_true", help="mc: average over every sign vector")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--cap", type=int, default=ENUMERATION_CAP, help="max edges for 2^|E| enumerations")
    c.add_argument("--coloring-cap", type=int, default=COLORING_CAP, help="max colourings N^|E|")
    c.add_argument("--format", choices=("text", "json-lines"), default="text")
    return p


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def make_config(args: argparse.Namespace) -> RunConfig:
    g = parse_graph(_read(args.graph))
    text = args.constraints if args.constraints is not None else (
        _read(args.constraints_file) if args.constraints_file else None)
    profile = parse_constraints(text, g) if text is not None else None
    algo = args.algorithm
    if algo in _NEEDS_PROFILE and profile is None:
        raise UsageError(f"--algorithm {algo} needs --constraints or --constraints-file")
    if (args.modulus is not None) != (algo == "ndiv"):
        raise UsageError("--modulus is required for, and only for, --algorithm ndiv")
    if args.partition is not None and algo not in ("mixed", "selfcheck"):
        raise UsageError("--partition applies only to --algorithm mixed or selfcheck")
    if algo == "mixed" and args.partition is None:
        raise UsageError("--algorithm mixed needs --partition")
    if args.gauge is not None and algo not in ("gauge", "selfcheck"):
        raise UsageError("--gauge applies only to --algorithm gauge or selfcheck")
    if algo == "gauge" and args.gauge is None:
        raise UsageError("--algorithm gauge needs --gauge")
    if args.cap < 1 or args.coloring_cap < 1 or args.workers < 1:
        raise UsageError("caps and worker count must be positive")
    if args.modulus is not None and args.modulus < 2:
        raise UsageError("--modulus must be >= 2")
    cfg = RunConfig(
        graph=g, profile=profile, algorithm=algo, modulus=args.modulus,
        partition=parse_partition(args.partition, g) if args.partition else None,
        gauge=GaugePair.parse(_read(args.gauge)) if args.gauge else None,
        samples=args.samples, seed=args.seed, exhaustive=args.exhaustive,
        workers=args.workers, cap=args.cap, coloring_cap=args.coloring_cap, fmt=args.format,
    )
    if algo == "selfcheck" and cfg.partition is not None and \
            profile != ConstraintProfile.mixed(g, cfg.partition.part1):
        raise UsageError("--partition given but --constraints are not the matching mixed profile")
    implied = _implied_profile(cfg)
    if implied is not None and profile is not None and implied != profile:
        raise UsageError(f"--constraints disagree with the profile fixed by --algorithm {algo}")
    return cfg


def _implied_profile(cfg: RunConfig) -> ConstraintProfile | None:
    g = cfg.graph
    if cfg.algorithm == "even":
        return ConstraintProfile.uniform(g, AdmissibleSet.residue(0, 2))
    if cfg.algorithm == "ndiv":
        return ConstraintProfile.uniform(g, AdmissibleSet.residue(0, cfg.modulus))
    if cfg.algorithm == "eulerian-regular":
        return ConstraintProfile.half(g)
    if cfg.algorithm == "mixed":
        return ConstraintProfile.mixed(g, cfg.partition.part1)
    return None


def _record(cfg: RunConfig, algorithm: str, count, terms: int, seconds: float, **extra) -> dict:
    rec = {"algorithm": algorithm, "count": str(count), "terms": terms,
           "workers": cfg.workers, "seconds": round(seconds, 6), "caps": cfg.caps}
    rec.update(extra)
    return rec


def run_one(cfg: RunConfig, algorithm: str) -> dict:
    g, prof = cfg.graph, cfg.profile
    t0 = time.perf_counter()
    if algorithm == "brute":
        count = brute_force_count(g, prof, cap=cfg.cap, workers=cfg.workers)
        terms = 1 << g.m
    elif algorithm == "expansion":
        exp = expand_orientation_polynomial(g, cap=cfg.cap)
        count, terms = count_from_expansion(exp, prof), len(exp)
    elif algorithm == "duality":
        rep = duality_count(g, prof, workers=cfg.workers, cap=cfg.cap)
        count, terms = rep.count, rep.terms
    elif algorithm == "gauge":
        rep = generalized_duality_count(g, prof, cfg.gauge, cap=cfg.coloring_cap)
        count, terms = rep.count, rep.terms
    elif algorithm == "even":
        count, terms = even_orientation_count(g), 1
    elif algorithm == "ndiv":
        count = n_divisible_count(g, cfg.modulus, cap=cfg.coloring_cap, verify=g.m <= cfg.cap)
        terms = cfg.modulus ** g.m
    elif algorithm == "mixed":
        count = mixed_count(g, cfg.partition, cap=cfg.cap)
        terms = 1 << g.m
    elif algorithm == "eulerian-regular":
        count = eulerian_regular_count(g, cap=cfg.cap)
        terms = 1 << g.m
    elif algorithm == "mc":
        est = mc_estimate(g, prof, cfg.samples, cfg.seed, exhaustive=cfg.exhaustive)
        return _record(cfg, "mc", est.mean, est.samples, time.perf_counter() - t0,
                       seed=est.seed, stderr=est.stderr, exhaustive=est.exhaustive)
    else:
        raise UsageError(f"unknown algorithm {algorithm!r}")
    return _record(cfg, algorithm, count, terms, time.perf_counter() - t0)


def applicable_algorithms(cfg: RunConfig) -> list[str]:
    """Algorithms whose fixed profile coincides with ``cfg.profile``."""
    g, prof = cfg.graph, cfg.profile
    algos = ["brute", "expansion", "duality"]
    if cfg.gauge is not None:
        algos.append("gauge")
    if prof == ConstraintProfile.uniform(g, AdmissibleSet.residue(0, 2)):
        algos.append("even")
    residues = {p for p in prof}
    if len(residues) == 1:
        (p,) = residues
        if p.kind == "residue" and p.values == (0,) and p.modulus >= 2 and not p.shift:
            algos.append("ndiv")
    if g.is_regular() and (not g.n or g.degrees[0] % 2 == 0) and prof == ConstraintProfile.half(g):
        algos.append("eulerian-regular")
    if cfg.partition is not None:
        algos.append("mixed")
    else:
        v1 = [v for v, d in enumerate(g.degrees) if d % 2 == 0 and prof[v] == AdmissibleSet.singleton(d // 2)]
        if prof == ConstraintProfile.mixed(g, v1):
            cfg.partition = VertexPartition.from_part1(g, v1)
            algos.append("mixed")
    if g.m <= 16:
        algos.append("mc-exhaustive")
    return algos


def selfcheck(cfg: RunConfig) -> tuple[list[dict], bool]:
    records = []
    values = set()
    for algo in applicable_algorithms(cfg):
        if algo == "ndiv":
            cfg.modulus = next(iter(cfg.profile)).modulus
        try:
            if algo == "mc-exhaustive":
                t0 = time.perf_counter()
                est = mc_estimate(cfg.graph, cfg.profile, exhaustive=True)
                rec = _record(cfg, algo, est.mean, est.samples, time.perf_counter() - t0)
            else:
                rec = run_one(cfg, algo)
        except CapExceededError as exc:
            records.append(_record(cfg, algo, "skipped", 0, 0.0, note=str(exc)))
            continue
        values.add(rec["count"])
        records.append(rec)
    ok = len(values) == 1
    summary = _record(cfg, "selfcheck", values.pop() if ok else "MISMATCH", len(records), 0.0,
                      agree=ok)
    return records + [summary], ok


def _emit(records: list[dict], fmt: str, out) -> None:
    for rec in records:
        if fmt == "json-lines":
            out.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            extra = "" if rec["algorithm"] != "mc" else f"  (stderr {rec['stderr']:.6g}, seed {rec['seed']})"
            out.write(f"{rec['algorithm']}: {rec['count']}{extra}\n")


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    if cfg.algorithm == "selfcheck":
        records, ok = selfcheck(cfg)
        _emit(records, cfg.fmt, out)
        if not ok:
            sys.stderr.write("selfcheck: algorithms disagree\n" + BUG_BANNER + "\n")
            return 4
        return 0
    _emit([run_one(cfg, cfg.algorithm)], cfg.fmt, out)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
        return run(cfg)
    except (GraphParseError, ConstraintParseError, UsageError, ValueError) as exc:
        sys.stderr.write(f"orientcount: error: {exc}\n")
        return 2
    except CapExceededError as exc:
        sys.stderr.write(f"orientcount: refused: {exc}\n")
        return 3
    except InvariantError as exc:
        sys.stderr.write(f"{BUG_BANNER}\n{exc}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())

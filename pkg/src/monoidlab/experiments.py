"""Exhaustive sweeps that check the rank-two theorems and collect bound data.

Enumeration is canonical (length-lex words, pairs in index order) and
results are merged in enumeration order, so output does not depend on the
worker count.
"""
from __future__ import annotations

import csv
import io
import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional, TextIO

from .binroot import small_root_census
from .errors import MonoidLabError, TooLarge
from .factorization import WordSet, dependency_graph
from .hull import combinatorial_rank, common_root, covering_pairs, free_hull
from .maximal import cube_occurrence_check, pair_is_primitive, sync_generators
from .theta import (ANTIMORPHIC, MORPHIC, all_involutions, check_bridge_props, invariant_root_check,
                    is_theta_invariant, is_theta_power, theta_root)
from .words import Alphabet, is_primitive

CSV_COLUMNS = ["x", "y", "u", "v", "z_len", "product_bound", "sum_bound", "ratio"]
WORKERS_ENV = "MONOIDLAB_WORKERS"


class PropertyViolation(MonoidLabError):
    """A checked theorem failed; ``details`` holds the counterexample."""

    def __init__(self, message: str, details: dict):
        super().__init__(message)
        self.details = details


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SweepConfig:
    alphabet_size: int = 3
    max_gen_len: int = 4
    max_pair_size: int = 8
    workers: int = field(default_factory=default_workers)
    # word-level sweeps (binary roots, theta)
    max_word_len: int = 14
    theta_max_len: int = 10
    # set-level sweeps (rank-two roots, defect theorem)
    max_set_size: int = 3

    def __post_init__(self):
        if not 2 <= self.alphabet_size <= 3:
            raise TooLarge("alphabet_size must be 2 or 3")
        if not 1 <= self.max_gen_len <= 5:
            raise TooLarge("max_gen_len must be in 1..5")
        if not 2 <= self.max_pair_size <= 10:
            raise TooLarge("max_pair_size must be in 2..10")
        if self.max_word_len > 16 or self.theta_max_len > 12 or self.max_set_size > 4:
            raise TooLarge("word/set sweep bounds exceed desk scale")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet.first(self.alphabet_size)


@dataclass(frozen=True)
class SweepRecord:
    x: str
    y: str
    u: str
    v: str
    z_len: int
    product_bound: int
    sum_bound: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.z_len, self.product_bound)

    def row(self) -> list:
        return [self.x, self.y, self.u, self.v, self.z_len, self.product_bound,
                self.sum_bound, f"{float(self.ratio):.6f}"]


def primitive_pairs(cfg: SweepConfig) -> list[tuple[str, str]]:
    """Primitive pairs within the config bounds, in canonical order."""
    words = list(cfg.alphabet.words_upto(cfg.max_gen_len))
    return [(x, y) for i, x in enumerate(words) for y in words[i + 1:]
            if len(x) + len(y) <= cfg.max_pair_size and pair_is_primitive(x, y)]


def _may_meet(x, y, u, v) -> bool:
    # a nonempty common element starts with one generator of each side
    return (x.startswith(u) or u.startswith(x) or x.startswith(v) or v.startswith(x)
            or y.startswith(u) or u.startswith(y) or y.startswith(v) or v.startswith(y))


def _intersection_record(left, right) -> Optional[SweepRecord]:
    x, y = left
    u, v = right
    if not _may_meet(x, y, u, v):
        return None
    finite, gens = sync_generators(left, right)
    if finite and not gens:
        return None
    size_l, size_r = len(x) + len(y), len(u) + len(v)
    bound = size_l * size_r
    if not finite or len(gens) != 1 or not is_primitive(gens[0]) or len(gens[0]) >= bound:
        raise PropertyViolation("intersection of primitive pairs is not z* with short primitive z", {
            "left": [x, y], "right": [u, v], "finite": finite, "generators": gens[:8],
            "product_bound": bound})
    return SweepRecord(x, y, u, v, len(gens[0]), bound, size_l + size_r)


def intersection_record(left, right) -> Optional[SweepRecord]:
    """Sweep record for one pair of primitive pairs, or None when the intersection is trivial."""
    return _intersection_record(tuple(WordSet(left)), tuple(WordSet(right)))


def _sweep_chunk(args) -> tuple[int, list[SweepRecord]]:
    pairs, start, stop = args
    out = []
    checked = 0
    for i in range(start, stop):
        left = pairs[i]
        for j in range(i + 1, len(pairs)):
            checked += 1
            rec = _intersection_record(left, pairs[j])
            if rec is not None:
                out.append(rec)
    return checked, out


def _chunks(n: int, parts: int) -> list[tuple[int, int]]:
    # row i costs n - i comparisons; cut rows into pieces of similar cost
    total = n * (n - 1) // 2
    target = max(1, total // max(1, parts * 8))
    out, start, acc = [], 0, 0
    for i in range(n):
        acc += n - i - 1
        if acc >= target:
            out.append((start, i + 1))
            start, acc = i + 1, 0
    if start < n:
        out.append((start, n))
    return out


def _map(func, tasks, workers):
    if workers <= 1:
        return list(map(func, tasks))
    with Pool(workers) as pool:
        return pool.map(func, tasks)


@dataclass
class SweepSummary:
    primitive_pairs: int = 0
    instances: int = 0
    records: int = 0
    max_ratio: Optional[Fraction] = None
    max_ratio_instance: Optional[SweepRecord] = None
    max_sum_ratio: Optional[Fraction] = None
    max_sum_ratio_instance: Optional[SweepRecord] = None
    max_z_len: int = 0

    def update(self, rec: SweepRecord) -> None:
        self.records += 1
        self.max_z_len = max(self.max_z_len, rec.z_len)
        if self.max_ratio is None or rec.ratio > self.max_ratio:
            self.max_ratio, self.max_ratio_instance = rec.ratio, rec
        s = Fraction(rec.z_len, rec.sum_bound)
        if self.max_sum_ratio is None or s > self.max_sum_ratio:
            self.max_sum_ratio, self.max_sum_ratio_instance = s, rec

    def as_dict(self) -> dict:
        def inst(r):
            return None if r is None else {"x": r.x, "y": r.y, "u": r.u, "v": r.v, "z_len": r.z_len}
        return {
            "primitive_pairs": self.primitive_pairs,
            "instances": self.instances,
            "records": self.records,
            "max_z_len": self.max_z_len,
            "max_ratio_product": None if self.max_ratio is None else round(float(self.max_ratio), 6),
            "max_ratio_product_instance": inst(self.max_ratio_instance),
            "max_ratio_sum": None if self.max_sum_ratio is None else round(float(self.max_sum_ratio), 6),
            "max_ratio_sum_instance": inst(self.max_sum_ratio_instance),
        }


def iter_intersection_records(cfg: SweepConfig, summary: Optional[SweepSummary] = None) -> Iterator[SweepRecord]:
    pairs = primitive_pairs(cfg)
    if summary is not None:
        summary.primitive_pairs = len(pairs)
    tasks = [(pairs, a, b) for a, b in _chunks(len(pairs), cfg.workers)]
    for checked, records in _map(_sweep_chunk, tasks, cfg.workers):
        if summary is not None:
            summary.instances += checked
        for rec in records:
            if summary is not None:
                summary.update(rec)
            yield rec


def run_intersection_sweep(cfg: SweepConfig, out: Optional[TextIO] = None) -> SweepSummary:
    """Intersect every two primitive pairs in range; write CSV rows to ``out``."""
    summary = SweepSummary()
    writer = csv.writer(out, lineterminator="\n") if out is not None else None
    if writer:
        writer.writerow(CSV_COLUMNS)
    for rec in iter_intersection_records(cfg, summary):
        if writer:
            writer.writerow(rec.row())
    return summary


def sweep_csv(cfg: SweepConfig) -> tuple[str, SweepSummary]:
    buf = io.StringIO()
    summary = run_intersection_sweep(cfg, buf)
    return buf.getvalue(), summary


# -- theorem checks -----------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "violations": self.violations[:20], "violation_count": len(self.violations),
                **({"info": self.info} if self.info else {})}


def check_theorem2(cfg: SweepConfig) -> CheckResult:
    """Intersections of primitive pairs are trivial or z* with z primitive and short."""
    res = CheckResult("T2")
    summary = SweepSummary()
    try:
        for _ in iter_intersection_records(cfg, summary):
            pass
    except PropertyViolation as exc:
        res.violations.append(exc.details)
    res.checked = summary.instances
    res.info = summary.as_dict()
    return res


def check_theorem5(cfg: SweepConfig) -> CheckResult:
    """No internal xy or yx in {x, y}^3 for primitive pairs."""
    res = CheckResult("T5")
    for x, y in primitive_pairs(cfg):
        res.checked += 1
        report = cube_occurrence_check(x, y)
        if not report.clean:
            res.violations.append({"x": x, "y": y, "occurrence": list(report.occurrence)})
    return res


def check_theorem6(cfg: SweepConfig) -> CheckResult:
    """At most one binary root of size below sqrt(|w|) for primitive w."""
    census = small_root_census(cfg.alphabet, cfg.max_word_len)
    res = CheckResult("T6", checked=census["primitive_words"])
    res.violations = [{"word": w} for w in census["violations"]]
    res.info = {k: v for k, v in census.items() if k != "violations"}
    return res


def _sets(cfg: SweepConfig, words: list[str]) -> Iterator[tuple[str, ...]]:
    for size in range(2, cfg.max_set_size + 1):
        yield from combinations(words, size)


def check_theorem4(cfg: SweepConfig) -> CheckResult:
    """Every rank-two set has exactly one primitive covering pair, the least one."""
    res = CheckResult("T4")
    words = list(cfg.alphabet.words_upto(cfg.max_gen_len))
    rank2 = 0
    for X in _sets(cfg, words):
        res.checked += 1
        pairs = covering_pairs(X)
        if not pairs:
            continue
        if common_root(X) is not None:
            continue
        rank2 += 1
        roots = [Y for Y in pairs if pair_is_primitive(*Y)]
        if len(roots) != 1 or roots[0] != pairs[0]:
            res.violations.append({"set": list(X), "roots": [list(Y) for Y in roots]})
    res.info = {"rank_two_sets": rank2}
    return res


def check_defect(cfg: SweepConfig) -> CheckResult:
    """r(X) <= r_f(X) <= |X|, with r_f(X) < |X| exactly when X is not a code.

    Codes are recognised independently of the hull reduction, by the
    dependency graph having no edge.
    """
    res = CheckResult("Defect")
    words = list(cfg.alphabet.words_upto(cfg.max_gen_len))
    for X in _sets(cfg, words):
        res.checked += 1
        ws = WordSet(X)
        rf = free_hull(ws).free_rank
        r = combinatorial_rank(ws).rank
        code = not dependency_graph(ws).edges
        if not (r <= rf <= len(ws)) or (rf == len(ws)) != code:
            res.violations.append({"set": list(X), "rank": r, "free_rank": rf, "code": code})
    return res


def check_theta(cfg: SweepConfig) -> CheckResult:
    """Theta-root uniqueness, the bridge properties and clean theta-cubes."""
    res = CheckResult("Theta")
    counts = {"words": 0, "involutions": 0, "morphic_equivalence": 0, "antimorphic_implication": 0,
              "palindrome_roots": 0, "clean_cubes": 0, "invariant_pairs": 0}
    thetas = list(all_involutions(cfg.alphabet))
    counts["involutions"] = len(thetas)
    for w in cfg.alphabet.words_upto(cfg.theta_max_len):
        counts["words"] += 1
        for theta in thetas:
            res.checked += 1
            roots = [w[:i] for i in range(1, len(w) + 1)
                     if is_theta_power(w, w[:i], theta) and theta_root(w[:i], theta) == w[:i]]
            if len(roots) != 1:
                res.violations.append({"check": "theta_root_unique", "word": w, "theta": str(theta),
                                       "roots": roots})
            if theta(w) == w:
                continue
            report = check_bridge_props(w, theta)
            if theta.kind == MORPHIC:
                counts["morphic_equivalence"] += 1
            else:
                counts["antimorphic_implication"] += 1
                counts["palindrome_roots"] += report.palindromes is not None
            counts["clean_cubes"] += report.cube_clean is not None
            if not report.ok:
                res.violations.append({"check": "bridge", "word": w, "theta": str(theta),
                                       "report": _jsonable(report)})
    # invariant pairs: {x, theta(x)} for short x, plus pairs of theta-palindromes
    for theta in thetas:
        for X in _invariant_pairs(cfg, theta):
            root, ok = invariant_root_check(X, theta)
            if root is None:
                continue
            counts["invariant_pairs"] += 1
            if not ok:
                res.violations.append({"check": "invariant_root", "pair": list(X), "theta": str(theta),
                                       "root": list(root)})
    res.info = counts
    return res


def _invariant_pairs(cfg: SweepConfig, theta) -> Iterator[WordSet]:
    words = list(cfg.alphabet.words_upto(min(cfg.theta_max_len, 6)))
    seen = set()
    for x in words:
        y = theta(x)
        if y != x:
            X = WordSet([x, y])
            if X not in seen:
                seen.add(X)
                yield X
    if theta.kind == ANTIMORPHIC:
        pals = [w for w in words if theta(w) == w]
        for p, q in combinations(pals, 2):
            X = WordSet([p, q])
            if is_theta_invariant(X, theta):
                yield X


def _jsonable(obj):
    if hasattr(obj, "__dataclass_fields__"):
        return {k: _jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, WordSet):
        return list(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


CHECKS = {
    "T2": check_theorem2,
    "T4": check_theorem4,
    "T5": check_theorem5,
    "T6": check_theorem6,
    "Theta": check_theta,
    "Defect": check_defect,
}


def verify_theorems(cfg: SweepConfig, which: Iterable[str]) -> list[CheckResult]:
    unknown = set(which) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    return [CHECKS[name](cfg) for name in CHECKS if name in set(which)]

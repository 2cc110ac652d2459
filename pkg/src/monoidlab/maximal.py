"""Primitive sets, k-maximal submonoids and intersections of two-generator monoids."""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from . import automata
from .errors import EmptyWord, InvalidPair, IsRankOne, NotRankTwo, TooLarge
from .factorization import WordSet, in_star
from .hull import EXACT_MAX_TOTAL_LENGTH, combinatorial_rank, covering_pairs, covering_sets, covers, pair_candidates
from .words import commutes, internal_occurrences, is_primitive, primitive_word_root


@dataclass(frozen=True)
class PrimitivePairReport:
    pair: WordSet
    primitive: bool
    # a set {u, v} != pair with pair inside {u, v}*; a single root word when x, y commute
    counterexample: Optional[WordSet] = None


def _check_pair(x: str, y: str) -> None:
    if not x or not y:
        raise InvalidPair("pair words must be nonempty")
    if x == y:
        raise InvalidPair("pair words must be distinct")


@lru_cache(maxsize=1 << 18)
def pair_is_primitive(x: str, y: str) -> bool:
    """Fast yes/no form of :func:`is_primitive_pair` (stops at the first cover)."""
    _check_pair(x, y)
    if x + y == y + x:
        return False
    target = {x, y}
    for pair in pair_candidates((x, y)):
        if set(pair) != target and covers(pair, (x, y)):
            return False
    return True


def is_primitive_pair(x: str, y: str) -> PrimitivePairReport:
    """Decide whether {x, y} is the basis of a 2-maximal submonoid.

    It is iff x and y do not commute and no other pair {u, v} has
    x, y in {u, v}*. Candidate pairs come from the prefix enumeration of
    :func:`monoidlab.hull.pair_candidates`; the counterexample returned is
    the least such pair (total length, then canonical order).
    """
    _check_pair(x, y)
    pair = WordSet([x, y])
    if commutes(x, y):
        return PrimitivePairReport(pair, False, WordSet([primitive_word_root(x)[0]]))
    others = [Y for Y in covering_pairs([x, y]) if Y != pair]
    if others:
        return PrimitivePairReport(pair, False, others[0])
    return PrimitivePairReport(pair, True)


def is_primitive_set(X: WordSet) -> bool:
    if len(X) == 1:
        return is_primitive(X[0])
    if len(X) == 2:
        return pair_is_primitive(*X)
    return is_k_maximal(X, len(X))[0]


def is_k_maximal(X: WordSet, k: Optional[int] = None,
                 alphabet: Optional[str] = None) -> tuple[bool, Optional[WordSet]]:
    """Whether X* is k-maximal, with a larger k-generated monoid as witness.

    Every Y with |Y| <= k and X in Y* restricts to the subset actually used
    in factorizations, which :func:`covering_sets` finds. Y* is strictly
    bigger than X* when a used element is outside X*, or when fewer than k
    elements suffice and a letter of the alphabet is outside X* (that
    letter can be added). ``alphabet`` defaults to the letters of X.
    """
    k = len(X) if k is None else k
    if len(X) != k:
        raise ValueError("is_k_maximal expects |X| == k")
    if k > 3 or X.total_length > EXACT_MAX_TOTAL_LENGTH:
        raise TooLarge("k-maximality is limited to k <= 3 and total length <= 40")
    alphabet = alphabet or X.letters
    spare = [a for a in alphabet if not in_star(a, X.words)]
    witnesses = []
    for U in covering_sets(X.words, k):
        if any(not in_star(u, X.words) for u in U):
            witnesses.append(U)
        elif len(U) < k and spare:
            witnesses.append(WordSet(list(U) + spare[:1]))
    if not witnesses:
        return True, None
    return False, min(witnesses, key=WordSet.sort_key)


def primitive_root_rank2(X: WordSet) -> WordSet:
    """The unique primitive pair {u, v} with X in {u, v}*, for X of rank 2.

    The root is the covering pair of least total length: a covering pair
    that is not primitive is itself covered by a strictly shorter pair, so
    the least one is primitive, and unique by the rank-two theorem.
    """
    rank = combinatorial_rank(X, mode="decide_le_2")
    if rank.rank == 1:
        raise IsRankOne(rank.witness[0])
    if rank.rank != 2:
        raise NotRankTwo(rank.rank)
    pairs = covering_pairs(X.words)
    best = pairs[0]
    if len(pairs) > 1 and pairs[1].total_length == best.total_length:
        raise AssertionError(f"two least covering pairs for {X}: {best}, {pairs[1]}")
    return best


def primitive_roots_of(X: WordSet) -> list[WordSet]:
    """Every primitive pair whose star contains X (exhaustive, for checks)."""
    return [Y for Y in covering_pairs(X.words) if pair_is_primitive(*Y)]


TRIVIAL = "trivial"
SINGLE = "single"
OTHER = "other"


@dataclass(frozen=True)
class IntersectionReport:
    left: WordSet
    right: WordSet
    kind: str
    generators: tuple[str, ...]
    finite: bool
    pumping: Optional[automata.Pumping] = None
    z: Optional[str] = None
    bound: Optional[int] = None
    bound_ok: Optional[bool] = None
    both_primitive: bool = False
    # None unless both inputs are primitive pairs and the intersection is nontrivial
    theorem_ok: Optional[bool] = None


def _classify(left, right, generators, finite, pumping=None) -> IntersectionReport:
    both = len(left) == 2 and len(right) == 2 and pair_is_primitive(*left) and pair_is_primitive(*right)
    if finite and not generators:
        kind = TRIVIAL
    elif finite and len(generators) == 1:
        kind = SINGLE
    else:
        kind = OTHER
    z = generators[0] if kind == SINGLE else None
    bound = left.total_length * right.total_length
    bound_ok = None if z is None else len(z) < bound
    theorem_ok = None
    if both and kind != TRIVIAL and left != right:
        theorem_ok = kind == SINGLE and is_primitive(z) and bool(bound_ok)
    return IntersectionReport(left, right, kind, tuple(generators), finite, pumping, z,
                              bound, bound_ok, both, theorem_ok)


def intersect_primitive_pairs(X: Sequence[str], U: Sequence[str],
                              sample_len: int = automata.DEFAULT_SAMPLE_LEN) -> IntersectionReport:
    """Generators of X* and U* intersected, via star automata and a product."""
    X = X if isinstance(X, WordSet) else WordSet(X)
    U = U if isinstance(U, WordSet) else WordSet(U)
    alphabet = "".join(sorted(set(X.letters + U.letters)))
    M = automata.intersect(automata.star_automaton(X, alphabet), automata.star_automaton(U, alphabet))
    gens = automata.minimal_generating_set(M, sample_len)
    return _classify(X, U, gens.generators, gens.finite, gens.pumping)


def sync_generators(X: Sequence[str], U: Sequence[str], limit: int = 64) -> tuple[bool, list[str]]:
    """Generators of X* and U* intersected, for codes X and U.

    Walks two factorizations in step, tracking the dangling suffix of the
    side that is ahead; a generator is a walk that ends level without ever
    being level before. Returns ``(finite, generators)``; in the infinite
    case only up to ``limit`` generators are listed. Assumes X and U are
    codes, otherwise a listed word may still be a product.
    """
    sides = (tuple(X), tuple(U))
    done = "#"
    edges: dict = {}
    starts: set = set()
    gens: set[str] = set()
    for x in sides[0]:
        for u in sides[1]:
            if x == u:
                gens.add(x)
            elif x.startswith(u):
                starts.add((0, x[len(u):]))
            elif u.startswith(x):
                starts.add((1, u[len(x):]))
    if not starts:
        return True, sorted(gens, key=lambda w: (len(w), w))
    stack = list(starts)
    while stack:
        state = stack.pop()
        if state in edges:
            continue
        ahead, s = state
        out = []
        for z in sides[1 - ahead]:
            if z == s:
                out.append((z, done))
            elif s.startswith(z):
                out.append((z, (ahead, s[len(z):])))
            elif z.startswith(s):
                out.append((z, (1 - ahead, z[len(s):])))
        edges[state] = out
        stack.extend(t for _, t in out if t != done and t not in edges)
    # keep states that can still end level
    live = {done}
    changed = True
    while changed:
        changed = False
        for state, out in edges.items():
            if state not in live and any(t in live for _, t in out):
                live.add(state)
                changed = True
    useful = {q: [(z, t) for z, t in out if t in live] for q, out in edges.items() if q in live}
    finite = not _has_cycle(useful)
    # enumerate walks shortest word first; the word is the leading side so far
    heap = []
    tick = itertools.count()
    for x in sides[0]:
        for u in sides[1]:
            if x != u and (x.startswith(u) or u.startswith(x)):
                key = (0, x[len(u):]) if len(x) > len(u) else (1, u[len(x):])
                if key in live:
                    w = max(x, u, key=len)
                    heapq.heappush(heap, (len(w), w, next(tick), key))
    seen = set()
    while heap and (finite or len(gens) < limit):
        _, word, _, state = heapq.heappop(heap)
        if state == done:
            gens.add(word)
            continue
        if (word, state) in seen:
            continue
        seen.add((word, state))
        ahead = state[0]
        for _, t in useful[state]:
            # the word grows only when the lagging side overtakes
            grown = word if t == done or t[0] == ahead else word + t[1]
            heapq.heappush(heap, (len(grown), grown, next(tick), t))
    return finite, sorted(gens, key=lambda w: (len(w), w))


def _has_cycle(graph) -> bool:
    color = {}
    for root in graph:
        if root in color:
            continue
        color[root] = 1
        stack = [(root, iter(graph[root]))]
        while stack:
            node, it = stack[-1]
            for _, t in it:
                if t == "#" or t not in graph:
                    continue
                c = color.get(t)
                if c == 1:
                    return True
                if c is None:
                    color[t] = 1
                    stack.append((t, iter(graph[t])))
                    break
            else:
                color[node] = 2
                stack.pop()
    return False


def sync_intersection(X: Sequence[str], U: Sequence[str]) -> IntersectionReport:
    """Same report as :func:`intersect_primitive_pairs`, via :func:`sync_generators`."""
    X = X if isinstance(X, WordSet) else WordSet(X)
    U = U if isinstance(U, WordSet) else WordSet(U)
    finite, gens = sync_generators(X, U)
    return _classify(X, U, gens, finite)


@dataclass(frozen=True)
class CubeReport:
    x: str
    y: str
    clean: bool
    # (triple label such as "yxx", pattern label "xy" or "yx", offset)
    occurrences: tuple[tuple[str, str, int], ...] = ()

    @property
    def occurrence(self):
        return self.occurrences[0] if self.occurrences else None


def cube_occurrence_check(x: str, y: str) -> CubeReport:
    """Find internal occurrences of xy or yx inside the eight words of {x, y}^3."""
    if not x or not y:
        raise EmptyWord("cube check needs nonempty words")
    named = {"x": x, "y": y}
    found = []
    for label in map("".join, product("xy", repeat=3)):
        host = "".join(named[c] for c in label)
        for pat_label in ("xy", "yx"):
            pat = named[pat_label[0]] + named[pat_label[1]]
            for offset in internal_occurrences(pat, host):
                found.append((label, pat_label, offset))
    return CubeReport(x, y, not found, tuple(found))

"""Free hull, free rank and combinatorial rank of finite sets of words."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import TooLarge
from .factorization import WordSet, code_witness, dependency_graph, in_star
from .words import primitive_word_root

EXACT_MAX_TOTAL_LENGTH = 40


@dataclass(frozen=True)
class HullResult:
    basis: WordSet
    trace: tuple[tuple[str, str], ...] = ()

    @property
    def free_rank(self) -> int:
        return len(self.basis)


def free_hull(X: WordSet) -> HullResult:
    """Basis of the smallest free submonoid containing X.

    While the current set is not a code, take its shortest double
    factorization; the two first blocks u, v differ and one is a prefix of
    the other, say v = ut. Stability of free submonoids puts t in the
    hull, so v is replaced by t. Total length strictly drops each round.
    """
    if not len(X):
        raise ValueError("free_hull needs a nonempty set")
    current = X
    trace = []
    while True:
        witness = code_witness(current)
        if witness is None:
            return HullResult(current, tuple(trace))
        a, b = current[witness.first[0]], current[witness.second[0]]
        u, v = (a, b) if len(a) < len(b) else (b, a)
        t = v[len(u):]
        trace.append((v, t))
        current = WordSet([w for w in current if w != v] + [t])


def free_rank(X: WordSet) -> int:
    return free_hull(X).free_rank


@dataclass(frozen=True)
class RankResult:
    rank: int
    witness: Optional[WordSet]
    # False only for decide_le_2 on sets of rank >= 3 with more than 3 words,
    # where ``rank`` is then a lower bound.
    exact: bool = True


def common_root(words: Sequence[str]) -> Optional[str]:
    """The primitive word every word is a power of, if there is one."""
    roots = {primitive_word_root(w)[0] for w in words}
    return roots.pop() if len(roots) == 1 else None


def _strip_runs(w: str, u: str) -> Iterable[str]:
    """w, u^-1 w, u^-2 w, ... as long as u keeps being a prefix."""
    while True:
        yield w
        if not w.startswith(u) or not w:
            return
        w = w[len(u):]


def pair_candidates(words: Sequence[str]) -> set[tuple[str, str]]:
    """Pairs that may generate a monoid containing ``words``.

    The first block of words[0] is named u, so u is a prefix of words[0].
    Any word that uses v reads u^j v ... for some j, hence v is a prefix
    of u^-j w. Every pair {u, v} with words in {u, v}* (using both
    generators) is therefore among the candidates.
    """
    first = words[0]
    out = set()
    for i in range(1, len(first) + 1):
        u = first[:i]
        for w in words:
            for rest in _strip_runs(w, u):
                for j in range(1, len(rest) + 1):
                    v = rest[:j]
                    if v != u:
                        out.add((u, v) if (len(u), u) < (len(v), v) else (v, u))
    return out


def covers(pair: Sequence[str], words: Iterable[str]) -> bool:
    u, v = pair
    for w in words:
        if not ((w.startswith(u) or w.startswith(v)) and (w.endswith(u) or w.endswith(v))):
            return False
        if not in_star(w, pair):
            return False
    return True


def covering_pairs(words: Sequence[str]) -> list[WordSet]:
    """All two-word sets Y with words in Y*, both words of Y needed, least first."""
    words = list(words)
    out = [WordSet(p) for p in pair_candidates(words) if covers(p, words) and _uses_both(p, words)]
    return sorted(out, key=WordSet.sort_key)


def _uses_both(pair: Sequence[str], words: Sequence[str]) -> bool:
    u, v = pair
    return any(not in_star(w, (u,)) for w in words) and any(not in_star(w, (v,)) for w in words)


def covering_sets(words: Sequence[str], k: int) -> set[WordSet]:
    """Every set G with |G| <= k, words in G*, each element of G used.

    Parses the words left to right; at each position the next block is an
    element already in G or a new element (a nonempty prefix of what is
    left). Following any fixed factorization over a covering set is one of
    the explored branches, so the search is complete.
    """
    words = sorted(set(words), key=lambda w: (-len(w), w))
    found: set[WordSet] = set()
    seen: set = set()
    stack = [(frozenset(), 0, 0)]
    while stack:
        state = stack.pop()
        if state in seen:
            continue
        seen.add(state)
        G, wi, pos = state
        if wi == len(words):
            found.add(WordSet(G))
            continue
        w = words[wi]
        if pos == len(w):
            stack.append((G, wi + 1, 0))
            continue
        for g in G:
            if w.startswith(g, pos):
                stack.append((G, wi, pos + len(g)))
        if len(G) < k:
            for end in range(pos + 1, len(w) + 1):
                g = w[pos:end]
                if g not in G:
                    stack.append((G | {g}, wi, end))
    return found


def combinatorial_rank(X: WordSet, mode: str = "exact_small") -> RankResult:
    """Least |Y| with X contained in Y*.

    ``decide_le_2`` settles rank 1 and rank 2 by pair enumeration;
    ``exact_small`` continues with a complete branching search for larger
    ranks and refuses inputs longer than 40 symbols in total.
    """
    if mode not in ("exact_small", "decide_le_2"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exact_small" and X.total_length > EXACT_MAX_TOTAL_LENGTH:
        raise TooLarge(f"exact rank limited to total length {EXACT_MAX_TOTAL_LENGTH}")
    words = list(X)
    root = common_root(words)
    if root is not None:
        return RankResult(1, WordSet([root]))
    pairs = covering_pairs(words)
    if pairs:
        return RankResult(2, pairs[0])
    if len(X) == 3 and mode == "decide_le_2":
        return RankResult(3, X)
    if mode == "decide_le_2":
        return RankResult(3, None, exact=False)
    for k in range(3, len(X) + 1):
        sets = [G for G in covering_sets(words, k) if len(G) == k]
        if sets:
            return RankResult(k, min(sets, key=WordSet.sort_key))
    raise AssertionError("X always covers itself")  # pragma: no cover


@dataclass(frozen=True)
class GraphLemmaReport:
    free_rank: int
    components: int
    holds: bool
    is_code: bool
    edges: tuple = field(default_factory=tuple)


def graph_lemma_check(X: WordSet) -> GraphLemmaReport:
    """Check free rank <= components < |X| for a non-code (vacuous for codes)."""
    graph = dependency_graph(X)
    hull = free_hull(X)
    code = hull.basis == X
    if code:
        return GraphLemmaReport(len(X), graph.components, True, True, tuple(graph.sorted_edges()))
    holds = hull.free_rank <= graph.components < len(X)
    return GraphLemmaReport(hull.free_rank, graph.components, holds, False,
                            tuple(graph.sorted_edges()))

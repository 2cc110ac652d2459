"""Membership, factorization and code tests over finite sets of words."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import EmptyWord
from .words import canonical_key

DEFAULT_CAP = 64


@dataclass(frozen=True)
class WordSet:
    """Finite set of distinct nonempty words in canonical (length, lex) order."""

    words: tuple[str, ...]

    def __init__(self, words: Iterable[str]):
        ws = set(words)
        if "" in ws:
            raise EmptyWord("a WordSet cannot contain the empty word")
        object.__setattr__(self, "words", tuple(sorted(ws, key=canonical_key)))

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return w in self.words

    def __getitem__(self, i):
        return self.words[i]

    def __str__(self):
        return "{" + ",".join(self.words) + "}"

    def index(self, w: str) -> int:
        return self.words.index(w)

    @property
    def cardinality(self) -> int:
        return len(self.words)

    @property
    def total_length(self) -> int:
        return sum(map(len, self.words))

    @property
    def letters(self) -> str:
        return "".join(sorted(set("".join(self.words))))

    def sort_key(self):
        """Order used for deterministic tie-breaking: total length, then words."""
        return (self.total_length, tuple(canonical_key(w) for w in self.words))


def parse_wordset(text: str) -> WordSet:
    """Parse the line format: one word per line, ``#`` comments, blanks ignored."""
    words = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.append(line)
    return WordSet(words)


def format_wordset(X: WordSet) -> str:
    return "".join(w + "\n" for w in X)


def in_star(w: str, words: Sequence[str]) -> bool:
    """Decide ``w in words*`` by a reachability DP over prefix positions."""
    n = len(w)
    if n == 0:
        return True
    reach = bytearray(n + 1)
    reach[0] = 1
    for i in range(n):
        if reach[i]:
            for x in words:
                if w.startswith(x, i):
                    j = i + len(x)
                    if j == n:
                        return True
                    reach[j] = 1
    return False


def is_member(w: str, X: WordSet) -> bool:
    return in_star(w, X.words)


def factorizations(w: str, X: WordSet, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """Up to ``cap`` factorizations of ``w`` over ``X`` as index tuples, lexicographically."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    n = len(w)
    # can_finish[i]: the suffix w[i:] lies in X*
    can_finish = [False] * (n + 1)
    can_finish[n] = True
    for i in range(n - 1, -1, -1):
        can_finish[i] = any(w.startswith(x, i) and can_finish[i + len(x)] for x in X.words)
    out: list[tuple[int, ...]] = []
    if not can_finish[0]:
        return out
    blocks: list[int] = []

    def walk(i: int) -> None:
        if len(out) >= cap:
            return
        if i == n:
            out.append(tuple(blocks))
            return
        for k, x in enumerate(X.words):
            if w.startswith(x, i) and can_finish[i + len(x)]:
                blocks.append(k)
                walk(i + len(x))
                blocks.pop()
                if len(out) >= cap:
                    return

    walk(0)
    return out


@dataclass(frozen=True)
class DoubleFactorizationWitness:
    word: str
    first: tuple[int, ...]
    second: tuple[int, ...]

    def blocks(self, X: WordSet) -> tuple[list[str], list[str]]:
        return [X[i] for i in self.first], [X[i] for i in self.second]


def code_witness(X: WordSet) -> Optional[DoubleFactorizationWitness]:
    """Shortest word with two factorizations over X, or None when X is a code.

    Sardinas-Patterson style search on dangling suffixes, run as a
    uniform-cost search keyed on (length, word) so the witness is the
    length-lex least ambiguous word.
    """
    words = X.words
    heap: list = []
    tick = 0
    for i, x in enumerate(words):
        for j, y in enumerate(words):
            if i != j and y.startswith(x):
                heap.append((len(y), y, tick, y[len(x):], (i,), (j,)))
                tick += 1
    heapq.heapify(heap)
    settled: set[str] = set()
    while heap:
        length, long_word, _, dangling, short, long_ = heapq.heappop(heap)
        if not dangling:
            a, b = sorted((short, long_))
            return DoubleFactorizationWitness(long_word, a, b)
        if dangling in settled:
            continue
        settled.add(dangling)
        for k, z in enumerate(words):
            if dangling.startswith(z):
                entry = (length, long_word, tick, dangling[len(z):], short + (k,), long_)
            elif z.startswith(dangling):
                rest = z[len(dangling):]
                entry = (length + len(rest), long_word + rest, tick, rest, long_, short + (k,))
            else:
                continue
            tick += 1
            heapq.heappush(heap, entry)
    return None


def is_code(X: WordSet) -> bool:
    return code_witness(X) is None


def is_prefix_code(X: WordSet) -> bool:
    ws = X.words
    return not any(i != j and y.startswith(x) for i, x in enumerate(ws) for j, y in enumerate(ws))


def is_suffix_code(X: WordSet) -> bool:
    ws = X.words
    return not any(i != j and y.endswith(x) for i, x in enumerate(ws) for j, y in enumerate(ws))


def is_bifix_code(X: WordSet) -> bool:
    return is_prefix_code(X) and is_suffix_code(X)


@dataclass(frozen=True)
class DependencyGraph:
    vertices: WordSet
    edges: frozenset = field(default_factory=frozenset)
    components: int = 0

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted((tuple(sorted(e, key=canonical_key)) for e in self.edges),
                      key=lambda e: (canonical_key(e[0]), canonical_key(e[1])))


def _count_components(n: int, pairs: Iterable[tuple[int, int]]) -> int:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in pairs:
        parent[find(i)] = find(j)
    return len({find(i) for i in range(n)})


def dependency_graph(X: WordSet) -> DependencyGraph:
    """Graph on X with an edge u--v iff uX* and vX* intersect."""
    from . import automata

    alphabet = X.letters
    star = automata.star_automaton(X, alphabet)
    edges = []
    for i, u in enumerate(X):
        for j in range(i + 1, len(X)):
            v = X[j]
            # an edge forces one endpoint to be a prefix of the other
            if not (u.startswith(v) or v.startswith(u)):
                continue
            left = automata.concat(automata.word_automaton(u, alphabet), star)
            right = automata.concat(automata.word_automaton(v, alphabet), star)
            if not automata.is_empty(automata.intersect(left, right)):
                edges.append((i, j))
    return DependencyGraph(
        vertices=X,
        edges=frozenset(frozenset((X[i], X[j])) for i, j in edges),
        components=_count_components(len(X), edges),
    )

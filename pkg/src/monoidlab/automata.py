"""Deterministic finite automata over small alphabets.

Automata are partial: a missing transition goes to an implicit dead
state. Every constructor returns a trimmed automaton (all states reachable
and co-reachable) with states numbered in breadth-first order from the
start state 0, so structurally equal languages built the same way print
the same way.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Optional, Union

from .errors import AlphabetMismatch, NotASubmonoid, TooLarge
from .factorization import WordSet, is_prefix_code
from .words import canonical_key

MAX_STATES = 1_000_000
DEFAULT_SAMPLE_LEN = 30


@dataclass(frozen=True)
class Dfa:
    alphabet: str
    transitions: tuple  # tuple of {symbol: target} dicts, one per state
    accepting: frozenset
    start: int = 0

    @property
    def num_states(self) -> int:
        return len(self.transitions)

    def step(self, state: Optional[int], symbol: str) -> Optional[int]:
        if state is None:
            return None
        return self.transitions[state].get(symbol)

    def accepts(self, w: str) -> bool:
        state = self.start
        for s in w:
            state = self.transitions[state].get(s)
            if state is None:
                return False
        return state in self.accepting

    __contains__ = accepts

    def to_dot(self, name: str = "dfa") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;", '  init [shape=point];']
        for q in range(self.num_states):
            shape = "doublecircle" if q in self.accepting else "circle"
            lines.append(f"  q{q} [shape={shape}];")
        lines.append(f"  init -> q{self.start};")
        for q, row in enumerate(self.transitions):
            for s in sorted(row):
                lines.append(f'  q{q} -> q{row[s]} [label="{s}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _build(alphabet: str, start: Hashable,
           step: Callable[[Hashable, str], Optional[Hashable]],
           accepting: Callable[[Hashable], bool]) -> Dfa:
    """Explore ``step`` from ``start`` and return the trimmed automaton."""
    index = {start: 0}
    keys = [start]
    rows: list[dict] = []
    queue = deque([start])
    while queue:
        key = queue.popleft()
        row = {}
        for s in alphabet:
            nxt = step(key, s)
            if nxt is None:
                continue
            if nxt not in index:
                if len(keys) >= MAX_STATES:
                    raise TooLarge(f"automaton exceeds {MAX_STATES} states")
                index[nxt] = len(keys)
                keys.append(nxt)
                queue.append(nxt)
            row[s] = index[nxt]
        rows.append(row)
    final = {i for i, k in enumerate(keys) if accepting(k)}
    return _trim(alphabet, rows, final)


def _trim(alphabet: str, rows: list, final: set, start: int = 0) -> Dfa:
    back: list[list[int]] = [[] for _ in rows]
    for q, row in enumerate(rows):
        for t in row.values():
            back[t].append(q)
    live = set(final)
    stack = list(final)
    while stack:
        q = stack.pop()
        for p in back[q]:
            if p not in live:
                live.add(p)
                stack.append(p)
    if start not in live:
        return Dfa(alphabet, ({},), frozenset())
    # renumber live states in BFS order from start
    order = {start: 0}
    queue = deque([start])
    new_rows = []
    while queue:
        q = queue.popleft()
        row = {}
        for s in alphabet:
            t = rows[q].get(s)
            if t is None or t not in live:
                continue
            if t not in order:
                order[t] = len(order)
                queue.append(t)
            row[s] = order[t]
        new_rows.append(row)
    return Dfa(alphabet, tuple(new_rows), frozenset(order[q] for q in final if q in order))


def _same_alphabet(*automata: Dfa) -> str:
    alphabets = {a.alphabet for a in automata}
    if len(alphabets) != 1:
        raise AlphabetMismatch(f"alphabets differ: {sorted(alphabets)}")
    return alphabets.pop()


def _alphabet_for(words: Iterable[str], alphabet: Optional[str]) -> str:
    letters = set("".join(words))
    if alphabet is None:
        return "".join(sorted(letters))
    missing = letters - set(alphabet)
    if missing:
        raise AlphabetMismatch(f"symbols {sorted(missing)} not in alphabet {alphabet!r}")
    return alphabet


def star_automaton(X: Union[WordSet, Iterable[str]], alphabet: Optional[str] = None) -> Dfa:
    """DFA for X* by subset construction over the trie of X.

    Trie nodes are the proper prefixes of words of X (the root is the empty
    prefix); completing a word of X returns to the root.
    """
    X = X if isinstance(X, WordSet) else WordSet(X)
    alphabet = _alphabet_for(X, alphabet)
    words = set(X)
    inner = {w[:i] for w in X for i in range(len(w))}

    def step(subset, s):
        out = set()
        for p in subset:
            q = p + s
            if q in words:
                out.add("")
            if q in inner:
                out.add(q)
        return frozenset(out) or None

    dfa = _build(alphabet, frozenset([""]), step, lambda subset: "" in subset)
    if is_prefix_code(X):
        assert dfa.num_states <= X.total_length - len(X) + 1
    return dfa


def word_automaton(w: str, alphabet: Optional[str] = None) -> Dfa:
    """DFA for the singleton language {w}."""
    alphabet = _alphabet_for([w], alphabet)
    return _build(alphabet, 0, lambda i, s: i + 1 if i < len(w) and w[i] == s else None,
                  lambda i: i == len(w))


def epsilon_automaton(alphabet: str) -> Dfa:
    return Dfa(alphabet, ({},), frozenset([0]))


def empty_automaton(alphabet: str) -> Dfa:
    return Dfa(alphabet, ({},), frozenset())


def intersect(A: Dfa, B: Dfa) -> Dfa:
    alphabet = _same_alphabet(A, B)

    def step(pair, s):
        a = A.transitions[pair[0]].get(s)
        b = B.transitions[pair[1]].get(s)
        return None if a is None or b is None else (a, b)

    return _build(alphabet, (A.start, B.start), step,
                  lambda pair: pair[0] in A.accepting and pair[1] in B.accepting)


def union(A: Dfa, B: Dfa) -> Dfa:
    alphabet = _same_alphabet(A, B)

    def step(pair, s):
        nxt = (A.step(pair[0], s), B.step(pair[1], s))
        return None if nxt == (None, None) else nxt

    return _build(alphabet, (A.start, B.start), step,
                  lambda pair: pair[0] in A.accepting or pair[1] in B.accepting)


def difference(A: Dfa, B: Dfa) -> Dfa:
    """L(A) minus L(B)."""
    alphabet = _same_alphabet(A, B)

    def step(pair, s):
        a = A.transitions[pair[0]].get(s)
        return None if a is None else (a, B.step(pair[1], s))

    return _build(alphabet, (A.start, B.start), step,
                  lambda pair: pair[0] in A.accepting and pair[1] not in B.accepting)


def complement(A: Dfa) -> Dfa:
    """All words over the alphabet not accepted by A."""
    dead = -1

    def step(q, s):
        return dead if q == dead else A.transitions[q].get(s, dead)

    return _build(A.alphabet, A.start, step, lambda q: q == dead or q not in A.accepting)


def concat(A: Dfa, B: Dfa) -> Dfa:
    alphabet = _same_alphabet(A, B)

    def with_start(a, bs):
        return bs | {B.start} if a is not None and a in A.accepting else bs

    def step(key, s):
        a, bs = key
        a2 = A.step(a, s)
        bs2 = frozenset(t for t in (B.transitions[b].get(s) for b in bs) if t is not None)
        bs2 = frozenset(with_start(a2, bs2))
        if a2 is None and not bs2:
            return None
        return (a2, bs2)

    start = (A.start, frozenset(with_start(A.start, frozenset())))
    return _build(alphabet, start, step, lambda key: any(b in B.accepting for b in key[1]))


def is_empty(A: Dfa) -> bool:
    # trimmed automata are empty iff they have no accepting state
    return not A.accepting


def is_subset(A: Dfa, B: Dfa) -> bool:
    return is_empty(difference(A, B))


def equivalent(A: Dfa, B: Dfa) -> bool:
    return is_subset(A, B) and is_subset(B, A)


def _on_cycle(A: Dfa) -> list[bool]:
    """For each state, whether it lies on a cycle."""
    out = []
    for q in range(A.num_states):
        seen = set()
        stack = list(A.transitions[q].values())
        found = False
        while stack:
            p = stack.pop()
            if p == q:
                found = True
                break
            if p not in seen:
                seen.add(p)
                stack.extend(A.transitions[p].values())
        out.append(found)
    return out


def is_finite(A: Dfa) -> bool:
    return not any(_on_cycle(A))


def enumerate_upto(A: Dfa, maxlen: int) -> list[str]:
    """All accepted words of length <= maxlen in length-lex order."""
    out = []
    level = [(A.start, "")]
    for n in range(maxlen + 1):
        out.extend(w for q, w in level if q in A.accepting)
        if n == maxlen:
            break
        nxt = []
        for q, w in level:
            row = A.transitions[q]
            for s in A.alphabet:
                t = row.get(s)
                if t is not None:
                    nxt.append((t, w + s))
        level = nxt
        if not level:
            break
    return out


def minimize(A: Dfa) -> Dfa:
    """Moore partition refinement; the result is trimmed and canonically numbered."""
    n = A.num_states
    dead = n
    rows = [[A.transitions[q].get(s, dead) for s in A.alphabet] for q in range(n)]
    rows.append([dead] * len(A.alphabet))
    block = [1 if q in A.accepting else 0 for q in range(n)] + [0]
    while True:
        sigs = [(block[q],) + tuple(block[t] for t in rows[q]) for q in range(n + 1)]
        ids: dict = {}
        new_block = [ids.setdefault(sig, len(ids)) for sig in sigs]
        if len(ids) == len(set(block)):
            break
        block = new_block
    block = new_block
    m = max(block) + 1
    new_rows: list[dict] = [{} for _ in range(m)]
    for q in range(n + 1):
        for k, s in enumerate(A.alphabet):
            new_rows[block[q]][s] = block[rows[q][k]]
    final = {block[q] for q in A.accepting}
    return _trim(A.alphabet, new_rows, final, start=block[A.start])


def _shortest_paths(A: Dfa, sources: Iterable[int]) -> dict[int, str]:
    """Length-lex least label from any source to each reachable state."""
    best = {}
    queue = deque()
    for q in sources:
        if q not in best:
            best[q] = ""
            queue.append(q)
    while queue:
        q = queue.popleft()
        for s in A.alphabet:
            t = A.transitions[q].get(s)
            if t is not None and t not in best:
                best[t] = best[q] + s
                queue.append(t)
    return best


@dataclass(frozen=True)
class Pumping:
    """The infinite family ``prefix (loop)^n suffix``."""

    prefix: str
    loop: str
    suffix: str

    def instance(self, n: int) -> str:
        return self.prefix + self.loop * n + self.suffix

    def __str__(self):
        return f"{self.prefix}({self.loop})*{self.suffix}"


def pumping_decomposition(A: Dfa) -> Optional[Pumping]:
    """A pumpable family through a cycle of the trimmed automaton.

    The cycle state is the one closest to acceptance (shortest suffix),
    then closest to the start, so ``abc(dc)*bab`` is preferred over the
    equivalent ``ab(cd)*cbab``.
    """
    cyc = _on_cycle(A)
    if not any(cyc):
        return None
    access = _shortest_paths(A, [A.start])

    def tail(p):
        paths = _shortest_paths(A, [p])
        return min((paths[f] for f in A.accepting if f in paths), key=canonical_key)

    q = min((p for p in range(A.num_states) if cyc[p]),
            key=lambda p: (canonical_key(tail(p)), canonical_key(access[p])))
    loops = []
    for s in A.alphabet:
        t = A.transitions[q].get(s)
        if t is not None:
            back = _shortest_paths(A, [t]).get(q)
            if back is not None:
                loops.append(s + back)
    loop = min(loops, key=canonical_key)
    return Pumping(access[q], loop, tail(q))


@dataclass(frozen=True)
class GeneratorResult:
    """Minimal generating set of a submonoid.

    ``kind`` is "finite" (``generators`` is the full set) or "infinite"
    (``generators`` holds every generator up to ``sample_len`` and
    ``pumping`` describes an infinite subfamily).
    """

    kind: str
    generators: tuple[str, ...]
    pumping: Optional[Pumping] = None
    sample_len: Optional[int] = None
    automaton: Optional[Dfa] = None

    @property
    def finite(self) -> bool:
        return self.kind == "finite"


def is_submonoid(M: Dfa) -> bool:
    return M.start in M.accepting and is_subset(concat(M, M), M)


def minimal_generating_set(M: Dfa, sample_len: int = DEFAULT_SAMPLE_LEN) -> GeneratorResult:
    """Generators of a submonoid: nonempty members that are not a product of two."""
    if not is_submonoid(M):
        raise NotASubmonoid("language is not a submonoid (needs epsilon and closure)")
    plus = difference(M, epsilon_automaton(M.alphabet))
    gens = minimize(difference(plus, concat(plus, plus)))
    if is_finite(gens):
        words = enumerate_upto(gens, gens.num_states)
        return GeneratorResult("finite", tuple(words), automaton=gens)
    return GeneratorResult("infinite", tuple(enumerate_upto(gens, sample_len)),
                           pumping=pumping_decomposition(gens), sample_len=sample_len,
                           automaton=gens)

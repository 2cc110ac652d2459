"""Binary roots of a single primitive word."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import isqrt
from typing import Optional

from .errors import EmptyWord, NotPrimitive
from .factorization import WordSet, factorizations, in_star
from .hull import covers, pair_candidates
from .maximal import pair_is_primitive
from .words import Alphabet, primitive_word_root


@dataclass(frozen=True)
class BinaryRoot:
    pair: WordSet
    blocks: tuple[str, ...]

    @property
    def size(self) -> int:
        return self.pair.total_length


@dataclass(frozen=True)
class BinaryRootReport:
    word: str
    roots: tuple[BinaryRoot, ...]

    @property
    def small_roots(self) -> tuple[BinaryRoot, ...]:
        return tuple(r for r in self.roots if is_small(r.size, len(self.word)))

    @property
    def small_root(self) -> Optional[BinaryRoot]:
        small = self.small_roots
        return small[0] if small else None


def is_small(size: int, length: int) -> bool:
    """size < sqrt(length), in integers."""
    return size * size < length


def _require_primitive(w: str) -> None:
    if not w:
        raise EmptyWord("binary roots need a nonempty word")
    root, exponent = primitive_word_root(w)
    if exponent > 1:
        raise NotPrimitive(root, exponent)


def binary_roots(w: str) -> BinaryRootReport:
    """All primitive pairs {x, y} such that w factors over them using both."""
    _require_primitive(w)
    roots = []
    for x, y in pair_candidates([w]):
        if in_star(w, (x,)) or in_star(w, (y,)) or not covers((x, y), [w]):
            continue
        if not pair_is_primitive(x, y):
            continue
        pair = WordSet([x, y])
        (blocks,) = factorizations(w, pair, cap=1)
        roots.append(BinaryRoot(pair, tuple(pair[i] for i in blocks)))
    roots.sort(key=lambda r: r.pair.sort_key())
    return BinaryRootReport(w, tuple(roots))


def small_binary_root(w: str) -> Optional[WordSet]:
    """The binary root of size below sqrt(|w|), if any."""
    root = binary_roots(w).small_root
    return None if root is None else root.pair


def small_primitive_pairs(alphabet: Alphabet, max_size: int) -> list[WordSet]:
    words = list(alphabet.words_upto(max_size - 1))
    out = [WordSet([x, y]) for x, y in combinations(words, 2)
           if len(x) + len(y) <= max_size and pair_is_primitive(x, y)]
    return sorted(out, key=WordSet.sort_key)


def _words_over(pair: WordSet, length: int):
    """Words of exactly ``length`` in pair* using both generators."""
    x, y = pair
    stack = [("", False, False)]
    while stack:
        w, used_x, used_y = stack.pop()
        if len(w) == length:
            if used_x and used_y:
                yield w
            continue
        if len(w) + len(x) <= length:
            stack.append((w + x, True, used_y))
        if len(w) + len(y) <= length:
            stack.append((w + y, used_x, True))


def small_root_census(alphabet: Alphabet, max_len: int) -> dict:
    """Count, per primitive word up to ``max_len``, its binary roots below sqrt(|w|).

    Generates each small primitive pair's words directly instead of
    scanning every word, so it scales to all words of length 14 over three
    letters. Returns words with two or more small roots under ``violations``.
    """
    max_size = isqrt(max_len - 1) if max_len > 1 else 0
    pairs = small_primitive_pairs(alphabet, max_size) if max_size >= 2 else []
    incidences = 0
    words_with_root = 0
    violations = []
    for n in range(1, max_len + 1):
        eligible = [p for p in pairs if is_small(p.total_length, n)]
        counts: Counter = Counter()
        for p in eligible:
            for w in _words_over(p, n):
                counts[w] += 1
        for w, c in counts.items():
            # factorizations over a code are unique, so each pair counts once
            if primitive_word_root(w)[1] != 1:
                continue
            incidences += c
            words_with_root += 1
            if c > 1:
                violations.append(w)
    return {
        "primitive_words": sum(count_primitive_words(alphabet.size, n) for n in range(1, max_len + 1)),
        "small_pairs": len(pairs),
        "words_with_small_root": words_with_root,
        "incidences": incidences,
        "violations": sorted(violations, key=lambda w: (len(w), w)),
    }


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def count_primitive_words(k: int, n: int) -> int:
    """Number of primitive words of length n over k letters."""
    return sum(_mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)

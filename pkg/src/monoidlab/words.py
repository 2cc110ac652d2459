"""Elementary operations on words.

Words are plain ``str`` values: one character is one symbol. An
:class:`Alphabet` gives the dense symbol indexing used by the automata.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .errors import EmptyWord, InvalidWord

MAX_ALPHABET = 26


@dataclass(frozen=True)
class Alphabet:
    symbols: str

    def __post_init__(self):
        if not 1 <= len(self.symbols) <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 1..{MAX_ALPHABET}")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")
        if any(not s.isprintable() or s.isspace() or s in ",#" for s in self.symbols):
            raise ValueError("alphabet symbols must be printable, non-space, not ',' or '#'")

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "Alphabet":
        letters = sorted(set("".join(words)))
        return cls("".join(letters) or "a")

    @classmethod
    def first(cls, size: int) -> "Alphabet":
        return cls("abcdefghijklmnopqrstuvwxyz"[:size])

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        i = self.symbols.find(symbol)
        if i < 0 or len(symbol) != 1:
            raise InvalidWord(f"symbol {symbol!r} not in alphabet {self.symbols!r}")
        return i

    def validate(self, w: str) -> str:
        for s in w:
            self.index(s)
        return w

    def words(self, length: int) -> Iterator[str]:
        """All words of exactly ``length`` symbols, in lexicographic order."""
        for t in product(self.symbols, repeat=length):
            yield "".join(t)

    def words_upto(self, maxlen: int, include_empty: bool = False) -> Iterator[str]:
        for n in range(0 if include_empty else 1, maxlen + 1):
            yield from self.words(n)

    def __str__(self):
        return self.symbols


def _nonempty(w: str) -> None:
    if not w:
        raise EmptyWord("operation requires a nonempty word")


def is_primitive(w: str) -> bool:
    """True iff ``w`` is not an internal factor of ``ww``."""
    _nonempty(w)
    return (w + w).find(w, 1) == len(w)


def primitive_word_root(w: str) -> tuple[str, int]:
    """Return ``(root, exponent)`` with ``w == root * exponent`` and root primitive."""
    _nonempty(w)
    # the first internal occurrence of w in ww is at the root's length
    p = (w + w).find(w, 1)
    return w[:p], len(w) // p


def commutes(x: str, y: str) -> bool:
    _nonempty(x)
    _nonempty(y)
    return x + y == y + x


def factors(w: str, include_empty: bool = False) -> set[str]:
    out = {w[i:j] for i in range(len(w)) for j in range(i + 1, len(w) + 1)}
    if include_empty:
        out.add("")
    return out


def prefixes(w: str, proper: bool = False) -> list[str]:
    """Nonempty prefixes of ``w`` in increasing length."""
    stop = len(w) if proper else len(w) + 1
    return [w[:i] for i in range(1, stop)]


def suffixes(w: str, proper: bool = False) -> list[str]:
    start = 1 if proper else 0
    return [w[i:] for i in range(start, len(w))]


def internal_occurrences(pattern: str, host: str) -> list[int]:
    """Offsets where ``pattern`` occurs in ``host`` with nonempty context on both sides."""
    out = []
    i = host.find(pattern, 1)
    while i != -1 and i + len(pattern) < len(host):
        out.append(i)
        i = host.find(pattern, i + 1)
    return out


def canonical_key(w: str) -> tuple[int, str]:
    """Length-then-lexicographic order on words."""
    return (len(w), w)


def is_square_free(w: str) -> bool:
    n = len(w)
    for length in range(1, n // 2 + 1):
        for i in range(n - 2 * length + 1):
            if w[i:i + length] == w[i + length:i + 2 * length]:
                return False
    return True

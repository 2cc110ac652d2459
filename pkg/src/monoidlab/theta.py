"""Involutive morphisms and antimorphisms, theta-powers and theta-primitivity."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional

from .errors import DegeneratePair, EmptyWord
from .factorization import WordSet, in_star
from .hull import common_root, covering_pairs
from .maximal import cube_occurrence_check, pair_is_primitive
from .words import Alphabet

MORPHIC = "morphic"
ANTIMORPHIC = "antimorphic"


@dataclass(frozen=True)
class Involution:
    """A letter involution extended to words, reversed when antimorphic."""

    mapping: tuple[tuple[str, str], ...]
    kind: str = MORPHIC

    def __post_init__(self):
        if self.kind not in (MORPHIC, ANTIMORPHIC):
            raise ValueError(f"kind must be {MORPHIC!r} or {ANTIMORPHIC!r}")
        m = dict(self.mapping)
        for a, b in m.items():
            # an unlisted target is taken to map back
            if m.get(b, a) != a:
                raise ValueError(f"not an involution: {a}->{b} but {b}->{m[b]}")
        if self.kind == MORPHIC and all(a == b for a, b in m.items()):
            raise ValueError("the identity morphism is not allowed")
        # complete the table with the images of the targets
        full = dict(m)
        for a, b in m.items():
            full.setdefault(b, a)
        object.__setattr__(self, "mapping", tuple(sorted(full.items())))
        object.__setattr__(self, "_table", str.maketrans(full))

    @classmethod
    def parse(cls, text: str, kind: str = MORPHIC) -> "Involution":
        """Parse ``"a:b,b:a,c:c"``; ``"a:b"`` alone implies b:a, other letters are fixed."""
        pairs = []
        for item in filter(None, (s.strip() for s in text.split(","))):
            a, sep, b = item.partition(":")
            if not sep or len(a) != 1 or len(b) != 1:
                raise ValueError(f"bad involution entry {item!r}")
            pairs.append((a, b))
        return cls(tuple(pairs), kind)

    @classmethod
    def reversal(cls) -> "Involution":
        return cls((), ANTIMORPHIC)

    def __call__(self, w: str) -> str:
        out = w.translate(self._table)
        return out[::-1] if self.kind == ANTIMORPHIC else out

    def __str__(self):
        body = ",".join(f"{a}:{b}" for a, b in self.mapping) or "id"
        return f"{body} ({self.kind})"


def apply_theta(theta: Involution, w: str) -> str:
    return theta(w)


def all_involutions(alphabet: Alphabet) -> Iterator[Involution]:
    """Every admissible involution on the alphabet, both kinds."""
    seen = set()
    for perm in permutations(alphabet.symbols):
        m = dict(zip(alphabet.symbols, perm))
        if any(m[m[a]] != a for a in m):
            continue
        key = tuple(sorted(m.items()))
        if key in seen:
            continue
        seen.add(key)
        for kind in (MORPHIC, ANTIMORPHIC):
            if kind == MORPHIC and all(a == b for a, b in key):
                continue
            yield Involution(key, kind)


def in_theta_closure(w: str, t: str, theta: Involution) -> bool:
    """Plain membership ``w in {t, theta(t)}*`` (first block unrestricted)."""
    return in_star(w, (t, theta(t)))


def is_theta_power(w: str, t: str, theta: Involution) -> bool:
    """``w in t{t, theta(t)}*``: the first block is t itself."""
    if not t:
        raise EmptyWord("theta-power base must be nonempty")
    return w.startswith(t) and in_star(w[len(t):], (t, theta(t)))


def theta_root(w: str, theta: Involution) -> str:
    if not w:
        raise EmptyWord("theta-root needs a nonempty word")
    for i in range(1, len(w) + 1):
        if is_theta_power(w, w[:i], theta):
            return w[:i]
    raise AssertionError("w is a theta-power of itself")  # pragma: no cover


def is_theta_primitive(w: str, theta: Involution) -> bool:
    return theta_root(w, theta) == w


def is_theta_palindrome(w: str, theta: Involution) -> bool:
    return theta(w) == w


def is_theta_invariant(X, theta: Involution) -> bool:
    words = set(X)
    return all(theta(w) in words for w in words)


def pair_root(X) -> Optional[WordSet]:
    """Least covering pair of a rank-two set (its binary root); None for rank one."""
    if common_root(list(X)) is not None:
        return None
    pairs = covering_pairs(list(X))
    return pairs[0] if pairs else None


@dataclass(frozen=True)
class BridgeReport:
    word: str
    image: str
    kind: str
    theta_primitive: bool
    theta_root: str
    pair_primitive: bool
    pair_root: Optional[WordSet]
    # morphic: theta-primitive iff the pair is primitive
    equivalence_ok: Optional[bool]
    # antimorphic: pair primitive implies theta-primitive
    implication_ok: Optional[bool]
    # antimorphic, theta-primitive, pair not primitive: root made of theta-palindromes
    palindromes: Optional[WordSet]
    palindromes_ok: Optional[bool]
    # theta-primitive words: no internal w.theta(w) / theta(w).w in {w, theta(w)}^3
    cube_clean: Optional[bool]

    @property
    def ok(self) -> bool:
        checks = (self.equivalence_ok, self.implication_ok, self.palindromes_ok, self.cube_clean)
        return all(c is not False for c in checks)


def check_bridge_props(w: str, theta: Involution) -> BridgeReport:
    if not w:
        raise EmptyWord("bridge checks need a nonempty word")
    image = theta(w)
    if image == w:
        raise DegeneratePair(f"{w!r} is fixed by theta; the pair collapses")
    root = theta_root(w, theta)
    tp = root == w
    pp = pair_is_primitive(w, image)
    proot = None if pp else pair_root([w, image])
    equivalence_ok = implication_ok = palindromes = palindromes_ok = None
    if theta.kind == MORPHIC:
        equivalence_ok = tp == pp
    else:
        implication_ok = tp or not pp
        if tp and not pp:
            palindromes = proot
            palindromes_ok = proot is not None and all(is_theta_palindrome(p, theta) for p in proot)
    cube_clean = cube_occurrence_check(w, image).clean if tp else None
    return BridgeReport(w, image, theta.kind, tp, root, pp, proot, equivalence_ok,
                        implication_ok, palindromes, palindromes_ok, cube_clean)


def invariant_root_check(X, theta: Involution) -> tuple[Optional[WordSet], Optional[bool]]:
    """For a theta-invariant pair, its root and whether the root is theta-invariant too."""
    root = pair_root(list(X))
    if root is None:
        return None, None
    return root, is_theta_invariant(root, theta)

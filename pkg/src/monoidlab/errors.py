"""Exception types raised by monoidlab operations."""


class MonoidLabError(Exception):
    """Base class for all library errors."""


class EmptyWord(MonoidLabError, ValueError):
    pass


class InvalidWord(MonoidLabError, ValueError):
    """A word contains a symbol outside the declared alphabet."""


class InvalidPair(MonoidLabError, ValueError):
    pass


class AlphabetMismatch(MonoidLabError, ValueError):
    pass


class NotASubmonoid(MonoidLabError, ValueError):
    pass


class TooLarge(MonoidLabError, ValueError):
    """Input exceeds a desk-scale guardrail."""


class NotRankTwo(MonoidLabError, ValueError):
    def __init__(self, rank):
        super().__init__(f"set has rank {rank}, not 2")
        self.rank = rank


class IsRankOne(MonoidLabError, ValueError):
    def __init__(self, root):
        super().__init__(f"set has rank 1 with root {root!r}")
        self.root = root


class NotPrimitive(MonoidLabError, ValueError):
    def __init__(self, root, exponent):
        super().__init__(f"word is not primitive: ({root})^{exponent}")
        self.root = root
        self.exponent = exponent


class DegeneratePair(MonoidLabError, ValueError):
    """The pair {w, theta(w)} collapses to a single word."""

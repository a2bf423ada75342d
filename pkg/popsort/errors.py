"""
Error types shared by the pop-stack-sorting packages
"""


class InvalidPermutationError(ValueError):
    """Sequence is not a bijection on {1..n}"""

    def __init__(self, message: str, value=None):
        super().__init__(message)
        self.value = value


class LongRunError(ValueError):
    """A decreasing run of length >= 4 appeared after the first sort"""

    def __init__(self, start: int, length: int, transition_index: int):
        super().__init__(
            f"decreasing run of length {length} at position {start} "
            f"in the source of sort {transition_index}"
        )
        self.start = start
        self.length = length
        self.transition_index = transition_index


class UnknownValueError(ValueError):
    """Value does not occur in the traced permutation"""

    def __init__(self, value: int, n: int):
        super().__init__(f"value {value} does not occur in a permutation of length {n}")
        self.value = value
        self.n = n


class ExhaustiveCapError(ValueError):
    """Exact enumeration requested above the configured cap"""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"n = {n} is above the exhaustive cap ({cap}); "
            f"use sampled_dn / --samples instead"
        )
        self.n = n
        self.cap = cap


class UnknownIdentifierError(ValueError):
    """Unknown claim id, window id or similar catalog key"""

    def __init__(self, kind: str, identifier: str, known):
        super().__init__(
            f"unknown {kind} '{identifier}' (known: {', '.join(sorted(known))})"
        )
        self.identifier = identifier


class TraceLimitError(RuntimeError):
    """Pop iteration exceeded n passes; signals an implementation bug"""

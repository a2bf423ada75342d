"""
Pop-stack sorting - Permutation Core

Permutations, decreasing runs, the Pop pass and sort traces.
"""

from .errors import (
    InvalidPermutationError,
    LongRunError,
    UnknownValueError,
    ExhaustiveCapError,
    UnknownIdentifierError,
    TraceLimitError,
)
from .permutation import (
    Permutation,
    RunDecomposition,
    from_values,
    identity,
    parse_permutation,
    format_permutation,
    decreasing_runs,
    pop,
    pop_values,
    reverse_complement,
)
from .trace import SortTrace, sort_trace, count_sorts, t_star
from .random_perm import sample_generator, random_permutation, random_array

__version__ = '1.0.0'
__all__ = [
    'InvalidPermutationError',
    'LongRunError',
    'UnknownValueError',
    'ExhaustiveCapError',
    'UnknownIdentifierError',
    'TraceLimitError',
    'Permutation',
    'RunDecomposition',
    'from_values',
    'identity',
    'parse_permutation',
    'format_permutation',
    'decreasing_runs',
    'pop',
    'pop_values',
    'reverse_complement',
    'SortTrace',
    'sort_trace',
    'count_sorts',
    't_star',
    'sample_generator',
    'random_permutation',
    'random_array',
]

"""
Pop-stack sorting - Construction Families

Block-structured permutations with many pivots of the extreme elements.
"""

from .families import (
    Family,
    FamilySpec,
    ElementMetrics,
    FamilyMetrics,
    family_blocks,
    asymmetric_family,
    symmetric_family,
    generate,
    family_metrics,
    plot_data,
)

__version__ = '1.0.0'
__all__ = [
    'Family',
    'FamilySpec',
    'ElementMetrics',
    'FamilyMetrics',
    'family_blocks',
    'asymmetric_family',
    'symmetric_family',
    'generate',
    'family_metrics',
    'plot_data',
]

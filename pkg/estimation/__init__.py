"""
Pop-stack sorting - Depth Estimation

Exact and Monte-Carlo statistics of the number of Pop passes.
"""

from .depth import (
    Method,
    DnEstimate,
    exact_dn,
    sampled_dn,
    exact_histogram,
    sampled_t_stars,
    t_star_distribution,
)
from .bound_gap import (
    BoundGapRecord,
    BoundGapSummary,
    BoundGapReport,
    bound_gap_report,
    lichev_fraction,
)

__version__ = '1.0.0'
__all__ = [
    'Method',
    'DnEstimate',
    'exact_dn',
    'sampled_dn',
    'exact_histogram',
    'sampled_t_stars',
    't_star_distribution',
    'BoundGapRecord',
    'BoundGapSummary',
    'BoundGapReport',
    'bound_gap_report',
    'lichev_fraction',
]

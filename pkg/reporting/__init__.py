"""
Pop-stack sorting - Reporting Module

JSON and CSV documents shared by the command line and the HTTP API.
"""

from .export import (
    ESTIMATE_COLUMNS,
    HISTOGRAM_COLUMNS,
    BOUND_GAP_COLUMNS,
    PLOT_COLUMNS,
    counterexample_to_dict,
    claim_report_to_dict,
    motion_table_to_dict,
    trace_to_dict,
    witness_to_dict,
    bounds_to_dict,
    family_metrics_to_dict,
    bound_gap_summary_to_dict,
    estimates_frame,
    histogram_frame,
    bound_gap_frame,
    plot_frame,
    frame_records,
    to_json,
    to_csv,
    write_document,
    export_json,
    export_csv,
)

__version__ = '1.0.0'
__all__ = [
    'ESTIMATE_COLUMNS',
    'HISTOGRAM_COLUMNS',
    'BOUND_GAP_COLUMNS',
    'PLOT_COLUMNS',
    'counterexample_to_dict',
    'claim_report_to_dict',
    'motion_table_to_dict',
    'trace_to_dict',
    'witness_to_dict',
    'bounds_to_dict',
    'family_metrics_to_dict',
    'bound_gap_summary_to_dict',
    'estimates_frame',
    'histogram_frame',
    'bound_gap_frame',
    'plot_frame',
    'frame_records',
    'to_json',
    'to_csv',
    'write_document',
    'export_json',
    'export_csv',
]

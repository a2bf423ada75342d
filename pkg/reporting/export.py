"""
Export results to JSON and CSV documents

Every document is built from plain dicts / DataFrames first, so the cli and
the HTTP API emit the same content.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import pandas as pd

from constructions import FamilyMetrics
from estimation import BoundGapReport, BoundGapSummary, DnEstimate, Method
from motion import MotionTable
from popsort import Permutation, SortTrace, format_permutation
from verifiers import BoundWitness, ClaimReport, Counterexample

ESTIMATE_COLUMNS = ['n', 'method', 'samples', 'seed', 'mean_t_star', 'ratio', 'std_error', 'exact_mean']
HISTOGRAM_COLUMNS = ['t_star', 'count']
BOUND_GAP_COLUMNS = ['sample_index', 't_star', 'best_bound', 'i', 'k', 'lichev_event']
PLOT_COLUMNS = ['position', 'value']


def _perm_text(values: Union[Permutation, Sequence[int]]) -> str:
    if isinstance(values, Permutation):
        return format_permutation(values)
    return ",".join(str(v) for v in values)


def counterexample_to_dict(c: Counterexample) -> Dict[str, Any]:
    return {
        'permutation': _perm_text(c.permutation),
        't': c.t,
        'value': c.value,
        'position': c.position,
        'detail': c.detail,
    }


def claim_report_to_dict(report: ClaimReport) -> Dict[str, Any]:
    return {
        'claim_id': report.claim_id,
        'parameters': dict(report.parameters),
        'checked_count': report.checked_count,
        'counterexamples': [counterexample_to_dict(c) for c in report.counterexamples],
        'elapsed_seconds': report.elapsed_seconds,
    }


def motion_table_to_dict(table: MotionTable) -> Dict[str, Any]:
    return {
        't': table.transition_index,
        'motions': [
            {'value': value, 'kind': motion.kind.value, 'offset': motion.offset}
            for value, motion in table.items()
        ],
    }


def trace_to_dict(trace: SortTrace, tables: Optional[Sequence[MotionTable]] = None) -> Dict[str, Any]:
    """Steps sigma_0..sigma_{t*} in comma form, with the motion tables when given"""
    document: Dict[str, Any] = {
        'n': trace.n,
        't_star': trace.t_star,
        'steps': [format_permutation(step) for step in trace.steps],
    }
    if tables is not None:
        document['motions'] = [motion_table_to_dict(table) for table in tables]
    return document


def witness_to_dict(witness: BoundWitness) -> Dict[str, Any]:
    return {'i': witness.i, 'k': witness.k, 'bound': witness.bound}


def bounds_to_dict(
    p: Permutation,
    t_star: int,
    best: BoundWitness,
    bounds: Iterable[BoundWitness],
    variant: str
) -> Dict[str, Any]:
    return {
        'permutation': format_permutation(p),
        'variant': variant,
        't_star': t_star,
        'best_bound': witness_to_dict(best),
        'bounds': [witness_to_dict(w) for w in bounds],
    }


def family_metrics_to_dict(metrics: FamilyMetrics, include_permutation: bool = False) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        'family': metrics.spec.family.value,
        'k': metrics.spec.k,
        'n': metrics.spec.n,
        't_star': metrics.t_star,
        'elements': [
            {'value': e.value, 'pivot_count': e.pivot_count, 'arrival_sort': e.arrival_sort}
            for e in metrics.elements
        ],
        'last_movers': list(metrics.last_movers),
    }
    if include_permutation:
        document['permutation'] = format_permutation(metrics.permutation)
    return document


def bound_gap_summary_to_dict(summary: BoundGapSummary) -> Dict[str, Any]:
    return {
        'n': summary.n,
        'samples': summary.samples,
        'seed': summary.seed,
        'mean_t_star_ratio': summary.mean_t_star_ratio,
        'mean_bound_ratio': summary.mean_bound_ratio,
        'min_gap': summary.min_gap,
        'lichev_fraction': summary.lichev_fraction,
        'consistent': summary.consistent,
    }


def _number(value: Union[Fraction, float, None]) -> Optional[str]:
    if value is None:
        return None
    return repr(float(value))


def estimates_frame(estimates: Iterable[DnEstimate]) -> pd.DataFrame:
    """
    One row per estimate

    The exact method leaves samples, seed and std_error empty and writes the
    rational mean as numerator/denominator in exact_mean.
    """
    rows: List[Dict[str, Any]] = []
    for estimate in estimates:
        exact = estimate.method is Method.EXACT
        rows.append({
            'n': estimate.n,
            'method': estimate.method.value,
            'samples': None if exact else estimate.samples,
            'seed': None if exact else estimate.seed,
            'mean_t_star': _number(estimate.mean_t_star),
            'ratio': _number(estimate.ratio),
            'std_error': None if exact else _number(estimate.std_error),
            'exact_mean': (
                f"{estimate.mean_t_star.numerator}/{estimate.mean_t_star.denominator}" if exact else None
            ),
        })
    return pd.DataFrame(rows, columns=ESTIMATE_COLUMNS, dtype=object)


def histogram_frame(histogram: Dict[int, int]) -> pd.DataFrame:
    rows = [{'t_star': t, 'count': count} for t, count in sorted(histogram.items())]
    return pd.DataFrame(rows, columns=HISTOGRAM_COLUMNS, dtype=object)


def bound_gap_frame(report: BoundGapReport) -> pd.DataFrame:
    rows = [
        {
            'sample_index': r.sample_index,
            't_star': r.t_star,
            'best_bound': r.best_bound,
            'i': r.i,
            'k': r.k,
            'lichev_event': 'true' if r.lichev_event else 'false',
        }
        for r in report.records
    ]
    return pd.DataFrame(rows, columns=BOUND_GAP_COLUMNS, dtype=object)


def plot_frame(points: pd.DataFrame) -> pd.DataFrame:
    return points.loc[:, PLOT_COLUMNS]


def to_json(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def frame_records(frame: pd.DataFrame) -> List[Dict[str, Any]]:
    """CSV rows as JSON-ready dicts (empty cells become null)"""
    cleaned = frame.astype(object).where(frame.notna(), None)
    return cleaned.to_dict(orient='records')


def write_document(text: str, output_path: Optional[str] = None) -> Optional[str]:
    """
    Write a rendered document

    Returns:
        The path written, or None when the text went to standard output
    """
    if output_path is None or output_path == '-':
        print(text, end='')
        return None
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='utf-8')
    return str(path)


def export_json(document: Any, output_path: Optional[str] = None) -> Optional[str]:
    """Export a JSON document"""
    return write_document(to_json(document), output_path)


def export_csv(frame: pd.DataFrame, output_path: Optional[str] = None) -> Optional[str]:
    """Export a DataFrame as CSV"""
    return write_document(to_csv(frame), output_path)

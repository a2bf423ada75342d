"""
Pop-stack sorting lab - command line

Exit codes: 0 success, 1 a verify run found counterexamples, 2 bad input.
"""

import argparse
import sys
from typing import List, Optional, Sequence

from constructions import Family, FamilySpec, family_metrics, generate, plot_data
from estimation import (
    bound_gap_report,
    exact_dn,
    lichev_fraction,
    sampled_dn,
    t_star_distribution,
)
from motion import InteriorMode, classify_trace
from popsort import format_permutation, parse_permutation, pop, sort_trace
from reporting import (
    bound_gap_frame,
    bound_gap_summary_to_dict,
    bounds_to_dict,
    claim_report_to_dict,
    estimates_frame,
    export_csv,
    export_json,
    family_metrics_to_dict,
    histogram_frame,
    plot_frame,
    trace_to_dict,
    write_document,
)
from verifiers import (
    BOUND_VARIANTS,
    CLAIMS,
    DEFAULT_WINDOW,
    EVENT_FORMS,
    WINDOWS,
    ClaimOptions,
    all_bounds,
    best_bound,
    run_claim,
    run_sweep,
    verify_permutation,
)

CLAIM_CHOICES = list(CLAIMS) + ['all']
MODE_CHOICES = [mode.value for mode in InteriorMode] + ['both']


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer seed, got '{text}'")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer seed, got {value}")
    return value


def _claims_epilog() -> str:
    lines = ["claims:"]
    lines += [f"  {claim_id:<14} {claim.description}" for claim_id, claim in CLAIMS.items()]
    lines.append(f"  {'all':<14} every claim under its default reading")
    lines.append("windows:")
    lines += [f"  {window_id:<20} {formula}" for window_id, (_, formula) in WINDOWS.items()]
    return "\n".join(lines)


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--output", "-o", metavar="PATH",
                        help="write to PATH instead of standard output")
    parser.add_argument("--threads", type=_positive_int, metavar="T",
                        help="worker processes (default: POPSTACK_THREADS or all CPUs)")


def _add_sampling(parser: argparse.ArgumentParser, exact: bool):
    parser.add_argument("--n", type=_positive_int, required=True, help="permutation length")
    if exact:
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument("--exact", action="store_true", help="enumerate all n! permutations")
        group.add_argument("--samples", type=_positive_int, help="number of uniform samples")
    else:
        parser.add_argument("--samples", type=_positive_int, required=True,
                            help="number of uniform samples")
    parser.add_argument("--seed", type=_seed, help="64-bit master seed (required with --samples)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="popstack",
        description="Pop-stack sorting lab: traces, motion analysis, claim verifiers and statistics",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sort_parser = subparsers.add_parser("sort", help="print pop(p)")
    sort_parser.add_argument("perm", help="permutation, '4,7,1,8' or compact '4718' for n <= 9")
    _add_common(sort_parser)
    sort_parser.set_defaults(handler=_cmd_sort)

    trace_parser = subparsers.add_parser("trace", help="print the sort trace of p as JSON")
    trace_parser.add_argument("perm", help="permutation in comma or compact form")
    trace_parser.add_argument("--motions", action="store_true", help="include the motion tables")
    _add_common(trace_parser)
    trace_parser.set_defaults(handler=_cmd_trace)

    verify_parser = subparsers.add_parser(
        "verify",
        help="check a claim exhaustively or on one permutation",
        epilog=_claims_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    verify_parser.add_argument("--claim", required=True, choices=CLAIM_CHOICES, metavar="ID",
                               help=f"claim id: {', '.join(CLAIM_CHOICES)}")
    verify_parser.add_argument("--n-max", type=_positive_int, help="scan every length 1..N")
    verify_parser.add_argument("--perm", help="check a single permutation instead of scanning")
    verify_parser.add_argument("--mode", choices=MODE_CHOICES, default="strict",
                               help="interior reading (default: strict); 'both' runs both")
    verify_parser.add_argument("--window", choices=list(WINDOWS), default=DEFAULT_WINDOW, metavar="ID",
                               help=f"window id: {', '.join(WINDOWS)} (default: {DEFAULT_WINDOW})")
    verify_parser.add_argument("--s-min", type=_positive_int, default=2,
                               help="first sort checked by the window claims (default: 2)")
    verify_parser.add_argument("--variant", choices=list(BOUND_VARIANTS), default="stated",
                               help="thm-3.4 bound variant (default: stated)")
    _add_common(verify_parser)
    verify_parser.set_defaults(handler=_cmd_verify)

    bound_parser = subparsers.add_parser("bound", help="best lower bound on t* and every per-i bound")
    bound_parser.add_argument("perm", help="permutation in comma or compact form")
    bound_parser.add_argument("--variant", choices=list(BOUND_VARIANTS), default="stated")
    _add_common(bound_parser)
    bound_parser.set_defaults(handler=_cmd_bound)

    dn_parser = subparsers.add_parser("dn", help="mean number of sorts D_n as a CSV row")
    _add_sampling(dn_parser, exact=True)
    _add_common(dn_parser)
    dn_parser.set_defaults(handler=_cmd_dn)

    hist_parser = subparsers.add_parser("hist", help="t* histogram as CSV")
    _add_sampling(hist_parser, exact=True)
    _add_common(hist_parser)
    hist_parser.set_defaults(handler=_cmd_hist)

    construct_parser = subparsers.add_parser("construct", help="block-structured family members")
    construct_parser.add_argument("--family", required=True, choices=[f.value for f in Family])
    construct_parser.add_argument("--k", type=_positive_int, required=True, help="block parameter")
    construct_parser.add_argument("--metrics", action="store_true",
                                  help="emit t*, pivot counts and arrival sorts as JSON")
    construct_parser.add_argument("--permutation", action="store_true",
                                  help="include the permutation in the metrics document")
    construct_parser.add_argument("--plot-data", action="store_true",
                                  help="emit (position, value) pairs as CSV")
    _add_common(construct_parser)
    construct_parser.set_defaults(handler=_cmd_construct)

    lichev_parser = subparsers.add_parser("lichev", help="fraction of samples with a large element far left")
    _add_sampling(lichev_parser, exact=False)
    lichev_parser.add_argument("--form", choices=list(EVENT_FORMS), default="positional")
    lichev_parser.add_argument("--identity-only", action="store_true",
                               help="evaluate the increasing permutation only")
    _add_common(lichev_parser)
    lichev_parser.set_defaults(handler=_cmd_lichev)

    gap_parser = subparsers.add_parser("gap", help="t* against the best lower bound on samples")
    _add_sampling(gap_parser, exact=False)
    gap_parser.add_argument("--variant", choices=list(BOUND_VARIANTS), default="stated")
    gap_parser.add_argument("--summary", action="store_true",
                            help="emit the summary as JSON instead of per-sample CSV")
    _add_common(gap_parser)
    gap_parser.set_defaults(handler=_cmd_gap)

    return parser


def _require_seed(args: argparse.Namespace):
    if args.seed is None:
        raise ValueError("--seed is required with --samples")


def _cmd_sort(args: argparse.Namespace) -> int:
    p = parse_permutation(args.perm)
    write_document(format_permutation(pop(p)) + "\n", args.output)
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    trace = sort_trace(parse_permutation(args.perm))
    tables = classify_trace(trace) if args.motions else None
    export_json(trace_to_dict(trace, tables), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.perm is None and args.n_max is None:
        raise ValueError("verify needs --n-max or --perm")
    if args.perm is not None and args.n_max is not None:
        raise ValueError("--n-max and --perm are exclusive")

    if args.claim == 'all':
        if args.perm is not None:
            raise ValueError("--claim all scans exhaustively; use --n-max")
        reports = run_sweep(args.n_max, args.threads)
    else:
        modes = list(InteriorMode) if args.mode == 'both' else [InteriorMode(args.mode)]
        reports = []
        for mode in modes:
            options = ClaimOptions(mode=mode, window=args.window, s_min=args.s_min, variant=args.variant)
            if args.perm is not None:
                reports.append(verify_permutation(args.claim, parse_permutation(args.perm), options))
            else:
                reports.append(run_claim(args.claim, args.n_max, options, args.threads))

    documents = [claim_report_to_dict(report) for report in reports]
    export_json(documents[0] if len(documents) == 1 else documents, args.output)
    return 0 if all(report.holds for report in reports) else 1


def _cmd_bound(args: argparse.Namespace) -> int:
    p = parse_permutation(args.perm)
    best = best_bound(p, args.variant)
    t = sort_trace(p).t_star
    export_json(bounds_to_dict(p, t, best, all_bounds(p, args.variant), args.variant), args.output)
    return 0


def _cmd_dn(args: argparse.Namespace) -> int:
    if args.exact:
        estimate = exact_dn(args.n, threads=args.threads)
    else:
        _require_seed(args)
        estimate = sampled_dn(args.n, args.samples, args.seed, args.threads)
    export_csv(estimates_frame([estimate]), args.output)
    return 0


def _cmd_hist(args: argparse.Namespace) -> int:
    if args.exact:
        histogram = t_star_distribution(args.n, 'exact', threads=args.threads)
    else:
        _require_seed(args)
        histogram = t_star_distribution(args.n, 'sampled', args.samples, args.seed, args.threads)
    export_csv(histogram_frame(histogram), args.output)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    spec = FamilySpec(Family(args.family), args.k)
    if args.plot_data:
        export_csv(plot_frame(plot_data(spec)), args.output)
    elif args.metrics:
        export_json(family_metrics_to_dict(family_metrics(spec), args.permutation), args.output)
    else:
        write_document(format_permutation(generate(spec)) + "\n", args.output)
    return 0


def _cmd_lichev(args: argparse.Namespace) -> int:
    _require_seed(args)
    fraction = lichev_fraction(
        args.n, args.samples, args.seed,
        form=args.form, identity_only=args.identity_only, threads=args.threads,
    )
    export_json({
        'n': args.n,
        'samples': args.samples,
        'seed': args.seed,
        'form': args.form,
        'identity_only': args.identity_only,
        'fraction': fraction,
    }, args.output)
    return 0


def _cmd_gap(args: argparse.Namespace) -> int:
    _require_seed(args)
    report = bound_gap_report(args.n, args.samples, args.seed, args.threads, args.variant)
    if args.summary:
        export_json(bound_gap_summary_to_dict(report.summary), args.output)
    else:
        export_csv(bound_gap_frame(report), args.output)
    return 0


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, dispatch the subcommand and return the exit code

    Argument errors and ValueError from the domain packages map to 2.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Optional[List[str]] = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

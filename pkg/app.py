# 1. Imports
from contextlib import contextmanager
from typing import Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware

from config import load_settings
from constructions import Family, FamilySpec, family_metrics, plot_data
from estimation import bound_gap_report, exact_dn, lichev_fraction, sampled_dn, t_star_distribution
from motion import InteriorMode, classify_trace
from popsort import format_permutation, parse_permutation, pop, sort_trace
from popsort.errors import UnknownIdentifierError
from reporting import (
    bound_gap_frame,
    bound_gap_summary_to_dict,
    bounds_to_dict,
    claim_report_to_dict,
    estimates_frame,
    family_metrics_to_dict,
    frame_records,
    histogram_frame,
    plot_frame,
    trace_to_dict,
)
from verifiers import (
    DEFAULT_WINDOW,
    ClaimOptions,
    all_bounds,
    best_bound,
    get_claim,
    run_claim,
    verify_permutation,
)

# 2. Initialisation de l'app
app = FastAPI(title="Pop-Stack Sorting Lab API",
              description="Pop traces, motion analysis, claim verifiers and sorting-depth statistics",
              version="1.0")

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# 3. Helpers
@contextmanager
def domain_errors():
    """Unknown catalog ids map to 404, other bad input to 400"""
    try:
        yield
    except UnknownIdentifierError as e:
        raise HTTPException(status_code=404, detail=str(e))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


def check_exhaustive_n(n: int):
    limit = load_settings().api_max_n
    if n > limit:
        raise HTTPException(
            status_code=400,
            detail=f"n = {n} is above the exhaustive limit of this API ({limit})"
        )


def require_sampling(samples: Optional[int], seed: Optional[int]):
    if samples is None or seed is None:
        raise HTTPException(status_code=400, detail="samples and seed are required")


# 4. Endpoints
@app.get("/pop")
def pop_endpoint(perm: str = Query(..., description="Permutation, comma or compact form")):
    with domain_errors():
        p = parse_permutation(perm)
        return {"permutation": format_permutation(p), "pop": format_permutation(pop(p))}


@app.get("/trace")
def trace_endpoint(perm: str, motions: bool = False):
    with domain_errors():
        trace = sort_trace(parse_permutation(perm))
        return trace_to_dict(trace, classify_trace(trace) if motions else None)


@app.get("/bound")
def bound_endpoint(perm: str, variant: str = "stated"):
    with domain_errors():
        p = parse_permutation(perm)
        best = best_bound(p, variant)
        return bounds_to_dict(p, sort_trace(p).t_star, best, all_bounds(p, variant), variant)


@app.get("/verify")
def verify_endpoint(
    claim: str,
    n_max: Optional[int] = Query(None, ge=1),
    perm: Optional[str] = None,
    mode: InteriorMode = InteriorMode.STRICT,
    window: str = DEFAULT_WINDOW,
    s_min: int = Query(2, ge=1),
    variant: str = "stated"
):
    """
    Check one claim on every permutation up to n_max, or on one permutation

    The report's elapsed_seconds is the only non-deterministic field.
    """
    with domain_errors():
        get_claim(claim)
        options = ClaimOptions(mode=mode, window=window, s_min=s_min, variant=variant)
        if perm is not None:
            report = verify_permutation(claim, parse_permutation(perm), options)
        elif n_max is not None:
            check_exhaustive_n(n_max)
            report = run_claim(claim, n_max, options)
        else:
            raise HTTPException(status_code=400, detail="n_max or perm is required")
    return claim_report_to_dict(report)


@app.get("/dn")
def dn_endpoint(
    n: int = Query(..., ge=1),
    exact: bool = False,
    samples: Optional[int] = Query(None, ge=1),
    seed: Optional[int] = Query(None, ge=0)
):
    with domain_errors():
        if exact:
            check_exhaustive_n(n)
            estimate = exact_dn(n)
        else:
            require_sampling(samples, seed)
            estimate = sampled_dn(n, samples, seed)
    return frame_records(estimates_frame([estimate]))


@app.get("/hist")
def hist_endpoint(
    n: int = Query(..., ge=1),
    exact: bool = False,
    samples: Optional[int] = Query(None, ge=1),
    seed: Optional[int] = Query(None, ge=0)
):
    with domain_errors():
        if exact:
            check_exhaustive_n(n)
            histogram = t_star_distribution(n, 'exact')
        else:
            require_sampling(samples, seed)
            histogram = t_star_distribution(n, 'sampled', samples, seed)
    return frame_records(histogram_frame(histogram))


@app.get("/construct")
def construct_endpoint(
    family: Family,
    k: int = Query(..., ge=1),
    plot: bool = False
):
    with domain_errors():
        spec = FamilySpec(family, k)
        if plot:
            return frame_records(plot_frame(plot_data(spec)))
        return family_metrics_to_dict(family_metrics(spec), include_permutation=True)


@app.get("/lichev")
def lichev_endpoint(
    n: int = Query(..., ge=2),
    samples: int = Query(..., ge=1),
    seed: int = Query(..., ge=0),
    form: str = "positional",
    identity_only: bool = False
):
    with domain_errors():
        fraction = lichev_fraction(n, samples, seed, form=form, identity_only=identity_only)
    return {
        "n": n,
        "samples": samples,
        "seed": seed,
        "form": form,
        "identity_only": identity_only,
        "fraction": fraction,
    }


@app.get("/gap")
def gap_endpoint(
    n: int = Query(..., ge=2),
    samples: int = Query(..., ge=1),
    seed: int = Query(..., ge=0),
    variant: str = "stated"
):
    with domain_errors():
        report = bound_gap_report(n, samples, seed, variant=variant)
    return {
        "summary": bound_gap_summary_to_dict(report.summary),
        "records": frame_records(bound_gap_frame(report)),
    }


# 5. Lancement
if __name__ == "__main__":
    import uvicorn

    settings = load_settings()
    print(f"🚀 Pop-stack lab API (exhaustive limit n <= {settings.api_max_n})")
    uvicorn.run(app, host="0.0.0.0", port=8000)

"""HTTP service exposing spectra, evolution, detection, scans, and checks.

The CLI is a thin client of these endpoints (in-process by default). Every
JSON body is canonically encoded and newline-terminated, so identical
requests produce byte-identical responses. The env var UCG_MAX_N (default
4096) caps the accepted vertex count.
"""

from __future__ import annotations

import math
import os

import numpy as np
from fastapi import FastAPI, HTTPException, Response

from .. import __version__
from ..cayley import build_unitary_cayley_graph, graph_to_dict
from ..detect import detect_at, scan_times, scan_all_pairs, verify_range, _TimeGrid
from ..jsonio import canonical_json, csv_text
from ..spectral import spectrum_to_dict, spectrum_via_ramanujan
from ..timeexpr import TimeExpression, parse_time
from ..walk import evolve_oracle, evolve_spectral, minimal_period, snapshot_to_dict
from .schemas import (
    DetectRequest,
    EvolveProfileRequest,
    EvolveRequest,
    GraphRequest,
    PeriodRequest,
    ScanProfileRequest,
    ScanRequest,
    SpectrumRequest,
    VerifyRequest,
)

app = FastAPI(title="ucgwalk service", version=__version__)

DEFAULT_MAX_N = 4096


def _max_n() -> int:
    return int(os.environ.get("UCG_MAX_N", str(DEFAULT_MAX_N)))


def _check_n(n: int) -> None:
    cap = _max_n()
    if n > cap:
        raise HTTPException(status_code=422, detail=f"n={n} exceeds UCG_MAX_N={cap}")


def _parse_t(t: float | str) -> TimeExpression:
    if isinstance(t, str):
        try:
            return parse_time(t)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
    return TimeExpression.from_float(t)


def _json_response(payload) -> Response:
    return Response(content=canonical_json(payload) + "\n", media_type="application/json")


def _csv_response(text: str) -> Response:
    return Response(content=text, media_type="text/csv; charset=utf-8")


@app.get("/health")
def health() -> Response:
    return _json_response({"status": "ok", "version": __version__})


@app.post("/spectrum")
def spectrum(req: SpectrumRequest) -> Response:
    _check_n(req.n)
    spec = spectrum_via_ramanujan(req.n)
    if req.format == "csv":
        rows = [[d, lam] for d, lam in enumerate(spec.eigenvalue_by_index)]
        return _csv_response(csv_text(["d", "lambda"], rows))
    return _json_response(spectrum_to_dict(spec))


@app.post("/graph")
def graph(req: GraphRequest) -> Response:
    _check_n(req.n)
    return _json_response(graph_to_dict(build_unitary_cayley_graph(req.n)))


@app.post("/evolve")
def evolve(req: EvolveRequest) -> Response:
    _check_n(req.n)
    texpr = _parse_t(req.t)
    try:
        if req.method == "oracle":
            snapshot = evolve_oracle(build_unitary_cayley_graph(req.n), texpr)
        else:
            snapshot = evolve_spectral(spectrum_via_ramanujan(req.n), texpr)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return _json_response(snapshot_to_dict(snapshot))


@app.post("/evolve/profile")
def evolve_profile(req: EvolveProfileRequest) -> Response:
    """CSV of |U(t)[v, 0]|^2 per vertex over a uniform grid on [0, 2*pi)."""
    _check_n(req.n)
    spec = spectrum_via_ramanujan(req.n)
    grid = _TimeGrid(spec, req.grid)
    n = req.n
    header = ["t"] + [f"prob_{v}" for v in range(n)]
    # |U(t)[v, 0]| = |kernel[(0 - v) mod n]|
    cols = [grid.probs[:, (0 - v) % n] for v in range(n)]
    rows = [
        [grid.ts[i]] + [float(c[i]) for c in cols] for i in range(req.grid)
    ]
    return _csv_response(csv_text(header, rows))


@app.post("/period")
def period(req: PeriodRequest) -> Response:
    _check_n(req.n)
    spec = spectrum_via_ramanujan(req.n)
    value = minimal_period(spec)
    eigs = spec.eigenvalue_by_index
    g = 0
    for lam in eigs[1:]:
        g = math.gcd(g, lam - eigs[0])
    return _json_response({"n": req.n, "period": value, "phase_gcd": g})


@app.post("/detect")
def detect(req: DetectRequest) -> Response:
    _check_n(req.n)
    texpr = _parse_t(req.t)
    try:
        cert = detect_at(
            spectrum_via_ramanujan(req.n), req.u, req.v, texpr, req.tol, method=req.method
        )
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return _json_response(cert.to_dict())


@app.post("/scan")
def scan(req: ScanRequest) -> Response:
    _check_n(req.n)
    if (req.u is None) != (req.v is None):
        raise HTTPException(status_code=422, detail="provide both u and v, or neither")
    spec = spectrum_via_ramanujan(req.n)
    try:
        if req.u is not None and req.v is not None:
            report = scan_times(spec, req.u, req.v, req.grid, req.tol)
            return _json_response(report.to_dict())
        reports = scan_all_pairs(spec, req.grid, req.tol)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return _json_response(
        {
            "n": req.n,
            "grid_count": req.grid,
            "t_range": [0.0, 2 * math.pi],
            "tol": req.tol,
            "refined": True,
            "pairs": [
                {"u": r.u, "v": r.v, "hits": [h.to_dict() for h in r.hits]}
                for r in reports
            ],
        }
    )


@app.post("/scan/profile")
def scan_profile(req: ScanProfileRequest) -> Response:
    """CSV of (t, |alpha|^2, |beta|^2, residual) over the scan grid.

    With no pair given, rows for every pair (0, v) are emitted with leading
    u, v columns.
    """
    _check_n(req.n)
    if (req.u is None) != (req.v is None):
        raise HTTPException(status_code=422, detail="provide both u and v, or neither")
    spec = spectrum_via_ramanujan(req.n)
    n = req.n
    try:
        grid = _TimeGrid(spec, req.grid)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc

    def pair_rows(u: int, v: int, with_pair: bool) -> list[list]:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise HTTPException(status_code=422, detail="invalid vertex pair")
        alpha_sq = grid.probs[:, 0]
        beta_sq = grid.probs[:, (u - v) % n]
        residual = grid.residuals(u, v)
        rows = []
        for i in range(req.grid):
            row = [float(grid.ts[i]), float(alpha_sq[i]), float(beta_sq[i]), float(residual[i])]
            rows.append([u, v] + row if with_pair else row)
        return rows

    if req.u is not None and req.v is not None:
        return _csv_response(
            csv_text(["t", "alpha_sq", "beta_sq", "residual"], pair_rows(req.u, req.v, False))
        )
    rows: list[list] = []
    for v in range(1, n):
        rows.extend(pair_rows(0, v, True))
    return _csv_response(csv_text(["u", "v", "t", "alpha_sq", "beta_sq", "residual"], rows))


@app.post("/verify")
def verify(req: VerifyRequest) -> Response:
    _check_n(req.n_last)
    try:
        report = verify_range(req.n_first, req.n_last, req.grid, req.tol)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return _json_response(report)

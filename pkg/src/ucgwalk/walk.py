"""Continuous-time quantum walk operators for unitary Cayley graphs.

Conventions: U(t) = exp(-i*A*t) with A the adjacency matrix; each per-index
projector E_d carries the 1/n normalization, so

    U(t) = sum_d exp(-i*lambda_d*t) * E_d

is the unique combination that is unitary with U(0) = I. Because the
spectrum is integral, U is 2*pi-periodic in t.

The spectral path never exponentiates a matrix; the independent oracle
(`evolve_oracle`) uses scaled Taylor summation with repeated squaring and
shares nothing with the eigendecomposition it cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cayley import UnitaryCayleyGraph
from .spectral import CirculantSpectrum, roots_of_unity
from .timeexpr import TimeExpression, as_time

ORACLE_MAX_N = 64
_TAYLOR_BUDGET = 96
_TAYLOR_TARGET = 1e-16
_TAYLOR_REQUIRED = 1e-13


class TaylorConvergenceError(RuntimeError):
    """Raised when the oracle's Taylor series misses its tolerance budget."""


@dataclass(frozen=True, eq=False)
class EvolutionSnapshot:
    """U(t) at one time, tagged with the construction path."""

    n: int
    t: float
    matrix: np.ndarray = field(repr=False)
    method: str  # "spectral" or "oracle"


@dataclass(frozen=True)
class TransferAmplitudes:
    """alpha = U(t)[u, u] and beta = U(t)[v, u] for the pair (u, v)."""

    u: int
    v: int
    t: float
    alpha: complex
    beta: complex


def phase_vector(spectrum: CirculantSpectrum, t: TimeExpression | float) -> np.ndarray:
    """exp(-i*lambda_d*t) for every index d.

    For an exact time p*pi/q the argument lambda*p is reduced mod 2q before
    multiplying by pi/q, so phases at rational multiples of pi carry no
    accumulated argument error.
    """
    texpr = as_time(t)
    eigs = np.asarray(spectrum.eigenvalue_by_index, dtype=np.int64)
    if texpr.exact is not None:
        p, q = texpr.exact
        reduced = (eigs * p) % (2 * q)
        return np.exp(-1j * np.pi * reduced / q)
    return np.exp(-1j * eigs * texpr.value)


def evolution_kernel(spectrum: CirculantSpectrum, t: TimeExpression | float) -> np.ndarray:
    """First row of U(t): kernel[k] = (1/n) * sum_d exp(-i*lambda_d*t) * w^{kd}.

    Every entry of the circulant U(t) is kernel[(col - row) mod n].
    """
    n = spectrum.n
    phases = phase_vector(spectrum, t)
    roots = roots_of_unity(n)
    idx = np.arange(n, dtype=np.int64)
    exponents = (idx[:, None] * idx[None, :]) % n  # (d, k)
    return phases @ roots[exponents] / n


def evolution_column(spectrum: CirculantSpectrum, u: int, t: TimeExpression | float) -> np.ndarray:
    """The state U(t) e_u as a length-n complex vector."""
    n = spectrum.n
    texpr = as_time(t)
    if texpr.value == 0.0:
        column = np.zeros(n, dtype=np.complex128)
        column[u] = 1.0
        return column
    kernel = evolution_kernel(spectrum, texpr)
    w = np.arange(n, dtype=np.int64)
    return kernel[(u - w) % n]


def evolve_spectral(spectrum: CirculantSpectrum, t: TimeExpression | float) -> EvolutionSnapshot:
    """U(t) assembled from the integer spectrum and circulant eigenvectors.

    t = 0 returns the identity exactly (completeness of the projectors).
    """
    n = spectrum.n
    texpr = as_time(t)
    if texpr.value == 0.0:
        matrix = np.eye(n, dtype=np.complex128)
    else:
        kernel = evolution_kernel(spectrum, texpr)
        idx = np.arange(n, dtype=np.int64)
        matrix = kernel[(idx[None, :] - idx[:, None]) % n]
    return EvolutionSnapshot(n=n, t=texpr.value, matrix=matrix, method="spectral")


def evolve_oracle(graph: UnitaryCayleyGraph, t: TimeExpression | float) -> EvolutionSnapshot:
    """exp(-i*t*A) by scaled Taylor summation with repeated squaring.

    Fully independent of the spectral decomposition; intended purely as a
    cross-check at oracle scale (n <= 64). The matrix is halved until its
    1-norm is at most 0.5, the series is truncated when the next term drops
    below 1e-16 in max-norm, and the result is squared back up.
    """
    if graph.n > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N}, got {graph.n}")
    texpr = as_time(t)
    m = -1j * texpr.value * graph.adjacency.astype(np.complex128)
    one_norm = float(np.abs(m).sum(axis=0).max())
    squarings = 0 if one_norm <= 0.5 else max(0, math.ceil(math.log2(one_norm / 0.5)))
    x = m / (2**squarings)
    total = np.eye(graph.n, dtype=np.complex128)
    term = np.eye(graph.n, dtype=np.complex128)
    term_norm = math.inf
    for k in range(1, _TAYLOR_BUDGET + 1):
        term = term @ x / k
        total += term
        term_norm = float(np.abs(term).max())
        if term_norm < _TAYLOR_TARGET:
            break
    if term_norm > _TAYLOR_REQUIRED:
        raise TaylorConvergenceError(
            f"Taylor series stalled at term norm {term_norm:.3e} after {_TAYLOR_BUDGET} terms"
        )
    for _ in range(squarings):
        total = total @ total
    return EvolutionSnapshot(n=graph.n, t=texpr.value, matrix=total, method="oracle")


def amplitudes(
    spectrum: CirculantSpectrum, u: int, v: int, t: TimeExpression | float
) -> TransferAmplitudes:
    """alpha and beta for the pair (u, v), without building the full matrix.

    alpha = (1/n) * sum_d exp(-i*lambda_d*t) is shared by every vertex;
    beta picks up the character omega^{(u-v)d} relating the pair.
    """
    if u == v:
        raise ValueError("u and v must be distinct vertices")
    n = spectrum.n
    texpr = as_time(t)
    phases = phase_vector(spectrum, texpr)
    roots = roots_of_unity(n)
    d = np.arange(n, dtype=np.int64)
    alpha = complex(phases.sum() / n)
    beta = complex(phases @ roots[(((u - v) % n) * d) % n] / n)
    if texpr.value == 0.0:
        alpha, beta = 1.0 + 0.0j, 0.0 + 0.0j
    return TransferAmplitudes(u=u, v=v, t=texpr.value, alpha=alpha, beta=beta)


def minimal_period(spectrum: CirculantSpectrum) -> float:
    """2*pi / gcd of eigenvalue differences.

    At this time every phase exp(-i*lambda_d*t) collapses to a single
    unimodular scalar, so U(t) is that scalar times the identity; no integer
    fraction of it does the same because the gcd is already extracted.
    """
    eigs = spectrum.eigenvalue_by_index
    g = 0
    for lam in eigs[1:]:
        g = math.gcd(g, lam - eigs[0])
    if g == 0:
        raise ValueError("flat spectrum has no nontrivial period")
    return 2 * math.pi / g


def snapshot_to_dict(snapshot: EvolutionSnapshot) -> dict:
    """JSON-ready form with complex entries as [re, im] pairs."""
    return {
        "n": snapshot.n,
        "t": float(snapshot.t),
        "method": snapshot.method,
        "matrix": [
            [[float(z.real), float(z.imag)] for z in row] for row in snapshot.matrix
        ],
    }


__all__ = [
    "ORACLE_MAX_N",
    "EvolutionSnapshot",
    "TaylorConvergenceError",
    "TransferAmplitudes",
    "amplitudes",
    "evolution_column",
    "evolution_kernel",
    "evolve_oracle",
    "evolve_spectral",
    "minimal_period",
    "phase_vector",
    "snapshot_to_dict",
]

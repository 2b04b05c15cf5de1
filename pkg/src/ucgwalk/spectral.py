"""Exact spectra and spectral projectors of unitary Cayley graphs.

The adjacency matrix of a circulant graph is diagonalized by the discrete
Fourier characters, so the d-th eigenvalue of the unitary Cayley graph is the
Ramanujan sum r(d, n) — an exact integer — and the d-th normalized
eigenvector gives a rank-1 projector with entries omega_n^{(v-u)d} / n.

Strong cospectrality and eigenvalue supports are defined on the grouped
per-eigenvalue projectors F_lambda: repeated eigenvalues share one true
spectral projector, and comparing per-index projectors would be ill-posed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cayley import CirculantGraph, UnitaryCayleyGraph
from .numtheory import ramanujan_sum

# Absolute per-coordinate tolerance for comparing projected basis vectors;
# entries have magnitude 1/n so this sits far below signal scale.
SUPPORT_TOL = 1e-10


def roots_of_unity(n: int) -> np.ndarray:
    """exp(2*pi*i*k/n) for k = 0..n-1, evaluated with reduced arguments."""
    return np.exp(2j * np.pi * np.arange(n) / n)


@dataclass(frozen=True)
class SpectrumClass:
    """Indices d sharing one distinct integer eigenvalue."""

    eigenvalue: int
    indices: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.indices)


@dataclass(frozen=True, eq=False)
class CirculantSpectrum:
    """Integer eigenvalues of a unitary Cayley graph, indexed and grouped."""

    n: int
    eigenvalue_by_index: tuple[int, ...]
    classes: tuple[SpectrumClass, ...]

    def distinct_eigenvalues(self) -> tuple[int, ...]:
        return tuple(c.eigenvalue for c in self.classes)

    def class_for(self, eigenvalue: int) -> SpectrumClass:
        for c in self.classes:
            if c.eigenvalue == eigenvalue:
                return c
        raise ValueError(f"{eigenvalue} is not an eigenvalue for n={self.n}")


@dataclass(frozen=True, eq=False)
class SpectralIdempotent:
    """Projector onto an eigenspace: per-index (rank 1) or per-eigenvalue."""

    n: int
    matrix: np.ndarray = field(repr=False)
    index: int | None = None
    eigenvalue: int | None = None


@dataclass(frozen=True)
class EigenvalueSupport:
    """Distinct eigenvalues split by the sign relating F_l e_u and F_l e_v."""

    u: int
    v: int
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    neither: tuple[int, ...]


def spectrum_via_ramanujan(n: int) -> CirculantSpectrum:
    """Exact integer spectrum: eigenvalue d is the Ramanujan sum r(d, n).

    Classes group indices by eigenvalue, listed in descending eigenvalue
    order (the degree euler_phi(n) comes first).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    eigs = tuple(ramanujan_sum(d, n) for d in range(n))
    grouped: dict[int, list[int]] = {}
    for d, lam in enumerate(eigs):
        grouped.setdefault(lam, []).append(d)
    classes = tuple(
        SpectrumClass(lam, tuple(grouped[lam])) for lam in sorted(grouped, reverse=True)
    )
    return CirculantSpectrum(n=n, eigenvalue_by_index=eigs, classes=classes)


def spectrum_via_character_sum(graph: CirculantGraph | UnitaryCayleyGraph) -> np.ndarray:
    """Floating-point oracle: lambda_d = sum over the connection set of
    exp(2*pi*i*d*s/n).

    Independent of the Ramanujan closed form; for symmetric connection sets
    the imaginary parts vanish to rounding.
    """
    n = graph.n
    roots = roots_of_unity(n)
    s = np.asarray(graph.connection_set, dtype=np.int64)
    exponents = np.outer(np.arange(n, dtype=np.int64), s) % n
    return roots[exponents].sum(axis=1)


def idempotent(n: int, d: int) -> SpectralIdempotent:
    """Rank-1 projector E_d with entry (u, v) = exp(2*pi*i*(v-u)*d/n) / n.

    Every diagonal entry is 1/n.
    """
    if not 0 <= d < n:
        raise ValueError("index d out of range")
    roots = roots_of_unity(n)
    idx = np.arange(n, dtype=np.int64)
    exponents = ((idx[None, :] - idx[:, None]) * d) % n
    return SpectralIdempotent(n=n, matrix=roots[exponents] / n, index=d)


def eigenvalue_projector(spectrum: CirculantSpectrum, eigenvalue: int) -> SpectralIdempotent:
    """Grouped projector F_lambda = sum of E_d over the eigenvalue's class.

    Idempotent and Hermitian with trace equal to the multiplicity.
    """
    cls = spectrum.class_for(eigenvalue)
    n = spectrum.n
    matrix = np.zeros((n, n), dtype=np.complex128)
    for d in cls.indices:
        matrix += idempotent(n, d).matrix
    return SpectralIdempotent(n=n, matrix=matrix, eigenvalue=eigenvalue)


def _projected_basis_column(n: int, indices: tuple[int, ...], u: int) -> np.ndarray:
    """Column F e_u of the grouped projector, without forming the matrix."""
    roots = roots_of_unity(n)
    w = np.arange(n, dtype=np.int64)
    d = np.asarray(indices, dtype=np.int64)
    exponents = ((u - w)[:, None] * d[None, :]) % n
    return roots[exponents].sum(axis=1) / n


def eigenvalue_support(spectrum: CirculantSpectrum, u: int, v: int) -> EigenvalueSupport:
    """Classify each eigenvalue in the support of e_u by the sign relating
    F_lambda e_u to F_lambda e_v (plus, minus, or neither)."""
    if u == v:
        raise ValueError("u and v must be distinct vertices")
    n = spectrum.n
    plus: list[int] = []
    minus: list[int] = []
    neither: list[int] = []
    for cls in spectrum.classes:
        pu = _projected_basis_column(n, cls.indices, u)
        pv = _projected_basis_column(n, cls.indices, v)
        if np.max(np.abs(pu)) <= SUPPORT_TOL:
            continue  # eigenvalue not in the support of e_u
        if np.max(np.abs(pu - pv)) <= SUPPORT_TOL:
            plus.append(cls.eigenvalue)
        elif np.max(np.abs(pu + pv)) <= SUPPORT_TOL:
            minus.append(cls.eigenvalue)
        else:
            neither.append(cls.eigenvalue)
    return EigenvalueSupport(u=u, v=v, plus=tuple(plus), minus=tuple(minus), neither=tuple(neither))


def strongly_cospectral(spectrum: CirculantSpectrum, u: int, v: int) -> bool:
    """True iff every eigenvalue class lands in plus or minus for (u, v)."""
    return not eigenvalue_support(spectrum, u, v).neither


def spectrum_to_dict(spectrum: CirculantSpectrum) -> dict:
    """JSON-ready form: {"n", "eigenvalues", "classes"}."""
    return {
        "n": spectrum.n,
        "eigenvalues": [int(x) for x in spectrum.eigenvalue_by_index],
        "classes": [
            {
                "lambda": int(c.eigenvalue),
                "indices": [int(d) for d in c.indices],
                "multiplicity": c.multiplicity,
            }
            for c in spectrum.classes
        ],
    }


__all__ = [
    "SUPPORT_TOL",
    "CirculantSpectrum",
    "EigenvalueSupport",
    "SpectralIdempotent",
    "SpectrumClass",
    "eigenvalue_projector",
    "eigenvalue_support",
    "idempotent",
    "roots_of_unity",
    "spectrum_to_dict",
    "spectrum_via_character_sum",
    "spectrum_via_ramanujan",
    "strongly_cospectral",
]

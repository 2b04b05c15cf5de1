"""Detection, classification, and certification of quantum fractional revival.

A revival between vertices u and v at time t means U(t) e_u = alpha e_u +
beta e_v with |alpha|^2 + |beta|^2 = 1. Certificates measure the residual
(the norm of U(t) e_u outside the {u, v} span) and classify:

    periodic_return  |beta| <= tol          (the state never left u)
    pst              |alpha| <= tol         (complete transfer to v)
    balanced_qfr     ||alpha| - |beta|| <= 1e-8
    proper_qfr       |beta| > 1e-6
    none             residual or amplitude budget violated

Scan hits are the transfer events (pst / balanced_qfr / proper_qfr):
periodic returns happen for every vertex pair of every graph (t = 0 and the
graph period at least), so counting them as hits would make every scan
trivially nonempty.

Time scans cover [0, 2*pi) only — integer spectra make U exactly
2*pi-periodic — and a scan finding nothing is evidence at its tolerance,
not a nonexistence proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cayley import build_unitary_cayley_graph
from .spectral import (
    CirculantSpectrum,
    eigenvalue_support,
    roots_of_unity,
    spectrum_via_ramanujan,
    strongly_cospectral,
)
from .numtheory import euler_phi, is_squarefree
from .timeexpr import TimeExpression, as_time
from .walk import (
    ORACLE_MAX_N,
    EvolutionSnapshot,
    evolution_column,
    evolve_oracle,
    evolve_spectral,
    phase_vector,
)

CLASS_NONE = "none"
CLASS_PROPER = "proper_qfr"
CLASS_BALANCED = "balanced_qfr"
CLASS_PST = "pst"
CLASS_PERIODIC = "periodic_return"
TRANSFER_CLASSES = frozenset({CLASS_PROPER, CLASS_BALANCED, CLASS_PST})

DEFAULT_TOL = 1e-8
PROPER_BETA_MIN = 1e-6
BALANCED_TOL = 1e-8

_REFINE_XTOL = 1e-12
_SNAP_MAX_DENOMINATOR = 48
_SNAP_TOL = 1e-9
_DEDUP_TOL = 1e-8
# Grid points at exact machine zero mark a residual plateau (the walk never
# leaves {u, v}, which happens when n == 2); isolated zeros never look flat.
_PLATEAU_RESIDUAL = 1e-12
_PLATEAU_FRACTION = 0.5


@dataclass(frozen=True)
class QfrCertificate:
    """Measured amplitudes and classification for (u, v) at one time."""

    n: int
    u: int
    v: int
    t: float
    t_exact: str | None
    alpha: complex
    beta: complex
    residual: float
    classification: str
    block_check: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "u": self.u,
            "v": self.v,
            "t": float(self.t),
            "t_exact": self.t_exact,
            "alpha": [float(self.alpha.real), float(self.alpha.imag)],
            "beta": [float(self.beta.real), float(self.beta.imag)],
            "residual": float(self.residual),
            "class": self.classification,
        }


@dataclass(frozen=True)
class ScanReport:
    """Hits found for one vertex pair over a uniform time grid."""

    n: int
    u: int
    v: int
    grid_count: int
    t_min: float
    t_max: float
    tol: float
    refined: bool
    hits: tuple[QfrCertificate, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "u": self.u,
            "v": self.v,
            "grid_count": self.grid_count,
            "t_range": [float(self.t_min), float(self.t_max)],
            "tol": float(self.tol),
            "refined": self.refined,
            "hits": [h.to_dict() for h in self.hits],
        }


def _classify(alpha: complex, beta: complex, residual: float, tol: float) -> str:
    amp_a, amp_b = abs(alpha), abs(beta)
    if residual > tol or abs(amp_a**2 + amp_b**2 - 1.0) > tol:
        return CLASS_NONE
    if amp_b <= tol:
        return CLASS_PERIODIC
    if amp_a <= tol:
        return CLASS_PST
    if abs(amp_a - amp_b) <= BALANCED_TOL:
        return CLASS_BALANCED
    if amp_b > PROPER_BETA_MIN:
        return CLASS_PROPER
    return CLASS_NONE


def detect_at(
    spectrum: CirculantSpectrum,
    u: int,
    v: int,
    t: TimeExpression | float,
    tol: float = DEFAULT_TOL,
    method: str = "spectral",
) -> QfrCertificate:
    """Measure U(t) e_u, classify the pair (u, v), and certify the result.

    A failed detection is not an error: it returns classification "none"
    with the measured residual. method="oracle" reruns the measurement on
    the Taylor matrix exponential instead of the spectral synthesis.
    """
    n = spectrum.n
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError("vertices out of range")
    if u == v:
        raise ValueError("u and v must be distinct vertices")
    if tol <= 0:
        raise ValueError("tol must be positive")
    texpr = as_time(t)
    if method == "spectral":
        snapshot = evolve_spectral(spectrum, texpr)
    elif method == "oracle":
        snapshot = evolve_oracle(build_unitary_cayley_graph(n), texpr)
    else:
        raise ValueError(f"unknown method {method!r}")
    column = snapshot.matrix[:, u]
    alpha = complex(column[u])
    beta = complex(column[v])
    others = np.delete(column, [u, v])
    residual = float(np.sqrt(np.sum(np.abs(others) ** 2)))
    classification = _classify(alpha, beta, residual, tol)
    block = verify_block_structure(snapshot, u, v, tol)
    t_exact = None
    if texpr.exact is not None:
        p, q = texpr.exact
        t_exact = TimeExpression.from_exact(p, q).raw
    return QfrCertificate(
        n=n,
        u=u,
        v=v,
        t=texpr.value,
        t_exact=t_exact,
        alpha=alpha,
        beta=beta,
        residual=residual,
        classification=classification,
        block_check=block,
    )


def verify_block_structure(snapshot: EvolutionSnapshot, u: int, v: int, tol: float) -> bool:
    """Check U(t) splits into a 2x2 block on {u, v} plus a complement block.

    Rows and columns u, v must vanish off the pair, and the 2x2 block
    [[alpha, beta], [beta, conj(alpha)]] must satisfy the unitarity
    relations alpha*conj(alpha) + beta*conj(beta) = 1 and
    alpha*conj(beta) + beta*conj(alpha) = 0.
    """
    if u == v:
        raise ValueError("u and v must be distinct vertices")
    matrix = snapshot.matrix
    n = snapshot.n
    others = np.array([w for w in range(n) if w not in (u, v)], dtype=np.int64)
    if others.size:
        off = max(
            float(np.abs(matrix[np.ix_([u, v], others)]).max()),
            float(np.abs(matrix[np.ix_(others, [u, v])]).max()),
        )
        if off > tol:
            return False
    alpha = complex(matrix[u, u])
    beta = complex(matrix[v, u])
    checks = (
        abs(alpha * alpha.conjugate() + beta * beta.conjugate() - 1.0),
        abs(alpha * beta.conjugate() + beta * alpha.conjugate()),
        abs(complex(matrix[u, v]) - beta),
        abs(complex(matrix[v, v]) - alpha.conjugate()),
    )
    return max(checks) <= tol


class _TimeGrid:
    """Shared uniform-grid evaluation of the evolution kernel.

    One kernel array serves every vertex pair of the same spectrum:
    |U(t) e_u| is a permutation of |kernel(t)| for every u.
    """

    def __init__(self, spectrum: CirculantSpectrum, grid_count: int):
        n = spectrum.n
        self.spectrum = spectrum
        self.grid_count = grid_count
        self.ts = np.arange(grid_count) * (2 * np.pi / grid_count)
        eigs = np.asarray(spectrum.eigenvalue_by_index, dtype=np.int64)
        phases = np.exp(-1j * np.outer(self.ts, eigs))
        roots = roots_of_unity(n)
        idx = np.arange(n, dtype=np.int64)
        kernel = phases @ roots[(idx[:, None] * idx[None, :]) % n] / n
        self.probs = np.abs(kernel) ** 2
        self.totals = self.probs.sum(axis=1)

    def residuals(self, u: int, v: int) -> np.ndarray:
        k = (u - v) % self.spectrum.n
        resid_sq = self.totals - self.probs[:, 0] - self.probs[:, k]
        return np.sqrt(np.clip(resid_sq, 0.0, None))


def _residual_at(spectrum: CirculantSpectrum, u: int, v: int, t: float) -> float:
    column = evolution_column(spectrum, u, t)
    others = np.delete(column, [u, v])
    return float(np.sqrt(np.sum(np.abs(others) ** 2)))


def _alpha_abs_at(spectrum: CirculantSpectrum, t: float) -> float:
    return float(abs(phase_vector(spectrum, t).sum())) / spectrum.n


def _golden_min(f, a: float, b: float, xtol: float = _REFINE_XTOL) -> float:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > xtol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = f(x2)
    return (a + b) / 2.0


def _local_minima(values: np.ndarray, gate: float, strict: bool) -> list[int]:
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    if strict:
        mask = (values < left) & (values < right)
    else:
        mask = (values <= left) & (values <= right)
    return [int(i) for i in np.flatnonzero(mask & (values <= gate))]


def _snap_to_pi_multiple(t: float) -> TimeExpression | None:
    frac = Fraction(t / math.pi).limit_denominator(_SNAP_MAX_DENOMINATOR)
    snapped = math.pi * frac.numerator / frac.denominator
    if abs(t - snapped) <= _SNAP_TOL:
        return TimeExpression.from_exact(frac.numerator, frac.denominator)
    return None


def _certify_candidate(
    spectrum: CirculantSpectrum, u: int, v: int, t: float, tol: float
) -> QfrCertificate | None:
    """Certificate for a refined candidate time, or None if it is no hit.

    Candidates are snapped to the nearest p*pi/q (q <= 48) when within
    1e-9 and re-verified at the exact rational multiple; hits on graphs at
    oracle scale are additionally re-validated against the Taylor
    exponential before being accepted.
    """
    snapped = _snap_to_pi_multiple(t)
    cert = None
    if snapped is not None:
        candidate = detect_at(spectrum, u, v, snapped, tol)
        if candidate.classification in TRANSFER_CLASSES:
            cert = candidate
    if cert is None:
        candidate = detect_at(spectrum, u, v, t, tol)
        if candidate.classification in TRANSFER_CLASSES:
            cert = candidate
    if cert is None:
        return None
    if spectrum.n <= ORACLE_MAX_N:
        texpr = (
            TimeExpression.from_exact(*snapped.exact)
            if snapped is not None and cert.t_exact is not None
            else TimeExpression.from_float(cert.t)
        )
        oracle_cert = detect_at(spectrum, u, v, texpr, tol, method="oracle")
        if oracle_cert.classification not in TRANSFER_CLASSES:
            return None
    return cert


def scan_times(
    spectrum: CirculantSpectrum,
    u: int,
    v: int,
    grid_count: int = 4096,
    tol: float = DEFAULT_TOL,
    grid: _TimeGrid | None = None,
) -> ScanReport:
    """Search [0, 2*pi) for transfer hits between u and v.

    Residuals are evaluated on a uniform grid, local minima under a coarse
    gate are refined by golden-section search to 1e-12 in t, and surviving
    candidates are certified (and oracle-revalidated at oracle scale).
    """
    n = spectrum.n
    if not (0 <= u < n and 0 <= v < n) or u == v:
        raise ValueError("invalid vertex pair")
    if grid_count < 16:
        raise ValueError("grid_count must be at least 16")
    lam_max = max(abs(x) for x in spectrum.eigenvalue_by_index)
    if grid_count <= 4 * lam_max:
        raise ValueError(
            f"grid_count {grid_count} cannot resolve eigenvalue frequencies up to "
            f"{lam_max} (need more than {4 * lam_max} points)"
        )
    if grid is None:
        grid = _TimeGrid(spectrum, grid_count)
    ts = grid.ts
    step = 2 * np.pi / grid_count
    residuals = grid.residuals(u, v)

    plateau = float(np.mean(residuals <= _PLATEAU_RESIDUAL)) > _PLATEAU_FRACTION
    if plateau:
        # Residual carries no information; pick the transfer extrema instead.
        alpha_abs = np.sqrt(np.clip(grid.probs[:, 0], 0.0, None))
        candidates = _local_minima(alpha_abs, gate=np.inf, strict=True)
        objective = lambda t: _alpha_abs_at(spectrum, t)  # noqa: E731
    else:
        gate = max(10.0 * lam_max * math.pi / grid_count, math.sqrt(tol))
        candidates = _local_minima(residuals, gate=gate, strict=False)
        objective = lambda t: _residual_at(spectrum, u, v, t)  # noqa: E731

    hits: list[QfrCertificate] = []
    for i in candidates:
        a = ts[i] - step
        b = ts[i] + step
        t_refined = _golden_min(objective, a, b)
        t_refined %= 2 * math.pi
        cert = _certify_candidate(spectrum, u, v, t_refined, tol)
        if cert is not None:
            hits.append(cert)

    hits.sort(key=lambda c: c.t)
    deduped: list[QfrCertificate] = []
    for cert in hits:
        if deduped and abs(cert.t - deduped[-1].t) < _DEDUP_TOL:
            continue
        deduped.append(cert)
    return ScanReport(
        n=n,
        u=u,
        v=v,
        grid_count=grid_count,
        t_min=0.0,
        t_max=2 * math.pi,
        tol=tol,
        refined=True,
        hits=tuple(deduped),
    )


def scan_all_pairs(
    spectrum: CirculantSpectrum, grid_count: int = 4096, tol: float = DEFAULT_TOL
) -> list[ScanReport]:
    """Scan every pair (0, v); vertex transitivity covers the rest."""
    grid = _TimeGrid(spectrum, grid_count)
    return [
        scan_times(spectrum, 0, v, grid_count, tol, grid=grid)
        for v in range(1, spectrum.n)
    ]


def qfr_pairs(
    spectrum: CirculantSpectrum, tol: float = DEFAULT_TOL, grid_count: int = 4096
) -> list[tuple[int, int]]:
    """Vertex pairs (0, v) whose scans produce at least one transfer hit."""
    return [(r.u, r.v) for r in scan_all_pairs(spectrum, grid_count, tol) if r.hits]


def _cross_parity_table(plus: tuple[int, ...], minus: tuple[int, ...]) -> list[dict]:
    table = []
    for lp in plus:
        for lm in minus:
            diff = lp - lm
            table.append(
                {
                    "lambda_plus": lp,
                    "lambda_minus": lm,
                    "difference": diff,
                    "even": diff % 2 == 0,
                }
            )
    return table


def _verify_one(n: int, grid_count: int, tol: float) -> dict:
    spectrum = spectrum_via_ramanujan(n)
    reports = scan_all_pairs(spectrum, grid_count, tol)
    hits = [(r.v, cert) for r in reports for cert in r.hits]

    odd_clause = True if n % 2 == 0 else not hits
    antipodal_clause = all(2 * ((v - 0) % n) == n for v, _ in hits)
    cospectral_clause = all(
        strongly_cospectral(spectrum, 0, v) for v in sorted({v for v, _ in hits})
    )

    squarefree = is_squarefree(n)
    support_dict = None
    parity_table = None
    squarefree_clause = True
    if squarefree and n % 2 == 0:
        phi = euler_phi(n)
        counts = {lam: 0 for lam in (1, -1)}
        for lam in spectrum.eigenvalue_by_index:
            if lam in counts:
                counts[lam] += 1
        squarefree_clause = counts[1] == phi and counts[-1] == phi
        if hits:
            v0 = hits[0][0]
            support = eigenvalue_support(spectrum, 0, v0)
            support_dict = {"plus": list(support.plus), "minus": list(support.minus)}
            opposite = (1 in support.plus and -1 in support.minus) or (
                1 in support.minus and -1 in support.plus
            )
            parity_table = _cross_parity_table(support.plus, support.minus)
            some_even = any(row["even"] for row in parity_table)
            squarefree_clause = squarefree_clause and opposite and some_even

    clauses = {
        "odd_no_hit_at_tolerance": odd_clause,
        "hits_antipodal": antipodal_clause,
        "qfr_implies_strong_cospectrality": cospectral_clause,
        "squarefree_support_structure": squarefree_clause,
    }
    return {
        "n": n,
        "squarefree": squarefree,
        "hits": [
            {
                "u": 0,
                "v": v,
                "t": float(cert.t),
                "t_exact": cert.t_exact,
                "class": cert.classification,
            }
            for v, cert in sorted(hits, key=lambda item: (item[0], item[1].t))
        ],
        "clauses": clauses,
        "support": support_dict,
        "cross_parity": parity_table,
    }


def verify_range(
    n_first: int, n_last: int, grid_count: int = 4096, tol: float = DEFAULT_TOL
) -> dict:
    """Check the structural laws of revival over a range of graph sizes.

    Per size: odd orders yield no transfer hits at the scan tolerance, every
    hit pair is antipodal and strongly cospectral, and squarefree even
    orders carry +1 and -1 with multiplicity euler_phi(n) in opposite
    eigenvalue supports with an even cross-support difference. Violations
    become report entries, never exceptions.
    """
    if n_first < 2 or n_last < n_first:
        raise ValueError("need 2 <= n_first <= n_last")
    results = [_verify_one(n, grid_count, tol) for n in range(n_first, n_last + 1)]
    all_passed = all(all(r["clauses"].values()) for r in results)
    return {
        "n_first": n_first,
        "n_last": n_last,
        "grid_count": grid_count,
        "tol": float(tol),
        "results": results,
        "all_passed": all_passed,
    }


__all__ = [
    "BALANCED_TOL",
    "CLASS_BALANCED",
    "CLASS_NONE",
    "CLASS_PERIODIC",
    "CLASS_PROPER",
    "CLASS_PST",
    "DEFAULT_TOL",
    "PROPER_BETA_MIN",
    "QfrCertificate",
    "ScanReport",
    "TRANSFER_CLASSES",
    "detect_at",
    "qfr_pairs",
    "scan_all_pairs",
    "scan_times",
    "verify_block_structure",
    "verify_range",
]

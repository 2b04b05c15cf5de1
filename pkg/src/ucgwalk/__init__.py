"""Continuous-time quantum walks on unitary Cayley graphs.

Exact integer spectra via Ramanujan sums, spectral evolution operators with
an independent matrix-exponential oracle, and detection/certification of
quantum fractional revival, perfect state transfer, and periodicity.
"""

from .cayley import (
    CirculantGraph,
    UnitaryCayleyGraph,
    build_unitary_cayley_graph,
    degree_sequence,
    graph_to_dict,
    is_complete_multipartite_for_prime_power,
    is_connected,
)
from .detect import (
    QfrCertificate,
    ScanReport,
    detect_at,
    qfr_pairs,
    scan_all_pairs,
    scan_times,
    verify_block_structure,
    verify_range,
)
from .numtheory import (
    Factorization,
    euler_phi,
    factorize,
    is_squarefree,
    mobius,
    ramanujan_sum,
    units_mod,
)
from .spectral import (
    CirculantSpectrum,
    EigenvalueSupport,
    SpectralIdempotent,
    eigenvalue_projector,
    eigenvalue_support,
    idempotent,
    spectrum_to_dict,
    spectrum_via_character_sum,
    spectrum_via_ramanujan,
    strongly_cospectral,
)
from .timeexpr import TimeExpression, parse_time
from .walk import (
    EvolutionSnapshot,
    TransferAmplitudes,
    amplitudes,
    evolve_oracle,
    evolve_spectral,
    minimal_period,
    snapshot_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "CirculantGraph",
    "CirculantSpectrum",
    "EigenvalueSupport",
    "EvolutionSnapshot",
    "Factorization",
    "QfrCertificate",
    "ScanReport",
    "SpectralIdempotent",
    "TimeExpression",
    "TransferAmplitudes",
    "UnitaryCayleyGraph",
    "amplitudes",
    "build_unitary_cayley_graph",
    "degree_sequence",
    "detect_at",
    "eigenvalue_projector",
    "eigenvalue_support",
    "euler_phi",
    "evolve_oracle",
    "evolve_spectral",
    "factorize",
    "graph_to_dict",
    "idempotent",
    "is_complete_multipartite_for_prime_power",
    "is_connected",
    "is_squarefree",
    "minimal_period",
    "mobius",
    "parse_time",
    "qfr_pairs",
    "ramanujan_sum",
    "scan_all_pairs",
    "scan_times",
    "snapshot_to_dict",
    "spectrum_to_dict",
    "spectrum_via_character_sum",
    "spectrum_via_ramanujan",
    "strongly_cospectral",
    "units_mod",
    "verify_block_structure",
    "verify_range",
]

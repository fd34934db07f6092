"""Half-sample fractional shifts of index-limited sequences.

Sequences are 1-D complex arrays of odd length N + 1 holding the samples
r[-N/2], ..., r[N/2].
"""

from ._halfshift import (  # noqa: F401
    BoundReport,
    ConcentrationReport,
    DpssSet,
    HorizonExceededError,
    NumericalError,
    OrthoBasis,
    ParameterError,
    apply_shift,
    compute_dpss,
    concentration,
    even_subsample_basis,
    flip_pairing_report,
    lemma2_bound,
    matrix_form_check,
    optimal_sequence,
    ranked_basis,
    tail_energy_exact,
    tail_energy_truncated,
    theorem1_bound,
    theorem1_equality,
    total_energy,
    upsample2,
)

__version__ = "0.1.0"

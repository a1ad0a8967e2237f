"""Hilbert series and complexity estimates for Generalized MinRank systems."""

from gmr_hilbert.config import HilbertSettings, get_hilbert_settings
from gmr_hilbert.estimator import (
    complexity_at,
    complexity_hybrid,
    density,
    field_op_bits,
    sweep_r,
)
from gmr_hilbert.hilbert import (
    dimensions,
    hs_A,
    hs_B,
    hs_delta,
    hs_det_sm,
    hs_naive,
    hs_sm_generic,
    hs_sm_terminated,
    macaulay_cols,
    module_rank,
    rational_form,
    reg_degree,
    validity_region,
)
from gmr_hilbert.logging_config import configure_logging
from gmr_hilbert.models import (
    ComplexityReport,
    CostModel,
    GmrParams,
    HilbertResult,
    Strategy,
    Validity,
)

__version__ = "0.1.0"

__all__ = [
    "HilbertSettings",
    "get_hilbert_settings",
    "configure_logging",
    "GmrParams",
    "HilbertResult",
    "CostModel",
    "ComplexityReport",
    "Strategy",
    "Validity",
    "hs_naive",
    "hs_delta",
    "hs_B",
    "hs_A",
    "hs_det_sm",
    "hs_sm_generic",
    "hs_sm_terminated",
    "reg_degree",
    "rational_form",
    "module_rank",
    "macaulay_cols",
    "dimensions",
    "validity_region",
    "density",
    "field_op_bits",
    "complexity_at",
    "complexity_hybrid",
    "sweep_r",
]

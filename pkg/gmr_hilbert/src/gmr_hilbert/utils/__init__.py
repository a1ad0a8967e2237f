"""Utility helpers."""

from gmr_hilbert.utils.retry import escalate_order, escalation_orders
from gmr_hilbert.utils.validation import build_params, validate_prime, validate_rank

__all__ = [
    "escalate_order",
    "escalation_orders",
    "build_params",
    "validate_prime",
    "validate_rank",
]

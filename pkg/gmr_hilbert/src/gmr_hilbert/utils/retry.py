"""Order escalation for series that have not terminated yet."""

import logging
from collections.abc import Callable
from typing import TypeVar

from tenacity import (
    RetryCallState,
    Retrying,
    retry_if_exception_type,
    stop_after_attempt,
)

from gmr_hilbert.errors import NoFiniteRegDegreeError

logger = logging.getLogger(__name__)

T = TypeVar("T")


def escalation_orders(start: int, cap: int) -> list[int]:
    """Orders tried by ``escalate_order``: doubling from ``start`` up to ``cap``."""
    orders = [start]
    while orders[-1] < cap:
        orders.append(min(orders[-1] * 2, cap))
    return orders


def escalate_order(compute: Callable[[int], T], start: int, cap: int) -> T:
    """Call ``compute(order)`` with growing orders until it stops failing.

    ``compute`` signals a non-terminated series by raising
    NoFiniteRegDegreeError. The order doubles after each failure; the error
    of the last attempt (at ``cap``) is re-raised.

    Args:
        compute: Function of the truncation order
        start: First order to try
        cap: Largest order to try

    Returns:
        The first successful result

    Raises:
        NoFiniteRegDegreeError: If the series has not terminated at ``cap``

    """
    orders = escalation_orders(start, cap)
    attempt = {"index": 0}

    def _next_order(retry_state: RetryCallState) -> None:
        attempt["index"] += 1
        logger.info(
            f"Series not terminated at order {orders[attempt['index'] - 1]}, "
            f"retrying at {orders[attempt['index']]}"
        )

    retrying = Retrying(
        stop=stop_after_attempt(len(orders)),
        retry=retry_if_exception_type(NoFiniteRegDegreeError),
        before_sleep=_next_order,
        reraise=True,
    )
    return retrying(lambda: compute(orders[attempt["index"]]))

"""Hilbert series of Support-Minors systems and of the underlying modules.

Four engines compute the series of the determinantal Support-Minors module
in the U variables:

- ``hs_naive``: sum over shapes of products of tableau counts
- ``hs_delta``: determinant of the Cauchy-Binet matrix Delta
- ``hs_B``: determinant of B divided by (1 - t)^((m + n - r) r)
- ``hs_A``: determinant of A divided by t^binom(r, 2) (1 - t)^((m + n - r) r)

They agree coefficientwise. ``hs_sm_generic`` specialises the A form to a
generic instance with K variables and degree-D entries, which is what the
estimator and the verifier consume.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache

from gmr_hilbert.combinatorics import Shape, partitions, stab
from gmr_hilbert.config import get_hilbert_settings
from gmr_hilbert.errors import InvalidParamsError, NoFiniteRegDegreeError
from gmr_hilbert.models import Dimensions, GmrParams, HilbertResult, Validity
from gmr_hilbert.series import (
    TruncatedSeries,
    binom_ext,
    binomial_power,
    exact_det,
    geometric_inverse_pow,
    series_matrix_det,
    series_mul,
    shift_div,
    truncate_plus,
    twisted_binom,
)
from gmr_hilbert.utils import escalate_order, validate_rank

logger = logging.getLogger(__name__)


def _check(m: int, n: int, r: int, dc: int, order: int, min_dc: int = 1) -> None:
    validate_rank(m, n, r)
    if dc < min_dc:
        raise InvalidParamsError(f"dc must be >= {min_dc}, got {dc}")
    if order < 1:
        raise InvalidParamsError(f"Order must be positive, got {order}")


def hs_naive(m: int, n: int, r: int, dc: int, order: int) -> TruncatedSeries:
    """Series whose t^du coefficient counts standard bitableaux of U-degree du."""
    _check(m, n, r, dc, order)
    if r == 0:
        return TruncatedSeries.one(order)
    coeffs = []
    for du in range(order):
        coeffs.append(
            sum(stab(m, v) * stab(n, v.widened(dc)) for v in partitions(du, r))
        )
    return TruncatedSeries(tuple(coeffs))


def hs_delta(m: int, n: int, r: int, dc: int, order: int) -> TruncatedSeries:
    """det(Delta_dc(t)), Delta_ij = sum_l tb(m-i, l) tb(n-j, l+dc+j-i) t^l."""
    _check(m, n, r, dc, order)
    if r == 0:
        return TruncatedSeries.one(order)
    matrix = [
        [
            TruncatedSeries(
                tuple(
                    twisted_binom(m - i, ell) * twisted_binom(n - j, ell + dc + j - i)
                    for ell in range(order)
                )
            )
            for j in range(1, r + 1)
        ]
        for i in range(1, r + 1)
    ]
    return series_matrix_det(matrix)


def hs_B(m: int, n: int, r: int, dc: int, order: int) -> TruncatedSeries:
    """det(B_dc(t)) / (1 - t)^((m + n - r) r)."""
    _check(m, n, r, dc, order)
    if r == 0:
        return TruncatedSeries.one(order)
    matrix = [
        [
            TruncatedSeries(
                tuple(
                    binom_ext(n + dc - i, ell + dc + j - i) * binom_ext(m - dc - j, ell)
                    for ell in range(order)
                )
            )
            for j in range(1, r + 1)
        ]
        for i in range(1, r + 1)
    ]
    det = series_matrix_det(matrix)
    return series_mul(det, geometric_inverse_pow((m + n - r) * r, 1, order))


def a_degree_bound(n: int, r: int) -> int:
    """Degree bound of det(A_dc(t)): row i of A has degree at most n - i."""
    return sum(n - i for i in range(1, r + 1))


@lru_cache(maxsize=4096)
def a_determinant(m: int, n: int, r: int, dc: int) -> TruncatedSeries:
    """det(A_dc(t)) as an exact polynomial.

    A_ij = sum_l binom(n+dc-i, l+dc) binom(m-dc-j, l) t^l. The factor
    binom(n+dc-i, l+dc) vanishes for l > n - i, so every entry is a
    polynomial even where binom(m-dc-j, l) has a negative upper index.
    """
    validate_rank(m, n, r)
    if dc < 0:
        raise InvalidParamsError(f"dc must be non-negative, got {dc}")
    order = a_degree_bound(n, r) + 1
    if r == 0:
        return TruncatedSeries.one(order)
    matrix = [
        [
            TruncatedSeries(
                tuple(
                    binom_ext(n + dc - i, ell + dc) * binom_ext(m - dc - j, ell)
                    for ell in range(order)
                )
            )
            for j in range(1, r + 1)
        ]
        for i in range(1, r + 1)
    ]
    return series_matrix_det(matrix)


def hs_A(m: int, n: int, r: int, dc: int, order: int) -> TruncatedSeries:
    """det(A_dc(t)) / (t^binom(r, 2) (1 - t)^((m + n - r) r)).

    Raises:
        DivisibilityError: If det(A_dc) has a non-zero coefficient below t^binom(r, 2)

    """
    _check(m, n, r, dc, order)
    shift = math.comb(r, 2)
    det = TruncatedSeries.from_coeffs(a_determinant(m, n, r, dc).coeffs, order + shift)
    quotient = shift_div(det, shift)
    return series_mul(quotient, geometric_inverse_pow((m + n - r) * r, 1, order))


def hs_det_sm(m: int, n: int, r: int, dc: int, order: int) -> TruncatedSeries:
    """Series of the determinantal Support-Minors module in the U variables."""
    return hs_A(m, n, r, dc, order)


def module_rank(n: int, r: int, dc: int) -> int:
    """Rank of the degree-dc Plücker module: standard monomials of degree dc."""
    if not 0 <= r <= n:
        raise InvalidParamsError(f"Need 0 <= r <= n, got n={n}, r={r}")
    if dc < 0:
        raise InvalidParamsError(f"dc must be non-negative, got {dc}")
    if r == 0 or dc == 0:
        return 1
    return stab(n, Shape.rectangle(dc, r))


def module_rank_binomial(n: int, r: int, dc: int) -> int:
    """module_rank as det(binom(n + dc - i, n - j)), the Macaulay-size form."""
    if not 0 <= r <= n:
        raise InvalidParamsError(f"Need 0 <= r <= n, got n={n}, r={r}")
    return exact_det(
        [
            [binom_ext(n + dc - i, n - j) for j in range(1, r + 1)]
            for i in range(1, r + 1)
        ]
    )


def macaulay_cols(p: GmrParams, dx: int, dc: int) -> int:
    """Column count of the Macaulay matrix in bidegree (dx, dc)."""
    if dx < 0 or dc < 0:
        raise InvalidParamsError(f"Need dx, dc >= 0, got dx={dx}, dc={dc}")
    return binom_ext(p.K + dx - 1, dx) * module_rank_binomial(p.n, p.r, dc)


def dimensions(p: GmrParams) -> Dimensions:
    m, n, r = p.m, p.n, p.r
    return Dimensions(
        krull_s=r * (m + n - r) + 1,
        height_s=m * (n - r),
        plucker_dim=r * (n - r) + 1,
    )


def validity_region(p: GmrParams, dc: int) -> Validity:
    """How far the generic series is backed for these parameters.

    The formula is proven for K >= m(n - r). Below that it is conjectured:
    for overdetermined systems, and otherwise only while dc <= m - r.
    """
    m, n, r, K = p.m, p.n, p.r, p.K
    if K >= m * (n - r):
        return Validity.PROVEN
    if K <= (m - r) * (n - r):
        return Validity.CONJECTURED_OVERDETERMINED
    if dc <= m - r:
        return Validity.CONJECTURED_DC_SMALL
    return Validity.UNRELIABLE


def _trim(coeffs: tuple[int, ...]) -> list[int]:
    values = list(coeffs)
    while values and values[-1] == 0:
        values.pop()
    return values


def hs_sm_generic(p: GmrParams, dc: int, order: int | None = None) -> HilbertResult:
    """Hilbert series of the Support-Minors system of a generic instance.

    Computes [det(A_dc(t^D)) (1 - t^D)^((m-r)(n-r)) / (t^(D binom(r,2)) (1 - t)^K)]_+.
    For dc = 0 this is the series of the Minors modeling; for r = 0 it is
    the series of mn generic equations of degree D.

    Args:
        p: Instance family
        dc: Degree in the Plücker variables
        order: Number of coefficients to compute, default from settings

    Returns:
        HilbertResult with the truncated and raw series, the numerator over
        (1 - t)^K and the validity classification

    """
    order = order if order is not None else get_hilbert_settings().default_order
    _check(p.m, p.n, p.r, dc, order, min_dc=0)
    m, n, r, K, D = p.m, p.n, p.r, p.K, p.D
    excess = (m - r) * (n - r)
    assert m * n - (m + n - r) * r == excess, "exponent identity violated"

    shift = D * math.comb(r, 2)
    det = a_determinant(m, n, r, dc)
    numerator_degree = D * (a_degree_bound(n, r) - math.comb(r, 2)) + D * excess
    numerator_order = max(order, numerator_degree + 1)
    work = numerator_order + shift + 1

    substituted = TruncatedSeries.from_coeffs(det.coeffs, work).substitute_power(D)
    quotient = shift_div(substituted, shift)
    numerator = series_mul(quotient, binomial_power(excess, D, quotient.order))

    raw = series_mul(numerator.truncate(order), geometric_inverse_pow(K, 1, order))
    plus = truncate_plus(raw)
    reg_degree = len(plus.series) if plus.terminated else None
    logger.debug(
        f"Series for {p.label()} dc={dc} at order {order}: "
        f"terminated={plus.terminated}, reg_degree={reg_degree}"
    )
    return HilbertResult(
        params=p,
        dc=dc,
        series=list(plus.series.coeffs),
        raw_series=list(raw.coeffs),
        numerator=_trim(numerator.coeffs),
        terminated=plus.terminated,
        reg_degree=reg_degree,
        validity=validity_region(p, dc),
    )


def hs_sm_terminated(p: GmrParams, dc: int, order: int | None = None) -> HilbertResult:
    """``hs_sm_generic`` with the order raised until the series terminates.

    Raises:
        NoFiniteRegDegreeError: If no non-positive coefficient appears up to
            the configured order cap

    """
    settings = get_hilbert_settings()
    start = order if order is not None else settings.default_order

    def _attempt(current: int) -> HilbertResult:
        result = hs_sm_generic(p, dc, current)
        if not result.terminated:
            raise NoFiniteRegDegreeError(current)
        return result

    return escalate_order(_attempt, start, max(start, settings.order_cap))


def reg_degree(p: GmrParams, dc: int, order: int | None = None) -> int:
    """Degree of regularity: degree of the truncated series plus one."""
    result = hs_sm_terminated(p, dc, order)
    assert result.reg_degree is not None
    return result.reg_degree


def rational_form(result: HilbertResult) -> tuple[list[int], int]:
    """Numerator and exponent e of the reduced form N(t) / (1 - t)^e.

    Factors (1 - t) common to the numerator and (1 - t)^K are cancelled.
    """
    coeffs = list(result.numerator)
    exponent = result.params.K
    while exponent > 0 and coeffs and sum(coeffs) == 0:
        # N(t) / (1 - t): prefix sums, the last one is N(1) = 0
        quotient, running = [], 0
        for c in coeffs[:-1]:
            running += c
            quotient.append(running)
        coeffs = _trim(tuple(quotient))
        exponent -= 1
    return coeffs, exponent

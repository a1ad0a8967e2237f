"""Unit tests for the generic Support-Minors series and its derived data."""

from __future__ import annotations

import pytest

from gmr_hilbert.errors import NoFiniteRegDegreeError
from gmr_hilbert.hilbert import (
    dimensions,
    hs_sm_generic,
    hs_sm_terminated,
    macaulay_cols,
    rational_form,
    reg_degree,
    validity_region,
)
from gmr_hilbert.models import GmrParams, Validity
from gmr_hilbert.series import TruncatedSeries, geometric_inverse_pow, series_mul

# =============================================================================
# Test: hs_sm_generic
# =============================================================================


def test_zero_rank_generic_system():
    """Test r = 0: (1 - t)^4 / (1 - t)^3 truncates to (1)."""
    result = hs_sm_generic(GmrParams(m=2, n=2, K=3, r=0), 0)
    assert result.series == [1]
    assert result.raw_series[:3] == [1, -1, 0]
    assert result.terminated is True
    assert result.reg_degree == 1
    assert rational_form(result) == ([1, -1], 0)


def test_mismatch_case_prediction(mismatch_params: GmrParams):
    """Test the predicted (175 - 175t + 50t^2) / (1 - t) for dc = 3."""
    result = hs_sm_generic(mismatch_params, 3, order=6)
    assert result.raw_series == [175, 0, 50, 50, 50, 50]
    assert result.series == [175]
    assert result.reg_degree == 1
    assert rational_form(result) == ([175, -175, 50], 1)
    assert result.validity == Validity.UNRELIABLE


def test_numerator_reproduces_raw_series(mismatch_params: GmrParams):
    """Test that numerator / (1 - t)^K expands to the raw series."""
    result = hs_sm_generic(mismatch_params, 1, order=10)
    numerator = TruncatedSeries.from_coeffs(result.numerator, 10)
    expansion = series_mul(numerator, geometric_inverse_pow(mismatch_params.K, 1, 10))
    assert list(expansion.coeffs) == result.raw_series


def test_order_defaults_to_settings():
    """Test that the default order comes from settings."""
    result = hs_sm_generic(GmrParams(m=3, n=3, K=2, r=1), 1)
    assert result.order == 32


def test_minors_series_has_non_negative_prefix():
    """Test the dc = 0 (Minors) series on overdetermined families."""
    for r in (1, 2, 3):
        p = GmrParams(m=6, n=6, K=(6 - r) ** 2 - 1, r=r)
        result = hs_sm_generic(p, 0)
        assert result.terminated
        assert min(result.series) > 0


def test_series_not_symmetric_in_m_and_n():
    """Test that exchanging m and n changes the series."""
    wide = hs_sm_generic(GmrParams(m=5, n=4, K=20, r=1), 1, order=4)
    tall = hs_sm_generic(GmrParams(m=4, n=5, K=20, r=1), 1, order=4)
    assert wide.raw_series[0] == 4
    assert tall.raw_series[0] == 5


# =============================================================================
# Test: Degree of Regularity
# =============================================================================


@pytest.mark.slow
def test_reg_degree_22x22_rank_6():
    """Test dreg 46 (dc = 1) and 49 (Minors) at m = n = 22, r = 6."""
    p = GmrParams(m=22, n=22, K=255, r=6)
    assert reg_degree(p, 1) == 46
    assert reg_degree(p, 0) == 49


def test_terminated_escalates_order():
    """Test that a series ending beyond the start order is found."""
    p = GmrParams(m=22, n=22, K=440, r=1)
    direct = hs_sm_generic(p, 1, order=4)
    assert direct.terminated is False
    assert direct.reg_degree is None
    result = hs_sm_terminated(p, 1, order=4)
    assert result.terminated is True
    assert result.reg_degree == 11


def test_non_terminating_series_raises(small_order_cap: int):
    """Test an underdetermined family never terminates."""
    with pytest.raises(NoFiniteRegDegreeError) as exc_info:
        reg_degree(GmrParams(m=3, n=3, K=50, r=1), 1)
    assert exc_info.value.order == small_order_cap


# =============================================================================
# Test: Sizes and Regions
# =============================================================================


def test_macaulay_cols():
    """Test K binom(n, r) at bidegree (1, 1) and 1 at (0, 0)."""
    p = GmrParams(m=5, n=5, K=7, r=2)
    assert macaulay_cols(p, 1, 1) == 7 * 10
    assert macaulay_cols(p, 0, 0) == 1
    assert macaulay_cols(p, 2, 2) == 28 * 50


def test_dimensions():
    """Test Krull dimension, height and Plücker dimension."""
    dims = dimensions(GmrParams(m=2, n=3, K=1, r=2))
    assert (dims.krull_s, dims.height_s, dims.plucker_dim) == (7, 2, 3)

    zero = dimensions(GmrParams(m=3, n=4, K=1, r=0))
    assert (zero.krull_s, zero.height_s) == (1, 12)


def test_dimensions_sum():
    """Test krull + height = mn + r(n - r) + 1."""
    for m, n, r in ((4, 6, 2), (7, 5, 3), (3, 3, 1)):
        dims = dimensions(GmrParams(m=m, n=n, K=1, r=r))
        assert dims.krull_s + dims.height_s == m * n + r * (n - r) + 1


def test_validity_region():
    """Test the proven, conjectured and unreliable regions."""
    assert validity_region(GmrParams(m=5, n=5, K=25, r=3), 1) == Validity.PROVEN
    assert validity_region(GmrParams(m=5, n=5, K=5, r=3), 3) == Validity.UNRELIABLE
    assert validity_region(GmrParams(m=5, n=5, K=5, r=3), 2) == (
        Validity.CONJECTURED_DC_SMALL
    )
    assert validity_region(GmrParams(m=22, n=22, K=255, r=6), 1) == (
        Validity.CONJECTURED_OVERDETERMINED
    )

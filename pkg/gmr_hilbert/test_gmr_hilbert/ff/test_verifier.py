"""Unit tests for series verification and genericity trials."""

from __future__ import annotations

import pytest

from gmr_hilbert.errors import InvalidParamsError
from gmr_hilbert.ff import genericity_trials, trial_seeds, verify_series
from gmr_hilbert.hilbert import hs_sm_generic
from gmr_hilbert.models import GmrParams

# =============================================================================
# Test: verify_series
# =============================================================================


def test_verify_series_proven_region(proven_params: GmrParams, large_prime: int):
    """Test that every degree matches in the proven region."""
    report = verify_series(proven_params, large_prime, dc=1, dx_max=3, seed=2)
    assert [c.dx for c in report.checks] == [1, 2, 3]
    assert report.all_match
    assert report.post_truncation == []
    prediction = hs_sm_generic(proven_params, 1, order=4)
    assert [c.predicted for c in report.checks] == prediction.series[1:4]


def test_verify_series_records(proven_params: GmrParams, large_prime: int):
    """Test the per-degree record fields."""
    report = verify_series(proven_params, large_prime, dc=2, dx_max=1, seed=3)
    (check,) = report.checks
    assert check.params == proven_params
    assert (check.q, check.seed, check.dc, check.dx) == (large_prime, 3, 2, 1)
    assert check.observed_hf == check.ambient_dim - check.rank
    assert check.elapsed_ms >= 0


def test_verify_series_mismatch_case(mismatch_params: GmrParams, large_prime: int):
    """Test the documented mismatch at dx = 1, dc = 3."""
    report = verify_series(mismatch_params, large_prime, dc=3, dx_max=1, seed=1)
    (check,) = report.checks
    assert check.predicted == 0
    assert check.raw_predicted == 0
    assert check.observed_hf == 50
    assert check.post_truncation is True
    assert report.all_match is False
    assert report.failures == [check]


@pytest.mark.slow
def test_verify_series_proven_region_at_dc_three():
    """Test dc = 3, dx = 1 for (5, 5, 15, 2) over GF(31)."""
    p = GmrParams(m=5, n=5, K=15, r=2)
    report = verify_series(p, 31, dc=3, dx_max=1, seed=7)
    (check,) = report.checks
    assert check.predicted == 1050
    assert check.observed_hf == 1050
    assert report.all_match


def test_verify_series_overdetermined_before_truncation(large_prime: int):
    """Test (5, 5, 4, 2) at dc = 1 up to the truncation point."""
    p = GmrParams(m=5, n=5, K=4, r=2)
    cut = len(hs_sm_generic(p, 1, order=8).series)
    report = verify_series(p, large_prime, dc=1, dx_max=min(cut, 3), seed=0)
    assert all(c.match for c in report.pre_truncation)
    assert report.failures == []
    for check in report.post_truncation:
        assert check.observed_hf in (0, 1)


def test_verify_series_rejects_dx_max():
    """Test that dx_max must be at least 1."""
    with pytest.raises(InvalidParamsError):
        verify_series(GmrParams(m=3, n=3, K=6, r=1), 31, dc=1, dx_max=0, seed=0)


# =============================================================================
# Test: genericity_trials
# =============================================================================


def test_trial_seeds_are_deterministic_and_distinct():
    """Test per-trial seeds derived from a master seed."""
    seeds = trial_seeds(42, 10)
    assert seeds == trial_seeds(42, 10)
    assert len(set(seeds)) == 10
    assert seeds != trial_seeds(43, 10)


def test_genericity_proven_region(proven_params: GmrParams, large_prime: int):
    """Test that every trial matches over a large prime."""
    report = genericity_trials(
        proven_params, large_prime, dc_set=[1, 2], dx=1, trials=4, seed=5, workers=1
    )
    assert report.match_fraction == 1.0
    assert report.per_dc_fraction == {1: 1.0, 2: 1.0}
    assert [r.trial for r in report.records] == [0, 1, 2, 3]
    assert [r.seed for r in report.records] == trial_seeds(5, 4)
    assert all(r.generic for r in report.records)


def test_genericity_counts_mismatches(mismatch_params: GmrParams, large_prime: int):
    """Test that the formula failure shows as a zero fraction."""
    report = genericity_trials(
        mismatch_params, large_prime, dc_set=[3], dx=1, trials=2, seed=0, workers=1
    )
    assert report.match_fraction == 0.0
    assert report.records[0].observed == {3: 50}
    assert report.records[0].predicted == {3: 0}


@pytest.mark.integration
def test_genericity_parallel_matches_serial(proven_params: GmrParams):
    """Test that a process pool gives the same records in order."""
    serial = genericity_trials(proven_params, 31, [1], 1, trials=4, seed=9, workers=1)
    parallel = genericity_trials(proven_params, 31, [1], 1, trials=4, seed=9, workers=2)
    assert parallel.records == serial.records


def test_genericity_rejects_bad_arguments(proven_params: GmrParams):
    """Test that trials and dc_set must be non-empty."""
    with pytest.raises(InvalidParamsError):
        genericity_trials(proven_params, 31, [1], 1, trials=0, seed=0)
    with pytest.raises(InvalidParamsError):
        genericity_trials(proven_params, 31, [], 1, trials=1, seed=0)

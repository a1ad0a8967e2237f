"""Compare predicted Hilbert series with Macaulay ranks of random instances."""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from gmr_hilbert.config import get_hilbert_settings
from gmr_hilbert.errors import InvalidParamsError
from gmr_hilbert.ff.instance import gen_instance
from gmr_hilbert.ff.macaulay import macaulay_rank
from gmr_hilbert.hilbert import hs_sm_generic
from gmr_hilbert.models import (
    DegreeCheck,
    GmrParams,
    HilbertResult,
    SeriesVerification,
    TrialRecord,
    TrialsReport,
)

logger = logging.getLogger(__name__)


def predicted_coefficient(result: HilbertResult, dx: int) -> int:
    """Coefficient of t^dx of the truncated series, 0 at or past the cut."""
    return result.series[dx] if dx < len(result.series) else 0


def verify_series(
    p: GmrParams, q: int, dc: int, dx_max: int, seed: int
) -> SeriesVerification:
    """Check the predicted series against one random instance for dx = 1..dx_max.

    Degrees at or past the truncation point are flagged ``post_truncation``:
    there the prediction is 0, while an instance with a solution keeps a
    one-dimensional remainder.

    Raises:
        CapExceededError: If a Macaulay matrix is above the size cap

    """
    if dx_max < 1:
        raise InvalidParamsError(f"dx_max must be >= 1, got {dx_max}")
    instance = gen_instance(p, q, seed)
    prediction = hs_sm_generic(p, dc, order=dx_max + 1)
    cut = len(prediction.series)

    checks = []
    for dx in range(1, dx_max + 1):
        started = time.perf_counter()
        observed = macaulay_rank(instance, dx, dc)
        elapsed_ms = int((time.perf_counter() - started) * 1000)
        predicted = predicted_coefficient(prediction, dx)
        check = DegreeCheck(
            params=p,
            q=q,
            seed=seed,
            dc=dc,
            dx=dx,
            ambient_dim=observed.ambient_dim,
            rank=observed.rank,
            observed_hf=observed.observed_hf,
            predicted=predicted,
            raw_predicted=prediction.raw_series[dx],
            post_truncation=prediction.terminated and dx >= cut,
            match=observed.observed_hf == predicted,
            elapsed_ms=elapsed_ms,
        )
        if not check.match:
            logger.warning(
                f"Mismatch for {p.label()} q={q} seed={seed} dc={dc} dx={dx}: "
                f"observed {check.observed_hf}, predicted {predicted}"
            )
        checks.append(check)
    return SeriesVerification(params=p, q=q, seed=seed, dc=dc, checks=checks)


def trial_seeds(seed: int, trials: int) -> list[int]:
    """Independent per-trial seeds derived from a master seed."""
    children = np.random.SeedSequence(seed).spawn(trials)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def _run_trial(
    p: GmrParams,
    q: int,
    dx: int,
    predicted: dict[int, int],
    trial: int,
    seed: int,
) -> TrialRecord:
    instance = gen_instance(p, q, seed)
    observed = {dc: macaulay_rank(instance, dx, dc).observed_hf for dc in predicted}
    return TrialRecord(
        trial=trial,
        seed=seed,
        matches={dc: observed[dc] == predicted[dc] for dc in predicted},
        observed=observed,
        predicted=predicted,
    )


def genericity_trials(
    p: GmrParams,
    q: int,
    dc_set: Iterable[int],
    dx: int,
    trials: int,
    seed: int,
    workers: int | None = None,
) -> TrialsReport:
    """Fraction of random instances whose Hilbert function matches the prediction.

    An instance matches when the observed value equals the prediction for
    every dc in ``dc_set``. Trials run in a process pool when ``workers``
    (default from settings) is above 1; records keep trial order.

    Raises:
        CapExceededError: If a Macaulay matrix is above the size cap

    """
    if trials < 1:
        raise InvalidParamsError(f"trials must be >= 1, got {trials}")
    dcs = sorted(set(dc_set))
    if not dcs:
        raise InvalidParamsError("dc_set must not be empty")
    workers = workers if workers is not None else get_hilbert_settings().trial_workers

    predicted = {
        dc: predicted_coefficient(hs_sm_generic(p, dc, order=dx + 1), dx) for dc in dcs
    }
    seeds = trial_seeds(seed, trials)
    args = [(p, q, dx, predicted, trial, s) for trial, s in enumerate(seeds)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            records = list(executor.map(_run_trial, *zip(*args)))
    else:
        records = [_run_trial(*a) for a in args]

    for record in records:
        if not record.generic:
            logger.info(
                f"Trial {record.trial} (seed {record.seed}) differs: "
                f"observed {record.observed}, predicted {record.predicted}"
            )
    generic = sum(1 for record in records if record.generic)
    per_dc = {
        dc: sum(1 for record in records if record.matches[dc]) / trials for dc in dcs
    }
    logger.info(
        f"Genericity for {p.label()} over GF({q}): {generic}/{trials} instances match"
    )
    return TrialsReport(
        params=p,
        q=q,
        dx=dx,
        dc_set=dcs,
        seed=seed,
        trials=trials,
        match_fraction=generic / trials,
        per_dc_fraction=per_dc,
        records=records,
    )

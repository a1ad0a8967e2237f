"""Bit-cost estimates for solving Support-Minors and Minors systems.

The cost of a system is the cost of the linear algebra on its Macaulay
matrix at the degree of regularity: the cheaper of dense elimination,
c_omega * M^omega, and a Wiedemann-style solve, c * density * M^2, where M
is the column count. The hybrid search additionally guesses ``a`` columns
of the support at a price of q^(a r) repetitions.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable

from gmr_hilbert.errors import (
    InvalidParamsError,
    NoAdmissibleParamsError,
    NoFiniteRegDegreeError,
)
from gmr_hilbert.hilbert import hs_sm_terminated, macaulay_cols, validity_region
from gmr_hilbert.models import (
    ComplexityReport,
    CostModel,
    CostPoint,
    GmrParams,
    HybridCandidate,
    Strategy,
    SweepRow,
)
from gmr_hilbert.utils import build_params

logger = logging.getLogger(__name__)


def density(p: GmrParams, dc: int, override: int | None = None) -> int:
    """Upper bound on the non-zero entries per row of the Macaulay matrix.

    - dc = 0 (Minors): an (r+1)-minor may contain every monomial of degree D(r+1)
    - dc = 1: each equation has r + 1 Plücker terms times the monomials of f
    - dc > 1: bounded by the column count M(D, dc)
    """
    if override is not None:
        if override < 1:
            raise InvalidParamsError(
                f"Density override must be positive, got {override}"
            )
        return override
    if dc < 0:
        raise InvalidParamsError(f"dc must be non-negative, got {dc}")
    if dc == 0:
        degree = p.D * (p.r + 1)
        return math.comb(p.K + degree - 1, degree)
    if dc == 1:
        return (p.r + 1) * math.comb(p.K + p.D - 1, p.D)
    return macaulay_cols(p, p.D, dc)


def field_op_bits(q: int) -> float:
    """log2 of the bit cost of one operation in GF(q): log2(log2(q)^2)."""
    if q < 2:
        raise InvalidParamsError(f"Field size must be >= 2, got {q}")
    return math.log2(math.log2(q) ** 2)


def _log2_costs(model: CostModel, cols: int, dens: int) -> dict[Strategy, float]:
    log2_cols = math.log2(cols)
    return {
        Strategy.DENSE: math.log2(model.c_omega) + model.omega * log2_cols,
        Strategy.WIEDEMANN: (
            math.log2(model.c_wiedemann) + math.log2(dens) + 2 * log2_cols
        ),
    }


def _evaluate(
    p: GmrParams,
    dc: int,
    model: CostModel,
    density_override: int | None,
    order: int | None,
) -> tuple[float, CostPoint]:
    result = hs_sm_terminated(p, dc, order)
    dreg = result.reg_degree
    assert dreg is not None
    cols = macaulay_cols(p, dreg, dc)
    dens = density(p, dc, density_override)
    costs = _log2_costs(model, cols, dens)
    strategy = min(costs, key=lambda s: (costs[s], s != Strategy.DENSE))
    exact = costs[strategy] + (model.fieldop_bits or 0.0)
    point = CostPoint(
        log2_cost=round(exact, 1),
        dreg=dreg,
        strategy=strategy,
        macaulay_log2_cols=round(math.log2(cols), 1),
        density=dens,
    )
    return exact, point


def complexity_at(
    p: GmrParams,
    dc: int,
    model: CostModel | None = None,
    density_override: int | None = None,
    order: int | None = None,
) -> CostPoint:
    """Cost of solving the system at its degree of regularity.

    Args:
        p: Instance family
        dc: Plücker degree, 0 for the Minors modeling
        model: Cost constants; ``fieldop_bits=None`` counts field operations
        density_override: Replaces the density bound
        order: Starting truncation order of the series

    Raises:
        NoFiniteRegDegreeError: If the series does not terminate below the order cap

    """
    return _evaluate(p, dc, model or CostModel(), density_override, order)[1]


def max_hybrid_width(p: GmrParams) -> int:
    """Largest a with n - a > r and K - a m >= 1."""
    by_columns = p.n - p.r - 1
    by_variables = (p.K - 1) // p.m
    return max(0, min(by_columns, by_variables))


def default_dc_range(p: GmrParams) -> list[int]:
    """Minors (dc = 0) and Support-Minors degrees 1..min(10, m - r)."""
    return list(range(0, max(1, min(10, p.m - p.r)) + 1))


def complexity_hybrid(
    p: GmrParams,
    q: int,
    dc_range: Iterable[int] | None = None,
    model: CostModel | None = None,
    max_dreg: int | None = None,
    a_fixed: int | None = None,
    verbose: bool = False,
    order: int | None = None,
) -> ComplexityReport:
    """Cheapest hybrid Support-Minors attack over the (a, dc) grid.

    Each cell costs a r log2(q) + cost((m, n - a, K - a m, r), dc) plus the
    field-operation bits. Ties keep the smallest a, then the smallest dc.

    Args:
        p: Instance family
        q: Field size
        dc_range: Plücker degrees to try, default 0..min(10, m - r)
        model: Cost constants; ``fieldop_bits=None`` derives log2(log2(q)^2)
        max_dreg: Discard cells whose degree of regularity exceeds this
        a_fixed: Only try this number of guessed columns
        verbose: Keep the per-cell breakdown in the report
        order: Starting truncation order of the series

    Returns:
        ComplexityReport of the winning cell

    Raises:
        NoAdmissibleParamsError: If no cell has a finite degree of regularity

    """
    model = model or CostModel()
    bits = model.fieldop_bits if model.fieldop_bits is not None else field_op_bits(q)
    op_count_model = model.model_copy(update={"fieldop_bits": 0.0})
    dcs = sorted(set(dc_range)) if dc_range is not None else default_dc_range(p)
    if not dcs:
        raise InvalidParamsError("dc_range must not be empty")

    a_max = max_hybrid_width(p)
    if a_fixed is not None:
        if not 0 <= a_fixed <= a_max:
            raise InvalidParamsError(f"a={a_fixed} outside 0..{a_max}")
        widths = [a_fixed]
    else:
        widths = list(range(a_max + 1))

    best: tuple[float, int, int, CostPoint] | None = None
    breakdown: list[HybridCandidate] = []
    for a in widths:
        sub = p.hybrid(a)
        guess_bits = a * p.r * math.log2(q)
        for dc in dcs:
            validity = validity_region(sub, dc)
            try:
                exact, point = _evaluate(sub, dc, op_count_model, None, order)
            except NoFiniteRegDegreeError:
                breakdown.append(
                    HybridCandidate(
                        a=a, dc=dc, validity=validity, skipped="no finite dreg"
                    )
                )
                continue
            total = guess_bits + exact + bits
            if max_dreg is not None and point.dreg > max_dreg:
                breakdown.append(
                    HybridCandidate(
                        a=a,
                        dc=dc,
                        dreg=point.dreg,
                        validity=validity,
                        skipped=f"dreg above {max_dreg}",
                    )
                )
                continue
            breakdown.append(
                HybridCandidate(
                    a=a,
                    dc=dc,
                    log2_cost=round(total, 1),
                    dreg=point.dreg,
                    strategy=point.strategy,
                    validity=validity,
                )
            )
            if best is None or total < best[0]:
                best = (total, a, dc, point)

    if best is None:
        raise NoAdmissibleParamsError(
            f"No admissible (a, dc) pair for {p.label()} over GF({q})"
        )
    total, a_star, dc_star, point = best
    logger.info(
        f"Best hybrid cost for {p.label()}: {total:.1f} bits at a={a_star}, "
        f"dc={dc_star}, dreg={point.dreg}"
    )
    sub = p.hybrid(a_star)
    return ComplexityReport(
        params=p,
        q=q,
        log2_cost=round(total, 1),
        dc_star=dc_star,
        dreg=point.dreg,
        a_star=a_star,
        strategy=point.strategy,
        sub_params=sub,
        validity=validity_region(sub, dc_star),
        fieldop_bits=round(bits, 3),
        breakdown=breakdown if verbose else [],
    )


def default_k_policy(m: int, n: int) -> Callable[[int], int]:
    """K = (m - r)(n - r) - 1, the largest overdetermined K."""
    return lambda r: (m - r) * (n - r) - 1


def _sweep_point(
    p: GmrParams, dc: int, model: CostModel, notes: list[str]
) -> CostPoint | None:
    try:
        return complexity_at(p, dc, model)
    except NoFiniteRegDegreeError as e:
        notes.append(f"dc={dc}: {e.message}")
        return None


def sweep_r(
    m: int,
    n: int,
    K_policy: Callable[[int], int] | None = None,
    q: int | None = None,
    model: CostModel | None = None,
    r_values: Iterable[int] | None = None,
) -> list[SweepRow]:
    """Minors versus Support-Minors (dc = 1) costs for a range of target ranks.

    Without hybrid guessing the costs count field operations, so
    ``fieldop_bits`` only applies when the model sets it explicitly. Rows
    whose K is not positive or whose series never terminates carry a
    ``skipped`` note.
    """
    policy = K_policy or default_k_policy(m, n)
    model = model or CostModel()
    if q is not None and q < 2:
        raise InvalidParamsError(f"Field size must be >= 2, got {q}")
    if r_values is None:
        r_values = [r for r in range(1, min(m, n) + 1) if policy(r) >= 1]

    rows: list[SweepRow] = []
    for r in r_values:
        K = policy(r)
        if K < 1:
            rows.append(SweepRow(r=r, K=K, q=q, skipped="K is not positive"))
            continue
        p = build_params(m, n, K, r)
        notes: list[str] = []
        minors = _sweep_point(p, 0, model, notes)
        sm = _sweep_point(p, 1, model, notes)
        logger.debug(f"Sweep r={r}, K={K}: minors={minors}, sm={sm}")
        rows.append(
            SweepRow(
                r=r,
                K=K,
                q=q,
                minors_cost=minors.log2_cost if minors else None,
                sm_cost=sm.log2_cost if sm else None,
                minors_dreg=minors.dreg if minors else None,
                sm_dreg=sm.dreg if sm else None,
                skipped="; ".join(notes) or None,
            )
        )
    return rows

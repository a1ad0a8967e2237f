"""Random linear Generalized MinRank instances over GF(q)."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from gmr_hilbert.errors import InvalidParamsError
from gmr_hilbert.ff.field import MAX_FIELD_SIZE
from gmr_hilbert.models import GmrParams
from gmr_hilbert.series import exact_det
from gmr_hilbert.utils import validate_prime

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Instance:
    """Matrix of linear forms f_ij = sum_k coeffs[i, j, k] x_k over GF(q)."""

    params: GmrParams
    q: int
    coeffs: NDArray[np.int64]
    seed: int

    def evaluate(self, x: NDArray[np.int64]) -> NDArray[np.int64]:
        """The m x n matrix F(x) mod q."""
        return np.asarray((self.coeffs @ x) % self.q, dtype=np.int64)


@dataclass(frozen=True)
class PlantedInstance:
    """Instance with rank(F(x_star)) <= r.

    The rows of ``row_basis`` span the row space of F(x_star).
    """

    instance: Instance
    x_star: NDArray[np.int64]
    row_basis: NDArray[np.int64]

    def plucker_values(self, supports: list[tuple[int, ...]]) -> list[int]:
        """Maximal minors of the row basis on the given column sets, mod q."""
        q = self.instance.q
        basis = self.row_basis.tolist()
        return [
            exact_det([[row[j] for j in support] for row in basis]) % q
            for support in supports
        ]


def _check_linear(p: GmrParams, q: int) -> None:
    if p.D != 1:
        raise InvalidParamsError(
            f"Only linear instances (D=1) are supported, got D={p.D}"
        )
    if q >= MAX_FIELD_SIZE:
        raise InvalidParamsError(f"Field size {q} is too large for int64 arithmetic")
    validate_prime(q)


def gen_instance(p: GmrParams, q: int, seed: int) -> Instance:
    """Uniformly random instance; the same (p, q, seed) gives the same instance."""
    _check_linear(p, q)
    rng = np.random.default_rng(seed)
    coeffs = rng.integers(0, q, size=(p.m, p.n, p.K), dtype=np.int64)
    return Instance(params=p, q=q, coeffs=coeffs, seed=seed)


def planted_instance(p: GmrParams, q: int, seed: int) -> PlantedInstance:
    """Random instance whose evaluation at a known point x_star has rank <= r."""
    _check_linear(p, q)
    rng = np.random.default_rng(seed)
    left = rng.integers(0, q, size=(p.m, p.r), dtype=np.int64)
    row_basis = rng.integers(0, q, size=(p.r, p.n), dtype=np.int64)
    target = (left @ row_basis) % q

    x_star = rng.integers(0, q, size=p.K, dtype=np.int64)
    x_star[0] = 1
    coeffs = rng.integers(0, q, size=(p.m, p.n, p.K), dtype=np.int64)
    rest = (coeffs[:, :, 1:] @ x_star[1:]) % q
    coeffs[:, :, 0] = (target - rest) % q

    instance = Instance(params=p, q=q, coeffs=coeffs, seed=seed)
    logger.debug(f"Planted a rank-{p.r} point in {p.label()} over GF({q})")
    return PlantedInstance(instance=instance, x_star=x_star, row_basis=row_basis)

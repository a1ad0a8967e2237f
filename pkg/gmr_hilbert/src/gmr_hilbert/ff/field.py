"""Dense matrices over a prime field GF(q)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from gmr_hilbert.errors import InvalidParamsError
from gmr_hilbert.utils import validate_prime

logger = logging.getLogger(__name__)

# sums of up to 2**15 products of reduced entries must fit in int64
MAX_FIELD_SIZE = 2**24


@dataclass(frozen=True)
class EchelonForm:
    """Rank and pivot columns of a row-echelon reduction."""

    rank: int
    pivots: tuple[int, ...]


@dataclass
class PrimeFieldMatrix:
    """Dense ``rows x cols`` matrix with entries reduced mod a prime ``q``."""

    entries: NDArray[np.int64]
    q: int
    _echelon: EchelonForm | None = field(default=None, init=False, repr=False)

    def __post_init__(self) -> None:
        if self.q >= MAX_FIELD_SIZE:
            raise InvalidParamsError(
                f"Field size {self.q} is too large for int64 arithmetic"
            )
        validate_prime(self.q)
        if self.entries.ndim != 2:
            raise InvalidParamsError(f"Expected a 2D array, got {self.entries.ndim}D")
        self.entries = np.asarray(self.entries, dtype=np.int64) % self.q

    @classmethod
    def zeros(cls, rows: int, cols: int, q: int) -> PrimeFieldMatrix:
        return cls(np.zeros((rows, cols), dtype=np.int64), q)

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    def echelon(self) -> EchelonForm:
        """Row-reduce a copy of the matrix, scanning columns left to right."""
        if self._echelon is None:
            self._echelon = _row_reduce(self.entries.copy(), self.q)
        return self._echelon

    def rank(self) -> int:
        return self.echelon().rank

    def pivots(self) -> tuple[int, ...]:
        return self.echelon().pivots


def _row_reduce(a: NDArray[np.int64], q: int) -> EchelonForm:
    rows, cols = a.shape
    rank = 0
    pivots: list[int] = []
    for c in range(cols):
        if rank == rows:
            break
        candidates = np.flatnonzero(a[rank:, c])
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, c]), -1, q)
        a[rank, c:] = (a[rank, c:] * inv) % q
        tail = a[rank + 1 :, c:]
        if tail[:, 0].any():
            tail -= tail[:, :1] * a[rank, c:]
            np.remainder(tail, q, out=tail)
        pivots.append(c)
        rank += 1
    logger.debug(f"Reduced {rows}x{cols} matrix over GF({q}): rank {rank}")
    return EchelonForm(rank=rank, pivots=tuple(pivots))

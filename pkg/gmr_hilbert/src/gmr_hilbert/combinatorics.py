"""Partitions, standard tableaux and the binomial identities behind the series.

A tableau is a product of minors, one minor per row: each row is the
index set of a minor, written increasing left to right, rows get shorter
downwards and columns weakly increase. Its *shape* ``v`` counts columns, not
rows: ``v(i)`` is the number of rows of length at least ``i``. Hence a shape
with ``p`` non-zero parts needs a row of ``p`` distinct entries and has no
filling when ``p`` exceeds the bound.

The left tableau of a bitableau is usually drawn with rows decreasing
rightwards; ``tableau_orientation`` maps it to the canonical form above.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

from gmr_hilbert.config import get_hilbert_settings
from gmr_hilbert.errors import CapExceededError, InvalidParamsError
from gmr_hilbert.series import binom_ext, exact_det, twisted_binom

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Shape:
    """Weakly decreasing tuple of non-negative parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.parts):
            raise InvalidParamsError(f"Shape parts must be non-negative: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidParamsError(f"Shape parts must not increase: {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> Shape:
        return cls(tuple(parts))

    @classmethod
    def rectangle(cls, width: int, height: int) -> Shape:
        """Shape (width, ..., width) with ``height`` parts."""
        return cls((width,) * height)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def nonzero(self) -> Shape:
        return Shape(tuple(p for p in self.parts if p))

    def widened(self, extra: int) -> Shape:
        """Add ``extra`` to every part."""
        return Shape(tuple(p + extra for p in self.parts))

    def conjugate(self) -> Shape:
        """Row lengths of the tableaux of this shape."""
        if not self.parts or self.parts[0] == 0:
            return Shape(())
        return Shape(
            tuple(
                sum(1 for part in self.parts if part >= k)
                for k in range(1, self.parts[0] + 1)
            )
        )


@dataclass(frozen=True, slots=True)
class Tableau:
    """Tableau with strict rows, weakly increasing columns, entries in 1..bound."""

    rows: tuple[tuple[int, ...], ...]
    bound: int

    def __post_init__(self) -> None:
        Shape(tuple(len(row) for row in self.rows))
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InvalidParamsError(f"Row {row} is not strictly increasing")
            if any(not 1 <= entry <= self.bound for entry in row):
                raise InvalidParamsError(f"Row {row} leaves 1..{self.bound}")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(b < a for a, b in zip(upper, lower)):
                raise InvalidParamsError(
                    f"Column decreases between {upper} and {lower}"
                )

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(row) for row in self.rows)).conjugate()


def tableau_orientation(drawn_rows: Sequence[Sequence[int]], bound: int) -> Tableau:
    """Convert a left tableau drawn with decreasing rows to canonical form."""
    return Tableau(tuple(tuple(reversed(row)) for row in drawn_rows), bound)


def partitions(d: int, max_parts: int) -> list[Shape]:
    """All shapes of degree ``d`` with exactly ``max_parts`` parts (zeros allowed).

    Shapes come out in decreasing lexicographic order, e.g. ``(3, 0)`` before
    ``(2, 1)``.
    """
    if d < 0 or max_parts < 1:
        raise InvalidParamsError(
            f"Need d >= 0 and max_parts >= 1, got {d}, {max_parts}"
        )

    def _build(remaining: int, slots: int, ceiling: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        # the first part must leave room: slots * first >= remaining
        lowest = -(-remaining // slots)
        for first in range(min(remaining, ceiling), lowest - 1, -1):
            for rest in _build(remaining - first, slots - 1, first):
                yield (first, *rest)

    return [Shape(parts) for parts in _build(d, max_parts, d)]


def stab(bound: int, shape: Shape) -> int:
    """Number of standard tableaux of ``shape`` with entries bounded by ``bound``.

    Evaluates det(twisted_binom(bound - j, v(i) + j - i)) over the non-zero
    parts. Shapes with more non-zero parts than ``bound`` have no filling.
    """
    if bound < 1:
        raise InvalidParamsError(f"Bound must be positive, got {bound}")
    parts = shape.nonzero().parts
    p = len(parts)
    if p == 0:
        return 1
    if p > bound:
        return 0
    rows = [
        [twisted_binom(bound - j, parts[i - 1] + j - i) for j in range(1, p + 1)]
        for i in range(1, p + 1)
    ]
    return exact_det(rows)


def enumerate_tableaux(
    bound: int, shape: Shape, cap: int | None = None
) -> list[Tableau]:
    """Brute-force list of all tableaux counted by ``stab``, row-major lex order.

    Raises:
        CapExceededError: If the candidate space exceeds ``cap``

    """
    if bound < 1:
        raise InvalidParamsError(f"Bound must be positive, got {bound}")
    cap = cap if cap is not None else get_hilbert_settings().enumeration_cap
    row_lengths = shape.conjugate().parts
    candidates = math.prod(math.comb(bound, length) for length in row_lengths)
    if candidates > cap:
        raise CapExceededError("Tableau enumeration", candidates, cap)

    choices = [list(combinations(range(1, bound + 1), k)) for k in row_lengths]
    found: list[Tableau] = []

    def _fill(index: int, rows: tuple[tuple[int, ...], ...]) -> None:
        if index == len(choices):
            found.append(Tableau(rows, bound))
            return
        above = rows[-1] if rows else None
        for row in choices[index]:
            if above is not None and any(b < a for a, b in zip(above, row)):
                continue
            _fill(index + 1, (*rows, row))

    _fill(0, ())
    logger.debug(f"Enumerated {len(found)} tableaux of shape {shape.parts}")
    return found


def count_bitableaux(
    m_bound: int, n_bound: int, left_shape: Shape, right_shape: Shape
) -> int:
    """Standard bitableaux with the given left and right shapes."""
    if left_shape.length != right_shape.length:
        raise InvalidParamsError(
            f"Left and right shapes differ in length: {left_shape.length} "
            f"vs {right_shape.length}"
        )
    return stab(m_bound, left_shape) * stab(n_bound, right_shape)


def check_saalschutz(a: int, b: int, f: int, ell: int) -> bool:
    """Check the Saalschütz summation for one integer point.

    sum_k binom(b, f-k) binom(a, l-k) binom(a+b+k, k) = binom(a+f, l) binom(b+l, f)
    """
    if ell < 0:
        raise InvalidParamsError(f"ell must be non-negative, got {ell}")
    lhs = sum(
        binom_ext(b, f - k) * binom_ext(a, ell - k) * binom_ext(a + b + k, k)
        for k in range(ell + 1)
    )
    rhs = binom_ext(a + f, ell) * binom_ext(b + ell, f)
    return lhs == rhs


def check_combi_identity(i: int, a: int, b: int) -> bool:
    """Check the alternating binomial identity for one integer point.

    sum_k (-1)^(i-k) binom(i-1, k-1) binom(a-k, b-k) = (-1)^(i-1) binom(a-i, b-1)
    """
    if i < 1 or b < 1:
        raise InvalidParamsError(f"Need i >= 1 and b >= 1, got i={i}, b={b}")
    lhs = sum(
        (-1) ** (i - k) * math.comb(i - 1, k - 1) * binom_ext(a - k, b - k)
        for k in range(1, i + 1)
    )
    rhs = (-1) ** (i - 1) * binom_ext(a - i, b - 1)
    return lhs == rhs


def saalschutz_failures(
    a_range: range = range(-6, 7),
    b_range: range = range(-6, 7),
    f_range: range = range(-3, 7),
    ell_range: range = range(7),
) -> list[tuple[int, int, int, int]]:
    """Points (a, b, f, ell) of the grid where the Saalschütz check fails."""
    return [
        (a, b, f, ell)
        for a in a_range
        for b in b_range
        for f in f_range
        for ell in ell_range
        if not check_saalschutz(a, b, f, ell)
    ]


def combi_identity_failures(
    i_range: range = range(1, 9),
    a_range: range = range(-8, 9),
    b_range: range = range(1, 9),
) -> list[tuple[int, int, int]]:
    """Points (i, a, b) of the grid where the alternating identity fails."""
    return [
        (i, a, b)
        for i in i_range
        for a in a_range
        for b in b_range
        if not check_combi_identity(i, a, b)
    ]

"""Exact truncated power series over the integers and binomial helpers."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import permutations

from sympy import ZZ
from sympy.combinatorics import Permutation
from sympy.polys.matrices import DomainMatrix

from gmr_hilbert.errors import DivisibilityError, InvalidParamsError

logger = logging.getLogger(__name__)

# Leibniz expansion is used up to this size, evaluation/interpolation above.
LEIBNIZ_MAX_SIZE = 4


def binom_ext(a: int, k: int) -> int:
    """Extended binomial coefficient a(a-1)...(a-k+1)/k!, zero for k < 0."""
    if k < 0:
        return 0
    if a >= 0:
        return math.comb(a, k)
    # negative upper index: reflection binom(-a', k) = (-1)^k binom(a'+k-1, k)
    value = math.comb(k - a - 1, k)
    return -value if k % 2 else value


def twisted_binom(n: int, m: int) -> int:
    """Twisted binomial coefficient binom(n + m, m), zero for m < 0."""
    if m < 0:
        return 0
    return binom_ext(n + m, m)


@dataclass(frozen=True, slots=True)
class TruncatedSeries:
    """Power series in t known modulo t^order.

    ``coeffs[k]`` is the coefficient of t^k; the tuple length is the order.
    """

    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int) -> TruncatedSeries:
        """Build a series of the given order, padding with zeros or cutting."""
        if order < 0:
            raise InvalidParamsError(f"Order must be non-negative, got {order}")
        values = [int(c) for c in coeffs][:order]
        values.extend([0] * (order - len(values)))
        return cls(tuple(values))

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs((), order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs((1,), order)

    @classmethod
    def monomial(cls, degree: int, order: int, coefficient: int = 1) -> TruncatedSeries:
        return cls.from_coeffs([0] * degree + [coefficient], order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        """Index of the last non-zero coefficient, -1 for the zero series."""
        for index in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[index]:
                return index
        return -1

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise InvalidParamsError(
                f"Cannot raise order from {self.order} to {order} without data"
            )
        return TruncatedSeries(self.coeffs[:order])

    def substitute_power(self, d: int) -> TruncatedSeries:
        """Return S(t^d), keeping the same order."""
        if d < 1:
            raise InvalidParamsError(f"Substitution exponent must be >= 1, got {d}")
        out = [0] * self.order
        for index, value in enumerate(self.coeffs):
            if index * d >= self.order:
                break
            out[index * d] = value
        return TruncatedSeries(tuple(out))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __getitem__(self, index: int) -> int:
        return self.coeffs[index]

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, -other)

    def __mul__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, int):
            return series_scale(self, other)
        return series_mul(self, other)

    __rmul__ = __mul__


@dataclass(frozen=True, slots=True)
class PlusTruncation:
    """Result of cutting a series at its first non-positive coefficient."""

    series: TruncatedSeries
    terminated: bool


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_scale(a: TruncatedSeries, c: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(c * x for x in a.coeffs))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product of two series, truncated at the smaller order."""
    order = min(a.order, b.order)
    left, right = a.coeffs, b.coeffs
    out = [0] * order
    for i in range(order):
        x = left[i]
        if not x:
            continue
        for j in range(order - i):
            y = right[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(tuple(out))


def series_pow(a: TruncatedSeries, exponent: int) -> TruncatedSeries:
    if exponent < 0:
        raise InvalidParamsError(f"Negative exponent {exponent}")
    result = TruncatedSeries.one(a.order)
    base = a
    while exponent:
        if exponent & 1:
            result = series_mul(result, base)
        exponent >>= 1
        if exponent:
            base = series_mul(base, base)
    return result


def binomial_power(N: int, d: int, order: int) -> TruncatedSeries:
    """Expansion of (1 - t^d)^N."""
    if N < 0 or d < 1:
        raise InvalidParamsError(f"Need N >= 0 and d >= 1, got N={N}, d={d}")
    out = [0] * order
    for u in range(N + 1):
        if u * d >= order:
            break
        out[u * d] = -math.comb(N, u) if u % 2 else math.comb(N, u)
    return TruncatedSeries(tuple(out))


def geometric_inverse_pow(N: int, d: int, order: int) -> TruncatedSeries:
    """Expansion of 1/(1 - t^d)^N: coefficient of t^(du) is binom(N-1+u, u)."""
    if N < 0 or d < 1:
        raise InvalidParamsError(f"Need N >= 0 and d >= 1, got N={N}, d={d}")
    out = [0] * order
    for u in range((order - 1) // d + 1 if order else 0):
        out[u * d] = binom_ext(N - 1 + u, u)
    return TruncatedSeries(tuple(out))


def shift_div(s: TruncatedSeries, e: int) -> TruncatedSeries:
    """Divide by t^e, which must divide s exactly.

    Raises:
        DivisibilityError: If one of the first ``e`` coefficients is non-zero

    """
    if e < 0 or e > s.order:
        raise InvalidParamsError(f"Cannot divide a series of order {s.order} by t^{e}")
    for index in range(e):
        if s.coeffs[index]:
            raise DivisibilityError(e, index, s.coeffs[index])
    return TruncatedSeries(s.coeffs[e:])


def truncate_plus(s: TruncatedSeries) -> PlusTruncation:
    """Cut ``s`` before its first non-positive coefficient."""
    for index, value in enumerate(s.coeffs):
        if value <= 0:
            return PlusTruncation(TruncatedSeries(s.coeffs[:index]), terminated=True)
    return PlusTruncation(s, terminated=False)


def exact_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    size = len(rows)
    if size == 0:
        return 1
    if any(len(row) != size for row in rows):
        raise InvalidParamsError("Determinant needs a square matrix")
    matrix = DomainMatrix([[ZZ(int(v)) for v in row] for row in rows], (size, size), ZZ)
    return int(matrix.det())


def _leibniz_det(
    matrix: Sequence[Sequence[TruncatedSeries]], order: int
) -> TruncatedSeries:
    size = len(matrix)
    total = TruncatedSeries.zero(order)
    for perm in permutations(range(size)):
        term = TruncatedSeries.one(order)
        for row, col in enumerate(perm):
            term = series_mul(term, matrix[row][col])
            if term.degree < 0:
                break
        if term.degree < 0:
            continue
        sign = Permutation(list(perm)).signature()
        total = series_add(total, series_scale(term, sign))
    return total


def _horner(coeffs: Sequence[int], x: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * x + c
    return value


def _interpolate(values: Sequence[int]) -> list[int]:
    """Integer coefficients of the polynomial taking ``values`` at 0, 1, 2, ..."""
    degree = len(values) - 1
    diffs = list(values)
    leading = [diffs[0]]
    for _ in range(degree):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        leading.append(diffs[0])

    # sum_k leading[k] * x(x-1)...(x-k+1) / k!, scaled by degree! to stay integral
    scale = math.factorial(degree)
    total = [0] * (degree + 1)
    falling = [1]
    for k, delta in enumerate(leading):
        if delta:
            factor = delta * (scale // math.factorial(k))
            for j, c in enumerate(falling):
                total[j] += factor * c
        shifted = [0] + falling
        for j, c in enumerate(falling):
            shifted[j] -= k * c
        falling = shifted

    coeffs = []
    for value in total:
        quotient, remainder = divmod(value, scale)
        assert remainder == 0, "interpolation produced a non-integral coefficient"
        coeffs.append(quotient)
    return coeffs


def _interpolated_det(
    matrix: Sequence[Sequence[TruncatedSeries]], order: int
) -> TruncatedSeries:
    size = len(matrix)
    polys = [[entry.coeffs[: entry.degree + 1] for entry in row] for row in matrix]
    row_degrees = [max(len(p) - 1 for p in row) for row in polys]
    col_degrees = [max(len(polys[i][j]) - 1 for i in range(size)) for j in range(size)]
    if min(row_degrees) < 0 or min(col_degrees) < 0:
        return TruncatedSeries.zero(order)
    bound = min(sum(row_degrees), sum(col_degrees))

    values = []
    for x in range(bound + 1):
        values.append(exact_det([[_horner(p, x) for p in row] for row in polys]))
    logger.debug(f"Interpolating a {size}x{size} determinant of degree <= {bound}")
    return TruncatedSeries.from_coeffs(_interpolate(values), order)


def series_matrix_det(matrix: Sequence[Sequence[TruncatedSeries]]) -> TruncatedSeries:
    """Exact determinant of a square matrix of series.

    Entries are only known modulo t^order, so the determinant is computed on
    their polynomial truncations and cut back to the same order. Small
    matrices use the Leibniz sum; larger ones take fraction-free integer
    determinants at the points 0..deg and interpolate.

    Args:
        matrix: p x p matrix of series sharing one order

    Returns:
        The determinant modulo t^order

    """
    size = len(matrix)
    if size == 0:
        raise InvalidParamsError("Determinant of an empty matrix is undefined here")
    if any(len(row) != size for row in matrix):
        raise InvalidParamsError("Determinant needs a square matrix")
    orders = {entry.order for row in matrix for entry in row}
    if len(orders) != 1:
        raise InvalidParamsError(f"Entries have mixed orders {sorted(orders)}")
    order = orders.pop()

    if size <= LEIBNIZ_MAX_SIZE:
        return _leibniz_det(matrix, order)
    return _interpolated_det(matrix, order)

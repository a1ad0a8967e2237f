"""Support-Minors equations and their Macaulay matrices over GF(q).

Plücker variables c_I are not reduced modulo the Plücker relations. Every
Plücker monomial is mapped to the product of the corresponding maximal
minors of a generic r x n matrix C, whose span is the degree-dc part of the
Grassmannian coordinate ring. The span is then represented in coordinates
on a set of pivot C-monomials, which keeps the rank of every Macaulay matrix
while shrinking its width to binom(K+dx-1, dx) * module_rank(n, r, dc).
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations

import numpy as np
from numpy.typing import NDArray
from sympy import ZZ
from sympy.combinatorics import Permutation
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from gmr_hilbert.config import get_hilbert_settings
from gmr_hilbert.errors import CapExceededError, ErrorCode, GmrError, InvalidParamsError
from gmr_hilbert.ff.field import PrimeFieldMatrix
from gmr_hilbert.ff.instance import Instance
from gmr_hilbert.hilbert import module_rank
from gmr_hilbert.models import MacaulayRank
from gmr_hilbert.series import binom_ext

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


def plucker_vars(n: int, r: int) -> list[tuple[int, ...]]:
    """Column sets I of the Plücker variables c_I, in lexicographic order."""
    return list(combinations(range(n), r))


def x_monomials(K: int, degree: int) -> list[Monomial]:
    """Monomials of the given degree in x_0..x_{K-1}, as sorted index tuples."""
    if degree < 0:
        return []
    return list(combinations_with_replacement(range(K), degree))


@dataclass(frozen=True)
class MonomialIndex:
    """Column basis of the Macaulay matrix in bidegree (dx, dc).

    Column ``i * len(c_monomials) + j`` stands for x-monomial ``i`` times
    C-monomial ``j``.
    """

    dx: int
    dc: int
    x_monomials: tuple[Monomial, ...]
    c_monomials: tuple[Monomial, ...]

    @property
    def width(self) -> int:
        return len(self.x_monomials) * len(self.c_monomials)


@lru_cache(maxsize=32)
def _minor_ring(n: int, r: int) -> tuple[PolyRing, tuple[PolyElement, ...]]:
    """Polynomial ring in the entries of C and the maximal minors of C."""
    names = [f"c{a}_{b}" for a in range(r) for b in range(n)]
    poly_ring, *gens = ring(names, ZZ, grlex)
    minors = []
    for support in plucker_vars(n, r):
        minor = poly_ring.zero
        for perm in permutations(range(r)):
            term = poly_ring(Permutation(list(perm)).signature())
            for row, col in enumerate(perm):
                term *= gens[row * n + support[col]]
            minor += term
        minors.append(minor)
    return poly_ring, tuple(minors)


def expand_plucker(c_monomial: Sequence[int], n: int, r: int) -> PolyElement:
    """Product of maximal minors of C with the given exponents.

    Args:
        c_monomial: Exponent of each Plücker variable, in ``plucker_vars`` order
        n: Column count of C
        r: Row count of C

    Returns:
        Polynomial in the r x n entries of C, homogeneous of degree r * sum(exponents)

    """
    poly_ring, minors = _minor_ring(n, r)
    if len(c_monomial) != len(minors):
        raise InvalidParamsError(
            f"Expected {len(minors)} Plücker exponents, got {len(c_monomial)}"
        )
    result = poly_ring.one
    for minor, exponent in zip(minors, c_monomial):
        if exponent:
            result *= minor**exponent
    return result


def _exponents(multiset: Monomial, count: int) -> list[int]:
    counts = Counter(multiset)
    return [counts.get(i, 0) for i in range(count)]


@dataclass(frozen=True)
class PluckerBasis:
    """Degree-dc Plücker monomials in coordinates on pivot C-monomials mod q."""

    n: int
    r: int
    dc: int
    q: int
    monomials: dict[Monomial, int]
    c_monomials: tuple[Monomial, ...]
    images: NDArray[np.int64]

    def image(self, multiset: Monomial) -> NDArray[np.int64]:
        return self.images[self.monomials[tuple(sorted(multiset))]]


@lru_cache(maxsize=64)
def plucker_basis(n: int, r: int, dc: int, q: int) -> PluckerBasis:
    """Expand all degree-dc Plücker monomials and pick pivot C-monomials.

    Raises:
        GmrError: If the images do not span a space of dimension module_rank(n, r, dc)

    """
    supports = plucker_vars(n, r)
    monomials = x_monomials(len(supports), dc)
    polys = [
        expand_plucker(_exponents(mono, len(supports)), n, r) for mono in monomials
    ]
    c_terms = sorted({monom for poly in polys for monom in poly.keys()}, reverse=True)
    columns = {monom: index for index, monom in enumerate(c_terms)}

    cap = get_hilbert_settings().max_matrix_entries
    if len(polys) * len(c_terms) > cap:
        raise CapExceededError("Plücker image matrix", len(polys) * len(c_terms), cap)
    expanded = np.zeros((len(polys), len(c_terms)), dtype=np.int64)
    for row, poly in enumerate(polys):
        for monom, coeff in poly.items():
            expanded[row, columns[monom]] = int(coeff) % q

    pivots = PrimeFieldMatrix(expanded, q).pivots()
    expected = module_rank(n, r, dc)
    if len(pivots) != expected:
        raise GmrError(
            f"Plücker images span {len(pivots)} dimensions, expected {expected}",
            ErrorCode.INTERNAL_ERROR,
        )
    logger.debug(
        f"Plücker basis n={n} r={r} dc={dc}: {len(polys)} monomials onto "
        f"{len(pivots)} of {len(c_terms)} C-monomials"
    )
    return PluckerBasis(
        n=n,
        r=r,
        dc=dc,
        q=q,
        monomials={mono: index for index, mono in enumerate(monomials)},
        c_monomials=tuple(c_terms[c] for c in pivots),
        images=np.ascontiguousarray(expanded[:, list(pivots)]),
    )


@dataclass(frozen=True)
class SmTerm:
    """sign * f_{row, column} * c_I with I the index of a Plücker variable."""

    sign: int
    column: int
    plucker: int


@dataclass(frozen=True)
class SmEquation:
    """Support-Minors equation for row ``row`` of F and the column set ``support``."""

    row: int
    support: tuple[int, ...]
    terms: tuple[SmTerm, ...]

    def evaluate(
        self, instance: Instance, x: NDArray[np.int64], plucker_values: Sequence[int]
    ) -> int:
        """Value at the point (x, c) mod q."""
        q = instance.q
        total = 0
        for term in self.terms:
            f_value = int(instance.coeffs[self.row, term.column] @ x) % q
            total += term.sign * f_value * int(plucker_values[term.plucker])
        return total % q


def sm_equations(instance: Instance) -> list[SmEquation]:
    """The m * binom(n, r+1) equations sum_i (-1)^i f_{l, j_i} c_{J minus j_i}."""
    p = instance.params
    index = {support: i for i, support in enumerate(plucker_vars(p.n, p.r))}
    equations = []
    for row in range(p.m):
        for support in combinations(range(p.n), p.r + 1):
            terms = tuple(
                SmTerm(
                    sign=(-1) ** position,
                    column=column,
                    plucker=index[support[: position - 1] + support[position:]],
                )
                for position, column in enumerate(support, start=1)
            )
            equations.append(SmEquation(row=row, support=support, terms=terms))
    return equations


def macaulay_matrix(
    instance: Instance, dx: int, dc: int
) -> tuple[PrimeFieldMatrix, MonomialIndex]:
    """Macaulay matrix in bidegree (dx, dc).

    Rows are the equations times every x-monomial of degree dx - 1 and every
    Plücker monomial of degree dc - 1.

    Raises:
        CapExceededError: If rows * columns exceeds ``max_matrix_entries``

    """
    p, q = instance.params, instance.q
    if dx < 1 or dc < 1:
        raise InvalidParamsError(f"Need dx, dc >= 1, got dx={dx}, dc={dc}")
    equations = sm_equations(instance)
    columns = x_monomials(p.K, dx)
    multipliers = x_monomials(p.K, dx - 1)
    lower = x_monomials(len(plucker_vars(p.n, p.r)), dc - 1)
    rows = len(equations) * len(multipliers) * len(lower)
    width = len(columns) * module_rank(p.n, p.r, dc)

    cap = get_hilbert_settings().max_matrix_entries
    if rows * width > cap:
        raise CapExceededError(f"Macaulay matrix (dx={dx}, dc={dc})", rows * width, cap)

    basis = plucker_basis(p.n, p.r, dc, q)
    column_of = {mono: i for i, mono in enumerate(columns)}
    blocks = np.zeros((rows, len(columns), len(basis.c_monomials)), dtype=np.int64)
    index = 0
    for equation in equations:
        for mu in multipliers:
            positions = np.array(
                [column_of[tuple(sorted((*mu, k)))] for k in range(p.K)], dtype=np.intp
            )
            for u in lower:
                block = blocks[index]
                for term in equation.terms:
                    image = basis.image((*u, term.plucker))
                    linear = instance.coeffs[equation.row, term.column]
                    product = term.sign * np.outer(linear, image)
                    block[positions] = (block[positions] + product) % q
                index += 1

    matrix = PrimeFieldMatrix(blocks.reshape(rows, width), q)
    monomial_index = MonomialIndex(
        dx=dx, dc=dc, x_monomials=tuple(columns), c_monomials=basis.c_monomials
    )
    return matrix, monomial_index


def macaulay_rank(
    instance: Instance, dx: int, dc: int, q: int | None = None
) -> MacaulayRank:
    """Rank of the Macaulay matrix and the observed Hilbert function value.

    Below x-degree 1 there are no equation multiples, so the rank is 0.
    """
    p = instance.params
    if q is not None and q != instance.q:
        raise InvalidParamsError(f"Instance lives over GF({instance.q}), not GF({q})")
    if dc < 1:
        raise InvalidParamsError(f"dc must be >= 1, got {dc}")
    ambient = binom_ext(p.K + dx - 1, dx) * module_rank(p.n, p.r, dc)
    if dx < 1:
        return MacaulayRank(
            dx=dx,
            dc=dc,
            rows=0,
            cols=ambient,
            rank=0,
            ambient_dim=ambient,
            observed_hf=ambient,
        )
    matrix, index = macaulay_matrix(instance, dx, dc)
    assert index.width == ambient
    rank = matrix.rank()
    return MacaulayRank(
        dx=dx,
        dc=dc,
        rows=matrix.rows,
        cols=matrix.cols,
        rank=rank,
        ambient_dim=ambient,
        observed_hf=ambient - rank,
    )

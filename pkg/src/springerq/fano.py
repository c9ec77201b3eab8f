"""Cohomology of Fano varieties of (i-1)-planes in a smooth intersection of
two quadrics in P^(2n).

H^(2k) decomposes as a sum of local systems L_j of dimension C(2n+1, j) with
multiplicities M_i(k, j) read off Gaussian binomials; odd cohomology
vanishes.  The same numbers are the order-two decomposition multiplicities,
which gives an independent reconstruction route used for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qseries import LaurentPoly, gaussian_binomial
from .ic_engine import solve_stalk_tables
from ._util import binom

__all__ = [
    "FanoRow",
    "FanoCohomology",
    "fano_multiplicities",
    "fano_betti_poly",
    "fano_betti_poly_from_multiplicities",
    "fano_lines_table",
]


@dataclass(frozen=True)
class FanoRow:
    """Multiplicities in H^(2k): the (j, M_i(k,j)) with M > 0, plus the Betti number."""

    k: int
    terms: tuple[tuple[int, int], ...]
    betti: int


@dataclass(frozen=True)
class FanoCohomology:
    """Full even-cohomology table of the variety of (i-1)-planes, complex
    dimension 2i(n-i); l_dims[j] = dim L_j = C(2n+1, j)."""

    rank: int
    planes_index: int
    complex_dim: int
    rows: tuple[FanoRow, ...]
    l_dims: tuple[int, ...]


def _multiplicity(n: int, i: int, k: int, j: int) -> int:
    """M_i(k, j): coefficient of q^(k - j(n-i)) in g_{i-j, 2n-i-j}(q); 0 out of range."""
    return gaussian_binomial(i - j, 2 * n - i - j)[k - j * (n - i)]


def fano_multiplicities(n: int, i: int) -> FanoCohomology:
    """The table of M_i(k, j) for k in [0, 2i(n-i)], j in [0, i]."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    dim = 2 * i * (n - i)
    l_dims = tuple(binom(2 * n + 1, j) for j in range(i + 1))
    rows = []
    for k in range(dim + 1):
        terms = tuple(
            (j, m) for j in range(i + 1) if (m := _multiplicity(n, i, k, j)) > 0
        )
        betti = sum(l_dims[j] * m for j, m in terms)
        rows.append(FanoRow(k, terms, betti))
    return FanoCohomology(n, i, dim, tuple(rows), l_dims)


def fano_betti_poly(n: int, i: int) -> LaurentPoly:
    """sum_k b_{2k} q^k with b_{2k} = sum_j C(2n+1, j) M_i(k, j)."""
    table = fano_multiplicities(n, i)
    return LaurentPoly({row.k: row.betti for row in table.rows if row.betti})


def fano_betti_poly_from_multiplicities(n: int, i: int) -> LaurentPoly:
    """Reconstruction through the solver: H^k picks up L_j with multiplicity
    t^i_{j, |2i(n-i) - k|}.  Must agree with fano_betti_poly coefficientwise."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    mult = solve_stalk_tables(n)[1]
    dim = 2 * i * (n - i)
    out: dict[int, int] = {}
    for k in range(dim + 1):
        b = sum(
            binom(2 * n + 1, j) * mult.t_coeff(i, j, abs(dim - 2 * k))
            for j in range(i + 1)
        )
        if b:
            out[k] = b
    return LaurentPoly(out)


def fano_lines_table(n: int) -> list[tuple[int, int, bool, bool]]:
    """Lower half of the cohomology of the variety of lines (i = 2), as
    (k, trivial multiplicity, includes L_1, includes L_2) for k <= 2n-4.

    The trivial multiplicity is [(k+2)/2], L_1 enters for n-2 <= k and L_2
    exactly at the middle k = 2n-4; the upper half is Poincare dual.  Raises
    for n < 3, where the three ranges degenerate, and RuntimeError if the
    table ever disagreed with fano_multiplicities(n, 2).
    """
    if n < 3:
        raise ValueError("example ranges degenerate")
    table = fano_multiplicities(n, 2)
    rows = []
    for k in range(2 * n - 4 + 1):
        trivial = (k + 2) // 2
        with_l1 = k >= n - 2
        with_l2 = k == 2 * n - 4
        expected = dict(table.rows[k].terms)
        stated = {0: trivial}
        if with_l1:
            stated[1] = 1
        if with_l2:
            stated[2] = 1
        if stated != expected:
            raise RuntimeError(
                f"fano lines table mismatch at n={n}, k={k}: {stated} != {expected}"
            )
        rows.append((k, trivial, with_l1, with_l2))
    return rows

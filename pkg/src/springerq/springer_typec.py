"""Type-C Springer data for the order-two family: Kostka numbers, bipartition
labels and dimensions, and the Euler-characteristic identities they satisfy.

Irreducible representations of the type-C Weyl group (hyperoctahedral group)
are labelled by ordered pairs of partitions with |alpha| + |beta| = n.  The
local Euler characteristics of the order-two IC sheaves on sp(2n) are plain
binomial expressions; this module provides them together with the brute-force
Kostka oracle that anchors the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition
from .qseries import eval_at_one, og_poincare
from ._util import binom

__all__ = [
    "Bipartition",
    "kostka",
    "kostka_order_two_closed_form",
    "standard_tableaux_count",
    "springer_label",
    "bipartition_dim",
    "euler_chi_trivial",
    "euler_chi_nontrivial",
    "verify_cc_identity",
    "verify_two_power_sum",
]


@dataclass(frozen=True)
class Bipartition:
    """An ordered pair of partitions; labels a type-C Weyl group irreducible."""

    alpha: Partition
    beta: Partition

    @property
    def n(self) -> int:
        return self.alpha.weight + self.beta.weight


def kostka(shape: Partition, weight: Partition) -> int:
    """Number of semistandard tableaux of the given shape and content.

    Exhaustive depth-first enumeration: rows weakly increase, columns
    strictly increase, and entry v is used weight_v times.  Content is
    restricted to partitions, which covers every use in this package.
    """
    if shape.weight != weight.weight:
        raise ValueError("shape and content must have equal weights")
    if not shape.parts:
        return 1
    rows = shape.parts
    remaining = list(weight.parts)
    nvals = len(remaining)
    # previous row's entries, for column-strictness of the row being filled
    above: list[int] = []

    def fill_row(r: int, col: int, row_vals: list[int], count: int) -> int:
        nonlocal above
        if col == rows[r]:
            if r + 1 == len(rows):
                return count + 1
            saved = above
            above = row_vals
            count = fill_row(r + 1, 0, [], count)
            above = saved
            return count
        lo = row_vals[-1] if col else 1
        if r and col < len(above):
            lo = max(lo, above[col] + 1)
        for v in range(lo, nvals + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                row_vals.append(v)
                count = fill_row(r, col + 1, row_vals, count)
                row_vals.pop()
                remaining[v - 1] += 1
        return count

    return fill_row(0, 0, [], 0)


def kostka_order_two_closed_form(n: int, i: int, j0: int) -> int:
    """K_{2^(i-j0) 1^(n-2i), 1^(n-2j0)} = C(n-2j0, i-j0) - C(n-2j0, i-j0-1)."""
    if not (0 <= j0 <= i and 2 * i <= n):
        raise ValueError(f"need 0 <= j0 <= i and 2i <= n, got n={n}, i={i}, j0={j0}")
    return binom(n - 2 * j0, i - j0) - binom(n - 2 * j0, i - j0 - 1)


def standard_tableaux_count(shape: Partition) -> int:
    """Number of standard Young tableaux, by brute force over content 1^n."""
    return kostka(shape, Partition((1,) * shape.weight))


def springer_label(n: int, i: int, local_system: str = "trivial") -> Bipartition:
    """Bipartition attached to the symplectic orbit 2^i 1^(2n-2i).

    Trivial system: ((1^m), (1^(n-m))) for i = 2m and ((1^(n-m+1)), (1^(m-1)))
    for i = 2m-1.  Nontrivial system (i = 2m even, m >= 1): ((), (2^m 1^(n-2m))).
    The nontrivial system on an odd orbit is not in the Springer image.
    """
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
    if local_system == "trivial":
        if i % 2 == 0:
            m = i // 2
            return Bipartition(Partition((1,) * m), Partition((1,) * (n - m)))
        m = (i + 1) // 2
        return Bipartition(Partition((1,) * (n - m + 1)), Partition((1,) * (m - 1)))
    if local_system == "nontrivial":
        if i % 2 or i < 2:
            raise ValueError("not in Springer image")
        m = i // 2
        return Bipartition(Partition(), Partition((2,) * m + (1,) * (n - 2 * m)))
    raise ValueError(f"unknown local system {local_system!r}")


def bipartition_dim(b: Bipartition) -> int:
    """dim of the type-C irreducible: C(n, |alpha|) * f^alpha * f^beta."""
    return (
        binom(b.n, b.alpha.weight)
        * standard_tableaux_count(b.alpha)
        * standard_tableaux_count(b.beta)
    )


def euler_chi_trivial(n: int, i: int, j: int) -> int:
    """Local Euler characteristic of the trivial-system IC of 2^i 1^(2n-2i)
    at a point of 2^j 1^(2n-2j): C(n-j, [(i-j)/2])."""
    if not 0 <= j <= i <= n:
        raise ValueError(f"need 0 <= j <= i <= n, got n={n}, i={i}, j={j}")
    return binom(n - j, (i - j) // 2)


def euler_chi_nontrivial(n: int, i2: int, j: int) -> int:
    """Local Euler characteristic for the nontrivial system on 2^i2 1^(2n-2*i2).

    Zero for odd j; for even j it is C(n-j, i2/2-j/2) - C(n-j, i2/2-j/2-1).
    """
    if i2 % 2:
        raise ValueError("the nontrivial-system orbit index must be even")
    if not 0 <= j <= i2 <= n:
        raise ValueError(f"need 0 <= j <= i2 <= n, got n={n}, i2={i2}, j={j}")
    if j % 2:
        return 0
    t = i2 // 2 - j // 2
    return binom(n - j, t) - binom(n - j, t - 1)


def verify_cc_identity(n: int, i: int) -> bool:
    """Check chi_triv(i) = chi_nontriv(i) + chi_triv(i-1) at every base orbit j <= i.

    The i-1 term is zero at j = i, where the base point leaves that orbit's
    closure; on-orbit values of rank-one systems are 1.
    """
    if i % 2 or not 2 <= i <= n:
        raise ValueError(f"need even i with 2 <= i <= n, got n={n}, i={i}")
    for j in range(i + 1):
        lhs = euler_chi_trivial(n, i, j)
        rhs = euler_chi_nontrivial(n, i, j)
        if j <= i - 1:
            rhs += euler_chi_trivial(n, i - 1, j)
        if lhs != rhs:
            return False
    return True


def verify_two_power_sum(n: int, j: int) -> bool:
    """Check sum_{i=j}^{n} C(n-j, [(i-j)/2]) = 2^(n-j).

    Cross-checked against the Euler characteristic of OGr(n-j, 2(n-j)+1),
    which is the same power of two (the fiber of the top resolution has Euler
    characteristic (n-1) * 2^(n-j)).
    """
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got n={n}, j={j}")
    total = sum(euler_chi_trivial(n, i, j) for i in range(j, n + 1))
    if total != 2 ** (n - j):
        return False
    return eval_at_one(og_poincare(n - j, n - j)) == 2 ** (n - j)

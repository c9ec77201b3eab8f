"""Exact integer Laurent-polynomial arithmetic in one variable q.

Coefficients are Python integers, so every operation is exact; there is no
floating point anywhere in this module.  On top of the core arithmetic we
provide the closed-form Poincare polynomials that the rest of the package
consumes: Gaussian binomials g_{k,m}(q) (Poincare polynomial of the
Grassmannian Gr(k, m)), orthogonal Grassmannians OGr(i, 2n+1), and quadrics
of arbitrary rank, together with the q-identity relating them.

Throughout the package the exponent a of q records the dimension of a
cohomology group in (topological) degree 2a; odd-degree cohomology vanishes
for every space we touch, so nothing is lost.
"""

from __future__ import annotations

import functools
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "Q",
    "one_minus_q",
    "gaussian_binomial",
    "og_poincare",
    "quadric_betti",
    "verify_sum_identity",
    "eval_at_one",
]

PairsOrMap = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class LaurentPoly:
    """A finitely supported integer Laurent polynomial in q.

    Instances are immutable and hashable.  No zero coefficients are stored;
    two polynomials compare equal iff they have identical support and
    coefficients.  Arithmetic (+, -, *, **) is exact; division is available
    only through :meth:`exact_div`, which insists on a zero remainder.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: PairsOrMap = ()):
        data: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be ints")
            c = data.get(e, 0) + c
            if c:
                data[e] = c
            else:
                data.pop(e, None)
        object.__setattr__(self, "_coeffs", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        """Smallest exponent with nonzero coefficient (zero polynomial is an error)."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no support")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no support")
        return max(self._coeffs)

    def __getitem__(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def support(self) -> list[int]:
        return sorted(self._coeffs)

    def to_pairs(self) -> list[tuple[int, int]]:
        """Sorted (exponent, coefficient) pairs; the canonical serialization order."""
        return sorted(self._coeffs.items())

    def json_pairs(self) -> list[list]:
        """JSON form: [exponent, coefficient-as-decimal-string] pairs sorted by exponent."""
        return [[e, str(c)] for e, c in self.to_pairs()]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data = dict(self._coeffs)
        for e, c in other._coeffs.items():
            c = data.get(e, 0) + c
            if c:
                data[e] = c
            else:
                data.pop(e, None)
        return _raw(data)

    def __neg__(self) -> "LaurentPoly":
        return _raw({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return _raw({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                c = data.get(e, 0) + c1 * c2
                if c:
                    data[e] = c
                else:
                    data.pop(e, None)
        return _raw(data)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ArithmeticError unless the remainder is zero."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return ZERO
        a_min = self.min_exp
        b_min = other.min_exp
        r = [self[e] for e in range(a_min, self.max_exp + 1)]
        b = [other[e] for e in range(b_min, other.max_exp + 1)]
        db = len(b) - 1
        lead = b[-1]
        quot: dict[int, int] = {}
        while len(r) - 1 >= db:
            top = r[-1]
            if top == 0:
                r.pop()
                continue
            if top % lead:
                raise ArithmeticError("inexact polynomial division")
            c = top // lead
            shift = len(r) - 1 - db
            quot[shift] = c
            for k in range(db + 1):
                r[shift + k] -= c * b[k]
            r.pop()
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return _raw({e + a_min - b_min: c for e, c in quot.items() if c})

    # -- structural helpers --------------------------------------------------

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return _raw({e + k: c for e, c in self._coeffs.items()})

    def subs_power(self, r: int) -> "LaurentPoly":
        """Substitute q -> q^r (r a positive integer)."""
        if r < 1:
            raise ValueError("substitution power must be positive")
        return _raw({e * r: c for e, c in self._coeffs.items()})

    def reciprocal(self) -> "LaurentPoly":
        """Substitute q -> q^(-1)."""
        return _raw({-e: c for e, c in self._coeffs.items()})

    def is_symmetric(self) -> bool:
        """True iff invariant under q -> q^(-1)."""
        return all(self._coeffs.get(-e) == c for e, c in self._coeffs.items())

    def nonneg_coeffs(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def eval_at_one(self) -> int:
        return sum(self._coeffs.values())

    # -- comparisons, display ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(tuple(sorted(self._coeffs.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_pairs()!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for e, c in self.to_pairs():
            if e == 0:
                body = str(abs(c))
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if abs(c) == 1 else f"{abs(c)}*{qpart}"
            terms.append((c < 0, body))
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out


def _raw(data: dict[int, int]) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    object.__setattr__(p, "_coeffs", data)
    object.__setattr__(p, "_hash", None)
    return p


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


def one_minus_q(l: int) -> LaurentPoly:
    """The factor 1 - q^l."""
    return LaurentPoly({0: 1, l: -1})


@functools.lru_cache(maxsize=None)
def gaussian_binomial(k: int, m: int) -> LaurentPoly:
    """Gaussian binomial g_{k,m}(q), the Poincare polynomial of Gr(k, m).

    Computed as prod_{l=m-k+1}^{m} (1-q^l) / prod_{l=1}^{k} (1-q^l) by exact
    long division.  The result has nonnegative coefficients, degree k(m-k)
    and palindromic coefficient sequence.
    """
    if k < 0 or m < 0 or k > m:
        raise ValueError(f"gaussian binomial needs 0 <= k <= m, got k={k}, m={m}")
    out = ONE
    for l in range(m - k + 1, m + 1):
        out = out * one_minus_q(l)
    for l in range(1, k + 1):
        out = out.exact_div(one_minus_q(l))
    return out


@functools.lru_cache(maxsize=None)
def og_poincare(i: int, n: int) -> LaurentPoly:
    """Poincare polynomial of the orthogonal Grassmannian OGr(i, 2n+1).

    og_{i,2n+1}(q) = prod_{l=n-i+1}^{n} (1-q^{2l}) / prod_{l=1}^{i} (1-q^l),
    of degree i(4n-3i+1)/2.
    """
    if i < 0 or n < 0 or i > n:
        raise ValueError(f"og_poincare needs 0 <= i <= n, got i={i}, n={n}")
    out = ONE
    for l in range(n - i + 1, n + 1):
        out = out * one_minus_q(2 * l)
    for l in range(1, i + 1):
        out = out.exact_div(one_minus_q(l))
    return out


def quadric_betti(rank: int, ambient: int) -> LaurentPoly:
    """Even Betti numbers of the quadric sum_{s<=rank} b_s^2 = 0 in P^(ambient-1).

    The quadric is the join of a smooth quadric of dimension rank-2 with the
    linear subspace P^(ambient-rank-1) cut out by the quadric's coordinates,
    which gives

        betti(P^(ambient-rank-1)) + q^(ambient-rank) * betti(smooth quadric).

    Rank 0 returns the ambient projective space, rank 1 the reduced double
    hyperplane.  Odd cohomology vanishes, so the exponent-a coefficient is
    dim H^{2a}.
    """
    if not 0 <= rank <= ambient:
        raise ValueError(f"quadric rank must lie in [0, {ambient}], got {rank}")
    out = {a: 1 for a in range(ambient - rank)}
    d = rank - 2  # dimension of the smooth quadric in P^(rank-1)
    if d >= 0:
        for a in range(d + 1):
            out[ambient - rank + a] = out.get(ambient - rank + a, 0) + 1
        if d % 2 == 0:
            out[ambient - rank + d // 2] += 1
    return LaurentPoly(out)


def verify_sum_identity(n: int, i: int) -> bool:
    """Check og_{i,2n+1}(q) = sum_j q^((i-j)(i-j+1)/2) g_{[j/2],n}(q^2) g_{i-j,2n-i-j}(q).

    Exact comparison of both sides as Laurent polynomials.
    """
    if n < 1 or i < 0 or i > n:
        raise ValueError(f"verify_sum_identity needs 0 <= i <= n, n >= 1, got n={n}, i={i}")
    lhs = og_poincare(i, n)
    rhs = ZERO
    for j in range(i + 1):
        term = gaussian_binomial(j // 2, n).subs_power(2)
        term = term * gaussian_binomial(i - j, 2 * n - i - j)
        rhs = rhs + term.shift((i - j) * (i - j + 1) // 2)
    return lhs == rhs


def eval_at_one(p: LaurentPoly) -> int:
    """Sum of coefficients, i.e. the Euler characteristic attached to p."""
    return p.eval_at_one()

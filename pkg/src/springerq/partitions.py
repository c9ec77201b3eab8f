"""Partition arithmetic and nilpotent-orbit combinatorics.

For the split symmetric pair (SL(N), SO(N)) with N = 2n+1 odd, the orbits of
K = SO(N) on the odd nilpotent cone are labelled by partitions of N (Jordan
types).  This module implements the orbit-level combinatorics: dimensions and
the closure (dominance) order, the gap criterion for induced orbits,
Richardson and relevance templates, the one-step branching of resolution
fibers, and the recursive fiber-dimension bound they produce.

A partition of odd weight 2n+1 always has an odd number of odd parts; the
template predicates below exploit this.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "OrbitLabel",
    "BranchMove",
    "ROW_REMOVAL",
    "ROW_SPLIT",
    "partitions_of",
    "conjugate",
    "dominance_leq",
    "closure_contains",
    "dim_centralizer",
    "orbit_codim",
    "orbit_dim",
    "has_gaps",
    "induced_orbit",
    "is_relevant_full",
    "is_relevant_parabolic",
    "is_richardson",
    "richardson_label",
    "branch_moves",
    "resolution_fiber_dim",
]

ROW_REMOVAL = "row-removal"
ROW_SPLIT = "row-split"


class Partition:
    """A weakly decreasing tuple of positive integers; () is the partition of 0."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for k, p in enumerate(parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
            if k and parts[k - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
        object.__setattr__(self, "_parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        return sum(self._parts)

    def part(self, k: int) -> int:
        """The k-th part, 1-based, zero beyond the last row."""
        return self._parts[k - 1] if 1 <= k <= len(self._parts) else 0

    def multiplicities(self) -> list[tuple[int, int]]:
        """Distinct part values with multiplicities, largest value first."""
        out: list[tuple[int, int]] = []
        for p in self._parts:
            if out and out[-1][0] == p:
                out[-1] = (p, out[-1][1] + 1)
            else:
                out.append((p, 1))
        return out

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)!r})"

    def __str__(self) -> str:
        return self.serialize()

    def serialize(self) -> str:
        """Comma-separated descending parts; the empty partition is ''."""
        return ",".join(str(p) for p in self._parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of serialize; non-descending input is rejected, not sorted."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"malformed partition {text!r}") from None
        return cls(parts)


@dataclass(frozen=True)
class OrbitLabel:
    """A nilpotent orbit for rank n: a partition of N = 2n+1."""

    rank: int
    partition: Partition

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if self.partition.weight != 2 * self.rank + 1:
            raise ValueError(
                f"partition of weight {self.partition.weight} does not label an orbit "
                f"for rank {self.rank} (need weight {2 * self.rank + 1})"
            )


@dataclass(frozen=True)
class BranchMove:
    """One step of the fiber branching: the orbit of x on V_1^perp / V_1.

    codim_delta is the exact drop in orbit codimension, so
    orbit_codim(source) = orbit_codim(target) + codim_delta.
    """

    target: Partition
    case_tag: str
    codim_delta: int


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest-first lexicographic order."""
    if n < 0:
        raise ValueError("weight must be nonnegative")

    def gen(rest: int, cap: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield Partition(prefix)
            return
        for p in range(min(cap, rest), 0, -1):
            yield from gen(rest - p, p, prefix + (p,))

    yield from gen(n, max_part if max_part is not None else n, ())


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram; an involution."""
    parts = p.parts
    if not parts:
        return Partition()
    return Partition(tuple(sum(1 for q in parts if q > i) for i in range(parts[0])))


def dominance_leq(a: Partition, b: Partition) -> bool:
    """True iff every partial sum of a is <= the matching partial sum of b."""
    if a.weight != b.weight:
        raise ValueError("incomparable weights")
    sa = sb = 0
    for k in range(1, max(len(a), len(b)) + 1):
        sa += a.part(k)
        sb += b.part(k)
        if sa > sb:
            return False
    return True


def closure_contains(outer: OrbitLabel, inner: OrbitLabel) -> bool:
    """True iff the inner orbit lies in the closure of the outer one."""
    if outer.rank != inner.rank:
        raise ValueError("rank mismatch")
    return dominance_leq(inner.partition, outer.partition)


def dim_centralizer(p: Partition) -> int:
    """dim Z_K(x) = sum_i (i-1) * p_i for x of Jordan type p."""
    return sum(i * part for i, part in enumerate(p.parts))


def orbit_codim(p: Partition) -> int:
    """Codimension of the orbit in the nilpotent cone; equals dim_centralizer."""
    return dim_centralizer(p)


def orbit_dim(o: OrbitLabel) -> int:
    """n(2n+1) - dim_centralizer; for 2^i 1^(2n+1-2i) this is i(2n+1-i)."""
    n = o.rank
    return n * (2 * n + 1) - dim_centralizer(o.partition)


def has_gaps(p: Partition) -> bool:
    """Some consecutive difference (the last part counts against 0) is >= 2.

    By the induction criterion this holds iff the orbit is induced from a
    proper theta-stable Levi.
    """
    parts = p.parts
    return any(parts[k] - (parts[k + 1] if k + 1 < len(parts) else 0) >= 2
               for k in range(len(parts)))


def induced_orbit(levi_parts: Sequence[Partition], core: Partition) -> Partition:
    """Induced orbit label: row i gets core_i + sum_j 2 * levi_parts[j]_i.

    Componentwise sums of partitions are again weakly decreasing, so the
    result needs no re-sorting.
    """
    rows = max([len(core)] + [len(q) for q in levi_parts], default=0)
    parts = []
    for k in range(1, rows + 1):
        parts.append(core.part(k) + 2 * sum(q.part(k) for q in levi_parts))
    return Partition(tuple(x for x in parts if x))


def _odd_even_blocks(p: Partition) -> tuple[list[int], list[int]]:
    odds = [x for x in p.parts if x % 2]
    evens = [x for x in p.parts if x % 2 == 0]
    return odds, evens


def _block_mu(p: Partition) -> list[int] | None:
    """Witness sequence mu for the odd-block-first templates, or None.

    Odd parts (descending) contribute (part-1)/2, even parts (descending)
    contribute part/2; the template matches iff the combined sequence is
    weakly decreasing, i.e. iff every odd part exceeds every even part.
    """
    odds, evens = _odd_even_blocks(p)
    mu = [(x - 1) // 2 for x in odds] + [x // 2 for x in evens]
    if odds and evens and (odds[-1] - 1) // 2 < evens[0] // 2:
        return None
    return mu


def is_relevant_full(p: Partition) -> bool:
    """Template (2p_1+1, 2p_2, ..., 2p_s): exactly one odd part, and it is largest."""
    if p.weight % 2 == 0:
        raise ValueError("relevance is defined for odd weight only")
    odds, _ = _odd_even_blocks(p)
    return len(odds) == 1 and _block_mu(p) is not None


def is_relevant_parabolic(p: Partition, i: int) -> bool:
    """Template with exactly 2n-2i+1 leading odd parts and mu weakly decreasing.

    The parts sum forces sum(mu) = i automatically once the odd-part count
    matches, so only the count and the block ordering are tested.
    """
    if p.weight % 2 == 0:
        raise ValueError("relevance is defined for odd weight only")
    n = (p.weight - 1) // 2
    if not 1 <= i <= n - 1:
        raise ValueError(f"parabolic index must lie in [1, {n - 1}], got {i}")
    odds, _ = _odd_even_blocks(p)
    return len(odds) == 2 * n - 2 * i + 1 and _block_mu(p) is not None


def is_richardson(p: Partition) -> bool:
    """Template (2mu_1+1, ..., 2mu_l+1, 2mu_{l+1}, ..., 2mu_s), mu weakly decreasing."""
    if p.weight % 2 == 0:
        raise ValueError("Richardson test is defined for odd weight only")
    return _block_mu(p) is not None


def richardson_label(p: Partition) -> Partition:
    """Conjugate of the witness sequence mu; the local-system label of the transform."""
    mu = _block_mu(p)
    if p.weight % 2 == 0 or mu is None:
        raise ValueError(f"{p.serialize() or '()'} is not a Richardson label")
    return conjugate(Partition(tuple(x for x in mu if x)))


def branch_moves(p: Partition) -> list[BranchMove]:
    """All one-step degenerations of the orbit on V_1^perp / V_1, weight N -> N-2.

    For each distinct part value mu_i (multiplicity m_i, cumulative count
    M_i = m_1 + ... + m_i):

    * row-removal (mu_i >= 2): one row loses two boxes; codim_delta is
      2(M_i - 1) when the next part is <= mu_i - 2, and 2(M_i - 1) + m_{i+1}
      when it equals mu_i - 1;
    * row-split (m_i >= 2): two rows of length mu_i become two of length
      mu_i - 1; codim_delta = 2(M_i - 1) - 1.  For mu_i = 1 both new rows
      are empty, i.e. two 1-rows disappear.

    Zero parts are dropped and the target re-sorted.
    """
    if p.weight < 3:
        raise ValueError("branching needs weight >= 3")
    mults = p.multiplicities()
    moves: list[BranchMove] = []
    cum = 0
    for idx, (value, m) in enumerate(mults):
        cum += m
        nxt_value, nxt_m = mults[idx + 1] if idx + 1 < len(mults) else (0, 0)
        if value >= 2:
            target = _resorted(p.parts, remove=(value,), add=(value - 2,))
            if nxt_value <= value - 2:
                delta = 2 * (cum - 1)
            else:  # nxt_value == value - 1
                delta = 2 * (cum - 1) + nxt_m
            moves.append(BranchMove(target, ROW_REMOVAL, delta))
        if m >= 2:
            target = _resorted(p.parts, remove=(value, value), add=(value - 1, value - 1))
            moves.append(BranchMove(target, ROW_SPLIT, 2 * (cum - 1) - 1))
    return moves


def _resorted(parts: tuple[int, ...], remove: tuple[int, ...], add: tuple[int, ...]) -> Partition:
    pool = list(parts)
    for x in remove:
        pool.remove(x)
    pool.extend(x for x in add if x > 0)
    pool.sort(reverse=True)
    return Partition(tuple(pool))


def resolution_fiber_dim(p: Partition) -> int:
    """Top dimension of the nilpotent-cone resolution fiber over the orbit.

    Recursively: the line V_1 ranges over a locus of dimension M_i - 1
    (removal case) or M_i - 2 (split case) and the rest of the flag is a
    fiber for the branched orbit, so

        D(p) = max over moves of (locus dim + D(target)),    D((1)) = 0.

    Semismallness says 2 D(p) <= orbit_codim(p) with equality exactly on the
    fully relevant templates.
    """
    return _fiber_dim(p.parts)


@functools.lru_cache(maxsize=None)
def _fiber_dim(parts: tuple[int, ...]) -> int:
    if sum(parts) <= 1:
        return 0
    p = Partition(parts)
    best = 0
    cum = 0
    for value, m in p.multiplicities():
        cum += m
        if value >= 2:
            target = _resorted(parts, remove=(value,), add=(value - 2,))
            best = max(best, cum - 1 + _fiber_dim(target.parts))
        if m >= 2:
            target = _resorted(parts, remove=(value, value), add=(value - 1, value - 1))
            best = max(best, cum - 2 + _fiber_dim(target.parts))
    return best

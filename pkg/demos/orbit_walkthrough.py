"""A walk through the orbit combinatorics at small rank.

Orbits of SO(2n+1) on the odd nilpotent cone are labelled by partitions of
2n+1.  This script prints the full orbit table for n = 1, 2, 3 and then digs
into the pieces: closure order, the gap criterion, Richardson and relevance
templates, and the branching recursion behind the semismallness bound.

Run:  python3 demos/orbit_walkthrough.py
"""

from springerq import (
    OrbitLabel,
    Partition,
    branch_moves,
    dominance_leq,
    ft_support_info,
    has_gaps,
    induced_orbit,
    is_relevant_full,
    is_richardson,
    orbit_codim,
    orbit_dim,
    partitions_of,
    resolution_fiber_dim,
    richardson_label,
)

for n in (1, 2, 3):
    print(f"== rank n = {n}  (partitions of {2 * n + 1})")
    for p in partitions_of(2 * n + 1):
        orbit = OrbitLabel(n, p)
        tags = []
        if has_gaps(p):
            tags.append("gapped")
        if is_richardson(p):
            tags.append(f"richardson->{richardson_label(p).serialize() or '()'}")
        if is_relevant_full(p):
            tags.append("relevant")
        info = ft_support_info(orbit)
        print(f"  {p.serialize():<14} dim {orbit_dim(orbit):>2}  "
              f"FT support {info.flag:<7} {' '.join(tags)}")
    print()

print("Closure order is dominance: (3,2,2) covers (2,2,2,1)?",
      dominance_leq(Partition((2, 2, 2, 1)), Partition((3, 2, 2))))

print("\nGapped labels are exactly the induced ones; for example")
lam = induced_orbit([Partition((1, 1))], Partition((1, 1, 1)))
print("  inducing (1,1) from the GL(2) factor over the core (1,1,1) gives",
      lam.serialize(), "| has_gaps:", has_gaps(lam))

print("\nBranching the resolution fiber one row at a time from (3,2,2):")
for move in branch_moves(Partition((3, 2, 2))):
    print(f"  {move.case_tag:<12} -> {move.target.serialize():<8} codim drop {move.codim_delta}")

print("\nThe recursion bounds the fiber dimension; equality with half the")
print("codimension picks out the relevant orbits:")
for p in partitions_of(7):
    d = resolution_fiber_dim(p)
    c = orbit_codim(p)
    marker = "  <- relevant" if 2 * d == c else ""
    print(f"  {p.serialize():<14} 2*fiber_dim = {2 * d:>2}  codim = {c:>2}{marker}")

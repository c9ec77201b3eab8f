"""Betti numbers of Fano varieties of planes in intersections of two quadrics.

For a smooth intersection X of two quadrics in P^(2n), the variety of
(i-1)-planes on X has cohomology built from local systems L_j of dimension
C(2n+1, j), with multiplicities read off Gaussian binomials.  Two classical
sanity checks fall out: the 16 lines on a quartic del Pezzo surface, and the
middle Betti number 2n+2 of X itself.

Run:  python3 demos/fano_cohomology_walkthrough.py
"""

from springerq import (
    eval_at_one,
    fano_betti_poly,
    fano_lines_table,
    fano_multiplicities,
)

print("the 16 lines on the intersection of two quadrics in P^4:")
table = fano_multiplicities(2, 2)
print("  H^0 multiplicities:", dict(table.rows[0].terms),
      "with dim L =", table.l_dims, "=> b_0 =", table.rows[0].betti)

print("\nthe intersection itself (i = 1) at small n: Betti polynomials")
for n in range(2, 7):
    poly = fano_betti_poly(n, 1)
    print(f"  n = {n}:  {poly}   middle Betti {poly[n - 1]} = 2n+2")

print("\nthe variety of lines (i = 2) at n = 4, lower half of the table:")
for k, trivial, with_l1, with_l2 in fano_lines_table(4):
    pieces = [f"C^{trivial}"]
    if with_l1:
        pieces.append("L_1")
    if with_l2:
        pieces.append("L_2")
    print(f"  H^{2 * k:>2} = " + " + ".join(pieces))
print("(the upper half is Poincare dual)")

print("\nfull tables and Euler characteristics for n = 3:")
for i in range(1, 4):
    poly = fano_betti_poly(3, i)
    print(f"  i = {i}: complex dim {2 * i * (3 - i)}, betti {poly}, chi = {eval_at_one(poly)}")

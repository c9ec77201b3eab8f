"""The inductive stalk solver, step by step.

The resolution of the closure of the order-two orbit 2^i 1^(2n+1-2i) has
fiber OGr(i, 2n+1) over the origin, and its pushforward decomposes into
shifted IC sheaves of the smaller order-two orbits.  Matching Poincare
polynomials of both sides gives one equation per i:

    og_{i,2n+1}(q) q^(-i(2n-i+1)/2)  =  sum_{j=0}^{i} f_j(q) T^i_j(q)

where f_j is the origin stalk polynomial (negative exponents only) and T^i_j
is a symmetric multiplicity polynomial.  Because T^i_j for j >= 1 is known
from smaller ranks, each equation splits uniquely into its symmetric part
(T^i_0) and its negative part (f_i).

Run:  python3 demos/stalk_tables_walkthrough.py
"""

from springerq import (
    LaurentPoly,
    closed_form_f,
    closed_form_t,
    fake_degree_poly,
    ic_stalk_poly,
    og_poincare,
    solve_stalk_tables,
)

n = 3
stalks, mult = solve_stalk_tables(n)

print(f"rank n = {n}: origin stalk polynomials")
for i in range(n + 1):
    print(f"  f_{i} = {stalks.f[i]}   (closed form {closed_form_f(n, i)})")

print("\nmultiplicity polynomials T^i_j")
for i in range(1, n + 1):
    for j in range(i + 1):
        print(f"  T^{i}_{j} = {mult.t(i, j)}")

print("\nreassembling the i = 2 equation:")
lhs = og_poincare(2, n).shift(-2 * (2 * n - 2 + 1) // 2)
rhs = sum((stalks.f[j] * mult.t(2, j) for j in range(3)), start=LaurentPoly())
print("  og_{2,7}(q) q^-5 =", lhs)
print("  sum f_j T^2_j   =", rhs)

print("\nT^i_j reduces across ranks: T^3_1 at rank 3 equals T^2_0 at rank 2:")
print("  ", mult.t(3, 1), "==", solve_stalk_tables(2)[1].t(2, 0))

print("\nclosed form cross-check for one entry:", closed_form_t(3, 3, 1))

print("\nstalks away from the origin: restricting the i = 2 sheaf (rank 3)")
for j in range(3):
    print(f"  at a point of the j = {j} orbit: {ic_stalk_poly(n, 2, j)}")
print("(exponent a records dim H^{2a}; the on-orbit value sits at -(dim orbit)/2)")

print("\nfake degrees are the same data shifted by n^2:")
for i in range(n + 1):
    print(f"  P_{i}(q) = {fake_degree_poly(n, i)}")

"""Warmup: field arithmetic and subspace bookkeeping.

Walks through the two layers everything else sits on: exact arithmetic in
GF(q) through lookup tables, and subspaces of V(n, q) identified by their
reduced-row-echelon bases.
"""
from vspart import (
    all_subspaces,
    gaussian_binomial,
    intersect,
    make_field,
    num_points,
    span,
    subspace_sum,
)

# GF(9) = GF(3)[x] / (x^2 + 1); element codes are base-3 digit strings
F9 = make_field(9)
print(f"field {F9} with modulus {F9.modulus}")
print(f"3 * 3 = {F9.mul(3, 3)}  (x * x = -1 = 2)")
assert F9.mul(3, 3) == 2
for a in F9.nonzero():
    assert F9.mul(a, F9.inv(a)) == 1
print(f"all {F9.q - 1} nonzero elements invert cleanly")

# subspaces are canonical: any generating set of the same space gives the
# same basis rows
F3 = make_field(3)
U = span([(1, 2, 0, 1), (0, 1, 1, 1)], 4, F3)
W = span([(1, 0, 1, 2), (0, 2, 2, 2)], 4, F3)
print(f"U basis {U.basis}")
print(f"W basis {W.basis}")
assert U == W

# the subspace lattice: counts come from Gaussian binomials and the
# modular dimension identity ties sums to intersections
planes = list(all_subspaces(4, 2, F3))
print(f"V(4,3) has {len(planes)} planes; "
      f"binomial says {gaussian_binomial(4, 2, 3)}")
assert len(planes) == gaussian_binomial(4, 2, 3) == 130

A, B = planes[0], planes[1]
S = subspace_sum(A, B)
I = intersect(A, B)
print(f"dim(A+B) = {S.dim}, dim(A^B) = {I.dim}")
assert S.dim + I.dim == A.dim + B.dim

# a d-subspace holds exactly theta(d) points
for d in (1, 2, 3):
    U = next(iter(all_subspaces(4, d, F3)))
    pts = list(U.points())
    print(f"dim {d}: {len(pts)} points, theta = {num_points(d, 3)}")
    assert len(pts) == num_points(d, 3)

print("fields and spaces behave")

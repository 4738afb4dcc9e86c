"""Hyperplane statistics of the V(7,2) partition of type [2^5, 3^16].

This partition is the minimum for top dimension 3 and its supertail (the
five planes) has the extremal size q^t + 1 = 5.  All the incidence
machinery is on display: profiles, the histogram, the quotient c_H, the
tail loads beta_H, and the alpha histogram with its two-point support.
"""
from vspart import (
    alpha_histogram,
    all_hyperplanes,
    beta_stats,
    histogram,
    make_field,
    minimal_partition,
    num_points,
    profile,
    supertail_quotient,
    verify_moment_identities,
)

F2 = make_field(2)
P = minimal_partition(7, 3, F2)
print(f"partition: type {P.type()}, size {P.size}")

# one profile: how many members of each dimension one hyperplane contains
H = next(iter(all_hyperplanes(7, F2)))
b = profile(P, H)
print(f"one hyperplane: b_2 = {b.count(2)}, b_3 = {b.count(3)}")

# the histogram aggregates profiles over all theta(7) = 127 hyperplanes
h = histogram(P)
print("profile histogram (b_2, b_3) -> multiplicity:")
for vec, mult in h.classes:
    print(f"  {vec} -> {mult}")
assert h.total() == num_points(7, 2) == 127

# the size identity |P| = 1 + sum b_d q^d pins every profile
for vec, mult in h.classes:
    assert 21 == 1 + vec[0] * 4 + vec[1] * 8

# c_H is a nonnegative integer for every hyperplane (here 0, 1, or 2)
values = sorted({supertail_quotient(P, 3, H) for H in all_hyperplanes(7, F2)})
print(f"distinct c_H values at cut 3: {values}")
assert all(c >= 0 for c in values)

# tail loads: beta_0 = q^t = 4 and the c_0 equation has solution 2
stats = beta_stats(P, 3)
print(f"beta_0 = {stats.beta0}, minimum tail {stats.minimum_tail}, "
      f"c_0 = {stats.c0}")
assert stats.beta0 == 4
assert stats.c0 == 2

# the alpha histogram of the 16 triples is supported on exactly two
# values, delta = 0 and ell = 2, with alpha_0 = theta(3)
ctx = alpha_histogram(P, 3)
print(f"alpha histogram {ctx.alpha}")
print(f"moments: x = {ctx.x}, y = {ctx.y}, z = {ctx.z}")
assert ctx.alpha == ((0, 7), (2, 120))
assert (ctx.x, ctx.y, ctx.z) == (240, 120, 127)
r = ctx.regime
print(f"regime: k = {r.k}, r = {r.r}, ell = {r.ell}, delta = {r.delta}, "
      f"gamma = {r.gamma}")
assert ctx.count(r.delta) == num_points((r.k - 1) * 3, 2)

# the same moments from the closed forms
report = verify_moment_identities(P, 3)
for line in report.lines():
    print(line)
assert report.ok

print("hyperplane statistics check out")

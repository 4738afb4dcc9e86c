"""What a minimum-size supertail is forced to look like.

Three cuts, three shapes.  When the members below the cut are as few as
the bound allows, their union cannot be arbitrary: a wide gap forces a
cut-dimensional subspace, and the narrow-gap cases settled so far force a
spread or the two-dimension shape.  Oversized tails carry no structure at
all, which the last example shows.
"""
from vspart import (
    TailClass,
    analyze_supertail,
    beutelspacher,
    check_dimension_gap,
    check_nested_bound,
    check_supertail_bound,
    make_field,
    minimal_partition,
    refine,
    spread,
)

F2 = make_field(2)


def describe(P, cut):
    rep = analyze_supertail(P, cut, mode="explore")
    print(f"type {P.type()}, cut {cut}: tail size {rep.size} "
          f"(bound {rep.bound}), narrow {rep.narrow_gap}, "
          f"class {rep.classification.value}, union dim {rep.union_dim}")
    return rep


# spread shape: the five planes of the V(7,2) minimum partition tile a
# 4-subspace
P7 = minimal_partition(7, 3, F2)
rep = describe(P7, 3)
assert rep.classification is TailClass.SPREAD
assert rep.union_dim == 4

# two-dimension shape: [1^4, 2^1] tiles a 3-subspace as [d2^1, d1^(q^d2)]
P6 = refine(spread(6, 3, F2), 0, beutelspacher(3, 1, F2))
rep = describe(P6, 3)
assert rep.classification is TailClass.TWO_DIM
assert rep.tail_counts == (4, 1)

# wide gap: seven points below cut 3 are forced to be a 3-subspace
PW = refine(spread(6, 3, F2), 0, spread(3, 1, F2))
rep = describe(PW, 3)
assert rep.classification is TailClass.CUT_SUBSPACE

# an oversized tail ([1^8] where 7 would do) has no forced structure
PN = beutelspacher(4, 1, F2)
rep = describe(PN, 3)
assert rep.classification is TailClass.NOT_MINIMUM
assert check_supertail_bound(PN, 3).slack == 1

# consequences of minimality: the cut cannot outrun the tail dimensions
gap = check_dimension_gap(P6, 3)
print(f"dimension gap: {gap.cut} <= {gap.tail_top} + {gap.smallest_dim}")
assert gap.ok

# and one level up the sizes chain: the 4-supertail of this V(7,2)
# partition obeys both nested bounds
P = beutelspacher(7, 3, F2)
idx = next(i for i, m in enumerate(P.members) if m.dim == 3)
P = refine(P, idx, beutelspacher(3, 1, F2))
nested = check_nested_bound(P, 3)
for name, bound, ok in nested.branches:
    print(f"nested bound ({name}): {nested.nested_size} >= {bound}, {ok}")
assert nested.ok

print("supertail structure as proven")

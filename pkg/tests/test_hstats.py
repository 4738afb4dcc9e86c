"""Hyperplane incidence statistics: profiles, identities, beta and alpha."""
import pytest

from vspart.constructions import beutelspacher, minimal_partition, refine, spread
from vspart.enumeration import all_hyperplanes
from vspart.errors import (
    BadRange,
    EmptySupertail,
    HypothesisNotMet,
    NotAHyperplane,
)
from vspart.fields import make_field
from vspart.hstats import (
    alpha_histogram,
    beta_stats,
    histogram,
    incidence_sums_via_members,
    profile,
    supertail_quotient,
    tail_implication_checks,
    verify_heden_lehmann,
    verify_incidence_identities,
    verify_moment_identities,
    verify_size_identity,
)
from vspart.partitions import SubspacePartition
from vspart.spaces import full_space, num_points, span

F2 = make_field(2)


def near_spread_v3():
    """Type [2^1, 1^4] in V(3, 2)."""
    return beutelspacher(3, 1, F2)


def tailed_v6():
    """Type [1^4, 2^1, 3^8] in V(6, 2): a 3-spread with one member split."""
    return refine(spread(6, 3, F2), 0, beutelspacher(3, 1, F2))


def test_profile_of_spread():
    P = spread(4, 2, F2)
    for H in all_hyperplanes(4, F2):
        p = profile(P, H)
        assert p.dims == (2,)
        assert p.counts == (1,)
        assert p.count(2) == 1
        assert p.count(1) == 0


def test_profile_distinguishes_hyperplanes():
    """In [2^1, 1^4] only the hyperplane equal to the 2-member contains
    any member at all, and it contains exactly that one."""
    P = near_spread_v3()
    two = next(m for m in P.members if m.dim == 2)
    special = 0
    for H in all_hyperplanes(3, F2):
        p = profile(P, H)
        if H == two:
            assert p.counts == (0, 1)
            special += 1
        else:
            assert p.counts == (2, 0)
    assert special == 1


def test_profile_rejects_non_hyperplanes():
    P = spread(4, 2, F2)
    with pytest.raises(NotAHyperplane):
        profile(P, span([(1, 0, 0, 0)], 4, F2))
    with pytest.raises(NotAHyperplane):
        profile(P, full_space(3, F2))


def test_histogram_frozen_values():
    P = near_spread_v3()
    h = histogram(P)
    assert h.dims == (1, 2)
    assert h.as_dict() == {(0, 1): 1, (2, 0): 6}
    assert h.total() == num_points(3, 2)
    hs = histogram(spread(4, 2, F2))
    assert hs.as_dict() == {(1,): 15}


def test_histogram_threaded_equals_serial():
    P = tailed_v6()
    assert histogram(P, threads=2) == histogram(P, threads=1)
    assert verify_incidence_identities(P, threads=2).ok


def test_incidence_identities_on_corpus():
    for P in (spread(4, 2, F2), near_spread_v3(), tailed_v6(),
              minimal_partition(7, 3, F2), spread(4, 2, make_field(3))):
        rep = verify_incidence_identities(P)
        assert rep.ok
        assert all(c.ok for c in rep.checks)


def test_incidence_identities_alias():
    assert verify_heden_lehmann is verify_incidence_identities


def test_identities_skip_out_of_window_dimensions():
    """Dimensions outside [1, n-2] are skipped, not failed: the report
    stays ok and records the reason."""
    P = near_spread_v3()  # has a member of dimension n - 1
    rep = verify_incidence_identities(P)
    assert rep.ok
    skipped = [c for c in rep.checks if c.skipped]
    assert len(skipped) == 1
    assert "outside" in skipped[0].reason
    lines = rep.lines()
    assert any(line.startswith("skip") for line in lines)


def test_dual_path_incidence_sums():
    """Hyperplanes-through-member totals match the histogram moments."""
    P = minimal_partition(7, 3, F2)
    sums = incidence_sums_via_members(P)
    assert sums == {2: 155, 3: 240}
    h = histogram(P)
    for i, d in enumerate(h.dims):
        assert sums[d] == sum(b[i] * s for b, s in h.classes)


def test_size_identity():
    for P in (spread(4, 2, F2), near_spread_v3(), tailed_v6(),
              minimal_partition(7, 3, F2)):
        rep = verify_size_identity(P)
        assert rep.ok
    one = SubspacePartition(3, F2, [full_space(3, F2)])
    assert verify_size_identity(one).ok


def test_supertail_quotient_values():
    P = near_spread_v3()
    two = next(m for m in P.members if m.dim == 2)
    assert supertail_quotient(P, 2, two) == 2
    others = [H for H in all_hyperplanes(3, F2) if H != two]
    assert sorted(supertail_quotient(P, 2, H) for H in others) == [1] * 6
    S = spread(4, 2, F2)
    for H in all_hyperplanes(4, F2):
        assert supertail_quotient(S, 2, H) == 0
    with pytest.raises(BadRange):
        supertail_quotient(P, 3, two)


def test_supertail_quotient_nonnegative_everywhere():
    for P in (tailed_v6(), minimal_partition(7, 3, F2)):
        cut = max(P.dims())
        for H in all_hyperplanes(P.n, P.field):
            assert supertail_quotient(P, cut, H) >= 0


def test_beta_stats_minimum_tails():
    """Both corpus minimum tails have beta0 = q^t = 4; the c0 equation
    gives 1 and 2 respectively."""
    b6 = beta_stats(tailed_v6(), 3)
    assert b6.tail_size == 5
    assert b6.beta0 == 4
    assert b6.minimum_tail
    assert b6.c0 == 1
    b7 = beta_stats(minimal_partition(7, 3, F2), 3)
    assert b7.tail_size == 5
    assert b7.beta0 == 4
    assert b7.minimum_tail
    assert b7.c0 == 2
    for b in (b6, b7):
        assert b.tail_size >= b.beta0 + 1
        assert min(b.values) == b.beta0


def test_beta_stats_non_minimum_tail():
    """A tail larger than q^t + 1 only gets the generic floor."""
    P = refine(spread(4, 2, F2), 0, spread(2, 1, F2))
    b = beta_stats(P, 2)
    assert b.tail_size == 3
    assert not b.minimum_tail
    assert b.c0 is None
    assert b.tail_size >= b.beta0 + 1
    with pytest.raises(EmptySupertail):
        beta_stats(spread(4, 2, F2), 2)


def test_alpha_histogram_extremal_regime():
    P = minimal_partition(7, 3, F2)
    ctx = alpha_histogram(P, 3)
    assert ctx.alpha == ((0, 7), (2, 120))
    assert ctx.x == 240
    assert ctx.y == 120
    assert ctx.z == 127
    assert ctx.count(0) == 7
    assert ctx.count(1) == 0
    assert ctx.count(5) == 0
    r = ctx.regime
    assert r is not None
    assert (r.k, r.r, r.ell, r.delta, r.gamma) == (2, 1, 2, 0, 16)
    assert set(dict(ctx.alpha)) == {r.delta, r.ell}
    assert ctx.count(r.delta) == num_points((r.k - 1) * 3, 2)


def test_alpha_histogram_spread():
    ctx = alpha_histogram(spread(4, 2, F2), 2)
    assert ctx.alpha == ((1, 15),)
    assert ctx.regime is None
    with pytest.raises(BadRange):
        alpha_histogram(spread(4, 2, F2), 3)


def test_moment_identities():
    P = tailed_v6()
    rep = verify_moment_identities(P, 1)
    assert rep.ok
    ctx = alpha_histogram(P, 1)
    assert (ctx.x, ctx.y, ctx.z) == (124, 90, 63)
    assert verify_moment_identities(P, 3).ok
    assert verify_moment_identities(minimal_partition(7, 3, F2), 2).ok
    # single-member family: second moment degenerates to 0 = 0
    one = verify_moment_identities(beutelspacher(7, 3, F2), 4)
    assert one.ok


def test_tail_implication_checks():
    rep = tail_implication_checks(tailed_v6(), 3)
    assert rep.ok
    ctx = alpha_histogram(tailed_v6(), 1)
    for i, c in ctx.alpha:
        assert i % 2 == 0
    with pytest.raises(HypothesisNotMet):
        tail_implication_checks(minimal_partition(7, 3, F2), 3)
    P = refine(spread(4, 2, F2), 0, spread(2, 1, F2))
    with pytest.raises(HypothesisNotMet):
        tail_implication_checks(P, 2)

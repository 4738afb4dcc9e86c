"""Subspace enumeration against the q-binomial counts, plus recognition."""
import itertools
import random

import pytest

from vspart.enumeration import (
    all_hyperplanes,
    all_subspaces,
    gaussian_binomial,
    hyperplane_functional,
    hyperplanes_containing,
    recognize_subspace,
)
from vspart.errors import BadRange, BudgetExceeded
from vspart.fields import make_field
from vspart.spaces import dot, full_space, num_points, span, zero_subspace


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(4, 1, 2) == 15
    assert gaussian_binomial(4, 3, 2) == 15
    assert gaussian_binomial(5, 2, 3) == 1210
    assert gaussian_binomial(3, 0, 2) == 1
    assert gaussian_binomial(3, 3, 2) == 1
    assert gaussian_binomial(3, 4, 2) == 0


def test_gaussian_binomial_symmetry():
    for q in (2, 3):
        for n in range(7):
            for d in range(n + 1):
                assert gaussian_binomial(n, d, q) == gaussian_binomial(
                    n, n - d, q
                )


def test_subspace_counts_match_q_binomials():
    """Every (n, d) cell up to n = 6 over GF(2) and n = 4 over GF(3)."""
    for q, n_max in ((2, 6), (3, 4)):
        F = make_field(q)
        for n in range(1, n_max + 1):
            for d in range(n + 1):
                got = list(all_subspaces(n, d, F))
                assert len(got) == gaussian_binomial(n, d, q)
                assert len(set(got)) == len(got)
                for U in got:
                    assert U.dim == d


def test_enumeration_is_deterministic():
    F = make_field(3)
    first = list(all_subspaces(4, 2, F))
    second = list(all_subspaces(4, 2, F))
    assert first == second


def test_enumeration_budget():
    F = make_field(2)
    with pytest.raises(BudgetExceeded):
        list(all_subspaces(6, 3, F, budget=100))
    # a budget large enough for the full run changes nothing
    full = list(all_subspaces(4, 2, F, budget=10 ** 6))
    assert len(full) == 35


def test_hyperplanes_and_functionals():
    for q in (2, 3):
        F = make_field(q)
        for n in (2, 3, 4):
            hs = list(all_hyperplanes(n, F))
            assert len(hs) == num_points(n, q)
            assert len(set(hs)) == len(hs)
            for H in hs:
                assert H.dim == n - 1
                a = hyperplane_functional(H)
                for v in H.points():
                    assert dot(F, a, v) == 0


def test_hyperplanes_containing_counts():
    """A d-subspace of V(n, q) lies in exactly theta(n - d) hyperplanes."""
    F = make_field(2)
    for d in range(1, 4):
        for U in itertools.islice(all_subspaces(4, d, F), 8):
            hs = list(hyperplanes_containing(U))
            assert len(hs) == num_points(4 - d, 2)
            for H in hs:
                assert H.contains_subspace(U)


def test_recognize_subspace_round_trip():
    for q in (2, 3):
        F = make_field(q)
        for d in (1, 2, 3):
            for U in itertools.islice(all_subspaces(3, d, F), 5):
                pts = list(U.points())
                assert recognize_subspace(pts, 3, F) == U
                assert recognize_subspace(
                    pts, 3, F, mode="hyperplane-count"
                ) == U


def test_recognize_subspace_rejections():
    """Point sets that are not full subspaces are rejected in both modes."""
    F = make_field(2)
    rng = random.Random(7)
    V = full_space(4, F)
    all_pts = list(V.points())
    plane = span([(1, 0, 0, 0), (0, 1, 0, 0)], 4, F)
    good = set(plane.points())
    for _ in range(20):
        pts = set(rng.sample(all_pts, 3))
        expected = pts == good or (
            recognize_subspace(sorted(pts), 4, F) is not None
        )
        got_span = recognize_subspace(pts, 4, F)
        got_count = recognize_subspace(pts, 4, F, mode="hyperplane-count")
        assert (got_span is not None) == expected
        assert (got_count is None) == (got_span is None)
    # drop one point from a plane: wrong size for any dimension
    broken = sorted(good)[:-1]
    assert recognize_subspace(broken, 4, F) is None
    assert recognize_subspace(broken, 4, F, mode="hyperplane-count") is None
    # right size, wrong shape: three points not closed under addition
    e1, e2, e3 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)
    assert recognize_subspace([e1, e2, e3], 4, F) is None
    assert (
        recognize_subspace([e1, e2, e3], 4, F, mode="hyperplane-count")
        is None
    )


def test_recognize_empty_set_is_zero_subspace():
    F = make_field(2)
    assert recognize_subspace([], 3, F) == zero_subspace(3, F)


def test_recognize_unknown_mode():
    F = make_field(2)
    with pytest.raises(BadRange):
        recognize_subspace([(1, 0)], 2, F, mode="guess")

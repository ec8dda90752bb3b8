from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linarr import catalog
from linarr.arrangement import (
    Arrangement,
    DuplicateLineError,
    GenerationError,
    IdenticalLinesError,
    MultiplicityProfile,
    ProjectiveLine,
    canonical_triple,
    clustered_arrangement,
    intersect,
    per_line_profile,
    profile,
    random_arrangement,
    singular_points,
    tau_combinatorial,
)

from oracles import brute_profile

X, Y, Z = ProjectiveLine(1, 0, 0), ProjectiveLine(0, 1, 0), ProjectiveLine(0, 0, 1)


def test_canonical_triple():
    assert canonical_triple((-2, 4, 0)) == (1, -2, 0)
    assert canonical_triple(("1/2", "1/3", 0)) == (3, 2, 0)
    assert canonical_triple((0, -3, 6)) == (0, 1, -2)
    with pytest.raises(ValueError):
        canonical_triple((0, 0, 0))
    with pytest.raises(ValueError):
        canonical_triple((1, 2))


def test_line_equality_is_projective():
    assert ProjectiveLine(2, -2, 0) == ProjectiveLine("-1/3", "1/3", 0)
    assert ProjectiveLine(1, 1, 1).contains((1, -1, 0))
    assert ProjectiveLine(1, 2, 3).evaluate(("1/2", 0, 1)) == Fraction(7, 2)


def test_duplicate_lines_rejected():
    with pytest.raises(DuplicateLineError) as info:
        Arrangement([(1, 0, 0), (0, 1, 0), (-3, 0, 0)])
    assert (info.value.first, info.value.second) == (0, 2)
    with pytest.raises(ValueError):
        Arrangement([])


def test_intersect_examples():
    assert intersect(X, Y) == (0, 0, 1)
    assert intersect(X, ProjectiveLine(1, -1, 0)) == (0, 0, 1)
    p = intersect(ProjectiveLine(1, -1, 0), ProjectiveLine(1, 0, -1))
    assert p == (1, 1, 1)
    assert ProjectiveLine(1, -1, 0).contains(p) and ProjectiveLine(1, 0, -1).contains(p)
    with pytest.raises(IdenticalLinesError):
        intersect(X, ProjectiveLine(5, 0, 0))


def test_singular_points_examples():
    tri = singular_points(catalog.triangle())
    assert [p.multiplicity for p in tri] == [2, 2, 2]
    (pencil_point,) = singular_points(catalog.pencil(4))
    assert pencil_point.multiplicity == 4 and pencil_point.point == (0, 0, 1)
    quad = {p.point: p.multiplicity for p in singular_points(catalog.complete_quadrilateral())}
    assert quad == {
        (0, 0, 1): 3, (0, 1, 0): 3, (1, 0, 0): 3, (1, 1, 1): 3,
        (0, 1, 1): 2, (1, 0, 1): 2, (1, 1, 0): 2,
    }


def test_profile_examples():
    assert profile(catalog.triangle()).nonzero() == {2: 3}
    q = profile(catalog.complete_quadrilateral())
    assert q.nonzero() == {2: 3, 3: 4}
    assert 3 * 1 + 4 * 3 == comb(6, 2) == q.pair_count()
    assert profile(catalog.generic_four()).nonzero() == {2: 6}
    assert profile(catalog.near_pencil(5)).nonzero() == {2: 4, 4: 1}


def test_per_line_examples():
    assert per_line_profile(catalog.triangle(), 0) == {2: 2}
    quad = catalog.complete_quadrilateral()
    assert quad.lines[0] == X
    assert per_line_profile(quad, 0) == {2: 1, 3: 2}
    assert per_line_profile(catalog.pencil(5), 3) == {5: 1}
    with pytest.raises(IndexError):
        per_line_profile(quad, 6)


def test_tau_combinatorial_examples():
    assert tau_combinatorial(profile(catalog.triangle())) == 3
    assert tau_combinatorial(profile(catalog.complete_quadrilateral())) == 19
    assert tau_combinatorial(profile(catalog.generic_four())) == 6


def test_profile_validation():
    with pytest.raises(ValueError):
        MultiplicityProfile(4, {2: 5})
    with pytest.raises(ValueError):
        MultiplicityProfile(4, {5: 1})
    with pytest.raises(ValueError):
        MultiplicityProfile(4, {2: -1})
    p = MultiplicityProfile.hypothetical(8, {5: 3, 2: 2})
    assert not p.satisfies_pair_identity()
    assert p[5] == 3 and p[7] == 0 and p[40] == 0
    assert p.max_multiplicity == 5


def test_random_arrangement_basics():
    a = random_arrangement(1, 0)
    assert a.d == 1
    assert random_arrangement(6, "s", 4) == random_arrangement(6, "s", 4)
    assert random_arrangement(6, "s", 4) != random_arrangement(6, "t", 4)
    for seed in range(10):
        a = random_arrangement(5, seed, 3)
        assert a.d == 5
        assert all(max(map(abs, l.coeffs)) <= 3 for l in a.lines)
        assert profile(a).satisfies_pair_identity()


def test_random_arrangement_limits():
    # only 13 lines have entries in {-1, 0, 1}
    assert random_arrangement(13, 1, 1).d == 13
    with pytest.raises(GenerationError):
        random_arrangement(14, 1, 1)
    with pytest.raises(ValueError):
        random_arrangement(0, 1)
    with pytest.raises(ValueError):
        random_arrangement(3, 1, 0)


def test_clustered_arrangement_has_high_multiplicity():
    found = 0
    for seed in range(10):
        a = clustered_arrangement(8, seed, centers=1, per_center=5)
        assert a.d == 8
        found += profile(a).max_multiplicity >= 5
    assert found == 10


@pytest.mark.parametrize("seed", range(6))
def test_profile_matches_brute_force(seed):
    a = random_arrangement(5 + seed % 2, f"brute:{seed}", 2)
    assert profile(a).nonzero() == brute_profile([l.coeffs for l in a.lines])


arrangements = st.builds(
    random_arrangement, st.integers(2, 10), st.integers(0, 10**6), st.integers(1, 4)
)


@given(arrangements)
def test_pair_and_per_line_identities(a):
    pts = singular_points(a)
    p = profile(a)
    assert p.pair_count() == comb(a.d, 2)
    for i in range(a.d):
        assert sum((r - 1) * n for r, n in per_line_profile(a, i, pts).items()) == a.d - 1
    for sp in pts:
        assert all(a.lines[i].contains(sp.point) for i in sp.incident)
        others = set(range(a.d)) - sp.incident
        assert not any(a.lines[i].contains(sp.point) for i in others)


@given(arrangements, st.randoms())
def test_profile_invariant_under_reordering_and_scaling(a, rnd):
    lines = list(a.lines)
    rnd.shuffle(lines)
    scaled = []
    for l in lines:
        k = rnd.choice([-3, -1, 2, 5])
        scaled.append(tuple(k * c for c in l.coeffs))
    assert profile(Arrangement(scaled)) == profile(a)

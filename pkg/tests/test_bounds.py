from fractions import Fraction
from math import comb, floor

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linarr import bounds, catalog
from linarr.arrangement import MultiplicityProfile, profile, random_arrangement

TRI = profile(catalog.triangle())
QUAD = profile(catalog.complete_quadrilateral())
GEN4 = profile(catalog.generic_four())


def P(d, **t):
    return MultiplicityProfile(d, {int(k[1:]): v for k, v in t.items()})


def scan_largest(pred, lo, hi):
    """Brute-force oracle: largest integer in [lo, hi] satisfying pred."""
    return max(d for d in range(lo, hi + 1) if pred(d))


def test_melchior_examples():
    for p in (TRI, QUAD):
        r = bounds.melchior_check(p)
        assert r.holds and r.lhs == r.rhs == 3
    r = bounds.melchior_check(P(5, t2=4, t4=1))
    assert r.holds and (r.lhs, r.rhs) == (4, 4)
    pencil = bounds.melchior_check(profile(catalog.pencil(4)))
    assert not pencil.preconditions_met and not pencil.holds and pencil.reason


def test_shnurnikov_examples():
    r = bounds.shnurnikov_check(QUAD)
    assert r.holds and r.lhs == 9 and r.rhs == 8
    r = bounds.shnurnikov_check(P(6, t2=15))
    assert r.holds and r.lhs == 15
    r = bounds.shnurnikov_check(MultiplicityProfile.hypothetical(8, {5: 3, 2: 2}))
    assert r.preconditions_met and not r.holds
    assert (r.lhs, r.rhs) == (2, Fraction(31, 2))
    assert not bounds.shnurnikov_check(TRI).preconditions_met


def test_tk_case1_examples():
    assert bounds.tk_bound_case1(10, 5) == Fraction(74, 25)
    assert bounds.tk_bound_case1(8, 5) == Fraction(8, 5)
    assert bounds.tk_bound_case1(7, 4) == 2
    with pytest.raises(ValueError):
        bounds.tk_bound_case1(7, 5)
    with pytest.raises(ValueError):
        bounds.tk_bound_case1(10, 3)


def test_tk_case1_denominator_at_five_symbolically():
    import sympy

    d, k = sympy.symbols("d k")
    general = (d * (d - 1) - 16) / (k**2 + 3 * k - 15)
    assert sympy.simplify(general.subs(k, 5) - (d * (d - 1) - 16) / 25) == 0
    assert (k**2 + 3 * k - 15).subs(k, 5) == 25


def test_tk_case2_examples():
    assert bounds.tk_bound_case2(6, 5) == Fraction(6, 5)
    assert bounds.tk_bound_case2(9, 4) == Fraction(9, 2)
    assert bounds.tk_bound_case2(5, 5) == 1


def test_tk_unified_examples():
    assert bounds.tk_bound_unified(10, 5) == 4
    assert bounds.tk_bound_unified(6, 5) == Fraction(6, 5)
    assert bounds.tk_bound_unified(100, 5) == 480


def test_discriminant_and_root_examples():
    assert bounds.discriminant(3, TRI) == 0
    assert bounds.discriminant(6, QUAD) == 1
    assert bounds.discriminant(4, GEN4) == -3
    assert bounds.free_root_d1(3, TRI) == 1
    assert bounds.free_root_d1(6, QUAD) == 2
    assert bounds.free_root_d1(4, GEN4) is None
    with pytest.raises(ValueError):
        bounds.discriminant(5, TRI)


def test_n5_examples():
    assert bounds.ineq_n5_check(3, TRI).holds
    r = bounds.ineq_n5_check(6, QUAD)
    assert r.holds and r.lhs == Fraction(15, 2) and r.rhs == 7
    r = bounds.ineq_n5_check(4, GEN4)
    assert not r.holds and r.preconditions_met and r.lhs == Fraction(9, 2)
    assert not bounds.ineq_n5_check(6, profile(catalog.pencil(6))).preconditions_met


def test_geq_examples():
    r = bounds.ineq_geq_check(3, TRI)
    assert r.holds and r.lhs == r.rhs == 3
    r = bounds.ineq_geq_check(6, QUAD)
    assert r.holds and r.lhs == Fraction(45, 4) and r.rhs == 11
    r = bounds.ineq_geq_check(4, GEN4)
    assert not r.holds and r.lhs == Fraction(21, 4)


def test_t5_lower_bound_examples():
    assert bounds.t5_lower_bound(19) == 0
    assert bounds.t5_lower_bound(27) == 8
    assert bounds.t5_lower_bound(522) == Fraction(519 * 503, 24)
    with pytest.raises(ValueError):
        bounds.t5_lower_bound(7)


def test_main_bound_and_boundary():
    assert bounds.theorem_main_bound() == 522
    assert bounds.main_bound_sides(522) == (6526425, 6526704)
    assert bounds.main_bound_sides(523) == (6552000, 6551760)
    assert bounds.main_bound_feasible(522) and not bounds.main_bound_feasible(523)


def test_main_bound_against_scan():
    assert scan_largest(lambda d: 25 * (d - 3) * (d - 19) <= 24 * (d * d - d - 16), 8, 2000) == 522
    # the same set written as the quadratic d^2 - 526 d + 1809 <= 0
    assert all(bounds.main_bound_feasible(d) == (d * d - 526 * d + 1809 <= 0) for d in range(8, 1000))


def test_eee_examples():
    r = bounds.pog_inequality_eee(4, 1, GEN4)
    assert r.holds and r.rhs == Fraction(13, 2)
    assert not bounds.pog_inequality_eee(5, 1, P(5, t2=10)).holds
    assert bounds.pog_inequality_eee(3, 1, TRI).holds
    assert not bounds.pog_inequality_eee(4, 0, GEN4).preconditions_met
    pre = bounds.pog_inequality_eee(10, 1, P(10, t2=35, t5=1))
    assert not pre.preconditions_met


@pytest.mark.parametrize("h", [1, 2, 3, 10, 44, 45])
def test_pog_d_bound_from_h_against_scan(h):
    expected = scan_largest(lambda d: d * d - 22 * d + 57 - 28 * h <= 0, 1, 500)
    assert bounds.pog_d_bound_from_h(h) == expected


def test_pog_d_bound_examples():
    assert bounds.pog_d_bound_from_h(1) == 20
    assert bounds.pog_quadratic(20, 1) == -11 and bounds.pog_quadratic(21, 1) == 8
    assert bounds.pog_d_bound_from_h(2) == 21
    assert bounds.pog_quadratic(22, 2) == 1
    assert bounds.pog_d_bound_from_h(10) == 29
    with pytest.raises(ValueError):
        bounds.pog_d_bound_from_h(0)


def test_pog_degree_bound():
    assert bounds.theorem_c_bound() == 47
    assert bounds.theorem_c_sides(47) == (1296, 1324)
    assert bounds.theorem_c_sides(48) == (1369, 1352)
    assert scan_largest(lambda d: d * d - 50 * d + 113 <= 0, 3, 500) == 47
    # h = d - 2 substituted into the quadratic gives the same set
    assert all(
        (bounds.pog_quadratic(d, d - 2) <= 0) == bounds.theorem_c_feasible(d) for d in range(12, 200)
    )


def test_chain_on_quadrilateral_is_out_of_range():
    chain = bounds.inequality_chain_trace(6, QUAD)
    assert all(not link.preconditions_met for link in chain)
    assert bounds.first_failing_link(chain) is None


def test_chain_link_names():
    names = [l.name for l in bounds.inequality_chain_trace(8, P(8, t2=28))]
    assert names == ["pair_count", "geq_substitution", "melchior_substitution",
                     "t3_relaxation", "n5_substitution", "t5_floor"]


def test_chain_fails_at_melchior_for_melchior_violator():
    p = P(8, t3=6, t5=1)  # t_2 = 0 < 3 + 2 t_5
    assert not bounds.melchior_check(p).holds
    chain = bounds.inequality_chain_trace(8, p)
    assert bounds.first_failing_link(chain) == "melchior_substitution"


profiles5 = st.integers(8, 30).flatmap(
    lambda d: st.tuples(st.just(d), st.integers(0, comb(d, 2) // 10)).flatmap(
        lambda dt: st.tuples(st.just(dt[0]), st.just(dt[1]),
                             st.integers(0, (comb(dt[0], 2) - 10 * dt[1]) // 6))
    ).flatmap(
        lambda x: st.tuples(st.just(x[0]), st.just(x[1]), st.just(x[2]),
                            st.integers(0, (comb(x[0], 2) - 10 * x[1] - 6 * x[2]) // 3))
    )
)


@given(profiles5)
def test_chain_first_failure_names_the_violated_hypothesis(args):
    d, t5, t4, t3 = args
    t2 = comb(d, 2) - 10 * t5 - 6 * t4 - 3 * t3
    p = P(d, t2=t2, t3=t3, t4=t4, t5=t5)
    chain = bounds.inequality_chain_trace(d, p)
    assert chain[0].holds
    geq = bounds.ineq_geq_check(d, p).holds
    mel = bounds.melchior_check(p).holds
    n5 = bounds.ineq_n5_check(d, p).holds
    assert chain[1].holds == geq
    assert chain[2].holds == mel
    assert chain[3].holds
    assert chain[4].holds == n5
    if geq and mel and n5:
        # every link holds, so the t_5 floor follows
        assert all(l.holds for l in chain)
        assert t5 >= floor(bounds.t5_lower_bound(d))


@given(st.integers(3, 40), st.integers(0, 10**6))
def test_realizable_profiles_respect_melchior(d, seed):
    p = profile(random_arrangement(d, seed, 4))
    r = bounds.melchior_check(p)
    assert r.holds or not r.preconditions_met
    s = bounds.shnurnikov_check(p)
    assert s.holds or not s.preconditions_met


def test_compare_relations():
    assert bounds.compare("a", 1, "<=", 2).holds
    assert not bounds.compare("a", 3, "==", 2).holds
    r = bounds.compare("a", 1, ">=", 0, pre=False, reason="nope")
    assert not r.holds and r.reason == "nope"

"""Combinatorial inequalities for real line arrangements, evaluated exactly.

Every check returns a :class:`BoundReport` carrying both sides of the
inequality as Fractions.  A check whose hypotheses do not apply to the
profile reports ``preconditions_met=False`` (and ``holds=False``) instead of
raising, so batch runs can keep going.  Square roots never appear: every
comparison against a root is squared out and decided on integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt

from .arrangement import MultiplicityProfile


@dataclass(frozen=True)
class BoundReport:
    name: str
    holds: bool
    lhs: Fraction
    rhs: Fraction
    preconditions_met: bool
    relation: str = ">="
    reason: str = ""


_COMPARE = {
    ">=": lambda a, b: a >= b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
}


def compare(name, lhs, relation, rhs, pre=True, reason=""):
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    holds = pre and _COMPARE[relation](lhs, rhs)
    return BoundReport(name, holds, lhs, rhs, pre, relation, "" if pre else reason)


def _check_d(d: int, p: MultiplicityProfile):
    if d != p.d:
        raise ValueError(f"d = {d} but the profile has d = {p.d}")


def _max_mult_at_most(p: MultiplicityProfile, k: int) -> bool:
    return all(n == 0 for r, n in p.t.items() if r > k)


def melchior_check(p: MultiplicityProfile) -> BoundReport:
    """t_2 >= 3 + t_4 + 2 t_5 + ... + (d-4) t_{d-1}, for d >= 3 and t_d = 0."""
    d = p.d
    pre = d >= 3 and p[d] == 0
    rhs = 3 + sum((r - 3) * p[r] for r in range(4, d))
    return compare("melchior", p[2], ">=", rhs, pre, "needs d >= 3 and t_d = 0")


def shnurnikov_check(p: MultiplicityProfile) -> BoundReport:
    """t_2 + 3/2 t_3 >= 8 + sum_{r>=4} (4r - 15)/2 t_r, for t_d = t_{d-1} = t_{d-2} = 0."""
    d = p.d
    pre = all(p[r] == 0 for r in (d, d - 1, d - 2))
    lhs = p[2] + Fraction(3, 2) * p[3]
    rhs = 8 + sum(Fraction(4 * r - 15, 2) * n for r, n in p.t.items() if r >= 4)
    return compare("shnurnikov", lhs, ">=", rhs, pre, "needs t_d = t_{d-1} = t_{d-2} = 0")


def tk_bound_case1(d: int, k: int) -> Fraction:
    """(d(d-1) - 16) / (k^2 + 3k - 15): the bound via Shnurnikov, for d >= k + 3."""
    if k < 4:
        raise ValueError("k must be at least 4")
    if d < k + 3:
        raise ValueError(f"needs d >= k + 3 = {k + 3}, got d = {d}")
    return Fraction(d * (d - 1) - 16, k * k + 3 * k - 15)


def tk_bound_case2(d: int, k: int) -> Fraction:
    """(d/k) * floor((d-1)/(k-1)): each line carries at most floor((d-1)/(k-1)) k-fold points."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if d < 2:
        raise ValueError("d must be at least 2")
    return Fraction(d, k) * ((d - 1) // (k - 1))


def tk_bound_unified(d: int, k: int) -> Fraction:
    if k < 4:
        raise ValueError("k must be at least 4")
    second = tk_bound_case2(d, k)
    if d >= k + 3:
        return max(second, Fraction(floor(tk_bound_case1(d, k))))
    return second


def _weighted_sum(p: MultiplicityProfile) -> int:
    # sum (r-1) t_r: the quantity t_2 + 2 t_3 + 3 t_4 + 4 t_5 + ...
    return sum((r - 1) * n for r, n in p.t.items())


def discriminant(d: int, p: MultiplicityProfile) -> Fraction:
    """Discriminant in d_1 of d_1^2 - d_1(d-1) + (sum (r-1) t_r - d + 1) = 0.

    The quadratic comes from equating tau to tau_max for a free arrangement
    and substituting the pair count.
    """
    _check_d(d, p)
    return Fraction((d - 1) ** 2 + 4 * (d - 1) - 4 * _weighted_sum(p))


def free_root_d1(d: int, p: MultiplicityProfile) -> int | None:
    """Smallest nonnegative integer root d_1 of the freeness quadratic, if any."""
    disc = discriminant(d, p)
    if disc < 0:
        return None
    n = int(disc)
    s = isqrt(n)
    if s * s != n or (d - 1 - s) % 2:
        return None
    small, large = (d - 1 - s) // 2, (d - 1 + s) // 2
    if small >= 0:
        return small
    return large if large >= 0 else None


def ineq_n5_check(d: int, p: MultiplicityProfile) -> BoundReport:
    """3/2 (d-1) + 2 t_5 >= t_2 + t_3, for multiplicities at most 5."""
    _check_d(d, p)
    return compare(
        "n5", Fraction(3 * (d - 1), 2) + 2 * p[5], ">=", p[2] + p[3],
        _max_mult_at_most(p, 5), "needs t_r = 0 for r >= 6",
    )


def ineq_geq_check(d: int, p: MultiplicityProfile) -> BoundReport:
    """(d^2 + 2d - 3)/4 >= t_2 + 2 t_3 + 3 t_4 + 4 t_5, for multiplicities at most 5."""
    _check_d(d, p)
    return compare(
        "geq", Fraction(d * d + 2 * d - 3, 4), ">=", p[2] + 2 * p[3] + 3 * p[4] + 4 * p[5],
        _max_mult_at_most(p, 5), "needs t_r = 0 for r >= 6",
    )


def t5_lower_bound(d: int) -> Fraction:
    """(d-3)(d-19)/24; negative below d = 19, callers clamp when counting."""
    if d < 8:
        raise ValueError("the t_5 floor is derived for d >= 8")
    return Fraction((d - 3) * (d - 19), 24)


def main_bound_sides(d: int) -> tuple[int, int]:
    """Integer sides of 25(d-3)(d-19) <= 24(d(d-1) - 16), the t_5 floor/ceiling clash."""
    return 25 * (d - 3) * (d - 19), 24 * (d * (d - 1) - 16)


def main_bound_feasible(d: int) -> bool:
    lhs, rhs = main_bound_sides(d)
    return lhs <= rhs


def _adjust_to_largest(guess: int, feasible, lowest: int) -> int:
    d = max(guess, lowest)
    while not feasible(d) and d > lowest:
        d -= 1
    while feasible(d + 1):
        d += 1
    return d


def theorem_main_bound() -> int:
    """Largest d with 25(d-3)(d-19) <= 24(d(d-1)-16), i.e. d^2 - 526 d + 1809 <= 0."""
    # upper root of d^2 - 526 d + 1809, then exact correction on integers
    guess = (526 + isqrt(526 * 526 - 4 * 1809)) // 2
    return _adjust_to_largest(guess, main_bound_feasible, 8)


def pog_inequality_eee(d: int, h: int, p: MultiplicityProfile) -> BoundReport:
    """t_2 + t_3 <= 3(d-1)/2 + 2h, for multiplicities at most 4 and h >= 1."""
    _check_d(d, p)
    pre = _max_mult_at_most(p, 4) and h >= 1
    return compare(
        "eee", p[2] + p[3], "<=", Fraction(3 * (d - 1), 2) + 2 * h,
        pre, "needs t_r = 0 for r >= 5 and h >= 1",
    )


def pog_quadratic(d: int, h: int) -> int:
    return d * d - 22 * d + 57 - 28 * h


def pog_d_bound_from_h(h: int) -> int:
    """Largest d with d^2 - 22d + 57 - 28h <= 0, i.e. d <= 11 + 2 sqrt(16 + 7h)."""
    if h < 1:
        raise ValueError("h must be at least 1")
    guess = 11 + isqrt(64 + 28 * h)
    return _adjust_to_largest(guess, lambda d: pog_quadratic(d, h) <= 0, 1)


def theorem_c_sides(d: int) -> tuple[int, int]:
    """(d - 11)^2 and 4(2 + 7d): d <= 11 + 2 sqrt(2 + 7d) squared out."""
    return (d - 11) ** 2, 4 * (2 + 7 * d)


def theorem_c_feasible(d: int) -> bool:
    if d <= 11:
        return True
    lhs, rhs = theorem_c_sides(d)
    return lhs <= rhs


def theorem_c_bound() -> int:
    """Largest d with d <= 11 + 2 sqrt(2 + 7d), i.e. d^2 - 50 d + 113 <= 0 past 11."""
    guess = 25 + isqrt(625 - 113)
    return _adjust_to_largest(guess, theorem_c_feasible, 3)


def inequality_chain_trace(d: int, p: MultiplicityProfile) -> list[BoundReport]:
    """Evaluate each step from the pair count down to the t_5 floor.

    The chain runs from d(d-1)/2 through the discriminant bound, Melchior and
    the n5 inequality; every link compares consecutive expressions, so the
    first failing link names the hypothesis the profile violates.
    """
    _check_d(d, p)
    pre = d >= 8 and _max_mult_at_most(p, 5)
    why = "needs d >= 8 and t_r = 0 for r >= 6"
    t2, t3, t4, t5 = p[2], p[3], p[4], p[5]
    q = Fraction(d * d + 2 * d - 3, 4)
    steps = [
        Fraction(d * (d - 1), 2),
        Fraction((t2 + 2 * t3 + 3 * t4 + 4 * t5) + t3 + 3 * (t4 + 2 * t5)),
        q + t3 + 3 * (t4 + 2 * t5),
        q + t3 + 3 * (t2 - 3),
        q - 9 + 3 * (t2 + t3),
        q - 9 + Fraction(9 * (d - 1), 2) + 6 * t5,
    ]
    names = ["pair_count", "geq_substitution", "melchior_substitution", "t3_relaxation", "n5_substitution"]
    relations = ["==", "<=", "<=", "<=", "<="]
    out = [
        compare(name, steps[i], rel, steps[i + 1], pre, why)
        for i, (name, rel) in enumerate(zip(names, relations))
    ]
    floor = Fraction((d - 3) * (d - 19), 24)
    out.append(compare("t5_floor", t5, ">=", floor, pre, why))
    return out


def first_failing_link(chain: list[BoundReport]) -> str | None:
    for link in chain:
        if link.preconditions_met and not link.holds:
            return link.name
    return None

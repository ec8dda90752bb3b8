"""Integer feasibility of multiplicity profiles under necessary conditions.

Profiles (t_2, t_3, t_4, t_5) are enumerated with t_2 fixed by the pair
count.  The predicates here are written on plain integers (everything
scaled to clear denominators) so they are independent of the Fraction-based
checks in :mod:`linarr.bounds`; tests cross-check the two.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import ceil, comb, floor, isqrt

from . import bounds
from .arrangement import MultiplicityProfile

ENUMERATION_CAP = 30
WITNESS_LIMIT = 10
CAVEAT = (
    "necessary-condition envelope only: feasibility does not imply that a real "
    "line arrangement with this profile exists"
)


class CapExceededError(ValueError):
    pass


class EnvelopeConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class ConstraintSet:
    pair_identity: bool = True
    no_pencil: bool = False
    melchior: bool = False
    shnurnikov: bool = False
    discriminant_nonneg: bool = False
    integer_free_root: bool = False
    tk_caps: bool = False
    t5_floor: bool = False
    pog_eee: bool = False
    h_min: int = 1
    h_max: int | None = None

    def __post_init__(self):
        if not self.pair_identity:
            raise ValueError("the pair-count identity cannot be disabled")
        if self.h_min < 1:
            raise ValueError("h ranges start at 1")

    @classmethod
    def free(cls) -> "ConstraintSet":
        return cls(no_pencil=True, melchior=True, shnurnikov=True, discriminant_nonneg=True,
                   integer_free_root=True, tk_caps=True)

    @classmethod
    def pog(cls, h_max: int | None = None) -> "ConstraintSet":
        return cls(no_pencil=True, melchior=True, tk_caps=True, pog_eee=True, h_max=h_max)

    def enabled(self) -> list[str]:
        names = ["pair_identity", "no_pencil", "melchior", "shnurnikov", "discriminant_nonneg",
                 "integer_free_root", "tk_caps", "t5_floor", "pog_eee"]
        return [n for n in names if getattr(self, n)]


@dataclass(frozen=True)
class FeasibilityResult:
    d: int
    feasible: bool
    witness: MultiplicityProfile | None
    certificate: str
    path: str = "enumeration"
    witnesses: tuple[MultiplicityProfile, ...] = field(default=(), compare=False)


def _tk_caps(d: int, k: int, shnurnikov_applies: bool) -> int:
    """Largest t_k allowed by every applicable t_k bound."""
    cap = floor(bounds.tk_bound_case2(d, k))
    if shnurnikov_applies and d >= k + 3:
        cap = min(cap, floor(bounds.tk_bound_case1(d, k)))
    return cap


def _first_violation(d: int, t: tuple[int, int, int, int], cs: ConstraintSet, caps) -> str | None:
    t2, t3, t4, t5 = t
    counts = {2: t2, 3: t3, 4: t4, 5: t5}
    td = counts.get(d, 0)
    if cs.no_pencil and td:
        return "no_pencil"
    if cs.melchior and d >= 3 and td == 0:
        rhs = 3 + (t4 if d - 1 >= 4 else 0) + (2 * t5 if d - 1 >= 5 else 0)
        if t2 < rhs:
            return "melchior"
    shn_applies = all(counts.get(r, 0) == 0 for r in (d, d - 1, d - 2))
    if cs.shnurnikov and shn_applies:
        # doubled: 2 t_2 + 3 t_3 >= 16 + t_4 + 5 t_5
        if 2 * t2 + 3 * t3 < 16 + t4 + 5 * t5:
            return "shnurnikov"
    disc = (d - 1) ** 2 + 4 * (d - 1) - 4 * (t2 + 2 * t3 + 3 * t4 + 4 * t5)
    if cs.discriminant_nonneg and disc < 0:
        return "discriminant_nonneg"
    if cs.integer_free_root:
        if disc < 0:
            return "integer_free_root"
        s = isqrt(disc)
        if s * s != disc or (d - 1 - s) % 2:
            return "integer_free_root"
    if cs.tk_caps:
        for k, tk in ((4, t4), (5, t5)):
            if tk > caps[(k, shn_applies)]:
                return "tk_caps"
    if cs.t5_floor and d >= 8:
        if 24 * t5 < (d - 3) * (d - 19):
            return "t5_floor"
    if cs.pog_eee:
        if t5:
            return "pog_eee"
        h_max = cs.h_max if cs.h_max is not None else d - 2
        if h_max < cs.h_min:
            return "pog_eee"
        # doubled: 2(t_2 + t_3) <= 3(d - 1) + 4h; monotone in h, so h_max decides
        if 2 * (t2 + t3) > 3 * (d - 1) + 4 * h_max:
            return "pog_eee"
    return None


@dataclass
class SearchOutcome:
    witnesses: list[MultiplicityProfile]
    examined: int
    rejections: Counter

    def summary(self) -> str:
        parts = ", ".join(f"{k}: {v}" for k, v in sorted(self.rejections.items()))
        return f"examined {self.examined} profiles, {len(self.witnesses)} witness(es); rejected by {parts or 'nothing'}"


def search_profiles(d: int, max_mult: int, cs: ConstraintSet, limit: int = WITNESS_LIMIT,
                    cap: int = ENUMERATION_CAP) -> SearchOutcome:
    if max_mult not in (4, 5):
        raise ValueError("max_mult must be 4 or 5")
    if d < 3:
        raise ValueError("enumeration needs d >= 3")
    if d > cap:
        raise CapExceededError(f"d = {d} exceeds the enumeration cap {cap}")
    pairs = comb(d, 2)
    caps = {(k, a): _tk_caps(d, k, a) for k in (4, 5) for a in (False, True)}
    t5_top = floor(bounds.tk_bound_unified(d, 5)) if max_mult == 5 else 0
    t4_top = floor(bounds.tk_bound_unified(d, 4))
    witnesses: list[MultiplicityProfile] = []
    rejections: Counter = Counter()
    examined = 0
    for t5 in range(t5_top + 1):
        for t4 in range(t4_top + 1):
            rest = pairs - 6 * t4 - 10 * t5
            if rest < 0:
                break
            for t3 in range(rest // 3 + 1):
                t2 = rest - 3 * t3
                examined += 1
                why = _first_violation(d, (t2, t3, t4, t5), cs, caps)
                if why:
                    rejections[why] += 1
                    continue
                witnesses.append(MultiplicityProfile(d, {2: t2, 3: t3, 4: t4, 5: t5}))
                if len(witnesses) >= limit:
                    return SearchOutcome(witnesses, examined, rejections)
    return SearchOutcome(witnesses, examined, rejections)


def enumerate_profiles(d: int, max_mult: int, cs: ConstraintSet, limit: int = WITNESS_LIMIT,
                       cap: int = ENUMERATION_CAP) -> list[MultiplicityProfile]:
    return search_profiles(d, max_mult, cs, limit, cap).witnesses


def _closed_form_free_text(d: int) -> tuple[bool, str]:
    lhs, rhs = bounds.main_bound_sides(d)
    ok = lhs <= rhs
    floor_t5 = bounds.t5_lower_bound(d)
    ceil_t5 = bounds.tk_bound_case1(d, 5)
    lo, hi = max(0, ceil(floor_t5)), floor(ceil_t5)
    window = "empty" if lo > hi else f"[{lo}, {hi}]"
    text = (
        f"t5 floor (d-3)(d-19)/24 = {floor_t5}, t5 ceiling (d(d-1)-16)/25 = {ceil_t5}; "
        f"25(d-3)(d-19) = {lhs} {'<=' if ok else '>'} 24(d(d-1)-16) = {rhs}"
        f" ({'floor/ceiling compatible' if ok else 't5 floor/ceiling conflict'}); "
        f"integer t5 window {window}"
    )
    return ok, text


def free_envelope(d: int, cap: int = ENUMERATION_CAP, limit: int = WITNESS_LIMIT) -> FeasibilityResult:
    """Necessary conditions for a free real arrangement of d lines with multiplicities <= 5."""
    if d < 8:
        raise ValueError("the free envelope is stated for d >= 8")
    closed_ok, closed_text = _closed_form_free_text(d)
    if d <= cap:
        out = search_profiles(d, 5, ConstraintSet.free(), limit, cap)
        feasible = bool(out.witnesses)
        if feasible and not closed_ok:
            raise EnvelopeConsistencyError(f"d = {d}: enumeration found witnesses but the closed form refutes")
        cert = f"path: enumeration; {out.summary()}; closed form: {closed_text}; {CAVEAT}"
        return FeasibilityResult(d, feasible, out.witnesses[0] if feasible else None, cert,
                                 "enumeration", tuple(out.witnesses))
    cert = f"path: closed-form; {closed_text}; {CAVEAT}"
    return FeasibilityResult(d, closed_ok, None, cert, "closed-form")


def pog_minimal_h(d: int) -> int | None:
    """Least h in [1, d-2] with d^2 - 22d + 57 - 28h <= 0, if any."""
    need = d * d - 22 * d + 57
    h = max(1, -(-need // 28))
    return h if h <= d - 2 else None


def pog_envelope(d: int, cap: int = ENUMERATION_CAP, limit: int = WITNESS_LIMIT) -> FeasibilityResult:
    """Necessary conditions for a plus-one generated real arrangement with multiplicities <= 4."""
    if d < 3:
        raise ValueError("the plus-one generated envelope is stated for d >= 3")
    h = pog_minimal_h(d)
    feasible = h is not None
    q = d * d - 22 * d + 57
    if feasible:
        closed = f"minimal h = {h} in [1, {d - 2}]: d^2-22d+57-28h = {q - 28 * h} <= 0"
    else:
        closed = (f"no h in [1, {d - 2}]: at h = d-2, d^2-22d+57-28h = {q - 28 * (d - 2)} > 0")
    if d > cap:
        return FeasibilityResult(d, feasible, None, f"path: closed-form; {closed}; {CAVEAT}", "closed-form")
    out = search_profiles(d, 4, ConstraintSet.pog(h_max=d - 2), limit, cap)
    if out.witnesses and not feasible:
        raise EnvelopeConsistencyError(f"d = {d}: enumeration found witnesses but the closed form refutes")
    cert = f"path: closed-form with enumeration cross-check; {closed}; enumeration {out.summary()}; {CAVEAT}"
    witness = out.witnesses[0] if out.witnesses and feasible else None
    return FeasibilityResult(d, feasible, witness, cert, "closed-form+enumeration", tuple(out.witnesses))


def envelope_range(d_min: int, d_max: int, mode: str, cap: int = ENUMERATION_CAP,
                   limit: int = WITNESS_LIMIT) -> tuple[list[FeasibilityResult], int | None]:
    if d_min > d_max:
        raise ValueError(f"empty range [{d_min}, {d_max}]")
    if mode == "free":
        fn = free_envelope
    elif mode == "pog":
        fn = pog_envelope
    else:
        raise ValueError(f"unknown mode {mode!r}")
    results = [fn(d, cap, limit) for d in range(d_min, d_max + 1)]
    feasible = [r.d for r in results if r.feasible]
    return results, (max(feasible) if feasible else None)

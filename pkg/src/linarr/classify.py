"""Freeness and plus-one generation of line arrangements.

Two independent routes are run side by side and required to agree: the
curve type computed from minimal generator degrees of AR(f), and the
Tjurina-number criteria (du Plessis--Wall for freeness, Dimca--Sticlaru for
three-generator curves).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import syzygy
from .arrangement import Arrangement


class ConsistencyError(RuntimeError):
    """Two characterizations that must agree did not: an implementation bug."""


def tau_max(d: int, d1: int) -> int:
    if not 0 <= d1 <= d - 1:
        raise ValueError(f"d1 = {d1} outside 0..{d - 1}")
    value = (d - 1) * (d - d1 - 1) + d1 * d1
    if 2 * d1 >= d:
        value -= comb(2 * d1 - d + 2, 2)
    return value


def is_free(d: int, d1: int, tau: int) -> bool:
    # the equality criterion only characterizes freeness when d1 < d/2
    return 2 * d1 < d and tau == tau_max(d, d1)


def curve_type(d: int, d1: int, d2: int) -> int:
    return d1 + d2 + 1 - d


def pog_tau(d: int, d1: int, d2: int, d3: int) -> int:
    return (d - 1) ** 2 - d1 * (d - d1 - 1) - (d3 - d2 + 1)


def is_pog_by_tau(d: int, d1: int, d2: int, d3: int, tau: int) -> bool:
    return tau == pog_tau(d, d1, d2, d3)


@dataclass(frozen=True)
class ClassificationReport:
    d: int
    d1: int
    gen_degrees: tuple[int, ...]
    tau: int
    tau_max: int
    type_t: int
    is_free: bool
    is_pog: bool
    h: int | None
    free_by_tau: bool | None
    pog_by_tau: bool | None
    note: str = ""

    @property
    def m(self) -> int:
        return len(self.gen_degrees)

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.gen_degrees


def report_from_analysis(an: syzygy.SyzygyAnalysis) -> ClassificationReport:
    d, gens, tau = an.d, an.gen_degrees, an.tau
    if len(gens) < 2:
        raise ConsistencyError(f"AR(f) has rank 2 but only {len(gens)} generator(s) found")
    d1, d2 = gens[0], gens[1]
    if d1 != an.mdr:
        raise ConsistencyError(f"smallest generator degree {d1} differs from mdr {an.mdr}")
    t = curve_type(d, d1, d2)
    free = t == 0
    pog = t == 1
    bound = tau_max(d, d1)
    if tau > bound:
        raise ConsistencyError(f"tau = {tau} exceeds tau_max({d}, {d1}) = {bound}")

    free_by_tau = None
    if 2 * d1 < d:
        free_by_tau = is_free(d, d1, tau)
        if free_by_tau != free:
            raise ConsistencyError(
                f"type {t} says free={free} but tau = {tau} vs tau_max = {bound} says {free_by_tau}"
            )
    if free:
        if len(gens) != 2 or d1 + d2 != d - 1 or tau != d1 * d1 - d1 * (d - 1) + (d - 1) ** 2:
            raise ConsistencyError(f"free curve with inconsistent data: exponents {gens}, tau {tau}")

    h = None
    pog_by_tau = None
    note = ""
    if len(gens) == 3:
        h = gens[2] - gens[1] + 1
        pog_by_tau = is_pog_by_tau(d, *gens, tau)
        if pog_by_tau != pog:
            raise ConsistencyError(
                f"type {t} says pog={pog} but the three-syzygy tau formula gives "
                f"{pog_tau(d, *gens)} against tau = {tau}"
            )
    elif pog:
        raise ConsistencyError(f"type 1 with {len(gens)} generators; expected exactly three")
    if len(gens) > 3:
        note = f"{len(gens)} minimal generators, type {t} >= 2: outside the free / plus-one generated theorems"
    return ClassificationReport(
        d=d, d1=d1, gen_degrees=gens, tau=tau, tau_max=bound, type_t=t,
        is_free=free, is_pog=pog, h=h, free_by_tau=free_by_tau,
        pog_by_tau=pog_by_tau, note=note,
    )


def classify(a: Arrangement, r_max: int | None = None) -> ClassificationReport:
    if a.d < 3:
        raise ValueError("classification needs d >= 3")
    return report_from_analysis(syzygy.analyze(a, r_max))

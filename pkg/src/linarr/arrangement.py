"""Line arrangements in the rational projective plane and their combinatorics."""

from __future__ import annotations

import random
from functools import lru_cache
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, gcd, lcm
from typing import Iterable, Mapping, Sequence

from .exactla import to_rational

IntTriple = tuple[int, int, int]


class IdenticalLinesError(ValueError):
    pass


class DuplicateLineError(ValueError):
    def __init__(self, first: int, second: int):
        super().__init__(f"lines {first} and {second} define the same projective line")
        self.first = first
        self.second = second


class GenerationError(ValueError):
    pass


def canonical_triple(values: Sequence) -> IntTriple:
    """Scale a nonzero rational triple to coprime integers, leading entry positive."""
    qs = [to_rational(v) for v in values]
    if len(qs) != 3:
        raise ValueError(f"expected three coordinates, got {len(qs)}")
    if not any(qs):
        raise ValueError("the zero triple is not a projective point or line")
    den = lcm(*(q.denominator for q in qs))
    ints = [int(q * den) for q in qs]
    g = gcd(*ints)
    ints = [i // g for i in ints]
    lead = next(i for i in ints if i)
    if lead < 0:
        ints = [-i for i in ints]
    return (ints[0], ints[1], ints[2])


@dataclass(frozen=True, order=True, init=False)
class ProjectiveLine:
    """The line a·x + b·y + c·z = 0, stored canonically."""

    coeffs: IntTriple

    def __init__(self, a, b=None, c=None):
        triple = tuple(a) if b is None and c is None else (a, b, c)
        object.__setattr__(self, "coeffs", canonical_triple(triple))

    def evaluate(self, point: Sequence) -> Fraction:
        return sum((c * to_rational(p) for c, p in zip(self.coeffs, point)), Fraction(0))

    def contains(self, point: Sequence) -> bool:
        return self.evaluate(point) == 0

    def __repr__(self):
        return f"ProjectiveLine{self.coeffs}"


@dataclass(frozen=True, init=False)
class Arrangement:
    lines: tuple[ProjectiveLine, ...]

    def __init__(self, lines: Iterable):
        ls = tuple(l if isinstance(l, ProjectiveLine) else ProjectiveLine(l) for l in lines)
        if not ls:
            raise ValueError("an arrangement needs at least one line")
        seen: dict[IntTriple, int] = {}
        for i, l in enumerate(ls):
            if l.coeffs in seen:
                raise DuplicateLineError(seen[l.coeffs], i)
            seen[l.coeffs] = i
        object.__setattr__(self, "lines", ls)

    @property
    def d(self) -> int:
        return len(self.lines)

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)


@dataclass(frozen=True)
class SingularPoint:
    point: IntTriple
    multiplicity: int
    incident: frozenset[int]


@dataclass(frozen=True)
class MultiplicityProfile:
    """Counts t_r of r-fold points of an arrangement of d lines.

    ``t`` is normalized to hold every r in 2..d (zeros included); indexing
    the profile with any r returns t_r, 0 outside that range.  Pass
    ``strict=False`` for hypothetical profiles that need not satisfy the
    pair-count identity.
    """

    d: int
    t: Mapping[int, int]
    strict: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive")
        t = {int(r): int(n) for r, n in dict(self.t).items()}
        for r, n in t.items():
            if n < 0:
                raise ValueError(f"negative count t_{r} = {n}")
            if n and not 2 <= r <= self.d:
                raise ValueError(f"t_{r} = {n} but multiplicities lie in 2..{self.d}")
        full = {r: t.get(r, 0) for r in range(2, self.d + 1)}
        object.__setattr__(self, "t", full)
        if self.strict and self.pair_count() != comb(self.d, 2):
            raise ValueError(
                f"pair count {self.pair_count()} != C({self.d},2) = {comb(self.d, 2)}"
            )

    @classmethod
    def hypothetical(cls, d: int, t: Mapping[int, int]) -> "MultiplicityProfile":
        return cls(d, t, strict=False)

    def __getitem__(self, r: int) -> int:
        return self.t.get(r, 0)

    def __hash__(self):
        return hash((self.d, tuple(sorted(self.t.items()))))

    def pair_count(self) -> int:
        return sum(comb(r, 2) * n for r, n in self.t.items())

    def satisfies_pair_identity(self) -> bool:
        return self.pair_count() == comb(self.d, 2)

    @property
    def max_multiplicity(self) -> int:
        return max((r for r, n in self.t.items() if n), default=0)

    def nonzero(self) -> dict[int, int]:
        return {r: n for r, n in self.t.items() if n}


def intersect(l1: ProjectiveLine, l2: ProjectiveLine) -> IntTriple:
    """Common point of two distinct lines: the cross product of their coefficients."""
    a1, b1, c1 = l1.coeffs
    a2, b2, c2 = l2.coeffs
    cross = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)
    if cross == (0, 0, 0):
        raise IdenticalLinesError(f"{l1} and {l2} coincide")
    return canonical_triple(cross)


def singular_points(a: Arrangement) -> list[SingularPoint]:
    if a.d < 2:
        raise ValueError("singular points need at least two lines")
    incident: dict[IntTriple, set[int]] = defaultdict(set)
    for i, j in combinations(range(a.d), 2):
        p = intersect(a.lines[i], a.lines[j])
        incident[p].update((i, j))
    return [
        SingularPoint(p, len(idx), frozenset(idx))
        for p, idx in sorted(incident.items())
    ]


def profile(a: Arrangement) -> MultiplicityProfile:
    counts = Counter(p.multiplicity for p in singular_points(a))
    return MultiplicityProfile(a.d, counts)


def per_line_profile(a: Arrangement, line_index: int, points: list[SingularPoint] | None = None) -> dict[int, int]:
    """Map r -> number of r-fold points lying on the given line."""
    if not 0 <= line_index < a.d:
        raise IndexError(f"line index {line_index} out of range for d={a.d}")
    if points is None:
        points = singular_points(a)
    counts = Counter(p.multiplicity for p in points if line_index in p.incident)
    return dict(sorted(counts.items()))


def tau_combinatorial(p: MultiplicityProfile) -> int:
    """Total Tjurina number when every point is ordinary: sum of (r-1)^2 t_r."""
    return sum((r - 1) ** 2 * n for r, n in p.t.items())


@lru_cache(maxsize=None)
def _count_distinct_lines(bound: int) -> int:
    # primitive integer vectors in the box, up to sign
    primitive = sum(1 for v in product(range(-bound, bound + 1), repeat=3) if gcd(*v) == 1)
    return primitive // 2


def random_arrangement(d: int, seed, coeff_bound: int = 3) -> Arrangement:
    """d distinct lines with integer coefficients in [-coeff_bound, coeff_bound].

    Duplicate lines are rejected and resampled; coincidences of intersection
    points are kept, since degenerate profiles are the interesting ones.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    # boxes with coeff_bound >= 1 hold at least the 13 lines with entries in {-1, 0, 1};
    # past bound 30 there are over 10^5 lines
    if d > 13 and coeff_bound <= 30:
        available = _count_distinct_lines(coeff_bound)
        if d > available:
            raise GenerationError(
                f"only {available} distinct lines have coefficients in [-{coeff_bound}, {coeff_bound}]"
            )
    rng = random.Random(seed)
    chosen: dict[IntTriple, ProjectiveLine] = {}
    while len(chosen) < d:
        v = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(3))
        if not any(v):
            continue
        line = ProjectiveLine(v)
        chosen.setdefault(line.coeffs, line)
    return Arrangement(chosen.values())


def clustered_arrangement(d: int, seed, centers: int = 2, per_center: int = 5,
                          coeff_bound: int = 3) -> Arrangement:
    """Up to d lines, ``per_center`` of them through each of a few random points.

    Lines through a center P are P x Q for random integer Q, so every center
    becomes a point of multiplicity at least ``per_center`` (unless two centers
    share lines).  Remaining lines are drawn as in :func:`random_arrangement`.
    """
    if d < 1 or centers < 0 or per_center < 1:
        raise ValueError("need d >= 1, centers >= 0, per_center >= 1")
    rng = random.Random(seed)

    def draw():
        while True:
            v = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(3))
            if any(v):
                return v

    chosen: dict[IntTriple, ProjectiveLine] = {}
    for _ in range(centers):
        p = draw()
        through = 0
        attempts = 0
        while through < per_center and len(chosen) < d and attempts < 1000:
            attempts += 1
            q = draw()
            v = (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])
            if not any(v):
                continue
            line = ProjectiveLine(v)
            if line.coeffs not in chosen:
                chosen[line.coeffs] = line
                through += 1
    attempts = 0
    while len(chosen) < d:
        attempts += 1
        if attempts > 100000:
            raise GenerationError(f"could not find {d} distinct lines")
        line = ProjectiveLine(draw())
        chosen.setdefault(line.coeffs, line)
    return Arrangement(chosen.values())

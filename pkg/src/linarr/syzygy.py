"""Jacobian syzygies, Milnor algebra Hilbert function and Tjurina number.

Everything is graded linear algebra on coefficient matrices.  For a form f of
degree d the Jacobian map in degree r is

    (S_r)^3 -> S_{r+d-1},  (a, b, c) |-> a f_x + b f_y + c f_z,

with S_n the forms of degree n in x, y, z.  Its kernel is AR(f)_r and its
cokernel in target degree k = r + d - 1 is M(f)_k.  Monomials of each degree
are listed in descending lexicographic order of exponent triples; the
columns of the map are three blocks (a, b, c) of dim S_r columns each.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from typing import Mapping

from . import exactla
from .arrangement import Arrangement

Exponent = tuple[int, int, int]


class SyzygyTruncationError(RuntimeError):
    """New generators appeared at the search cap, so more may exist above it."""

    def __init__(self, r_max: int, degrees: tuple[int, ...]):
        super().__init__(
            f"minimal generators still appearing in degree {r_max}; "
            f"rerun with a larger r_max (found so far: {list(degrees)})"
        )
        self.r_max = r_max
        self.degrees = degrees


class NonStabilizedError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def monomials(n: int) -> tuple[Exponent, ...]:
    if n < 0:
        return ()
    return tuple((i, j, n - i - j) for i in range(n, -1, -1) for j in range(n - i, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(n: int) -> dict[Exponent, int]:
    return {m: i for i, m in enumerate(monomials(n))}


def dim_forms(n: int) -> int:
    return comb(n + 2, 2) if n >= 0 else 0


@dataclass(frozen=True)
class HomogeneousPolynomial:
    degree: int
    terms: Mapping[Exponent, Fraction]

    def __post_init__(self):
        clean = {}
        for e, c in dict(self.terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != 3 or min(e) < 0 or sum(e) != self.degree:
                raise ValueError(f"exponent {e} does not have degree {self.degree}")
            c = exactla.to_rational(c)
            if c:
                clean[e] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))

    @classmethod
    def linear(cls, a, b, c) -> "HomogeneousPolynomial":
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def one(cls) -> "HomogeneousPolynomial":
        return cls(0, {(0, 0, 0): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            q = exactla.to_rational(other)
            return HomogeneousPolynomial(self.degree, {e: c * q for e, c in self.terms.items()})
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return HomogeneousPolynomial(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __add__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return HomogeneousPolynomial(self.degree, out)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, tuple(self.terms.items())))

    def derivative(self, var: int) -> "HomogeneousPolynomial":
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                e2 = list(e)
                e2[var] -= 1
                out[tuple(e2)] = c * e[var]
        return HomogeneousPolynomial(max(self.degree - 1, 0), out)

    def times_variable(self, var: int) -> "HomogeneousPolynomial":
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[var] += 1
            out[tuple(e2)] = c
        return HomogeneousPolynomial(self.degree + 1, out)

    def coefficient_vector(self) -> tuple[Fraction, ...]:
        return tuple(self.terms.get(m, Fraction(0)) for m in monomials(self.degree))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j, k), c in self.terms.items():
            mono = "*".join(v + (f"^{p}" if p > 1 else "") for v, p in zip("xyz", (i, j, k)) if p)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def defining_polynomial(a: Arrangement) -> HomogeneousPolynomial:
    f = HomogeneousPolynomial.one()
    for line in a.lines:
        f = f * HomogeneousPolynomial.linear(*line.coeffs)
    return f


def partials(f: HomogeneousPolynomial) -> tuple[HomogeneousPolynomial, HomogeneousPolynomial, HomogeneousPolynomial]:
    if f.degree < 1:
        raise ValueError("partials of a constant are not graded pieces of J_f")
    return f.derivative(0), f.derivative(1), f.derivative(2)


class JacobianMaps:
    """The graded Jacobian maps of one form, with per-degree caches."""

    def __init__(self, f: HomogeneousPolynomial):
        if f.degree < 1:
            raise ValueError("need a form of positive degree")
        self.f = f
        self.d = f.degree
        # rescaling f to integer coefficients changes neither AR(f) nor J_f
        den = lcm(*(c.denominator for c in f.terms.values())) if f.terms else 1
        self._partials = [
            {e: int(c * den) for e, c in g.terms.items()} for g in partials(f)
        ]
        self._ranks: dict[int, int] = {}
        self._kernels: dict[int, tuple[list, list[int]]] = {}

    def matrix_data(self, r: int) -> tuple[int, int, list[int]]:
        """Row-major integer entries of the degree-r Jacobian map."""
        target = monomial_index(r + self.d - 1)
        src = monomials(r)
        n = len(src)
        rows, cols = len(target), 3 * n
        data = [0] * (rows * cols)
        for block, g in enumerate(self._partials):
            for j, m in enumerate(src):
                col = block * n + j
                for e, c in g.items():
                    data[target[(e[0] + m[0], e[1] + m[1], e[2] + m[2])] * cols + col] = c
        return rows, cols, data

    def matrix(self, r: int) -> exactla.Matrix:
        rows, cols, data = self.matrix_data(r)
        return exactla.Matrix(rows, cols, tuple(Fraction(x) for x in data))

    def rank(self, r: int) -> int:
        if r < 0:
            return 0
        if r not in self._ranks:
            if r in self._kernels:
                self._ranks[r] = 3 * dim_forms(r) - len(self._kernels[r][0])
            else:
                self._ranks[r] = exactla.integer_rank(*self.matrix_data(r))
        return self._ranks[r]

    def kernel(self, r: int) -> tuple[list, list[int]]:
        if r not in self._kernels:
            self._kernels[r] = exactla.reduced_kernel_integer(*self.matrix_data(r), integral=True)
            self._ranks[r] = 3 * dim_forms(r) - len(self._kernels[r][0])
        return self._kernels[r]

    def ar_dimension(self, r: int) -> int:
        if r < 0:
            return 0
        return 3 * dim_forms(r) - self.rank(r)

    def milnor_hilbert(self, k: int) -> int:
        if k < 0:
            return 0
        return dim_forms(k) - self.rank(k - self.d + 1)

    def mdr(self) -> int:
        for r in range(self.d):
            if self.ar_dimension(r) > 0:
                return r
        raise RuntimeError(f"no Jacobian syzygy below degree {self.d}; is f a nonzero form?")

    def _products_in_kernel_coords(self, r: int) -> list[list[int]]:
        """x·s, y·s, z·s for s in the degree r-1 kernel basis, as coordinates in AR(f)_r.

        Coordinates are read off at the free columns of the reduced degree-r
        kernel basis.
        """
        prev, _ = self.kernel(r - 1)
        _, free = self.kernel(r)
        if not prev or not free:
            return []
        src_prev = monomials(r - 1)
        idx_r = monomial_index(r)
        n_r = len(idx_r)
        where = {col: pos for pos, col in enumerate(free)}
        # shift[v][j]: column in degree r of (monomial j of degree r-1) times variable v
        shift = []
        for v in range(3):
            cols = []
            for block in range(3):
                for m in src_prev:
                    mm = list(m)
                    mm[v] += 1
                    cols.append(block * n_r + idx_r[tuple(mm)])
            shift.append(cols)
        zero = 0
        out = []
        for s in prev:
            support = [(j, c) for j, c in enumerate(s) if c]
            for v in range(3):
                row = [zero] * len(free)
                cols = shift[v]
                for j, c in support:
                    pos = where.get(cols[j])
                    if pos is not None:
                        row[pos] = c
                out.append(row)
        return out

    def generated_dimension(self, r: int) -> int:
        """dim of S_1·AR(f)_{r-1}, the part of AR(f)_r generated from lower degrees."""
        if r <= 0:
            return 0
        rows = self._products_in_kernel_coords(r)
        n = len(self.kernel(r)[1])
        return exactla.integer_rank(len(rows), n, [c for row in rows for c in row])

    def minimal_generator_degrees(self, r_max: int | None = None) -> tuple[int, ...]:
        if r_max is None:
            r_max = 2 * self.d
        if r_max < self.d - 1:
            raise ValueError(f"r_max = {r_max} is below d - 1 = {self.d - 1}")
        degrees: list[int] = []
        new = 0
        for r in range(r_max + 1):
            self.kernel(r)
            new = self.ar_dimension(r) - self.generated_dimension(r)
            degrees.extend([r] * new)
        if new > 0:
            raise SyzygyTruncationError(r_max, tuple(degrees))
        return tuple(degrees)

    def tau(self) -> int:
        d = self.d
        values = [self.milnor_hilbert(k) for k in (3 * d - 4, 3 * d - 3, 3 * d - 2)]
        if len(set(values)) != 1:
            raise NonStabilizedError(
                f"Milnor algebra Hilbert function not stable at degrees "
                f"{3 * d - 4}..{3 * d - 2}: {values}; is f reduced?"
            )
        return values[0]


def ar_dimension(f: HomogeneousPolynomial, r: int) -> int:
    """dim AR(f)_r, the degree-r Jacobian syzygies."""
    if r < 0:
        raise ValueError("degree must be nonnegative")
    return JacobianMaps(f).ar_dimension(r)


def ar_basis(f: HomogeneousPolynomial, r: int) -> list[tuple[HomogeneousPolynomial, ...]]:
    """A basis of AR(f)_r as triples (a, b, c) of degree-r forms."""
    maps = JacobianMaps(f)
    basis, _ = exactla.reduced_kernel(maps.matrix(r))
    mons = monomials(r)
    n = len(mons)
    out = []
    for v in basis:
        out.append(tuple(
            HomogeneousPolynomial(r, {m: v[block * n + j] for j, m in enumerate(mons)})
            for block in range(3)
        ))
    return out


def mdr(f: HomogeneousPolynomial) -> int:
    return JacobianMaps(f).mdr()


def minimal_generator_degrees(f: HomogeneousPolynomial, r_max: int | None = None) -> tuple[int, ...]:
    """Degrees d_1 <= ... <= d_m of a minimal generating set of AR(f).

    Works degree by degree: the number of new generators in degree r is
    dim AR(f)_r minus the dimension of x, y, z times AR(f)_{r-1}.  The search
    stops at ``r_max`` (default 2d) and raises
    :class:`SyzygyTruncationError` if generators are still appearing there.
    """
    return JacobianMaps(f).minimal_generator_degrees(r_max)


def milnor_hilbert(f: HomogeneousPolynomial, k: int) -> int:
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return JacobianMaps(f).milnor_hilbert(k)


def tau_algebraic(f: HomogeneousPolynomial) -> int:
    """Total Tjurina number: the stable value of the Milnor algebra's Hilbert function."""
    return JacobianMaps(f).tau()


@dataclass(frozen=True)
class SyzygyAnalysis:
    d: int
    mdr: int
    ar_dims: dict[int, int]
    gen_degrees: tuple[int, ...]
    milnor_dims: dict[int, int]
    tau: int
    r_max: int

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.gen_degrees


def analyze(a: Arrangement, r_max: int | None = None) -> SyzygyAnalysis:
    if a.d < 2:
        raise ValueError("syzygy analysis needs at least two lines")
    maps = JacobianMaps(defining_polynomial(a))
    d = a.d
    if r_max is None:
        r_max = 2 * d
    gens = maps.minimal_generator_degrees(r_max)
    return SyzygyAnalysis(
        d=d,
        mdr=maps.mdr(),
        ar_dims={r: maps.ar_dimension(r) for r in range(r_max + 1)},
        gen_degrees=gens,
        milnor_dims={k: maps.milnor_hilbert(k) for k in range(3 * d - 1)},
        tau=maps.tau(),
        r_max=r_max,
    )

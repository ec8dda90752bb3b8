"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Matrices are immutable and dense;
elimination is delegated to FLINT's fraction-free integer routines after
clearing denominators row by row, which leaves rank and null space unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

import flint

Rational = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they carry binary rounding that would silently
    poison equality tests downstream.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"not an integer or p/q rational: {value!r}") from None
        if q == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return Fraction(n, q)
    if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, float):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        if not all(type(e) is Fraction for e in self.entries):
            object.__setattr__(self, "entries", tuple(to_rational(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(to_rational(e) for r in rows for e in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_sparse(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_sparse(cls, rows: int, cols: int, values: Mapping[tuple[int, int], object]) -> "Matrix":
        buf = [_ZERO] * (rows * cols)
        for (i, j), v in values.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            buf[i * cols + j] = to_rational(v)
        return cls(rows, cols, tuple(buf))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def apply(self, v: Sequence) -> Vector:
        """Return the product m·v."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.cols} columns")
        v = [to_rational(x) for x in v]
        return tuple(
            sum((a * b for a, b in zip(self.row(i), v) if a and b), _ZERO)
            for i in range(self.rows)
        )


def _integer_rows(rows: Iterable[Sequence[Fraction]], cols: int) -> "flint.fmpz_mat":
    data = []
    nrows = 0
    for r in rows:
        scale = lcm(*(q.denominator for q in r)) if cols else 1
        data.extend(int(q.numerator * (scale // q.denominator)) for q in r)
        nrows += 1
    return flint.fmpz_mat(nrows, cols, data)


def _fmpz(m: Matrix) -> "flint.fmpz_mat":
    return _integer_rows((m.row(i) for i in range(m.rows)), m.cols)


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return int(_fmpz(m).rank())


def rank_of_rows(rows: Sequence[Sequence], cols: int) -> int:
    """Rank of the matrix whose rows are given, without building a Matrix."""
    if not rows or cols == 0:
        return 0
    return int(_integer_rows(([to_rational(e) for e in r] for r in rows), cols).rank())


def integer_rank(rows: int, cols: int, data: Sequence[int]) -> int:
    """Rank of an integer matrix given row-major; fast path for big sparse builds."""
    if rows == 0 or cols == 0:
        return 0
    return int(flint.fmpz_mat(rows, cols, list(data)).rank())


def reduced_kernel_integer(rows: int, cols: int, data: Sequence[int], integral: bool = False):
    """Null space of an integer matrix in reduced form.

    Returns ``(basis, free)``: basis vector ``i`` has a 1 at column
    ``free[i]`` and 0 at every other free column, so the coordinates of any
    kernel element in this basis are just its entries at the free columns.
    With ``integral=True`` the vectors are integer tuples, all scaled by the
    same positive factor (the common denominator of the RREF).
    """
    if cols == 0:
        return [], []
    if rows == 0:
        R, den, rk = [], 1, 0
    else:
        M, den, rk = flint.fmpz_mat(rows, cols, list(data)).rref()
        R = [int(x) for x in M.entries()]
        den, rk = int(den), int(rk)
        if den < 0:
            R, den = [-x for x in R], -den
    pivots = []
    for i in range(rk):
        base = i * cols
        j = 0
        while R[base + j] == 0:
            j += 1
        pivots.append(j)
    pivot_set = set(pivots)
    free = [j for j in range(cols) if j not in pivot_set]
    basis = []
    for j in free:
        if integral:
            v = [0] * cols
            v[j] = den
            for i, p in enumerate(pivots):
                v[p] = -R[i * cols + j]
        else:
            v = [_ZERO] * cols
            v[j] = Fraction(1)
            for i, p in enumerate(pivots):
                c = R[i * cols + j]
                if c:
                    v[p] = Fraction(-c, den)
        basis.append(tuple(v))
    return basis, free


def reduced_kernel(m: Matrix) -> tuple[list[Vector], list[int]]:
    if m.rows == 0:
        return reduced_kernel_integer(0, m.cols, [])
    M = _fmpz(m)
    return reduced_kernel_integer(m.rows, m.cols, [int(x) for x in M.entries()])


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right null space {v : m·v = 0}."""
    return reduced_kernel(m)[0]


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    v = [to_rational(x) for x in v]
    if any(len(b) != len(v) for b in basis):
        raise ValueError("dimension mismatch between vector and basis")
    if not any(v):
        return True
    if not basis:
        return False
    n = len(v)
    return rank_of_rows(list(basis) + [v], n) == rank_of_rows(basis, n)

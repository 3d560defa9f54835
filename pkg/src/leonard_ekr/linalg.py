"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Vectors are tuples of fractions,
matrices are immutable :class:`Matrix` values, and subspaces are kept in
reduced row-echelon form so that two subspaces are equal exactly when their
canonical bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


class InconsistentSystem(ValueError):
    """Raised by :func:`solve_linear` when the system has no solution."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q' strings")
    return Fraction(x)


def vec(xs: Iterable) -> Vector:
    return tuple(to_fraction(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def add(x: Sequence, y: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def sub(x: Sequence, y: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def scale(c, x: Sequence) -> Vector:
    return tuple(c * a for a in x)


def dot(x: Sequence, y: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(x, y, strict=True)), Fraction(0))


def combination(coeffs: Sequence, vectors: Sequence[Sequence]) -> Vector:
    """Return sum(coeffs[k] * vectors[k])."""
    if not vectors:
        raise ValueError("empty combination has no ambient dimension")
    out = [Fraction(0)] * len(vectors[0])
    for c, v in zip(coeffs, vectors, strict=True):
        if c:
            for i, a in enumerate(v):
                out[i] += c * a
    return tuple(out)


def is_zero(x: Sequence) -> bool:
    return all(a == 0 for a in x)


def proportionality(x: Sequence, y: Sequence) -> Fraction | None:
    """Return c with x == c*y, or None if no such c exists (y must be nonzero)."""
    k = next((i for i, b in enumerate(y) if b != 0), None)
    if k is None:
        raise ValueError("reference vector is zero")
    c = Fraction(x[k]) / y[k]
    return c if tuple(x) == scale(c, y) else None


@dataclass(frozen=True)
class Matrix:
    """Immutable rational matrix stored row-major."""

    rows: tuple

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(vec(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(unit_vector(n, i) for i in range(n))

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> Matrix:
        return cls([[0] * (m if n is None else n) for _ in range(m)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> Matrix:
        return cls(zip(*columns)) if columns else cls([])

    @classmethod
    def diagonal(cls, entries: Sequence) -> Matrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> Matrix:
        return Matrix(zip(*self.rows)) if self.rows else self

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix(add(a, b) for a, b in zip(self.rows, other.rows, strict=True))

    def __sub__(self, other: Matrix) -> Matrix:
        return Matrix(sub(a, b) for a, b in zip(self.rows, other.rows, strict=True))

    def __neg__(self) -> Matrix:
        return Matrix(scale(-1, r) for r in self.rows)

    def __mul__(self, c) -> Matrix:
        c = to_fraction(c)
        return Matrix(scale(c, r) for r in self.rows)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.columns()
            return Matrix([[dot(r, c) for c in cols] for r in self.rows])
        if len(other) != self.ncols:
            raise ValueError(f"shape mismatch {self.shape} @ vector of length {len(other)}")
        return tuple(dot(r, other) for r in self.rows)

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.rows)

    def flat(self) -> Vector:
        return tuple(a for r in self.rows for a in r)

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> Matrix:
        n = self.nrows
        if n != self.ncols:
            raise ValueError("only square matrices are invertible")
        aug = Matrix(r + unit_vector(n, i) for i, r in enumerate(self.rows))
        red, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix(r[n:] for r in red.rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and the list of pivot columns."""
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [a / p for a in rows[r]]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f != 0:
                pr = rows[r]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return Matrix(rows) if rows else m, pivots


def kernel(m: Matrix) -> Subspace:
    """Right null space of ``m``."""
    red, pivots = rref(m)
    n = m.ncols
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -red[r, f]
        basis.append(tuple(x))
    return Subspace.span(basis, n)


def solve_linear(m: Matrix, rhs: Sequence) -> Vector:
    """Solve ``m x = rhs`` exactly.

    Free variables are set to zero, so the answer is deterministic when the
    solution is not unique.  Raises :class:`InconsistentSystem` if there is
    no solution.
    """
    rhs = vec(rhs)
    if len(rhs) != m.nrows:
        raise ValueError("right-hand side length does not match the row count")
    n = m.ncols
    red, pivots = rref(Matrix(r + (b,) for r, b in zip(m.rows, rhs)))
    if pivots and pivots[-1] == n:
        raise InconsistentSystem("linear system is inconsistent")
    x = [Fraction(0)] * n
    for r, p in enumerate(pivots):
        x[p] = red[r, n]
    return tuple(x)


def coordinates(basis: Sequence[Sequence], x: Sequence) -> Vector:
    """Coefficients of ``x`` in the (linearly independent) ``basis``."""
    return solve_linear(Matrix.from_columns(basis), x)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held by its canonical (reduced row-echelon) basis."""

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
        vectors = [vec(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vectors):
            raise ValueError("vector length differs from the ambient dimension")
        if not vectors:
            return cls(ambient_dim, ())
        red, pivots = rref(Matrix(vectors))
        return cls(ambient_dim, red.rows[: len(pivots)])

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls.span(Matrix.identity(n).rows, n)

    @classmethod
    def column_space(cls, m: Matrix) -> Subspace:
        return cls.span(m.columns(), m.nrows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        _check_ambient(self, other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def __and__(self, other: Subspace) -> Subspace:
        return intersect(self, other)

    def __contains__(self, x) -> bool:
        return Subspace.span(self.basis + (vec(x),), self.ambient_dim).dim == self.dim

    def __le__(self, other: Subspace) -> bool:
        return all(b in other for b in self.basis)

    def generator(self) -> Vector:
        """The single canonical basis vector of a one-dimensional subspace."""
        if self.dim != 1:
            raise ValueError(f"subspace has dimension {self.dim}, expected 1")
        return self.basis[0]


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    # x = sum(alpha_i a_i) = sum(beta_j b_j)  <=>  [A | -B] (alpha, beta) = 0
    cols = list(a.basis) + [scale(-1, y) for y in b.basis]
    ker = kernel(Matrix.from_columns(cols))
    return Subspace.span((combination(k[: a.dim], a.basis) for k in ker.basis), n)


def subspace_sum(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    out = Subspace.zero(ambient_dim)
    for s in spaces:
        out = out + s
    return out

"""
Exact rational linear algebra.

All coordinates of the torus are stored in pi-units (the stored vector of H is H/pi),
so the diagram condition alpha(H) in pi*Z becomes an integrality test.
Nothing in this module touches floating point numbers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, invariant_factors, smith_normal_decomp

from . import errors

Rational = Fraction
RationalVector = tuple[Fraction, ...]
IntegerVector = tuple[int, ...]


def to_rational(value) -> Fraction:
    """
    Convert an int, a Fraction or a string 'p' / 'p/q' into a Fraction.

    Floats and bools are rejected, as they would silently introduce inexact values.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise RuntimeError(errors.INVALID_RATIONAL, value)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise RuntimeError(errors.INVALID_RATIONAL, value) from None
    raise RuntimeError(errors.INVALID_RATIONAL, value)


def format_rational(value: Fraction) -> str:
    """Return 'p/q', or 'p' when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vector(values: Iterable) -> RationalVector:
    return tuple(to_rational(value) for value in values)


def zero_vector(dimension: int) -> RationalVector:
    return (Fraction(0),) * dimension


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> RationalVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> RationalVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(factor, v: Sequence[Fraction]) -> RationalVector:
    return tuple(factor * a for a in v)


def is_integral(value: Fraction) -> bool:
    return Fraction(value).denominator == 1


def is_integral_vector(v: Sequence[Fraction]) -> bool:
    return all(is_integral(a) for a in v)


@dataclass(frozen=True)
class RationalMatrix:
    """A dense matrix of Fractions, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows * self.cols != len(self.entries):
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RationalMatrix:
        """Build a matrix from a list of rows. cols is only needed for matrices without rows."""
        rows = [vector(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise ValueError("All rows must have the same length")
        return cls(len(rows), cols, tuple(entry for row in rows for entry in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> RationalMatrix:
        """Build a matrix whose columns are the supplied vectors, each of length rows."""
        columns = [vector(column) for column in columns]
        if any(len(column) != rows for column in columns):
            raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, rows,
                               next(len(column) for column in columns if len(column) != rows))
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def identity(cls, size: int) -> RationalMatrix:
        return cls(size, size, tuple(Fraction(int(i == j)) for i in range(size) for j in range(size)))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> RationalVector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> RationalVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[RationalVector]:
        return [self.row(i) for i in range(self.rows)]

    def column_list(self) -> list[RationalVector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix.from_rows(self.column_list(), cols=self.rows)

    def apply(self, v: Sequence[Fraction]) -> RationalVector:
        """Return the matrix-vector product."""
        if len(v) != self.cols:
            raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, self.cols, len(v))
        return tuple(sum((a * b for a, b in zip(self.row(i), v)), Fraction(0)) for i in range(self.rows))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, self.cols, other.rows)
        other_columns = other.column_list()
        return RationalMatrix(self.rows, other.cols, tuple(
            sum((a * b for a, b in zip(self.row(i), column)), Fraction(0))
            for i in range(self.rows) for column in other_columns))

    def is_integral(self) -> bool:
        return all(is_integral(entry) for entry in self.entries)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entry(i, j) == self.entry(j, i) for i in range(self.rows) for j in range(i))


@dataclass(frozen=True)
class SmithDecomposition:
    """The abelian group Z^free_rank + Z/d_1 + ... + Z/d_k, with factors equal to 1 omitted."""

    invariant_factors: tuple[int, ...]
    free_rank: int

    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    def order(self) -> int | None:
        """Return the group order, None for infinite groups."""
        if self.free_rank > 0:
            return None
        return math.prod(self.invariant_factors)


def pair(u: Sequence[Fraction], v: Sequence[Fraction], gram: RationalMatrix) -> Fraction:
    """Return the inner product u^T gram v."""
    return sum((a * b for a, b in zip(u, gram.apply(v))), Fraction(0))


def norm_squared(v: Sequence[Fraction], gram: RationalMatrix) -> Fraction:
    return pair(v, v, gram)


def _reduce_rows(matrix: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Return the reduced row echelon form and the pivot columns."""
    rows = [list(row) for row in matrix.row_list()]
    pivots = []
    r = 0
    for col in range(matrix.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        head = rows[r][col]
        rows[r] = [entry / head for entry in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows, pivots


def rank(matrix: RationalMatrix) -> int:
    return len(_reduce_rows(matrix)[1])


def inverse(matrix: RationalMatrix) -> RationalMatrix:
    """Return the inverse of a square invertible matrix (Gauss-Jordan)."""
    size = matrix.rows
    augmented = RationalMatrix.from_rows(
        [row + RationalMatrix.identity(size).row(i) for i, row in enumerate(matrix.row_list())])
    reduced, pivots = _reduce_rows(augmented)
    if matrix.rows != matrix.cols or pivots[:size] != list(range(size)):
        raise RuntimeError(errors.INVALID_RANK_DEFICIENT_BASIS, matrix.cols, matrix.rows)
    return RationalMatrix.from_rows([row[size:] for row in reduced[:size]])


def left_inverse(basis: RationalMatrix) -> RationalMatrix:
    """
    Return L with L * basis = identity, for a basis of full column rank.

    A basis with dependent columns raises INVALID_RANK_DEFICIENT_BASIS.
    """
    if rank(basis) < basis.cols:
        raise RuntimeError(errors.INVALID_RANK_DEFICIENT_BASIS, basis.cols, basis.rows)
    if basis.rows == basis.cols:
        return inverse(basis)
    transposed = basis.transpose()
    return inverse(transposed @ basis) @ transposed


def ldl_decomposition(form: RationalMatrix) -> tuple[list[Fraction], list[list[Fraction]]] | None:
    """
    Decompose a symmetric form as Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.

    Returns (d, mu), or None if the form is not positive definite.
    This is the square-root free Cholesky (LDL^T) decomposition over the rationals.
    """
    size = form.rows
    q = [list(row) for row in form.row_list()]
    for i in range(size):
        if q[i][i] <= 0:
            return None
        for j in range(i + 1, size):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for l in range(i + 1, size):
            for m in range(l, size):
                q[l][m] -= q[l][i] * q[i][m]
    diagonal = [q[i][i] for i in range(size)]
    mu = [[q[i][j] if j > i else Fraction(0) for j in range(size)] for i in range(size)]
    return diagonal, mu


def is_positive_definite(gram: RationalMatrix) -> bool:
    return gram.is_symmetric() and ldl_decomposition(gram) is not None


def solve_in_lattice(basis: RationalMatrix, v: Sequence[Fraction],
                     left: RationalMatrix | None = None) -> IntegerVector | None:
    """
    Return the integer coordinates n with basis * n = v, or None if v is not in the lattice.

    A precomputed left inverse of the basis can be supplied to avoid recomputing it.
    """
    if len(v) != basis.rows:
        raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, basis.rows, len(v))
    if left is None:
        left = left_inverse(basis)
    coordinates = left.apply(v)
    if not is_integral_vector(coordinates):
        return None
    # A non-square basis may not span v at all
    if basis.apply(coordinates) != tuple(v):
        return None
    return tuple(int(c) for c in coordinates)


def _integer_rows(matrix: RationalMatrix) -> list[list[int]]:
    if not matrix.is_integral():
        index = next(k for k, entry in enumerate(matrix.entries) if not is_integral(entry))
        raise RuntimeError(errors.INVALID_NON_INTEGER_ENTRY, format_rational(matrix.entries[index]),
                           index // matrix.cols, index % matrix.cols)
    return [[int(entry) for entry in row] for row in matrix.row_list()]


def smith_normal_form(matrix: RationalMatrix) -> SmithDecomposition:
    """
    Return the invariant factors of Z^cols / (row span of the integer matrix).

    Factors equal to 1 are dropped, free_rank = cols - rank.
    """
    rows = _integer_rows(matrix)
    free_rank = matrix.cols - rank(matrix)
    if matrix.rows == 0 or matrix.cols == 0:
        return SmithDecomposition((), free_rank)
    factors = sorted(abs(int(factor)) for factor in invariant_factors(_domain_matrix(rows, (matrix.rows, matrix.cols))))
    return SmithDecomposition(tuple(factor for factor in factors if factor > 1), free_rank)


def _domain_matrix(rows: list[list[int]], shape: tuple[int, int]) -> DomainMatrix:
    return DomainMatrix([[ZZ(entry) for entry in row] for row in rows], shape, ZZ)


def smith_transforms(matrix: RationalMatrix) -> tuple[list[int], list[list[int]]]:
    """
    Diagonalize the integer matrix by unimodular row and column operations.

    Returns the diagonal of the Smith normal form, one entry per column and 0 for a free
    coordinate, and the column transform V. n -> n V maps Z^cols onto coordinates in which
    the row span becomes d_1 Z + d_2 Z + ...
    """
    rows = _integer_rows(matrix)
    if matrix.rows == 0 or matrix.cols == 0:
        return [0] * matrix.cols, [[int(i == j) for j in range(matrix.cols)] for i in range(matrix.cols)]
    normal_form, _, transform = smith_normal_decomp(_domain_matrix(rows, (matrix.rows, matrix.cols)))
    entries = normal_form.to_list()
    diagonal = [abs(int(entries[j][j])) if j < matrix.rows else 0 for j in range(matrix.cols)]
    return diagonal, [[int(entry) for entry in row] for row in transform.to_list()]


def lattice_basis_from_generators(generators: Sequence[Sequence[Fraction]], dimension: int) -> RationalMatrix:
    """
    Return a basis (as columns) of the Z-span of the supplied rational generators.

    Denominators are cleared and the integer generators are brought into Hermite
    normal form, so equal lattices yield equal bases.
    """
    generators = [vector(g) for g in generators]
    if any(len(g) != dimension for g in generators):
        raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, dimension,
                           next(len(g) for g in generators if len(g) != dimension))
    common = math.lcm(1, *(entry.denominator for g in generators for entry in g))
    columns = [[int(entry * common) for entry in g] for g in generators if any(g)]
    if not columns:
        return RationalMatrix.from_columns([], dimension)

    integer_rows = [[column[i] for column in columns] for i in range(dimension)]
    normal_form = hermite_normal_form(_domain_matrix(integer_rows, (dimension, len(columns)))).to_list()
    return RationalMatrix.from_columns([[Fraction(int(row[j]), common) for row in normal_form]
                                        for j in range(len(normal_form[0]))], dimension)


def enumerate_lattice_points_in_ball(basis: RationalMatrix, gram: RationalMatrix, center: Sequence[Fraction],
                                     radius_squared: Fraction, strict: bool = False) -> list[IntegerVector]:
    """
    Return all integer vectors n with |center + basis * n|^2 <= radius_squared (< when strict).

    The norm is taken with the gram matrix. The search bounds one coordinate at a time
    from the LDL^T decomposition of the lattice form, every comparison is exact.
    The result is sorted lexicographically.
    """
    center = vector(center)
    radius_squared = to_rational(radius_squared)
    if len(center) != basis.rows:
        raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, basis.rows, len(center))
    left_inverse(basis)  # raises for dependent generators

    size = basis.cols
    transposed = basis.transpose()
    form = transposed @ gram @ basis

    # Split the center into its component in the span of the lattice and the orthogonal rest
    if size > 0:
        projected = inverse(form).apply((transposed @ gram).apply(center))
        rest = sub(center, basis.apply(projected))
    else:
        projected = ()
        rest = center
    budget = radius_squared - norm_squared(rest, gram)
    if budget < 0 or (strict and budget == 0):
        return []
    if size == 0:
        return [()]

    diagonal, mu = ldl_decomposition(form)
    found = []
    x = [Fraction(0)] * size
    n = [0] * size

    def search(i: int, remaining: Fraction):
        if i < 0:
            if not strict or remaining > 0:
                found.append(tuple(n))
            return
        shift = -sum((mu[i][j] * x[j] for j in range(i + 1, size)), Fraction(0))
        # |x_i - shift| <= sqrt(remaining / d_i) < bound
        bound = math.isqrt(math.floor(remaining / diagonal[i])) + 1
        middle = shift - projected[i]
        for candidate in range(math.floor(middle) - bound, math.ceil(middle) + bound + 1):
            value = candidate + projected[i]
            term = diagonal[i] * (value - shift) ** 2
            if term > remaining:
                continue
            x[i] = value
            n[i] = candidate
            search(i - 1, remaining - term)

    search(size - 1, budget)
    return sorted(found)

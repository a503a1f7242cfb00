"""Exact dense linear algebra over prime fields F_p and over the rationals.

Matrices are numpy arrays: dtype int64 with entries in [0, p) for a prime
field, dtype object holding ``fractions.Fraction`` for the rationals.  No
floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

__all__ = [
    "Field",
    "Mat",
    "RrefResult",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "solve_matrix",
    "left_inverse",
    "kron",
    "DimensionMismatch",
]


class DimensionMismatch(ValueError):
    """Shapes or fields of the operands do not line up."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Ground field: prime field F_p (p an odd prime) or the rationals (p=None)."""

    p: Optional[int] = 101

    def __post_init__(self):
        if self.p is not None:
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p <= 2:
                raise ValueError("prime fields require p > 2")

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def zeros(self, *shape) -> np.ndarray:
        if self.p is not None:
            return np.zeros(shape, dtype=np.int64)
        a = np.empty(shape, dtype=object)
        a[...] = Fraction(0)
        return a

    def eye(self, n) -> np.ndarray:
        a = self.zeros(n, n)
        for i in range(n):
            a[i, i] = self.one
        return a

    @property
    def one(self):
        return np.int64(1) if self.p is not None else Fraction(1)

    def asarray(self, data) -> np.ndarray:
        """Coerce nested lists / arrays of integers or Fractions into field form."""
        if self.p is not None:
            return np.asarray(data, dtype=np.int64) % self.p
        a = np.array(data, dtype=object, copy=True)
        flat = a.reshape(-1)
        for i, v in enumerate(flat):
            flat[i] = Fraction(v)
        return flat.reshape(a.shape)

    def normalize(self, a: np.ndarray) -> np.ndarray:
        return a % self.p if self.p is not None else a

    def inv_scalar(self, x):
        if self.p is not None:
            return pow(int(x), self.p - 2, self.p)
        return Fraction(1) / x

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        # entries < p = 101 and inner dims stay desk-scale, so int64 cannot overflow
        c = a @ b
        return c % self.p if self.p is not None else c

    def equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        if a.shape != b.shape:
            return False
        return bool(np.all(self.normalize(a - b) == 0))

    def is_zero(self, a: np.ndarray) -> bool:
        return bool(np.all(self.normalize(a) == 0))


@dataclass(frozen=True)
class Mat:
    """Dense matrix over a fixed field; immutable after construction."""

    array: np.ndarray
    field: Field

    def __post_init__(self):
        if self.array.ndim != 2:
            raise DimensionMismatch("Mat requires a 2-d array")
        self.array.setflags(write=False)

    @classmethod
    def from_rows(cls, rows, field: Field) -> "Mat":
        return cls(field.asarray(rows).reshape(len(rows), -1 if rows else 0), field)

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.field != other.field:
            raise DimensionMismatch("field mismatch")
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.array.shape} by {other.array.shape}")
        return Mat(self.field.matmul(self.array, other.array), self.field)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.field == other.field and self.field.equal(self.array, other.array)


@dataclass(frozen=True)
class RrefResult:
    matrix: np.ndarray
    pivots: tuple
    rank: int


def rref(a: np.ndarray, field: Field) -> RrefResult:
    """Reduced row echelon form by exact Gauss-Jordan elimination.

    Returns the reduced matrix, the pivot column indices and the rank.
    Row space is preserved; the result is unique, hence rref is idempotent.
    """
    m = field.normalize(np.array(a, copy=True))
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = field.inv_scalar(m[r, c])
        m[r] = field.normalize(m[r] * inv)
        col = np.array(m[:, c], copy=True)
        col[r] = 0
        mask = col != 0
        if np.any(mask):
            m[mask] = field.normalize(m[mask] - np.outer(col[mask], m[r]))
        pivots.append(c)
        r += 1
    return RrefResult(m, tuple(pivots), r)


def rank(a: np.ndarray, field: Field) -> int:
    return rref(a, field).rank


def kernel_basis(a: np.ndarray, field: Field) -> np.ndarray:
    """Basis of the right null space, returned as columns of a (cols x k) array.

    k = cols - rank; the basis is the standard one read off the rref
    (free coordinate set to 1, pivot coordinates solved).
    """
    r = rref(a, field)
    ncols = a.shape[1]
    free = [c for c in range(ncols) if c not in r.pivots]
    basis = field.zeros(ncols, len(free))
    for j, fc in enumerate(free):
        basis[fc, j] = field.one
        for i, pc in enumerate(r.pivots):
            basis[pc, j] = field.normalize(-r.matrix[i, fc])
    return basis


def solve(a: np.ndarray, b: np.ndarray, field: Field) -> Optional[np.ndarray]:
    """One exact solution x of a @ x = b, or None if the system is inconsistent."""
    b = np.asarray(b)
    if b.ndim != 1 or b.shape[0] != a.shape[0]:
        raise DimensionMismatch(f"rhs of length {b.shape} does not match {a.shape[0]} rows")
    x = solve_matrix(a, b.reshape(-1, 1), field)
    return None if x is None else x[:, 0]


def solve_matrix(a: np.ndarray, b: np.ndarray, field: Field) -> Optional[np.ndarray]:
    """Solve a @ X = B column-wise; None if any column is inconsistent."""
    if b.shape[0] != a.shape[0]:
        raise DimensionMismatch("row counts differ")
    ncols = a.shape[1]
    aug = np.concatenate([field.normalize(np.array(a, copy=True)), field.normalize(np.array(b, copy=True))], axis=1)
    r = rref(aug, field)
    if any(p >= ncols for p in r.pivots):
        return None
    x = field.zeros(ncols, b.shape[1])
    for i, pc in enumerate(r.pivots):
        x[pc] = r.matrix[i, ncols:]
    return x


def left_inverse(a: np.ndarray, field: Field) -> np.ndarray:
    """X with X @ a = I for a matrix of full column rank."""
    nrows, ncols = a.shape
    aug = np.concatenate([field.normalize(np.array(a, copy=True)), field.eye(nrows)], axis=1)
    r = rref(aug, field)
    if len([p for p in r.pivots if p < ncols]) != ncols:
        raise DimensionMismatch("matrix does not have full column rank")
    return r.matrix[:ncols, ncols:]


def kron(a: np.ndarray, b: np.ndarray, field: Field) -> np.ndarray:
    """Kronecker product in the fixed lexicographic ordering (left index major)."""
    return field.normalize(np.kron(a, b))


def column_space_basis(a: np.ndarray, field: Field) -> np.ndarray:
    """Deterministic basis of the column space: the pivot columns of a."""
    r = rref(a.T, field)
    return r.matrix[: r.rank].T


def intersect_kernels(mats, ncols: int, field: Field) -> np.ndarray:
    """Basis (as columns) of the common right null space of a list of matrices.

    Computed incrementally: the kernel shrinks quickly, so later systems are
    tiny even when the stacked system would be large.
    """
    basis = field.eye(ncols)
    for m in mats:
        if basis.shape[1] == 0:
            break
        restricted = field.matmul(m, basis)
        k = kernel_basis(restricted, field)
        basis = field.matmul(basis, k)
    return basis


def in_span(span_rows: np.ndarray, v: np.ndarray, field: Field) -> bool:
    """Is the vector v in the row space given by span_rows?"""
    if span_rows.shape[0] == 0:
        return field.is_zero(v)
    return solve(span_rows.T, v, field) is not None

"""Dense matrices over a finite field and exact Gaussian elimination."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from agtrellis.errors import IndexOutOfRange, MixedFields, ShapeMismatch
from agtrellis.field import Field, FieldElement


class Matrix:
    """Immutable rows x cols matrix of field-element indices."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data, cols: int | None = None):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and cols is not None:
            arr = arr.reshape(-1, cols) if arr.size else np.zeros((0, cols), dtype=np.int64)
        if arr.ndim != 2:
            raise ShapeMismatch(f"expected a 2-d array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries must be indices in [0, {field.q})")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> Matrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: Field, size: int) -> Matrix:
        return cls(field, np.eye(size, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, int(self.data[i, j]))

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.tolist()})"

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    @property
    def T(self) -> Matrix:
        return transpose(self)

    def submatrix(self, cols: Sequence[int]) -> Matrix:
        return Matrix(self.field, self.data[:, list(cols)].reshape(self.rows, len(cols)))

    def is_zero(self) -> bool:
        return not self.data.any()

    def rref(self) -> tuple[Matrix, int, list[int]]:
        return rref(self)

    @property
    def rank(self) -> int:
        return len(pivot_columns(self.field, self.data))


def eliminate(field: Field, data: np.ndarray, order: Iterable[int] | None = None,
              reduced: bool = True) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination visiting columns in ``order``.

    Pivots are taken greedily, first nonzero row, so the number of pivots
    among the first t visited columns is the rank of those t columns.
    With ``reduced=False`` only rows below each pivot are cleared and the
    pivot is not normalised, which is all a rank computation needs.
    """
    a = np.array(data, dtype=np.int64, copy=True)
    rows = a.shape[0]
    cols = range(a.shape[1]) if order is None else order
    pivots: list[int] = []
    r = 0
    for c in cols:
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        if reduced:
            a[r] = field.mul(a[r], field.inv(int(a[r, c])))
            targets = np.flatnonzero(a[:, c])
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.flatnonzero(a[r + 1:, c])
        if targets.size:
            factors = a[targets, c]
            if not reduced:
                factors = field.mul(factors, field.inv(int(a[r, c])))
            a[targets] = field.sub(a[targets], field.mul(factors[:, None], a[r][None, :]))
        pivots.append(int(c))
        r += 1
    return a, pivots


def pivot_columns(field: Field, data: np.ndarray, order: Iterable[int] | None = None) -> list[int]:
    return eliminate(field, data, order, reduced=False)[1]


def rref(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns (strictly increasing)."""
    a, pivots = eliminate(M.field, M.data)
    return Matrix(M.field, a), len(pivots), pivots


def rank(M: Matrix) -> int:
    return M.rank


def rank_of_columns(M: Matrix, cols: Iterable[int]) -> int:
    cols = sorted(set(int(c) for c in cols))
    for c in cols:
        if not 0 <= c < M.cols:
            raise IndexOutOfRange(f"column {c} outside 0..{M.cols - 1}")
    if not cols:
        return 0
    return len(pivot_columns(M.field, M.data[:, cols]))


def kernel_basis(M: Matrix) -> Matrix:
    """Rows spanning {v : M v^T = 0}, one per non-pivot column."""
    field = M.field
    R, rk, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), M.cols), dtype=np.int64)
    for t, fc in enumerate(free):
        basis[t, fc] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = field.neg(int(R.data[i, fc]))
    return Matrix(field, basis.reshape(len(free), M.cols))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.field != B.field:
        raise MixedFields(f"{A.field!r} vs {B.field!r}")
    if A.cols != B.rows:
        raise ShapeMismatch(f"cannot multiply {A.shape} by {B.shape}")
    field = A.field
    prod = field.mul(A.data[:, :, None], B.data[None, :, :])
    return Matrix(field, np.asarray(field.sum(prod, axis=1)).reshape(A.rows, B.cols))


def transpose(M: Matrix) -> Matrix:
    return Matrix(M.field, M.data.T.copy())

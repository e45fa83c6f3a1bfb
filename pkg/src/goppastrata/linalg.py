"""Dense exact linear algebra over GF(q).

Entries are stored as element indices (see :mod:`goppastrata.galois`).
Pivoting is deterministic: the first nonzero entry in column order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FieldMismatch, IndexOutOfRange, LengthMismatch
from .galois import FieldElement, FieldSpec


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence[int | FieldElement]], ncols: int | None = None) -> Matrix:
        out = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not out:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(out[0])
        for r in out:
            if len(r) != ncols:
                raise LengthMismatch(f"ragged row of length {len(r)}, expected {ncols}")
            for x in r:
                if not 0 <= x < field.q:
                    raise IndexOutOfRange(f"entry {x} is not an element of {field}")
        return cls(field, out, ncols)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> Matrix:
        return cls(field, tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        return cls(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> Matrix:
        return Matrix(self.field, tuple(self.columns()), self.nrows)

    def __matmul__(self, other: Matrix) -> Matrix:
        if other.field != self.field:
            raise FieldMismatch("matrix fields differ")
        if self.ncols != other.nrows:
            raise LengthMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        dot = self.field.dot
        return Matrix(self.field, tuple(tuple(dot(r, c) for c in cols) for r in self.rows), other.ncols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product A v."""
        if len(v) != self.ncols:
            raise LengthMismatch(f"vector of length {len(v)} for {self.ncols} columns")
        dot = self.field.dot
        return tuple(dot(r, v) for r in self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def to_json(self) -> dict:
        return {"field": self.field.describe(), "rows": self.nrows, "cols": self.ncols, "entries": [list(r) for r in self.rows]}

    def __str__(self) -> str:
        width = len(str(self.field.q - 1))
        return "\n".join(" ".join(f"{x:>{width}}" for x in r) for r in self.rows)


def _rref_lists(field: FieldSpec, rows: list[list[int]], ncols: int) -> list[int]:
    """Row-reduce ``rows`` in place; return pivot columns."""
    mul, sub, inv = field.mul_table, field.sub_table, field.inv_table
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != 1:
            m = mul[inv[lead]]
            rows[r] = [m[x] for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f:
                mf = mul[f]
                rows[i] = [sub[a][mf[b]] for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(A: Matrix) -> tuple[Matrix, list[int]]:
    rows = [list(r) for r in A.rows]
    pivots = _rref_lists(A.field, rows, A.ncols)
    return Matrix(A.field, tuple(tuple(r) for r in rows), A.ncols), pivots


def rank(A: Matrix) -> int:
    return len(_rref_lists(A.field, [list(r) for r in A.rows], A.ncols))


def rank_of_columns(field: FieldSpec, cols: Sequence[Sequence[int]]) -> int:
    """Rank of the matrix whose columns are ``cols`` (row-reduces the transpose)."""
    if not cols:
        return 0
    return len(_rref_lists(field, [list(c) for c in cols], len(cols[0])))


def kernel(A: Matrix) -> list[tuple[int, ...]]:
    """Basis of the right null space, one vector per free column."""
    R, pivots = rref(A)
    field = A.field
    free = [j for j in range(A.ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * A.ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R.rows[i][f])
        basis.append(tuple(v))
    return basis


def solve(A: Matrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """One solution x of A x = b, or None when b is outside the column span.

    Free variables are set to zero.
    """
    if len(b) != A.nrows:
        raise LengthMismatch(f"right-hand side of length {len(b)} for {A.nrows} rows")
    rows = [list(r) + [int(bi)] for r, bi in zip(A.rows, b)]
    pivots = _rref_lists(A.field, rows, A.ncols + 1)
    if pivots and pivots[-1] == A.ncols:
        return None
    x = [0] * A.ncols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][A.ncols]
    return tuple(x)


def column_submatrix(A: Matrix, S: Iterable[int]) -> Matrix:
    idx = sorted(set(S))
    for j in idx:
        if not 0 <= j < A.ncols:
            raise IndexOutOfRange(f"column {j} outside [0, {A.ncols})")
    return Matrix(A.field, tuple(tuple(r[j] for j in idx) for r in A.rows), len(idx))

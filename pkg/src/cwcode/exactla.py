"""
Dense exact linear algebra over GF(q).

Matrices are immutable wrappers around int64 numpy arrays holding encoded
field values.  Column indices exposed to callers are 1-based, matching the
ground set {1, ..., n} used for codes and matroids.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, ValueOutOfField
from .gfield import Field, FieldElem, as_field


class Mat:
    """An immutable rows x cols matrix over a finite field."""

    __slots__ = ("field", "_a")

    def __init__(self, field, entries, cols=None):
        field = as_field(field)
        if isinstance(entries, np.ndarray):
            a = entries.astype(np.int64, copy=True)
            if a.ndim != 2:
                raise DimensionMismatch(f"expected a 2-d array, got shape {a.shape}")
        else:
            rows = [list(r) for r in entries]
            if not rows:
                a = np.zeros((0, cols or 0), dtype=np.int64)
            else:
                width = len(rows[0])
                if any(len(r) != width for r in rows):
                    raise DimensionMismatch("ragged rows")
                a = np.array([[field.check(x) for x in r] for r in rows], dtype=np.int64)
                a = a.reshape(len(rows), width)
        if cols is not None and a.shape[1] != cols:
            raise DimensionMismatch(f"expected {cols} columns, got {a.shape[1]}")
        if a.size and (a.min() < 0 or a.max() >= field.q):
            raise ValueOutOfField(f"entries must lie in [0, {field.q})")
        a.setflags(write=False)
        self.field = field
        self._a = a

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field, size):
        return cls(field, np.eye(size, dtype=np.int64))

    @property
    def rows(self):
        return self._a.shape[0]

    @property
    def cols(self):
        return self._a.shape[1]

    @property
    def array(self):
        """Read-only int64 view of the encoded entries."""
        return self._a

    @property
    def entries(self):
        """Row-major flat list of field elements."""
        return [FieldElem(self.field, int(v)) for v in self._a.ravel()]

    def tolist(self):
        return self._a.tolist()

    def __getitem__(self, idx):
        return int(self._a[idx])

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self._a.shape == other._a.shape
            and bool(np.array_equal(self._a, other._a))
        )

    def __hash__(self):
        return hash((self.field, self._a.shape, self._a.tobytes()))

    def __repr__(self):
        return f"Mat({self.field!r}, {self.tolist()})"

    def transpose(self):
        return Mat(self.field, self._a.T)

    T = property(transpose)

    def __matmul__(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return Mat(self.field, matmul_array(self.field, self._a, other._a))

    def columns(self, sigma):
        """Submatrix on the 1-based column indices ``sigma`` (in the given order)."""
        idx = _check_columns(self, sigma)
        return Mat(self.field, self._a[:, idx])

    def stack(self, other):
        if self.field != other.field or self.cols != other.cols:
            raise DimensionMismatch("cannot stack matrices of different width or field")
        return Mat(self.field, np.vstack([self._a, other._a]))

    def is_zero(self):
        return not self._a.any()


def matmul_array(field: Field, a, b):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if field.m == 1 and field.p < 2 ** 20:
        # every partial sum stays below 2^63 for these widths
        for j in range(a.shape[1]):
            out = (out + a[:, j, None] * b[None, j, :]) % field.p
        return out
    for j in range(a.shape[1]):
        out = field.add_arr(out, field.mul_arr(a[:, j, None], b[None, j, :]))
    return out


def rref_array(field: Field, a):
    """Reduced row echelon form of an int64 array; returns (array, 0-based pivots)."""
    a = np.array(a, dtype=np.int64, copy=True)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = field.mul_arr(a[r], field.inv(lead))
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = field.sub_arr(a[hit], field.mul_arr(col[hit, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: Mat):
    """Return (RREF of m, 1-based pivot columns)."""
    a, pivots = rref_array(m.field, m.array)
    return Mat(m.field, a), tuple(c + 1 for c in pivots)


def rank(m: Mat) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(rref_array(m.field, m.array)[1])


def kernel_basis(m: Mat) -> Mat:
    """Basis (as rows, in RREF) of {v : m v^T = 0}."""
    field = m.field
    cols = m.cols
    a, pivots = rref_array(field, m.array)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for r, pc in enumerate(pivots):
            basis[t, pc] = field.neg(int(a[r, f]))
    return Mat(field, rref_array(field, basis)[0])


def _check_columns(m: Mat, sigma):
    idx = [int(s) - 1 for s in sigma]
    for s in idx:
        if not 0 <= s < m.cols:
            raise IndexOutOfRange(f"column {s + 1} outside 1..{m.cols}")
    return idx


def column_subset_rank(m: Mat, sigma) -> int:
    """Rank of the columns of ``m`` indexed by the 1-based set ``sigma``."""
    idx = sorted(set(_check_columns(m, sigma)))
    if not idx or m.rows == 0:
        return 0
    return len(rref_array(m.field, m.array[:, idx])[1])


def same_row_space(a: Mat, b: Mat) -> bool:
    if a.cols != b.cols:
        return False
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(a.stack(b))

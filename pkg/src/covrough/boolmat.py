"""Dense Boolean matrices packed into 64-bit words.

Rows are stored row-major as ``uint64`` words, bit ``j`` of a row living in
word ``j // 64`` at position ``j % 64``.  Padding bits past the last column
are always zero; every kernel relies on that.

Two matrix products are provided:

* ``bool_dot``   -- ``C[i, j] = OR_k (A[i, k] AND B[k, j])``
* ``circle_dot`` -- ``C[i, j] = AND_k (A[i, k] <= B[k, j])``

The second one is the "circle" product used for type-2 characteristic
matrices.  Its textbook form ``min_k (b_kj - a_ik + 1)`` can reach 2 for an
all-zero row; here it is clamped to {0, 1}.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

WORD = 64
_ONE = np.uint64(1)


class ShapeError(ValueError):
    """Operand dimensions do not agree."""


@dataclass
class WorkCounter:
    """Logical cell operations performed by the kernels.

    ``cell_ops`` counts per-entry Boolean evaluations (one per ``(i, k, j)``
    triple for a product), ``cell_writes`` counts entries stored by the line
    surgery helpers.  Word-level parallelism is deliberately ignored so the
    numbers line up with per-entry complexity bounds.
    """

    cell_ops: int = 0
    cell_writes: int = 0

    @property
    def total(self) -> int:
        return self.cell_ops + self.cell_writes


_counter: WorkCounter | None = None


@contextlib.contextmanager
def count_work() -> Iterator[WorkCounter]:
    """Collect kernel work done inside the ``with`` block."""
    global _counter
    previous = _counter
    _counter = counter = WorkCounter()
    try:
        yield counter
    finally:
        _counter = previous
        if previous is not None:
            previous.cell_ops += counter.cell_ops
            previous.cell_writes += counter.cell_writes


def _ops(n: int) -> None:
    if _counter is not None:
        _counter.cell_ops += n


def _writes(n: int) -> None:
    if _counter is not None:
        _counter.cell_writes += n


def nwords(nbits: int) -> int:
    return (nbits + WORD - 1) // WORD


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack the last axis of a 0/1 array into little-endian uint64 words."""
    bits = np.asarray(bits, dtype=bool)
    width = bits.shape[-1]
    out = np.zeros(bits.shape[:-1] + (nwords(width) * 8,), dtype=np.uint8)
    out[..., : (width + 7) // 8] = np.packbits(bits, axis=-1, bitorder="little")
    return out.view("<u8").astype(np.uint64, copy=False)


def unpack_bits(words: np.ndarray, width: int) -> np.ndarray:
    raw = np.ascontiguousarray(words, dtype="<u8").view(np.uint8)
    return np.unpackbits(raw, axis=-1, count=width, bitorder="little").astype(bool)


def _tail_mask(width: int) -> np.ndarray:
    """Words with every valid bit set and padding cleared."""
    mask = np.full(nwords(width), np.iinfo(np.uint64).max, dtype=np.uint64)
    rem = width % WORD
    if rem:
        mask[-1] = (_ONE << np.uint64(rem)) - _ONE
    return mask


class BoolVector:
    """Immutable 0/1 vector of length ``len``."""

    __slots__ = ("_n", "_w")

    def __init__(self, n: int, words: np.ndarray):
        if n < 0:
            raise ValueError("vector length must be non-negative")
        words = np.asarray(words, dtype=np.uint64)
        if words.shape != (nwords(n),):
            raise ShapeError(f"expected {nwords(n)} words for length {n}, got {words.shape}")
        self._n = n
        self._w = words

    @classmethod
    def from_bits(cls, bits: Iterable[int] | np.ndarray) -> BoolVector:
        arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
        if arr.ndim != 1:
            raise ShapeError("vector bits must be one-dimensional")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("vector cells must be 0 or 1")
        return cls(arr.size, pack_bits(arr.astype(bool)))

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> BoolVector:
        bits = np.zeros(n, dtype=bool)
        idx = np.fromiter(indices, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= n):
            raise IndexError(f"object index out of range for universe of size {n}")
        bits[idx] = True
        return cls(n, pack_bits(bits))

    @classmethod
    def zeros(cls, n: int) -> BoolVector:
        return cls(n, np.zeros(nwords(n), dtype=np.uint64))

    @classmethod
    def ones(cls, n: int) -> BoolVector:
        return cls(n, _tail_mask(n))

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._n:
            raise IndexError(i)
        return int((self._w[i // WORD] >> np.uint64(i % WORD)) & _ONE)

    def bits(self) -> np.ndarray:
        return unpack_bits(self._w, self._n).astype(np.uint8)

    def indices(self) -> list[int]:
        return np.flatnonzero(unpack_bits(self._w, self._n)).tolist()

    def complement(self) -> BoolVector:
        return BoolVector(self._n, ~self._w & _tail_mask(self._n))

    def count(self) -> int:
        return int(np.bitwise_count(self._w).sum())

    def tobytes(self) -> bytes:
        return self._w.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoolVector):
            return NotImplemented
        return self._n == other._n and bool(np.array_equal(self._w, other._w))

    def __hash__(self) -> int:
        return hash((self._n, self._w.tobytes()))

    def __repr__(self) -> str:
        return f"BoolVector([{','.join(map(str, self.bits()))}])"


class BoolMatrix:
    """Immutable ``rows x cols`` 0/1 matrix.

    Construct from a nested list or array with :meth:`from_bits`.  Cells are
    addressed ``m[i, j]`` with 0-based indices.
    """

    __slots__ = ("_r", "_c", "_w")

    def __init__(self, rows: int, cols: int, words: np.ndarray):
        if rows < 1 or cols < 1:
            raise ShapeError(f"matrix must be at least 1x1, got {rows}x{cols}")
        words = np.asarray(words, dtype=np.uint64)
        if words.shape != (rows, nwords(cols)):
            raise ShapeError(f"word array {words.shape} does not fit {rows}x{cols}")
        self._r = rows
        self._c = cols
        self._w = words

    @classmethod
    def from_bits(cls, bits) -> BoolMatrix:
        try:
            arr = np.asarray(bits)
        except ValueError:
            raise ShapeError("matrix rows have unequal lengths") from None
        if arr.ndim != 2:
            raise ShapeError("matrix bits must be two-dimensional")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("matrix cells must be 0 or 1")
        return cls(arr.shape[0], arr.shape[1], pack_bits(arr.astype(bool)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BoolMatrix:
        return cls(rows, cols, np.zeros((rows, nwords(cols)), dtype=np.uint64))

    @classmethod
    def ones(cls, rows: int, cols: int) -> BoolMatrix:
        return cls(rows, cols, np.tile(_tail_mask(cols), (rows, 1)))

    @classmethod
    def identity(cls, n: int) -> BoolMatrix:
        return cls.from_bits(np.eye(n, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self._r

    @property
    def cols(self) -> int:
        return self._c

    @property
    def shape(self) -> tuple[int, int]:
        return self._r, self._c

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self._r and 0 <= j < self._c):
            raise IndexError(ij)
        return int((self._w[i, j // WORD] >> np.uint64(j % WORD)) & _ONE)

    def bits(self) -> np.ndarray:
        return unpack_bits(self._w, self._c).astype(np.uint8)

    def row(self, i: int) -> BoolVector:
        if not 0 <= i < self._r:
            raise IndexError(f"row {i} out of range for {self._r} rows")
        return BoolVector(self._c, self._w[i].copy())

    def col(self, j: int) -> BoolVector:
        if not 0 <= j < self._c:
            raise IndexError(f"column {j} out of range for {self._c} columns")
        bits = (self._w[:, j // WORD] >> np.uint64(j % WORD)) & _ONE
        return BoolVector(self._r, pack_bits(bits.astype(bool)))

    def copy(self) -> BoolMatrix:
        return BoolMatrix(self._r, self._c, self._w.copy())

    def tobytes(self) -> bytes:
        return self._w.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._w, other._w))

    def __hash__(self) -> int:
        return hash((self._r, self._c, self._w.tobytes()))

    def __le__(self, other: BoolMatrix) -> bool:
        """Entrywise ``<=``."""
        _same_shape(self, other)
        return not bool((self._w & ~other._w).any())

    def __repr__(self) -> str:
        body = "; ".join("".join(map(str, r)) for r in self.bits())
        return f"BoolMatrix({self._r}x{self._c}: {body})"

    def format(self) -> str:
        """Plain ``0 1 ...`` rows, one per line."""
        return "\n".join(" ".join(map(str, r)) for r in self.bits())


def _same_shape(a: BoolMatrix, b: BoolMatrix) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")


def _check_inner(a: BoolMatrix, inner: int, what: str) -> None:
    if a.cols != inner:
        raise ShapeError(f"{what}: left operand has {a.cols} columns, right has {inner} rows")


def bool_dot(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Boolean product ``a . b``."""
    _check_inner(a, b.rows, "bool_dot")
    n, m, p = a.rows, a.cols, b.cols
    abits = unpack_bits(a._w, m)
    out = np.zeros((n, nwords(p)), dtype=np.uint64)
    for k in range(m):
        np.bitwise_or(out, b._w[k], out=out, where=abits[:, k, None])
    _ops(n * m * p)
    return BoolMatrix(n, p, out)


def circle_dot(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Circle product: ``out[i, j] = 1`` iff row ``i`` of ``a`` is dominated by column ``j`` of ``b``."""
    _check_inner(a, b.rows, "circle_dot")
    n, m, p = a.rows, a.cols, b.cols
    abits = unpack_bits(a._w, m)
    out = np.tile(_tail_mask(p), (n, 1))
    for k in range(m):
        np.bitwise_and(out, b._w[k], out=out, where=abits[:, k, None])
    _ops(n * m * p)
    return BoolMatrix(n, p, out)


def _check_vec(a: BoolMatrix, v: BoolVector, what: str) -> None:
    if a.cols != len(v):
        raise ShapeError(f"{what}: matrix has {a.cols} columns, vector has length {len(v)}")


def bool_matvec(a: BoolMatrix, v: BoolVector) -> BoolVector:
    """``a . v``: rows of ``a`` that meet ``v``."""
    _check_vec(a, v, "bool_matvec")
    hit = (a._w & v._w).any(axis=1)
    _ops(a.rows * a.cols)
    return BoolVector(a.rows, pack_bits(hit))


def circle_matvec(a: BoolMatrix, v: BoolVector) -> BoolVector:
    """``a (.) v``: rows of ``a`` contained in ``v``."""
    _check_vec(a, v, "circle_matvec")
    inside = ~(a._w & ~v._w).any(axis=1)
    _ops(a.rows * a.cols)
    return BoolVector(a.rows, pack_bits(inside))


def bool_vecmat(v: BoolVector, a: BoolMatrix) -> BoolVector:
    """Row vector times matrix, ``v^T . a``: union of the rows ``v`` selects."""
    if len(v) != a.rows:
        raise ShapeError(f"bool_vecmat: vector has length {len(v)}, matrix has {a.rows} rows")
    sel = unpack_bits(v._w, len(v))
    out = np.bitwise_or.reduce(a._w[sel], axis=0) if sel.any() else np.zeros(nwords(a.cols), np.uint64)
    _ops(a.rows * a.cols)
    return BoolVector(a.cols, out)


def rows_containing(a: BoolMatrix, v: BoolVector) -> BoolVector:
    """``v^T (.) a^T``: rows of ``a`` that contain ``v``.

    Computed against the rows of ``a`` directly, so no transpose is built.
    """
    _check_vec(a, v, "rows_containing")
    hit = ~(v._w & ~a._w).any(axis=1)
    _ops(a.rows * a.cols)
    return BoolVector(a.rows, pack_bits(hit))


def transpose(a: BoolMatrix) -> BoolMatrix:
    _ops(a.rows * a.cols)
    return BoolMatrix(a.cols, a.rows, pack_bits(unpack_bits(a._w, a.cols).T))


def _put_row(words: np.ndarray, k: int, r: BoolVector) -> None:
    words[k] = r._w


def _put_col(words: np.ndarray, k: int, c: BoolVector) -> None:
    w, shift = k // WORD, np.uint64(k % WORD)
    bits = unpack_bits(c._w, len(c)).astype(np.uint64)
    words[:, w] = (words[:, w] & ~(_ONE << shift)) | (bits << shift)


def set_row_(a: BoolMatrix, k: int, r: BoolVector) -> None:
    """Overwrite row ``k`` in place.  Caller must own ``a`` exclusively."""
    if not 0 <= k < a.rows:
        raise IndexError(f"row {k} out of range for {a.rows} rows")
    if len(r) != a.cols:
        raise ShapeError(f"row has length {len(r)}, matrix has {a.cols} columns")
    _put_row(a._w, k, r)
    _writes(a.cols)


def set_col_(a: BoolMatrix, k: int, c: BoolVector) -> None:
    """Overwrite column ``k`` in place.  Caller must own ``a`` exclusively."""
    if not 0 <= k < a.cols:
        raise IndexError(f"column {k} out of range for {a.cols} columns")
    if len(c) != a.rows:
        raise ShapeError(f"column has length {len(c)}, matrix has {a.rows} rows")
    _put_col(a._w, k, c)
    _writes(a.rows)


def replace_row(a: BoolMatrix, k: int, r: BoolVector) -> BoolMatrix:
    out = a.copy()
    set_row_(out, k, r)
    return out


def replace_col(a: BoolMatrix, k: int, c: BoolVector) -> BoolMatrix:
    out = a.copy()
    set_col_(out, k, c)
    return out

"""Sparse exact-rational operator matrices on the exterior algebra.

Rows and columns are indexed by blade bitmasks in ascending order, so an
operator on a dimension-``n`` exterior algebra is a ``2**n`` square matrix.
Columns are stored as ``{row: Fraction}`` dictionaries; the operators in
this package are very sparse, which keeps composition cheap at ``n = 9``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Mapping, Sequence

PARITIES = ("even", "odd", "mixed")


def _parity_of(cols) -> str:
    even = odd = False
    for j, col in enumerate(cols):
        pj = bin(j).count("1") & 1
        for i in col:
            if (bin(i).count("1") & 1) == pj:
                even = True
            else:
                odd = True
        if even and odd:
            return "mixed"
    if odd:
        return "odd"
    return "even"


class OperatorMatrix:
    """A linear operator on the ``2**dim``-dimensional exterior algebra.

    ``parity`` is ``"even"`` (preserves the Z2 grading), ``"odd"`` (reverses
    it) or ``"mixed"``.  When given explicitly it is checked against the
    sparsity pattern; the zero matrix is compatible with any parity.
    """

    __slots__ = ("dim", "_cols", "parity")

    def __init__(self, dim: int, columns: Sequence[Mapping[int, Fraction]],
                 parity: str | None = None):
        size = 1 << dim
        if len(columns) != size:
            raise ValueError(f"expected {size} columns, got {len(columns)}")
        cols = []
        for col in columns:
            clean = {}
            for i, v in col.items():
                if not 0 <= i < size:
                    raise IndexError(f"row index {i} out of range")
                if v:
                    clean[i] = Fraction(v)
            cols.append(clean)
        self.dim = dim
        self._cols = tuple(cols)
        observed = _parity_of(self._cols)
        if parity is None:
            parity = observed
        elif parity not in PARITIES:
            raise ValueError(f"unknown parity {parity!r}")
        elif parity != "mixed" and observed != parity and self.nnz:
            raise ValueError(f"declared parity {parity!r} but sparsity says {observed!r}")
        self.parity = parity

    @classmethod
    def _trusted(cls, dim, cols, parity=None):
        m = object.__new__(cls)
        m.dim = dim
        m._cols = tuple(cols)
        m.parity = parity if parity is not None else _parity_of(m._cols)
        return m

    # constructors

    @classmethod
    def zero(cls, dim: int) -> "OperatorMatrix":
        return cls._trusted(dim, [{} for _ in range(1 << dim)], "even")

    @classmethod
    def identity(cls, dim: int) -> "OperatorMatrix":
        return cls._trusted(dim, [{j: Fraction(1)} for j in range(1 << dim)], "even")

    @classmethod
    def scalar(cls, dim: int, value) -> "OperatorMatrix":
        return cls.identity(dim) * value

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence], parity: str | None = None) -> "OperatorMatrix":
        size = len(rows)
        dim = size.bit_length() - 1
        if 1 << dim != size or any(len(r) != size for r in rows):
            raise ValueError("dense matrix must be square with a power-of-two size")
        cols = [{i: Fraction(rows[i][j]) for i in range(size) if rows[i][j]}
                for j in range(size)]
        return cls(dim, cols, parity)

    @classmethod
    def from_blade_map(cls, dim: int, f: Callable[[int], Mapping[int, Fraction]],
                       parity: str | None = None) -> "OperatorMatrix":
        """Build the matrix whose column ``j`` is ``f(j)`` (blade coordinates)."""
        return cls(dim, [f(j) for j in range(1 << dim)], parity)

    # shape and access

    @property
    def size(self) -> int:
        return 1 << self.dim

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._cols)

    def column(self, j: int) -> dict:
        return dict(self._cols[j])

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self._cols[j].get(i, Fraction(0))

    def entries(self) -> Iterable[tuple[int, int, Fraction]]:
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                yield i, j, v

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.size for _ in range(self.size)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> list[list[Fraction]]:
        pos = {r: k for k, r in enumerate(rows)}
        out = [[Fraction(0)] * len(cols) for _ in rows]
        for c, j in enumerate(cols):
            for i, v in self._cols[j].items():
                k = pos.get(i)
                if k is not None:
                    out[k][c] = v
        return out

    def apply(self, coeffs: Mapping[int, Fraction]) -> dict:
        """Apply to a vector given in blade coordinates."""
        out: dict[int, Fraction] = {}
        for j, a in coeffs.items():
            for i, v in self._cols[j].items():
                out[i] = out.get(i, 0) + a * v
        return {i: v for i, v in out.items() if v}

    # algebra

    def _check(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        cols = []
        for a, b in zip(self._cols, other._cols):
            c = dict(a)
            for i, v in b.items():
                s = c.get(i, 0) + v
                if s:
                    c[i] = s
                else:
                    c.pop(i, None)
            cols.append(c)
        parity = self.parity if self.parity == other.parity else None
        return OperatorMatrix._trusted(self.dim, cols, parity)

    def __neg__(self):
        return OperatorMatrix._trusted(
            self.dim, [{i: -v for i, v in c.items()} for c in self._cols], self.parity)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, OperatorMatrix):
            return NotImplemented
        scalar = Fraction(scalar)
        if not scalar:
            return OperatorMatrix.zero(self.dim)
        return OperatorMatrix._trusted(
            self.dim, [{i: v * scalar for i, v in c.items()} for c in self._cols], self.parity)

    __rmul__ = __mul__

    def __matmul__(self, other):
        """Composition: ``(A @ B)(x) = A(B(x))``."""
        if self._check(other) is NotImplemented:
            return NotImplemented
        cols = [self.apply(c) for c in other._cols]
        if "mixed" in (self.parity, other.parity):
            parity = None
        else:
            parity = "even" if self.parity == other.parity else "odd"
        return OperatorMatrix._trusted(self.dim, cols, parity)

    def transpose(self) -> "OperatorMatrix":
        cols: list[dict] = [{} for _ in range(self.size)]
        for i, j, v in self.entries():
            cols[i][j] = v
        return OperatorMatrix._trusted(self.dim, cols, self.parity)

    @property
    def T(self) -> "OperatorMatrix":
        return self.transpose()

    def commutator(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return self @ other - other @ self

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return self.dim == other.dim and self._cols == other._cols

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self._cols)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_skew(self) -> bool:
        return (self + self.transpose()).is_zero()

    def max_abs(self) -> Fraction:
        return max((abs(v) for _, _, v in self.entries()), default=Fraction(0))

    def __repr__(self):
        return f"OperatorMatrix(dim={self.dim}, nnz={self.nnz}, parity={self.parity!r})"


# exact rank

def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        if not any(row):
            continue
        m = lcm(*(x.denominator for x in row))
        out.append([int(x * m) for x in row])
    return out


def bareiss_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by fraction-free (Bareiss) elimination.

    Rows are first cleared of denominators (row scaling does not change the
    rank), then eliminated with the one-step Bareiss recurrence
    ``a[i][j] <- (p * a[i][j] - a[i][k] * a[k][j]) / prev``, where every
    division is exact.
    """
    a = _integer_rows(rows)
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    prev = 1
    for k in range(ncols):
        if rank == len(a):
            break
        piv = next((i for i in range(rank, len(a)) if a[i][k]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        p = prow[k]
        tail = range(k + 1, ncols)
        for i in range(rank + 1, len(a)):
            row = a[i]
            f = row[k]
            if f:
                for j in tail:
                    row[j] = (p * row[j] - f * prow[j]) // prev
            elif p != prev:
                for j in tail:
                    if row[j]:
                        row[j] = p * row[j] // prev
            row[k] = 0
        prev = p
        rank += 1
    return rank


def block_indices(dim: int, parity: int) -> list[int]:
    """Blade masks of the given parity (0 even, 1 odd), ascending."""
    return [m for m in range(1 << dim) if bin(m).count("1") & 1 == parity]


def degree_indices(dim: int, degree: int) -> list[int]:
    return [m for m in range(1 << dim) if bin(m).count("1") == degree]


def rank(m: OperatorMatrix, rows: Sequence[int] | None = None,
         cols: Sequence[int] | None = None) -> int:
    """Exact rank of ``m`` (or of the block selected by ``rows`` x ``cols``)."""
    rows = range(m.size) if rows is None else rows
    cols = range(m.size) if cols is None else cols
    block = m.submatrix(list(rows), list(cols))
    return bareiss_rank(block)

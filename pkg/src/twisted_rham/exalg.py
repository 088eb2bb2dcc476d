"""Exact exterior algebra of an oriented orthonormal vector space.

Basis vectors are numbered ``0 .. n-1``.  A blade is a bitmask: bit ``i``
set means ``e^i`` is a factor, and factors are always taken in increasing
order.  Printing uses the mathematical labels ``e1 .. en``.

The exterior algebra doubles as the Clifford algebra with ``e.e = -1`` via
the symbol map: left multiplication by a vector is ``e^v ^ a - e_v _| a``,
right multiplication on a degree-``p`` element is
``(-1)^p (e^v ^ a + e_v _| a)``.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

from .opmatrix import OperatorMatrix

MAX_DIM = 12


class Orientation(IntEnum):
    """Sign attached to the top blade ``e^{1..n}``."""

    POSITIVE = 1
    NEGATIVE = -1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def blade_indices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def wedge_sign(a: int, b: int) -> int:
    """Sign of ``e^A ^ e^B`` relative to the sorted blade ``e^{A|B}``.

    Zero when the blades share an index.  Otherwise ``(-1)`` to the number
    of pairs ``(i in A, j in B)`` with ``i > j``.
    """
    if a & b:
        return 0
    swaps = 0
    while b:
        low = b & -b
        swaps += popcount(a & ~((low << 1) - 1))
        b ^= low
    return -1 if swaps & 1 else 1


def _check_dim(dim):
    if not isinstance(dim, int) or not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dimension must be an integer in [1, {MAX_DIM}], got {dim!r}")


def _label(mask: int) -> str:
    if not mask:
        return "1"
    return "e" + "".join(str(i + 1) for i in blade_indices(mask))


class Multivector:
    """Element of the exterior algebra with exact rational coefficients.

    Coefficients are kept in normalized sparse form: only nonzero entries
    are stored.  Instances are immutable.
    """

    __slots__ = ("dim", "_coeffs")

    def __init__(self, dim: int, coeffs: Mapping[int, object] | None = None):
        _check_dim(dim)
        top = 1 << dim
        clean = {}
        for mask, v in (coeffs or {}).items():
            if not 0 <= mask < top:
                raise ValueError(f"blade mask {mask} out of range for dim {dim}")
            v = Fraction(v)
            if v:
                clean[mask] = v
        self.dim = dim
        self._coeffs = clean

    @classmethod
    def _raw(cls, dim, coeffs):
        mv = object.__new__(cls)
        mv.dim = dim
        mv._coeffs = coeffs
        return mv

    @classmethod
    def scalar(cls, dim: int, value=1) -> "Multivector":
        return cls(dim, {0: value})

    @classmethod
    def basis(cls, dim: int, *indices: int, coeff=1) -> "Multivector":
        """``coeff * e^{i1} ^ e^{i2} ^ ...`` in the order given."""
        mv = cls.scalar(dim, coeff)
        for i in indices:
            mv = wedge(mv, cls.vector(dim, i))
        return mv

    @classmethod
    def vector(cls, dim: int, i: int) -> "Multivector":
        _check_index(dim, i)
        return cls(dim, {1 << i: 1})

    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._coeffs)

    def __getitem__(self, mask: int) -> Fraction:
        return self._coeffs.get(mask, Fraction(0))

    def items(self):
        return self._coeffs.items()

    def degrees(self) -> set[int]:
        return {popcount(m) for m in self._coeffs}

    def grade(self, p: int) -> "Multivector":
        return Multivector._raw(self.dim, {m: v for m, v in self._coeffs.items() if popcount(m) == p})

    def is_zero(self) -> bool:
        return not self._coeffs

    def _same(self, other):
        if not isinstance(other, Multivector):
            return False
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return Multivector._raw(self.dim, _add(self._coeffs, other._coeffs))

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Multivector._raw(self.dim, {m: -v for m, v in self._coeffs.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, Multivector):
            return NotImplemented
        return Multivector(self.dim, {m: v * Fraction(scalar) for m, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dim == other.dim and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.dim, frozenset(self._coeffs.items())))

    def __repr__(self):
        if not self._coeffs:
            return f"Multivector({self.dim}, 0)"
        terms = " + ".join(f"{v}*{_label(m)}" for m, v in sorted(self._coeffs.items()))
        return f"Multivector({self.dim}, {terms})"


def _add(a, b):
    out = dict(a)
    for m, v in b.items():
        s = out.get(m, 0) + v
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _check_index(dim, v):
    if not isinstance(v, int) or not 0 <= v < dim:
        raise IndexError(f"basis index {v!r} out of range for dim {dim}")


# coefficient-level kernels; each maps {mask: coeff} -> {mask: coeff}

def _wedge_vec(v, coeffs):
    bit = 1 << v
    out = {}
    for m, c in coeffs.items():
        if not m & bit:
            s = -1 if popcount(m & (bit - 1)) & 1 else 1
            out[m | bit] = s * c
    return out


def _contract_vec(v, coeffs):
    bit = 1 << v
    out = {}
    for m, c in coeffs.items():
        if m & bit:
            s = -1 if popcount(m & (bit - 1)) & 1 else 1
            out[m ^ bit] = s * c
    return out


def _left_vec(v, coeffs):
    out = _wedge_vec(v, coeffs)
    for m, c in _contract_vec(v, coeffs).items():
        out[m] = -c
    return out


def _right_vec(v, coeffs):
    # wedge and contraction land on disjoint blades, so no accumulation needed
    bit = 1 << v
    out = {}
    for m, c in coeffs.items():
        if popcount(m) & 1:
            c = -c
        s = -1 if popcount(m & (bit - 1)) & 1 else 1
        out[m ^ bit] = s * c
    return out


def _form_action(h, coeffs, side):
    out: dict = {}
    for hm, hc in h.items():
        idx = blade_indices(hm)
        cur = coeffs
        if side == "left":
            for v in reversed(idx):
                cur = _left_vec(v, cur)
        else:
            for v in idx:
                cur = _right_vec(v, cur)
        out = _add(out, {m: hc * c for m, c in cur.items()})
    return out


# public operations

def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product."""
    a._same(b)
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            s = wedge_sign(ma, mb)
            if s:
                m = ma | mb
                out[m] = out.get(m, 0) + s * ca * cb
    return Multivector._raw(a.dim, {m: c for m, c in out.items() if c})


def contract(v: int, a: Multivector) -> Multivector:
    """Interior product ``e_v _| a``: the adjoint of ``e^v ^ .``."""
    _check_index(a.dim, v)
    return Multivector._raw(a.dim, _contract_vec(v, a._coeffs))


def inner(a: Multivector, b: Multivector) -> Fraction:
    """Inner product in which the blades are orthonormal."""
    a._same(b)
    return sum((c * b[m] for m, c in a.items()), Fraction(0))


def hodge_star(a: Multivector, orientation: int = Orientation.POSITIVE) -> Multivector:
    o = Orientation(orientation)
    top = (1 << a.dim) - 1
    return Multivector._raw(
        a.dim, {top ^ m: o * wedge_sign(m, top ^ m) * c for m, c in a.items()})


def left_clifford(v: int, a: Multivector) -> Multivector:
    _check_index(a.dim, v)
    return Multivector._raw(a.dim, _left_vec(v, a._coeffs))


def right_clifford(v: int, a: Multivector) -> Multivector:
    _check_index(a.dim, v)
    return Multivector._raw(a.dim, _right_vec(v, a._coeffs))


def clifford_form_action(h: Multivector, a: Multivector, side: str = "left") -> Multivector:
    """Clifford multiplication of ``a`` by the form ``h``.

    A blade ``e^{i1..ip}`` acts as the Clifford product ``e_{i1}...e_{ip}``:
    on the left as ``L(i1) o ... o L(ip)``, on the right as
    ``R(ip) o ... o R(i1)`` so that ``(a.u).v = a.(uv)``.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    h._same(a)
    return Multivector._raw(a.dim, _form_action(h._coeffs, a._coeffs, side))


def operator_matrix(f: Callable[[Multivector], Multivector], n: int,
                    parity: str | None = None) -> OperatorMatrix:
    """Matrix of a linear map on the exterior algebra.

    Column ``j`` holds ``f(blade_j)`` where blades are enumerated by
    ascending bitmask.
    """
    _check_dim(n)
    return OperatorMatrix.from_blade_map(
        n, lambda j: f(Multivector._raw(n, {j: Fraction(1)}))._coeffs, parity)


# matrix builders used throughout

def _kernel_matrix(n, kernel, parity):
    return OperatorMatrix._trusted(
        n, [kernel({j: Fraction(1)}) for j in range(1 << n)], parity)


def wedge_matrix(h: Multivector) -> OperatorMatrix:
    """Matrix of ``h ^ .``."""
    n = h.dim
    parity = _form_parity(h)

    return _kernel_matrix(n, lambda c: wedge(h, Multivector._raw(n, c))._coeffs, parity)


def contraction_matrix(v: int, n: int) -> OperatorMatrix:
    _check_index(n, v)
    return _kernel_matrix(n, lambda c: _contract_vec(v, c), "odd")


def left_clifford_matrix(v: int, n: int) -> OperatorMatrix:
    _check_index(n, v)
    return _kernel_matrix(n, lambda c: _left_vec(v, c), "odd")


def right_clifford_matrix(v: int, n: int) -> OperatorMatrix:
    _check_index(n, v)
    return _kernel_matrix(n, lambda c: _right_vec(v, c), "odd")


def clifford_form_matrix(h: Multivector, side: str = "left") -> OperatorMatrix:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return _kernel_matrix(h.dim, lambda c: _form_action(h._coeffs, c, side), _form_parity(h))


def _form_parity(h):
    parities = {d & 1 for d in h.degrees()}
    if len(parities) > 1:
        return "mixed"
    return "odd" if parities == {1} else "even"


def random_form(dim: int, degree: int, rng, max_num: int = 9, max_den: int = 7,
                density: float = 1.0) -> Multivector:
    """Random homogeneous form with small rational coefficients."""
    coeffs = {}
    for m in range(1 << dim):
        if popcount(m) == degree and rng.random() < density:
            coeffs[m] = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
    return Multivector(dim, coeffs)


def blades(dim: int) -> Iterable[Multivector]:
    for m in range(1 << dim):
        yield Multivector._raw(dim, {m: Fraction(1)})


def three_h_residual(h: Multivector) -> OperatorMatrix:
    """``sum_i e_i . (e_i _| h) . - 3 h .`` as a matrix (zero for every 3-form)."""
    n = h.dim
    lhs = OperatorMatrix.zero(n)
    for i in range(n):
        lhs = lhs + left_clifford_matrix(i, n) @ clifford_form_matrix(contract(i, h), "left")
    return lhs - 3 * clifford_form_matrix(h, "left")


def clifford_identity_residual(h: Multivector, left_weight=Fraction(1, 12),
                      right_weight=Fraction(1, 4)) -> OperatorMatrix:
    """Constant-coefficient core of the twisted Dirac identity.

    ``lw sum_i e_i (e_i _| h) phi + rw sum_i e_i phi (e_i _| h)`` minus
    ``(h ^ .) + (h ^ .)^T``.  Zero for every 3-form at the default weights.
    """
    n = h.dim
    lw, rw = Fraction(left_weight), Fraction(right_weight)
    lhs = OperatorMatrix.zero(n)
    for i in range(n):
        ih = contract(i, h)
        inner_op = lw * clifford_form_matrix(ih, "left") + rw * clifford_form_matrix(ih, "right")
        lhs = lhs + left_clifford_matrix(i, n) @ inner_op
    w = wedge_matrix(h)
    return lhs - (w + w.transpose())

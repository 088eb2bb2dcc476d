"""Metric Lie algebras given by structure constants in an orthonormal basis.

``c[i][j][k] = ([e_i, e_j], e_k)``.  For a bi-invariant metric this tensor
is totally antisymmetric, and it is then also the Cartan 3-form
``H(X, Y, Z) = ([X, Y], Z)``.

The connection family is ``nabla^t_X Y = t [X, Y]`` on left-invariant
fields.  ``t = 1/2`` is Levi-Civita, ``t = 0`` and ``t = 1`` are the flat
left/right trivializations.  The alternative parametrization
``nabla^g + 2s [., .]`` corresponds to ``t = 1/2 + 2s``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Mapping

from .exalg import Multivector, popcount
from .opmatrix import OperatorMatrix

Matrix = list[list[Fraction]]


class InvalidAlgebraError(ValueError):
    """Raised when an operation needs a valid metric Lie algebra."""

    def __init__(self, algebra, violations):
        self.violations = violations
        shown = "; ".join(str(v) for v in violations[:5])
        more = f" (+{len(violations) - 5} more)" if len(violations) > 5 else ""
        super().__init__(f"{algebra.name}: {shown}{more}")


@dataclass(frozen=True)
class Violation:
    kind: str  # "antisymmetry" | "ad-invariance" | "jacobi"
    indices: tuple[int, ...]
    value: Fraction

    def __str__(self):
        idx = ",".join(str(i + 1) for i in self.indices)
        return f"{self.kind} violated at ({idx}): residual {self.value}"


def t_from_s(s) -> Fraction:
    return Fraction(1, 2) + 2 * Fraction(s)


def s_from_t(t) -> Fraction:
    return (Fraction(t) - Fraction(1, 2)) / 2


@dataclass(frozen=True, eq=False)
class MetricLieAlgebra:
    """Structure constants of a Lie algebra with an orthonormal basis.

    Build with :meth:`from_brackets` from the ``i < j`` constants; the
    ``j > i`` half is filled in by antisymmetry.  Passing a full tensor to
    the constructor skips that completion, so antisymmetry can fail and is
    reported by :meth:`validate`.
    """

    dim: int
    c: tuple
    name: str = "algebra"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        n = self.dim
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"dimension must be a positive integer, got {n!r}")
        c = tuple(tuple(tuple(Fraction(x) for x in row) for row in plane) for plane in self.c)
        if len(c) != n or any(len(p) != n or any(len(r) != n for r in p) for p in c):
            raise ValueError(f"structure constants must have shape ({n}, {n}, {n})")
        object.__setattr__(self, "c", c)

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[tuple[int, int, int], object],
                      name: str = "algebra") -> "MetricLieAlgebra":
        """Build from ``{(i, j, k): c_ijk}`` with ``i < j`` (0-based)."""
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), v in brackets.items():
            if not (0 <= i < j < dim and 0 <= k < dim):
                raise ValueError(f"bracket index ({i}, {j}, {k}) must satisfy 0 <= i < j < {dim}")
            c[i][j][k] = Fraction(v)
            c[j][i][k] = -Fraction(v)
        return cls(dim, c, name)

    @classmethod
    def abelian(cls, dim: int, name: str | None = None) -> "MetricLieAlgebra":
        return cls.from_brackets(dim, {}, name or f"torus_{dim}")

    def scaled(self, q) -> "MetricLieAlgebra":
        q = Fraction(q)
        return MetricLieAlgebra(self.dim, [[[x * q for x in r] for r in p] for p in self.c], self.name)

    def brackets(self) -> dict[tuple[int, int, int], Fraction]:
        """Nonzero ``i < j`` constants."""
        return {(i, j, k): self.c[i][j][k]
                for i, j in combinations(range(self.dim), 2)
                for k in range(self.dim) if self.c[i][j][k]}

    def is_abelian(self) -> bool:
        return not any(x for p in self.c for r in p for x in r)

    # validation

    def validate(self) -> list[Violation]:
        """Every violated identity; an empty list means valid."""
        n, c = self.dim, self.c
        out = []
        for i, j, k in product(range(n), repeat=3):
            if c[i][j][k] != -c[j][i][k] and i < j:
                out.append(Violation("antisymmetry", (i, j, k), c[i][j][k] + c[j][i][k]))
        for i, j, k in product(range(n), repeat=3):
            if j < k and c[i][j][k] != -c[i][k][j]:
                out.append(Violation("ad-invariance", (i, j, k), c[i][j][k] + c[i][k][j]))
        for i, j, k, l in product(range(n), repeat=4):
            s = sum(c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] + c[k][i][m] * c[m][j][l]
                    for m in range(n))
            if s:
                out.append(Violation("jacobi", (i, j, k, l), s))
        return out

    def is_valid(self) -> bool:
        if "valid" not in self._cache:
            self._cache["valid"] = not self.validate()
        return self._cache["valid"]

    def require_valid(self):
        if not self.is_valid():
            raise InvalidAlgebraError(self, self.validate())

    # the adjoint representation

    def bracket(self, x, y) -> list[Fraction]:
        """``[x, y]`` for coordinate vectors ``x``, ``y``."""
        n, c = self.dim, self.c
        return [sum(x[i] * y[j] * c[i][j][k] for i in range(n) for j in range(n) if x[i] and y[j])
                for k in range(n)]

    def ad(self, i: int) -> Matrix:
        """Matrix of ``ad(e_i)``: column ``j`` is ``[e_i, e_j]``."""
        n = self.dim
        return [[self.c[i][j][k] for j in range(n)] for k in range(n)]

    def ad_vector(self, x) -> Matrix:
        n = self.dim
        out = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            if x[i]:
                out = _madd(out, _mscale(self.ad(i), x[i]))
        return out


# small dense helpers for n x n tangent matrices

def _mmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _madd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mscale(a: Matrix, q) -> Matrix:
    return [[x * q for x in r] for r in a]


def _is_zero(a: Matrix) -> bool:
    return not any(x for r in a for x in r)


def connection_matrices(L: MetricLieAlgebra, t) -> list[Matrix]:
    """``nabla^t_{e_i}`` on vectors, i.e. ``t * ad(e_i)``."""
    t = Fraction(t)
    return [_mscale(L.ad(i), t) for i in range(L.dim)]


def torsion(L: MetricLieAlgebra, t) -> dict[tuple[int, int], list[Fraction]]:
    """``T(e_i, e_j) = nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i, e_j]`` for ``i < j``."""
    L.require_valid()
    nab = connection_matrices(L, t)
    n = L.dim
    out = {}
    for i, j in combinations(range(n), 2):
        out[(i, j)] = [nab[i][k][j] - nab[j][k][i] - L.c[i][j][k] for k in range(n)]
    return out


@dataclass(frozen=True)
class CurvatureTensor:
    """``R(e_i, e_j)`` as ``n x n`` matrices, for ``i < j``."""

    dim: int
    components: dict

    def __call__(self, i: int, j: int) -> Matrix:
        if i == j:
            return [[Fraction(0)] * self.dim for _ in range(self.dim)]
        if i < j:
            return self.components[(i, j)]
        return _mscale(self.components[(j, i)], -1)

    def is_zero(self) -> bool:
        return all(_is_zero(m) for m in self.components.values())


def curvature(L: MetricLieAlgebra, t) -> CurvatureTensor:
    """Curvature of ``nabla^t`` from its definition.

    ``R(X, Y) = [nabla_X, nabla_Y] - nabla_{[X, Y]}`` on invariant fields,
    which reduces to ``(t^2 - t) ad([X, Y])`` by the Jacobi identity.
    """
    L.require_valid()
    nab = connection_matrices(L, t)
    n = L.dim
    comps = {}
    for i, j in combinations(range(n), 2):
        r = _madd(_mmul(nab[i], nab[j]), _mscale(_mmul(nab[j], nab[i]), -1))
        for k in range(n):
            if L.c[i][j][k]:
                r = _madd(r, _mscale(nab[k], -L.c[i][j][k]))
        comps[(i, j)] = r
    return CurvatureTensor(n, comps)


def cartan_three_form(L: MetricLieAlgebra) -> Multivector:
    """``H(X, Y, Z) = ([X, Y], Z)``; coefficient of ``e^{ijk}`` (i<j<k) is ``c_ijk``."""
    L.require_valid()
    return Multivector(L.dim, {(1 << i) | (1 << j) | (1 << k): L.c[i][j][k]
                               for i, j, k in combinations(range(L.dim), 3)})


def bracket_norms_sum(L: MetricLieAlgebra) -> Fraction:
    """``sum_{i,j} |[e_i, e_j]|^2`` over ordered pairs."""
    n, c = L.dim, L.c
    return sum((c[i][j][k] ** 2 for i, j, k in product(range(n), repeat=3)), Fraction(0))


def scalar_curvature(L: MetricLieAlgebra) -> Fraction:
    """``kappa = 1/4 sum_{i,j} |[e_i, e_j]|^2`` for a bi-invariant metric."""
    L.require_valid()
    return bracket_norms_sum(L) / 4


def scalar_curvature_from_tensor(L: MetricLieAlgebra) -> Fraction:
    """``sum_{i,j} <R(e_i, e_j) e_j, e_i>`` with the Levi-Civita curvature."""
    R = curvature(L, Fraction(1, 2))
    n = L.dim
    return sum((R(i, j)[i][j] for i in range(n) for j in range(n)), Fraction(0))


def h_norm_squared(L: MetricLieAlgebra) -> Fraction:
    """``|H|^2 = 1/6 sum_{i,j,k} ([e_i, e_j], e_k)^2``."""
    L.require_valid()
    return bracket_norms_sum(L) / 6


def rho(L: MetricLieAlgebra) -> tuple[Fraction, Fraction]:
    """The vanishing constant ``kappa/4 - |H|^2/8`` and its Cauchy-Schwarz lower bound."""
    value = scalar_curvature(L) / 4 - h_norm_squared(L) / 8
    bound = (Fraction(1, 16) - Fraction(1, 48)) * bracket_norms_sum(L)
    return value, bound


def connection_matrix_on_forms(L: MetricLieAlgebra, t, i: int) -> OperatorMatrix:
    """``nabla^t_{e_i}`` acting on invariant forms.

    On 1-forms ``(nabla theta)(Y) = -theta(nabla Y)``, so
    ``nabla_{e_i} e^k = -t sum_j c_ijk e^j``; extended to all degrees as a
    degree-0 derivation.
    """
    L.require_valid()
    n = L.dim
    if not 0 <= i < n:
        raise IndexError(f"basis index {i} out of range")
    t = Fraction(t)
    # images of the 1-forms e^k as {bit: coeff}
    one = [{1 << j: -t * L.c[i][j][k] for j in range(n) if L.c[i][j][k]} for k in range(n)]

    def column(mask):
        out: dict[int, Fraction] = {}
        for k in range(n):
            if not mask >> k & 1:
                continue
            rest = mask ^ (1 << k)
            for bit, v in one[k].items():
                if rest & bit:
                    continue
                # replace e^k by e^j in place: sign of moving j into k's slot
                lo, hi = sorted((bit, 1 << k))
                between = popcount(rest & (hi - 1) & ~(2 * lo - 1))
                s = -1 if between & 1 else 1
                m = rest | bit
                out[m] = out.get(m, 0) + s * v
        return {m: v for m, v in out.items() if v}

    return OperatorMatrix.from_blade_map(n, column, "even")

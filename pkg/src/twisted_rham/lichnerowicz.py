"""Lichnerowicz formula and the vanishing criterion on invariant forms.

Forms are identified with ``S (x) S``.  A spin connection
``nabla^g + s (i_X H)`` on the left factor and ``nabla^g + r (i_X H)`` on the
right factor act on forms as

    A_X = nabla^g_X + s (i_X H) . phi - r phi . (i_X H)

(the right factor is transported by the anti-automorphism that turns a
left action into a right one, which flips the sign of 2-form actions).
With ``r = -1/4`` the right factor carries the flat left-trivialization
connection of the group, so its curvature drops out of the formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exalg import Multivector, clifford_form_matrix, contract, left_clifford_matrix
from .liealg import (MetricLieAlgebra, cartan_three_form, h_norm_squared, rho,
                     scalar_curvature)
from .opmatrix import OperatorMatrix
from .twisted import apply, ce_differential, kernel_dimensions, levi_civita_on_forms

FLAT_TWIST = Fraction(-1, 4)
VERIFIED_S = (Fraction(-1, 4), Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1))


class OutOfScopeError(ValueError):
    """Inputs whose dH or twist-curvature terms would need an unverified convention."""


@dataclass(frozen=True)
class ConnectionPair:
    """Spin-lift weights on the left and right factors of ``S (x) S``."""

    left_s: Fraction
    right_s: Fraction = FLAT_TWIST

    def __post_init__(self):
        object.__setattr__(self, "left_s", Fraction(self.left_s))
        object.__setattr__(self, "right_s", Fraction(self.right_s))


def _contracted_forms(L: MetricLieAlgebra) -> list[Multivector]:
    key = "contracted_cartan"
    if key not in L._cache:
        H = cartan_three_form(L)
        L._cache[key] = [contract(i, H) for i in range(L.dim)]
    return L._cache[key]


def _clifford_parts(L, i):
    key = ("clifford_parts", i)
    if key not in L._cache:
        iH = _contracted_forms(L)[i]
        L._cache[key] = (clifford_form_matrix(iH, "left"), clifford_form_matrix(iH, "right"))
    return L._cache[key]


def covariant_matrix(L: MetricLieAlgebra, pair: ConnectionPair, i: int) -> OperatorMatrix:
    """``A_i`` for the tensor-product connection given by ``pair``."""
    L.require_valid()
    left, right = _clifford_parts(L, i)
    return levi_civita_on_forms(L)[i] + pair.left_s * left - pair.right_s * right


def right_factor_matrix(L: MetricLieAlgebra, weight, i: int) -> OperatorMatrix:
    """The right factor's connection alone: its Levi-Civita half plus the twist.

    The Levi-Civita spin connection in the invariant frame is
    ``(1/4)(i_X H)``, so the right factor at weight ``w`` contributes
    ``-(1/4 + w) phi . (i_X H)``.
    """
    _, right = _clifford_parts(L, i)
    return -(Fraction(1, 4) + Fraction(weight)) * right


def twist_curvature(L: MetricLieAlgebra, weight) -> dict[tuple[int, int], OperatorMatrix]:
    """``F(e_i, e_j) = [B_i, B_j] - B_{[e_i, e_j]}`` of the right-factor connection."""
    L.require_valid()
    n = L.dim
    B = [right_factor_matrix(L, weight, i) for i in range(n)]
    out = {}
    for i, j in combinations(range(n), 2):
        F = B[i].commutator(B[j])
        for k in range(n):
            if L.c[i][j][k]:
                F = F - L.c[i][j][k] * B[k]
        out[(i, j)] = F
    return out


def twist_is_flat(L: MetricLieAlgebra, weight) -> bool:
    return all(F.is_zero() for F in twist_curvature(L, weight).values())


def rough_laplacian(L: MetricLieAlgebra, pair: ConnectionPair) -> OperatorMatrix:
    """``nabla* nabla = sum_i A_i^T A_i`` on invariant forms.

    The divergence term ``nabla_{nabla^g_{e_i} e_i}`` vanishes because
    ``[e_i, e_i] = 0``; that is asserted rather than assumed.
    """
    L.require_valid()
    n = L.dim
    if any(L.c[i][i][k] for i in range(n) for k in range(n)):
        raise AssertionError("nonzero divergence term nabla^g_{e_i} e_i")
    out = OperatorMatrix.zero(n)
    for i in range(n):
        A = covariant_matrix(L, pair, i)
        out = out + A.transpose() @ A
    return out


def dirac_family(L: MetricLieAlgebra, s) -> OperatorMatrix:
    """``D^{s/3}``: left weight ``s/3``, flat right factor."""
    pair = ConnectionPair(Fraction(s) / 3, FLAT_TWIST)
    n = L.dim
    out = OperatorMatrix.zero(n)
    for i in range(n):
        out = out + left_clifford_matrix(i, n) @ covariant_matrix(L, pair, i)
    return out


def _require_scope(L):
    H = cartan_three_form(L)
    if not apply(ce_differential(L), H).is_zero():
        raise OutOfScopeError("dH != 0")
    if not twist_is_flat(L, FLAT_TWIST):
        raise OutOfScopeError("twisting connection is not flat")


def lichnerowicz_residual(L: MetricLieAlgebra, s) -> OperatorMatrix:
    """``(D^{s/3})^2 - Delta^s - kappa/4 + 2 s^2 |H|^2``; zero when the formula holds."""
    L.require_valid()
    _require_scope(L)
    s = Fraction(s)
    D = dirac_family(L, s)
    lap = rough_laplacian(L, ConnectionPair(s, FLAT_TWIST))
    shift = scalar_curvature(L) / 4 - 2 * s * s * h_norm_squared(L)
    return D @ D - lap - OperatorMatrix.scalar(L.dim, shift)


@dataclass
class LichnerowiczReport:
    algebra: str
    s: Fraction
    residual_max_abs: Fraction
    kappa: Fraction
    h_norm_sq: Fraction
    rho: Fraction
    cs_bound: Fraction
    kernel_dims: tuple[int, int]
    verdict: str
    notes: list[str] = field(default_factory=list)

    @property
    def bound_holds(self) -> bool:
        return self.rho >= self.cs_bound


def vanishing_verdict(L: MetricLieAlgebra) -> LichnerowiczReport:
    """Apply the positivity criterion and confirm it against the exact kernel of ``D^2``."""
    L.require_valid()
    s = Fraction(1, 4)
    value, bound = rho(L)
    D = dirac_family(L, s)
    D2 = D @ D
    residual = lichnerowicz_residual(L, s)
    kernel = kernel_dimensions(D2)
    notes = []
    if value > 0:
        verdict = "vanishes" if kernel == (0, 0) else "does_not_vanish"
        if kernel != (0, 0):
            notes.append("positive rho but nonzero kernel: inconsistent")
    else:
        verdict = "criterion_not_met" if kernel != (0, 0) else "vanishes"
    return LichnerowiczReport(
        algebra=L.name, s=s, residual_max_abs=residual.max_abs(),
        kappa=scalar_curvature(L), h_norm_sq=h_norm_squared(L), rho=value, cs_bound=bound,
        kernel_dims=kernel, verdict=verdict, notes=notes)

"""The Z2-graded twisted Chevalley-Eilenberg complex ``(Lambda g*, d + H)``.

Invariant forms on a compact Lie group with a bi-invariant metric are the
exterior algebra of the dual Lie algebra; every operator below is a finite
exact matrix on it, so cohomology is computed by exact ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exalg import (Multivector, Orientation, contract, hodge_star,
                    clifford_form_matrix, left_clifford_matrix, operator_matrix,
                    popcount, wedge, wedge_matrix)
from .liealg import MetricLieAlgebra, cartan_three_form, connection_matrix_on_forms
from .opmatrix import OperatorMatrix, block_indices, degree_indices, rank

HALF = Fraction(1, 2)


class NotClosedError(ValueError):
    """The twisting form is not an odd-degree closed form."""


def ce_differential(L: MetricLieAlgebra) -> OperatorMatrix:
    """Chevalley-Eilenberg differential, ``d e^k = -sum_{i<j} c_ijk e^{ij}``."""
    L.require_valid()
    key = "ce_differential"
    if key in L._cache:
        return L._cache[key]
    n = L.dim
    d1 = []
    for k in range(n):
        d1.append(Multivector(n, {(1 << i) | (1 << j): -L.c[i][j][k]
                                  for i in range(n) for j in range(i + 1, n)}))

    def d(a: Multivector) -> Multivector:
        out = Multivector(n)
        for mask, coeff in a.items():
            # d(e^{i1} ^ ... ^ e^{ip}) = sum_r (-1)^(r-1) e^{i1} ^ .. ^ d e^{ir} ^ ..
            before = Multivector.scalar(n, coeff)
            rest = mask
            sign = 1
            while rest:
                low = rest & -rest
                rest ^= low
                k = low.bit_length() - 1
                after = Multivector(n, {rest: 1})
                out = out + sign * wedge(wedge(before, d1[k]), after)
                before = wedge(before, Multivector.vector(n, k))
                sign = -sign
        return out

    m = operator_matrix(d, n, "odd")
    L._cache[key] = m
    return m


def apply(m: OperatorMatrix, a: Multivector) -> Multivector:
    if m.dim != a.dim:
        raise ValueError("dimension mismatch")
    return Multivector(a.dim, m.apply(a.coeffs))


def adjoint(m: OperatorMatrix) -> OperatorMatrix:
    """Formal adjoint: the transpose, since blades are orthonormal."""
    return m.transpose()


@dataclass(frozen=True)
class TwistedComplex:
    L: MetricLieAlgebra
    H: Multivector
    d: OperatorMatrix
    twisted_d: OperatorMatrix

    @property
    def dim(self) -> int:
        return self.L.dim

    def adjoint(self) -> OperatorMatrix:
        return adjoint(self.twisted_d)

    def dirac(self) -> OperatorMatrix:
        return self.twisted_d + self.adjoint()


def twisted_differential(L: MetricLieAlgebra, H: Multivector | None = None) -> TwistedComplex:
    """``d + H ^ .`` for a closed odd form ``H`` (default: the Cartan 3-form)."""
    if H is None:
        H = cartan_three_form(L)
    d = ce_differential(L)
    if H.dim != L.dim:
        raise ValueError(f"form dimension {H.dim} does not match algebra dimension {L.dim}")
    even = sorted(p for p in H.degrees() if p % 2 == 0)
    if even:
        raise NotClosedError(f"twisting form has even-degree component(s) {even}")
    dH = apply(d, H)
    if not dH.is_zero():
        raise NotClosedError(f"twisting form is not closed: dH = {dH}")
    td = d + wedge_matrix(H)
    if not (td @ td).is_zero():
        raise AssertionError("(d + H)^2 != 0 for a closed odd H")
    td = OperatorMatrix._trusted(td.dim, td._cols, "odd")
    return TwistedComplex(L, H, d, td)


def dirac_operator(L: MetricLieAlgebra, H: Multivector | None = None) -> OperatorMatrix:
    """``(d + H) + (d + H)*``."""
    return twisted_differential(L, H).dirac()


def _hodge_matrix(n, orientation):
    return operator_matrix(lambda a: hodge_star(a, orientation), n)


def star_adjoint_residuals(L: MetricLieAlgebra, H: Multivector | None = None,
                           orientation: int = Orientation.POSITIVE) -> dict[int, OperatorMatrix]:
    """Per-degree residual of ``(-1)^{n(p+1)} * H *`` against ``(H ^ .)^T``.

    Key ``p`` holds the residual restricted to inputs of degree ``p``.
    """
    if H is None:
        H = cartan_three_form(L)
    n = L.dim
    star = _hodge_matrix(n, orientation)
    via_star = star @ wedge_matrix(H) @ star
    transpose = adjoint(wedge_matrix(H))
    out = {}
    for p in range(n + 1):
        sign = -1 if (n * (p + 1)) % 2 else 1
        cols = []
        for j in range(1 << n):
            if popcount(j) != p:
                cols.append({})
                continue
            col = {i: sign * v for i, v in via_star.column(j).items()}
            for i, v in transpose.column(j).items():
                col[i] = col.get(i, 0) - v
            cols.append(col)
        out[p] = OperatorMatrix(n, cols)
    return out


def star_adjoint_cross_check(L: MetricLieAlgebra, H: Multivector | None = None,
                             orientation: int = Orientation.POSITIVE) -> OperatorMatrix:
    """Sum of the per-degree residuals; zero when the adjoint formula holds."""
    res = star_adjoint_residuals(L, H, orientation)
    total = OperatorMatrix.zero(L.dim)
    for m in res.values():
        total = total + m
    return total


def star_adjoint_report(L: MetricLieAlgebra, H: Multivector | None = None) -> dict:
    """Which orientations reproduce the transpose adjoint, degree by degree."""
    report = {}
    for o in Orientation:
        res = star_adjoint_residuals(L, H, o)
        report[int(o)] = {p: m.is_zero() for p, m in res.items()}
    return report


def levi_civita_on_forms(L: MetricLieAlgebra) -> list[OperatorMatrix]:
    key = "levi_civita_on_forms"
    if key not in L._cache:
        L._cache[key] = [connection_matrix_on_forms(L, HALF, i) for i in range(L.dim)]
    return L._cache[key]


def dirac_from_clifford(L: MetricLieAlgebra, H: Multivector | None = None,
                        left_weight=Fraction(1, 12), right_weight=Fraction(1, 4)) -> OperatorMatrix:
    """Dirac operator of ``nabla^g + left H`` on the left spinor factor.

    ``sum_i e_i . (nabla^g_{e_i} phi + lw (e_i _| H) . phi + rw phi . (e_i _| H))``
    with Clifford multiplication on the left factor only.  ``right_weight``
    is the coefficient of the right Clifford action as it appears after the
    right-factor connection ``nabla^g - rw H`` is transported to forms.
    """
    if H is None:
        H = cartan_three_form(L)
    L.require_valid()
    n = L.dim
    if H.degrees() - {3}:
        raise ValueError("the Clifford construction expects a 3-form")
    lw, rw = Fraction(left_weight), Fraction(right_weight)
    nabla = levi_civita_on_forms(L)
    total = OperatorMatrix.zero(n)
    for i in range(n):
        iH = contract(i, H)
        A = nabla[i]
        if lw:
            A = A + lw * clifford_form_matrix(iH, "left")
        if rw:
            A = A + rw * clifford_form_matrix(iH, "right")
        total = total + left_clifford_matrix(i, n) @ A
    return total


def untwisted_dirac_check(L: MetricLieAlgebra) -> OperatorMatrix:
    """``sum_i e_i . nabla^g_{e_i} - (d + d*)``; zero when ``D^g = d + d*``."""
    n = L.dim
    nabla = levi_civita_on_forms(L)
    D = OperatorMatrix.zero(n)
    for i in range(n):
        D = D + left_clifford_matrix(i, n) @ nabla[i]
    d = ce_differential(L)
    return D - (d + adjoint(d))


# exact ranks and kernels

def _parity_blocks(n):
    return block_indices(n, 0), block_indices(n, 1)


def twisted_betti(L: MetricLieAlgebra, H: Multivector | None = None) -> tuple[int, int]:
    """``(dim H^+, dim H^-)`` of ``d + H`` from exact ranks of its parity blocks."""
    cx = twisted_differential(L, H)
    return betti_from_differential(cx.twisted_d)


def betti_from_differential(td: OperatorMatrix) -> tuple[int, int]:
    even, odd = _parity_blocks(td.dim)
    r_plus = rank(td, odd, even)    # Lambda_even -> Lambda_odd
    r_minus = rank(td, even, odd)   # Lambda_odd -> Lambda_even
    b_even = (len(even) - r_plus) - r_minus
    b_odd = (len(odd) - r_minus) - r_plus
    return b_even, b_odd


def kernel_dimensions(m: OperatorMatrix) -> tuple[int, int]:
    """Kernel dimension of an even operator on each parity block."""
    even, odd = _parity_blocks(m.dim)
    return len(even) - rank(m, even, even), len(odd) - rank(m, odd, odd)


def harmonic_dimensions(L: MetricLieAlgebra, H: Multivector | None = None) -> tuple[int, int]:
    """Dimensions of ``ker D^2`` on even and odd forms, ``D = (d+H) + (d+H)*``."""
    D = dirac_operator(L, H)
    return kernel_dimensions(D @ D)


def ordinary_betti(L: MetricLieAlgebra) -> list[int]:
    """Untwisted CE cohomology dimensions ``b_0 .. b_n``."""
    d = ce_differential(L)
    n = L.dim
    ranks = [rank(d, degree_indices(n, p + 1), degree_indices(n, p)) if p < n else 0
             for p in range(n + 1)]
    out = []
    for p in range(n + 1):
        dim_p = len(degree_indices(n, p))
        out.append(dim_p - ranks[p] - (ranks[p - 1] if p else 0))
    return out


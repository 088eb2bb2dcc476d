"""Built-in compact Lie algebras with rational orthonormal structure constants."""

from __future__ import annotations

from fractions import Fraction

from .liealg import MetricLieAlgebra


def su2(c=1, name: str | None = None) -> MetricLieAlgebra:
    """``[e1, e2] = c e3`` and cyclic; ``c = 1`` is so(3) with ``|x|^2 = -tr(ad x ad x)/2``."""
    c = Fraction(c)
    return MetricLieAlgebra.from_brackets(
        3, {(0, 1, 2): c, (1, 2, 0): c, (0, 2, 1): -c},
        name or ("su2" if c == 1 else f"su2_c{c}"))


def abelian(n: int) -> MetricLieAlgebra:
    return MetricLieAlgebra.abelian(n, f"torus_{n}")


def direct_sum(*parts: MetricLieAlgebra, name: str | None = None) -> MetricLieAlgebra:
    n = sum(p.dim for p in parts)
    brackets = {}
    offset = 0
    for p in parts:
        for (i, j, k), v in p.brackets().items():
            brackets[(i + offset, j + offset, k + offset)] = v
        offset += p.dim
    return MetricLieAlgebra.from_brackets(n, brackets, name or "_x_".join(p.name for p in parts))


def cayley_orthogonal(skew) -> list[list[Fraction]]:
    """Rational orthogonal matrix ``(I - A)(I + A)^{-1}`` from a skew matrix ``A``."""
    n = len(skew)
    a = [[Fraction(x) for x in row] for row in skew]
    eye = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    plus = [[eye[i][j] + a[i][j] for j in range(n)] for i in range(n)]
    minus = [[eye[i][j] - a[i][j] for j in range(n)] for i in range(n)]
    # Gauss-Jordan inverse of I + A (always invertible for skew A)
    aug = [plus[i] + eye[i] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    return [[sum(minus[i][k] * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def rotated(L: MetricLieAlgebra, q, name: str | None = None) -> MetricLieAlgebra:
    """Structure constants in the orthonormal basis ``f_i = sum_a q[a][i] e_a``."""
    n = L.dim
    c = L.c
    new = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    nz = [(a, b, d, c[a][b][d]) for a in range(n) for b in range(n) for d in range(n) if c[a][b][d]]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                new[i][j][k] = sum((v * q[a][i] * q[b][j] * q[d][k] for a, b, d, v in nz),
                                   Fraction(0))
    return MetricLieAlgebra(n, new, name or f"{L.name}_rotated")


def _mixing_skew(n):
    # a fixed skew matrix coupling every pair of basis vectors
    return [[Fraction(0) if i == j else Fraction(j - i, 2 + (i + j) % 3) for j in range(n)]
            for i in range(n)]


def builtin_catalog() -> dict[str, MetricLieAlgebra]:
    """Every built-in algebra by name (``so3`` is an alias of ``su2``)."""
    cat = {}
    cat["su2"] = su2(1)
    cat["so3"] = su2(1, name="so3")
    cat["su2_c2"] = su2(2)
    cat["su2_x_su2"] = direct_sum(su2(1), su2(1), name="su2_x_su2")
    cat["su2_x_u1"] = direct_sum(su2(1), abelian(1), name="su2_x_u1")
    cat["su2_x_su2_mixed"] = rotated(direct_sum(su2(1), su2(2)),
                                     cayley_orthogonal(_mixing_skew(6)), name="su2_x_su2_mixed")
    for n in range(1, 5):
        cat[f"torus_{n}"] = abelian(n)
    cat["su2_cubed"] = direct_sum(su2(1), su2(1), su2(1), name="su2_cubed")
    return dict(sorted(cat.items()))


def get(name: str) -> MetricLieAlgebra:
    cat = builtin_catalog()
    if name not in cat:
        raise KeyError(f"unknown algebra {name!r}; known: {', '.join(cat)}")
    return cat[name]

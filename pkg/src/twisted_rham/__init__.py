"""Exact twisted de Rham cohomology of compact Lie algebras.

The operator ``(d + H) + (d + H)*`` on invariant forms, its Clifford-algebra
description through connections with skew torsion, the Lichnerowicz
formula, and the vanishing of ``d + H`` cohomology for the Cartan 3-form.
All arithmetic is exact over the rationals.
"""

from .exalg import (Multivector, Orientation, clifford_form_action, contract, hodge_star,
                    inner, left_clifford, operator_matrix, right_clifford, wedge)
from .liealg import (MetricLieAlgebra, cartan_three_form, curvature, h_norm_squared, rho,
                     scalar_curvature)
from .opmatrix import OperatorMatrix, bareiss_rank
from .twisted import (dirac_from_clifford, dirac_operator, harmonic_dimensions,
                      ordinary_betti, twisted_betti, twisted_differential)
from .lichnerowicz import (ConnectionPair, dirac_family, lichnerowicz_residual,
                           rough_laplacian, vanishing_verdict)

__all__ = [
    "Multivector", "Orientation", "clifford_form_action", "contract", "hodge_star", "inner",
    "left_clifford", "operator_matrix", "right_clifford", "wedge",
    "MetricLieAlgebra", "cartan_three_form", "curvature", "h_norm_squared", "rho",
    "scalar_curvature", "OperatorMatrix", "bareiss_rank",
    "dirac_from_clifford", "dirac_operator", "harmonic_dimensions", "ordinary_betti",
    "twisted_betti", "twisted_differential",
    "ConnectionPair", "dirac_family", "lichnerowicz_residual", "rough_laplacian",
    "vanishing_verdict",
]

"""Discrete Schroedinger problems on a finite lattice.

Potentials are plain sequences of floats, V(1)..V(p). Boundary conditions
default to Dirichlet; see :class:`BoundaryCondition`.

>>> import latdet
>>> latdet.det_ratio(latdet.linear_lattice_potential(1.0, 1))
1.0625
"""

from ._latdet import (
    BoundaryCondition,
    airy,
    bessel_j,
    bessel_y,
    char_poly_coefficients,
    characteristic,
    christoffel_darboux_residual,
    continuum_linear_det_ratio,
    continuum_rosen_morse_det_ratio,
    det_ratio,
    discdet_p3_closed_form,
    eigenvalues,
    gamma,
    gram_matrix,
    hyp2f1,
    legendre_p,
    linear_lattice_potential,
    lommel,
    lommel_bessel_residual,
    lommel_recurrence,
    lommel_transitional_asymptotic,
    normalized_casoratian,
    reduced_determinant_zero_mode,
    rosen_morse_lattice_potential,
    sample_interpolate,
    solution_values,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

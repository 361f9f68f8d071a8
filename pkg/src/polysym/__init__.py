"""Exact computations with multisymmetric polynomials and their relations."""

from .polycore import DomainError, Poly, ResourceLimitError, SpaceMismatchError, TSpace, XSpace
from .invariant_ring import dim_invariant_component, orbit_basis, polarized_power_sum
from .free_algebra import gl_orbit_span, is_highest_weight, phi_eval, raising_action
from .relations import gram_relation, j222, j32, j42, psi
from .schur import kernel_decomposition, kostka, weyl_dim
from .charring import CharElem, TruncatedSeries, char_mul, molien_hilbert_R, secondary_hilbert
from .ideal_lab import (
    check_generation,
    check_minimality,
    kernel_component_basis,
    lowerbound_check,
    orbit_generators,
    reduce_mod_P,
)

__version__ = "0.1.0"

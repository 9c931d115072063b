"""Scattering through delta'_theta combs.

Three independent routes to the transmission probability:

* :mod:`dpcomb.transfer` - ordered products of SU(1,1) transfer matrices,
* :mod:`dpcomb.comb` - closed forms in Chebyshev polynomials of the second kind,
* :mod:`dpcomb.oracle` - RK4 integration through regularised dipole arrays
  built in :mod:`dpcomb.regularized`.
"""
__version__ = "0.1.0"

from .chebyshev import chebyshev_u, chebyshev_u_pair
from .comb import (
    Passband,
    ResonanceSet,
    amplitudes_closed_form,
    canonical_theta,
    envelope,
    passband,
    resonances,
    small_theta_bound,
    theta_to_one_bound,
    transmission_closed_form,
)
from .errors import ConstructionError, DomainError, IntegrationError, NumericalCorruptionError
from .oracle import (
    FundamentalPair,
    array_transmission_numeric,
    dipole_matrix_numeric,
    integrate_dipole,
)
from .regularized import (
    DipoleArraySpec,
    ResonantPotential,
    custom_potential,
    dipole_matrix_analytic,
    example_potential,
    regularized_comb_matrix,
    regularized_transmission,
)
from .transfer import (
    Amplitudes,
    CombSpec,
    Contrast,
    TransferMatrix,
    amplitudes_from_matrix,
    comb_matrix,
    inverse,
    single_matrix,
)

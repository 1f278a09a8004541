"""Lower bounds for real self-dual spaces via characters of so(2r+1) and sp(2r)."""

__version__ = "0.1.0"

from .bounds import (
    BoundResult,
    PairingClass,
    PairingSpec,
    Problem,
    all_bounds,
    enumerate_pairings,
    lower_bound,
    signature,
    trivial_multiplicity,
)
from .characters import CycleGroup, char_value, freudenthal_weights, numerator, schur, vandermonde, weyl_dim
from .laurent import LaurentPoly, coeff, evaluate_at_one, exact_div, mul, power_substitute
from .lie import (
    LieContext,
    RamificationPoint,
    Weight,
    from_xi,
    grassmann_d,
    make_context,
    mu_A_k,
    reduced_grassmann_d,
    to_bar,
    transpose_BC,
)
from .tables import reproduce_table

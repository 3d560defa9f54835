"""Leonard systems in exact rational arithmetic: split realizations, the EKR
basis with its transition matrices, and the LP bound for t-intersecting families."""

from .ekr import EkrSystem, ekr_coefficients, wt_subspace_oracle
from .families import (DualHahnParams, KrawtchoukParams, QRacahParams, array_from_eigenvalues,
                       build, dual_hahn, hamming_preset, johnson_preset, krawtchouk, q_racah)
from .hypergeom import HypergeomSpec, hypergeom_terminating, pochhammer, q_pochhammer
from .linalg import Matrix, Subspace
from .lp import DualVector, bound_closed_form, dual_vector, f_closed_form, second_eigenmatrix
from .parameters import (D4Element, Inadmissible, InvalidParameterArray, ParameterArray,
                         apply_d4, base_class, validate)
from .realization import ConsistencyError, Realization, realize
from .verify import verify_all

__all__ = [
    "ConsistencyError", "D4Element", "DualHahnParams", "DualVector", "EkrSystem",
    "HypergeomSpec", "Inadmissible", "InvalidParameterArray", "KrawtchoukParams", "Matrix",
    "ParameterArray", "QRacahParams", "Realization", "Subspace", "apply_d4",
    "array_from_eigenvalues", "base_class", "bound_closed_form", "build", "dual_hahn",
    "dual_vector", "ekr_coefficients", "f_closed_form", "hamming_preset",
    "hypergeom_terminating", "johnson_preset", "krawtchouk", "pochhammer", "q_pochhammer",
    "q_racah", "realize", "second_eigenmatrix", "validate", "verify_all", "wt_subspace_oracle",
]

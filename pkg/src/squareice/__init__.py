"""Exact enumeration of alternating sign matrices through six-vertex Hankel determinants."""
from .closed_forms import closed_count, closed_refined, generating_function_ice
from .exact import LaurentPoly, QuadScalar, TaylorSeries
from .hankel import (boundary_correlator_det, enumeration_from_partition, factorization_check,
                     hankel_determinant, partition_function, refined_from_correlator)
from .moments import FREE_FERMION, ICE, MINUS_HALF, POINTS, cot_derivative_moments, point_for_weight
from .oracle import oracle_counts, transfer_refined
from .refined3 import assemble, b_closed_form

__version__ = "0.1.0"

"""Deciders, decompositions, centralizers, censuses and identity checks."""

from .census import charp_sweep, map_space_dimension, maps_from_basis, predicted_dimension
from .centralizer import centralizer_closed_form, centralizer_oracle, lemma2_form_check, span_s_rank
from .deciders import DecideReport, Witness, is_centralizing, is_commuting
from .decompose import (
    CentralizingDecomposition,
    CommutingDecomposition,
    DecompositionError,
    decompose_centralizing,
    decompose_commuting,
)
from .identities import (
    CoefficientSystemResult,
    IdentityCheckReport,
    IdentityRecord,
    factorial_inequality_check,
    lemma3_coefficient_system,
    lemma3_report,
    power_closed_form_check,
    s1_commutator_check,
    w1c_identity_check,
)

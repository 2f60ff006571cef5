"""Centralizing and commuting linear maps on strictly upper triangular matrices, exactly."""

__version__ = "0.1.0"

from .exactfield import QQ, FieldSpec, ModP, parse_field, parse_scalar, render_scalar
from .maps import MapOnN, OmegaTriple, g_map, identity_map, map_from_images, p_map, zeta_map, omega_map
from .nilmatrix import InvTriMatrix, RingContext, UTMatrix, commutator, in_center, in_omega, power, unit

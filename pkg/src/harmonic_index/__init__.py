"""Exact harmonic-sequence invariants of rational curves in CP^n and index
lower bounds for the derived complex isotropic harmonic maps."""

from .scalar import GaussianRational, parse_scalar
from .poly import NEG_INF, Poly
from .curve import ProjectiveCurve, RationalSelfMap, make_curve
from .sequence import SequenceInvariants, invariants, verify_plucker

__version__ = "0.1.0"

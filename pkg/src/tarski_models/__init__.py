"""Exact models of Tarski-style plane geometry and an axiom checking engine."""
from .scalar import Scalar, from_rational, parse_scalar, sqrt_nonneg

__version__ = "0.1.0"

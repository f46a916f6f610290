"""Exact verification of the recorded root-system, torus, nilpotent-orbit
and affine-Hecke computations.

Everything is integer or Laurent-polynomial arithmetic; no floats anywhere
in the checked path.  `verify_all` runs the whole sweep and returns a
report object; the `hecke-verify` console script wraps it.
"""

from .rootsystem import RootSystem, RootSystemError, build, parse_type
from .verify import ConfigError, RunConfig, VerificationReport, verify_all

__version__ = "0.1.0"

__all__ = [
    "RootSystem", "RootSystemError", "build", "parse_type",
    "ConfigError", "RunConfig", "VerificationReport", "verify_all",
    "__version__",
]

"""Conformal partition counts and self-dual symmetric polynomials."""

from ._conformal import *  # noqa: F401,F403
from ._conformal import (
    BracketError,
    ConformalError,
    InconsistencyError,
    MismatchError,
    RangeError,
    ResourceCeilingError,
    UnknownGroupError,
)

__version__ = "0.1.0"

"""cellkit: exact Kazhdan-Lusztig cells, asymptotic based rings, and
group-theoretical fusion-category counting over finite groups."""

__version__ = "0.1.0"

from .errors import (
    CellkitError,
    GoldenMismatch,
    GuardExceeded,
    IntegrityError,
    InvalidInput,
)
from .guards import DEFAULT_GUARDS, Guards
from .laurent import LaurentPoly

__all__ = [
    "CellkitError",
    "GuardExceeded",
    "IntegrityError",
    "InvalidInput",
    "GoldenMismatch",
    "Guards",
    "DEFAULT_GUARDS",
    "LaurentPoly",
    "__version__",
]

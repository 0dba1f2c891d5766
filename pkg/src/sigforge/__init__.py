"""sigforge: configurable digital signatures.

RSA, DSA, ECDSA and EdDSA over interchangeable curve forms (prime-field
Weierstrass, binary-field Koblitz, prime-field Edwards), with arbitrary
algorithm x form x curve combinations, plus a benchmark harness.

These are textbook constructions without padding schemes, encoding standards
or side-channel hardening; they are meant for study and measurement, not for
protecting production traffic.
"""

from .cryptosystem import Cryptosystem
from .curves import CurveSpec, Point
from .errors import (
    KeyFileError,
    MissingPrivateKeyError,
    NotInvertibleError,
    UnknownCurveError,
)
from .numeric import RngHandle
from .registry import curve_names, get_curve

__version__ = "0.1.0"

__all__ = [
    "Cryptosystem",
    "CurveSpec",
    "KeyFileError",
    "MissingPrivateKeyError",
    "NotInvertibleError",
    "Point",
    "RngHandle",
    "UnknownCurveError",
    "curve_names",
    "get_curve",
    "__version__",
]

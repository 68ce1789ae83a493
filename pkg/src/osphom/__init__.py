"""osphom: generalized orthosymplectic Lie superalgebras over involutive
superalgebras, their Steinberg-type central extensions via explicit
2-cocycles, and the low-degree homology groups that classify them --
all in exact arithmetic over Q or odd prime fields, with an independent
Chevalley-Eilenberg oracle for cross-checking."""

from .linalg import FieldSpec, backend_name
from .reports import TOOL_VERSION as __version__  # noqa: F401
from .superalg import SuperAlgebra, parse_preset, preset_algebra

__all__ = [
    "FieldSpec",
    "SuperAlgebra",
    "backend_name",
    "parse_preset",
    "preset_algebra",
]

"""
Configuration package.

Provides circles-plus-oriented-arcs configurations on the sphere:
- Planar-map model and its operations (Configuration, dual, reverse, mirror, restrict, active_part)
- Isomorphism through canonical codes (canonical_code, isomorphic)
- The sixteen two-arc reference types (reference_configuration, REFERENCE_TYPES)
- Family classification (classify, classify_two_dim, ConfigClass)
- Debug text rendering (to_text)
"""

from .canonical import canonical_code, canonical_code_up_to_reversal, isomorphic
from .classify import (
    ClassificationError,
    ConfigClass,
    Family,
    arc_sides,
    central_circle,
    classify,
    classify_two_dim,
    pair_type,
)
from .model import (
    Circle,
    Configuration,
    ConfigurationError,
    DartKind,
    active_part,
    dual,
    ending_circles,
    mirror,
    restrict,
    reverse,
)
from .reference import REFERENCE_TYPES, reference_configuration
from .serialize import to_text

__all__ = [
    "Circle",
    "ClassificationError",
    "ConfigClass",
    "Configuration",
    "ConfigurationError",
    "DartKind",
    "Family",
    "REFERENCE_TYPES",
    "active_part",
    "arc_sides",
    "canonical_code",
    "canonical_code_up_to_reversal",
    "central_circle",
    "classify",
    "classify_two_dim",
    "dual",
    "ending_circles",
    "isomorphic",
    "mirror",
    "pair_type",
    "reference_configuration",
    "restrict",
    "reverse",
    "to_text",
]

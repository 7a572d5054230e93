"""
Cube of resolutions package.

Provides the combinatorics of the cube of resolutions of a diagram:
- Circle tracing per resolution with memoization (resolve, ResolutionTable)
- Face streams of every dimension (faces, face_masks, all_faces)
- Arc decorations, including the braid rule (Decoration, braid_decoration, parse_decoration)
- Graded generator basis (GeneratorBasis, gradings)
- Face configurations C(I, J, t) (build_configuration)
- Euler characteristic and Kauffman-bracket oracle (euler_characteristic, jones_polynomial)
"""

from .decoration import (
    Decoration,
    DecorationError,
    braid_decoration,
    flip,
    parse_decoration,
    random_decoration,
)
from .face_config import build_configuration
from .faces import active_crossings, all_faces, face_masks, faces
from .generators import Generator, GeneratorBasis, gradings
from .jones import euler_characteristic, format_laurent, jones_polynomial, kauffman_bracket
from .resolution import Circle, Resolution, ResolutionTable, resolve

__all__ = [
    "Circle",
    "Decoration",
    "DecorationError",
    "Generator",
    "GeneratorBasis",
    "Resolution",
    "ResolutionTable",
    "active_crossings",
    "all_faces",
    "braid_decoration",
    "build_configuration",
    "euler_characteristic",
    "face_masks",
    "faces",
    "flip",
    "format_laurent",
    "gradings",
    "jones_polynomial",
    "kauffman_bracket",
    "parse_decoration",
    "random_decoration",
    "resolve",
]

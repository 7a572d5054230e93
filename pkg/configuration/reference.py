"""
Reference two-dimensional configurations.

Every connected, active configuration with two arcs is one of sixteen
types up to sphere homeomorphism and arc reversal. Each type is stored
as a four-vertex planar map: vertices 0 and 1 are the ends of arc 0,
vertices 2 and 3 the ends of arc 1, every rotation is the standard
3-cycle, and a shape lists how circle darts pair up. Which end of each
arc is the tail picks the type within a shape.
"""

from functools import cache

from configuration.canonical import Code, canonical_code_up_to_reversal
from configuration.model import Configuration, DartKind

# shape name -> circle dart pairs
SHAPES: dict[str, tuple[tuple[int, int], ...]] = {
    "parallel": ((2, 7), (1, 8), (4, 11), (5, 10)),
    "bridge-nested": ((2, 7), (1, 8), (4, 5), (10, 11)),
    "bridge-crossed": ((1, 7), (2, 8), (4, 5), (10, 11)),
    "chain": ((1, 5), (4, 8), (7, 11), (10, 2)),
    "chain-twisted": ((1, 5), (4, 7), (8, 10), (2, 11)),
    "interleaved": ((1, 10), (2, 8), (4, 7), (5, 11)),
    "self-bridge": ((1, 5), (2, 7), (4, 8), (10, 11)),
    "self-bridge-flipped": ((1, 5), (2, 8), (4, 7), (10, 11)),
}

# type -> (shape, tail darts)
REFERENCE_TYPES: dict[int, tuple[str, tuple[int, int]]] = {
    1: ("parallel", (0, 6)),
    2: ("bridge-nested", (0, 6)),
    3: ("bridge-crossed", (0, 6)),
    4: ("chain", (0, 6)),
    5: ("chain-twisted", (0, 9)),
    6: ("self-bridge", (0, 9)),
    7: ("self-bridge-flipped", (0, 9)),
    8: ("interleaved", (0, 6)),
    9: ("parallel", (0, 9)),
    10: ("bridge-nested", (0, 9)),
    11: ("bridge-crossed", (0, 9)),
    12: ("chain", (0, 9)),
    13: ("chain-twisted", (0, 6)),
    14: ("self-bridge", (0, 6)),
    15: ("self-bridge-flipped", (0, 6)),
    16: ("interleaved", (0, 9)),
}

# Types whose F is not identically zero
CONTRIBUTING_TYPES = frozenset(range(1, 10))


def reference_configuration(type_number: int) -> Configuration:
    """Planar map of a reference type with synthetic segment labels."""
    shape, tails = REFERENCE_TYPES[type_number]
    sigma = []
    for v in range(4):
        base = 3 * v
        sigma.extend((base + 1, base + 2, base))

    alpha = [0] * 12
    segments: list[frozenset[int]] = [frozenset()] * 12
    for a, b in ((0, 3), (6, 9)):
        alpha[a], alpha[b] = b, a
    for label, (a, b) in enumerate(SHAPES[shape], start=1):
        alpha[a], alpha[b] = b, a
        segments[a] = segments[b] = frozenset({label})

    kinds = [int(DartKind.CIRCLE)] * 12
    for a, b in ((0, 3), (6, 9)):
        tail, head = (a, b) if a in tails else (b, a)
        kinds[tail] = int(DartKind.TAIL)
        kinds[head] = int(DartKind.HEAD)

    return Configuration(
        sigma=tuple(sigma),
        alpha=tuple(alpha),
        kinds=tuple(kinds),
        segments=tuple(segments),
        arc_ids=(0, 0, 1, 1),
    )


@cache
def reference_codes() -> dict[Code, int]:
    """Canonical code (up to reversal) of every reference type."""
    table: dict[Code, int] = {}
    for type_number in REFERENCE_TYPES:
        code = canonical_code_up_to_reversal(reference_configuration(type_number))
        if code in table:
            raise ValueError(
                f"Reference types {table[code]} and {type_number} coincide"
            )
        table[code] = type_number
    return table

"""
Decorations: one orientation bit per crossing for its surgery arc.
Bit 0 orients the arc from the 0-smoothing strand through the crossing's
first PD edge toward the other strand; bit 1 reverses it.
"""

import logging
from dataclasses import dataclass

import numpy as np

from diagram.models import LinkDiagram

logger = logging.getLogger(__name__)

_BRAID_BITS = {"horizontal": 1, "vertical": 0}


class DecorationError(Exception):
    """Raised for decorations that do not fit the diagram."""

    pass


@dataclass(frozen=True)
class Decoration:
    bits: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def mask(self) -> int:
        """Bits as an integer, crossing 1 in the most significant position."""
        return int(str(self), 2) if self.bits else 0

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def differing(self, other: "Decoration") -> list[int]:
        """1-based crossings where the two decorations disagree."""
        if self.n != other.n:
            raise DecorationError("Decorations have different lengths")
        return [i + 1 for i, (a, b) in enumerate(zip(self.bits, other.bits)) if a != b]


def braid_decoration(d: LinkDiagram) -> Decoration:
    """Arcs between vertical strands point right, the others point up.

    Raises:
        DecorationError: If the diagram is not a braid closure.
    """
    if not d.is_braid:
        raise DecorationError("Braid decoration needs a diagram built from a braid")
    return Decoration(tuple(_BRAID_BITS[tag] for tag in d.crossing_tags))


def random_decoration(n: int, seed: int) -> Decoration:
    rng = np.random.default_rng(seed)
    return Decoration(tuple(int(b) for b in rng.integers(0, 2, size=n)))


def flip(t: Decoration, m: int) -> Decoration:
    """Decoration that differs from `t` exactly at crossing m (1-based)."""
    if not 1 <= m <= t.n:
        raise DecorationError(f"Crossing {m} out of range 1..{t.n}")
    bits = list(t.bits)
    bits[m - 1] ^= 1
    return Decoration(tuple(bits))


def parse_decoration(spec: str, d: LinkDiagram, seed: int = 0) -> Decoration:
    """Resolve a --decoration value.

    Args:
        spec: "auto" (braid rule when available, else all zeros), "braid",
            "random" (seeded) or an explicit bit string of length n.
        d: Diagram the decoration belongs to.
        seed: Seed for "random".

    Raises:
        DecorationError: On a malformed or mis-sized bit string, or "braid"
            for a non-braid diagram.
    """
    spec = spec.strip()
    if spec == "auto":
        if d.is_braid:
            return braid_decoration(d)
        return Decoration((0,) * d.n)
    if spec == "braid":
        return braid_decoration(d)
    if spec == "random":
        return random_decoration(d.n, seed)
    if spec == "" and d.n == 0:
        return Decoration(())
    if set(spec) - {"0", "1"}:
        raise DecorationError(f"Decoration must be auto, braid, random or bits: {spec!r}")
    if len(spec) != d.n:
        raise DecorationError(f"Decoration has {len(spec)} bits for {d.n} crossings")
    return Decoration(tuple(int(ch) for ch in spec))

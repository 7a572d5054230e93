"""
Resolution circles of a link diagram.
Each crossing is smoothed per its resolution bit and the resulting closed
curves are traced through the PD edge labels. Circles are identified by
their smallest label, which keeps their order stable however they are
discovered.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from core.utils.bits import int_to_bits
from diagram.models import SMOOTHING_PARTNER, LinkDiagram

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Circle:
    """One closed curve of a resolution.

    Attributes:
        id: Smallest PD edge label on the circle.
        boundary: Edge labels in traversal order.
    """

    id: int
    boundary: tuple[int, ...]

    @cached_property
    def labels(self) -> frozenset[int]:
        return frozenset(self.boundary)


@dataclass(frozen=True)
class Resolution:
    bits: tuple[int, ...]
    circles: tuple[Circle, ...]

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @property
    def num_circles(self) -> int:
        return len(self.circles)

    @cached_property
    def circle_index(self) -> dict[int, int]:
        """Position in `circles` of the circle carrying each label."""
        return {
            label: idx
            for idx, circle in enumerate(self.circles)
            for label in circle.boundary
        }

    def index_of_id(self, circle_id: int) -> int:
        return self.circle_index[circle_id]


def resolve(d: LinkDiagram, bits: tuple[int, ...]) -> Resolution:
    """Smooth every crossing and trace the circles.

    Args:
        d: Diagram to resolve.
        bits: One smoothing bit per crossing, crossing 1 first.

    Returns:
        Resolution with circles sorted by id.
    """
    if len(bits) != d.n:
        raise ValueError(f"Resolution needs {d.n} bits, got {len(bits)}")

    visited: set[tuple[int, int]] = set()
    circles = []
    for ci in range(d.n):
        for pos in range(4):
            if (ci, pos) in visited:
                continue
            boundary = []
            slot = (ci, pos)
            while slot not in visited:
                visited.add(slot)
                label = d.crossings[slot[0]].edges[slot[1]]
                boundary.append(label)
                cj, pj = d.other_end(*slot)
                visited.add((cj, pj))
                slot = (cj, SMOOTHING_PARTNER[bits[cj]][pj])
            circles.append(Circle(id=min(boundary), boundary=tuple(boundary)))

    circles.extend(Circle(id=label, boundary=(label,)) for label in d.loops)
    return Resolution(bits=tuple(bits), circles=tuple(sorted(circles, key=lambda c: c.id)))


class ResolutionTable:
    """Resolutions of one diagram, traced once per bit vector."""

    def __init__(self, diagram: LinkDiagram):
        self.diagram = diagram
        self._table: dict[int, Resolution] = {}

    def get(self, index: int) -> Resolution:
        """Resolution for the integer form of its bits (crossing 1 = MSB)."""
        resolution = self._table.get(index)
        if resolution is None:
            resolution = resolve(self.diagram, int_to_bits(index, self.diagram.n))
            self._table[index] = resolution
        return resolution

    def __len__(self) -> int:
        return len(self._table)

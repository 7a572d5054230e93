"""
Link diagram data model.
Crossings carry PD edge labels counterclockwise from the incoming
under-strand; diagrams add oriented components, free loops, the
reduced-theory basepoint and braid provenance.
"""

from dataclasses import dataclass, field
from functools import cached_property

# Smoothing partner of each crossing position, per resolution bit.
# 0-smoothing pairs (0,1)(2,3); 1-smoothing pairs (0,3)(1,2).
SMOOTHING_PARTNER = (
    (1, 0, 3, 2),
    (3, 2, 1, 0),
)


class DiagramError(Exception):
    """Raised for malformed, inconsistent or non-planar diagram input."""

    pass


@dataclass(frozen=True)
class Crossing:
    """One crossing of a PD code.

    Attributes:
        index: 1-based crossing number in input order.
        edges: The four edge labels, counterclockwise from the incoming
            under-strand.
        sign: +1 or -1, derived from the strand orientations.
    """

    index: int
    edges: tuple[int, int, int, int]
    sign: int

    def smoothing_partner(self, position: int, bit: int) -> int:
        """Position joined to `position` by the `bit` smoothing."""
        return SMOOTHING_PARTNER[bit][position]


@dataclass(frozen=True)
class BraidWord:
    """Braid word a diagram was closed from."""

    strands: int
    word: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.strands}: " + " ".join(str(g) for g in self.word)


@dataclass(frozen=True)
class LinkDiagram:
    """Oriented planar link diagram.

    Attributes:
        crossings: Crossings in input order.
        components: Edge labels of each link component in traversal order.
        loops: Labels of crossingless components (free circles).
        basepoint: Optional edge label used by the reduced theory.
        braid: Braid word when the diagram is a braid closure.
        crossing_tags: "horizontal"/"vertical" per crossing for braid
            closures (shape of the 0-resolution surgery arc).
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    loops: tuple[int, ...] = ()
    basepoint: int | None = None
    braid: BraidWord | None = None
    crossing_tags: tuple[str, ...] | None = field(default=None)

    @property
    def n(self) -> int:
        return len(self.crossings)

    @cached_property
    def labels(self) -> tuple[int, ...]:
        found = {label for c in self.crossings for label in c.edges}
        found.update(self.loops)
        return tuple(sorted(found))

    @cached_property
    def occurrences(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """Map each crossing edge label to its two (crossing, position) slots."""
        occ: dict[int, list[tuple[int, int]]] = {}
        for ci, crossing in enumerate(self.crossings):
            for pos, label in enumerate(crossing.edges):
                occ.setdefault(label, []).append((ci, pos))
        return {label: tuple(slots) for label, slots in occ.items()}

    def other_end(self, ci: int, pos: int) -> tuple[int, int]:
        """The other slot carrying the edge label at (ci, pos)."""
        label = self.crossings[ci].edges[pos]
        first, second = self.occurrences[label]
        return second if first == (ci, pos) else first

    @property
    def is_braid(self) -> bool:
        return self.braid is not None and self.crossing_tags is not None

    @property
    def effective_basepoint(self) -> int:
        """Basepoint label, defaulting to the smallest label of component 0."""
        if self.basepoint is not None:
            return self.basepoint
        return min(self.components[0])

    def component_of(self, label: int) -> int:
        for idx, component in enumerate(self.components):
            if label in component:
                return idx
        raise DiagramError(f"Edge label {label} is not part of the diagram")

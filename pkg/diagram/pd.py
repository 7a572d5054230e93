"""
PD code parsing, orientation and serialization.
Terms are X(a,b,c,d) with edges listed counterclockwise from the
incoming under-strand; crossing signs follow from propagating that
orientation along each component.
"""

import logging
import re

from diagram.models import (
    BraidWord,
    Crossing,
    DiagramError,
    LinkDiagram,
)
from diagram.planar_map import build_planar_map, planar_map_from_slots

logger = logging.getLogger(__name__)

_TERM = re.compile(
    r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)"
)
_SEPARATOR = re.compile(r"[\s,]*")


def tokenize_pd(text: str) -> list[tuple[int, int, int, int]]:
    """Split PD text into edge quadruples.

    Raises:
        DiagramError: On any token that is not an X(a,b,c,d) term.
    """
    quads = []
    pos = _SEPARATOR.match(text, 0).end()
    while pos < len(text):
        match = _TERM.match(text, pos)
        if match is None:
            snippet = text[pos : pos + 20]
            raise DiagramError(f"Malformed PD token near '{snippet}'")
        quad = tuple(int(g) for g in match.groups())
        if min(quad) <= 0:
            raise DiagramError(f"PD labels must be positive: {match.group(0)}")
        quads.append(quad)
        pos = _SEPARATOR.match(text, match.end()).end()
    return quads


def orient(
    quads: list[tuple[int, int, int, int]],
) -> tuple[list[int], list[tuple[int, ...]]]:
    """Propagate orientation from the under-strands.

    Returns:
        Crossing signs and the edge labels of each component in
        traversal order.

    Raises:
        DiagramError: If two slots claim incompatible directions.
    """
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, quad in enumerate(quads):
        for pos, label in enumerate(quad):
            occurrences.setdefault(label, []).append((ci, pos))

    def other_end(ci: int, pos: int) -> tuple[int, int]:
        first, second = occurrences[quads[ci][pos]]
        return second if first == (ci, pos) else first

    over_entry: dict[int, int] = {}
    entered: set[tuple[int, int]] = set()
    components: list[tuple[int, ...]] = []

    def walk(ci: int, pos: int) -> None:
        labels = []
        while (ci, pos) not in entered:
            if pos == 2:
                raise DiagramError(
                    f"Inconsistent orientation at crossing {ci + 1}: "
                    "under-strand enters through its outgoing slot"
                )
            if pos in (1, 3):
                opposite = (ci, (pos + 2) % 4)
                if opposite in entered:
                    raise DiagramError(
                        f"Inconsistent orientation at crossing {ci + 1}"
                    )
                over_entry[ci] = pos
            entered.add((ci, pos))
            out = (pos + 2) % 4
            labels.append(quads[ci][out])
            ci, pos = other_end(ci, out)
        components.append(tuple(labels))

    for ci in range(len(quads)):
        if (ci, 0) not in entered:
            walk(ci, 0)

    for ci in range(len(quads)):
        if ci not in over_entry:
            logger.warning(
                f"Component through crossing {ci + 1} never passes under; "
                "orienting it arbitrarily"
            )
            walk(ci, 3)

    signs = [1 if over_entry[ci] == 3 else -1 for ci in range(len(quads))]
    return signs, components


def assemble_diagram(
    quads: list[tuple[int, int, int, int]],
    loops: tuple[int, ...] = (),
    basepoint: int | None = None,
    braid: BraidWord | None = None,
    crossing_tags: tuple[str, ...] | None = None,
) -> LinkDiagram:
    """Validate quadruples and build an oriented diagram.

    Raises:
        DiagramError: On label multiplicity, orientation or planarity
            failures, or an unknown basepoint.
    """
    # Label multiplicity is checked while building the map
    raw_map = planar_map_from_slots(quads, loops)
    signs, components = orient(quads)
    crossings = tuple(
        Crossing(index=ci + 1, edges=quad, sign=sign)
        for ci, (quad, sign) in enumerate(zip(quads, signs, strict=True))
    )
    components.extend((label,) for label in loops)

    diagram = LinkDiagram(
        crossings=crossings,
        components=tuple(components),
        loops=tuple(loops),
        basepoint=basepoint,
        braid=braid,
        crossing_tags=crossing_tags,
    )
    build_planar_map(diagram)

    if raw_map.num_components > 1:
        logger.warning(
            f"Split diagram with {raw_map.num_components} pieces; "
            "pieces are handled together in one cube"
        )
    if basepoint is not None and basepoint not in diagram.labels:
        raise DiagramError(f"Basepoint {basepoint} is not an edge label")
    return diagram


def parse_pd(
    text: str, unknot: bool = False, basepoint: int | None = None
) -> LinkDiagram:
    """Parse PD notation into an oriented link diagram.

    Args:
        text: Whitespace-separated X(a,b,c,d) terms.
        unknot: Accept empty input as the crossingless unknot.
        basepoint: Optional edge label for the reduced theory.

    Returns:
        Oriented, planarity-checked diagram.

    Raises:
        DiagramError: On malformed tokens, bad label multiplicity,
            inconsistent orientation or non-planar incidence.
    """
    quads = tokenize_pd(text)
    if not quads:
        if not unknot:
            raise DiagramError("Empty diagram (pass --unknot for the unknot)")
        return assemble_diagram([], loops=(1,), basepoint=basepoint)
    return assemble_diagram(quads, basepoint=basepoint)


def serialize_pd(d: LinkDiagram) -> str:
    """Render crossings back to PD text (free loops have no PD term)."""
    return " ".join(
        "X({},{},{},{})".format(*crossing.edges) for crossing in d.crossings
    )


def signs(d: LinkDiagram) -> tuple[int, int]:
    """Count positive and negative crossings.

    Returns:
        (n_plus, n_minus) with n_plus + n_minus == d.n.
    """
    n_plus = sum(1 for c in d.crossings if c.sign > 0)
    return n_plus, d.n - n_plus


def writhe(d: LinkDiagram) -> int:
    n_plus, n_minus = signs(d)
    return n_plus - n_minus


def mirror_diagram(d: LinkDiagram) -> LinkDiagram:
    """Reflect the diagram: X(i,j,k,l) becomes X(i,l,k,j), all signs flip."""
    quads = [
        (c.edges[0], c.edges[3], c.edges[2], c.edges[1]) for c in d.crossings
    ]
    # Reflection swaps left and right, so braid provenance is dropped
    return assemble_diagram(quads, loops=d.loops, basepoint=d.basepoint)

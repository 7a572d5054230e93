"""
Braid closures as PD diagrams.
Strands run upward; each generator adds one crossing whose surgery
arc is tagged horizontal (positive) or vertical (negative) for the
braid decoration.
"""

import logging
import re

import numpy as np

from diagram.models import BraidWord, DiagramError, LinkDiagram
from diagram.pd import assemble_diagram

logger = logging.getLogger(__name__)

_BRAID = re.compile(r"^\s*(\d+)\s*:(.*)$", re.DOTALL)


def parse_braid_word(text: str) -> BraidWord:
    """Parse "k: w1 w2 ..." into a validated braid word.

    Raises:
        DiagramError: On syntax errors or generators outside 1..k-1.
    """
    match = _BRAID.match(text)
    if match is None:
        raise DiagramError(f"Braid must look like '<strands>: <word>': {text!r}")

    strands = int(match.group(1))
    if strands < 1:
        raise DiagramError("Braid needs at least one strand")

    word = []
    for token in match.group(2).replace(",", " ").split():
        try:
            generator = int(token)
        except ValueError as e:
            raise DiagramError(f"Malformed braid generator '{token}'") from e
        if generator == 0 or abs(generator) > strands - 1:
            raise DiagramError(
                f"Generator {generator} out of range for {strands} strand(s)"
            )
        word.append(generator)
    return BraidWord(strands=strands, word=tuple(word))


def braid_closure(braid: BraidWord, basepoint: int | None = None) -> LinkDiagram:
    """Close a braid into an oriented PD diagram.

    Crossing slots, with bottom-left/right and top-left/right edges:
    positive generators give X(BR,TR,TL,BL), negative X(BL,BR,TR,TL).
    """
    current = list(range(1, braid.strands + 1))
    fresh = braid.strands + 1
    quads = []
    tags = []

    for generator in braid.word:
        i = abs(generator) - 1
        bottom_left, bottom_right = current[i], current[i + 1]
        top_left, top_right = fresh, fresh + 1
        fresh += 2
        if generator > 0:
            quads.append([bottom_right, top_right, top_left, bottom_left])
            tags.append("horizontal")
        else:
            quads.append([bottom_left, bottom_right, top_right, top_left])
            tags.append("vertical")
        current[i], current[i + 1] = top_left, top_right

    # Closing identifies the top of each position with its bottom
    closing = {top: bottom for bottom, top in enumerate(current, start=1)}
    quads = [[closing.get(label, label) for label in quad] for quad in quads]

    used = {label for quad in quads for label in quad}
    loops = [p for p in range(1, braid.strands + 1) if p not in used]

    # Compact relabeling 1..m keeps PD text small and canonical
    relabel = {
        label: new for new, label in enumerate(sorted(used | set(loops)), start=1)
    }
    quads = [tuple(relabel[label] for label in quad) for quad in quads]
    loops = tuple(relabel[label] for label in loops)

    if loops:
        logger.debug(f"Braid {braid} leaves {len(loops)} free strand(s)")

    return assemble_diagram(
        quads,
        loops=loops,
        basepoint=basepoint,
        braid=braid,
        crossing_tags=tuple(tags),
    )


def parse_braid(text: str, basepoint: int | None = None) -> LinkDiagram:
    """Parse a braid word and return the PD diagram of its closure.

    Args:
        text: "k: w1 w2 ..." with signed generators.
        basepoint: Optional edge label for the reduced theory.

    Raises:
        DiagramError: If the word is malformed or out of range.
    """
    return braid_closure(parse_braid_word(text), basepoint=basepoint)


def random_braid_word(
    rng: np.random.Generator, max_crossings: int, max_strands: int = 4
) -> BraidWord:
    """Seeded random braid word with 1..max_crossings generators."""
    strands = int(rng.integers(2, max_strands + 1))
    length = int(rng.integers(1, max_crossings + 1))
    word = []
    for _ in range(length):
        generator = int(rng.integers(1, strands))
        word.append(generator if rng.integers(0, 2) else -generator)
    return BraidWord(strands=strands, word=tuple(word))

"""
The transverse element of a braid closure.
At the resolution that gives back the parallel braid strands, the product
of all circles is a cycle for the braid decoration.
"""

from cube.generators import GeneratorBasis
from differential.sparse import SparseMapF2
from diagram.models import DiagramError, LinkDiagram


def transverse_resolution(d: LinkDiagram) -> int:
    """Resolution with the oriented smoothing at every crossing.

    Vertical strands come from the 0-smoothing at horizontal-arc crossings
    and from the 1-smoothing at vertical-arc ones.

    Raises:
        DiagramError: If the diagram is not a braid closure.
    """
    if not d.is_braid:
        raise DiagramError("The transverse element needs a braid closure")
    index = 0
    for tag in d.crossing_tags:
        index = (index << 1) | (1 if tag == "vertical" else 0)
    return index


def transverse_cycle(d: LinkDiagram, basis: GeneratorBasis) -> int:
    """Cube-basis index of z, the product of every circle at the braid resolution."""
    i = transverse_resolution(d)
    circles = basis.table.get(i).num_circles
    return basis.index(i, (1 << circles) - 1)


def is_closed(dmap: SparseMapF2, generator: int) -> bool:
    return dmap.column(generator) == 0

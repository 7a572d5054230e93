"""
Face configurations C(I, J, t).

The circles of resolution I carry one oriented arc per crossing raised by
the face. Each raised crossing j becomes two trivalent vertices on its
0-smoothing strands: P = 2j on the strand through PD positions 0 and 1,
Q = 2j + 1 on the strand through positions 2 and 3. Counterclockwise
around P the darts are the arc, toward position 0, toward position 1;
around Q the arc, toward position 2, toward position 3.
"""

from configuration.model import Configuration, ConfigurationError, DartKind
from core.utils.bits import int_to_bits
from cube.decoration import Decoration
from cube.faces import active_crossings
from cube.resolution import Resolution, resolve
from diagram.models import SMOOTHING_PARTNER, LinkDiagram

# PD position -> (vertex offset within the crossing pair, dart offset)
_SLOT_DART = ((0, 1), (0, 2), (1, 1), (1, 2))


def build_configuration(
    d: LinkDiagram,
    t: Decoration,
    i: int,
    j: int,
    source: Resolution | None = None,
) -> Configuration:
    """Configuration of the face from resolution i to resolution j.

    Args:
        d: Diagram.
        t: Decoration giving each arc's orientation.
        i: Source resolution as an integer (crossing 1 = MSB).
        j: Target resolution, obtained from i by raising at least one bit.
        source: Resolution i, if already traced.

    Raises:
        ConfigurationError: If (i, j) is not a face of dimension at least one.
    """
    n = d.n
    if i & ~j or i == j:
        raise ConfigurationError("A face needs I < J with at least one raised bit")

    bits = int_to_bits(i, n)
    active = active_crossings(i, j, n)
    rank = {ci: pos for pos, ci in enumerate(active)}

    def slot_dart(ci: int, pos: int) -> int:
        vertex_offset, dart_offset = _SLOT_DART[pos]
        return 3 * (2 * rank[ci] + vertex_offset) + dart_offset

    size = 6 * len(active)
    sigma = [0] * size
    alpha = [0] * size
    kinds = [int(DartKind.CIRCLE)] * size
    segments: list[frozenset[int]] = [frozenset()] * size
    arc_ids = [0] * (2 * len(active))
    touched: set[int] = set()

    for r, ci in enumerate(active):
        p, q = 2 * r, 2 * r + 1
        for v in (p, q):
            base = 3 * v
            sigma[base], sigma[base + 1], sigma[base + 2] = base + 1, base + 2, base
            arc_ids[v] = ci
        tail, head = (p, q) if t.bits[ci] == 0 else (q, p)
        kinds[3 * tail] = int(DartKind.TAIL)
        kinds[3 * head] = int(DartKind.HEAD)
        alpha[3 * p], alpha[3 * q] = 3 * q, 3 * p

        for pos in range(4):
            dart = slot_dart(ci, pos)
            label = d.crossings[ci].edges[pos]
            labels = {label}
            cj, pj = d.other_end(ci, pos)
            while cj not in rank:
                out = SMOOTHING_PARTNER[bits[cj]][pj]
                label = d.crossings[cj].edges[out]
                labels.add(label)
                cj, pj = d.other_end(cj, out)
            alpha[dart] = slot_dart(cj, pj)
            segments[dart] = frozenset(labels)
            touched.update(labels)

    resolution = source if source is not None else resolve(d, bits)
    passive = tuple(
        circle.labels for circle in resolution.circles if not circle.labels & touched
    )
    return Configuration(
        sigma=tuple(sigma),
        alpha=tuple(alpha),
        kinds=tuple(kinds),
        segments=tuple(segments),
        arc_ids=tuple(arc_ids),
        passive=passive,
    )

"""
Rotation-system view of a diagram on the sphere.
Darts are edge ends at crossings (and at free loops); faces are the
orbits of rotation after edge involution, checked against Euler's
formula per connected component.
"""

from dataclasses import dataclass
from functools import cached_property

from diagram.models import DiagramError, LinkDiagram


@dataclass(frozen=True)
class PlanarMap:
    """Combinatorial map given by a rotation and an edge involution.

    Attributes:
        sigma: Counterclockwise successor of each dart around its vertex.
        alpha: The dart at the other end of the same edge.
        vertex: Vertex id of each dart.
    """

    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    vertex: tuple[int, ...]

    @property
    def num_darts(self) -> int:
        return len(self.sigma)

    @property
    def num_vertices(self) -> int:
        return len(set(self.vertex))

    @property
    def num_edges(self) -> int:
        return self.num_darts // 2

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of sigma after alpha, each listed from its smallest dart."""
        seen = [False] * self.num_darts
        faces = []
        for start in range(self.num_darts):
            if seen[start]:
                continue
            orbit = []
            d = start
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = self.sigma[self.alpha[d]]
            faces.append(tuple(orbit))
        return tuple(faces)

    @cached_property
    def num_components(self) -> int:
        parent = {v: v for v in set(self.vertex)}

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for d in range(self.num_darts):
            a, b = find(self.vertex[d]), find(self.vertex[self.alpha[d]])
            if a != b:
                parent[max(a, b)] = min(a, b)
        return len({find(v) for v in parent})

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + len(self.faces)

    def is_spherical(self) -> bool:
        """True when every connected component embeds in its own sphere."""
        return self.euler_characteristic() == 2 * self.num_components

    def mirror(self) -> "PlanarMap":
        """Reverse every rotation (orientation reversal of the sphere)."""
        inverse = [0] * self.num_darts
        for d, s in enumerate(self.sigma):
            inverse[s] = d
        return PlanarMap(tuple(inverse), self.alpha, self.vertex)


def planar_map_from_slots(
    crossings: list[tuple[int, int, int, int]], loops: tuple[int, ...] = ()
) -> PlanarMap:
    """Build the map of raw PD quadruples without orientation data.

    Dart 4*i + p is position p of crossing i; each free loop adds a vertex
    with two darts.
    """
    n = len(crossings)
    size = 4 * n + 2 * len(loops)
    sigma = [0] * size
    alpha = [-1] * size
    vertex = [0] * size

    slots: dict[int, list[int]] = {}
    for ci, edges in enumerate(crossings):
        for pos, label in enumerate(edges):
            dart = 4 * ci + pos
            sigma[dart] = 4 * ci + (pos + 1) % 4
            vertex[dart] = ci
            slots.setdefault(label, []).append(dart)

    for label, darts in slots.items():
        if len(darts) != 2:
            raise DiagramError(
                f"Edge label {label} appears {len(darts)} time(s), expected 2"
            )
        alpha[darts[0]], alpha[darts[1]] = darts[1], darts[0]

    for j, _ in enumerate(loops):
        a, b = 4 * n + 2 * j, 4 * n + 2 * j + 1
        sigma[a], sigma[b] = b, a
        alpha[a], alpha[b] = b, a
        vertex[a] = vertex[b] = n + j

    return PlanarMap(tuple(sigma), tuple(alpha), tuple(vertex))


def build_planar_map(d: LinkDiagram) -> PlanarMap:
    """Planar map of a diagram, validated against the sphere.

    Raises:
        DiagramError: If the face count violates Euler's formula.
    """
    pmap = planar_map_from_slots([c.edges for c in d.crossings], d.loops)
    if not pmap.is_spherical():
        raise DiagramError(
            "Rotation system is not planar: "
            f"V - E + F = {pmap.euler_characteristic()}, "
            f"expected {2 * pmap.num_components}"
        )
    return pmap

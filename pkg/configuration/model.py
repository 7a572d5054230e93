"""
Configurations as combinatorial maps on the oriented sphere.

Every arc endpoint is a trivalent vertex with darts 3v (the arc), 3v+1
and 3v+2 (the two circle directions). `sigma` is the counterclockwise
successor around a vertex, `alpha` pairs the two ends of an arc or of a
circle segment. Segment label sets record which PD edges a circle
segment runs over, so circles keep stable identities across duals and
sub-configurations.
"""

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property


class ConfigurationError(Exception):
    """Raised when an operation gets a configuration of the wrong shape."""

    pass


class DartKind(IntEnum):
    CIRCLE = 0
    TAIL = 1
    HEAD = 2


@dataclass(frozen=True)
class Circle:
    """A starting (or, on the dual, ending) circle of a configuration."""

    id: int
    labels: frozenset[int]
    darts: frozenset[int]


@dataclass(frozen=True)
class Configuration:
    """Circles plus disjoint oriented arcs, embedded in the sphere.

    Attributes:
        sigma: Counterclockwise successor of every dart at its vertex.
        alpha: Partner dart across an arc or a circle segment.
        kinds: DartKind of every dart.
        segments: PD labels of the circle segment leaving each circle
            dart (empty for arc darts).
        arc_ids: Arc identifier (crossing index) of every vertex.
        passive: Label sets of circles that no arc touches.
    """

    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    kinds: tuple[int, ...]
    segments: tuple[frozenset[int], ...]
    arc_ids: tuple[int, ...]
    passive: tuple[frozenset[int], ...] = ()

    @property
    def num_vertices(self) -> int:
        return len(self.sigma) // 3

    @property
    def dimension(self) -> int:
        return self.num_vertices // 2

    @cached_property
    def arcs(self) -> tuple[tuple[int, int, int], ...]:
        """(arc id, tail dart, head dart) sorted by arc id."""
        found = []
        for v in range(self.num_vertices):
            dart = 3 * v
            if self.kinds[dart] == DartKind.TAIL:
                found.append((self.arc_ids[v], dart, self.alpha[dart]))
        return tuple(sorted(found))

    @staticmethod
    def vertex(dart: int) -> int:
        return dart // 3

    @staticmethod
    def other_circle_dart(dart: int) -> int:
        base = 3 * (dart // 3)
        return base + 1 if dart == base + 2 else base + 2

    @cached_property
    def circles(self) -> tuple[Circle, ...]:
        """Active starting circles ordered by their smallest label."""
        seen: set[int] = set()
        found = []
        for v in range(self.num_vertices):
            for start in (3 * v + 1, 3 * v + 2):
                if start in seen:
                    continue
                darts = []
                d = start
                while d not in seen:
                    partner = self.alpha[d]
                    seen.update((d, partner))
                    darts.extend((d, partner))
                    d = self.other_circle_dart(partner)
                labels = frozenset().union(*(self.segments[x] for x in darts))
                found.append(
                    Circle(
                        id=min(labels) if labels else -1 - len(found),
                        labels=labels,
                        darts=frozenset(darts),
                    )
                )
        return tuple(sorted(found, key=lambda c: c.id))

    @cached_property
    def circle_of_dart(self) -> dict[int, int]:
        """Index into `circles` for every circle dart."""
        return {
            d: idx for idx, circle in enumerate(self.circles) for d in circle.darts
        }

    @cached_property
    def ending(self) -> tuple[Circle, ...]:
        """Active ending circles: the starting circles of the dual."""
        return dual(self).circles

    def circle_of_vertex(self, v: int) -> int:
        return self.circle_of_dart[3 * v + 1]

    @property
    def passive_ids(self) -> tuple[int, ...]:
        return tuple(sorted(min(labels) for labels in self.passive))

    def arc_circles(self) -> list[tuple[int, int]]:
        """Circle indices at the tail and head of each arc."""
        return [
            (
                self.circle_of_vertex(self.vertex(tail)),
                self.circle_of_vertex(self.vertex(head)),
            )
            for _, tail, head in self.arcs
        ]

    def is_connected(self) -> bool:
        """Arc-circle incidence graph of the active part is connected."""
        count = len(self.circles)
        if count == 0:
            return False
        parent = list(range(count))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, b in self.arc_circles():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        return len({find(i) for i in range(count)}) == 1

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * len(self.sigma)
        faces = []
        for start in range(len(self.sigma)):
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

    def dart_components(self) -> list[list[int]]:
        """Darts grouped by connectivity under sigma and alpha."""
        seen = [False] * len(self.sigma)
        groups = []
        for start in range(len(self.sigma)):
            if seen[start]:
                continue
            stack, group = [start], []
            seen[start] = True
            while stack:
                d = stack.pop()
                group.append(d)
                for nxt in (self.sigma[d], self.alpha[d]):
                    if not seen[nxt]:
                        seen[nxt] = True
                        stack.append(nxt)
            groups.append(sorted(group))
        return groups

    def is_spherical(self) -> bool:
        """Euler check V - E + F = 2 per component of the embedded graph."""
        v = self.num_vertices
        e = len(self.sigma) // 2
        return v - e + len(self.faces) == 2 * len(self.dart_components())

    def side_of_arc(self, arc_index: int) -> bool:
        """Side of a self-arc relative to a fixed walk along its circle.

        Two self-arcs on the same circle get equal values exactly when they
        lie in the same complementary disk.
        """
        _, tail, _ = self.arcs[arc_index]
        circle = self.circles[self.circle_of_dart[tail + 1]]
        start = min(circle.darts)
        d = start
        while True:
            arrival = self.alpha[d]
            v = self.vertex(arrival)
            if v == self.vertex(tail):
                return self.sigma[arrival] == 3 * v
            d = self.other_circle_dart(arrival)
            if d == start:
                raise ConfigurationError("Arc tail is not on its circle")

    def with_passive(self, passive: tuple[frozenset[int], ...]) -> "Configuration":
        return Configuration(
            self.sigma, self.alpha, self.kinds, self.segments, self.arc_ids, passive
        )


def active_part(c: Configuration) -> tuple[Configuration, tuple[frozenset[int], ...]]:
    """Drop passive circles.

    Returns:
        The active configuration and the passive circles' label sets.
    """
    return c.with_passive(()), c.passive


def reverse(c: Configuration) -> Configuration:
    """Reverse the orientation of every arc."""
    swap = {DartKind.TAIL: DartKind.HEAD, DartKind.HEAD: DartKind.TAIL}
    kinds = tuple(int(swap.get(DartKind(k), k)) for k in c.kinds)
    return Configuration(c.sigma, c.alpha, kinds, c.segments, c.arc_ids, c.passive)


def mirror(c: Configuration) -> Configuration:
    """Reverse the orientation of the sphere (invert every rotation)."""
    inverse = [0] * len(c.sigma)
    for d, s in enumerate(c.sigma):
        inverse[s] = d
    return Configuration(
        tuple(inverse), c.alpha, c.kinds, c.segments, c.arc_ids, c.passive
    )


def _inverse(sigma: tuple[int, ...], dart: int) -> int:
    # Rotations are 3-cycles, so the inverse is the square
    return sigma[sigma[dart]]


def dual(c: Configuration) -> Configuration:
    """Surger every circle along every arc and rotate each arc 90 degrees.

    Each arc with tail dart a and head dart a' becomes two vertices on the
    band edges: p_R on the right edge (tail of the dual arc) and p_L on
    the left edge. Corners map back to circle darts of `c`:
    p_R.toU = sigma^-1(a), p_R.toV = sigma(a'), p_L.toU = sigma(a),
    p_L.toV = sigma^-1(a').
    """
    arcs = c.arcs
    size = 6 * len(arcs)
    sigma = [0] * size
    alpha = [0] * size
    kinds = [int(DartKind.CIRCLE)] * size
    segments: list[frozenset[int]] = [frozenset()] * size
    arc_ids = [0] * (2 * len(arcs))
    corner: dict[int, int] = {}

    for j, (arc_id, tail, head) in enumerate(arcs):
        right, left = 2 * j, 2 * j + 1
        for v in (right, left):
            base = 3 * v
            sigma[base], sigma[base + 1], sigma[base + 2] = base + 1, base + 2, base
            arc_ids[v] = arc_id
        kinds[3 * right] = int(DartKind.TAIL)
        kinds[3 * left] = int(DartKind.HEAD)
        alpha[3 * right], alpha[3 * left] = 3 * left, 3 * right

        # p_R rotation: arc, toU, toV; p_L rotation: arc, toV, toU
        corner[_inverse(c.sigma, tail)] = 3 * right + 1
        corner[c.sigma[head]] = 3 * right + 2
        corner[c.sigma[tail]] = 3 * left + 2
        corner[_inverse(c.sigma, head)] = 3 * left + 1

    for original, new in corner.items():
        alpha[new] = corner[c.alpha[original]]
        segments[new] = c.segments[original]

    return Configuration(
        tuple(sigma),
        tuple(alpha),
        tuple(kinds),
        tuple(segments),
        tuple(arc_ids),
        c.passive,
    )


def ending_circles(c: Configuration) -> tuple[Circle, ...]:
    return c.ending


def restrict(c: Configuration, keep_arcs: set[int]) -> Configuration:
    """Sub-configuration on the arcs whose ids are in `keep_arcs`.

    Circles left without arc endpoints become passive.
    """
    kept = [v for v in range(c.num_vertices) if c.arc_ids[v] in keep_arcs]
    new_vertex = {v: i for i, v in enumerate(kept)}

    def new_dart(d: int) -> int:
        return 3 * new_vertex[d // 3] + d % 3

    size = 3 * len(kept)
    sigma = [0] * size
    alpha = [0] * size
    kinds = [0] * size
    segments: list[frozenset[int]] = [frozenset()] * size

    for v in kept:
        for offset in range(3):
            d = 3 * v + offset
            nd = new_dart(d)
            sigma[nd] = new_dart(c.sigma[d])
            kinds[nd] = c.kinds[d]
            if offset == 0:
                alpha[nd] = new_dart(c.alpha[d])
                continue
            labels = set(c.segments[d])
            e = c.alpha[d]
            while e // 3 not in new_vertex:
                o = c.other_circle_dart(e)
                labels.update(c.segments[o])
                e = c.alpha[o]
            alpha[nd] = new_dart(e)
            segments[nd] = frozenset(labels)

    dropped = [
        circle.labels
        for circle in c.circles
        if not any(d // 3 in new_vertex for d in circle.darts)
    ]
    return Configuration(
        tuple(sigma),
        tuple(alpha),
        tuple(kinds),
        tuple(segments),
        tuple(c.arc_ids[v] for v in kept),
        tuple(sorted(c.passive + tuple(dropped), key=min)),
    )

"""Plain-text rendering of configurations for debugging and golden tests."""

from configuration.model import Configuration, DartKind

_KIND_MARK = {DartKind.TAIL: "t", DartKind.HEAD: "h"}


def circle_word(c: Configuration, circle_index: int) -> list[str]:
    """Arc endpoints met walking a circle, as '<arc id><t|h>' tokens."""
    circle = c.circles[circle_index]
    start = min(circle.darts)
    words = []
    d = start
    while True:
        arrival = c.alpha[d]
        v = c.vertex(arrival)
        kind = DartKind(c.kinds[3 * v])
        words.append(f"{c.arc_ids[v]}{_KIND_MARK[kind]}")
        d = c.other_circle_dart(arrival)
        if d == start:
            return words


def to_text(c: Configuration) -> str:
    lines = [f"configuration k={c.dimension}"]
    for arc_id, tail, head in c.arcs:
        lines.append(f"arc {arc_id}: v{c.vertex(tail)} -> v{c.vertex(head)}")
    for index, circle in enumerate(c.circles):
        word = " ".join(circle_word(c, index))
        lines.append(f"circle {circle.id}: {word}")
    for labels in c.passive:
        lines.append(f"passive {min(labels)}")
    for face in c.faces:
        lines.append("face " + " ".join(str(d) for d in face))
    return "\n".join(lines)

"""
Canonical codes for configurations up to orientation-preserving
homeomorphism of the sphere.

A connected map is rebuilt from any starting dart by numbering darts
breadth-first through `sigma` then `alpha`; the code lists the numbered
successors and dart kinds. Taking the least code over every arc tail
makes it independent of dart naming. Passive circles only enter the
code through their count.
"""

from configuration.model import Configuration, DartKind, reverse

Code = tuple


def _code_from(c: Configuration, start: int) -> tuple[tuple[int, int, int], ...]:
    number = {start: 0}
    order = [start]
    head = 0
    while head < len(order):
        d = order[head]
        head += 1
        for nxt in (c.sigma[d], c.alpha[d]):
            if nxt not in number:
                number[nxt] = len(order)
                order.append(nxt)
    return tuple(
        (number[c.sigma[d]], number[c.alpha[d]], c.kinds[d]) for d in order
    )


def _component_code(c: Configuration, darts: list[int]) -> tuple:
    starts = [d for d in darts if c.kinds[d] == DartKind.TAIL]
    if not starts:
        starts = darts
    return min(_code_from(c, d) for d in starts)


def canonical_code(c: Configuration) -> Code:
    """Isomorphism invariant of the embedded configuration."""
    components = sorted(
        _component_code(c, darts) for darts in c.dart_components()
    )
    return (tuple(components), len(c.passive))


def canonical_code_up_to_reversal(c: Configuration) -> Code:
    return min(canonical_code(c), canonical_code(reverse(c)))


def isomorphic(c1: Configuration, c2: Configuration, up_to_reversal: bool = False) -> bool:
    """Whether two configurations agree up to sphere homeomorphism.

    With `up_to_reversal`, also accept a match after flipping every arc.
    """
    if len(c1.sigma) != len(c2.sigma) or len(c1.passive) != len(c2.passive):
        return False
    if up_to_reversal:
        return canonical_code_up_to_reversal(c1) == canonical_code_up_to_reversal(c2)
    return canonical_code(c1) == canonical_code(c2)

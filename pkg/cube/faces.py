"""Faces of the cube of resolutions, streamed in canonical (I, J) order."""

from collections.abc import Iterator
from itertools import combinations

from core.utils.bits import int_to_bits


def face_masks(n: int, k: int, sources: Iterator[int] | None = None) -> Iterator[tuple[int, int]]:
    """Yield (I, J) as integers with J obtained from I by raising k zero bits.

    Args:
        n: Number of crossings.
        k: Face dimension.
        sources: Optional subset of source resolutions to restrict to,
            in increasing order.
    """
    if not 1 <= k <= n:
        raise ValueError(f"Face dimension must lie in 1..{n}, got {k}")
    for i in sources if sources is not None else range(1 << n):
        zeros = [1 << b for b in range(n) if not (i >> b) & 1]
        for raised in sorted(sum(combo) for combo in combinations(zeros, k)):
            yield i, i | raised


def faces(n: int, k: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every pair I < J differing in exactly k coordinates, as bit tuples."""
    for i, j in face_masks(n, k):
        yield int_to_bits(i, n), int_to_bits(j, n)


def all_faces(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for k in range(1, n + 1):
        yield from faces(n, k)


def active_crossings(i: int, j: int, n: int) -> list[int]:
    """0-based crossings where the face raises a bit (crossing 1 is the MSB)."""
    raised = j & ~i
    return [c for c in range(n) if (raised >> (n - 1 - c)) & 1]

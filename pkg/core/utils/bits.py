"""
Bit helpers shared by the cube, the sparse maps and elimination.
Resolutions are tuples of bits with crossing 1 as the most
significant position; vectors over GF(2) are Python ints.
"""

from collections.abc import Iterator


def int_to_bits(value: int, width: int) -> tuple[int, ...]:
    return tuple((value >> (width - 1 - i)) & 1 for i in range(width))


def iter_ones(vector: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while vector:
        low = vector & -vector
        yield low.bit_length() - 1
        vector ^= low

"""
Generators of the chain complex and their gradings.

A generator is a resolution together with a monomial, the subset of that
resolution's circles whose variable divides it. The global basis is
ordered by (|I|, I as an integer, monomial bitmask), so each resolution
owns a contiguous block and a generator's index is the block offset plus
its mask.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from core.utils.bits import int_to_bits
from cube.resolution import ResolutionTable
from diagram.models import LinkDiagram
from diagram.pd import signs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    resolution: int
    mask: int
    h: int
    q: int
    delta: int


def gradings(
    weight: int, num_circles: int, mask: int, n_plus: int, n_minus: int
) -> tuple[int, int, int]:
    """(h, q, delta) of one monomial."""
    gr = num_circles - 2 * mask.bit_count()
    h = weight - n_minus
    q = gr + weight + n_plus - 2 * n_minus
    return h, q, q - 2 * h


class GeneratorBasis:
    """Global basis of the cube complex of a diagram."""

    def __init__(self, diagram: LinkDiagram, table: ResolutionTable | None = None):
        self.diagram = diagram
        self.table = table or ResolutionTable(diagram)
        self.n_plus, self.n_minus = signs(diagram)

        n = diagram.n
        self.order = sorted(range(1 << n), key=lambda i: (i.bit_count(), i))
        self.offsets: dict[int, int] = {}
        total = 0
        for i in self.order:
            self.offsets[i] = total
            total += 1 << self.table.get(i).num_circles
        self.size = total
        # (I, J, arc orientations, variant, corrupt type) -> (family, terms, passive)
        self.face_terms: dict[tuple, tuple] = {}
        logger.debug(f"Basis of {total} generators over {len(self.order)} resolutions")

    def __len__(self) -> int:
        return self.size

    def index(self, resolution: int, mask: int) -> int:
        return self.offsets[resolution] + mask

    def block(self, resolution: int) -> range:
        start = self.offsets[resolution]
        return range(start, start + (1 << self.table.get(resolution).num_circles))

    @cached_property
    def _arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        resolution = np.empty(self.size, dtype=np.int64)
        mask = np.empty(self.size, dtype=np.int64)
        h = np.empty(self.size, dtype=np.int64)
        q = np.empty(self.size, dtype=np.int64)
        delta = np.empty(self.size, dtype=np.int64)
        for i in self.order:
            c = self.table.get(i).num_circles
            weight = i.bit_count()
            for m in range(1 << c):
                idx = self.offsets[i] + m
                resolution[idx], mask[idx] = i, m
                h[idx], q[idx], delta[idx] = gradings(
                    weight, c, m, self.n_plus, self.n_minus
                )
        return resolution, mask, h, q, delta

    @property
    def resolutions(self) -> np.ndarray:
        return self._arrays[0]

    @property
    def masks(self) -> np.ndarray:
        return self._arrays[1]

    @property
    def h(self) -> np.ndarray:
        return self._arrays[2]

    @property
    def q(self) -> np.ndarray:
        return self._arrays[3]

    @property
    def delta(self) -> np.ndarray:
        return self._arrays[4]

    def generator(self, idx: int) -> Generator:
        return Generator(
            resolution=int(self.resolutions[idx]),
            mask=int(self.masks[idx]),
            h=int(self.h[idx]),
            q=int(self.q[idx]),
            delta=int(self.delta[idx]),
        )

    def describe(self, idx: int) -> str:
        """Human-readable generator, e.g. '01|x3x7'."""
        g = self.generator(idx)
        circles = self.table.get(g.resolution).circles
        bits = "".join(str(b) for b in int_to_bits(g.resolution, self.diagram.n))
        monomial = "".join(
            f"x{circle.id}" for pos, circle in enumerate(circles) if (g.mask >> pos) & 1
        )
        return f"{bits or '-'}|{monomial or '1'}"

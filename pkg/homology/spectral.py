"""
Spectral sequence of the homological filtration.

F_p is spanned by generators with h >= p, and d raises h, so every F_p is
a subcomplex. Pages are computed from explicit subspace bases:

    Z_r^p = {x in F_p : d x in F_(p+r)}
    E_r^p = Z_r^p / (Z_(r-1)^(p+1) + d Z_(r-1)^(p-r+1))

one delta level at a time. E_1 is the chain groups, E_2 is Khovanov
homology and the last page, r = n + 1, is the homology of d.
"""

import logging
from dataclasses import dataclass, field
from functools import cache

from core.utils.bits import iter_ones
from differential.complex import ChainComplex
from homology.f2 import kernel_basis, rank_of
from homology.ranks import ensure_differential
from monitoring.metrics import measure_latency
from monitoring.tracing import trace_span

logger = logging.getLogger(__name__)


@dataclass
class PageTable:
    """Ranks of one page per (h, delta)."""

    r: int
    ranks: dict[tuple[int, int], int] = field(default_factory=dict)
    stabilized: bool = False

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {key: value for key, value in sorted(self.ranks.items()) if value}

    def as_json(self) -> dict:
        return {
            "r": self.r,
            "stabilized": self.stabilized,
            "ranks": {f"{h},{delta}": value for (h, delta), value in self.nonzero().items()},
        }


class _DeltaLevel:
    """Generators of one delta level, ordered by h, with local indices."""

    def __init__(self, complex_: ChainComplex, delta: int):
        gens = complex_.indices_where(delta)
        gens.sort(key=lambda g: (int(complex_.h[g]), g))
        self.gens = gens
        self.h = [int(complex_.h[g]) for g in gens]
        self.position = {g: i for i, g in enumerate(gens)}

    def count_below(self, level: int) -> int:
        """Number of generators with h < level (a prefix)."""
        return sum(1 for h in self.h if h < level)

    def localize(self, vector: int) -> int:
        local = 0
        for g in iter_ones(vector):
            local |= 1 << self.position[g]
        return local


class SpectralSequence:
    def __init__(self, complex_: ChainComplex, n: int):
        self.complex = complex_
        self.n = n
        self.levels = {delta: _DeltaLevel(complex_, delta) for delta in complex_.delta_levels()}
        self.h_values = sorted(set(complex_.h.tolist()))
        # Local image of each generator in the level below (delta - 2)
        self.images: dict[int, list[int]] = {}
        for delta, level in self.levels.items():
            target = self.levels.get(delta - 2)
            self.images[delta] = [
                target.localize(complex_.d.column(g)) if target else 0 for g in level.gens
            ]
        self.cycles = cache(self._cycles)

    def _cycles(self, r: int, p: int, delta: int) -> tuple[int, ...]:
        """Basis of Z_r^p in one delta level, as local bitsets."""
        level = self.levels.get(delta)
        if level is None:
            return ()
        start = level.count_below(p)
        if r <= 0:
            return tuple(1 << i for i in range(start, len(level.gens)))
        target = self.levels.get(delta - 2)
        low = (1 << target.count_below(p + r)) - 1 if target else 0
        columns = [self.images[delta][i] & low for i in range(start, len(level.gens))]
        return tuple(combo << start for combo in kernel_basis(columns))

    def _apply(self, delta: int, vector: int) -> int:
        image = 0
        for i in iter_ones(vector):
            image ^= self.images[delta][i]
        return image

    def page_rank(self, r: int, p: int, delta: int) -> int:
        cycles = self.cycles(r, p, delta)
        if not cycles:
            return 0
        boundaries = list(self.cycles(r - 1, p + 1, delta))
        boundaries.extend(
            self._apply(delta + 2, z) for z in self.cycles(r - 1, p - r + 1, delta + 2)
        )
        return len(cycles) - rank_of(boundaries)

    def page(self, r: int) -> PageTable:
        ranks = {
            (p, delta): self.page_rank(r, p, delta)
            for delta in self.levels
            for p in self.h_values
        }
        return PageTable(r=r, ranks={k: v for k, v in sorted(ranks.items()) if v})


def spectral_pages(complex_: ChainComplex, n: int, check: bool = True) -> list[PageTable]:
    """Pages E_1 .. E_(n+1) of the h-filtration spectral sequence."""
    if check:
        ensure_differential(complex_)
    with trace_span("spectral_pages", crossings=n), measure_latency("spectral_pages"):
        sequence = SpectralSequence(complex_, n)
        pages = [sequence.page(r) for r in range(1, n + 2)]
    for index, page in enumerate(pages):
        page.stabilized = all(later.ranks == page.ranks for later in pages[index:])
    logger.debug(f"Spectral pages: totals {[page.total for page in pages]}")
    return pages

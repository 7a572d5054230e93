"""
Graded homology ranks of a chain complex.
The differential is homogeneous (delta drops by 2, or q is fixed and h
rises by 1 for the Khovanov part), so ranks are computed block by block.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Literal

from differential.complex import ChainComplex
from homology.f2 import rank_of
from monitoring.metrics import measure_latency

logger = logging.getLogger(__name__)

Grading = Literal["delta", "bigraded"]


class HomologyError(Exception):
    """Raised when homology is requested for something that is not a complex."""

    pass


@dataclass
class GradedRanks:
    """Homology ranks per grading key: delta, or (q, h) for Khovanov."""

    grading: str
    ranks: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    def nonzero(self) -> dict:
        return {key: value for key, value in sorted(self.ranks.items()) if value}

    def as_json(self) -> dict[str, int]:
        """String keys: '7' for delta, 'q,h' for bigraded tables."""
        if self.grading == "delta":
            return {str(key): value for key, value in self.nonzero().items()}
        return {f"{q},{h}": value for (q, h), value in self.nonzero().items()}


def ensure_differential(complex_: ChainComplex) -> None:
    if not complex_.d.compose(complex_.d).is_zero():
        raise HomologyError(f"Differential of the {complex_.theory} complex does not square to zero")


def _group(keys: list) -> dict:
    groups: dict = defaultdict(list)
    for index, key in enumerate(keys):
        groups[key].append(index)
    return groups


def homology_ranks(
    complex_: ChainComplex, grading: Grading = "delta", check: bool = True
) -> GradedRanks:
    """Ranks of H(C, d) per delta level, or per (q, h) for a d_1-only complex.

    Raises:
        HomologyError: If d does not square to zero, or a bigraded table is
            requested for a complex with higher differentials.
    """
    if check:
        ensure_differential(complex_)
    if grading == "bigraded" and not complex_.is_bigraded:
        raise HomologyError("Bigraded homology needs the Khovanov (d_1-only) complex")

    d = complex_.d
    with measure_latency("homology_ranks"):
        if grading == "delta":
            blocks = _group(complex_.delta.tolist())
            image = {key: rank_of(d.column(g) for g in gens) for key, gens in blocks.items()}
            ranks = {
                key: len(gens) - image[key] - image.get(key + 2, 0)
                for key, gens in blocks.items()
            }
        else:
            keys = list(zip(complex_.q.tolist(), complex_.h.tolist(), strict=True))
            blocks = _group(keys)
            image = {key: rank_of(d.column(g) for g in gens) for key, gens in blocks.items()}
            ranks = {
                (q, h): len(gens) - image[(q, h)] - image.get((q, h - 1), 0)
                for (q, h), gens in blocks.items()
            }

    result = GradedRanks(grading=grading, ranks=dict(sorted(ranks.items())))
    logger.debug(f"{complex_.theory} homology: total rank {result.total}")
    return result


def class_survives(complex_: ChainComplex, generator: int) -> bool:
    """Whether a cycle given by one generator is nonzero in homology."""
    delta = int(complex_.delta[generator])
    sources = complex_.indices_where(delta + 2)
    image = [complex_.d.column(g) for g in sources]
    return rank_of([*image, 1 << generator]) > rank_of(image)

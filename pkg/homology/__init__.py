"""
Homology package.

Provides GF(2) linear algebra and the invariants computed from it:
- Bit-packed matrices, rank and kernels (F2Matrix, rank, rank_of, kernel_basis)
- Graded homology ranks per delta or per (q, h) (homology_ranks, GradedRanks)
- Pages of the h-filtration spectral sequence (spectral_pages, PageTable)
"""

from .f2 import EchelonBasis, F2Matrix, kernel_basis, rank, rank_of
from .ranks import GradedRanks, HomologyError, class_survives, ensure_differential, homology_ranks
from .spectral import PageTable, SpectralSequence, spectral_pages

__all__ = [
    "EchelonBasis",
    "F2Matrix",
    "GradedRanks",
    "HomologyError",
    "PageTable",
    "SpectralSequence",
    "class_survives",
    "ensure_differential",
    "homology_ranks",
    "kernel_basis",
    "rank",
    "rank_of",
    "spectral_pages",
]

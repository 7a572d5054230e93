"""
Graded chain complexes over GF(2).
The cube complex of a diagram under one theory, or a subcomplex of it,
with the (h, q, delta) grading of every generator.
"""

import logging
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from cube.decoration import Decoration
from cube.generators import GeneratorBasis
from differential.assemble import assemble_d, assemble_dk
from differential.sparse import SparseMapF2
from diagram.models import LinkDiagram

logger = logging.getLogger(__name__)

Theory = Literal["khovanov", "szabo", "szabo-mirror", "reduced", "reduced-mirror"]
THEORIES: tuple[str, ...] = ("khovanov", "szabo", "szabo-mirror", "reduced", "reduced-mirror")


@dataclass
class ChainComplex:
    """Generators with gradings and a differential on their indices.

    Attributes:
        theory: Theory the differential belongs to.
        d: Differential; column and row indices refer to this complex.
        h, q, delta: Gradings per generator.
        generators: Index of each generator in the full cube basis.
    """

    theory: str
    d: SparseMapF2
    h: np.ndarray
    q: np.ndarray
    delta: np.ndarray
    generators: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))

    def __len__(self) -> int:
        return len(self.h)

    @property
    def is_bigraded(self) -> bool:
        return self.theory == "khovanov"

    def delta_levels(self) -> list[int]:
        return sorted(set(self.delta.tolist()))

    def indices_where(self, delta: int) -> list[int]:
        return np.flatnonzero(self.delta == delta).tolist()


def cube_complex(
    d: LinkDiagram,
    t: Decoration,
    theory: str = "szabo",
    basis: GeneratorBasis | None = None,
    **kwargs,
) -> ChainComplex:
    """Full cube complex for the khovanov, szabo or szabo-mirror differential.

    Extra keyword arguments go to the assembly (workers, check, corrupt_type).
    """
    basis = basis or GeneratorBasis(d)
    if theory == "khovanov":
        kwargs.pop("check", None)
        dmap = assemble_dk(d, t, 1, basis=basis, **kwargs) if d.n else SparseMapF2(
            len(basis), len(basis)
        )
    else:
        variant = "mirror" if theory.endswith("mirror") else "standard"
        dmap = assemble_d(d, t, variant=variant, basis=basis, **kwargs)
    return ChainComplex(
        theory=theory,
        d=dmap,
        h=basis.h.copy(),
        q=basis.q.copy(),
        delta=basis.delta.copy(),
        generators=np.arange(len(basis), dtype=np.int64),
    )

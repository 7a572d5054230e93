"""
Reduced theory: the subcomplex of monomials divisible by the circle
through a marked point, with q and delta shifted up by one.
"""

import logging

import numpy as np

from core.utils.bits import iter_ones
from cube.generators import GeneratorBasis
from differential.assemble import DifferentialError
from differential.complex import ChainComplex
from diagram.models import DiagramError

logger = logging.getLogger(__name__)


def divisible_generators(basis: GeneratorBasis, basepoint: int) -> list[int]:
    """Cube-basis indices whose monomial contains the circle through `basepoint`."""
    selected = []
    for i in basis.order:
        resolution = basis.table.get(i)
        position = resolution.circle_index.get(basepoint)
        if position is None:
            raise DiagramError(f"Basepoint {basepoint} is not an edge label")
        offset = basis.offsets[i]
        selected.extend(
            offset + mask
            for mask in range(1 << resolution.num_circles)
            if (mask >> position) & 1
        )
    return selected


def reduced_subcomplex(
    complex_: ChainComplex, basis: GeneratorBasis, basepoint: int | None
) -> ChainComplex:
    """Restrict a cube complex to the monomials divisible by x(P).

    Raises:
        DiagramError: If no basepoint is set.
        DifferentialError: If the span is not closed under the differential.
    """
    if basepoint is None:
        raise DiagramError("The reduced theory needs a basepoint")

    keep = divisible_generators(basis, basepoint)
    kept = set(keep)
    for col in keep:
        stray = [row for row in iter_ones(complex_.d.column(col)) if row not in kept]
        if stray:
            raise DifferentialError(
                f"Divisible generator {basis.describe(col)} maps outside the "
                f"reduced subcomplex (to {basis.describe(stray[0])})"
            )

    index = np.asarray(keep, dtype=np.int64)
    logger.debug(f"Reduced subcomplex keeps {len(keep)} of {len(basis)} generators")
    theory = "reduced-mirror" if complex_.theory.endswith("mirror") else "reduced"
    return ChainComplex(
        theory=theory,
        d=complex_.d.submap(keep),
        h=complex_.h[index],
        q=complex_.q[index] + 1,
        delta=complex_.delta[index] + 1,
        generators=complex_.generators[index],
    )

"""
Assembly of the cube differentials.

d_k sums the face maps of every k-dimensional face, d(t) sums d_k over
all k, and H_m sums the edge homotopies along crossing m. Faces are
streamed per source resolution; with several workers the source
resolutions are split into chunks whose columns are disjoint, so the
merged map does not depend on the worker count.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from config import settings
from core.utils.bits import iter_ones
from cube.decoration import Decoration, DecorationError
from cube.face_config import build_configuration
from cube.faces import face_masks
from cube.generators import GeneratorBasis
from differential.rules import Term, Variant, f_terms, h_terms
from differential.sparse import SparseMapF2
from diagram.models import DiagramError, LinkDiagram
from monitoring.metrics import get_metrics, measure_latency
from monitoring.tracing import trace_span

logger = logging.getLogger(__name__)


class DifferentialError(Exception):
    """Raised when a differential fails an identity it must satisfy."""

    pass


def _scatter(
    columns: dict[int, int],
    basis: GeneratorBasis,
    i: int,
    j: int,
    terms: list[Term],
    passive: tuple[frozenset[int], ...],
) -> None:
    source, target = basis.table.get(i), basis.table.get(j)
    source_offset, target_offset = basis.offsets[i], basis.offsets[j]
    source_bits = [1 << source.index_of_id(min(labels)) for labels in passive]
    target_bits = [1 << target.index_of_id(min(labels)) for labels in passive]

    for inputs, outputs in terms:
        a = sum(1 << source.index_of_id(x) for x in inputs)
        b = sum(1 << target.index_of_id(y) for y in outputs)
        for sub in range(1 << len(passive)):
            wa = wb = 0
            for pos in iter_ones(sub):
                wa |= source_bits[pos]
                wb |= target_bits[pos]
            col = source_offset + (a | wa)
            columns[col] = columns.get(col, 0) ^ (1 << (target_offset + (b | wb)))


def _collect(
    basis: GeneratorBasis,
    t: Decoration,
    dims: list[int],
    sources: list[int] | None,
    variant: Variant,
    corrupt_type: int | None,
) -> tuple[dict[int, int], Counter]:
    d = basis.diagram
    orientation = t.mask
    cache = basis.face_terms
    columns: dict[int, int] = {}
    counts: Counter = Counter()
    for k in dims:
        for i, j in face_masks(d.n, k, sources):
            # Only the raised crossings' arcs enter the configuration
            key = (i, j, orientation & (i ^ j), variant, corrupt_type)
            entry = cache.get(key)
            if entry is None:
                c = build_configuration(d, t, i, j, source=basis.table.get(i))
                cls, terms = f_terms(c, variant, corrupt_type)
                entry = (cls.family, terms, c.passive)
                if len(cache) < settings.FACE_CACHE_SIZE:
                    cache[key] = entry
            family, terms, passive = entry
            counts[f"faces.{family.value}"] += 1
            if terms:
                _scatter(columns, basis, i, j, terms, passive)
    return columns, counts


# Set once per pool process by _init_worker
_worker_basis: GeneratorBasis | None = None


def _init_worker(diagram: LinkDiagram) -> None:
    global _worker_basis
    _worker_basis = GeneratorBasis(diagram)


def _collect_chunk(
    args: tuple[Decoration, list[int], list[int], Variant, int | None],
) -> tuple[dict[int, int], Counter]:
    if _worker_basis is None:
        raise RuntimeError("Worker basis not initialized")
    t, dims, sources, variant, corrupt_type = args
    return _collect(_worker_basis, t, dims, sources, variant, corrupt_type)


def _assemble(
    basis: GeneratorBasis,
    t: Decoration,
    dims: list[int],
    variant: Variant,
    workers: int | None,
    corrupt_type: int | None,
) -> SparseMapF2:
    d = basis.diagram
    if t.n != d.n:
        raise DecorationError(f"Decoration has {t.n} bits for {d.n} crossings")
    dims = [k for k in dims if 1 <= k <= d.n]
    workers = workers or settings.WORKERS
    result = SparseMapF2(len(basis), len(basis))
    if not dims:
        return result

    if workers <= 1 or d.n < 4:
        columns, counts = _collect(basis, t, dims, None, variant, corrupt_type)
        result.merge(SparseMapF2(len(basis), len(basis), columns))
    else:
        size = max(1, settings.FACE_CHUNK_SIZE)
        sources = list(range(1 << d.n))
        chunks = [sources[s : s + size] for s in range(0, len(sources), size)]
        jobs = [(t, dims, chunk, variant, corrupt_type) for chunk in chunks]
        counts = Counter()
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(d,)
        ) as pool:
            for columns, chunk_counts in pool.map(_collect_chunk, jobs):
                result.merge(SparseMapF2(len(basis), len(basis), columns))
                counts.update(chunk_counts)

    get_metrics().merge_counts(dict(counts))
    return result


def assemble_dk(
    d: LinkDiagram,
    t: Decoration,
    k: int,
    basis: GeneratorBasis | None = None,
    variant: Variant = "standard",
    workers: int | None = None,
    corrupt_type: int | None = None,
) -> SparseMapF2:
    """Matrix of d_k(t), the sum of the face maps over k-dimensional faces."""
    basis = basis or GeneratorBasis(d)
    if d.n and not 1 <= k <= d.n:
        raise DiagramError(f"Face dimension must lie in 1..{d.n}, got {k}")
    with trace_span("assemble_dk", k=k, crossings=d.n):
        return _assemble(basis, t, [k], variant, workers, corrupt_type)


def is_differential(dmap: SparseMapF2) -> bool:
    return dmap.compose(dmap).is_zero()


def assemble_d(
    d: LinkDiagram,
    t: Decoration,
    variant: Variant = "standard",
    basis: GeneratorBasis | None = None,
    check: bool | None = None,
    workers: int | None = None,
    corrupt_type: int | None = None,
) -> SparseMapF2:
    """Total differential d(t), or its mirror twin.

    Raises:
        DifferentialError: If `check` is on and d(t) does not square to zero.
    """
    basis = basis or GeneratorBasis(d)
    check = settings.CHECK_D_SQUARED if check is None else check
    with trace_span("assemble_d", crossings=d.n, variant=variant):
        with measure_latency("assemble_d") as elapsed_ms:
            dmap = _assemble(
                basis, t, list(range(1, d.n + 1)), variant, workers, corrupt_type
            )
    logger.info(
        f"Assembled d ({variant}) on {len(basis)} generators, "
        f"{dmap.nnz} entries in {elapsed_ms():.0f} ms"
    )
    if check and not is_differential(dmap):
        raise DifferentialError(
            f"d(t) does not square to zero for decoration {t} ({variant})"
        )
    return dmap


def assemble_Hm(
    d: LinkDiagram, t: Decoration, m: int, basis: GeneratorBasis | None = None
) -> SparseMapF2:
    """Edge homotopy H_m summed over the edges that change crossing m (1-based).

    H does not depend on arc orientations; `t` only shapes the configurations.
    """
    basis = basis or GeneratorBasis(d)
    if not 1 <= m <= d.n:
        raise DecorationError(f"Crossing {m} out of range 1..{d.n}")
    bit = 1 << (d.n - m)
    columns: dict[int, int] = {}
    for i in range(1 << d.n):
        if i & bit:
            continue
        c = build_configuration(d, t, i, i | bit, source=basis.table.get(i))
        _scatter(columns, basis, i, i | bit, h_terms(c), c.passive)
    return SparseMapF2(len(basis), len(basis), columns)


def decoration_iso(
    d: LinkDiagram,
    t: Decoration,
    t_prime: Decoration,
    basis: GeneratorBasis | None = None,
) -> SparseMapF2:
    """G = 1 + H_m for decorations that differ exactly at crossing m.

    Raises:
        DecorationError: If the decorations differ at other than one crossing.
    """
    differing = t.differing(t_prime)
    if len(differing) != 1:
        raise DecorationError(
            f"Decorations must differ at exactly one crossing, got {len(differing)}"
        )
    basis = basis or GeneratorBasis(d)
    return SparseMapF2.identity(len(basis)) + assemble_Hm(d, t, differing[0], basis)


def khovanov_differential(d: LinkDiagram, basis: GeneratorBasis | None = None) -> SparseMapF2:
    """Khovanov differential built directly from merge and split edge maps.

    Serves as an oracle for d_1: it reads circles off the resolutions
    and never builds configurations.
    """
    basis = basis or GeneratorBasis(d)
    columns: dict[int, int] = {}
    for i in range(1 << d.n):
        source = basis.table.get(i)
        for ci in range(d.n):
            bit = 1 << (d.n - 1 - ci)
            if i & bit:
                continue
            j = i | bit
            target = basis.table.get(j)
            edges = d.crossings[ci].edges
            before = sorted({source.circle_index[label] for label in edges})
            after = sorted({target.circle_index[label] for label in edges})
            # Circles away from the crossing keep their labels
            carried = [
                (pos, target.circle_index[circle.id])
                for pos, circle in enumerate(source.circles)
                if pos not in before
            ]
            for mask in range(1 << source.num_circles):
                rest = 0
                for pos, new_pos in carried:
                    if (mask >> pos) & 1:
                        rest |= 1 << new_pos
                images = _khovanov_images(mask, before, after, rest)
                col = basis.offsets[i] + mask
                for image in images:
                    columns[col] = columns.get(col, 0) ^ (1 << (basis.offsets[j] + image))
    return SparseMapF2(len(basis), len(basis), columns)


def _khovanov_images(mask: int, before: list[int], after: list[int], rest: int) -> list[int]:
    if len(before) == 2:
        x1, x2 = ((mask >> pos) & 1 for pos in before)
        (y,) = after
        if x1 and x2:
            return []
        return [rest | (1 << y)] if x1 or x2 else [rest]
    (x,) = before
    y1, y2 = after
    if (mask >> x) & 1:
        return [rest | (1 << y1) | (1 << y2)]
    return [rest | (1 << y1), rest | (1 << y2)]

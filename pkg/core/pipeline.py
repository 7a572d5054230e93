"""
Pipeline orchestration: from a run configuration to a report.

Loads the input diagram, resolves the decoration, builds the complex of
the selected theory and computes homology ranks, spectral pages and the
optional extras (Euler characteristic, transverse element, Khovanov
table). Also serves the matrix dumps and the invariance comparison.
"""

import logging
from dataclasses import dataclass

from config import settings
from core.schemas import (
    ComputeReport,
    InvarianceReport,
    PageReport,
    RunConfig,
    TransverseReport,
)
from core.utils.bits import int_to_bits
from cube.decoration import Decoration, flip, parse_decoration, random_decoration
from cube.generators import GeneratorBasis
from cube.jones import euler_characteristic, format_laurent, jones_polynomial
from differential.assemble import (
    DifferentialError,
    assemble_d,
    assemble_dk,
    assemble_Hm,
    decoration_iso,
)
from differential.complex import ChainComplex, cube_complex
from differential.reduced import reduced_subcomplex
from differential.sparse import SparseMapF2
from differential.transverse import is_closed, transverse_cycle
from diagram.braid import parse_braid
from diagram.models import DiagramError, LinkDiagram
from diagram.pd import parse_pd, signs
from homology.ranks import class_survives, homology_ranks
from homology.spectral import PageTable, spectral_pages
from loaders.loader import CorpusLoader, entry_diagram
from monitoring.tracing import trace_span

logger = logging.getLogger(__name__)


class CrossingLimitError(Exception):
    """Raised when a diagram exceeds the crossing cap."""

    pass


@dataclass
class LoadedInput:
    name: str
    diagram: LinkDiagram


def load_input(cfg: RunConfig, loader: CorpusLoader | None = None) -> LoadedInput:
    """Parse the single input source of a run configuration."""
    if cfg.corpus is not None:
        entry = (loader or CorpusLoader()).get(cfg.corpus)
        diagram = entry_diagram(entry)
        if cfg.basepoint is not None:
            diagram = _with_basepoint(diagram, cfg.basepoint)
        return LoadedInput(name=entry.name, diagram=diagram)
    if cfg.braid is not None:
        return LoadedInput(
            name=cfg.braid.strip(), diagram=parse_braid(cfg.braid, basepoint=cfg.basepoint)
        )
    return LoadedInput(
        name=cfg.pd.strip() or "unknot",
        diagram=parse_pd(cfg.pd, unknot=cfg.unknot, basepoint=cfg.basepoint),
    )


def _with_basepoint(d: LinkDiagram, basepoint: int) -> LinkDiagram:
    if basepoint not in d.labels:
        raise DiagramError(f"Basepoint {basepoint} is not an edge label")
    return LinkDiagram(
        crossings=d.crossings,
        components=d.components,
        loops=d.loops,
        basepoint=basepoint,
        braid=d.braid,
        crossing_tags=d.crossing_tags,
    )


def parse_input_spec(spec: str, loader: CorpusLoader | None = None) -> LoadedInput:
    """Parse 'corpus:<name>', 'braid:<k: word>' or 'pd:<code>'."""
    kind, sep, value = spec.partition(":")
    if not sep:
        raise DiagramError(f"Input must look like corpus:<name>, braid:<word> or pd:<code>: {spec!r}")
    kind = kind.strip().lower()
    if kind == "corpus":
        return load_input(RunConfig(corpus=value.strip()), loader)
    if kind == "braid":
        return load_input(RunConfig(braid=value))
    if kind == "pd":
        return load_input(RunConfig(pd=value, unknot=not value.strip()))
    raise DiagramError(f"Unknown input kind '{kind}'")


def check_crossing_cap(d: LinkDiagram, allow_large: bool = False) -> None:
    """Enforce MAX_CROSSINGS unless explicitly lifted.

    Raises:
        CrossingLimitError: If the diagram is above the cap.
    """
    if d.n <= settings.MAX_CROSSINGS:
        return
    if not allow_large:
        raise CrossingLimitError(
            f"{d.n} crossings exceed the cap of {settings.MAX_CROSSINGS} "
            "(pass --allow-large to override)"
        )
    logger.warning(f"Crossing cap lifted for a {d.n}-crossing diagram")


def build_complex(
    d: LinkDiagram,
    t: Decoration,
    theory: str,
    basis: GeneratorBasis | None = None,
    workers: int | None = None,
) -> ChainComplex:
    """Chain complex of one theory.

    The reduced theories restrict the full complex (or its mirror twin) to
    monomials divisible by the circle through the basepoint.
    """
    basis = basis or GeneratorBasis(d)
    base_theory = {"reduced": "szabo", "reduced-mirror": "szabo-mirror"}.get(theory, theory)
    with trace_span("build_complex", theory=theory, crossings=d.n):
        complex_ = cube_complex(d, t, base_theory, basis=basis, workers=workers)
        if theory.startswith("reduced"):
            complex_ = reduced_subcomplex(complex_, basis, d.effective_basepoint)
    return complex_


def _page_reports(pages: list[PageTable]) -> list[PageReport]:
    return [PageReport(**page.as_json()) for page in pages]


def _transverse_report(
    d: LinkDiagram, basis: GeneratorBasis, complex_: ChainComplex
) -> TransverseReport:
    z = transverse_cycle(d, basis)
    local = {int(g): i for i, g in enumerate(complex_.generators.tolist())}
    if z not in local:
        raise DifferentialError("The transverse element is not part of this complex")
    index = local[z]
    closed = is_closed(complex_.d, index)
    g = basis.generator(z)
    return TransverseReport(
        resolution="".join(str(b) for b in int_to_bits(g.resolution, d.n)) or "-",
        generator=basis.describe(z),
        h=int(complex_.h[index]),
        q=int(complex_.q[index]),
        delta=int(complex_.delta[index]),
        closed=closed,
        survives=closed and class_survives(complex_, index),
    )


def run_compute(cfg: RunConfig, loader: CorpusLoader | None = None) -> ComputeReport:
    """Compute the homology report for one run configuration."""
    loaded = load_input(cfg, loader)
    d = loaded.diagram
    check_crossing_cap(d, cfg.allow_large)
    if cfg.transverse and not d.is_braid:
        raise DiagramError("The transverse element needs a braid input")
    t = parse_decoration(cfg.decoration, d, cfg.seed)
    basis = GeneratorBasis(d)
    n_plus, n_minus = signs(d)

    complex_ = build_complex(d, t, cfg.theory, basis=basis, workers=cfg.workers)
    ranks = {"delta": homology_ranks(complex_, "delta").as_json()}
    if cfg.theory == "khovanov":
        ranks["bigraded"] = homology_ranks(complex_, "bigraded").as_json()

    report = ComputeReport(
        diagram=loaded.name,
        theory=cfg.theory,
        crossings=d.n,
        n_plus=n_plus,
        n_minus=n_minus,
        decoration=str(t) or "-",
        generators=len(complex_),
        ranks=ranks,
        total_rank=sum(ranks["delta"].values()),
    )
    if cfg.pages:
        report.pages = _page_reports(spectral_pages(complex_, d.n))
    if cfg.khovanov_table:
        khovanov = cube_complex(d, t, "khovanov", basis=basis)
        report.khovanov = homology_ranks(khovanov, "bigraded").as_json()
    if cfg.jones:
        report.jones = format_laurent(jones_polynomial(d))
        report.euler_characteristic = format_laurent(euler_characteristic(basis))
    if cfg.transverse:
        report.transverse = _transverse_report(d, basis, complex_)
    return report


def matrix_for(
    d: LinkDiagram,
    t: Decoration,
    component: str,
    theory: str = "szabo",
    k: int | None = None,
    m: int | None = None,
    t_prime: Decoration | None = None,
) -> SparseMapF2:
    """The map selected by a dump-matrix request, on the full cube basis.

    Args:
        component: "d" (the theory's differential), "dk", "hm" or "g".
        k: Face dimension for "dk".
        m: Crossing for "hm" (1-based).
        t_prime: Second decoration for "g"; defaults to `t` flipped at m.
    """
    basis = GeneratorBasis(d)
    variant = "mirror" if theory.endswith("mirror") else "standard"
    match component:
        case "d":
            return build_complex(d, t, theory, basis=basis).d
        case "dk":
            if k is None:
                raise DiagramError("dk needs --k")
            return assemble_dk(d, t, k, basis=basis, variant=variant)
        case "hm":
            if m is None:
                raise DiagramError("hm needs --m")
            return assemble_Hm(d, t, m, basis=basis)
        case "g":
            if t_prime is None:
                if m is None:
                    raise DiagramError("g needs --m or --decoration-to")
                t_prime = flip(t, m)
            return decoration_iso(d, t, t_prime, basis=basis)
        case _:
            raise DiagramError(f"Unknown matrix component '{component}'")


def _tables(d: LinkDiagram, t: Decoration, theory: str) -> tuple[dict[str, int], list[PageTable]]:
    complex_ = build_complex(d, t, theory)
    return homology_ranks(complex_).as_json(), spectral_pages(complex_, d.n)


def _pages_from_second(pages: list[PageTable], length: int) -> list[dict]:
    # E_1 is the chain groups and depends on the diagram; compare from E_2 on
    tail = [page.nonzero() for page in pages[1:]] or [pages[-1].nonzero()]
    return tail + [tail[-1]] * (length - len(tail))


def run_invariance(
    specs: list[str],
    theory: str = "szabo",
    decorations: int = 2,
    seed: int = 0,
    loader: CorpusLoader | None = None,
) -> InvarianceReport:
    """Compare rank and page tables of diagrams declared to be the same link.

    Each input is evaluated under its default decoration and `decorations`
    further seeded random decorations.
    """
    runs: list[tuple[str, dict[str, int], list[PageTable]]] = []
    for offset, spec in enumerate(specs):
        loaded = parse_input_spec(spec, loader)
        d = loaded.diagram
        check_crossing_cap(d)
        choices = [parse_decoration("auto", d)]
        choices.extend(
            random_decoration(d.n, seed + 1000 * offset + i) for i in range(decorations)
        )
        for t in choices:
            ranks, pages = _tables(d, t, theory)
            runs.append((f"{loaded.name} [{str(t) or '-'}]", ranks, pages))

    reference_name, reference_ranks, _ = runs[0]
    length = max(len(pages) for _, _, pages in runs)
    reference_pages = _pages_from_second(runs[0][2], length)
    mismatches = []
    pages_equal = True
    for name, ranks, pages in runs[1:]:
        if ranks != reference_ranks:
            mismatches.append(f"{name}: ranks {ranks} != {reference_ranks} of {reference_name}")
        if _pages_from_second(pages, length) != reference_pages:
            pages_equal = False
            mismatches.append(f"{name}: page tables differ from {reference_name}")

    return InvarianceReport(
        inputs=[name for name, _, _ in runs],
        theory=theory,
        equal=not mismatches,
        ranks=[ranks for _, ranks, _ in runs],
        page_tables_equal=pages_equal,
        mismatches=mismatches,
    )

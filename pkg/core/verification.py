"""
Verification suite.

Runs every identity the theory promises against the corpus and against
seeded random braid closures: d^2 = 0 for both differentials, the
decoration-change formula, H_m^2 = 0, the configuration rules, the
reference pairing table, closure of the transverse element, E_2 against
Khovanov homology and the Euler characteristic against the Kauffman
bracket.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy as sp

from config import settings
from core.schemas import CheckReport, VerifyReport
from cube.decoration import braid_decoration, flip, random_decoration
from cube.generators import GeneratorBasis
from cube.jones import (
    euler_characteristic,
    format_laurent,
    jones_polynomial,
    parse_laurent,
)
from differential.assemble import (
    assemble_d,
    assemble_dk,
    assemble_Hm,
    decoration_iso,
    is_differential,
    khovanov_differential,
)
from differential.checks import CheckResult, check_pairing_table, run_rule_suite
from differential.complex import ChainComplex
from differential.transverse import is_closed, transverse_cycle
from diagram.braid import braid_closure, random_braid_word
from diagram.models import LinkDiagram
from diagram.pd import mirror_diagram
from homology.ranks import homology_ranks
from homology.spectral import spectral_pages
from loaders.loader import CorpusLoader, entry_diagram
from monitoring.metrics import measure_latency, track_timing

logger = logging.getLogger(__name__)


@dataclass
class VerifyOptions:
    decorations: int = settings.VERIFY_DECORATIONS
    random_diagrams: int = settings.VERIFY_RANDOM_DIAGRAMS
    max_crossings: int = settings.VERIFY_MAX_CROSSINGS
    transverse_braids: int = settings.VERIFY_TRANSVERSE_BRAIDS
    rule_samples: int = settings.RULE_SAMPLE_FACES
    rule_max_dimension: int = settings.RULE_MAX_DIMENSION
    seed: int = settings.SEED
    include_slow: bool = False
    corrupt_type: int | None = None

    @classmethod
    def quick(cls, **overrides) -> "VerifyOptions":
        """Small samples for development runs."""
        values = {
            "decorations": 3,
            "random_diagrams": 10,
            "max_crossings": 6,
            "transverse_braids": 10,
            "rule_samples": 500,
            "rule_max_dimension": 4,
        }
        values.update(overrides)
        return cls(**values)


@lru_cache(maxsize=256)
def basis_for(d: LinkDiagram) -> GeneratorBasis:
    """Shared basis per diagram, so face terms computed by one check serve the next."""
    return GeneratorBasis(d)


def _complex(basis: GeneratorBasis, dmap, theory: str = "szabo") -> ChainComplex:
    return ChainComplex(
        theory=theory,
        d=dmap,
        h=basis.h,
        q=basis.q,
        delta=basis.delta,
        generators=np.arange(len(basis), dtype=np.int64),
    )


def check_d_squared(
    named: list[tuple[str, LinkDiagram]], decorations: int, seed: int
) -> CheckResult:
    result = CheckResult("d_squared")
    rng = np.random.default_rng(seed)
    for name, d in named:
        basis = basis_for(d)
        choices = [random_decoration(d.n, int(rng.integers(0, 2**32))) for _ in range(decorations)]
        if d.is_braid:
            choices.insert(0, braid_decoration(d))
        for t in choices:
            for variant in ("standard", "mirror"):
                dmap = assemble_d(d, t, variant=variant, basis=basis, check=False)
                result.record(is_differential(dmap), f"{name} decoration {t} ({variant})")
    return result


def check_decoration_change(named: list[tuple[str, LinkDiagram]], seed: int) -> list[CheckResult]:
    """d(t') = d + H d + d H, G d(t) = d(t') G and equal ranks, for every flip."""
    relation = CheckResult("decoration_relation")
    chain_map = CheckResult("decoration_iso")
    homotopy = CheckResult("h_squared")
    rng = np.random.default_rng(seed)
    for name, d in named:
        if d.n == 0:
            continue
        basis = basis_for(d)
        t = random_decoration(d.n, int(rng.integers(0, 2**32)))
        dt = assemble_d(d, t, basis=basis, check=False)
        ranks = homology_ranks(_complex(basis, dt), check=False).ranks
        for m in range(1, d.n + 1):
            t_prime = flip(t, m)
            dt_prime = assemble_d(d, t_prime, basis=basis, check=False)
            h = assemble_Hm(d, t, m, basis=basis)
            where = f"{name} decoration {t} flipped at {m}"
            homotopy.record(h.compose(h).is_zero(), where)
            relation.record(dt_prime == dt + h.compose(dt) + dt.compose(h), where)
            g = decoration_iso(d, t, t_prime, basis=basis)
            ranks_prime = homology_ranks(_complex(basis, dt_prime), check=False).ranks
            chain_map.record(
                g.compose(dt) == dt_prime.compose(g) and ranks == ranks_prime, where
            )
    return [relation, chain_map, homotopy]


def check_transverse(count: int, max_crossings: int, seed: int) -> CheckResult:
    result = CheckResult("transverse_closed")
    rng = np.random.default_rng(seed)
    for _ in range(count):
        word = random_braid_word(rng, max_crossings)
        d = braid_closure(word)
        basis = basis_for(d)
        dmap = assemble_d(d, braid_decoration(d), basis=basis, check=False)
        result.record(is_closed(dmap, transverse_cycle(d, basis)), f"braid {word}")
    return result


@track_timing("verify_spectral")
def check_spectral(named: list[tuple[str, LinkDiagram]], seed: int) -> list[CheckResult]:
    """E_2 equals Khovanov homology, E_infinity has the rank of the homology of d."""
    second = CheckResult("e2_khovanov")
    last = CheckResult("e_infinity_total")
    khovanov_oracle = CheckResult("d1_khovanov")
    rng = np.random.default_rng(seed)
    for name, d in named:
        basis = basis_for(d)
        t = random_decoration(d.n, int(rng.integers(0, 2**32)))
        full = _complex(basis, assemble_d(d, t, basis=basis, check=False))
        oracle = khovanov_differential(d, basis)
        d1 = assemble_dk(d, t, 1, basis=basis)
        khovanov_oracle.record(d1 == oracle, name)

        pages = spectral_pages(full, d.n, check=False)
        kh = homology_ranks(_complex(basis, oracle, "khovanov"), "bigraded", check=False)
        # (q, h) -> (h, delta)
        expected = {(h, q - 2 * h): v for (q, h), v in kh.nonzero().items()}
        e2 = pages[1] if len(pages) > 1 else pages[0]
        second.record(e2.nonzero() == expected, name)
        total = homology_ranks(full, check=False).total
        last.record(pages[-1].total == total, name)
    return [khovanov_oracle, second, last]


def check_mirror(named: list[tuple[str, LinkDiagram]], seed: int) -> CheckResult:
    """The mirror diagram has the ranks of the original with delta negated, for d and d'."""
    result = CheckResult("mirror_ranks")
    rng = np.random.default_rng(seed)
    for name, d in named:
        reflected = mirror_diagram(d)
        for variant in ("standard", "mirror"):
            ranks = []
            for diagram in (d, reflected):
                basis = basis_for(diagram)
                t = random_decoration(diagram.n, int(rng.integers(0, 2**32)))
                dmap = assemble_d(diagram, t, variant=variant, basis=basis, check=False)
                ranks.append(homology_ranks(_complex(basis, dmap), check=False).nonzero())
            original, mirrored = ranks
            expected = {-delta: value for delta, value in original.items()}
            result.record(mirrored == expected, f"{name} ({variant})")
    return result


def check_euler(
    named: list[tuple[str, LinkDiagram]], tabulated: dict[str, str] | None = None
) -> list[CheckResult]:
    """Euler characteristic against the Kauffman bracket and against tabulated values.

    Args:
        named: Diagrams by entry name.
        tabulated: Entry name -> tabulated Jones polynomial text; entries
            without one are only compared with the bracket.
    """
    bracket = CheckResult("euler_jones")
    table = CheckResult("jones_table")
    tabulated = tabulated or {}
    for name, d in named:
        euler = euler_characteristic(basis_for(d))
        bracket.record(sp.expand(euler - jones_polynomial(d)) == 0, name)
        if name in tabulated:
            expected = parse_laurent(tabulated[name])
            table.record(
                sp.expand(euler - expected) == 0,
                f"{name}: {format_laurent(euler)} against {format_laurent(expected)}",
            )
    return [bracket, table]


def run_verification(
    options: VerifyOptions, loader: CorpusLoader | None = None
) -> list[CheckResult]:
    """Run the whole suite and return one result per check."""
    loader = loader or CorpusLoader()
    entries = loader.entries(include_slow=options.include_slow)
    named = [(entry.name, entry_diagram(entry)) for entry in entries]
    tabulated = {entry.name: entry.jones for entry in entries if entry.jones}
    rng = np.random.default_rng(options.seed)
    random_named = [
        (f"random braid {word}", braid_closure(word))
        for word in (
            random_braid_word(rng, options.max_crossings)
            for _ in range(options.random_diagrams)
        )
    ]
    diagrams = [d for _, d in named]

    results: list[CheckResult] = []
    with measure_latency("verify"):
        results.append(check_pairing_table())
        results.extend(
            run_rule_suite(
                diagrams,
                options.rule_samples,
                options.rule_max_dimension,
                seed=options.seed,
                corrupt_type=options.corrupt_type,
            )
        )
        results.append(check_d_squared(named, options.decorations, options.seed))
        random_squared = check_d_squared(random_named, 1, options.seed + 1)
        random_squared.name = "d_squared_random"
        results.append(random_squared)
        results.extend(check_decoration_change(named, options.seed))
        results.append(
            check_transverse(options.transverse_braids, options.max_crossings, options.seed)
        )
        results.extend(check_spectral(named, options.seed))
        results.append(check_mirror(named, options.seed))
        results.extend(check_euler(named, tabulated))

    for result in results:
        level = logging.INFO if result.passed else logging.ERROR
        logger.log(level, f"{result.name}: {result.samples} samples, {len(result.failures)} failures")
    return results


def to_report(results: list[CheckResult]) -> VerifyReport:
    checks = [
        CheckReport(
            name=result.name,
            passed=result.passed,
            samples=result.samples,
            failures=result.failures[:20],
        )
        for result in results
    ]
    return VerifyReport(passed=all(check.passed for check in checks), checks=checks)

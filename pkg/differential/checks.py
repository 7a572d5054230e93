"""
Rule checks for the configuration maps F.

Each check evaluates one identity that every configuration must satisfy
(duality against the mirrored dual, conjugation, grading, filtration,
passive-circle extension) and the reference-type pairing table. The
verification pipeline runs them over sampled faces of real diagrams.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from configuration.classify import classify_two_dim
from configuration.model import Configuration, dual, mirror, reverse
from configuration.reference import REFERENCE_TYPES, reference_configuration
from cube.decoration import Decoration, random_decoration
from cube.face_config import build_configuration
from differential.rules import Term, extend, f_terms
from diagram.models import LinkDiagram

logger = logging.getLogger(__name__)

EXPECTED_DUAL = {1: 9, 2: 4, 3: 5, 6: 14, 7: 15, 8: 16, 10: 12, 11: 13}
EXPECTED_DUAL.update({v: k for k, v in list(EXPECTED_DUAL.items())})
EXPECTED_MIRROR = {i: i for i in (*range(1, 6), *range(9, 14))}
EXPECTED_MIRROR.update({6: 14, 7: 15, 8: 16, 14: 6, 15: 7, 16: 8})

RULES = ("duality", "conjugation", "grading", "filtration", "extension")


@dataclass
class CheckResult:
    name: str
    samples: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail: str) -> None:
        self.samples += 1
        # Keep reports short
        if not ok and len(self.failures) < 20:
            self.failures.append(detail)


def term_set(terms: list[Term]) -> set[Term]:
    """Terms as a GF(2) set: a term listed twice cancels."""
    result: set[Term] = set()
    for term in terms:
        result ^= {term}
    return result


def _ids(circles) -> frozenset[int]:
    return frozenset(circle.id for circle in circles)


def duality_holds(c: Configuration, corrupt_type: int | None = None) -> bool:
    """Coefficient of F_C(a) at b equals that of F_m(C*)(b*) at a*."""
    active = c.with_passive(())
    twin = mirror(dual(active))
    start, end = _ids(active.circles), _ids(active.ending)
    if _ids(twin.circles) != end or _ids(twin.ending) != start:
        return False
    _, terms = f_terms(active, corrupt_type=corrupt_type)
    _, twin_terms = f_terms(twin, corrupt_type=corrupt_type)
    expected = {(end - b, start - a) for a, b in term_set(terms)}
    return term_set(twin_terms) == expected


def conjugation_holds(c: Configuration) -> bool:
    """F is unchanged when every arc is reversed.

    Both sides are classified afresh; the class cache is keyed up to
    reversal and would hand the reversed side the cached answer.
    """
    _, terms = f_terms(c, use_cache=False)
    _, reversed_terms = f_terms(reverse(c), use_cache=False)
    return term_set(terms) == term_set(reversed_terms)


def grading_holds(c: Configuration) -> bool:
    """gr(b) - gr(a) = k - 2 for every nonzero coefficient."""
    active = c.with_passive(())
    num_start, num_end = len(active.circles), len(active.ending)
    _, terms = f_terms(c)
    return all(
        (num_end - 2 * len(b)) - (num_start - 2 * len(a)) == c.dimension - 2
        for a, b in terms
    )


def filtration_holds(c: Configuration) -> bool:
    """Divisibility by x(P) forces divisibility by y(P) for every marked point P."""
    active = c.with_passive(())
    ending_of = {label: y.id for y in active.ending for label in y.labels}
    _, terms = f_terms(c)
    for a, b in terms:
        for x in active.circles:
            if x.id in a and any(ending_of[label] not in b for label in x.labels):
                return False
    return True


def extension_holds(c: Configuration, rng: np.random.Generator) -> bool:
    """F(a w) = F_active(a) w for a random monomial w on the passive circles."""
    passive = sorted(min(labels) for labels in c.passive)
    if not passive:
        return True
    w = frozenset(p for p in passive if rng.integers(0, 2))
    _, terms = f_terms(c)
    for a, _ in terms:
        image = extend(terms, a | w, frozenset(passive))
        expected = {b | w for b in extend(terms, a, frozenset())}
        if image != expected:
            return False
    return True


def check_pairing_table() -> CheckResult:
    """Dual and mirror of every reference type land on the expected types."""
    result = CheckResult("pairing")
    for type_number in REFERENCE_TYPES:
        c = reference_configuration(type_number)
        dual_type = classify_two_dim(dual(c))
        mirror_type = classify_two_dim(mirror(c))
        result.record(
            dual_type == EXPECTED_DUAL[type_number],
            f"type {type_number}: dual is {dual_type}, expected {EXPECTED_DUAL[type_number]}",
        )
        result.record(
            mirror_type == EXPECTED_MIRROR[type_number],
            f"type {type_number}: mirror is {mirror_type}, "
            f"expected {EXPECTED_MIRROR[type_number]}",
        )
    return result


def sample_faces(
    d: LinkDiagram,
    t: Decoration,
    max_dim: int,
    limit: int,
    rng: np.random.Generator,
) -> Iterator[Configuration]:
    """Random face configurations of dimension 1..max_dim."""
    n = d.n
    if n == 0:
        return
    top = min(max_dim, n)
    for _ in range(limit):
        k = int(rng.integers(1, top + 1))
        raised = rng.choice(n, size=k, replace=False)
        i = 0
        for b in range(n):
            if b not in raised and rng.integers(0, 2):
                i |= 1 << b
        j = i
        for b in raised:
            j |= 1 << int(b)
        yield build_configuration(d, t, i, j)


def run_rule_suite(
    diagrams: list[LinkDiagram],
    samples: int,
    max_dim: int,
    seed: int = 0,
    corrupt_type: int | None = None,
) -> list[CheckResult]:
    """Sample faces across `diagrams` and evaluate every rule on each.

    Duality is also evaluated on the sixteen reference configurations so
    that a corrupted type is always exercised.
    """
    rng = np.random.default_rng(seed)
    results = {name: CheckResult(name) for name in RULES}
    for type_number in REFERENCE_TYPES:
        results["duality"].record(
            duality_holds(reference_configuration(type_number), corrupt_type),
            f"reference type {type_number}",
        )

    usable = [d for d in diagrams if d.n > 0]
    if usable:
        per_diagram = max(1, -(-samples // len(usable)))
        for d in usable:
            t = random_decoration(d.n, int(rng.integers(0, 2**32)))
            for c in sample_faces(d, t, max_dim, per_diagram, rng):
                where = f"{d.n}-crossing diagram, k={c.dimension}, decoration {t}"
                results["duality"].record(duality_holds(c, corrupt_type), where)
                results["conjugation"].record(conjugation_holds(c), where)
                results["grading"].record(grading_holds(c), where)
                results["filtration"].record(filtration_holds(c), where)
                results["extension"].record(extension_holds(c, rng), where)

    for result in results.values():
        logger.debug(f"Rule {result.name}: {result.samples} samples, {len(result.failures)} failures")
    return list(results.values())

"""
Configuration classification.

One-dimensional configurations are split or join edges, two-dimensional
ones are matched against the reference types, and higher ones are tested
against every contributing family (A, B, C, D, E). Anything else
contributes nothing.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from configuration.canonical import canonical_code_up_to_reversal
from configuration.model import (
    Configuration,
    ConfigurationError,
    dual,
    mirror,
    restrict,
)
from configuration.reference import reference_codes

logger = logging.getLogger(__name__)

E_PAIR_TYPES = frozenset({2, 3, 4, 5, 6, 7})


class ClassificationError(Exception):
    """Raised when a configuration matches no reference type or two families."""

    pass


class Family(str, Enum):
    SPLIT = "split"
    JOIN = "join"
    TWO_DIM = "two_dim"
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    ZERO = "zero"


@dataclass(frozen=True)
class ConfigClass:
    family: Family
    type: int | None = None
    k: int | None = None
    p: int | None = None
    q: int | None = None

    def __str__(self) -> str:
        match self.family:
            case Family.SPLIT:
                return "SplitEdge"
            case Family.JOIN:
                return "JoinEdge"
            case Family.TWO_DIM:
                return f"TwoDim({self.type})"
            case Family.A | Family.B:
                return f"{self.family.value}({self.k})"
            case Family.C | Family.D | Family.E:
                return f"{self.family.value}({self.p},{self.q})"
            case _:
                return "Zero"

    @property
    def contributes(self) -> bool:
        if self.family == Family.ZERO:
            return False
        if self.family == Family.TWO_DIM:
            return self.type is not None and self.type <= 9
        return True


ZERO = ConfigClass(Family.ZERO)

_class_cache: dict[tuple, ConfigClass] = {}


def classify_two_dim(c: Configuration) -> int:
    """Reference type (1..16) of an active, connected two-arc configuration.

    Raises:
        ConfigurationError: If the input is not active, connected and
            two-dimensional.
        ClassificationError: If no reference type matches.
    """
    if c.passive:
        raise ConfigurationError("Two-dimensional classification needs the active part")
    if c.dimension != 2 or not c.is_connected():
        raise ConfigurationError(
            "Two-dimensional classification needs a connected two-arc configuration"
        )
    code = canonical_code_up_to_reversal(c)
    try:
        return reference_codes()[code]
    except KeyError as e:
        raise ClassificationError(
            "Two-arc configuration matches no reference type"
        ) from e


def pair_type(c: Configuration, first: int, second: int) -> int | None:
    """Type of the active sub-configuration on two arcs, None if disconnected."""
    sub = restrict(c, {first, second}).with_passive(())
    if not sub.is_connected():
        return None
    return classify_two_dim(sub)


def _pair_types(c: Configuration) -> dict[tuple[int, int], int | None]:
    ids = [arc_id for arc_id, _, _ in c.arcs]
    return {(i, j): pair_type(c, i, j) for i, j in combinations(ids, 2)}


def central_circle(c: Configuration) -> int | None:
    """Index of the unique starting circle meeting every arc, if any."""
    touching = None
    for a, b in c.arc_circles():
        here = {a, b}
        touching = here if touching is None else touching & here
    if not touching or len(touching) != 1:
        return None
    return next(iter(touching))


def arc_sides(c: Configuration) -> dict[bool, list[int]]:
    """Arc ids grouped by their side of the single starting circle."""
    sides: dict[bool, list[int]] = {True: [], False: []}
    for index, (arc_id, _, _) in enumerate(c.arcs):
        sides[c.side_of_arc(index)].append(arc_id)
    return sides


def _is_type_a(c: Configuration, k: int, num_end: int) -> bool:
    if len(c.circles) != 2 or num_end != k:
        return False
    return all(t == 1 for t in _pair_types(c).values())


def _type_c(c: Configuration, k: int, num_end: int) -> tuple[int, int] | None:
    if len(c.circles) != 1 or num_end != k - 1:
        return None
    sides = arc_sides(c)
    first, second = sides[True], sides[False]
    if not first or not second:
        return None
    for e in first:
        for f in second:
            if pair_type(c, e, f) != 8:
                return None
    return max(len(first), len(second)), min(len(first), len(second))


def _type_e(c: Configuration, k: int, num_end: int) -> tuple[int, int] | None:
    num_start = len(c.circles)
    if num_start + num_end != k + 2:
        return None
    if central_circle(c) is None or central_circle(dual(c)) is None:
        return None
    if not all(t in E_PAIR_TYPES for t in _pair_types(c).values()):
        return None
    return num_start - 1, num_end - 1


def _classify_higher(c: Configuration) -> ConfigClass:
    k = c.dimension
    twin = mirror(dual(c))
    num_start, num_end = len(c.circles), len(c.ending)

    matches = []
    if _is_type_a(c, k, num_end):
        matches.append(ConfigClass(Family.A, k=k))
    if _is_type_a(twin, k, num_start):
        matches.append(ConfigClass(Family.B, k=k))
    if (pq := _type_c(c, k, num_end)) is not None:
        matches.append(ConfigClass(Family.C, k=k, p=pq[0], q=pq[1]))
    if (pq := _type_c(twin, k, num_start)) is not None:
        matches.append(ConfigClass(Family.D, k=k, p=pq[0], q=pq[1]))
    if (pq := _type_e(c, k, num_end)) is not None:
        matches.append(ConfigClass(Family.E, k=k, p=pq[0], q=pq[1]))

    if len(matches) > 1:
        raise ClassificationError(
            f"{k}-dimensional configuration matches several families: "
            + ", ".join(str(m) for m in matches)
        )
    return matches[0] if matches else ZERO


def _classify_uncached(active: Configuration) -> ConfigClass:
    if active.dimension == 2:
        return ConfigClass(Family.TWO_DIM, type=classify_two_dim(active), k=2)
    return _classify_higher(active)


def classify(c: Configuration, use_cache: bool = True) -> ConfigClass:
    """Contributing class of the active part of a configuration.

    Results are cached by canonical code up to reversal, so isomorphic
    faces are classified once. The cache key does not see arc
    orientation; `use_cache=False` classifies `c` as it is.
    """
    active = c.with_passive(())
    k = active.dimension
    if k == 0 or not active.is_connected():
        return ZERO
    if k == 1:
        family = Family.SPLIT if len(active.circles) == 1 else Family.JOIN
        return ConfigClass(family, k=1)
    if k >= 3 and len(active.circles) + len(active.ending) not in (k, k + 2):
        return ZERO

    if not use_cache:
        return _classify_uncached(active)

    key = canonical_code_up_to_reversal(active)
    cached = _class_cache.get(key)
    if cached is not None:
        return cached

    result = _classify_uncached(active)
    _class_cache[key] = result
    logger.debug(f"Classified new {k}-dimensional shape as {result}")
    return result

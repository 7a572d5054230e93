"""
Nonzero terms of the configuration maps F and H.

A term (a, b) says that the monomial on the active starting circles `a`
maps to the monomial on the active ending circles `b`. Monomials are
frozensets of circle ids (smallest PD label on the circle). Passive
circles are multiplied through unchanged.
"""

from typing import Literal

from configuration.classify import ConfigClass, Family, central_circle, classify
from configuration.model import Configuration, dual, mirror

Monomial = frozenset[int]
Term = tuple[Monomial, Monomial]
Variant = Literal["standard", "mirror"]

EMPTY: Monomial = frozenset()


def _ids(circles) -> Monomial:
    return frozenset(circle.id for circle in circles)


def _central_terms(c: Configuration) -> list[Term]:
    # Non-central starting circles map to the central ending circle
    start = central_circle(c)
    end = central_circle(dual(c))
    inputs = _ids(x for i, x in enumerate(c.circles) if i != start)
    return [(inputs, frozenset({c.ending[end].id}))]


def _two_dim_terms(c: Configuration, type_number: int) -> list[Term]:
    match type_number:
        case 1:
            return [(EMPTY, EMPTY)]
        case 8:
            return [(EMPTY, EMPTY), (_ids(c.circles), _ids(c.ending))]
        case 9:
            return [(_ids(c.circles), _ids(c.ending))]
        case 2 | 3 | 4 | 5 | 6 | 7:
            return _central_terms(c)
        case _:
            return []


def class_terms(c: Configuration, cls: ConfigClass, corrupt_type: int | None = None) -> list[Term]:
    """Terms of F for an active configuration already classified as `cls`.

    Args:
        c: Active configuration.
        cls: Its class.
        corrupt_type: Two-dimensional type to treat as contributing
            nothing (negative control for the rule checks).
    """
    match cls.family:
        case Family.SPLIT:
            (x,) = c.circles
            y1, y2 = c.ending
            return [
                (EMPTY, frozenset({y1.id})),
                (EMPTY, frozenset({y2.id})),
                (frozenset({x.id}), frozenset({y1.id, y2.id})),
            ]
        case Family.JOIN:
            x1, x2 = c.circles
            (y,) = c.ending
            return [
                (EMPTY, EMPTY),
                (frozenset({x1.id}), frozenset({y.id})),
                (frozenset({x2.id}), frozenset({y.id})),
            ]
        case Family.TWO_DIM:
            if cls.type == corrupt_type:
                return []
            return _two_dim_terms(c, cls.type)
        case Family.A | Family.C:
            return [(EMPTY, EMPTY)]
        case Family.B | Family.D:
            return [(_ids(c.circles), _ids(c.ending))]
        case Family.E:
            return _central_terms(c)
        case _:
            return []


def f_terms(
    c: Configuration,
    variant: Variant = "standard",
    corrupt_type: int | None = None,
    use_cache: bool = True,
) -> tuple[ConfigClass, list[Term]]:
    """Class and nonzero terms of F on the active part of `c`.

    The mirror variant evaluates F on the mirrored configuration; circle
    ids are unchanged by mirroring, so the terms transport back as they are.
    """
    active = c.with_passive(())
    if variant == "mirror":
        active = mirror(active)
    cls = classify(active, use_cache)
    if not cls.contributes:
        return cls, []
    return cls, class_terms(active, cls, corrupt_type)


def h_terms(c: Configuration) -> list[Term]:
    """Nonzero terms of the edge homotopy H; arc orientation plays no role."""
    active = c.with_passive(())
    if active.dimension != 1:
        raise ValueError("H is defined on one-dimensional configurations")
    if len(active.circles) == 1:
        return [(EMPTY, EMPTY)]
    x1, x2 = active.circles
    (y,) = active.ending
    return [(frozenset({x1.id, x2.id}), frozenset({y.id}))]


def extend(terms: list[Term], a: Monomial, passive: Monomial) -> set[Monomial]:
    """Apply active terms to a monomial that may contain passive circles.

    Returns:
        The image as a set of monomials (a GF(2) sum).
    """
    w = a & passive
    active_part = a - passive
    image: set[Monomial] = set()
    for source, target in terms:
        if source == active_part:
            image ^= {target | w}
    return image


def _passive_ids(c: Configuration) -> Monomial:
    return frozenset(min(labels) for labels in c.passive)


def f_config(
    c: Configuration, a: Monomial, variant: Variant = "standard"
) -> set[Monomial]:
    """F applied to one monomial of the starting circles of `c`."""
    _, terms = f_terms(c, variant)
    return extend(terms, a, _passive_ids(c))


def f_edge(c: Configuration, a: Monomial) -> set[Monomial]:
    if c.dimension != 1:
        raise ValueError("Edge maps need a one-dimensional configuration")
    return f_config(c, a)


def h_edge(c: Configuration, a: Monomial) -> set[Monomial]:
    return extend(h_terms(c), a, _passive_ids(c))

"""
Diagram input behavior verification.
Covers PD tokenizing, orientation and crossing signs, planarity
checks, braid closures and the error cases of both notations.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagram.braid import braid_closure, parse_braid, parse_braid_word
from diagram.models import BraidWord, DiagramError
from diagram.pd import mirror_diagram, parse_pd, serialize_pd, signs, writhe
from diagram.planar_map import build_planar_map
from tests.samples import (
    FIGURE_EIGHT_PD,
    HOPF_NEGATIVE_PD,
    TREFOIL_LEFT_PD,
    TREFOIL_RIGHT_PD,
)


def test_trefoil_signs():
    """Both trefoil chiralities orient consistently with opposite signs."""
    assert signs(parse_pd(TREFOIL_RIGHT_PD)) == (3, 0)
    assert signs(parse_pd(TREFOIL_LEFT_PD)) == (0, 3)


def test_hopf_and_figure_eight_signs():
    """The negative Hopf link has two negative crossings and the figure-eight has writhe zero."""
    assert signs(parse_pd(HOPF_NEGATIVE_PD)) == (0, 2)
    figure_eight = parse_pd(FIGURE_EIGHT_PD)
    assert figure_eight.n == 4
    assert writhe(figure_eight) == 0


def test_kink_signs():
    """A single curl is negative or positive depending on which strand passes under."""
    assert signs(parse_pd("X(1,2,2,1)")) == (0, 1)
    assert signs(parse_pd("X(1,1,2,2)")) == (1, 0)


def test_serialize_round_trip():
    """PD text is written back exactly as it was read."""
    text = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
    assert serialize_pd(parse_pd(text)) == text


def test_components_cover_every_label():
    """Components of the Hopf link partition the edge labels."""
    d = parse_pd(HOPF_NEGATIVE_PD)
    assert len(d.components) == 2
    assert sorted(label for comp in d.components for label in comp) == [1, 2, 3, 4]


def test_mirror_flips_signs():
    """Mirroring the right trefoil makes every crossing negative."""
    d = parse_pd(TREFOIL_RIGHT_PD)
    assert signs(mirror_diagram(d)) == (0, 3)


def test_empty_pd_needs_unknot_flag():
    """An empty PD code is only accepted as the explicit unknot."""
    with pytest.raises(DiagramError):
        parse_pd("")
    d = parse_pd("", unknot=True)
    assert d.n == 0
    assert d.loops == (1,)
    assert d.effective_basepoint == 1


@pytest.mark.parametrize(
    "text",
    [
        "X(1,2,3)",
        "Y(1,2,2,1)",
        "X(0,1,1,0)",
        "X(1,2,3,4)",
        "X(1,1,1,1)",
    ],
)
def test_malformed_pd_rejected(text):
    """Wrong arity, unknown tokens, zero labels and bad gluing are input errors."""
    with pytest.raises(DiagramError):
        parse_pd(text)


def test_non_planar_pd_rejected():
    """Three crossings glued into a torus are not a planar diagram."""
    with pytest.raises(DiagramError):
        parse_pd("X(1,4,2,3) X(3,6,4,5) X(5,2,6,1)")


def test_unknown_basepoint_rejected():
    """The basepoint must be an edge label of the diagram."""
    with pytest.raises(DiagramError):
        parse_pd(TREFOIL_RIGHT_PD, basepoint=99)


def test_planar_map_is_spherical():
    """The figure-eight planar map is a single sphere."""
    planar = build_planar_map(parse_pd(FIGURE_EIGHT_PD))
    assert planar.is_spherical()
    assert planar.num_components == 1


def test_braid_parsing():
    """Braid words parse into strands and signed generators."""
    word = parse_braid_word("3: 1 -2 1")
    assert word == BraidWord(strands=3, word=(1, -2, 1))
    assert str(word) == "3: 1 -2 1"


@pytest.mark.parametrize("text", ["1 2 1", "2: 2", "2: 0", "3: 1 x", "2: -3"])
def test_bad_braid_rejected(text):
    """Missing strand count, out-of-range or zero generators are rejected."""
    with pytest.raises(DiagramError):
        parse_braid(text)


def test_braid_closure_signs_and_tags():
    """Positive generators are horizontal positive crossings, negative ones vertical."""
    d = parse_braid("3: 1 -2 1 -2")
    assert signs(d) == (2, 2)
    assert d.crossing_tags == ("horizontal", "vertical", "horizontal", "vertical")
    assert d.is_braid


def test_braid_closure_keeps_free_strands():
    """Strands no generator touches close into free loops."""
    d = parse_braid("3: 1 1")
    assert d.n == 2
    assert len(d.loops) == 1
    assert len(d.components) == 3


def test_empty_braid_is_unlink():
    """The empty braid on two strands closes to a two-component unlink."""
    d = parse_braid("2:")
    assert d.n == 0
    assert len(d.loops) == 2


@settings(max_examples=50, deadline=None)
@given(
    strands=st.integers(min_value=2, max_value=4),
    data=st.data(),
)
def test_random_braid_closures_are_planar(strands, data):
    """Random braid closures are planar and count their crossing signs correctly."""
    generators = st.integers(min_value=1, max_value=strands - 1).flatmap(
        lambda g: st.sampled_from([g, -g])
    )
    word = tuple(data.draw(st.lists(generators, min_size=1, max_size=6)))
    d = braid_closure(BraidWord(strands=strands, word=word))
    n_plus, n_minus = signs(d)
    assert n_plus == sum(1 for g in word if g > 0)
    assert n_minus == sum(1 for g in word if g < 0)
    assert build_planar_map(d).is_spherical()

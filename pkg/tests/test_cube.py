"""
Cube of resolutions behavior verification.
Checks circle tracing, face enumeration, decorations, the graded basis,
face configurations and the Euler characteristic against the
Kauffman-bracket state sum.
"""

import pytest

from configuration.classify import Family, classify
from configuration.model import ConfigurationError
from cube.decoration import (
    Decoration,
    DecorationError,
    braid_decoration,
    flip,
    parse_decoration,
    random_decoration,
)
from cube.face_config import build_configuration
from cube.faces import active_crossings, all_faces, face_masks, faces
from cube.generators import GeneratorBasis, gradings
from cube.jones import (
    euler_characteristic,
    format_laurent,
    jones_polynomial,
    laurent_coefficients,
    parse_laurent,
)
from cube.resolution import ResolutionTable
from diagram.braid import parse_braid
from diagram.pd import parse_pd
from loaders.loader import entry_diagram
from tests.samples import FIGURE_EIGHT_PD


def test_hopf_resolution_circles(hopf_positive):
    """Hopf link resolutions have two, one, one and two circles."""
    table = ResolutionTable(hopf_positive)
    assert [table.get(i).num_circles for i in range(4)] == [2, 1, 1, 2]


def test_trefoil_resolution_circles(trefoil_braid, trefoil_pd):
    """Both trefoil diagrams trace the expected circle counts at the cube corners."""
    for d in (trefoil_braid, trefoil_pd):
        table = ResolutionTable(d)
        counts = {i: table.get(i).num_circles for i in range(8)}
        assert counts[0] == 2
        assert counts[7] == 3
        assert all(counts[1 << b] == 1 for b in range(3))


def test_circle_ids_are_smallest_labels(hopf_positive):
    """A circle is named by the smallest edge label on it."""
    resolution = ResolutionTable(hopf_positive).get(0)
    for circle in resolution.circles:
        assert circle.id == min(circle.boundary)
    assert sorted(resolution.circle_index) == sorted(hopf_positive.labels)


def test_free_loops_are_circles():
    """Free braid strands appear as circles in every resolution."""
    d = parse_braid("3: 1 1")
    assert ResolutionTable(d).get(0).num_circles == 3


@pytest.mark.parametrize("n, k, expected", [(2, 1, 4), (2, 2, 1), (3, 1, 12), (3, 2, 6), (3, 3, 1)])
def test_face_counts(n, k, expected):
    """There are C(n, k) 2^(n-k) faces of dimension k."""
    assert len(list(faces(n, k))) == expected


def test_all_faces_count():
    """Faces of every dimension together number 3^n - 2^n."""
    assert len(list(all_faces(3))) == 3**3 - 2**3


def test_faces_raise_only_zero_bits():
    """A face only raises bits that are zero in its source."""
    for i, j in face_masks(4, 2):
        assert i & ~j == 0
        assert (j & ~i).bit_count() == 2


def test_face_dimension_out_of_range():
    """Faces larger than the cube are rejected."""
    with pytest.raises(ValueError):
        list(face_masks(2, 3))


def test_active_crossings_msb_first():
    """Raised crossings are listed with crossing 1 as the top bit."""
    assert active_crossings(0b000, 0b101, 3) == [0, 2]
    assert active_crossings(0b100, 0b110, 3) == [1]


def test_braid_decoration():
    """Braid decorations follow the crossing tags."""
    d = parse_braid("3: 1 -2 1 -2")
    assert braid_decoration(d) == Decoration((1, 0, 1, 0))


def test_braid_decoration_needs_braid(trefoil_pd):
    """A PD diagram has no braid decoration."""
    with pytest.raises(DecorationError):
        braid_decoration(trefoil_pd)


def test_parse_decoration(trefoil_pd, trefoil_braid):
    """Decoration text accepts auto, explicit bits and seeded random."""
    assert parse_decoration("auto", trefoil_pd) == Decoration((0, 0, 0))
    assert parse_decoration("auto", trefoil_braid) == Decoration((1, 1, 1))
    assert parse_decoration("101", trefoil_pd) == Decoration((1, 0, 1))
    assert parse_decoration("random", trefoil_pd, seed=3) == random_decoration(3, 3)


@pytest.mark.parametrize("spec", ["10", "1011", "abc"])
def test_bad_decoration_rejected(spec, trefoil_pd):
    """Bit strings of the wrong length or with other characters are rejected."""
    with pytest.raises(DecorationError):
        parse_decoration(spec, trefoil_pd)


def test_flip_changes_one_crossing():
    """Flipping changes exactly the named crossing."""
    t = Decoration((0, 0, 0))
    t_prime = flip(t, 2)
    assert t_prime == Decoration((0, 1, 0))
    assert t.differing(t_prime) == [2]
    with pytest.raises(DecorationError):
        flip(t, 4)


def test_decoration_mask_puts_crossing_one_first():
    """The integer form of a decoration matches resolution bit order."""
    assert Decoration((1, 0, 0)).mask == 0b100
    assert Decoration((0, 1, 1)).mask == 0b011
    assert Decoration(()).mask == 0


def test_gradings_formula():
    """Generator gradings follow h, q and delta from resolution and mask."""
    # h = |I| - n-, q = gr + |I| + n+ - 2 n-, delta = q - 2h
    assert gradings(0, 1, 0, 0, 0) == (0, 1, 1)
    assert gradings(0, 1, 1, 0, 0) == (0, -1, -1)
    assert gradings(2, 3, 0b101, 1, 2) == (0, -2, -2)


def test_basis_sizes(hopf_positive, trefoil_braid, unknot):
    """Basis sizes of the unknot, Hopf link and trefoil."""
    assert len(GeneratorBasis(unknot)) == 2
    assert len(GeneratorBasis(hopf_positive)) == 12
    assert len(GeneratorBasis(trefoil_braid)) == 30


def test_basis_order_by_weight(trefoil_braid):
    """Generators are ordered by resolution weight."""
    basis = GeneratorBasis(trefoil_braid)
    weights = [int(i).bit_count() for i in basis.resolutions]
    assert weights == sorted(weights)
    assert basis.index(0, 0) == 0
    assert list(basis.block(0)) == [0, 1, 2, 3]


def test_describe_generator(unknot):
    """Generators print as resolution bits and a monomial."""
    basis = GeneratorBasis(unknot)
    assert basis.describe(0) == "-|1"
    assert basis.describe(1) == "-|x1"


def test_trefoil_euler_characteristic(trefoil_braid):
    """The trefoil cube has Euler characteristic q + q^3 + q^5 - q^9."""
    chi = euler_characteristic(GeneratorBasis(trefoil_braid))
    assert laurent_coefficients(chi) == {9: -1, 5: 1, 3: 1, 1: 1}


def test_unknot_jones(unknot):
    """The bracket gives q + q^-1 for the unknot in stable text form."""
    assert laurent_coefficients(jones_polynomial(unknot)) == {1: 1, -1: 1}
    assert format_laurent(jones_polynomial(unknot)) == "1*q^1 + 1*q^-1"


@pytest.mark.parametrize(
    "name",
    [
        "unknot-kink-negative",
        "unknot-kink-positive",
        "unknot-r2",
        "unlink-r2",
        "hopf-negative-pd",
        "trefoil-left-pd",
        "figure-eight-braid",
        "torus-2-5",
    ],
)
def test_euler_characteristic_matches_jones(name, corpus_loader):
    """The cube Euler characteristic equals the bracket state sum."""
    d = entry_diagram(corpus_loader.get(name))
    chi = euler_characteristic(GeneratorBasis(d))
    assert laurent_coefficients(chi) == laurent_coefficients(jones_polynomial(d))


def test_euler_characteristic_matches_tabulated_jones(corpus_loader):
    """Every corpus entry with a tabulated Jones polynomial agrees with its cube."""
    entries = [e for e in corpus_loader.entries(include_slow=False) if e.jones]
    assert {e.link for e in entries} >= {"trefoil-right", "figure-eight", "hopf-positive"}
    for entry in entries:
        chi = euler_characteristic(GeneratorBasis(entry_diagram(entry)))
        assert laurent_coefficients(chi) == laurent_coefficients(parse_laurent(entry.jones)), entry.name


def test_parse_laurent():
    """Tabulated text reads back with negative powers and signs."""
    assert laurent_coefficients(parse_laurent("q^-1 + 2 - q^3")) == {3: -1, 0: 2, -1: 1}
    assert parse_laurent(format_laurent(parse_laurent("q + q^3 + q^5 - q^9"))) == parse_laurent(
        "-q^9 + q^5 + q^3 + q"
    )


@pytest.mark.parametrize("text", ["q +", "t^2 + 1", "q^(1"])
def test_parse_laurent_rejects_bad_text(text):
    """Incomplete text and other symbols are not Laurent polynomials in q."""
    with pytest.raises(ValueError):
        parse_laurent(text)


def test_figure_eight_jones_is_symmetric():
    """The amphichiral figure-eight has a symmetric Jones polynomial."""
    coefficients = laurent_coefficients(jones_polynomial(parse_pd(FIGURE_EIGHT_PD)))
    assert coefficients == {-p: c for p, c in coefficients.items()}


def test_face_configuration_of_split_edge(hopf_positive):
    """A one-circle edge of the Hopf cube is a split."""
    t = braid_decoration(hopf_positive)
    c = build_configuration(hopf_positive, t, 0b10, 0b11)
    assert c.dimension == 1
    assert classify(c).family == Family.SPLIT


def test_face_configuration_of_join_edge(hopf_positive):
    """A two-circle edge of the Hopf cube is a join onto one ending circle."""
    t = braid_decoration(hopf_positive)
    c = build_configuration(hopf_positive, t, 0b00, 0b01)
    assert classify(c).family == Family.JOIN
    assert len(c.ending) == 1


def test_two_dimensional_hopf_face(hopf_positive):
    """The full Hopf face is a parallel two-arc type."""
    c = build_configuration(hopf_positive, Decoration((0, 1)), 0b00, 0b11)
    cls = classify(c)
    assert cls.family == Family.TWO_DIM
    assert cls.type in (1, 9)


def test_passive_circles_recorded():
    """Circles no arc touches are kept as passive circles."""
    d = parse_braid("3: 1 1 2")
    c = build_configuration(d, Decoration((0, 0, 0)), 0b000, 0b001)
    total = len(c.circles) + len(c.passive)
    assert total == ResolutionTable(d).get(0).num_circles


@pytest.mark.parametrize("i, j", [(0b01, 0b10), (0b01, 0b01)])
def test_invalid_faces_rejected(i, j, hopf_positive):
    """Pairs that are not faces cannot build a configuration."""
    with pytest.raises(ConfigurationError):
        build_configuration(hopf_positive, Decoration((0, 0)), i, j)

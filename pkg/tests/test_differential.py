"""
Differential assembly behavior verification.
Checks the sparse GF(2) maps, the configuration rules on edges,
d(t)^2 = 0 for both variants, the Khovanov oracle for d_1, the
decoration-change formula, the reduced subcomplex, the transverse
element and the rule suite with its negative control.
"""

from unittest.mock import patch

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from configuration.classify import Family
from cube.decoration import (
    Decoration,
    DecorationError,
    braid_decoration,
    flip,
    random_decoration,
)
from cube.face_config import build_configuration
from cube.generators import GeneratorBasis
from differential.assemble import (
    DifferentialError,
    _collect,
    _collect_chunk,
    _init_worker,
    assemble_d,
    assemble_dk,
    assemble_Hm,
    decoration_iso,
    is_differential,
    khovanov_differential,
)
from differential.checks import run_rule_suite
from differential.complex import cube_complex
from differential.reduced import divisible_generators, reduced_subcomplex
from differential.rules import EMPTY, extend, f_edge, f_terms, h_edge, h_terms
from differential.sparse import SparseMapF2
from differential.transverse import is_closed, transverse_cycle, transverse_resolution
from diagram.braid import braid_closure, parse_braid
from diagram.models import BraidWord, DiagramError
from loaders.loader import entry_diagram

SMALL_ENTRIES = [
    "unknot",
    "unknot-kink-negative",
    "unknot-kink-positive",
    "unknot-braid-3",
    "unknot-r2",
    "unlink-r2",
    "hopf-negative-pd",
    "hopf-positive-braid",
    "trefoil-right-pd",
    "trefoil-left-braid",
    "figure-eight-pd",
]


class TestSparseMap:
    def test_from_entries_cancels_repeats(self):
        """Repeated entries cancel over GF(2)."""
        m = SparseMapF2.from_entries(3, 3, [(0, 1), (0, 1), (2, 0)])
        assert m.entries() == [(2, 0)]
        assert m.nnz == 1

    def test_compose_with_identity(self):
        """Composing with the identity changes nothing on either side."""
        m = SparseMapF2.from_entries(3, 3, [(0, 1), (1, 2), (2, 0)])
        identity = SparseMapF2.identity(3)
        assert m.compose(identity) == m
        assert identity @ m == m

    def test_add_is_xor(self):
        """A map added to itself is zero."""
        m = SparseMapF2.from_entries(2, 2, [(0, 1)])
        assert (m + m).is_zero()

    def test_compose_shape_mismatch(self):
        """Composition checks inner dimensions."""
        with pytest.raises(ValueError):
            SparseMapF2(2, 3).compose(SparseMapF2(2, 2))

    def test_dump(self):
        """The dump lists rows per nonzero column."""
        m = SparseMapF2.from_entries(4, 4, [(3, 0), (3, 2), (1, 1)])
        assert m.dump() == "1: 1\n3: 0 2"

    def test_submap(self):
        """Restriction keeps the chosen generators in order."""
        m = SparseMapF2.from_entries(3, 3, [(0, 1), (0, 2), (1, 2)])
        assert m.submap([0, 2]).entries() == [(0, 1)]


class TestEdgeRules:
    def test_split_edge(self, hopf_positive):
        """A split sends 1 to y1 + y2 and x to y1 y2; H sends 1 to 1."""
        t = braid_decoration(hopf_positive)
        c = build_configuration(hopf_positive, t, 0b10, 0b11)
        (x,) = c.circles
        y1, y2 = c.ending
        assert f_edge(c, EMPTY) == {frozenset({y1.id}), frozenset({y2.id})}
        assert f_edge(c, frozenset({x.id})) == {frozenset({y1.id, y2.id})}
        assert h_edge(c, EMPTY) == {EMPTY}

    def test_join_edge(self, hopf_positive):
        """A join sends 1 to 1, each x to y and kills x1 x2; H sends x1 x2 to y."""
        t = braid_decoration(hopf_positive)
        c = build_configuration(hopf_positive, t, 0b00, 0b01)
        x1, x2 = c.circles
        (y,) = c.ending
        assert f_edge(c, EMPTY) == {EMPTY}
        assert f_edge(c, frozenset({x1.id})) == {frozenset({y.id})}
        assert f_edge(c, frozenset({x1.id, x2.id})) == set()
        assert h_terms(c) == [(frozenset({x1.id, x2.id}), frozenset({y.id}))]

    def test_edge_map_ignores_orientation(self, hopf_positive):
        """An edge is a join for either arc orientation."""
        for t in (Decoration((0, 0)), Decoration((1, 1))):
            c = build_configuration(hopf_positive, t, 0b00, 0b01)
            cls, _ = f_terms(c)
            assert cls.family == Family.JOIN

    def test_extend_multiplies_passive_circles(self):
        """Passive variables ride along and must not meet the active part."""
        terms = [(EMPTY, frozenset({5}))]
        assert extend(terms, frozenset({9}), frozenset({9})) == {frozenset({5, 9})}
        assert extend(terms, frozenset({1}), frozenset({9})) == set()

    def test_h_needs_edge(self, hopf_positive):
        """H is only defined on edges."""
        c = build_configuration(hopf_positive, Decoration((0, 0)), 0b00, 0b11)
        with pytest.raises(ValueError):
            h_terms(c)


@pytest.mark.parametrize("name", SMALL_ENTRIES)
@pytest.mark.parametrize("variant", ["standard", "mirror"])
def test_d_squares_to_zero(name, variant, corpus_loader):
    """d(t) and d'(t) square to zero on small corpus diagrams."""
    d = entry_diagram(corpus_loader.get(name))
    basis = GeneratorBasis(d)
    for seed in range(3):
        t = random_decoration(d.n, seed)
        assert is_differential(assemble_d(d, t, variant=variant, basis=basis, check=False))


@settings(max_examples=20, deadline=None)
@given(
    strands=st.integers(min_value=2, max_value=3),
    word=st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=4),
    seed=st.integers(min_value=0, max_value=2**16),
)
def test_random_braids_d_squares_to_zero(strands, word, seed):
    """Both differentials square to zero on random small braids."""
    word = [g for g in word if abs(g) < strands] or [1]
    d = braid_closure(BraidWord(strands=strands, word=tuple(word)))
    t = random_decoration(d.n, seed)
    assert is_differential(assemble_d(d, t, check=False))
    assert is_differential(assemble_d(d, t, variant="mirror", check=False))


@pytest.mark.parametrize("name", ["hopf-negative-pd", "trefoil-right-pd", "figure-eight-braid"])
def test_d1_matches_khovanov_oracle(name, corpus_loader):
    """The edge part of d is the Khovanov differential for any decoration."""
    d = entry_diagram(corpus_loader.get(name))
    basis = GeneratorBasis(d)
    oracle = khovanov_differential(d, basis)
    for seed in range(2):
        assert assemble_dk(d, random_decoration(d.n, seed), 1, basis=basis) == oracle


def test_d_preserves_filtration_and_lowers_delta(trefoil_braid):
    """Every entry of d raises h and lowers delta by two."""
    basis = GeneratorBasis(trefoil_braid)
    dmap = assemble_d(trefoil_braid, braid_decoration(trefoil_braid), basis=basis)
    for col, row in dmap.entries():
        assert basis.h[row] > basis.h[col]
        assert basis.delta[row] == basis.delta[col] - 2


def test_assemble_d_raises_when_check_fails(hopf_positive):
    """A failed square-zero check raises DifferentialError."""
    with patch("differential.assemble.is_differential", return_value=False):
        with pytest.raises(DifferentialError):
            assemble_d(hopf_positive, Decoration((0, 0)), check=True)


def test_decoration_length_mismatch(hopf_positive):
    """A decoration must have one bit per crossing."""
    with pytest.raises(DecorationError):
        assemble_d(hopf_positive, Decoration((0,)), check=False)


@pytest.mark.parametrize("name", ["hopf-negative-pd", "trefoil-right-braid", "figure-eight-pd"])
def test_decoration_change_formula(name, corpus_loader):
    """Flipping one bit changes d by the homotopy H_m and G is a chain map."""
    d = entry_diagram(corpus_loader.get(name))
    basis = GeneratorBasis(d)
    t = random_decoration(d.n, 7)
    dt = assemble_d(d, t, basis=basis, check=False)
    for m in range(1, d.n + 1):
        t_prime = flip(t, m)
        dt_prime = assemble_d(d, t_prime, basis=basis, check=False)
        h = assemble_Hm(d, t, m, basis=basis)
        assert h.compose(h).is_zero()
        assert dt_prime == dt + h.compose(dt) + dt.compose(h)
        g = decoration_iso(d, t, t_prime, basis=basis)
        assert g.compose(dt) == dt_prime.compose(g)


def test_decoration_iso_needs_single_flip(trefoil_braid):
    """G is only defined between decorations one flip apart."""
    with pytest.raises(DecorationError):
        decoration_iso(trefoil_braid, Decoration((0, 0, 0)), Decoration((1, 1, 0)))


def test_hm_crossing_out_of_range(trefoil_braid):
    """H_m needs a crossing of the diagram."""
    with pytest.raises(DecorationError):
        assemble_Hm(trefoil_braid, Decoration((0, 0, 0)), 4)


@pytest.mark.parametrize("theory", ["szabo", "szabo-mirror"])
def test_reduced_subcomplex_is_closed(theory, trefoil_pd):
    """The basepoint-divisible half is a subcomplex shifted up by one in delta."""
    basis = GeneratorBasis(trefoil_pd)
    complex_ = cube_complex(trefoil_pd, Decoration((0, 1, 1)), theory, basis=basis)
    reduced = reduced_subcomplex(complex_, basis, trefoil_pd.effective_basepoint)
    assert len(reduced) == len(basis) // 2
    assert is_differential(reduced.d)
    assert reduced.theory.startswith("reduced")
    keep = divisible_generators(basis, trefoil_pd.effective_basepoint)
    assert np.array_equal(reduced.delta, basis.delta[keep] + 1)


def test_reduced_needs_basepoint(unknot):
    """A diagram without edges has no reduced theory."""
    basis = GeneratorBasis(unknot)
    complex_ = cube_complex(unknot, Decoration(()), "szabo", basis=basis)
    with pytest.raises(DiagramError):
        reduced_subcomplex(complex_, basis, None)


@pytest.mark.parametrize("text", ["2: 1 1 1", "3: 1 2 1 2", "3: 1 -2 1 -2", "3: -1 -2 -2", "2: 1 -1 1"])
def test_transverse_element_is_closed(text):
    """The transverse element is a cycle with every circle marked."""
    d = parse_braid(text)
    basis = GeneratorBasis(d)
    dmap = assemble_d(d, braid_decoration(d), basis=basis)
    z = transverse_cycle(d, basis)
    assert is_closed(dmap, z)
    generator = basis.generator(z)
    assert basis.table.get(generator.resolution).num_circles == generator.mask.bit_count()


def test_transverse_needs_braid(trefoil_pd):
    """The transverse element needs a braid closure."""
    with pytest.raises(DiagramError):
        transverse_resolution(trefoil_pd)


def test_rule_suite_passes(corpus_loader):
    """Every rule holds on sampled faces of the small corpus."""
    diagrams = [entry_diagram(corpus_loader.get(name)) for name in SMALL_ENTRIES]
    results = run_rule_suite(diagrams, samples=300, max_dim=3, seed=1)
    for result in results:
        assert result.passed, (result.name, result.failures)
        assert result.samples > 0


def test_rule_suite_detects_corrupted_type():
    """Zeroing type 9 breaks duality but not conjugation."""
    results = {r.name: r for r in run_rule_suite([], samples=0, max_dim=2, corrupt_type=9)}
    assert not results["duality"].passed
    assert results["conjugation"].passed


@pytest.mark.slow
def test_parallel_assembly_matches_sequential(corpus_loader):
    """Worker processes assemble the same map as a single process."""
    d = entry_diagram(corpus_loader.get("torus-3-4"))
    basis = GeneratorBasis(d)
    t = braid_decoration(d)
    sequential = assemble_d(d, t, basis=basis, workers=1, check=False)
    assert assemble_d(d, t, basis=basis, workers=2, check=False) == sequential


def test_worker_chunks_reuse_one_basis(trefoil_braid):
    """Pool workers build the generator basis once and reuse it for every chunk."""
    t = braid_decoration(trefoil_braid)
    _init_worker(trefoil_braid)
    chunks = [[0, 1, 2, 3], [4, 5, 6, 7]]
    with patch("differential.assemble.GeneratorBasis") as basis_cls:
        results = [_collect_chunk((t, [1, 2], chunk, "standard", None)) for chunk in chunks]
    basis_cls.assert_not_called()

    basis = GeneratorBasis(trefoil_braid)
    for chunk, (columns, _) in zip(chunks, results):
        expected, _ = _collect(basis, t, [1, 2], chunk, "standard", None)
        assert columns == expected


def test_repeat_assembly_reuses_face_terms(trefoil_braid):
    """A second decoration only rebuilds the faces whose own arcs changed orientation."""
    basis = GeneratorBasis(trefoil_braid)
    t = Decoration((0, 0, 0))
    first = assemble_d(trefoil_braid, t, basis=basis, workers=1)
    with patch(
        "differential.assemble.build_configuration", wraps=build_configuration
    ) as build:
        assert assemble_d(trefoil_braid, t, basis=basis, workers=1) == first
        assert build.call_count == 0
        flipped = assemble_d(trefoil_braid, flip(t, 1), basis=basis, workers=1)
    # Faces raising crossing 1: each other crossing is 0, 1 or raised
    assert build.call_count == 9
    assert flipped == assemble_d(trefoil_braid, flip(t, 1), workers=1)

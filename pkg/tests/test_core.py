import pytest

from core import (
    Band, BraidWord, FenceDiagram, Letter, RangeError, band_graph, braid_permutation,
    closure_permutation, count_cycles, expand_band, expand_band_word, is_quasipositive_annulus,
    surface_summary, trace_closure,
)
from search import enumerate_diagrams


def small_diagrams():
    for strands in range(1, 5):
        for bands in range(0, 4):
            yield from enumerate_diagrams(strands, bands)


class TestBand:
    def test_rejects_degenerate_band(self):
        with pytest.raises(RangeError):
            Band(2, 2)

    def test_rejects_reversed_band(self):
        with pytest.raises(RangeError):
            Band(3, 1)

    def test_passes_only_strict_interior(self):
        band = Band(1, 4)
        assert [line for line in range(1, 6) if band.passes(line)] == [2, 3]
        assert band.touches(1) and band.touches(4) and not band.touches(2)
        assert band.other_end(4) == 1


class TestFenceDiagram:
    def test_band_outside_lines(self):
        with pytest.raises(RangeError):
            FenceDiagram.of(2, (1, 3))

    def test_needs_a_line(self):
        with pytest.raises(RangeError):
            FenceDiagram(0)

    def test_attachments_are_word_indices(self, staircase):
        assert staircase.attachments(1) == [0, 1]
        assert staircase.attachments(3) == [0, 2]
        assert staircase.degree(2) == 2

    def test_key_and_equality(self, hopf):
        assert hopf == FenceDiagram(2, [Band(1, 2), Band(1, 2)])
        assert hopf.key == (2, ((1, 2), (1, 2)))
        assert str(hopf) == "b=2 [1-2 1-2]"


class TestBraidExpansion:
    def test_adjacent_band_is_a_generator(self):
        assert expand_band(1, 2) == [Letter(1, 1)]

    def test_long_band_is_a_conjugate(self):
        assert expand_band(1, 3) == [Letter(1, 1), Letter(2, 1), Letter(1, -1)]
        assert expand_band(2, 5) == [
            Letter(2, 1), Letter(3, 1), Letter(4, 1), Letter(3, -1), Letter(2, -1),
        ]

    def test_word_expansion_keeps_order(self, staircase):
        w = expand_band_word(staircase)
        assert w.strands == 3
        assert [tuple(l) for l in w.letters] == [(1, 1), (2, 1), (1, -1), (1, 1), (2, 1)]
        assert w.writhe == 3

    def test_braid_word_validates_letters(self):
        with pytest.raises(RangeError):
            BraidWord(2, [(2, 1)])
        with pytest.raises(RangeError):
            BraidWord(3, [(1, 0)])
        with pytest.raises(RangeError):
            BraidWord(0)


class TestSurface:
    def test_hopf_annulus(self, hopf):
        s = surface_summary(hopf)
        assert (s.euler_characteristic, s.boundary_components, s.connected) == (0, 2, True)
        assert is_quasipositive_annulus(hopf)

    def test_band_disk(self):
        s = surface_summary(FenceDiagram.of(3, (2, 3), (1, 2)))
        assert (s.euler_characteristic, s.boundary_components, s.connected) == (1, 1, True)

    def test_disconnected(self):
        f = FenceDiagram.of(4, (1, 2), (3, 4))
        assert not surface_summary(f).connected
        assert not is_quasipositive_annulus(f)

    def test_closure_permutation(self, hopf):
        assert closure_permutation(hopf) == (1, 2)
        assert count_cycles(closure_permutation(FenceDiagram.of(3, (1, 2), (2, 3)))) == 1
        assert closure_permutation(FenceDiagram.of(3, (1, 3), (1, 2), (2, 3))) == (2, 1, 3)

    def test_band_word_expansion_has_the_same_permutation(self):
        for f in small_diagrams():
            assert braid_permutation(expand_band_word(f)) == closure_permutation(f), f

    def test_band_graph_is_a_multigraph(self, hopf):
        assert band_graph(hopf).number_of_edges() == 2


class TestClosureTrace:
    def test_hopf_link_has_two_components(self):
        trace = trace_closure(BraidWord(2, [(1, 1), (1, 1)]))
        assert trace.component_count == 2
        assert [sign for _, _, sign in trace.crossings] == [1, 1]

    def test_single_twist_is_one_component(self):
        assert trace_closure(BraidWord(2, [(1, 1)])).component_count == 1

    def test_empty_word_gives_one_circle_per_strand(self):
        assert trace_closure(BraidWord(3)).component_count == 3

    def test_components_are_boundary_components(self):
        for f in small_diagrams():
            trace = trace_closure(expand_band_word(f))
            assert trace.component_count == surface_summary(f).boundary_components, f

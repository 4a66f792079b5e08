import pytest

from core import FenceDiagram, FenceError, RangeError, is_quasipositive_annulus
from models import ClassifyState
from moves import apply_path, twirl
from search import (
    NOT_RELATED, RELATED, UNKNOWN, SearchBudget, bfs_equivalence, classify_annuli,
    cycle_diagrams, enumerate_diagrams, invariant_vector, is_connected, scan_strands,
)

SMALL = SearchBudget(max_steps=3, max_strands=4, max_bands=4, max_visited=20_000)


class TestBudget:
    def test_defaults(self):
        budget = SearchBudget()
        assert (budget.max_steps, budget.max_strands, budget.max_bands, budget.max_visited) == \
            (6, 6, 8, 10**6)

    def test_positive(self):
        with pytest.raises(RangeError):
            SearchBudget(max_steps=0)

    def test_admits(self, hopf):
        assert SearchBudget(max_strands=2, max_bands=2).admits(hopf)
        assert not SearchBudget(max_strands=2, max_bands=1).admits(hopf)


class TestEnumerate:
    def test_single_band_type(self, hopf):
        assert list(enumerate_diagrams(2, 2)) == [hopf]

    def test_connected_pairs_on_three_lines(self):
        found = list(enumerate_diagrams(3, 2, keep=is_connected))
        assert len(found) == 6
        assert found[0] == FenceDiagram.of(3, (1, 2), (1, 3))

    def test_lexicographic(self):
        words = [f.pairs() for f in enumerate_diagrams(3, 2)]
        assert words == sorted(words)
        assert len(words) == 9

    def test_annuli_include_the_staircase(self, staircase):
        assert staircase in list(enumerate_diagrams(3, 3, keep=is_quasipositive_annulus))

    def test_cycle_diagrams(self):
        assert [len(list(cycle_diagrams(b))) for b in (1, 2, 3, 4)] == [0, 1, 6, 72]
        assert all(is_quasipositive_annulus(f) for f in cycle_diagrams(4))


class TestEquivalence:
    def test_same_diagram(self, hopf):
        result = bfs_equivalence(hopf, hopf)
        assert result.verdict == RELATED and result.path == ()

    def test_twirl_is_one_step(self, staircase):
        target = twirl(staircase, "front")
        result = bfs_equivalence(staircase, target, SMALL)
        assert result.verdict == RELATED
        assert len(result.path) == 1
        assert apply_path(staircase, result.path) == target

    def test_deflation_path_replays(self, staircase, hopf):
        result = bfs_equivalence(hopf, staircase, SMALL)
        assert result.verdict == RELATED
        assert apply_path(hopf, result.path) == staircase

    def test_rotation_number_separates(self, a3_rot0, a3_rot2):
        result = bfs_equivalence(a3_rot0, a3_rot2)
        assert result.verdict == NOT_RELATED and result.invariant == "rot_abs"
        assert str(result) == "verdict=NotRelatedByInvariant(rot_abs)"

    def test_euler_characteristic_separates(self, hopf):
        result = bfs_equivalence(hopf, FenceDiagram.of(2, (1, 2)))
        assert result.invariant == "chi"

    def test_out_of_budget(self, hopf):
        far = FenceDiagram.of(4, (1, 2), (1, 2), (2, 3), (3, 4))
        result = bfs_equivalence(hopf, far, SearchBudget(max_steps=1))
        assert result.verdict == UNKNOWN
        assert str(result) == "verdict=Unknown"

    def test_invariant_vector(self, triangle):
        vector = invariant_vector(triangle)
        assert (vector["chi"], vector["components"], vector["tb"], vector["rot_abs"]) == (0, 2, -2, 1)


class TestClassify:
    def test_single_twist(self, hopf):
        classes = classify_annuli(1, SMALL)
        assert [c.rot_abs for c in classes] == [0]
        assert classes[0].representative == hopf
        assert classes[0].tb == -1

    def test_double_twist(self):
        classes = classify_annuli(2, SMALL)
        assert [c.rot_abs for c in classes] == [1]
        assert all(c.tb == -2 for c in classes)

    def test_rejects_non_positive_target(self):
        with pytest.raises(FenceError):
            classify_annuli(0)

    @pytest.mark.slow
    @pytest.mark.parametrize("lk, expected", [(1, [0]), (2, [1]), (3, [0, 2])])
    def test_class_counts_within_default_budget(self, lk, expected):
        classes = classify_annuli(lk)
        assert [c.rot_abs for c in classes] == expected
        assert all(c.tb == -lk for c in classes)

    def test_worker_failure_is_recorded(self, monkeypatch):
        def broken(strands):
            raise RuntimeError("enumeration failed")
            yield

        monkeypatch.setattr("search.classify.cycle_diagrams", broken)
        state = ClassifyState([3])
        assert scan_strands(3, 1, state) == []
        assert state.results[3].status == "error"
        assert state.results[3].error == "enumeration failed"

    def test_state_tracks_progress(self):
        state = ClassifyState([2, 3])
        classify_annuli(1, SearchBudget(max_strands=3, max_bands=3), state)
        assert state.n_complete == 2
        assert state.results[3].scanned == state.results[3].total == 6
        assert state.classes == [0]

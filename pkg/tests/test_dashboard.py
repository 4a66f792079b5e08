import io

from rich.console import Console

from dashboard import build_dashboard
from models import ClassifyState, cycle_count


def render(panel) -> str:
    console = Console(file=io.StringIO(), width=120)
    console.print(panel)
    return console.file.getvalue()


def test_cycle_count():
    assert [cycle_count(b) for b in (2, 3, 4, 5)] == [1, 6, 72, 1440]


def test_state_counters():
    state = ClassifyState([2, 3, 4])
    state.mark_running(2)
    state.record_match(2, 0)
    state.update(2, scanned=1, status="complete", elapsed_s=0.01)
    state.mark_running(3)
    state.mark_error(4, "boom")
    assert (state.n_complete, state.n_running, state.n_error) == (1, 1, 1)
    assert state.n_matches == 1
    assert state.classes == [0]


def test_dashboard_lists_every_strand_count():
    state = ClassifyState([2, 3])
    state.record_match(3, 1)
    text = render(build_dashboard(state, lk_target=2))
    assert "Annulus classification" in text
    assert "lk = 2" in text
    assert "0/6" in text

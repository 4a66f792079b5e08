from rich.layout import Layout
from rich.panel import Panel
from rich.table import Table
from rich.text import Text
from rich import box

from models.classify_state import ClassifyState


def build_dashboard(state: ClassifyState, lk_target: int) -> Panel:
    n_done = state.n_complete
    n_run  = state.n_running

    # ── Header stats ─────────────────────────────────────────────────────
    header = Text()
    header.append("time: ", style="dim")
    header.append(f"{state.elapsed}s elapsed   ", style="bold cyan")
    header.append("run: ", style="dim")
    header.append(f"{n_run} scanning   ", style="bold green")
    header.append("done: ", style="dim")
    header.append(f"{n_done}/{state.total} strand counts   ", style="bold white")
    if state.n_error:
        header.append("err: ", style="bold red")
        header.append(f"{state.n_error} failed   ", style="bold red")
    header.append("matches: ", style="dim")
    header.append(f"{state.n_matches}   ", style="bold yellow")
    header.append("rot_abs: ", style="dim")
    header.append(", ".join(map(str, state.classes)) or "–", style="bold magenta")

    # ── Per-strand table ──────────────────────────────────────────────────
    with state.lock:
        rows = sorted(state.results.values(), key=lambda r: r.strands)

    table = Table(
        box=box.SIMPLE_HEAD,
        show_header=True,
        header_style="bold cyan",
        expand=True,
        padding=(0, 1),
    )
    table.add_column("Lines",    style="dim",      width=6)
    table.add_column("Status",   width=12)
    table.add_column("Scanned",  justify="right",  width=16)
    table.add_column("lk match", justify="right",  width=9)
    table.add_column("rot_abs",  justify="center", width=12)
    table.add_column("Time",     justify="right",  width=8)

    status_styles = {
        "pending":  ("dim", "..."),
        "running":  ("green", "> scanning"),
        "complete": ("bold white", "+ done"),
        "error":    ("red", "x error"),
    }

    for r in rows:
        style, label = status_styles.get(r.status, ("dim", r.status))
        table.add_row(
            str(r.strands),
            f"[{style}]{label}[/]",
            f"{r.scanned}/{r.total}",
            str(r.matches) if r.matches else "–",
            ", ".join(map(str, sorted(r.classes))) or "–",
            f"{r.elapsed_s}s" if r.elapsed_s else "–",
        )

    layout = Layout(name="root")
    layout.split_column(
        Layout(header, size=1),
        Layout(table),
    )
    return Panel(
        layout,
        title=f"[bold #00FF41]Annulus classification  ·  lk = {lk_target}[/]",
        subtitle=f"[dim]{state.total} strand counts  ·  single-cycle fence diagrams[/]",
        border_style="#00FF41",
        padding=(1, 2),
    )

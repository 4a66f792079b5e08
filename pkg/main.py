"""
main.py
-------
Command-line front end for quasipositive fence diagrams.

Reads fence and front files, applies moves, reduces diagrams to cusped
fronts, computes tb/rot and the oracle invariants, searches for move
sequences and classifies annulus diagrams by rotation number.

Usage:
    uv run python main.py invariants tests/data/hopf.fence
    uv run python main.py move --kind slip --at 1 diagram.fence
    uv run python main.py search tests/data/a3_rot0.fence tests/data/a3_rot2.fence
    uv run python main.py classify --lk 3 --live
    uv run python main.py render --format svg --cusped tests/data/hopf.fence
"""

import argparse
import logging
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from rich.console import Console
from rich.live import Live
from rich.logging import RichHandler
from rich.markup import escape

from cli import parse_fence, parse_front, render_ascii, render_svg, serialize_fence
from core import expand_band_word, is_quasipositive_annulus, surface_summary
from core.errors import FenceError, InvalidFront, ParseError, RangeError
from dashboard import build_dashboard
from legendrian import fence_from_front, legendrian_invariants, reduce, trace_diagram
from models import ClassifyState
from moves import MoveInstance, MoveKind, applicable_moves, apply_move, parse_split
from oracles import compare_diagrams, consistency_gate, kauffman_bracket, linking_number
from search import (
    DEFAULT_BUDGET, FILTERS, SearchBudget, bfs_equivalence, classify_annuli,
    enumerate_diagrams, strand_range,
)

EXIT_OK, EXIT_USAGE, EXIT_NOT_APPLICABLE = 0, 1, 2
INPUT_ERRORS = (ParseError, RangeError, InvalidFront)

console = Console(stderr=True)
logger  = logging.getLogger("fence")


class UsageError(Exception):
    pass


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def emit(*lines: str):
    for line in lines:
        sys.stdout.write(f"{line}\n")


def read_fence(path: str):
    return parse_fence(Path(path).read_text(encoding="utf-8"))


def budget_from(args) -> SearchBudget:
    return SearchBudget(
        max_steps=args.max_steps,
        max_strands=args.max_strands,
        max_bands=args.max_bands,
        max_visited=args.max_visited,
    )


# ── Subcommands ───────────────────────────────────────────────────────────

def cmd_invariants(args):
    f = read_fence(args.file)
    s = surface_summary(f)
    annulus = is_quasipositive_annulus(f)
    emit(f"chi={s.euler_characteristic}", f"components={s.boundary_components}",
         f"connected={str(s.connected).lower()}", f"annulus={str(annulus).lower()}")
    if annulus:
        emit(f"lk={linking_number(f)}")
        inv = legendrian_invariants(f, reverse=args.reverse)
        emit(*(f"{name}={value}" for name, value in inv.as_dict().items()))


def cmd_reduce(args):
    f = read_fence(args.file)
    r = trace_diagram(f) if args.trace else reduce(f)
    emit(f"strands={r.fence.strands}", f"bands={' '.join(map(str, r.fence.word))}")
    emit(*(f"segment {s}" for s in r.segments))
    emit(*(f"corner {c.x} {c.y} {c.shape.value}" for c in r.corners))
    emit(*(f"crossing {c.x} {c.y} {c.vertical} {c.horizontal}" for c in r.crossings))
    emit(*(f"vertex {x} {y}" for x, y in r.trivalent_vertices))
    emit(f"components={r.component_count}")


def move_from(args) -> MoveInstance:
    try:
        split = parse_split(args.split) if args.split is not None else None
    except ValueError as e:
        raise UsageError(str(e)) from None
    return MoveInstance(MoveKind(args.kind), at=args.at, line=args.line,
                        target=args.target, end=args.end, split=split)


def cmd_move(args):
    f = read_fence(args.file)
    m = move_from(args)
    needs = {
        MoveKind.SLIP: ("at",), MoveKind.SLIDE: ("at", "target"),
        MoveKind.INFLATE: ("line", "at", "split"), MoveKind.DEFLATE: ("line",),
        MoveKind.TWIRL: ("end",), MoveKind.TURN: (),
    }
    missing = [name for name in needs[m.kind] if getattr(m, name) is None]
    if missing:
        raise UsageError(f"--kind {m.kind.value} needs " + ", ".join(f"--{n}" for n in missing))
    sys.stdout.write(serialize_fence(apply_move(f, m)))


def cmd_search(args):
    a, b = read_fence(args.source), read_fence(args.target)
    result = bfs_equivalence(a, b, budget_from(args))
    emit(str(result))
    emit(*(f"move {' '.join(m.to_args())}" for m in result.path))
    if result.visited:
        emit(f"visited={result.visited}")


def cmd_enumerate(args):
    keep = None
    chosen = [FILTERS[name] for name in ("connected", "annulus") if getattr(args, name)]
    if chosen:
        keep = lambda f: all(check(f) for check in chosen)
    for i, f in enumerate(enumerate_diagrams(args.strands, args.bands, keep)):
        sys.stdout.write(("\n" if i else "") + serialize_fence(f))


def cmd_classify(args):
    budget = SearchBudget(max_strands=args.max_strands, max_bands=args.max_strands)
    state = ClassifyState(strand_range(budget))

    if args.live:
        with Live(build_dashboard(state, args.lk), refresh_per_second=4, console=console) as live:
            with ThreadPoolExecutor(max_workers=1) as executor:
                future = executor.submit(classify_annuli, args.lk, budget, state)
                while not future.done():
                    live.update(build_dashboard(state, args.lk))
                    time.sleep(0.25)
                live.update(build_dashboard(state, args.lk))
            classes = future.result()
    else:
        classes = classify_annuli(args.lk, budget, state)

    for c in classes:
        bands = " ".join(map(str, c.representative.word))
        emit(f"rot_abs={c.rot_abs} tb={c.tb} count={c.count} "
             f"strands={c.representative.strands} bands {bands}")
    if state.n_error:
        console.print(f"[bold red]{state.n_error} strand count(s) failed[/], the classes above cover the remaining ones")


def cmd_oracle(args):
    f = read_fence(args.file)
    if args.check == "lk":
        emit(f"lk={linking_number(f)}")
    elif args.check == "bracket":
        w = expand_band_word(f)
        emit(f"crossings={len(w)}", f"writhe={w.writhe}",
             f"bracket={kauffman_bracket(w)}",
             f"normalized={kauffman_bracket(w, normalize=True)}")
    elif args.file2:
        emit(str(compare_diagrams(f, read_fence(args.file2))))
    else:
        failed = 0
        for m in applicable_moves(f):
            report = consistency_gate(f, m)
            if not report.passed:
                failed += 1
                emit(f"move {' '.join(m.to_args())} {report}")
        emit("gate=pass" if not failed else f"gate=fail moves={failed}")


def cmd_render(args):
    f = read_fence(args.file)
    r = trace_diagram(f) if args.trace else reduce(f)
    draw = render_svg if args.format == "svg" else render_ascii
    sys.stdout.write(draw(r, cusped=args.cusped))


def cmd_from_front(args):
    front = parse_front(Path(args.file).read_text(encoding="utf-8"))
    sys.stdout.write(serialize_fence(fence_from_front(front)))


# ── Parser ────────────────────────────────────────────────────────────────

def build_parser() -> CliParser:
    parser = CliParser(prog="fence", description="Quasipositive fence diagrams and their Legendrian invariants")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="chi, components, lk, tb and rot")
    p.add_argument("file")
    p.add_argument("--reverse", action="store_true", help="Reverse the canonical orientation")
    p.set_defaults(run=cmd_invariants)

    p = sub.add_parser("reduce", help="List the reduced rectilinear diagram")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="Skip deflations, only cut line ends")
    p.set_defaults(run=cmd_reduce)

    p = sub.add_parser("move", help="Apply one move and print the result")
    p.add_argument("--kind", required=True, choices=[k.value for k in MoveKind])
    p.add_argument("--at", type=int, help="Word position (slip, slide) or insertion point (inflate)")
    p.add_argument("--line", type=int, help="Line index (inflate, deflate)")
    p.add_argument("--target", choices=["F1", "F2", "F3"], help="Slide form to rewrite into")
    p.add_argument("--end", choices=["front", "back"], help="Twirl direction")
    p.add_argument("--split", help="Inflate: u/l per band end of the line, in word order; - if none")
    p.add_argument("file")
    p.set_defaults(run=cmd_move)

    p = sub.add_parser("search", help="Look for a move sequence between two diagrams")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--max-steps",   type=int, default=DEFAULT_BUDGET.max_steps,
                   help=f"Path length bound (default: {DEFAULT_BUDGET.max_steps})")
    p.add_argument("--max-strands", type=int, default=DEFAULT_BUDGET.max_strands,
                   help=f"Line count bound (default: {DEFAULT_BUDGET.max_strands})")
    p.add_argument("--max-bands",   type=int, default=DEFAULT_BUDGET.max_bands,
                   help=f"Band count bound (default: {DEFAULT_BUDGET.max_bands})")
    p.add_argument("--max-visited", type=int, default=DEFAULT_BUDGET.max_visited,
                   help=f"Visited diagram bound (default: {DEFAULT_BUDGET.max_visited})")
    p.set_defaults(run=cmd_search)

    p = sub.add_parser("enumerate", help="Print every band word of a given size")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--bands",   type=int, required=True)
    p.add_argument("--connected", action="store_true", help="Only connected surfaces")
    p.add_argument("--annulus",   action="store_true", help="Only quasipositive annuli")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("classify", help="rot_abs classes of annuli with a given linking number")
    p.add_argument("--lk", type=int, required=True)
    p.add_argument("--max-strands", type=int, default=DEFAULT_BUDGET.max_strands,
                   help=f"Largest line count scanned (default: {DEFAULT_BUDGET.max_strands})")
    p.add_argument("--live", action="store_true", help="Show a live dashboard on stderr")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("oracle", help="Linking number, bracket or consistency gate")
    p.add_argument("--check", required=True, choices=["lk", "bracket", "gate"])
    p.add_argument("file")
    p.add_argument("file2", nargs="?", help="Gate: compare against this diagram")
    p.set_defaults(run=cmd_oracle)

    p = sub.add_parser("render", help="Draw the reduced diagram")
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--cusped", action="store_true", help="Mark left and right cusps")
    p.add_argument("--trace", action="store_true", help="Skip deflations, only cut line ends")
    p.add_argument("file")
    p.set_defaults(run=cmd_render)

    p = sub.add_parser("from-front", help="Fence diagram approximating a rectilinear front")
    p.add_argument("file")
    p.set_defaults(run=cmd_from_front)
    return parser


def run(argv: list[str]) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        console.print(f"[bold red]Error:[/] {escape(str(e))}")
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )
    logger.debug("running %s", args.command)
    try:
        args.run(args)
    except (UsageError, OSError, *INPUT_ERRORS) as e:
        console.print(f"[bold red]Error:[/] {escape(str(e))}")
        return EXIT_USAGE
    except FenceError as e:
        console.print(f"[bold red]{type(e).__name__}:[/] {escape(str(e))}")
        return EXIT_NOT_APPLICABLE
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

import xml.etree.ElementTree as ET

import pytest

from cli import parse_fence, parse_front, render_ascii, render_svg, serialize_fence, serialize_front
from core import FenceDiagram, ParseError, RangeError
from legendrian import reduce
from main import run

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


class TestFenceFormat:
    def test_hopf(self, hopf):
        assert parse_fence("fence 1\nstrands 2\nbands 1-2 1-2\n") == hopf

    def test_bare_disks(self):
        assert parse_fence("fence 1\nstrands 3\nbands\n") == FenceDiagram(3)

    def test_comments_and_blank_lines(self, hopf):
        text = "# Hopf annulus\n\nfence 1\nstrands 2   # two lines\n\nbands 1-2 1-2\n"
        assert parse_fence(text) == hopf

    def test_degenerate_band(self):
        with pytest.raises(RangeError):
            parse_fence("fence 1\nstrands 2\nbands 2-2\n")

    def test_band_past_last_line(self):
        with pytest.raises(RangeError):
            parse_fence("fence 1\nstrands 2\nbands 1-3\n")

    def test_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_fence("fence 1\nstrands 2\nbands 1-2 x\n")
        assert (info.value.line, info.value.column) == (3, 11)

    def test_wrong_keyword(self):
        with pytest.raises(ParseError) as info:
            parse_fence("fence 1\nlines 2\nbands\n")
        assert (info.value.line, info.value.column) == (2, 1)

    def test_missing_section(self):
        with pytest.raises(ParseError, match="bands"):
            parse_fence("fence 1\nstrands 2\n")

    def test_canonical_round_trip(self, data_dir):
        text = "fence 1\nstrands 6\nbands 1-3 5-6 3-5 2-4 1-2 4-6\n"
        assert serialize_fence(parse_fence(text)) == text
        assert serialize_fence(FenceDiagram(3)) == "fence 1\nstrands 3\nbands\n"
        for name in ("hopf.fence", "a3_rot0.fence", "a3_rot2.fence"):
            f = parse_fence((data_dir / name).read_text())
            assert parse_fence(serialize_fence(f)) == f


class TestFrontFormat:
    def test_segments(self, data_dir):
        front = parse_front((data_dir / "rectangle.front").read_text())
        assert len(front.segments) == 4
        assert str(front.segments[1]) == "V 40 10 30"

    def test_bad_axis(self):
        with pytest.raises(ParseError):
            parse_front("front 1\nsegments\nD 1 2 3\n")

    def test_round_trip(self, data_dir):
        for name in ("rectangle.front", "zigzag.front", "a3_rot0.front", "a3_rot2.front"):
            front = parse_front((data_dir / name).read_text())
            text = serialize_front(front)
            assert text.startswith("front 1\nsegments\n")
            assert parse_front(text) == front


class TestRender:
    def test_ascii_hopf(self, hopf):
        text = render_ascii(reduce(hopf))
        assert text == "+---+\n|   |\n+---+\n"
        rows = text.splitlines()
        assert sum(1 for row in rows if "-" in row) == 2
        assert len({i for row in rows for i, ch in enumerate(row) if ch == "|"}) == 2

    def test_ascii_cusps(self, hopf):
        assert render_ascii(reduce(hopf), cusped=True) == "<---+\n|   |\n+--->\n"

    def test_ascii_crossing_shows_the_band(self, triangle):
        rows = render_ascii(reduce(triangle)).splitlines()
        assert rows[2] == "+---|---+"

    def test_svg_is_well_formed(self, triangle):
        root = ET.fromstring(render_svg(reduce(triangle), cusped=True))
        assert root.tag.endswith("svg")
        cusps = [p for p in root.iter(SVG + "path") if p.get("class") == "cusp"]
        assert len(cusps) == 2
        assert root.findall(f".//{SVG}circle") == []

    def test_svg_geometry(self, hopf):
        root = ET.fromstring(render_svg(reduce(hopf), cusped=True))
        paths = [p.get("d") for p in root.iter(SVG + "path")]
        for d in ("M10 10L20 10", "M10 20L20 20", "M10 10L10 20", "M20 10L20 20"):
            assert d in paths
        assert "M12.5 10Q7.5 11.25 10 12.5" in paths      # left cusp on line 1
        assert "M17.5 20Q22.5 18.75 20 17.5" in paths     # right cusp on line 2
        assert root.get("viewBox") == "-10 -10 40 40"

    def test_uncusped_svg_has_no_arcs(self, hopf):
        root = ET.fromstring(render_svg(reduce(hopf)))
        assert len(list(root.iter(SVG + "path"))) == 4

    def test_empty(self):
        assert render_ascii(reduce(FenceDiagram.of(2, (1, 2)))) == ""


class TestRun:
    def test_invariants(self, data_dir, capsys):
        assert run(["invariants", str(data_dir / "hopf.fence")]) == 0
        lines = capsys.readouterr().out.splitlines()
        for expected in ("chi=0", "components=2", "annulus=true", "lk=1", "tb=-1", "rot=0", "r_c=1"):
            assert expected in lines

    def test_search_separates_by_rotation(self, data_dir, capsys):
        code = run(["search", str(data_dir / "a3_rot0.fence"), str(data_dir / "a3_rot2.fence")])
        assert code == 0
        assert capsys.readouterr().out.splitlines()[0] == "verdict=NotRelatedByInvariant(rot_abs)"

    def test_move(self, write, capsys):
        path = write("pair.fence", "fence 1\nstrands 4\nbands 1-2 3-4\n")
        assert run(["move", "--kind", "slip", "--at", "1", path]) == 0
        assert capsys.readouterr().out == "fence 1\nstrands 4\nbands 3-4 1-2\n"

    def test_move_not_applicable(self, write):
        path = write("chain.fence", "fence 1\nstrands 3\nbands 1-2 2-3\n")
        assert run(["move", "--kind", "slip", "--at", "1", path]) == 2

    def test_move_missing_parameter(self, data_dir):
        assert run(["move", "--kind", "slide", "--at", "1", str(data_dir / "hopf.fence")]) == 1

    def test_inflate_with_split(self, data_dir, capsys):
        args = ["move", "--kind", "inflate", "--line", "2", "--at", "2", "--split", "uu"]
        assert run(args + [str(data_dir / "hopf.fence")]) == 0
        assert capsys.readouterr().out.endswith("bands 1-2 1-2 2-3\n")

    def test_parse_error_exit(self, write):
        assert run(["invariants", write("bad.fence", "fence 2\n")]) == 1

    def test_missing_file(self, tmp_path):
        assert run(["invariants", str(tmp_path / "absent.fence")]) == 1

    def test_unknown_subcommand(self):
        assert run(["frobnicate"]) == 1

    def test_not_annulus(self, write):
        assert run(["oracle", "--check", "lk", write("disk.fence", "fence 1\nstrands 2\nbands 1-2\n")]) == 2

    def test_oracle_bracket(self, data_dir, capsys):
        assert run(["oracle", "--check", "bracket", str(data_dir / "hopf.fence")]) == 0
        out = capsys.readouterr().out
        assert "crossings=2" in out and "writhe=2" in out

    def test_oracle_gate(self, data_dir, capsys):
        assert run(["oracle", "--check", "gate", str(data_dir / "hopf.fence")]) == 0
        assert capsys.readouterr().out.strip().endswith("gate=pass")

    def test_from_front(self, data_dir, capsys):
        assert run(["from-front", str(data_dir / "a3_rot2.front")]) == 0
        assert capsys.readouterr().out == (data_dir / "a3_rot2.fence").read_text().split("\n", 1)[1]

    def test_render_svg(self, data_dir, capsys):
        assert run(["render", "--format", "svg", "--cusped", str(data_dir / "hopf.fence")]) == 0
        ET.fromstring(capsys.readouterr().out)

    def test_enumerate(self, capsys):
        assert run(["enumerate", "--strands", "3", "--bands", "2", "--connected"]) == 0
        assert capsys.readouterr().out.count("fence 1") == 6

    def test_classify(self, capsys):
        assert run(["classify", "--lk", "1", "--max-strands", "3"]) == 0
        assert capsys.readouterr().out.startswith("rot_abs=0 tb=-1 ")

    def test_bad_crossing_bound_is_a_usage_error(self, data_dir, monkeypatch):
        monkeypatch.setenv("FENCE_CROSSING_BOUND", "many")
        assert run(["oracle", "--check", "bracket", str(data_dir / "hopf.fence")]) == 1

import json
import subprocess
import sys

import pytest

from treecubic import harness
from treecubic.cli import main
from treecubic.comb_map import tmap_from_json, to_json
from treecubic.polygon import polygon_from_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCount:
    @pytest.mark.parametrize("argv, expected", [
        (["--formula", "theorem", "--n", "2"], "70"),
        (["--formula", "gj", "--n", "-1"], "1/2"),
        (["--formula", "tutte", "--n", "4"], "13"),
        (["--formula", "mullin", "--n", "2"], "10"),
        (["--formula", "catalan", "--n", "4"], "14"),
    ])
    def test_values(self, capsys, argv, expected):
        code, out, _ = run(capsys, "count", *argv)
        assert code == 0 and out.strip() == expected

    def test_table(self, capsys):
        code, out, _ = run(capsys, "count", "--formula", "theorem", "--table", "4")
        assert out.splitlines() == ["n,value", "1,4", "2,70", "3,1848", "4,60060"]

    @pytest.mark.parametrize("argv", [
        ["--formula", "theorem", "--n", "0"],
        ["--formula", "gj", "--n", "-2"],
        ["--formula", "theorem"],
        ["--formula", "theorem", "--n", "2", "--table", "3"],
        ["--formula", "nope", "--n", "2"],
    ])
    def test_bad_flags_exit_2(self, capsys, argv):
        with pytest.raises(SystemExit) as err:
            main(["count", *argv])
        assert err.value.code == 2
        assert capsys.readouterr().err


class TestEnumerate:
    def test_tmaps_n1(self, capsys, tmp_path):
        out_file = tmp_path / "t.jsonl"
        code, out, _ = run(capsys, "enumerate", "--what", "tmaps", "--n", "1", "--out", str(out_file))
        assert code == 0 and out.strip().splitlines()[-1] == "4"
        records = out_file.read_text().splitlines()
        assert len(records) == 4
        codes = {tmap_from_json(r).code() for r in records}
        assert codes == set(harness.tmaps_via_bijection(1))

    def test_pairings_n4(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--what", "pairings", "--n", "4")
        assert out.splitlines()[-1] == "14"
        assert out.count("k=8") == 14

    def test_rooted_cubic_n2(self, capsys, tmp_path):
        out_file = tmp_path / "r.jsonl"
        run(capsys, "enumerate", "--what", "rooted-cubic", "--n", "2", "--out", str(out_file))
        assert len(out_file.read_text().splitlines()) == 32

    def test_triangulations(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--what", "triangulations", "--n", "4")
        assert out.count("k=6") == 14 and out.splitlines()[-1] == "14"

    def test_tmaps_text_and_dot(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--what", "tmaps", "--n", "2", "--format", "text")
        assert out.count("k=6") == 70
        _, out, _ = run(capsys, "enumerate", "--what", "tmaps", "--n", "1", "--format", "dot")
        assert out.count("graph tmap") == 4

    def test_bound_exit_3(self, capsys):
        code, _, err = run(capsys, "enumerate", "--what", "rooted-cubic", "--n", "4")
        assert code == 3 and "n <= 3" in err
        code, _, err = run(capsys, "enumerate", "--what", "tmaps", "--n", "5")
        assert code == 3 and "n <= 4" in err

    def test_bad_format_exit_2(self):
        with pytest.raises(SystemExit) as err:
            main(["enumerate", "--what", "pairings", "--n", "2", "--format", "json"])
        assert err.value.code == 2

    def test_output_is_byte_stable(self, capsys):
        first = run(capsys, "enumerate", "--what", "tmaps", "--n", "2")[1]
        second = run(capsys, "enumerate", "--what", "tmaps", "--n", "2")[1]
        assert first == second


class TestBijection:
    def test_forward_theta(self, capsys, fixtures_dir, tmp_path):
        out_file = tmp_path / "p.txt"
        code, _, _ = run(capsys, "bijection", "--direction", "forward",
                         "--in", str(fixtures_dir / "theta_tmap.json"), "--out", str(out_file))
        assert code == 0
        assert out_file.read_text() == (fixtures_dir / "theta_polygon.txt").read_text()

    def test_reverse_octagon(self, capsys, fixtures_dir, tmp_path):
        out_file = tmp_path / "m.json"
        code, _, _ = run(capsys, "bijection", "--direction", "reverse",
                         "--in", str(fixtures_dir / "octagon.txt"), "--out", str(out_file))
        assert code == 0
        expected = tmap_from_json((fixtures_dir / "octagon_map.json").read_text())
        assert tmap_from_json(out_file.read_text()).code() == expected.code()

    @pytest.mark.parametrize("name", ["theta_tmap.json", "octagon.txt", "octagon_map.json"])
    def test_roundtrip_ok(self, capsys, fixtures_dir, name):
        code, out, _ = run(capsys, "bijection", "--direction", "roundtrip", "--in", str(fixtures_dir / name))
        assert code == 0 and out.strip() == "OK"

    def test_roundtrip_on_enumerated(self, capsys, tmp_path):
        out_file = tmp_path / "t.jsonl"
        run(capsys, "enumerate", "--what", "tmaps", "--n", "2", "--out", str(out_file))
        for i, line in enumerate(out_file.read_text().splitlines()[::7]):
            path = tmp_path / f"r{i}.json"
            path.write_text(line)
            assert run(capsys, "bijection", "--direction", "roundtrip", "--in", str(path))[1].strip() == "OK"

    def test_crossing_polygon_exit_4(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "bijection", "--direction", "reverse",
                           "--in", str(fixtures_dir / "crossing_hexagon.txt"))
        assert code == 4 and "genus 1" in err

    def test_malformed_map_exit_4(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "bijection", "--direction", "forward",
                           "--in", str(fixtures_dir / "alpha_fixed_point.json"))
        assert code == 4 and "fixed point" in err

    def test_matches_library(self, capsys, fixtures_dir):
        from treecubic.bijection import PolygonDatum, reverse

        _, out, _ = run(capsys, "bijection", "--direction", "reverse", "--in", str(fixtures_dir / "octagon.txt"))
        tri, pairing = polygon_from_text((fixtures_dir / "octagon.txt").read_text())
        t = reverse(PolygonDatum(tri, pairing))
        assert json.loads(out) == json.loads(to_json(t.map, t.tree_darts, t.root_dart))


class TestVerify:
    def test_max_n_2(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "2")
        assert code == 0 and "FAIL" not in out

    def test_machine(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "1", "--machine")
        lines = out.splitlines()
        assert lines[0] == "name,expected,observed,passed,ms"
        assert all(len(l.split(",")) == 5 and l.split(",")[3] == "true" for l in lines[1:])

    def test_max_n_3_includes_1848(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "3", "--machine")
        assert code == 0
        assert any(l.startswith("theorem_bijection[3],1848,1848,true") for l in out.splitlines())

    def test_negative_control_exit_1(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "2", "--inject-crossing-pairing")
        assert code == 1 and "FAIL" in out


class TestExport:
    def test_dot(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "export", "--in", str(fixtures_dir / "theta_tmap.json"))
        assert code == 0 and out.startswith("graph map {") and out.count("v0 -- v1") == 3

    def test_polygon_to_json(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "export", "--in", str(fixtures_dir / "octagon.txt"), "--format", "json")
        t = tmap_from_json(out)
        assert t.root_dart == 0 and t.code() == tmap_from_json((fixtures_dir / "octagon_map.json").read_text()).code()

    def test_invalid_exit_4(self, capsys, fixtures_dir):
        code, _, _ = run(capsys, "export", "--in", str(fixtures_dir / "alpha_fixed_point.json"))
        assert code == 4


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "treecubic", "count", "--formula", "theorem", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1848"

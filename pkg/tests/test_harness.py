import json
from pathlib import Path

import pytest

from tfplkit import cli
from tfplkit.bijection import LocalRuleTable, default_rule_table
from tfplkit.census import run_census
from tfplkit.config import Config, load_config
from tfplkit.fpl import EnumerationBoundError, enumerate_fpl
from tfplkit.puzzles import enumerate_puzzles
from tfplkit.render import render_svg
from tfplkit.tfpl import canonical_orientation, enumerate_tfpl
from tfplkit.verification import check_bijection, verify_all


class TestConfig:
    def test_defaults(self):
        c = load_config(env={})
        assert (c.fpl_max_n, c.tfpl_max_n, c.puzzle_max_n, c.parallelism) == (7, 4, 5, 1)

    def test_layering(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"fpl_max_n": 5, "tfpl_max_n": 3, "output_dir": "x"}))
        env = {"TFPLKIT_TFPL_MAX_N": "2", "TFPLKIT_PARALLELISM": "3"}
        c = load_config(path, env=env, parallelism=4, puzzle_max_n=None)
        assert c.fpl_max_n == 5
        assert c.tfpl_max_n == 2
        assert c.parallelism == 4
        assert c.puzzle_max_n == 5
        assert c.output_dir == Path("x")

    @pytest.mark.parametrize("bad", [{"fpl_max_n": 0}, {"parallelism": -1}])
    def test_invalid(self, bad):
        with pytest.raises(ValueError):
            Config(**bad)

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"max_n": 3}))
        with pytest.raises(ValueError):
            load_config(path, env={})


class TestCensus:
    def test_n1_trivial(self, tmp_path):
        report = run_census(Config(output_dir=tmp_path), 1)
        a_table = json.loads(Path(report["files"]["a_pi"]).read_text())
        rows = json.loads(Path(report["files"]["tc"]).read_text())["rows"]
        assert a_table["counts"] == {"01": 1}
        assert [(r["t"], r["puzzles"], r["c"]) for r in rows] == [(1, 1, 1)]

    def test_n2_total(self, tmp_path):
        report = run_census(Config(output_dir=tmp_path), 2)
        assert report["fpl_total"] == 2 and report["pass"]

    def test_n3_parallel_matches_serial(self, tmp_path):
        serial = run_census(Config(output_dir=tmp_path / "a"), 3)
        parallel = run_census(Config(output_dir=tmp_path / "b", parallelism=2), 3)
        assert serial["t_equals_c"] and serial["balanced_triples"] == 19
        for key in ("a_pi", "tc", "identities"):
            assert Path(serial["files"][key]).read_text() == Path(parallel["files"][key]).read_text()

    def test_io_error_has_context(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        with pytest.raises(OSError, match="census: cannot write"):
            run_census(Config(output_dir=blocker), 1)

    def test_bounds(self, tmp_path):
        with pytest.raises(EnumerationBoundError):
            run_census(Config(output_dir=tmp_path, tfpl_max_n=2), 3)


class TestRender:
    def test_n1_tfpl_has_two_stubs(self):
        (f,) = enumerate_tfpl("01", "01", "01")
        svg = render_svg(f)
        assert svg.startswith("<svg") and svg.count('class="stub"') == 2

    def test_even_and_odd_vertices(self):
        (f,) = enumerate_tfpl("0011", "0011", "0011")
        svg = render_svg(f)
        assert 'fill="black"' in svg and 'fill="white"' in svg

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_puzzle_triangle_count(self, n):
        e = "0" * n + "1" * n
        (p,) = enumerate_puzzles(e, e, e)
        assert render_svg(p).count("<polygon") == (2 * n) ** 2

    def test_deterministic(self):
        f = enumerate_tfpl("001011", "001101", "010101")
        objects = [enumerate_fpl(3)[1], f[0], canonical_orientation(f[0])]
        objects += enumerate_puzzles("001011", "001101", "010101")
        for obj in objects:
            assert render_svg(obj) == render_svg(obj)
        assert "marker-end" in render_svg(canonical_orientation(f[0]))

    def test_rejects_other_objects(self):
        with pytest.raises(TypeError):
            render_svg("0011")


class TestVerification:
    def test_reduced_scope(self):
        report = verify_all(Config(tfpl_max_n=1))
        assert report["pass"]
        assert any("reduced scope" in c["note"] for c in report["checks"])
        json.dumps(report)

    def test_corrupted_rule_table(self):
        frags = dict(default_rule_table().fragments)
        frags[("up", (1, 2, 0))] = (0, None)
        report = verify_all(Config(tfpl_max_n=1), rule_table=LocalRuleTable(frags))
        assert not report["pass"]
        (check,) = report["checks"]
        assert check["note"] == "vertex balance"
        assert "LocalRuleTable invariant 'vertex balance'" in check["failures"][0]

    def test_bijection_report(self):
        result = check_bijection(2)
        assert result.passed and result.checked == 4


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCli:
    def test_lr(self, capsys):
        assert run(capsys, "lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1")[:2] == (0, "2\n")

    def test_dyck(self, capsys):
        code, out, _ = run(capsys, "dyck", "--n", "3")
        assert code == 0 and json.loads(out)["count"] == 5

    def test_fpl(self, capsys):
        code, out, _ = run(capsys, "fpl", "--n", "3")
        assert json.loads(out)["total"] == 7
        code, out, _ = run(capsys, "fpl", "--n", "1", "--pi", "01", "--m", "2")
        assert json.loads(out)["count"] == 1

    def test_tfpl_and_puzzle(self, capsys):
        args = ["--sigma", "00011101", "--tau", "00011011", "--pi", "00110101"]
        _, out, _ = run(capsys, "tfpl", *args)
        t = json.loads(out)["count"]
        _, out, _ = run(capsys, "puzzle", *args)
        assert json.loads(out)["count"] == t == 1

    def test_phi_round_trip(self, capsys, tmp_path):
        _, out, _ = run(capsys, "puzzle", "--sigma", "001011", "--tau", "001101", "--pi", "010101", "--list")
        puzzle = json.loads(out)[0]
        (tmp_path / "p.json").write_text(json.dumps(puzzle))
        code, out, _ = run(capsys, "phi", "--puzzle", str(tmp_path / "p.json"))
        assert code == 0
        (tmp_path / "t.json").write_text(out)
        code, out, _ = run(capsys, "phi-inverse", "--tfpl", str(tmp_path / "t.json"))
        assert code == 0 and json.loads(out) == puzzle

    def test_phi_inverse_unbalanced(self, capsys, tmp_path):
        f = enumerate_tfpl("0011", "0011", "0101")[0]
        (tmp_path / "t.json").write_text(json.dumps(f.to_json()))
        code, _, err = run(capsys, "phi-inverse", "--tfpl", str(tmp_path / "t.json"))
        assert code == 2 and "no puzzle preimage guaranteed" in err

    @pytest.mark.parametrize("identity", ["t", "c", "tc"])
    def test_verify(self, capsys, identity):
        code, out, _ = run(capsys, "verify", "--identity", identity, "--n", "3")
        data = json.loads(out)
        assert code == 0 and data["pass"] and data["identity"] == identity and data["failures"] == []

    def test_verify_api(self, capsys):
        code, out, _ = run(capsys, "verify", "--identity", "api", "--n", "2", "--m", "3", "--k", "0")
        assert code == 0 and json.loads(out)["pass"]

    def test_verify_bijection(self, capsys):
        code, out, _ = run(capsys, "verify-bijection", "--n", "2")
        assert code == 0 and json.loads(out)["pass"]

    def test_census_and_render(self, capsys, tmp_path):
        code, out, _ = run(capsys, "census", "--n", "2", "--out", str(tmp_path / "c"), "--jobs", "1")
        assert code == 0 and json.loads(out)["fpl_total"] == 2
        e = enumerate_puzzles("0011", "0011", "0011")[0]
        (tmp_path / "p.json").write_text(json.dumps(e.to_json()))
        code, out, _ = run(capsys, "render", "--input", str(tmp_path / "p.json"), "--out", str(tmp_path / "svg"))
        svg = Path(json.loads(out)["svg"]).read_text()
        assert code == 0 and svg.count("<polygon") == 16

    def test_config_file_and_flags(self, capsys, tmp_path):
        (tmp_path / "c.json").write_text(json.dumps({"tfpl_max_n": 2}))
        code, _, err = run(capsys, "tfpl", "--config", str(tmp_path / "c.json"), "--sigma", "000111", "--tau", "000111")
        assert code == 2 and "bound" in err
        code, _, _ = run(
            capsys, "tfpl", "--config", str(tmp_path / "c.json"), "--tfpl-max-n", "3", "--sigma", "000111", "--tau", "000111"
        )
        assert code == 0

    def test_missing_arguments(self, capsys):
        code, _, err = run(capsys, "puzzle", "--sigma", "01")
        assert code == 2 and "--tau" in err

    def test_bad_word(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["tfpl", "--sigma", "10", "--tau", "01"])
        assert info.value.code == 2

"""Command-line surface, called through ``main(argv)``."""

import json

import pytest
from loguru import logger

from app.cli.output import csv_text, emit_csv, format_value
from app.core.config import settings
from app.core.constants import CONVERGE_COLUMNS
from app.main import main
from app.posets import chain_poset
from app.posets.io import read_poset


@pytest.fixture(autouse=True)
def drop_log_sinks():
    yield
    logger.remove()


def csv_rows(text: str):
    lines = text.strip().splitlines()
    return [line.split(",") for line in lines]


class TestOutput:
    def test_format_value(self):
        assert format_value(1 / 3) == "0.333333333333"
        assert format_value(0.0) == "0"
        assert format_value(True) == "true"
        assert format_value(7) == "7"

    def test_empty_csv_is_header_only(self):
        assert csv_text([], ("a", "b")) == "a,b\r\n"

    def test_emit_csv_to_file(self, tmp_path):
        path = emit_csv([{"a": 1, "b": 0.5}], ("a", "b"), tmp_path / "out" / "rows.csv")
        assert path.read_bytes() == b"a,b\r\n1,0.5\r\n"


class TestDensityCommand:
    def test_exact(self, capsys, poset_files):
        argv = ["density", "--q", str(poset_files["chain2"])]
        assert main([*argv, "--p", str(poset_files["chain3"])]) == 0
        rows = csv_rows(capsys.readouterr().out)
        assert rows == [["value", "stderr", "samples"], ["0.333333333333", "0", "0"]]

    def test_injective(self, capsys, poset_files):
        chain2 = str(poset_files["chain2"])
        assert main(["density", "--q", chain2, "--p", chain2, "--mode", "inj"]) == 0
        assert csv_rows(capsys.readouterr().out)[1][0] == "0.5"

    def test_require_closed(self, capsys, poset_files):
        argv = ["density", "--q", str(poset_files["chain2"]), "--p", str(poset_files["open3"])]
        assert main(argv) == 0
        capsys.readouterr()
        assert main([*argv, "--require-closed"]) == 1
        assert "posetlim: error:" in capsys.readouterr().err

    def test_missing_file(self, capsys, tmp_path, poset_files):
        argv = ["density", "--q", str(tmp_path / "nope.json")]
        assert main([*argv, "--p", str(poset_files["chain2"])]) == 1
        assert "posetlim: error:" in capsys.readouterr().err


class TestClassifyCommand:
    def test_cycle(self, capsys, digraph_files):
        assert main(["classify", "--digraph", str(digraph_files["c3"])]) == 0
        assert capsys.readouterr().out.startswith("NOT-POSET witness=C3 vertices=")

    def test_open_path(self, capsys, digraph_files):
        main(["classify", "--digraph", str(digraph_files["p2"])])
        assert capsys.readouterr().out.strip() == "NOT-POSET witness=P2 vertices=1,2,3"

    def test_chain(self, capsys, digraph_files):
        main(["classify", "--digraph", str(digraph_files["chain"])])
        assert capsys.readouterr().out.strip() == "POSET"


class TestCheckKernelCommand:
    def test_pass(self, capsys):
        assert main(["check-kernel", "--kernel", "two_point:0.7", "--triples", "2000"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "PASS"
        assert out[1].startswith("triples=2000 w1=0 w2=0")

    def test_fail_exits_with_one(self, capsys):
        assert main(["check-kernel", "--kernel", "constant:0.5", "--triples", "2000"]) == 1
        assert capsys.readouterr().out.startswith("FAIL")

    def test_criterion(self, capsys):
        argv = ["check-kernel", "--kernel", "two_point:0.5", "--triples", "5000", "--criterion"]
        assert main(argv) == 0
        out = capsys.readouterr().out
        assert "statistic,value,stderr,samples" in out
        assert out.strip().splitlines()[-1] == "POSET-LIMIT"

    def test_unknown_kernel(self, capsys):
        assert main(["check-kernel", "--kernel", "nope"]) == 1
        assert "posetlim: error:" in capsys.readouterr().err


class TestKernelDensityCommand:
    def test_exact(self, capsys, poset_files):
        argv = ["kernel-density", "--q", str(poset_files["chain2"]), "--kernel", "two_point:0.4"]
        assert main([*argv, "--exact"]) == 0
        assert csv_rows(capsys.readouterr().out)[1] == ["two_point:0.4", "0.1", "0", "0"]

    def test_exact_needs_step_kernel(self, capsys, poset_files):
        argv = ["kernel-density", "--q", str(poset_files["chain2"]), "--kernel", "total"]
        assert main([*argv, "--exact"]) == 1


class TestSampleCommand:
    def test_writes_posets_and_manifests(self, tmp_path):
        out = tmp_path / "run"
        argv = ["sample", "--kernel", "two_point:0.5", "--n", "6", "--reps", "3"]
        assert main([*argv, "--seed", "11", "--out", str(out)]) == 0
        names = sorted(p.name for p in out.iterdir())
        assert names == [
            "manifest.csv",
            "poset_00000.json",
            "poset_00001.json",
            "poset_00002.json",
            "run.json",
        ]
        assert read_poset(out / "poset_00001.json").n == 6
        rows = csv_rows((out / "manifest.csv").read_text(encoding="utf-8"))
        assert rows[0] == ["rep", "file", "n", "relations", "comparable"]
        assert len(rows) == 4
        run = json.loads((out / "run.json").read_text(encoding="utf-8"))
        assert run["seed"] == 11
        assert set(run["outputs"]) == set(names) - {"run.json"}

    def test_same_seed_same_files(self, tmp_path):
        argv = ["sample", "--kernel", "total", "--n", "9", "--reps", "2", "--seed", "3"]
        main([*argv, "--out", str(tmp_path / "a")])
        main(["--threads", "2", *argv, "--out", str(tmp_path / "b")])
        for name in ("poset_00000.json", "poset_00001.json", "manifest.csv"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
        assert read_poset(tmp_path / "a" / "poset_00000.json").is_total_order()


class TestConvergeCommand:
    ARGV = ["converge", "--kernel", "two_point:0.5", "--sizes", "4,6", "--reps", "2"]

    def test_stdout_csv(self, capsys):
        assert main([*self.ARGV, "--restarts", "1", "--seed", "5"]) == 0
        rows = csv_rows(capsys.readouterr().out)
        assert tuple(rows[0]) == CONVERGE_COLUMNS
        assert [row[:2] for row in rows[1:]] == [["4", "0"], ["4", "1"], ["6", "0"], ["6", "1"]]

    def test_same_seed_same_bytes(self, tmp_path):
        for name in ("a.csv", "b.csv"):
            argv = [*self.ARGV, "--restarts", "1", "--seed", "5", "--csv", str(tmp_path / name)]
            assert main(argv) == 0
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
        assert (tmp_path / "run.json").exists()

    def test_spectral_rows_are_reported(self, capsys, monkeypatch):
        monkeypatch.setattr(settings, "coupling_search_limit", 0)
        assert main([*self.ARGV, "--restarts", "1"]) == 0
        captured = capsys.readouterr()
        assert all(row[-1] == "spectral" for row in csv_rows(captured.out)[1:])
        assert "4 of 4 rows bound delta_upper spectrally" in captured.err

    def test_svg(self, tmp_path):
        pytest.importorskip("matplotlib")
        svg = tmp_path / "series.svg"
        argv = [*self.ARGV, "--restarts", "1", "--csv", str(tmp_path / "s.csv"), "--svg", str(svg)]
        assert main(argv) == 0
        assert svg.read_text(encoding="utf-8").lstrip().startswith("<?xml")


class TestGnpOrderCommand:
    def test_extremes(self, capsys):
        assert main(["gnp-order", "--n", "10", "--p", "0,1"]) == 0
        rows = csv_rows(capsys.readouterr().out)
        assert rows[0] == ["n", "p", "rep", "relations", "t_chain2"]
        assert rows[1] == ["10", "0", "0", "0", "0"]
        assert rows[2] == ["10", "1", "0", "45", "0.45"]

    def test_log_scale(self, capsys):
        assert main(["gnp-order", "--n", "50", "--p", "1,2", "--log-scale", "--reps", "2"]) == 0
        assert len(csv_rows(capsys.readouterr().out)) == 5


class TestThinCommand:
    def test_keep_nothing(self, capsys, poset_files):
        argv = ["thin", "--kernel", "two_point:0.5", "--q", str(poset_files["chain2"])]
        assert main([*argv, "--s", "0", "--samples", "1000"]) == 0
        header, row = csv_rows(capsys.readouterr().out)
        record = dict(zip(header, row))
        assert record["comparable"] == "1"
        assert record["thinned_value"] == "0"
        assert record["predicted_ratio"] == "0"

    def test_poset_file(self, tmp_path, poset_files):
        out = tmp_path / "thinned.json"
        argv = ["thin", "--poset", str(poset_files["chain3"]), "--s", "1", "--out", str(out)]
        assert main(argv) == 0
        assert read_poset(out) == chain_poset(3)

    def test_poset_needs_out(self, capsys, poset_files):
        assert main(["thin", "--poset", str(poset_files["chain3"]), "--s", "0.5"]) == 1
        assert "--out" in capsys.readouterr().err


class TestCutdistCommand:
    def test_constants(self, capsys, step_files):
        argv = ["cutdist", "--w1", str(step_files["const02"]), "--w2", str(step_files["const05"])]
        assert main([*argv, "--restarts", "2"]) == 0
        bounds = json.loads(capsys.readouterr().out)
        assert bounds["lower"] == pytest.approx(0.3)
        assert bounds["upper"] == pytest.approx(0.3)
        assert bounds["coupling"] == [[1.0]]
        assert bounds["method"] == "exact"

    def test_out_file(self, tmp_path, step_files):
        out = tmp_path / "bounds.json"
        argv = ["cutdist", "--w1", str(step_files["two_point"]), "--w2", str(step_files["const05"])]
        assert main([*argv, "--restarts", "2", "--out", str(out)]) == 0
        bounds = json.loads(out.read_text(encoding="utf-8"))
        assert bounds["lower"] <= bounds["upper"] + 1e-9

    def test_signed_values_are_rejected(self, capsys, step_files):
        argv = ["cutdist", "--w1", str(step_files["signed"]), "--w2", str(step_files["const05"])]
        assert main([*argv, "--restarts", "1"]) == 1
        assert "posetlim: error:" in capsys.readouterr().err


class TestUsage:
    def test_missing_command(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2

    def test_bad_threads(self):
        with pytest.raises(SystemExit) as info:
            main(["--threads", "0", "gnp-order", "--n", "5", "--p", "0.5"])
        assert info.value.code == 2

    def test_bad_probability(self):
        with pytest.raises(SystemExit) as info:
            main(["thin", "--kernel", "total", "--s", "1.5"])
        assert info.value.code == 2

    @pytest.mark.parametrize(
        "command",
        [
            "sample",
            "density",
            "kernel-density",
            "check-kernel",
            "classify",
            "cutdist",
            "converge",
            "gnp-order",
            "thin",
        ],
    )
    def test_help(self, capsys, command):
        with pytest.raises(SystemExit) as info:
            main([command, "--help"])
        assert info.value.code == 0
        assert f"usage: posetlim {command}" in capsys.readouterr().out

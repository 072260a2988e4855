import json
import os

import pytest

import boolalg
import braid
import bring_euler
import incidence
import jordan
import matrix_series
import triple_trig
import weak_bring
from run_checks import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


def test_matrix_report_is_reproducible(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    args = ["matrix", "--random", "50", "--seed", "1", "--json", "--no-progress"]
    assert main(args + ["--output", str(first)]) == EXIT_OK
    assert main(args + ["--output", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    document = json.loads(first.read_text())
    assert document["ok"] is True
    assert document["suites"][0]["seeds"] == {"matrix": 1}


def test_text_report(capsys):
    assert main(["matrix", "--random", "20", "--no-progress"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("== matrix")
    assert "[pass] matrix_random_power_sum  cases=20" in out
    assert out.rstrip().endswith("-> OK")


def test_matrix_input_file(samples_dir, capsys):
    assert main(["matrix", "--input", os.path.join(samples_dir, "matrices.txt")]) == EXIT_OK
    assert "matrix_input[0004]" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["boolean", "--atoms", "17"],
    ["frobnicate"],
    ["curve", "--emit-plot-data", "out.csv"],
    ["curve", "--shape", "polyline"],
    ["matrix", "--input", "no-such-file.txt"],
    ["incidence", "--trials", "0"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_polyline_curve(samples_dir, tmp_path):
    out = tmp_path / "curve.json"
    argv = ["curve", "--shape", "polyline", "--polyline", os.path.join(samples_dir, "square.csv"), "--json",
            "--output", str(out)]
    assert main(argv) == EXIT_OK
    names = [c["name"] for c in json.loads(out.read_text())["suites"][0]["checks"]]
    assert "curve_polyline[4 points]_pi_bounds" in names


def test_braid_map_import(samples_dir, capsys):
    assert main(["braid", "--import-map", os.path.join(samples_dir, "swap_map.txt")]) == EXIT_OK
    assert "braid_imported_map[m=3]" in capsys.readouterr().out


def test_braid_map_that_fails(tmp_path, capsys):
    path = tmp_path / "const.txt"
    path.write_text("2\n0 0 -> 0 1\n0 1 -> 0 1\n1 0 -> 0 1\n1 1 -> 0 1\n")
    assert main(["braid", "--atoms", "1", "--import-map", str(path)]) == EXIT_FAILED
    assert "FAILED" in capsys.readouterr().out


def test_boolean_table_import(samples_dir, capsys):
    argv = ["boolean", "--atoms", "1", "--import-table", os.path.join(samples_dir, "z4_ring.txt")]
    assert main(argv) == EXIT_OK
    out = capsys.readouterr().out
    assert "table[z4_ring.txt]:axiom_01" in out
    assert "[refuted-as-printed] pair_exp_equality_as_printed[n=1]" in out


def test_incidence_small(tmp_path):
    cert = tmp_path / "cert.json"
    argv = ["incidence", "--trials", "3", "--seed", "5", "--no-progress", "--counterexample-file", str(cert)]
    assert main(argv) == EXIT_OK
    assert not cert.exists()


def test_plot_data_for_one_shape(tmp_path):
    out = tmp_path / "sweep.csv"
    argv = ["curve", "--shape", "circle", "--r", "2", "--samples", "1024", "--emit-plot-data", str(out),
            "--output", str(tmp_path / "report.txt")]
    assert main(argv) == EXIT_OK
    assert out.exists()
    assert (tmp_path / "sweep_points.csv").exists()


def test_four_atoms_skip_only_the_pair_checks(capsys):
    assert main(["boolean", "--atoms", "4", "--no-progress"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "boolean_algebra_laws[n=4]" in out
    assert "triple_exp_cos_addition[n=4]" in out
    assert "pair_ring[n=4]" not in out
    assert "pair_exp_homomorphism[n=4]" not in out


def test_full_report_is_reproducible(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["all", "--json", "--no-progress", "--output", str(first)]) == EXIT_OK
    assert main(["all", "--json", "--no-progress", "--output", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    suites = [s["suite"] for s in json.loads(first.read_text())["suites"]]
    assert suites == ["boolean", "braid", "curve", "incidence", "matrix"]


@pytest.mark.parametrize("module", [boolalg, triple_trig, weak_bring, bring_euler, braid, matrix_series, jordan,
                                    incidence], ids=lambda m: m.__name__)
def test_module_docstrings_show_usage(module):
    usage = module.__doc__.split("Usage:", 1)[1]
    assert "python run_checks.py" in usage

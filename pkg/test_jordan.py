import math
import os

import numpy as np
import pandas as pd
import pytest

from jordan import (CurveError, CurveSpec, UnsupportedShapeError, analyze, arc_length, brute_force_diameter,
                    chord_sweep, convergence, curve_checks, default_shapes, ellipse_perimeter,
                    ellipse_perimeter_ellipe, emit_plot_data, max_diameter, read_polyline, region_centroid_area,
                    sample, solve_quadratic, suite)
from reports import PASS, REFUTED

U_SHAPE = [(0, 0), (3, 0), (3, 3), (2, 3), (2, 1), (1, 1), (1, 3), (0, 3)]


def test_circle():
    m, c = analyze(CurveSpec.circle(1.0, 4096))
    assert abs(c.ratio_LD - math.pi) < 1e-5
    assert abs(c.ratio_Ld - math.pi) < 1e-5
    assert abs(m.min_central_chord * m.max_diameter - m.area - (4 - math.pi)) < 1e-4
    assert c.quadratic_discriminant < 0
    assert c.quadratic_roots == ()
    assert c.equality_LD and c.equality_Ld


def test_ellipse():
    m, c = analyze(CurveSpec.ellipse(2.0, 1.0, 4096))
    assert abs(m.length - ellipse_perimeter_ellipe(2.0, 1.0)) < 1e-4
    assert c.margin_lower > 0.5
    assert c.margin_upper > 0.5
    assert m.max_diameter == pytest.approx(4.0, abs=1e-9)
    assert m.min_central_chord == pytest.approx(2.0, abs=1e-6)
    assert m.min_central_chord * m.max_diameter > 2 * math.pi


def test_reuleaux_constant_width():
    m, c = analyze(CurveSpec.reuleaux(1.0, 4096))
    assert abs(c.ratio_LD - math.pi) <= 1e-4
    assert m.max_diameter == pytest.approx(1.0, abs=1e-9)
    assert c.lower_ok or abs(c.margin_lower) < 1e-6


def test_square():
    m, c = analyze(CurveSpec.square(2.0, 4096))
    assert m.length == pytest.approx(8.0)
    assert m.max_diameter == pytest.approx(2 * math.sqrt(2))
    assert m.min_central_chord == pytest.approx(2.0, abs=1e-9)
    assert m.area == pytest.approx(4.0)
    assert c.lower_ok and c.upper_ok and c.chord_area_ok


def test_regular_polygon_centroid_at_origin():
    points = sample(CurveSpec.regular_polygon(6, 1.0, 600))
    centroid, area = region_centroid_area(points)
    assert np.allclose(centroid, 0.0, atol=1e-12)
    assert area == pytest.approx(3 * math.sqrt(3) / 2)


@pytest.mark.parametrize("spec", [CurveSpec.circle(1.0, 256), CurveSpec.ellipse(3.0, 1.0, 256),
                                  CurveSpec.reuleaux(2.0, 255), CurveSpec.regular_polygon(5, 1.0, 250)],
                         ids=lambda s: s.label)
def test_calipers_match_brute_force(spec):
    points = sample(spec)
    assert max_diameter(points) == brute_force_diameter(points)


def test_calipers_random_convex_polygons():
    rng = np.random.default_rng(3)
    for _ in range(100):
        t = np.sort(rng.uniform(0, 2 * np.pi, 40))
        a, b, phi = rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0), rng.uniform(0, np.pi)
        x, y = a * np.cos(t), b * np.sin(t)
        points = np.column_stack([x * np.cos(phi) - y * np.sin(phi), x * np.sin(phi) + y * np.cos(phi)])
        assert max_diameter(points) == brute_force_diameter(points)


def test_perimeter_oracles_agree():
    for a, b in [(2.0, 1.0), (1.0, 1.0), (5.0, 0.1)]:
        assert ellipse_perimeter(a, b) == pytest.approx(ellipse_perimeter_ellipe(a, b), rel=1e-12)
    assert ellipse_perimeter(1.0, 1.0) == pytest.approx(2 * math.pi)
    assert ellipse_perimeter(2.0, 1.0) == pytest.approx(9.6884482205, abs=1e-9)


def test_quadratic_roots_satisfy_vieta():
    disc, roots, ok = solve_quadratic(8.0, 3.0)
    assert disc == 4.0
    assert roots == pytest.approx((3.0, 1.0))
    assert ok


def test_convergence_small():
    change = convergence(CurveSpec.ellipse(2.0, 1.0, 1024))
    assert change["length"] < 1e-3 and change["area"] < 1e-3


def test_chord_sweep_on_circle():
    points = sample(CurveSpec.circle(2.0, 1024))
    theta, chords = chord_sweep(points, (0.0, 0.0), 64)
    assert len(theta) == 64
    assert np.allclose(chords, 4.0, atol=1e-4)


def test_default_suite_asserted_checks_pass():
    reports = suite(default_shapes(4096))
    by_name = {r.name: r for r in reports}
    assert all(r.acceptable for r in reports), [r.counterexample for r in reports if not r.acceptable]
    probe = by_name["curve_reuleaux[width=1]_equality_probe_LD"]
    assert probe.status == REFUTED
    assert not probe.asserted
    assert by_name["curve_circle[r=1]_equality_probe_Ld"].status == PASS
    assert by_name["curve_ellipse[a=2,b=1]_perimeter_oracle"].status == PASS
    assert not by_name["curve_square[side=2]_quadratic"].asserted


def test_polyline_checks_are_reported_not_asserted(samples_dir):
    spec = read_polyline(os.path.join(samples_dir, "square.csv"))
    assert spec.samples == 4
    assert spec.label == "polyline[4 points]"
    reports = curve_checks(spec)
    assert not any(r.name.endswith("_convergence") for r in reports)
    bounds = next(r for r in reports if r.name.endswith("_pi_bounds"))
    assert bounds.passed and not bounds.asserted
    assert next(r for r in reports if r.name.endswith("_diameter_oracle")).asserted


def test_closing_point_is_dropped():
    spec = CurveSpec.polyline([(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)])
    assert spec.samples == 4
    assert arc_length(sample(spec)) == pytest.approx(4.0)


@pytest.mark.parametrize("points", [
    [(0, 0), (1, 1), (1, 0), (0, 1)],
    [(0, 0), (1, 0)],
    [(0, 0), (1, 0), (1, 0), (0, 1)],
    [(0, 0), (1, 0), (float("nan"), 1)],
])
def test_invalid_polylines(points):
    with pytest.raises(CurveError):
        CurveSpec.polyline(points)


def test_non_star_shaped_polyline():
    with pytest.raises(UnsupportedShapeError):
        analyze(CurveSpec.polyline(U_SHAPE))


@pytest.mark.parametrize("build", [lambda: CurveSpec.circle(-1.0), lambda: CurveSpec.ellipse(2.0, 0.0),
                                   lambda: CurveSpec.regular_polygon(2), lambda: CurveSpec.circle(1.0, 10),
                                   lambda: CurveSpec("spiral")])
def test_invalid_parameters(build):
    with pytest.raises(CurveError):
        build()


def test_emit_plot_data(tmp_path):
    path = tmp_path / "chords.csv"
    chords_path, points_path = emit_plot_data(CurveSpec.ellipse(2.0, 1.0, 512), str(path))
    chords = pd.read_csv(chords_path)
    points = pd.read_csv(points_path)
    assert list(chords.columns) == ["theta", "chord"]
    assert list(points.columns) == ["t", "x", "y"]
    assert len(points) == 512
    assert points_path.endswith("chords_points.csv")


def test_polyline_csv_errors(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("x,y\n0,0\n1,a\n0,1\n")
    with pytest.raises(CurveError):
        read_polyline(path)
    with pytest.raises(CurveError):
        read_polyline(tmp_path / "missing.csv")

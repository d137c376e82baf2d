"""Nodal-set analysis: depth, critical points, domain counts, level sets."""

from fractions import Fraction

import numpy as np
import pytest

from harmonic_ratios import (
    Polynomial,
    Region,
    TruncatedSeries,
    catalog_get,
    critical_set_sample,
    depth_of_zero,
    nodal_domain_count,
    rotate,
    zero_set_sample,
)
from harmonic_ratios.nodal import NotAZero, write_points_csv, write_svg
from harmonic_ratios.rotation import random_rotation

X = Polynomial.variable(2, 0)
Y = Polynomial.variable(2, 1)
PAPER_H = catalog_get("paperH").polynomial


class TestDepth:
    def test_saddle_origin(self):
        assert depth_of_zero(X * X - Y * Y, (0, 0)) == 2

    def test_cubic_3d_origin(self):
        assert depth_of_zero(PAPER_H, (0, 0, 0)) == 2

    def test_rezk_origin(self):
        assert depth_of_zero(catalog_get("rezk:3").polynomial, (0, 0)) == 3

    def test_simple_zero(self):
        assert depth_of_zero(X * X - Y * Y, (1, 1)) == 1

    def test_rational_point(self):
        p = (X - Polynomial.constant(2, Fraction(1, 3))) ** 2
        assert depth_of_zero(p, (Fraction(1, 3), 7)) == 2

    def test_non_zero_rejected(self):
        with pytest.raises(NotAZero):
            depth_of_zero(X * X - Y * Y, (1, 0))

    def test_series_input(self):
        s = TruncatedSeries.from_polynomial(X * Y, 4)
        assert depth_of_zero(s, (0, 0)) == 2

    def test_invariant_under_exact_rotation(self):
        rng = np.random.default_rng(17)
        for _ in range(5):
            rot = random_rotation(3, rng)
            assert depth_of_zero(rotate(PAPER_H, rot), (0, 0, 0)) == 2


class TestCriticalSet:
    def test_cubic_3d_only_origin(self):
        report = critical_set_sample(PAPER_H, Region.ball((0, 0, 0), 1.0), grid=16)
        assert len(report.critical_points) == 1
        assert np.linalg.norm(report.critical_points[0]) < 1e-8
        assert report.depths[0]["depth"] == 2

    def test_saddle_origin(self):
        report = critical_set_sample(X * X - Y * Y, Region.ball((0, 0), 1.0), grid=16)
        assert len(report.critical_points) == 1
        assert np.linalg.norm(report.critical_points[0]) < 1e-8

    def test_no_critical_points(self):
        report = critical_set_sample(X, Region.ball((1, 1), 0.5), grid=8)
        assert report.critical_points == []

    def test_classification_conservative(self):
        report = critical_set_sample(PAPER_H, Region.ball((0, 0, 0), 1.0), grid=16)
        for c in report.classifications:
            assert c["label"] in ("good", "unclassified")


class TestNodalDomainCount:
    def test_saddle_has_four(self):
        assert nodal_domain_count(X * X - Y * Y, Region.ball((0, 0), 1.0), 128) == 4

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_sector_counts(self, k):
        w = catalog_get(f"rezk:{k}").polynomial
        assert nodal_domain_count(w, Region.ball((0, 0), 1.0), 128) == 2 * k

    def test_cubic_3d_has_two(self):
        assert nodal_domain_count(PAPER_H, Region.ball((0, 0, 0), 0.5), 96) == 2

    def test_stable_under_refinement(self):
        w = catalog_get("rezk:3").polynomial
        counts = {nodal_domain_count(w, Region.ball((0, 0), 1.0), res)
                  for res in (96, 192)}
        assert counts == {6}

    def test_box_region(self):
        assert nodal_domain_count(X, Region.box((-1, -1), (1, 1)), 64) == 2


class TestZeroSetSample:
    def test_saddle_level_set(self):
        points, segments = zero_set_sample(
            X * X - Y * Y, Region.box((-1, -1), (1, 1)), 64
        )
        assert points and segments
        pts = np.array(points)
        assert np.allclose(np.abs(pts[:, 0]), np.abs(pts[:, 1]), atol=1e-10)

    def test_points_are_zeros(self):
        w = catalog_get("rezk:3").polynomial
        points, _ = zero_set_sample(w, Region.box((-1, -1), (1, 1)), 48)
        for p in points:
            assert abs(w.evaluate_float(p)) < 1e-9

    def test_3d_point_cloud(self):
        points, segments = zero_set_sample(PAPER_H, Region.ball((0, 0, 0), 0.5), 12)
        assert segments == []
        assert points
        for p in points:
            assert abs(PAPER_H.evaluate_float(p)) < 1e-9


class TestArtifacts:
    def test_svg(self, tmp_path):
        points, segments = zero_set_sample(X * Y, Region.box((-1, -1), (1, 1)), 32)
        out = tmp_path / "nodal.svg"
        write_svg(points, segments, str(out))
        text = out.read_text()
        assert text.startswith("<svg") and "<line" in text

    def test_csv(self, tmp_path):
        out = tmp_path / "pts.csv"
        write_points_csv([[0.25, -0.5]], str(out))
        assert out.read_text().splitlines() == ["x1,x2", "0.25,-0.5"]

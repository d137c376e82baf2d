"""Region geometry and deterministic sampling."""

import numpy as np
import pytest

from harmonic_ratios import Region


class TestConstruction:
    def test_bad_radius(self):
        with pytest.raises(ValueError):
            Region.ball((0, 0), 0.0)

    def test_bad_box(self):
        with pytest.raises(ValueError):
            Region.box((0, 1), (1, 0))

    def test_bad_annulus(self):
        with pytest.raises(ValueError):
            Region.annulus((0, 0), 2.0, 1.0)


class TestContains:
    def test_ball(self):
        r = Region.ball((0, 0), 1.0)
        inside = r.contains(np.array([[0.5, 0.5], [2.0, 0.0]]))
        assert list(inside) == [True, False]

    def test_box(self):
        r = Region.box((-1, -1), (1, 1))
        assert bool(r.contains(np.array([[1.0, 1.0]]))[0])
        assert not bool(r.contains(np.array([[1.0, 1.1]]))[0])

    def test_annulus_excludes_hole(self):
        r = Region.annulus((0, 0), 0.5, 1.0)
        flags = r.contains(np.array([[0.0, 0.0], [0.75, 0.0]]))
        assert list(flags) == [False, True]


class TestSampling:
    def test_interior_points_inside(self):
        rng = np.random.default_rng(0)
        r = Region.ball((1, 2), 0.5)
        pts = r.sample_interior(200, rng)
        assert pts.shape == (200, 2)
        assert np.all(r.contains(pts))

    def test_interior_deterministic_given_seed(self):
        r = Region.box((-1, -1), (1, 1))
        a = r.sample_interior(50, np.random.default_rng(3))
        b = r.sample_interior(50, np.random.default_rng(3))
        assert np.array_equal(a, b)

    def test_boundary_on_circle(self):
        r = Region.ball((0, 0), 2.0)
        pts = r.sample_boundary(64)
        assert np.allclose(np.linalg.norm(pts, axis=1), 2.0)
        # multiples of 4 include the axis extremes
        assert any(np.allclose(p, [2.0, 0.0]) for p in pts)
        assert any(np.allclose(p, [0.0, 2.0]) for p in pts)

    def test_boundary_on_sphere(self):
        r = Region.ball((0, 0, 0), 1.0)
        pts = r.sample_boundary(128)
        assert np.allclose(np.linalg.norm(pts, axis=1), 1.0)

    def test_box_boundary(self):
        r = Region.box((0, 0), (1, 2))
        pts = r.sample_boundary(40)
        on_edge = (
            np.isclose(pts[:, 0], 0) | np.isclose(pts[:, 0], 1)
            | np.isclose(pts[:, 1], 0) | np.isclose(pts[:, 1], 2)
        )
        assert np.all(on_edge)

    def test_sphere_has_no_interior(self):
        with pytest.raises(ValueError):
            Region.sphere((0, 0), 1.0).sample_interior(5, np.random.default_rng(0))


class TestGrids:
    def test_grid_axes_cell_centers(self):
        axes, h = Region.box((0, 0), (1, 1)).grid_axes(4)
        assert h == 0.25
        assert np.allclose(axes[0], [0.125, 0.375, 0.625, 0.875])

    def test_grid_mask(self):
        axes, mask, h = Region.ball((0, 0), 1.0).grid(8)
        assert mask.shape == (8, 8)
        assert mask[4, 4] and not mask[0, 0]

"""Sampling regions for the numeric verification layer.

Regions are float-parametrized (the numeric checks are approximate by
design).  Sampling is deterministic given a numpy Generator; boundary
sampling of disks and boxes is a uniform deterministic sweep that includes
the axis-extreme points, so monotone quantities attain their extremes on the
sampled boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class Region:
    kind: str  # ball | box | sphere | annulus
    center: Tuple[float, ...] = ()
    radius: float = 0.0
    inner: float = 0.0
    lo: Tuple[float, ...] = ()
    hi: Tuple[float, ...] = ()

    @staticmethod
    def ball(center: Sequence[float], radius: float) -> "Region":
        if radius <= 0:
            raise ValueError("ball radius must be positive")
        return Region(kind="ball", center=tuple(map(float, center)), radius=float(radius))

    @staticmethod
    def box(lo: Sequence[float], hi: Sequence[float]) -> "Region":
        lo, hi = tuple(map(float, lo)), tuple(map(float, hi))
        if len(lo) != len(hi) or any(a > b for a, b in zip(lo, hi)):
            raise ValueError("box needs lo <= hi per axis")
        return Region(kind="box", lo=lo, hi=hi)

    @staticmethod
    def sphere(center: Sequence[float], radius: float) -> "Region":
        if radius <= 0:
            raise ValueError("sphere radius must be positive")
        return Region(kind="sphere", center=tuple(map(float, center)), radius=float(radius))

    @staticmethod
    def annulus(center: Sequence[float], inner: float, outer: float) -> "Region":
        if not 0 <= inner < outer:
            raise ValueError("annulus needs 0 <= inner < outer")
        return Region(
            kind="annulus",
            center=tuple(map(float, center)),
            radius=float(outer),
            inner=float(inner),
        )

    @property
    def dim(self) -> int:
        return len(self.center) if self.kind != "box" else len(self.lo)

    def bounding_box(self) -> Tuple[np.ndarray, np.ndarray]:
        if self.kind == "box":
            return np.array(self.lo), np.array(self.hi)
        c = np.array(self.center)
        return c - self.radius, c + self.radius

    def contains(self, points: np.ndarray) -> np.ndarray:
        """Boolean mask for an (m, dim) array of points."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if self.kind == "box":
            return np.all((pts >= self.lo) & (pts <= self.hi), axis=1)
        d = np.linalg.norm(pts - np.array(self.center), axis=1)
        if self.kind == "ball":
            return d <= self.radius
        if self.kind == "annulus":
            return (d > self.inner) & (d <= self.radius)
        # sphere surface: a measure-zero set; use a tight relative band
        return np.abs(d - self.radius) <= 1e-12 * max(self.radius, 1.0)

    # -- sampling ------------------------------------------------------------

    def sample_interior(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """Uniform interior samples, shape (count, dim)."""
        if self.kind == "sphere":
            raise ValueError("a sphere surface has no interior")
        lo, hi = self.bounding_box()
        if np.all(lo == hi):
            return np.tile(lo, (count, 1))
        out: List[np.ndarray] = []
        need = count
        while need > 0:
            batch = rng.uniform(lo, hi, size=(max(need * 2, 16), self.dim))
            ok = batch[self.contains(batch)]
            out.append(ok[:need])
            need -= len(ok[:need])
        return np.vstack(out)

    def sample_boundary(self, count: int) -> np.ndarray:
        """Deterministic boundary sweep, shape (count, dim).

        Disks: uniform angles starting at 0 (includes the four axis points
        whenever count is a multiple of 4).  Boxes: corners plus a uniform
        walk of the edges (2D) or faces grid (3D).
        """
        if self.kind in ("ball", "annulus", "sphere"):
            if self.dim == 2:
                theta = np.linspace(0.0, 2 * np.pi, count, endpoint=False)
                c = np.array(self.center)
                pts = c + self.radius * np.column_stack([np.cos(theta), np.sin(theta)])
                if self.kind == "annulus" and self.inner > 0:
                    inner_pts = c + self.inner * np.column_stack(
                        [np.cos(theta), np.sin(theta)]
                    )
                    pts = np.vstack([pts, inner_pts])
                return pts
            if self.dim == 3:
                # Fibonacci sphere: deterministic, near-uniform
                i = np.arange(count)
                phi = np.pi * (3.0 - np.sqrt(5.0)) * i
                z = 1.0 - 2.0 * (i + 0.5) / count
                rho = np.sqrt(np.maximum(0.0, 1.0 - z * z))
                unit = np.column_stack([rho * np.cos(phi), rho * np.sin(phi), z])
                return np.array(self.center) + self.radius * unit
            raise ValueError(f"boundary sampling unsupported in dim {self.dim}")
        if self.kind == "box":
            if self.dim == 2:
                (x0, y0), (x1, y1) = self.lo, self.hi
                per = max(count // 4, 1)
                t = np.linspace(0.0, 1.0, per, endpoint=False)
                bottom = np.column_stack([x0 + t * (x1 - x0), np.full(per, y0)])
                right = np.column_stack([np.full(per, x1), y0 + t * (y1 - y0)])
                top = np.column_stack([x1 - t * (x1 - x0), np.full(per, y1)])
                left = np.column_stack([np.full(per, x0), y1 - t * (y1 - y0)])
                return np.vstack([bottom, right, top, left])
            raise ValueError("box boundary sampling implemented for dim 2")
        raise ValueError(f"unknown region kind {self.kind}")

    def grid_axes(self, resolution: int) -> Tuple[List[np.ndarray], float]:
        """Per-axis cell-center coordinates and the (max) cell width."""
        lo, hi = self.bounding_box()
        h = float(np.max(hi - lo)) / resolution
        axes = [
            lo[i] + (np.arange(resolution) + 0.5) * (hi[i] - lo[i]) / resolution
            for i in range(self.dim)
        ]
        return axes, h

    def grid(self, resolution: int) -> Tuple[List[np.ndarray], np.ndarray, float]:
        """Cell-center grid of the bounding box.

        Returns (per-axis center coordinates, inside-region mask over the full
        meshgrid with 'ij' indexing, cell width).
        """
        lo, hi = self.bounding_box()
        h = float(np.max(hi - lo)) / resolution
        axes = [
            lo[i] + (np.arange(resolution) + 0.5) * (hi[i] - lo[i]) / resolution
            for i in range(self.dim)
        ]
        mesh = np.meshgrid(*axes, indexing="ij")
        pts = np.column_stack([m.ravel() for m in mesh])
        mask = self.contains(pts).reshape(mesh[0].shape)
        return axes, mask, h

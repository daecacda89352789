"""Exact k-nearest-neighbor distances and fixed-radius counting.

Queries run against a brute-force scan (numba-accelerated when available);
there is no approximate path. The query point is always excluded from its
own neighbor set. Strict counting uses '<' except at radius exactly 0,
where it falls back to counting coincident points so that datasets with
repeated samples stay estimable.
"""

import numpy as np

from . import kernels
from .geometry import Norm

__all__ = ["PointIndex"]


def _as_points(points):
    pts = np.ascontiguousarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise ValueError("points must be a nonempty N x d array")
    return pts


class PointIndex:
    """Immutable view over a point cloud with exact neighbor queries."""

    def __init__(self, points, norm=Norm.MAX):
        self.points = _as_points(points)
        self.norm = norm
        self.n, self.d = self.points.shape

    def _row_distances(self, i):
        pts = self.points
        acc = np.abs(pts[:, 0] - pts[i, 0])
        if self.norm is Norm.MAX:
            for c in range(1, self.d):
                np.maximum(acc, np.abs(pts[:, c] - pts[i, c]), out=acc)
        else:
            acc = acc * acc
            for c in range(1, self.d):
                diff = pts[:, c] - pts[i, c]
                acc += diff * diff
            acc = np.sqrt(acc)
        acc[i] = np.inf
        return acc

    def kth_distance(self, i, k):
        """Distance from sample i to its k-th nearest neighbor (ties share the value)."""
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"k must be in [1, N-1] = [1, {self.n - 1}], got {k}")
        dist = self._row_distances(i)
        return float(np.partition(dist, k - 1)[k - 1])

    def count_within(self, i, radius, weights=None, strict=True):
        """Neighbors of i within radius: sum of 1 or of weights over qualifying j.

        Strict counting at radius 0 counts points at distance exactly 0
        (duplicate-point fallback).
        """
        if radius < 0:
            raise ValueError(f"radius must be >= 0, got {radius}")
        dist = self._row_distances(i)
        if strict and radius > 0.0:
            mask = dist < radius
        else:
            mask = dist <= radius
        if weights is None:
            return int(np.count_nonzero(mask))
        w = np.asarray(weights, dtype=np.float64)
        contrib = np.where(mask, w, 0.0)
        # sequential j-order sum, matching the batch kernels
        return float(np.cumsum(contrib)[-1])

    # Batch forms used by the estimators (same contracts, all samples at once).

    def kth_distances(self, k):
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"k must be in [1, N-1] = [1, {self.n - 1}], got {k}")
        return kernels.kth_distances(self.points, k, self.norm.code)

    def counts_within(self, radii, weights=None, strict=True):
        radii = np.ascontiguousarray(radii, dtype=np.float64)
        if radii.shape != (self.n,):
            raise ValueError("radii must have one entry per sample")
        if weights is None:
            return kernels.count_within(self.points, radii, strict, self.norm.code)
        w = np.ascontiguousarray(weights, dtype=np.float64)
        if w.shape != (self.n,):
            raise ValueError("weights must have one entry per sample")
        return kernels.weighted_count_within(
            self.points, radii, w, strict, self.norm.code
        )

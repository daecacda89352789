"""Gaussian product-kernel density estimation for the importance weights."""

import math

import numpy as np

from . import kernels

__all__ = ["bandwidth_rule", "kde_bandwidth", "KdeModel", "kde_density"]


def kde_bandwidth(n_samples, d):
    """Bandwidth 0.5 * N^(-1/(2d+3)) for a KDE over d dimensions."""
    if n_samples < 2:
        raise ValueError(f"need at least 2 samples, got {n_samples}")
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    return 0.5 * float(n_samples) ** (-1.0 / (2.0 * d + 3.0))


def bandwidth_rule(n_samples, d_x, d_z):
    """Default bandwidth for the joint (X,Z) density estimate."""
    if d_x < 1 or d_z < 1:
        raise ValueError("d_x and d_z must be positive")
    return kde_bandwidth(n_samples, d_x + d_z)


def _kde_constants(h, d, m):
    inv_two_h2 = 1.0 / (2.0 * h * h)
    scale = 1.0 / (m * h**d * (2.0 * math.pi) ** (d / 2.0))
    return inv_two_h2, scale


class KdeModel:
    """Gaussian product-kernel KDE over an N x d sample matrix.

    Samples are stored in a canonical (lexicographic) order so density
    evaluations are bit-identical under any permutation of the input rows.
    """

    kernel = "gaussian-product"

    def __init__(self, samples, bandwidth):
        samples = np.ascontiguousarray(samples, dtype=np.float64)
        if samples.ndim == 1:
            samples = samples.reshape(-1, 1)
        if samples.ndim != 2 or samples.shape[0] < 2:
            raise ValueError("KDE needs an N x d sample matrix with N >= 2")
        if not bandwidth > 0:
            raise ValueError(f"bandwidth must be positive, got {bandwidth}")
        order = np.lexsort(samples.T[::-1])
        self.samples = np.ascontiguousarray(samples[order])
        self.h = float(bandwidth)
        self.n, self.d = self.samples.shape

    def _constants(self, m):
        return _kde_constants(self.h, self.d, m)

    def density(self, queries):
        """Density at each query row: (1/(m h^d)) sum_j K((q - s_j)/h)."""
        q = np.ascontiguousarray(queries, dtype=np.float64)
        single = q.ndim == 1
        if single:
            q = q.reshape(1, -1)
        if q.shape[1] != self.d:
            raise ValueError(f"queries have dim {q.shape[1]}, model has {self.d}")
        inv_two_h2, scale = self._constants(self.n)
        out = kernels.kde_gaussian(self.samples, q, inv_two_h2, scale)
        return float(out[0]) if single else out


def kde_density(model, query, leave_out=None):
    """Evaluate a KdeModel at one point, optionally excluding one sample.

    ``leave_out`` indexes the model's canonical sample order. Raises if the
    result underflows to zero (query impossibly far from every sample).
    """
    if leave_out is None:
        val = model.density(np.asarray(query, dtype=np.float64))
    else:
        if not 0 <= leave_out < model.n:
            raise ValueError(f"leave_out out of range [0, {model.n})")
        reduced = np.delete(model.samples, leave_out, axis=0)
        q = np.asarray(query, dtype=np.float64).reshape(1, -1)
        inv_two_h2, _ = model._constants(model.n)
        _, scale = KdeModel(reduced, model.h)._constants(model.n - 1)
        val = float(kernels.kde_gaussian(np.ascontiguousarray(reduced), q, inv_two_h2, scale)[0])
    if val <= 0.0:
        raise FloatingPointError(
            "kernel density underflowed to zero; query is too far from the samples"
        )
    return val

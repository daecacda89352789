"""Pure-numpy brute-force kernels (fallback backend).

Arithmetic is arranged to mirror the numba backend exactly: distances
accumulate over dimensions in index order, and weighted sums accumulate
over sample index j in ascending order (via cumsum, which is sequential
by construction). Unweighted counts and k-th distances are bit-identical
to the numba backend; weighted counts and KDE sums match it to the last
ulp of the shared sequential order.
"""

import numpy as np

# Query rows are processed in chunks to bound the distance-matrix memory.
_CHUNK_TARGET = 4_000_000


def _chunk_rows(n_cols):
    return max(1, _CHUNK_TARGET // max(1, n_cols))


def _distances(block, points, norm_code):
    """Distance matrix between a block of query rows and all points."""
    d = points.shape[1]
    if norm_code == 0:
        acc = np.abs(block[:, 0, None] - points[None, :, 0])
        for c in range(1, d):
            np.maximum(acc, np.abs(block[:, c, None] - points[None, :, c]), out=acc)
        return acc
    diff = block[:, 0, None] - points[None, :, 0]
    acc = diff * diff
    for c in range(1, d):
        diff = block[:, c, None] - points[None, :, c]
        acc += diff * diff
    return np.sqrt(acc)


def kth_distances(points, k, norm_code):
    """Distance from each point to its k-th nearest neighbor (self excluded)."""
    n = points.shape[0]
    out = np.empty(n)
    step = _chunk_rows(n)
    for start in range(0, n, step):
        stop = min(start + step, n)
        dist = _distances(points[start:stop], points, norm_code)
        dist[np.arange(start, stop) - start, np.arange(start, stop)] = np.inf
        out[start:stop] = np.partition(dist, k - 1, axis=1)[:, k - 1]
    return out


def count_within(points, radii, strict, norm_code):
    """Per-point neighbor counts within per-point radii.

    Strict counting uses '<'; at radius exactly 0 it falls back to '<=',
    i.e. counting coincident points.
    """
    n = points.shape[0]
    out = np.empty(n, dtype=np.int64)
    use_le = np.full(n, True) if not strict else (radii == 0.0)
    step = _chunk_rows(n)
    for start in range(0, n, step):
        stop = min(start + step, n)
        dist = _distances(points[start:stop], points, norm_code)
        dist[np.arange(start, stop) - start, np.arange(start, stop)] = np.inf
        r = radii[start:stop, None]
        mask = np.where(use_le[start:stop, None], dist <= r, dist < r)
        out[start:stop] = mask.sum(axis=1)
    return out


def weighted_count_within(points, radii, weights, strict, norm_code):
    """Per-point weighted neighbor sums within per-point radii (same tie rules)."""
    n = points.shape[0]
    out = np.empty(n)
    use_le = np.full(n, True) if not strict else (radii == 0.0)
    step = _chunk_rows(n)
    for start in range(0, n, step):
        stop = min(start + step, n)
        dist = _distances(points[start:stop], points, norm_code)
        dist[np.arange(start, stop) - start, np.arange(start, stop)] = np.inf
        r = radii[start:stop, None]
        mask = np.where(use_le[start:stop, None], dist <= r, dist < r)
        contrib = np.where(mask, weights[None, :], 0.0)
        # cumsum keeps the j-ascending sequential summation of the numba path
        out[start:stop] = np.cumsum(contrib, axis=1)[:, -1]
    return out


def kde_gaussian(samples, queries, inv_two_h2, scale):
    """Gaussian product-kernel density: scale * sum_j exp(-||q - s_j||^2 * inv_two_h2)."""
    nq = queries.shape[0]
    d = samples.shape[1]
    out = np.empty(nq)
    step = _chunk_rows(samples.shape[0])
    for start in range(0, nq, step):
        stop = min(start + step, nq)
        block = queries[start:stop]
        diff = block[:, 0, None] - samples[None, :, 0]
        sq = diff * diff
        for c in range(1, d):
            diff = block[:, c, None] - samples[None, :, c]
            sq += diff * diff
        kern = np.exp(-sq * inv_two_h2)
        out[start:stop] = np.cumsum(kern, axis=1)[:, -1] * scale
    return out

"""Numba-accelerated brute-force kernels (default backend).

Each query row is handled entirely by one thread with an inner loop over
sample index j in ascending order, so results do not depend on the thread
count. fastmath stays off: the counting kernels must agree bit-for-bit
with the numpy fallback.
"""

import numpy as np
from numba import njit, prange


@njit(cache=True)
def _dist(points, i, j, norm_code):
    d = points.shape[1]
    if norm_code == 0:
        m = 0.0
        for c in range(d):
            a = abs(points[i, c] - points[j, c])
            if a > m:
                m = a
        return m
    s = 0.0
    for c in range(d):
        df = points[i, c] - points[j, c]
        s += df * df
    return np.sqrt(s)


@njit(cache=True, parallel=True)
def kth_distances(points, k, norm_code):
    n = points.shape[0]
    out = np.empty(n)
    for i in prange(n):
        best = np.full(k, np.inf)
        for j in range(n):
            if j == i:
                continue
            dist = _dist(points, i, j, norm_code)
            if dist < best[k - 1]:
                pos = k - 1
                while pos > 0 and best[pos - 1] > dist:
                    best[pos] = best[pos - 1]
                    pos -= 1
                best[pos] = dist
        out[i] = best[k - 1]
    return out


@njit(cache=True, parallel=True)
def count_within(points, radii, strict, norm_code):
    n = points.shape[0]
    out = np.empty(n, dtype=np.int64)
    for i in prange(n):
        r = radii[i]
        use_le = (not strict) or (r == 0.0)
        c = 0
        for j in range(n):
            if j == i:
                continue
            dist = _dist(points, i, j, norm_code)
            if (dist < r) or (use_le and dist <= r):
                c += 1
        out[i] = c
    return out


@njit(cache=True, parallel=True)
def weighted_count_within(points, radii, weights, strict, norm_code):
    n = points.shape[0]
    out = np.empty(n)
    for i in prange(n):
        r = radii[i]
        use_le = (not strict) or (r == 0.0)
        acc = 0.0
        for j in range(n):
            if j == i:
                continue
            dist = _dist(points, i, j, norm_code)
            if (dist < r) or (use_le and dist <= r):
                acc += weights[j]
        out[i] = acc
    return out


@njit(cache=True, parallel=True)
def kde_gaussian(samples, queries, inv_two_h2, scale):
    m = samples.shape[0]
    d = samples.shape[1]
    nq = queries.shape[0]
    out = np.empty(nq)
    for i in prange(nq):
        acc = 0.0
        for j in range(m):
            s = 0.0
            for c in range(d):
                df = queries[i, c] - samples[j, c]
                s += df * df
            acc += np.exp(-s * inv_two_h2)
        out[i] = acc * scale
    return out

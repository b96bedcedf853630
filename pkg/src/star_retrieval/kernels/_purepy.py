"""Pure-Python / numpy implementations of the hot kernels.

Used when the compiled extension is unavailable. Hashing is exact integer
arithmetic and produces bit-identical buckets to the compiled path; float
reductions may differ from it in the last ulp.
"""

from __future__ import annotations

import numpy as np

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK = (1 << 64) - 1


def _seed_state(seed: int) -> int:
    h = _FNV_OFFSET
    for b in range(8):
        h = ((h ^ ((seed >> (8 * b)) & 0xFF)) * _FNV_PRIME) & _MASK
    return h


def hash_ngram_counts(codepoints: np.ndarray, dim: int, seed: int) -> np.ndarray:
    """Signed feature-hash counts of character 3-grams.

    ``codepoints`` is the uint32 codepoint sequence of the (already lowercased,
    trimmed) text. Texts shorter than 3 characters contribute a single gram
    spanning the whole text. The bucket is ``h % dim`` and the sign comes from
    the top hash bit.
    """
    counts = np.zeros(dim, dtype=np.float64)
    cps = [int(c) for c in codepoints]
    n = len(cps)
    if n == 0:
        return counts
    h0 = _seed_state(seed)
    grams = (cps[i : i + 3] for i in range(n - 2)) if n >= 3 else iter([cps])
    for gram in grams:
        h = h0
        for cp in gram:
            for b in range(4):
                h = ((h ^ ((cp >> (8 * b)) & 0xFF)) * _FNV_PRIME) & _MASK
        counts[h % dim] += 1.0 if (h >> 63) == 0 else -1.0
    return counts


def assign_nearest(points: np.ndarray, centroids: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Nearest centroid per point by squared Euclidean distance.

    Ties go to the lowest centroid index (argmin keeps the first minimum).
    Returns (labels int64, squared distances float64).
    """
    d2 = ((points[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
    labels = np.argmin(d2, axis=1).astype(np.int64)
    return labels, d2[np.arange(points.shape[0]), labels]


def dot_scores(matrix: np.ndarray, query: np.ndarray) -> np.ndarray:
    """Dot product of every float32 row against a float64 query, in float64."""
    return matrix.astype(np.float64) @ query

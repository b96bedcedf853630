# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: 3-gram feature hashing, centroid assignment, index scan."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef unsigned long long u64

cdef u64 FNV_OFFSET = 14695981039346656037ULL
cdef u64 FNV_PRIME = 1099511628211ULL


cdef inline u64 _feed_byte(u64 h, u64 b) nogil:
    return (h ^ b) * FNV_PRIME


cdef inline u64 _feed_codepoint(u64 h, u64 cp) nogil:
    cdef int b
    for b in range(4):
        h = _feed_byte(h, (cp >> (8 * b)) & 0xFFULL)
    return h


def hash_ngram_counts(const unsigned int[::1] codepoints, int dim, object seed):
    # Matches _purepy.hash_ngram_counts bit for bit: integer arithmetic only.
    cdef u64 s = <u64> seed
    cdef u64 h0 = FNV_OFFSET
    cdef int b
    for b in range(8):
        h0 = _feed_byte(h0, (s >> (8 * b)) & 0xFFULL)

    cdef cnp.ndarray[cnp.float64_t, ndim=1] counts = np.zeros(dim, dtype=np.float64)
    cdef double[::1] c = counts
    cdef Py_ssize_t n = codepoints.shape[0]
    cdef Py_ssize_t i
    cdef u64 h
    if n == 0:
        return counts
    if n >= 3:
        for i in range(n - 2):
            h = h0
            h = _feed_codepoint(h, codepoints[i])
            h = _feed_codepoint(h, codepoints[i + 1])
            h = _feed_codepoint(h, codepoints[i + 2])
            if (h >> 63) == 0:
                c[<Py_ssize_t> (h % <u64> dim)] += 1.0
            else:
                c[<Py_ssize_t> (h % <u64> dim)] -= 1.0
    else:
        h = h0
        for i in range(n):
            h = _feed_codepoint(h, codepoints[i])
        if (h >> 63) == 0:
            c[<Py_ssize_t> (h % <u64> dim)] += 1.0
        else:
            c[<Py_ssize_t> (h % <u64> dim)] -= 1.0
    return counts


def assign_nearest(const double[:, ::1] points, const double[:, ::1] centroids):
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t k = centroids.shape[0]
    cdef Py_ssize_t d = points.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] labels = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] dists = np.empty(n, dtype=np.float64)
    cdef long long[::1] lab = labels
    cdef double[::1] dv = dists
    cdef Py_ssize_t i, j, t, best_j
    cdef double best, acc, diff
    with nogil:
        for i in range(n):
            best_j = 0
            best = 0.0
            for j in range(k):
                acc = 0.0
                for t in range(d):
                    diff = points[i, t] - centroids[j, t]
                    acc += diff * diff
                if j == 0 or acc < best:
                    best = acc
                    best_j = j
            lab[i] = best_j
            dv[i] = best
    return labels, dists


def dot_scores(const float[:, ::1] matrix, const double[::1] query):
    cdef Py_ssize_t n = matrix.shape[0]
    cdef Py_ssize_t d = matrix.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i, j
    cdef double acc
    with nogil:
        for i in range(n):
            acc = 0.0
            for j in range(d):
                acc += (<double> matrix[i, j]) * query[j]
            o[i] = acc
    return out

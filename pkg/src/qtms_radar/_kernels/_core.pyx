# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Same contract as the pure-Python fallback: SplitMix64 counter-based
words, Box-Muller normal pairs, Marcum exceedance counting.  Integer
streams are bit-identical to the fallback; float outputs agree to the
last few ulps (libm here, numpy's vector routines there).
"""

from libc.math cimport M_PI, cos, log, sin, sqrt
from libc.stdint cimport uint64_t

import numpy as np


cdef double _TWO_NEG53 = 1.0 / 9007199254740992.0
cdef double _TWO_PI = 2.0 * M_PI


cdef inline uint64_t _mix64(uint64_t z) noexcept nogil:
    z ^= z >> 30
    z *= 0xBF58476D1CE4E5B9ULL
    z ^= z >> 27
    z *= 0x94D049BB133111EBULL
    z ^= z >> 31
    return z


cdef inline uint64_t _word(uint64_t seed, uint64_t j) noexcept nogil:
    return _mix64(seed + (j + 1) * 0x9E3779B97F4A7C15ULL)


def backend_name():
    return "compiled"


def u64_stream(seed, start, count):
    """64-bit words for counters start .. start+count-1."""
    cdef Py_ssize_t n = int(count)
    if n < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    cdef uint64_t s = <uint64_t> (int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t j0 = <uint64_t> int(start)
    out = np.empty(n, dtype=np.uint64)
    cdef uint64_t[::1] v = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            v[i] = _word(s, j0 + <uint64_t> i)
    return out


def normal_pairs(seed, start_pair, n_pairs):
    """2*n_pairs standard normals; pair k consumes counters 2k and 2k+1."""
    cdef Py_ssize_t n = int(n_pairs)
    if n < 0:
        raise ValueError(f"n_pairs must be >= 0, got {n_pairs}")
    cdef uint64_t s = <uint64_t> (int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t p0 = <uint64_t> int(start_pair)
    out = np.empty(2 * n, dtype=np.float64)
    cdef double[::1] v = out
    cdef Py_ssize_t k
    cdef uint64_t c
    cdef double u1, u2, r, theta
    with nogil:
        for k in range(n):
            c = 2 * (p0 + <uint64_t> k)
            # (x >> 11) + 1 <= 2^53 converts to double exactly: u1 in (0, 1].
            u1 = <double> ((_word(s, c) >> 11) + 1) * _TWO_NEG53
            u2 = <double> (_word(s, c + 1) >> 11) * _TWO_NEG53
            r = sqrt(-2.0 * log(u1))
            theta = _TWO_PI * u2
            v[2 * k] = r * cos(theta)
            v[2 * k + 1] = r * sin(theta)
    return out


def exceed_count(seed, start_pair, n_trials, double a, double b):
    """Trials with (a + z0)^2 + z1^2 >= b^2; trial k uses pair start_pair+k."""
    cdef Py_ssize_t n = int(n_trials)
    if n < 0:
        raise ValueError(f"n_trials must be >= 0, got {n_trials}")
    cdef uint64_t s = <uint64_t> (int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t p0 = <uint64_t> int(start_pair)
    cdef double b2 = b * b
    cdef Py_ssize_t k, hits = 0
    cdef uint64_t c
    cdef double u1, u2, r, theta, z0, z1, shifted
    with nogil:
        for k in range(n):
            c = 2 * (p0 + <uint64_t> k)
            u1 = <double> ((_word(s, c) >> 11) + 1) * _TWO_NEG53
            u2 = <double> (_word(s, c + 1) >> 11) * _TWO_NEG53
            r = sqrt(-2.0 * log(u1))
            theta = _TWO_PI * u2
            z0 = r * cos(theta)
            z1 = r * sin(theta)
            shifted = a + z0
            if shifted * shifted + z1 * z1 >= b2:
                hits += 1
    return hits

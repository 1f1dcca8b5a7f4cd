# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loop for representation-count tables."""


def accumulate(long long[::1] counts, Py_ssize_t coin):
    """In place: counts[j] += counts[j - coin] for j = coin .. len(counts)-1.

    Callers must guarantee that no entry can exceed int64 (frobgen.dp proves
    an a-priori ceiling before choosing this path).
    """
    cdef Py_ssize_t j
    cdef Py_ssize_t n = counts.shape[0]
    if coin <= 0:
        raise ValueError("coin must be positive")
    with nogil:
        for j in range(coin, n):
            counts[j] += counts[j - coin]

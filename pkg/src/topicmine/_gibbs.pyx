# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled collapsed-Gibbs sweep kernel.

Mirrors ``_gibbs_py.run_sweeps`` exactly: same token order, same
floating-point expression per topic, same sequential cumulative sum,
and one uniform draw per token taken straight from the numpy bit
generator.  Given the same starting state and generator, both kernels
produce bit-identical chains.
"""

import numpy as np

from cpython.pycapsule cimport PyCapsule_GetPointer, PyCapsule_IsValid
from numpy.random cimport bitgen_t


def run_sweeps(int[::1] z, int[::1] doc_of_token, int[::1] word_of_token,
               int[:, ::1] n_dk, int[:, ::1] n_kw, int[::1] n_k,
               double alpha, double beta, object bit_generator, int n_sweeps):
    """Resample every token ``n_sweeps`` times, mutating state in place."""
    cdef Py_ssize_t T = z.shape[0]
    cdef Py_ssize_t K = n_k.shape[0]
    cdef Py_ssize_t V = n_kw.shape[1]
    cdef double v_beta = V * beta

    cdef bitgen_t *rng
    capsule = bit_generator.capsule
    if not PyCapsule_IsValid(capsule, "BitGenerator"):
        raise ValueError("expected a numpy BitGenerator capsule")
    rng = <bitgen_t *> PyCapsule_GetPointer(capsule, "BitGenerator")

    cdef double[::1] cum = np.empty(K, dtype=np.float64)
    cdef Py_ssize_t t, d, w, k
    cdef int k_old, k_new
    cdef double total, u
    cdef int sweep

    with bit_generator.lock:
        with nogil:
            for sweep in range(n_sweeps):
                for t in range(T):
                    d = doc_of_token[t]
                    w = word_of_token[t]
                    k_old = z[t]

                    n_dk[d, k_old] -= 1
                    n_kw[k_old, w] -= 1
                    n_k[k_old] -= 1

                    total = 0.0
                    for k in range(K):
                        total += (n_dk[d, k] + alpha) * (n_kw[k, w] + beta) \
                            / (n_k[k] + v_beta)
                        cum[k] = total

                    u = rng.next_double(rng.state) * total
                    k_new = 0
                    while k_new < K - 1 and u >= cum[k_new]:
                        k_new += 1

                    z[t] = k_new
                    n_dk[d, k_new] += 1
                    n_kw[k_new, w] += 1
                    n_k[k_new] += 1

"""Pure-Python (numpy) collapsed-Gibbs sweep kernel.

Fallback for environments without the compiled extension.  Kept
bit-compatible with ``_gibbs.run_sweeps``: one uniform draw per token
from the same bit generator, weights accumulated in topic order, and
the same first-crossing rule on the cumulative sum.
"""

import numpy as np


def run_sweeps(z, doc_of_token, word_of_token, n_dk, n_kw, n_k,
               alpha, beta, bit_generator, n_sweeps):
    """Resample every token ``n_sweeps`` times, mutating state in place."""
    T = z.shape[0]
    K = n_k.shape[0]
    V = n_kw.shape[1]
    v_beta = V * beta
    rng = np.random.Generator(bit_generator)
    last = K - 1

    for _ in range(n_sweeps):
        for t in range(T):
            d = doc_of_token[t]
            w = word_of_token[t]
            k_old = z[t]

            n_dk[d, k_old] -= 1
            n_kw[k_old, w] -= 1
            n_k[k_old] -= 1

            weights = (n_dk[d] + alpha) * (n_kw[:, w] + beta) / (n_k + v_beta)
            cum = np.cumsum(weights)
            u = rng.random() * cum[last]
            k_new = min(int(np.searchsorted(cum, u, side="right")), last)

            z[t] = k_new
            n_dk[d, k_new] += 1
            n_kw[k_new, w] += 1
            n_k[k_new] += 1

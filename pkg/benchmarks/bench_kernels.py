#!/usr/bin/env python3
"""Benchmark the compiled Gibbs kernel against the numpy fallback.

Both kernels run the same seeded chain, so besides throughput this also
cross-checks that they stay bit-identical.

Usage: python benchmarks/bench_kernels.py [--docs 500] [--sweeps 20]
"""

import argparse
import time

import numpy as np

from topicmine import evaluation, kernels, _gibbs_py
from topicmine.lda import LdaConfig, init_assignments


def make_state(n_docs, n_topics, seed):
    spec = evaluation.SyntheticSpec(n_topics=n_topics, n_vocab=400,
                                    n_docs=n_docs, doc_length_mean=40,
                                    seed=seed)
    documents, _, _ = evaluation.generate_synthetic_corpus(spec)
    config = LdaConfig(n_topics=n_topics, alpha=0.1, beta=0.01,
                       iterations=1, seed=seed)
    return init_assignments(documents, config, spec.n_vocab)


def run(kernel, state, n_sweeps):
    t0 = time.perf_counter()
    kernel(state.z, state.doc_of_token, state.word_of_token,
           state.n_dk, state.n_kw, state.n_k, state.alpha, state.beta,
           state.rng.bit_generator, n_sweeps)
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=500)
    parser.add_argument("--topics", type=int, default=20)
    parser.add_argument("--sweeps", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; benchmarking the fallback only")

    results = {}
    states = {}
    for name, kernel in backends.items():
        state = make_state(args.docs, args.topics, args.seed)
        tokens = state.total_tokens
        elapsed = run(kernel, state, args.sweeps)
        rate = tokens * args.sweeps / elapsed
        results[name] = (elapsed, rate)
        states[name] = state
        print(f"{name:>7}: {elapsed:8.3f}s for {args.sweeps} sweeps over "
              f"{tokens} tokens (K={args.topics})  ->  {rate:,.0f} tokens/s")

    if len(states) == 2:
        same = (states["cython"].z == states["python"].z).all()
        print(f"chains identical: {same}")
        speedup = results["python"][0] / results["cython"][0]
        print(f"speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()

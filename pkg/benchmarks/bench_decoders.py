"""Benchmark the numba Viterbi kernels against the pure-numpy fallback.

Usage: python benchmarks/bench_decoders.py [--sentences N] [--tags T] [--len L]
"""

import argparse
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from synth import generate_corpus  # noqa: E402

from statpos import SmoothingConfig, build_counts  # noqa: E402
from statpos import kernels  # noqa: E402
from statpos.taggers import emission_table, transition_tables, trigram_tables  # noqa: E402


def bench(fn, instances, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in instances:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sentences", type=int, default=2000)
    ap.add_argument("--len", dest="length", type=int, default=12)
    args = ap.parse_args()

    if not kernels.HAVE_NUMBA:
        print("numba is not installed; nothing to compare")
        return 1

    train, _, tagset = generate_corpus(1, n_train=400, n_test=1)
    model = build_counts(train, tagset)
    smoothing = SmoothingConfig()
    labels, start, trans, end = transition_tables(model, smoothing)
    _, start2, tri, tri_end = trigram_tables(model, smoothing)

    rng = np.random.default_rng(2)
    words = sorted(model.vocabulary)
    sentences = [[words[i] for i in rng.integers(0, len(words), args.length)]
                 for _ in range(args.sentences)]
    emits = [emission_table(model, smoothing, s, labels) for s in sentences]

    bigram_instances = [(e, start, trans, end) for e in emits]
    trigram_instances = [(e, start2, tri, tri_end) for e in emits]

    # trigger JIT compilation outside the timed region
    kernels._viterbi_bigram_jit(*bigram_instances[0])
    kernels._viterbi_trigram_jit(*trigram_instances[0])

    print(f"{args.sentences} sentences x {args.length} words, {len(labels)} tags")
    for name, jit_fn, py_fn, instances in (
        ("bigram ", kernels._viterbi_bigram_jit, kernels._viterbi_bigram_py,
         bigram_instances),
        ("trigram", kernels._viterbi_trigram_jit, kernels._viterbi_trigram_py,
         trigram_instances),
    ):
        t_jit = bench(jit_fn, instances)
        t_py = bench(py_fn, instances)
        print(f"{name}  numba {t_jit * 1e3:8.1f} ms   numpy {t_py * 1e3:8.1f} ms"
              f"   speedup {t_py / t_jit:5.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

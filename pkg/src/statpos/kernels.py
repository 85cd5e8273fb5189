"""Viterbi decoding kernels.

Each kernel exists twice: a numba @njit build and a pure-numpy fallback.
The active implementation is chosen at import time; set STATPOS_NO_NUMBA=1
to force the numpy path (or leave numba uninstalled).  Both paths compute
the same backward dynamic program and reconstruct the path forward, picking
the smallest tag index whenever several choices achieve the maximum, so the
returned sequence is the lexicographically smallest maximizer.

All inputs are float64 log-probability tables; tag indices follow the
lexicographic ordering of the tag labels.
"""

import os

import numpy as np

NEG_INF = float("-inf")

# Path reconstruction treats candidates within this margin of the maximum as
# tied and picks the smallest tag index.  Exact ties re-summed in a different
# order drift by ~1e-13; genuinely distinct paths differ by far more.
TIE_TOL = 1e-10


def _viterbi_bigram_py(emit, start, trans, end):
    """emit (n,T); start (T,); trans (T,T); end (T,).  Interior transitions
    are whatever `trans` holds, so the HMM decoder can pass doubled weights."""
    n, T = emit.shape
    beta = np.empty((n, T))
    beta[n - 1] = emit[n - 1] + end
    for i in range(n - 2, -1, -1):
        beta[i] = emit[i] + np.max(trans + beta[i + 1][None, :], axis=1)

    path = np.empty(n, dtype=np.int64)
    totals = start + beta[0]
    path[0] = _first_argmax(totals)
    score = totals[path[0]]
    for i in range(1, n):
        cand = trans[path[i - 1]] + beta[i]
        path[i] = _first_argmax(cand)
    return path, score


def _first_argmax(values):
    best = np.max(values)
    for j in range(values.shape[0]):
        if values[j] >= best - TIE_TOL:
            return j
    return 0


def _viterbi_trigram_py(emit, start2, tri, tri_end):
    """emit (n,T); start2 (T,) = P(t1|START,START); tri (T+1,T,T) with row T
    holding the START context; tri_end (T+1,T) = P(END | a, b)."""
    n, T = emit.shape
    beta = np.empty((n, T + 1, T))
    beta[n - 1] = emit[n - 1][None, :] + tri_end
    for i in range(n - 2, -1, -1):
        # max over successor c of tri[a, b, c] + beta[i+1, b, c]
        beta[i] = emit[i][None, :] + np.max(tri + beta[i + 1, :T][None, :, :], axis=2)

    path = np.empty(n, dtype=np.int64)
    totals = start2 + beta[0, T]
    path[0] = _first_argmax(totals)
    score = totals[path[0]]
    for i in range(1, n):
        a = T if i == 1 else path[i - 2]
        b = path[i - 1]
        cand = tri[a, b] + beta[i, b]
        path[i] = _first_argmax(cand)
    return path, score


try:
    from numba import njit

    HAVE_NUMBA = True

    @njit(cache=True)
    def _viterbi_bigram_jit(emit, start, trans, end):  # pragma: no cover - numba
        n, T = emit.shape
        beta = np.empty((n, T))
        for s in range(T):
            beta[n - 1, s] = emit[n - 1, s] + end[s]
        for i in range(n - 2, -1, -1):
            for s in range(T):
                best = NEG_INF
                for t in range(T):
                    v = trans[s, t] + beta[i + 1, t]
                    if v > best:
                        best = v
                beta[i, s] = emit[i, s] + best

        path = np.empty(n, dtype=np.int64)
        best = NEG_INF
        for s in range(T):
            v = start[s] + beta[0, s]
            if v > best:
                best = v
        idx = 0
        for s in range(T):
            if start[s] + beta[0, s] >= best - TIE_TOL:
                idx = s
                break
        path[0] = idx
        score = start[idx] + beta[0, idx]
        for i in range(1, n):
            prev = path[i - 1]
            best = NEG_INF
            for t in range(T):
                v = trans[prev, t] + beta[i, t]
                if v > best:
                    best = v
            idx = 0
            for t in range(T):
                if trans[prev, t] + beta[i, t] >= best - TIE_TOL:
                    idx = t
                    break
            path[i] = idx
        return path, score

    @njit(cache=True)
    def _viterbi_trigram_jit(emit, start2, tri, tri_end):  # pragma: no cover - numba
        n, T = emit.shape
        beta = np.empty((n, T + 1, T))
        for a in range(T + 1):
            for b in range(T):
                beta[n - 1, a, b] = emit[n - 1, b] + tri_end[a, b]
        for i in range(n - 2, -1, -1):
            for a in range(T + 1):
                for b in range(T):
                    best = NEG_INF
                    for c in range(T):
                        v = tri[a, b, c] + beta[i + 1, b, c]
                        if v > best:
                            best = v
                    beta[i, a, b] = emit[i, b] + best

        path = np.empty(n, dtype=np.int64)
        best = NEG_INF
        for b in range(T):
            v = start2[b] + beta[0, T, b]
            if v > best:
                best = v
        idx = 0
        for b in range(T):
            if start2[b] + beta[0, T, b] >= best - TIE_TOL:
                idx = b
                break
        path[0] = idx
        score = start2[idx] + beta[0, T, idx]
        for i in range(1, n):
            a = T if i == 1 else path[i - 2]
            b = path[i - 1]
            best = NEG_INF
            for c in range(T):
                v = tri[a, b, c] + beta[i, b, c]
                if v > best:
                    best = v
            idx = 0
            for c in range(T):
                if tri[a, b, c] + beta[i, b, c] >= best - TIE_TOL:
                    idx = c
                    break
            path[i] = idx
        return path, score

except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False
    _viterbi_bigram_jit = None
    _viterbi_trigram_jit = None


USING_NUMBA = HAVE_NUMBA and os.environ.get("STATPOS_NO_NUMBA", "") not in ("1", "true", "yes")

if USING_NUMBA:
    viterbi_bigram = _viterbi_bigram_jit
    viterbi_trigram = _viterbi_trigram_jit
else:
    viterbi_bigram = _viterbi_bigram_py
    viterbi_trigram = _viterbi_trigram_py

"""Hot loops: all-pairs b-symbol distance tables, the depth-first assignment
search shared by ``codesearch`` and ``oracle``, and exhaustive error-pattern
decoding.

Each kernel has a numba version (``*_nb``) and a numpy version (``*_np``).
The public wrappers pick one according to :data:`fcbsc._accel.USE_NUMBA`.
Both versions visit candidates in the same order and return identical results,
node counts included.
"""
from __future__ import annotations

from itertools import combinations, product

import numpy as np

from ._accel import USE_NUMBA, njit

FOUND, REFUTED, TIMEOUT = 1, 0, -1

# Q x Q int16 table; 4096^2 * 2 bytes = 32 MiB.
MAX_TABLE_WORDS = 4096


def word_digits(n: int, q: int) -> np.ndarray:
    """``(q**n, n)`` digit matrix; row ``x`` is word ``x`` in lexicographic order."""
    idx = np.arange(q**n, dtype=np.int64)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def window_ids(digits: np.ndarray, q: int, b: int) -> np.ndarray:
    """Integer id of every cyclic width-``b`` window: ``(rows, n)`` -> ``(rows, n)``."""
    n = digits.shape[1]
    out = np.zeros(digits.shape, dtype=np.int64)
    if n == 0:
        return out
    for j in range(b):
        out = out * q + np.roll(digits, -j, axis=1)
    return out


# ---------------------------------------------------------------- distances


def _distance_table_loop(n, q, b):
    Q = q**n
    digits = np.zeros((Q, n), dtype=np.int64)
    for x in range(Q):
        rest = x
        for i in range(n - 1, -1, -1):
            digits[x, i] = rest % q
            rest //= q
    out = np.zeros((Q, Q), dtype=np.int16)
    neq = np.zeros(n, dtype=np.bool_)
    for x in range(Q):
        for y in range(x + 1, Q):
            for i in range(n):
                neq[i] = digits[x, i] != digits[y, i]
            d = 0
            for i in range(n):
                for j in range(b):
                    if neq[(i + j) % n]:
                        d += 1
                        break
            out[x, y] = d
            out[y, x] = d
    return out


_distance_table_nb = njit(_distance_table_loop)


def _distance_table_np(n, q, b, chunk=256):
    Q = q**n
    out = np.zeros((Q, Q), dtype=np.int16)
    if n == 0:
        return out
    digits = word_digits(n, q)
    for lo in range(0, Q, chunk):
        neq = digits[lo : lo + chunk, None, :] != digits[None, :, :]
        win = neq.copy()
        for j in range(1, b):
            win |= np.roll(neq, -j, axis=2)
        out[lo : lo + chunk] = win.sum(axis=2)
    return out


def distance_table(n: int, q: int, b: int) -> np.ndarray:
    """``d_b`` between every pair of length-``n`` words, lexicographic indexing."""
    if q**n > MAX_TABLE_WORDS:
        raise ValueError(f"q^n = {q**n} exceeds table cap {MAX_TABLE_WORDS}")
    if USE_NUMBA:
        return _distance_table_nb(n, q, b)
    return _distance_table_np(n, q, b)


# ---------------------------------------------------------------- search


def _dfs_loop(cand, ncand, demand, dist, budget):
    M = cand.shape[0]
    assign = np.zeros(M, dtype=np.int64)
    pos = np.zeros(M + 1, dtype=np.int64)
    nodes = 0
    if M == 0:
        return FOUND, assign, nodes
    level = 0
    while level >= 0:
        if level == M:
            return FOUND, assign, nodes
        c = pos[level]
        hit = -1
        while c < ncand[level]:
            w = cand[level, c]
            c += 1
            ok = True
            for j in range(level):
                if dist[w, assign[j]] < demand[level, j]:
                    ok = False
                    break
            if ok:
                hit = w
                break
        pos[level] = c
        if hit >= 0:
            nodes += 1
            if nodes > budget:
                return TIMEOUT, assign, nodes
            assign[level] = hit
            level += 1
            pos[level] = 0
        else:
            level -= 1
    return REFUTED, assign, nodes


_dfs_nb = njit(_dfs_loop)


def _dfs_np(cand, ncand, demand, dist, budget):
    M = cand.shape[0]
    assign = np.zeros(M, dtype=np.int64)
    nodes = 0
    if M == 0:
        return FOUND, assign, nodes
    feasible = [None] * M
    pos = np.zeros(M, dtype=np.int64)

    def expand(level):
        row = cand[level, : ncand[level]]
        if level:
            ok = np.all(dist[np.ix_(row, assign[:level])] >= demand[level, :level], axis=1)
            row = row[ok]
        feasible[level] = row
        pos[level] = 0

    level = 0
    expand(0)
    while level >= 0:
        if pos[level] < len(feasible[level]):
            assign[level] = feasible[level][pos[level]]
            pos[level] += 1
            nodes += 1
            if nodes > budget:
                return TIMEOUT, assign, nodes
            level += 1
            if level == M:
                return FOUND, assign, nodes
            expand(level)
        else:
            level -= 1
    return REFUTED, assign, nodes


def dfs_assign(cand, ncand, demand, dist, budget):
    """First assignment (in candidate order) with ``dist[a_i, a_j] >= demand[i, j]`` for all ``j < i``.

    ``cand[i, :ncand[i]]`` lists the word ids allowed at index ``i``. ``budget``
    caps the number of accepted placements. Returns ``(status, assignment, nodes)``.
    """
    args = (
        np.ascontiguousarray(cand, dtype=np.int64),
        np.ascontiguousarray(ncand, dtype=np.int64),
        np.ascontiguousarray(demand, dtype=np.int64),
        np.ascontiguousarray(dist, dtype=np.int16),
        np.int64(budget),
    )
    fn = _dfs_nb if USE_NUMBA else _dfs_np
    status, assign, nodes = fn(*args)
    return int(status), assign, int(nodes)


# ---------------------------------------------------------------- decoding


def _decode_failures_loop(reads, labels, nlabels, qb, wmin, wmax):
    M, n = reads.shape
    failures = 0
    y = np.zeros(n, dtype=np.int64)
    comb = np.zeros(n + 1, dtype=np.int64)
    vals = np.zeros(n + 1, dtype=np.int64)
    best = np.zeros(nlabels, dtype=np.int64)
    for m in range(M):
        for w in range(wmin, min(wmax, n) + 1):
            if w > 0 and qb < 2:
                break
            for i in range(w):
                comb[i] = i
            more_pos = True
            while more_pos:
                for i in range(w):
                    vals[i] = 0
                more_val = True
                while more_val:
                    for i in range(n):
                        y[i] = reads[m, i]
                    for i in range(w):
                        v = vals[i]
                        if v >= reads[m, comb[i]]:
                            v += 1
                        y[comb[i]] = v
                    for c in range(nlabels):
                        best[c] = n + 1
                    for c in range(M):
                        d = 0
                        for i in range(n):
                            if reads[c, i] != y[i]:
                                d += 1
                        if d < best[labels[c]]:
                            best[labels[c]] = d
                    lo = n + 1
                    arg = -1
                    ties = 0
                    for c in range(nlabels):
                        if best[c] < lo:
                            lo = best[c]
                            arg = c
                            ties = 1
                        elif best[c] == lo:
                            ties += 1
                    if ties > 1 or arg != labels[m]:
                        failures += 1
                    # odometer over wrong-tuple values
                    i = w - 1
                    while i >= 0 and vals[i] == qb - 2:
                        vals[i] = 0
                        i -= 1
                    if i < 0:
                        more_val = False
                    else:
                        vals[i] += 1
                # next position combination
                i = w - 1
                while i >= 0 and comb[i] == n - w + i:
                    i -= 1
                if i < 0:
                    more_pos = False
                else:
                    comb[i] += 1
                    for j in range(i + 1, w):
                        comb[j] = comb[j - 1] + 1
    return failures


_decode_failures_nb = njit(_decode_failures_loop)


def _decode_failures_np(reads, labels, nlabels, qb, wmin, wmax):
    M, n = reads.shape
    failures = 0
    onehot = labels[None, :] == np.arange(nlabels)[:, None]
    for w in range(wmin, min(wmax, n) + 1):
        if w > 0 and qb < 2:
            break
        pos_list = list(combinations(range(n), w))
        val_list = list(product(range(qb - 1), repeat=w))
        combos = np.array(pos_list, dtype=np.int64).reshape(len(pos_list), w)
        values = np.array(val_list, dtype=np.int64).reshape(len(val_list), w)
        for m in range(M):
            P, V = len(combos), len(values)
            ys = np.repeat(reads[m][None, :], P * V, axis=0)
            rows = np.arange(P * V)
            pos = np.repeat(combos, V, axis=0)
            val = np.tile(values, (P, 1))
            val = val + (val >= reads[m][pos])
            for i in range(w):
                ys[rows, pos[:, i]] = val[:, i]
            d = (ys[:, None, :] != reads[None, :, :]).sum(axis=2)
            per_class = np.where(onehot[None, :, :], d[:, None, :], n + 1).min(axis=2)
            lo = per_class.min(axis=1, keepdims=True)
            ties = (per_class == lo).sum(axis=1)
            failures += int(np.count_nonzero((ties > 1) | (per_class.argmin(axis=1) != labels[m])))
    return failures


def decode_failures(reads, labels, qb: int, wmin: int, wmax: int) -> int:
    """Count (message, pattern) pairs that minimum-distance class decoding gets
    wrong or ties on, over all substitution patterns of weight ``wmin..wmax``.

    ``reads[m]`` holds the window ids of codeword ``m``; ``labels`` are dense
    class ids; ``qb`` is the number of distinct window values ``q**b``.
    """
    reads = np.ascontiguousarray(reads, dtype=np.int64)
    labels = np.ascontiguousarray(labels, dtype=np.int64)
    nlabels = int(labels.max()) + 1 if labels.size else 0
    fn = _decode_failures_nb if USE_NUMBA else _decode_failures_np
    return int(fn(reads, labels, nlabels, np.int64(qb), np.int64(wmin), np.int64(wmax)))

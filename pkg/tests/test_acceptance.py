"""Exit criteria. Each test prints one PASS/FAIL line; run with ``pytest -s`` to see them.

Every comparison is exact integer or exact rational arithmetic.
"""
import time
from fractions import Fraction
from itertools import product

import numpy as np

from fcbsc import bounds, codesearch, oracle, reqmatrix
from fcbsc.bsymbol import (
    ChannelParams,
    b_distance,
    b_weight,
    hamming_distance,
    total_b_weight,
    total_b_weight_exhaustive,
)
from fcbsc.gf import Word, all_words, field_make, word_sub
from fcbsc.linfunc import all_full_rank, full_rank_rref, identity, kernel_weight_sum


def report(name, ok, elapsed, limit):
    print(f"\n[{'PASS' if ok and elapsed < limit else 'FAIL'}] {name} ({elapsed:.2f}s, limit {limit}s)")


def gate(name, limit):
    def deco(fn):
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            ok = False
            try:
                fn(*args, **kwargs)
                ok = True
            finally:
                elapsed = time.perf_counter() - t0
                report(name, ok, elapsed, limit)
            assert elapsed < limit, f"{name}: {elapsed:.1f}s exceeds {limit}s"

        run.__name__ = fn.__name__
        return run

    return deco


# ---------------------------------------------------------------- 1


@gate("1 weight-sum identity", 10)
def test_c1_weight_sum_identity():
    for q, (p, m) in {2: (2, 1), 3: (3, 1), 4: (2, 2)}.items():
        spec = field_make(p, m)
        for b in (1, 2, 3):
            for k in range(b, 6):
                brute = sum(b_weight(u, b) for u in all_words(k, spec))
                assert brute == total_b_weight(spec, k, b) == k * (q**k - q ** (k - b)), (q, b, k)
                assert total_b_weight_exhaustive(spec, k, b) == brute


# ---------------------------------------------------------------- 2


@gate("2 metric and linearity suite", 10)
def test_c2_metric_suite():
    spec = field_make(2)
    for k in range(1, 5):
        ws = all_words(k, spec)
        for b in (1, 2, 3):
            D = {(u, v): b_distance(u, v, b) for u in ws for v in ws}
            for u in ws:
                for v in ws:
                    d = D[u, v]
                    assert (d == 0) == (u == v)
                    assert d == D[v, u]
                    assert d == b_weight(word_sub(u, v), b)
                    dh = hamming_distance(u, v)
                    assert dh <= d <= min(b * dh, k)
                    for w in ws:
                        assert d <= D[u, w] + D[w, v]
                        assert D[u + w, v + w] == d


# ---------------------------------------------------------------- 3


@gate("3 structural proof properties", 60)
def test_c3_structural_properties():
    checked = 0
    for p in (2, 3):
        spec = field_make(p)
        q = spec.q
        for k in range(1, 4):
            for l in range(1, k + 1):  # noqa: E741
                for f in full_rank_rref(spec, l, k):
                    for b in (1, 2):
                        for t in (1, 2):
                            params = ChannelParams(b, t)
                            B1 = reqmatrix.for_linear(f, params, "B1")
                            B2 = reqmatrix.for_linear(f, params, "B2")
                            for B in (B1, B2):
                                assert reqmatrix.columns_are_permutations(B)
                                assert all(reqmatrix.column_zero_count(B, j) >= q ** (k - l) for j in range(B.M))
                            s = kernel_weight_sum(f, b)
                            if k >= b:
                                bound = reqmatrix.entry_sum_lower_bound(q, k, l, b, t, s)
                            else:
                                # formula precondition fails; use the enumerated total instead
                                total = total_b_weight_exhaustive(spec, k, b)
                                bound = q**k * ((2 * t - b + 2) * (q**k - q ** (k - l)) - total + s)
                            assert reqmatrix.entry_sum(B1) >= bound
                            checked += 1
    assert checked >= 50


# ---------------------------------------------------------------- 4


def _distance_sum_ok(ws, r, q, b):
    M = len(ws)
    total = sum(b_distance(x, y, b) for x in ws for y in ws)
    # total <= r M^2 (1 - q^-b), scaled by q^b
    return total * q**b <= r * M * M * (q**b - 1)


@gate("4 distance-sum inequality", 30)
def test_c4_distance_sum_inequality():
    spec = field_make(2)
    for b in (1, 2):
        for r in range(0, 4):
            pool = all_words(r, spec)
            for M in range(1, 5):
                for cb in product(pool, repeat=M):
                    assert _distance_sum_ok(cb, r, 2, b), (b, r, cb)
    rng = np.random.default_rng(20240601)
    fields = [field_make(2), field_make(3), field_make(2, 2)]
    for _ in range(1000):
        spec = fields[rng.integers(len(fields))]
        r = int(rng.integers(4, 9))
        M = int(rng.integers(5, 13))
        b = int(rng.integers(1, 4))
        cb = [Word(tuple(int(x) for x in rng.integers(0, spec.q, r)), spec) for _ in range(M)]
        assert _distance_sum_ok(cb, r, spec.q, b)


# ---------------------------------------------------------------- 5 and 7

_ORACLE_POINTS = []


def _oracle_scale_points():
    spec = field_make(2)
    pts = [(f, ChannelParams(b, 1)) for b in (1, 2) for l in (1, 2) for f in all_full_rank(spec, l, 2)]  # noqa: E741
    pts.append((identity(1, spec), ChannelParams(1, 1)))
    return pts


@gate("5 sandwich and bound chain", 300)
def test_c5_sandwich_chain():
    seen = {}
    for f, params in _oracle_scale_points():
        rep = bounds.sandwich_report(f, params, run_search=True, run_oracle=True)
        assert not rep.inconclusive
        nb1, r, nb2 = rep.n_b_B1.min_length, rep.oracle_r, rep.n_b_B2.min_length
        assert bounds.implied_redundancy(rep.plotkin_value) <= nb1 <= r <= nb2, (f.F, params)
        assert rep.violations() == []
        seen[(f.F, params.b, f.k)] = (rep.plotkin_value, nb1, r, nb2)
        _ORACLE_POINTS.append((f, params, rep.oracle_result.witness))
    assert seen[(((1, 0),), 2, 2)] == (0, 0, 1, 2)
    assert seen[(((1,),), 1, 1)] == (2, 2, 2, 2)


@gate("7 operational correctness", 60)
def test_c7_operational_correctness():
    points = _ORACLE_POINTS or [
        (f, p, oracle.exact_optimal_redundancy(f.label, f.spec, f.k, p).witness) for f, p in _oracle_scale_points()
    ]
    assert points
    for f, params, enc in points:
        assert oracle.is_valid_fcbsc(enc, f.label, params)
        assert oracle.exhaustive_decode_check(enc, f.label, params) == 0
        if f.F == ((1, 0),) and params.b == 2:
            assert oracle.decode_failures_by_weight(enc, f.label, params, params.t + 1, params.t + 1) > 0


# ---------------------------------------------------------------- 6


@gate("6 reduction identities", 5)
def test_c6_reduction_identities():
    for p in (2, 3):
        spec = field_make(p)
        q = spec.q
        for k in range(1, 5):
            for l in range(1, k + 1):  # noqa: E741
                for f, t in product(full_rank_rref(spec, l, k), range(1, 4)):
                    eq1_b1 = bounds.plotkin_bound_linear(f, ChannelParams(1, t))
                    assert eq1_b1 == bounds.plotkin_b1(f, t)
                    if l == k:
                        assert eq1_b1 + k == bounds.ecc_bound(spec, k, ChannelParams(1, t))
                        assert eq1_b1 + k == bounds.ecc_bound_hamming(q, k, t)
                    if k >= 2:
                        eq1_b2 = bounds.plotkin_bound_linear(f, ChannelParams(2, t))
                        assert eq1_b2 == bounds.plotkin_symbol_pair(f, t)
                        if q == 2:
                            assert eq1_b2 == bounds.plotkin_fcspc(f, t)
                        if l == k:
                            assert eq1_b2 + k == bounds.ecc_bound(spec, k, ChannelParams(2, t))
                            if q == 2:
                                assert eq1_b2 + k == bounds.ecc_bound_symbol_pair_binary(k, t)
                                assert eq1_b2 + k == Fraction(8 * t, 3) * (1 - Fraction(1, 2**k))


# ---------------------------------------------------------------- 8

DEMAND_CAP = 3


def _flat_profiles(M, r, dtab):
    """Capped pairwise-distance profile of every one of the q^(rM) codebooks."""
    Q = dtab.shape[0]
    pairs = [(i, j) for i in range(M) for j in range(i + 1, M)]
    if not pairs:
        return np.zeros((1, 0), dtype=np.int64)
    ids = np.arange(Q**M, dtype=np.int64)
    cols = [(ids // Q**i) % Q for i in range(M)]
    prof = np.stack([np.minimum(dtab[cols[i], cols[j]], DEMAND_CAP) for i, j in pairs], axis=1)
    return np.unique(prof, axis=0)


def _python_table(r, spec, b):
    ws = all_words(r, spec)
    return np.array([[b_distance(x, y, b) for y in ws] for x in ws], dtype=np.int64)


@gate("8 search exactness vs flat enumeration", 120)
def test_c8_search_exactness():
    spec = field_make(2)
    for b in (1, 2):
        for M in range(1, 5):
            pairs = [(i, j) for i in range(M) for j in range(i + 1, M)]
            combos = list(product(range(DEMAND_CAP + 1), repeat=len(pairs)))
            demands = np.array(combos, dtype=np.int64).reshape(len(combos), len(pairs))
            mats = []
            for dv in demands:
                E = np.zeros((M, M), dtype=np.int64)
                for (i, j), d in zip(pairs, dv):
                    E[i, j] = E[j, i] = d
                mats.append(reqmatrix.custom(E))
            greedy = np.array([codesearch.greedy_upper_bound(B, spec, b) for B in mats])
            flat = np.full(len(mats), -1)
            for r in range(int(greedy.max()) + 1):
                prof = _flat_profiles(M, r, _python_table(r, spec, b))
                todo = np.flatnonzero(flat < 0)
                for lo in range(0, len(todo), 512):
                    chunk = todo[lo : lo + 512]
                    ok = (prof[None, :, :] >= demands[chunk][:, None, :]).all(axis=2).any(axis=1)
                    flat[chunk[ok]] = r
            assert (flat >= 0).all()
            for B, want, g in zip(mats, flat, greedy):
                res = codesearch.min_length_search(B, spec, b)
                assert res.status == "exact"
                assert res.min_length == want, (b, B.entries.tolist(), res.min_length, want)
                assert want <= g
                assert codesearch.is_Bb_code(res.witness, B)

"""Time the numba kernels against the numpy fallbacks on desk-scale workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

import numpy as np

from fcbsc import kernels


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return bool(np.all(np.asarray(a) == np.asarray(b)))


def workloads():
    yield "distance_table n=10 q=2 b=3", lambda m: m["table"](10, 2, 3)
    yield "distance_table n=6 q=3 b=2", lambda m: m["table"](6, 3, 2)

    # refute 9 words of pairwise d_H >= 4 at length 7 (at most 8 exist)
    dist = kernels._distance_table_np(7, 2, 1)
    M, Q = 9, 128
    demand = (np.ones((M, M), dtype=np.int64) - np.eye(M, dtype=np.int64)) * 4
    cand = np.tile(np.arange(Q, dtype=np.int64), (M, 1))
    ncand = np.full(M, Q, dtype=np.int64)
    ncand[0] = 1
    yield "dfs refutation M=9 D=4 r=7 b=1", lambda m: m["dfs"](cand, ncand, demand, dist, np.int64(10**9))

    rng = np.random.default_rng(0)
    reads = rng.integers(0, 4, (16, 7)).astype(np.int64)
    labels = (np.arange(16) % 4).astype(np.int64)
    yield "decode patterns M=16 n=7 qb=4 w<=3", lambda m: m["decode"](reads, labels, 4, 4, 0, 3)


BACKENDS = {
    "numba": {"table": kernels._distance_table_nb, "dfs": kernels._dfs_nb, "decode": kernels._decode_failures_nb},
    "numpy": {"table": kernels._distance_table_np, "dfs": kernels._dfs_np, "decode": kernels._decode_failures_np},
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':40s} {'numba s':>10s} {'numpy s':>10s} {'speedup':>8s}  match")
    for name, run in workloads():
        run(BACKENDS["numba"])  # compile
        t_nb, out_nb = timed(lambda: run(BACKENDS["numba"]), args.repeat)
        t_np, out_np = timed(lambda: run(BACKENDS["numpy"]), args.repeat)
        print(f"{name:40s} {t_nb:10.4f} {t_np:10.4f} {t_np / t_nb:8.1f}x  {same(out_nb, out_np)}")


if __name__ == "__main__":
    main()

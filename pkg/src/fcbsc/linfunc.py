"""Full-rank linear functions ``f(u) = F u`` over GF(q) and their coset structure."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

import numpy as np

from . import kernels
from .errors import BadShape, DomainTooLarge, LengthMismatch, RankDeficient
from .gf import FieldSpec, Word

MAX_DOMAIN = 2**20


def rank(rows: Sequence[Sequence[int]], spec: FieldSpec) -> int:
    """Rank over GF(q) by Gaussian elimination with table arithmetic."""
    A = [list(r) for r in rows]
    if not A:
        return 0
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        scale = spec.inv(A[r][c])
        A[r] = [spec.mul(scale, x) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                factor = A[i][c]
                A[i] = [spec.sub(x, spec.mul(factor, y)) for x, y in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r


@dataclass(frozen=True)
class LinearFunction:
    F: tuple[tuple[int, ...], ...]
    spec: FieldSpec

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.F)

    @property
    def k(self) -> int:
        return len(self.F[0])

    @property
    def is_bijective(self) -> bool:
        return self.l == self.k

    def __call__(self, u: Word) -> Word:
        return evaluate(self, u)

    def label(self, u: Word) -> int:
        """Function value as an integer in the global order of length-``l`` words."""
        return evaluate(self, u).index

    def matrix(self) -> np.ndarray:
        return np.array(self.F, dtype=np.int64)


def linfunc_make(F: Sequence[Sequence[int]], spec: FieldSpec) -> LinearFunction:
    rows = tuple(tuple(int(x) for x in row) for row in F)
    if not rows or not rows[0]:
        raise BadShape("F must have at least one row and one column")
    k = len(rows[0])
    if any(len(r) != k for r in rows):
        raise BadShape("F rows have unequal lengths")
    if any(not 0 <= x < spec.q for r in rows for x in r):
        raise BadShape(f"F entries must lie in [0, {spec.q})")
    if len(rows) > k:
        raise BadShape(f"l = {len(rows)} exceeds k = {k}")
    rk = rank(rows, spec)
    if rk < len(rows):
        raise RankDeficient(f"rank {rk} < l = {len(rows)}")
    return LinearFunction(rows, spec)


def identity(k: int, spec: FieldSpec) -> LinearFunction:
    return linfunc_make([[int(i == j) for j in range(k)] for i in range(k)], spec)


def evaluate(f: LinearFunction, u: Word) -> Word:
    if len(u) != f.k:
        raise LengthMismatch(f"word length {len(u)} != k = {f.k}")
    spec = f.spec
    out = []
    for row in f.F:
        acc = 0
        for a, x in zip(row, u.elems):
            acc = spec.add(acc, spec.mul(a, x))
        out.append(acc)
    return Word(tuple(out), spec)


@dataclass(frozen=True)
class CosetPartition:
    """Fibers of ``f``; ``classes[v]`` holds the messages with ``f(u)`` of index ``v``."""

    classes: tuple[tuple[Word, ...], ...]

    @property
    def kernel(self) -> tuple[Word, ...]:
        return self.classes[0]


def _check_domain(f: LinearFunction) -> None:
    if f.spec.q**f.k > MAX_DOMAIN:
        raise DomainTooLarge(f"q^k = {f.spec.q ** f.k} exceeds {MAX_DOMAIN}")


def image_labels(f: LinearFunction) -> np.ndarray:
    """``f``-value index of every message, messages in global order (vectorized)."""
    _check_domain(f)
    spec = f.spec
    digits = kernels.word_digits(f.k, spec.q)
    F = f.matrix()
    mul, add = spec.mul_table, spec.add_table
    vals = np.zeros((digits.shape[0], f.l), dtype=np.int64)
    for i in range(f.l):
        acc = np.zeros(digits.shape[0], dtype=np.int64)
        for j in range(f.k):
            acc = add[acc, mul[F[i, j], digits[:, j]]]
        vals[:, i] = acc
    powers = spec.q ** np.arange(f.l - 1, -1, -1, dtype=np.int64)
    return vals @ powers


def coset_partition(f: LinearFunction) -> CosetPartition:
    labels = image_labels(f)
    spec = f.spec
    classes: list[list[Word]] = [[] for _ in range(spec.q**f.l)]
    for idx, lab in enumerate(labels.tolist()):
        classes[lab].append(Word.from_index(idx, f.k, spec))
    return CosetPartition(tuple(tuple(c) for c in classes))


def kernel_weight_sum(f: LinearFunction, b: int) -> int:
    """Sum of b-weights over ``ker(f)``."""
    from .bsymbol import b_weight

    _check_domain(f)
    return sum(b_weight(u, b) for u in coset_partition(f).kernel)


def full_rank_rref(spec: FieldSpec, l: int, k: int):  # noqa: E741
    """Every full-rank ``l x k`` matrix in reduced row echelon form.

    One per row space, hence one per kernel, which is all the requirement
    matrices depend on.
    """
    q = spec.q
    for pivots in combinations(range(k), l):
        free = [(i, c) for i in range(l) for c in range(pivots[i] + 1, k) if c not in pivots]
        for vals in product(range(q), repeat=len(free)):
            M = [[0] * k for _ in range(l)]
            for i, p in enumerate(pivots):
                M[i][p] = 1
            for (i, c), v in zip(free, vals):
                M[i][c] = v
            yield linfunc_make(M, spec)


def all_full_rank(spec: FieldSpec, l: int, k: int):  # noqa: E741
    """Every full-rank ``l x k`` matrix over GF(q) (brute force; keep q^(lk) small)."""
    q = spec.q
    for flat in product(range(q), repeat=l * k):
        rows = [flat[i * k : (i + 1) * k] for i in range(l)]
        if rank(rows, spec) == l:
            yield LinearFunction(tuple(tuple(r) for r in rows), spec)

"""b-symbol read vectors, b-weights and b-distances."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import FieldMismatch, LengthBelowWidth, LengthMismatch
from .gf import FieldSpec, Word, format_digits, word_sub


@dataclass(frozen=True)
class ReadVector:
    """The ``n`` cyclic width-``b`` windows of a word."""

    tuples: tuple[tuple[int, ...], ...]
    b: int

    @property
    def n(self) -> int:
        return len(self.tuples)

    def to_json(self, q: int) -> list[str]:
        return [format_digits(t, q) for t in self.tuples]


@dataclass(frozen=True)
class ChannelParams:
    b: int
    t: int

    def __post_init__(self):
        if self.b < 1:
            raise ValueError(f"b must be >= 1, got {self.b}")
        if self.t < 0:
            raise ValueError(f"t must be >= 0, got {self.t}")

    @property
    def degenerate(self) -> bool:
        return self.t == 0


def pi_b(u: Word, b: int) -> ReadVector:
    """Read vector of ``u``. Indices wrap mod ``n``, so ``n < b`` wraps more than once."""
    n = len(u)
    e = u.elems
    return ReadVector(tuple(tuple(e[(i + j) % n] for j in range(b)) for i in range(n)), b)


def is_degenerate(n: int, b: int) -> bool:
    """True when a length-``n`` word is read with windows wider than itself."""
    return 0 < n < b


def b_weight(u: Word, b: int) -> int:
    return sum(1 for tup in pi_b(u, b).tuples if any(tup))


def hamming_distance(u: Word, v: Word) -> int:
    _check(u, v)
    return sum(1 for a, c in zip(u.elems, v.elems) if a != c)


def read_distance(x: ReadVector, y: ReadVector) -> int:
    if x.n != y.n:
        raise LengthMismatch(f"read vectors of length {x.n} and {y.n}")
    return sum(1 for a, c in zip(x.tuples, y.tuples) if a != c)


def b_distance(u: Word, v: Word, b: int) -> int:
    """Hamming distance between ``pi_b(u)`` and ``pi_b(v)``."""
    _check(u, v)
    return read_distance(pi_b(u, b), pi_b(v, b))


def total_b_weight(spec: FieldSpec, k: int, b: int) -> int:
    """Sum of b-weights over all of GF(q)^k in closed form, ``k (q^k - q^(k-b))``."""
    if k < b:
        raise LengthBelowWidth(f"closed form needs k >= b, got k={k}, b={b}")
    q = spec.q
    return k * (q**k - q ** (k - b))


def total_b_weight_exhaustive(spec: FieldSpec, k: int, b: int) -> int:
    """Same sum by enumeration. Valid for any ``k``, including ``k < b``."""
    digits = kernels.word_digits(k, spec.q)
    if k == 0:
        return 0
    windows = kernels.window_ids(digits, spec.q, b)
    return int(np.count_nonzero(windows))


@lru_cache(maxsize=64)
def _table(n: int, q: int, b: int) -> np.ndarray:
    t = kernels.distance_table(n, q, b)
    t.setflags(write=False)
    return t


def distance_table(n: int, spec: FieldSpec, b: int) -> np.ndarray:
    """All-pairs ``d_b`` over length-``n`` words, indexed by :attr:`Word.index` (cached)."""
    return _table(n, spec.q, b)


def weight_vector(n: int, spec: FieldSpec, b: int) -> np.ndarray:
    """b-weight of every length-``n`` word, indexed by :attr:`Word.index`."""
    return distance_table(n, spec, b)[0]


def _check(u: Word, v: Word) -> None:
    if u.spec != v.spec:
        raise FieldMismatch(f"GF({u.spec.q}) vs GF({v.spec.q})")
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")


__all__ = [
    "ChannelParams",
    "ReadVector",
    "b_distance",
    "b_weight",
    "distance_table",
    "hamming_distance",
    "is_degenerate",
    "pi_b",
    "read_distance",
    "total_b_weight",
    "total_b_weight_exhaustive",
    "weight_vector",
    "word_sub",
]

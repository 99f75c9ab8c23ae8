"""Ground truth at tiny scale.

Validates systematic encoders ``u -> (u, p(u))`` against the ``2t+1``
cross-class b-distance demand, finds the exact optimal redundancy by
exhaustive search over encoders, and replays every bounded-weight window
substitution through a minimum-distance class decoder.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Hashable, Mapping

import numpy as np

from . import kernels
from .bsymbol import ChannelParams, ReadVector, b_distance, distance_table, pi_b, read_distance
from .errors import BudgetExhausted, DomainTooLarge, ShapeMismatch
from .gf import FieldSpec, Word, all_words
from .reqmatrix import Classifier

MAX_ORACLE_MESSAGES = 256
DEFAULT_PATTERN_BUDGET = 10**7


class _Ambiguous:
    def __repr__(self) -> str:
        return "Ambiguous"


Ambiguous = _Ambiguous()


@dataclass(frozen=True)
class EncoderMap:
    redundancy: Mapping[Word, Word]
    r: int

    def __post_init__(self):
        if any(len(p) != self.r for p in self.redundancy.values()):
            raise ShapeMismatch(f"every redundancy word must have length {self.r}")

    @property
    def messages(self) -> list[Word]:
        return sorted(self.redundancy)

    def encode(self, u: Word) -> Word:
        return u.concat(self.redundancy[u])

    def to_json(self) -> dict[str, str]:
        return {u.to_str(): self.redundancy[u].to_str() for u in self.messages}

    @classmethod
    def from_json(cls, data: Mapping[str, str], spec: FieldSpec) -> EncoderMap:
        red = {Word.parse(k, spec): Word.parse(v, spec) for k, v in data.items()}
        r = len(next(iter(red.values()))) if red else 0
        return cls(red, r)

    @classmethod
    def constant(cls, k: int, r: int, spec: FieldSpec) -> EncoderMap:
        zero = Word.zero(r, spec)
        return cls({u: zero for u in all_words(k, spec)}, r)


@dataclass(frozen=True)
class OracleResult:
    optimal_redundancy: int | None
    witness: EncoderMap | None
    encoders_examined: int
    status: str  # "exact" | "timeout"
    bracket: tuple[int, int | None] = (0, None)

    def to_json(self) -> dict:
        return {
            "optimal_redundancy": self.optimal_redundancy,
            "witness": self.witness.to_json() if self.witness else None,
            "encoders_examined": self.encoders_examined,
            "status": self.status,
            "bracket": list(self.bracket),
        }


def _check_scale(n_messages: int) -> None:
    if n_messages > MAX_ORACLE_MESSAGES:
        raise DomainTooLarge(f"{n_messages} messages exceed oracle cap {MAX_ORACLE_MESSAGES}")


def is_valid_fcbsc(enc: EncoderMap, classify: Classifier, params: ChannelParams) -> bool:
    msgs = enc.messages
    _check_scale(len(msgs))
    need = 2 * params.t + 1
    words = [enc.encode(u) for u in msgs]
    labels = [classify(u) for u in msgs]
    for i in range(len(msgs)):
        for j in range(i + 1, len(msgs)):
            if labels[i] != labels[j] and b_distance(words[i], words[j], params.b) < need:
                return False
    return True


def _dense_labels(msgs, classify) -> np.ndarray:
    seen: dict[Hashable, int] = {}
    return np.array([seen.setdefault(classify(u), len(seen)) for u in msgs], dtype=np.int64)


def exact_optimal_redundancy(
    classify: Classifier,
    spec: FieldSpec,
    k: int,
    params: ChannelParams,
    cap: int = 8,
    budget: int = 10**8,
) -> OracleResult:
    """Smallest ``r`` admitting a valid encoder, searched over ``r = 0..cap``.

    ``p(u_0)`` is pinned to zero (translation invariance). Each ``r`` below
    the answer is refuted by exhausting the encoder tree.
    """
    msgs = all_words(k, spec)
    _check_scale(len(msgs))
    labels = _dense_labels(msgs, classify)
    M = len(msgs)
    need = 2 * params.t + 1
    cross = labels[:, None] != labels[None, :]
    demand = np.where(cross, need, 0).astype(np.int64)
    q = spec.q
    idx = np.array([u.index for u in msgs], dtype=np.int64)
    nodes = 0
    for r in range(cap + 1):
        n = k + r
        if cross.any() and need > n:
            continue
        if q**n > kernels.MAX_TABLE_WORDS:
            return OracleResult(None, None, nodes, "timeout", (r, None))
        Q = q**r
        dist = distance_table(n, spec, params.b)
        cand = idx[:, None] * Q + np.arange(Q, dtype=np.int64)[None, :]
        ncand = np.full(M, Q, dtype=np.int64)
        ncand[0] = 1
        status, assign, used = kernels.dfs_assign(cand, ncand, demand, dist, budget - nodes)
        nodes += used
        if status == kernels.FOUND:
            red = {u: Word.from_index(int(a) % Q, r, spec) for u, a in zip(msgs, assign)}
            return OracleResult(r, EncoderMap(red, r), nodes, "exact", (r, r))
        if status == kernels.TIMEOUT:
            return OracleResult(None, None, nodes, "timeout", (r, None))
    return OracleResult(None, None, nodes, "timeout", (cap + 1, None))


def decode_function(y: ReadVector, enc: EncoderMap, classify: Classifier):
    """Class whose nearest codeword read vector is closest to ``y``; ``Ambiguous`` on ties."""
    msgs = enc.messages
    n = len(msgs[0]) + enc.r if msgs else 0
    if y.n != n or any(len(tup) != y.b for tup in y.tuples):
        raise ShapeMismatch(f"expected {n} windows of width {y.b}")
    best: dict[Hashable, int] = {}
    for u in msgs:
        d = read_distance(pi_b(enc.encode(u), y.b), y)
        lab = classify(u)
        if d < best.get(lab, n + 1):
            best[lab] = d
    lo = min(best.values())
    winners = [lab for lab, d in best.items() if d == lo]
    return winners[0] if len(winners) == 1 else Ambiguous


def _reads(enc: EncoderMap, b: int):
    msgs = enc.messages
    spec = msgs[0].spec
    n = len(msgs[0]) + enc.r
    digits = np.array([enc.encode(u).elems for u in msgs], dtype=np.int64).reshape(len(msgs), n)
    return msgs, kernels.window_ids(digits, spec.q, b), spec.q**b


def pattern_count(n: int, qb: int, wmin: int, wmax: int) -> int:
    return sum(comb(n, w) * (qb - 1) ** w for w in range(wmin, min(wmax, n) + 1))


def decode_failures_by_weight(
    enc: EncoderMap,
    classify: Classifier,
    params: ChannelParams,
    wmin: int,
    wmax: int,
    budget: int = DEFAULT_PATTERN_BUDGET,
) -> int:
    msgs, reads, qb = _reads(enc, params.b)
    _check_scale(len(msgs))
    total = len(msgs) * pattern_count(reads.shape[1], qb, wmin, wmax)
    if total > budget:
        raise BudgetExhausted(f"{total} (message, pattern) pairs exceed budget {budget}")
    return kernels.decode_failures(reads, _dense_labels(msgs, classify), qb, wmin, wmax)


def exhaustive_decode_check(
    enc: EncoderMap,
    classify: Classifier,
    params: ChannelParams,
    budget: int = DEFAULT_PATTERN_BUDGET,
) -> int:
    """Wrong or tied decodings over every message and every pattern of weight <= t."""
    return decode_failures_by_weight(enc, classify, params, 0, params.t, budget)

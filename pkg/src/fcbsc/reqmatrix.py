"""Irregular b-distance requirement matrices for a function over message words."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

import numpy as np

from .bsymbol import ChannelParams, b_distance, distance_table
from .errors import DomainTooLarge, DuplicateMessage, IndexOutOfRange, LengthMismatch
from .gf import Word, all_words
from .linfunc import LinearFunction

MAX_MESSAGES = 4096

Classifier = Callable[[Word], Hashable]


@dataclass(frozen=True)
class RequirementMatrix:
    entries: np.ndarray
    messages: tuple[Word, ...] = ()
    kind: str = "custom"

    @property
    def M(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, ij) -> int:
        return int(self.entries[ij])

    def to_csv(self) -> str:
        return "".join(",".join(str(int(x)) for x in row) + "\n" for row in self.entries)


def custom(entries: Sequence[Sequence[int]]) -> RequirementMatrix:
    arr = np.array(entries, dtype=np.int64).reshape(len(entries), -1)
    if arr.shape[0] != arr.shape[1]:
        raise ValueError(f"requirement matrix must be square, got {arr.shape}")
    if (arr < 0).any():
        raise ValueError("requirement entries must be non-negative")
    arr.setflags(write=False)
    return RequirementMatrix(arr, (), "custom")


def plus_clip(x: int) -> int:
    return max(int(x), 0)


def pairwise_b_distances(messages: Sequence[Word], b: int) -> np.ndarray:
    if not messages:
        return np.zeros((0, 0), dtype=np.int64)
    n, spec = len(messages[0]), messages[0].spec
    if any(len(u) != n for u in messages):
        raise LengthMismatch("messages have unequal lengths")
    if spec.q**n <= MAX_MESSAGES:
        idx = np.array([u.index for u in messages], dtype=np.int64)
        return distance_table(n, spec, b)[np.ix_(idx, idx)].astype(np.int64)
    M = len(messages)
    out = np.zeros((M, M), dtype=np.int64)
    for i in range(M):
        for j in range(i + 1, M):
            out[i, j] = out[j, i] = b_distance(messages[i], messages[j], b)
    return out


def _build(messages, classify, threshold, b, kind) -> RequirementMatrix:
    messages = tuple(messages)
    if len(messages) > MAX_MESSAGES:
        raise DomainTooLarge(f"M = {len(messages)} exceeds {MAX_MESSAGES}")
    if len(set(messages)) != len(messages):
        raise DuplicateMessage("message list contains repeats")
    d = pairwise_b_distances(messages, b)
    labels = [classify(u) for u in messages]
    codes = {lab: i for i, lab in enumerate(dict.fromkeys(labels))}
    lab = np.array([codes[x] for x in labels], dtype=np.int64)
    cross = lab[:, None] != lab[None, :]
    entries = np.where(cross, np.maximum(threshold - d, 0), 0).astype(np.int64)
    entries.setflags(write=False)
    return RequirementMatrix(entries, messages, kind)


def build_B1(messages: Sequence[Word], classify: Classifier, params: ChannelParams) -> RequirementMatrix:
    """Lower-bound demands: ``[2t - b + 2 - d_b(u_i, u_j)]^+`` across classes."""
    return _build(messages, classify, 2 * params.t - params.b + 2, params.b, "B1")


def build_B2(messages: Sequence[Word], classify: Classifier, params: ChannelParams) -> RequirementMatrix:
    """Upper-bound demands: ``[2t + b - d_b(u_i, u_j)]^+`` across classes."""
    return _build(messages, classify, 2 * params.t + params.b, params.b, "B2")


def for_linear(f: LinearFunction, params: ChannelParams, kind: str = "B1") -> RequirementMatrix:
    """B1 or B2 over all ``q^k`` messages in global order."""
    if f.spec.q**f.k > MAX_MESSAGES:
        raise DomainTooLarge(f"q^k = {f.spec.q ** f.k} exceeds {MAX_MESSAGES}")
    builder = {"B1": build_B1, "B2": build_B2}[kind]
    return builder(all_words(f.k, f.spec), f.label, params)


def column_zero_count(B: RequirementMatrix, j: int) -> int:
    if not 0 <= j < B.M:
        raise IndexOutOfRange(f"column {j} outside [0, {B.M})")
    return int(np.count_nonzero(B.entries[:, j] == 0))


def columns_are_permutations(B: RequirementMatrix) -> bool:
    if B.M == 0:
        return True
    ref = Counter(B.entries[:, 0].tolist())
    return all(Counter(B.entries[:, j].tolist()) == ref for j in range(1, B.M))


def entry_sum(B: RequirementMatrix) -> int:
    return int(B.entries.sum())


def entry_sum_lower_bound(q: int, k: int, l: int, b: int, t: int, s: int) -> int:  # noqa: E741
    """``q^k [(2t-b+2)(q^k - q^(k-l)) - k(q^k - q^(k-b)) + s]``; needs ``k >= b``."""
    return q**k * ((2 * t - b + 2) * (q**k - q ** (k - l)) - k * (q**k - q ** (k - b)) + s)

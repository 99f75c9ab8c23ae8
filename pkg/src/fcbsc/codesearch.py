"""Irregular-distance codebooks: validation, exact minimal length, greedy bracket."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .bsymbol import b_distance, distance_table
from .errors import DomainTooLarge, SizeMismatch
from .gf import FieldSpec, Word
from .reqmatrix import MAX_MESSAGES, RequirementMatrix, custom

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Codebook:
    """Ordered redundancy words, one per message index. Repeats are allowed."""

    words: tuple[Word, ...]
    b: int

    @property
    def r(self) -> int:
        return len(self.words[0]) if self.words else 0

    def to_json(self) -> list[str]:
        return [w.to_str() for w in self.words]


@dataclass(frozen=True)
class SearchResult:
    min_length: int | None
    witness: Codebook | None
    nodes_explored: int
    status: str  # "exact" | "timeout"
    bracket: tuple[int, int] = field(default=(0, 0))

    def to_json(self) -> dict:
        return {
            "min_length": self.min_length,
            "witness": self.witness.to_json() if self.witness else None,
            "nodes_explored": self.nodes_explored,
            "status": self.status,
            "bracket": list(self.bracket),
        }


def is_Bb_code(P: Codebook, B: RequirementMatrix) -> bool:  # noqa: N802
    """Does ``P`` in its given order meet every pairwise demand of ``B``?"""
    if len(P.words) != B.M:
        raise SizeMismatch(f"|P| = {len(P.words)} but B is {B.M}x{B.M}")
    for i in range(B.M):
        for j in range(i + 1, B.M):
            need = max(B[i, j], B[j, i])
            if need and b_distance(P.words[i], P.words[j], P.b) < need:
                return False
    return True


def uniform_demand_matrix(M: int, D: int) -> RequirementMatrix:
    if M < 1 or D < 0:
        raise ValueError(f"need M >= 1 and D >= 0, got M={M}, D={D}")
    return custom((np.ones((M, M), dtype=np.int64) - np.eye(M, dtype=np.int64)) * D)


def _demand(B: RequirementMatrix) -> np.ndarray:
    if B.M > MAX_MESSAGES:
        raise DomainTooLarge(f"M = {B.M} exceeds {MAX_MESSAGES}")
    d = np.maximum(B.entries, B.entries.T).astype(np.int64)
    np.fill_diagonal(d, 0)
    return d


def _codebook(ids: Sequence[int], r: int, spec: FieldSpec, b: int) -> Codebook:
    return Codebook(tuple(Word.from_index(int(x), r, spec) for x in ids), b)


def greedy_upper_bound(B: RequirementMatrix, spec: FieldSpec, b: int) -> int:
    """Smallest ``r`` at which first-fit assignment in word order succeeds."""
    return greedy_assign(B, spec, b).r


def greedy_assign(B: RequirementMatrix, spec: FieldSpec, b: int) -> Codebook:
    demand = _demand(B)
    M = B.M
    r = 0
    while True:
        if r == 0:
            if not demand.any():
                return _codebook([0] * M, 0, spec, b)
        elif demand.max() <= r and spec.q**r <= kernels.MAX_TABLE_WORDS:
            dist = distance_table(r, spec, b)
            chosen: list[int] = []
            for i in range(M):
                if chosen:
                    ok = np.all(dist[:, chosen] >= demand[i, : len(chosen)], axis=1)
                    hits = np.flatnonzero(ok)
                else:
                    hits = np.array([0])
                if hits.size == 0:
                    break
                chosen.append(int(hits[0]))
            else:
                return _codebook(chosen, r, spec, b)
        elif spec.q**r > kernels.MAX_TABLE_WORDS:
            raise DomainTooLarge(f"greedy reached r = {r} with q^r above {kernels.MAX_TABLE_WORDS}")
        r += 1


def min_length_search(
    B: RequirementMatrix,
    spec: FieldSpec,
    b: int,
    budget: int = DEFAULT_BUDGET,
) -> SearchResult:
    """Exact ``N_b(B)`` by depth-first assignment at ``r = 0, 1, 2, ...``.

    Index 0 is pinned to the zero word; ``d_b`` is translation invariant so
    this loses nothing. The greedy length caps the scan, and the witness at
    the minimum is the first valid assignment in global word order.
    """
    demand = _demand(B)
    M = B.M
    upper = greedy_upper_bound(B, spec, b)
    nodes = 0
    for r in range(upper + 1):
        if r == 0:
            if not demand.any():
                return SearchResult(0, _codebook([0] * M, 0, spec, b), 0, "exact", (0, 0))
            continue
        if demand.max() > r:
            # d_b never exceeds the number of windows
            continue
        Q = spec.q**r
        dist = distance_table(r, spec, b)
        cand = np.tile(np.arange(Q, dtype=np.int64), (M, 1))
        ncand = np.full(M, Q, dtype=np.int64)
        ncand[0] = 1
        status, assign, used = kernels.dfs_assign(cand, ncand, demand, dist, budget - nodes)
        nodes += used
        if status == kernels.FOUND:
            return SearchResult(r, _codebook(assign, r, spec, b), nodes, "exact", (r, r))
        if status == kernels.TIMEOUT:
            return SearchResult(None, None, nodes, "timeout", (r, upper))
    raise AssertionError("greedy length must admit an assignment")

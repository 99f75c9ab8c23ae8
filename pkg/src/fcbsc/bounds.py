"""Plotkin-like redundancy bounds for linear functions, in exact rationals.

The general form and each specialised closed form are coded separately so
that their agreement is a real check rather than a tautology.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import codesearch, oracle, reqmatrix
from .bsymbol import ChannelParams, is_degenerate
from .codesearch import SearchResult
from .errors import DomainTooLarge, LengthBelowWidth, WrongField
from .gf import FieldSpec
from .linfunc import LinearFunction, kernel_weight_sum

SEARCH_MAX_MESSAGES = 256


def _require_k_ge_b(k: int, b: int) -> None:
    if k < b:
        raise LengthBelowWidth(f"bound needs k >= b, got k={k}, b={b}")


def plotkin_value(q: int, k: int, l: int, b: int, t: int, s: int) -> Fraction:  # noqa: E741
    """General bound from raw parameters."""
    _require_k_ge_b(k, b)
    c = Fraction(q**b, q**b - 1)
    return c * (2 * t - b + 2) * (1 - Fraction(1, q**l)) - k + c * Fraction(s, q**k)


def plotkin_bound_linear(f: LinearFunction, params: ChannelParams) -> Fraction:
    _require_k_ge_b(f.k, params.b)
    s = kernel_weight_sum(f, params.b)
    return plotkin_value(f.spec.q, f.k, f.l, params.b, params.t, s)


def plotkin_symbol_pair(f: LinearFunction, t: int) -> Fraction:
    """Pair-read (``b = 2``) form: ``(q^2/(q^2-1))(2t)(1-q^-l) - k + (q^2/(q^2-1))(s/q^k)``."""
    _require_k_ge_b(f.k, 2)
    q, k, l = f.spec.q, f.k, f.l  # noqa: E741
    s = kernel_weight_sum(f, 2)
    c = Fraction(q * q, q * q - 1)
    return c * 2 * t * (1 - Fraction(1, q**l)) - k + c * Fraction(s, q**k)


def plotkin_fcspc(f: LinearFunction, t: int) -> Fraction:
    """Binary pair-read form: ``(8t/3)(1-2^-l) - k + s/(3 * 2^(k-2))``."""
    if f.spec.q != 2:
        raise WrongField(f"binary-only bound, got q={f.spec.q}")
    _require_k_ge_b(f.k, 2)
    k, l = f.k, f.l  # noqa: E741
    s = kernel_weight_sum(f, 2)
    return Fraction(8 * t, 3) * (1 - Fraction(1, 2**l)) - k + Fraction(s * 4, 3 * 2**k)


def plotkin_b1(f: LinearFunction, t: int) -> Fraction:
    """Single-symbol form, ``s`` taken with Hamming weights."""
    q, k, l = f.spec.q, f.k, f.l  # noqa: E741
    s = kernel_weight_sum(f, 1)
    return Fraction(q, q - 1) * (2 * t + 1) * (1 - Fraction(1, q**l)) - k + Fraction(s, (q - 1) * q ** (k - 1))


def ecc_bound(spec: FieldSpec, k: int, params: ChannelParams) -> Fraction:
    """Total length bound ``n = k + r`` for a bijective function."""
    q, b, t = spec.q, params.b, params.t
    return Fraction(q**b, q**b - 1) * (2 * t - b + 2) * (1 - Fraction(1, q**k))


def ecc_bound_symbol_pair_binary(k: int, t: int) -> Fraction:
    return Fraction(8 * t, 3) * (1 - Fraction(1, 2**k))


def ecc_bound_hamming(q: int, k: int, t: int) -> Fraction:
    return Fraction(q, q - 1) * (2 * t + 1) * (1 - Fraction(1, q**k))


def implied_redundancy(value: Fraction) -> int:
    """Smallest admissible integer redundancy; non-positive bounds imply 0."""
    return math.ceil(value) if value > 0 else 0


@dataclass
class BoundReport:
    params: dict
    s: int
    plotkin_value: Fraction
    plotkin_ceiling: int
    n_b_B1: SearchResult | None = None
    n_b_B2: SearchResult | None = None
    oracle_r: int | None = None
    oracle_result: oracle.OracleResult | None = None
    degenerate: bool = False

    def chain(self) -> list[tuple[str, object]]:
        """Present links of ``plotkin <= N_b(B1) <= oracle <= N_b(B2)`` as (name, value)."""
        out: list[tuple[str, object]] = [("plotkin", self.plotkin_value)]
        if self.n_b_B1 is not None and self.n_b_B1.status == "exact":
            out.append(("N_b(B1)", self.n_b_B1.min_length))
        if self.oracle_r is not None:
            out.append(("oracle", self.oracle_r))
        if self.n_b_B2 is not None and self.n_b_B2.status == "exact":
            out.append(("N_b(B2)", self.n_b_B2.min_length))
        return out

    def violations(self) -> list[str]:
        links = self.chain()
        bad = [f"{a} <= {b}" for (a, x), (b, y) in zip(links, links[1:]) if x > y]
        if self.oracle_r is not None and self.plotkin_ceiling > self.oracle_r:
            bad.append("ceil(plotkin) <= oracle")
        return bad

    @property
    def inconclusive(self) -> bool:
        parts = [self.n_b_B1, self.n_b_B2, self.oracle_result]
        return any(p is not None and p.status != "exact" for p in parts)

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "s": self.s,
            "plotkin_value": str(self.plotkin_value),
            "plotkin_num": self.plotkin_value.numerator,
            "plotkin_den": self.plotkin_value.denominator,
            "plotkin_ceiling": self.plotkin_ceiling,
            "n_b_B1": self.n_b_B1.to_json() if self.n_b_B1 else None,
            "n_b_B2": self.n_b_B2.to_json() if self.n_b_B2 else None,
            "oracle_r": self.oracle_r,
            "degenerate": self.degenerate,
        }


def sandwich_report(
    f: LinearFunction,
    params: ChannelParams,
    run_search: bool = False,
    run_oracle: bool = False,
    budget: int = codesearch.DEFAULT_BUDGET,
    oracle_cap: int = 8,
) -> BoundReport:
    q, k, l = f.spec.q, f.k, f.l  # noqa: E741
    value = plotkin_bound_linear(f, params)
    report = BoundReport(
        params={"q": q, "k": k, "l": l, "b": params.b, "t": params.t},
        s=kernel_weight_sum(f, params.b),
        plotkin_value=value,
        plotkin_ceiling=implied_redundancy(value),
        degenerate=params.degenerate,
    )
    if run_search:
        if q**k > SEARCH_MAX_MESSAGES:
            raise DomainTooLarge(f"q^k = {q**k} exceeds search cap {SEARCH_MAX_MESSAGES}")
        for kind in ("B1", "B2"):
            B = reqmatrix.for_linear(f, params, kind)
            res = codesearch.min_length_search(B, f.spec, params.b, budget)
            setattr(report, f"n_b_{kind}", res)
            if res.min_length is not None and is_degenerate(res.min_length, params.b):
                report.degenerate = True
    if run_oracle:
        res = oracle.exact_optimal_redundancy(f.label, f.spec, k, params, cap=oracle_cap, budget=budget)
        report.oracle_result = res
        report.oracle_r = res.optimal_redundancy
    return report


from fractions import Fraction
from itertools import product

import pytest

from fcbsc import bounds
from fcbsc.bsymbol import ChannelParams, b_distance
from fcbsc.errors import LengthBelowWidth, WrongField
from fcbsc.gf import Word, field_make
from fcbsc.linfunc import full_rank_rref, identity, linfunc_make

GF2, GF3 = field_make(2), field_make(3)


def brute_plotkin(q, k, l, b, t, s):  # noqa: E741
    """General form re-derived from the averaging argument, in plain fractions."""
    demand_sum = q**k * ((2 * t - b + 2) * (q**k - q ** (k - l)) - k * (q**k - q ** (k - b)) + s)
    per_length = Fraction(q ** (2 * k) * (q**b - 1), q**b)
    return Fraction(demand_sum) / per_length


@pytest.mark.parametrize(
    "F,b,t,want",
    [
        ([[1, 0, 0]], 2, 2, Fraction(5, 6)),
        ([[1, 0], [0, 1]], 2, 2, Fraction(2)),
        ([[1, 0]], 2, 1, Fraction(0)),
    ],
)
def test_plotkin_examples(F, b, t, want):
    f = linfunc_make(F, GF2)
    assert bounds.plotkin_bound_linear(f, ChannelParams(b, t)) == want


def test_plotkin_matches_averaging_argument():
    for spec in (GF2, GF3):
        for k in range(2, 4):
            for l in range(1, k + 1):  # noqa: E741
                for f, b, t in product(full_rank_rref(spec, l, k), (1, 2), (1, 2, 3)):
                    s = bounds.kernel_weight_sum(f, b)
                    assert bounds.plotkin_bound_linear(f, ChannelParams(b, t)) == brute_plotkin(spec.q, k, l, b, t, s)


def test_symbol_pair_form():
    f = linfunc_make([[1, 0]], GF2)
    assert bounds.plotkin_symbol_pair(f, 1) == 0
    g = linfunc_make([[1, 0]], GF3)
    # kernel {00, 01, 02}: b-weights 0, 2, 2
    assert bounds.kernel_weight_sum(g, 2) == 4
    assert bounds.plotkin_symbol_pair(g, 1) == bounds.plotkin_bound_linear(g, ChannelParams(2, 1))
    assert bounds.plotkin_symbol_pair(g, 1) == Fraction(9, 8) * 2 * Fraction(2, 3) - 2 + Fraction(9, 8) * Fraction(4, 9)


def test_fcspc_form():
    assert bounds.plotkin_fcspc(linfunc_make([[1, 0]], GF2), 1) == 0
    assert bounds.plotkin_fcspc(linfunc_make([[1, 0, 0]], GF2), 2) == Fraction(5, 6)
    with pytest.raises(WrongField):
        bounds.plotkin_fcspc(linfunc_make([[1, 0]], GF3), 1)


def test_b1_form():
    assert bounds.plotkin_b1(linfunc_make([[1, 0]], GF2), 1) == Fraction(3, 2)
    assert bounds.plotkin_b1(identity(2, GF2), 1) == Fraction(5, 2)


@pytest.mark.parametrize("b,k,t,want", [(2, 2, 2, 4), (2, 2, 1, 2), (1, 1, 1, 3)])
def test_ecc_bound_examples(b, k, t, want):
    assert bounds.ecc_bound(GF2, k, ChannelParams(b, t)) == want


def test_k_below_b_refused():
    with pytest.raises(LengthBelowWidth):
        bounds.plotkin_bound_linear(linfunc_make([[1, 0]], GF2), ChannelParams(3, 1))


@pytest.mark.parametrize("value,want", [(Fraction(5, 6), 1), (Fraction(-1, 2), 0), (Fraction(0), 0), (Fraction(2), 2)])
def test_implied_redundancy(value, want):
    assert bounds.implied_redundancy(value) == want


def test_increasing_in_t():
    f = linfunc_make([[1, 0, 0]], GF2)
    vals = [bounds.plotkin_bound_linear(f, ChannelParams(2, t)) for t in range(1, 5)]
    assert vals == sorted(set(vals))


def test_report_flags_off():
    rep = bounds.sandwich_report(linfunc_make([[1, 0]], GF2), ChannelParams(2, 1))
    assert rep.n_b_B1 is None and rep.oracle_r is None
    assert rep.chain() == [("plotkin", 0)]
    js = rep.to_json()
    assert (js["plotkin_num"], js["plotkin_den"], js["plotkin_ceiling"]) == (0, 1, 0)


def test_report_examples():
    rep = bounds.sandwich_report(linfunc_make([[1, 0]], GF2), ChannelParams(2, 1), True, True)
    assert [v for _, v in rep.chain()] == [0, 0, 1, 2]
    rep = bounds.sandwich_report(identity(1, GF2), ChannelParams(1, 1), True, True)
    assert [v for _, v in rep.chain()] == [2, 2, 2, 2]


def test_distance_sum_exhaustive_gf3():
    for r, b in product((1, 2), (1, 2)):
        pool = [Word.from_index(i, r, GF3) for i in range(3**r)]
        for cb in product(pool, repeat=3):
            total = sum(b_distance(x, y, b) for x in cb for y in cb)
            assert total * 3**b <= r * 9 * (3**b - 1)


def test_chain_gf3_small():
    # q = 3, k = 2, l = 1 at b = 1, t = 1 stays oracle-feasible
    f = linfunc_make([[1, 0]], GF3)
    rep = bounds.sandwich_report(f, ChannelParams(1, 1), True, True)
    assert rep.violations() == []
    assert not rep.inconclusive

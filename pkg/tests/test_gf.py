from itertools import product

import pytest

from fcbsc.errors import CompositeCharacteristic, FieldMismatch, LengthMismatch, ReduciblePolynomial, UnsupportedOrder, ZeroInverse
from fcbsc.gf import DEFAULT_MODULI, Word, all_words, field_from_order, field_make, inv, is_irreducible, mul, word_sub

SMALL = [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (2, 2), (2, 3), (2, 4), (3, 2)]


def test_prime_field():
    F = field_make(2)
    assert F.q == 2 and list(F.elements()) == [0, 1]


def test_gf4_with_explicit_modulus():
    F = field_make(2, 2, [1, 1, 1])
    assert F.q == 4
    # x^2 + x + 1 has no root in GF(2)
    assert all((a * a + a + 1) % 2 for a in range(2))
    assert F.add(2, 3) == 1  # x + (x+1) = 1


def test_composite_characteristic():
    with pytest.raises(CompositeCharacteristic):
        field_make(4, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(ReduciblePolynomial):
        field_make(2, 2, [1, 0, 1])  # (x+1)^2


def test_order_cap():
    with pytest.raises(UnsupportedOrder):
        field_make(2, 9)
    with pytest.raises(UnsupportedOrder):
        field_make(17, 2)


def test_field_from_order():
    assert field_from_order(9).p == 3
    with pytest.raises(CompositeCharacteristic):
        field_from_order(6)


@pytest.mark.parametrize("pm", sorted(DEFAULT_MODULI))
def test_default_moduli_irreducible(pm):
    p, m = pm
    assert is_irreducible(DEFAULT_MODULI[pm], p)
    F = field_make(p, m)
    # generator really generates
    assert len({int(F.exp_table[i]) for i in range(F.q - 1)}) == F.q - 1


@pytest.mark.parametrize(
    "field,a,b,want",
    [((2, 1, None), 1, 1, 1), ((5, 1, None), 2, 3, 1), ((2, 2, [1, 1, 1]), 2, 3, 1)],
)
def test_mul_examples(field, a, b, want):
    assert mul(a, b, field_make(*field)) == want


def test_inv_examples():
    assert inv(1, field_make(2)) == 1
    assert inv(3, field_make(7)) == 5
    for pm in SMALL:
        with pytest.raises(ZeroInverse):
            inv(0, field_make(*pm))


@pytest.mark.parametrize("pm", [pm for pm in SMALL if pm[0] ** pm[1] <= 16])
def test_field_axioms_exhaustive(pm):
    F = field_make(*pm)
    E = list(F.elements())
    for a, b in product(E, E):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
    for a, b, c in product(E, E, E):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in E:
        assert F.add(a, F.neg(a)) == 0
        assert F.mul(a, 1) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("pm", sorted(DEFAULT_MODULI) + [(p, 1) for p in (2, 3, 5, 7, 251)])
def test_inverse_every_supported_field(pm):
    F = field_make(*pm)
    assert all(F.mul(a, F.inv(a)) == 1 for a in range(1, F.q))


def test_word_sub_examples(gf2, gf3):
    assert word_sub(Word((0, 1, 0), gf2), Word((1, 0, 0), gf2)).elems == (1, 1, 0)
    assert word_sub(Word((2, 1), gf3), Word((1, 2), gf3)).elems == (1, 2)
    u = Word((2, 0, 1), gf3)
    assert (u - u).is_zero()


def test_word_sub_inverts_add(gf3, gf4):
    for F in (gf3, gf4):
        ws = all_words(2, F)
        for u, v in product(ws, ws):
            assert word_sub(u, v) + v == u


def test_word_sub_errors(gf2, gf3):
    with pytest.raises(LengthMismatch):
        word_sub(Word((0, 1), gf2), Word((0,), gf2))
    with pytest.raises(FieldMismatch):
        word_sub(Word((0, 1), gf2), Word((0, 1), gf3))


def test_word_order_and_index(gf3):
    ws = all_words(3, gf3)
    assert ws == sorted(ws)
    assert [w.index for w in ws] == list(range(27))
    assert Word.parse("012", gf3).elems == (0, 1, 2)
    assert Word.parse("012", gf3).to_str() == "012"


def test_digits_above_36():
    F = field_make(41)
    w = Word((40, 0, 3), F)
    assert Word.parse(w.to_str(), F) == w

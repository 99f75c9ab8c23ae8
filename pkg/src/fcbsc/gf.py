"""Small finite fields GF(p^m), q <= 256, and words over them.

Elements are canonical integers in ``[0, q)``: the base-p digits of the
integer are the polynomial coefficients, constant term least significant.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    CompositeCharacteristic,
    FieldMismatch,
    LengthMismatch,
    ReduciblePolynomial,
    UnsupportedOrder,
    ZeroInverse,
)

MAX_ORDER = 256

# Monic irreducible moduli, coefficients constant term first.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _poly_mod(a: list[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``mod`` over GF(p)."""
    a = [c % p for c in a]
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    out = a[:dm] if len(a) >= dm else a + [0] * (dm - len(a))
    return out


def _monic_polys(p: int, d: int) -> Iterator[list[int]]:
    for idx in range(p**d):
        coeffs = [(idx // p**i) % p for i in range(d)]
        yield coeffs + [1]


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Exhaustive factor test: no monic divisor of degree 1..m//2."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] % p != 1:
        return False
    for d in range(1, m // 2 + 1):
        for g in _monic_polys(p, d):
            if not any(_poly_mod(list(coeffs), g, p)):
                return False
    return True


def _to_digits(x: int, p: int, m: int) -> list[int]:
    return [(x // p**i) % p for i in range(m)]


def _from_digits(ds: Iterable[int], p: int) -> int:
    return sum(d * p**i for i, d in enumerate(ds))


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) with precomputed arithmetic tables. Build with :func:`field_make`."""

    p: int
    m: int
    modulus: tuple[int, ...]
    add_table: np.ndarray = field(repr=False, compare=False)
    neg_table: np.ndarray = field(repr=False, compare=False)
    mul_table: np.ndarray = field(repr=False, compare=False)
    exp_table: np.ndarray = field(repr=False, compare=False)
    log_table: np.ndarray = field(repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def generator(self) -> int:
        return int(self.exp_table[1])

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[(int(self.log_table[a]) + int(self.log_table[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return int(self.exp_table[(-int(self.log_table[a])) % (self.q - 1)])

    def to_config(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}


def _primitive_element(q: int, mul: np.ndarray) -> int:
    for g in range(1, q):
        x, order = g, 1
        while x != 1:
            x = int(mul[x, g])
            order += 1
        if order == q - 1:
            return g
    raise AssertionError("multiplicative group is always cyclic")


@lru_cache(maxsize=None)
def _build(p: int, m: int, modulus: tuple[int, ...]) -> FieldSpec:
    q = p**m
    digits = np.array([_to_digits(x, p, m) for x in range(q)], dtype=np.int64).reshape(q, m)
    weights = p ** np.arange(m)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    neg = ((-digits) % p) @ weights

    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        da = digits[a].tolist()
        for b in range(a, q):
            prod = [0] * (2 * m - 1)
            for i, ca in enumerate(da):
                if ca:
                    for j, cb in enumerate(digits[b].tolist()):
                        prod[i + j] += ca * cb
            r = _poly_mod(prod, modulus, p) if m > 1 else [prod[0] % p]
            mul[a, b] = mul[b, a] = _from_digits(r, p)

    g = _primitive_element(q, mul) if q > 2 else 1
    exp = np.zeros(2 * q, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    x = 1
    for i in range(q - 1):
        exp[i] = x
        log[x] = i
        x = int(mul[x, g])
    exp[q - 1 : 2 * q - 2] = exp[: q - 1]

    tables = [t.astype(np.int64) for t in (add, neg, mul, exp, log)]
    for t in tables:
        t.setflags(write=False)
    return FieldSpec(p, m, modulus, *tables)


def field_make(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build GF(p^m).

    ``modulus`` lists the coefficients of a monic irreducible polynomial of
    degree ``m``, constant term first. It is ignored for prime fields and
    defaults to a fixed built-in choice otherwise.
    """
    if not is_prime(p):
        raise CompositeCharacteristic(f"characteristic {p} is not prime")
    if m < 1:
        raise UnsupportedOrder(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise UnsupportedOrder(f"q = {p}^{m} exceeds {MAX_ORDER}")
    if m == 1:
        mod: tuple[int, ...] = (0, 1)
    else:
        if modulus is None:
            mod = DEFAULT_MODULI[(p, m)]
        else:
            mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or not is_irreducible(mod, p):
            raise ReduciblePolynomial(f"{list(mod)} is not a monic irreducible of degree {m} over GF({p})")
    return _build(p, m, mod)


def field_from_order(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    if q > MAX_ORDER:
        raise UnsupportedOrder(f"q = {q} exceeds {MAX_ORDER}")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise CompositeCharacteristic(f"q = {q} is not a prime power")
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1 or not is_prime(p):
        raise CompositeCharacteristic(f"q = {q} is not a prime power")
    return field_make(p, m, modulus)


_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True, order=True)
class Word:
    """A vector over GF(q). Ordered lexicographically, ``elems[0]`` first."""

    elems: tuple[int, ...]
    spec: FieldSpec = field(compare=False)

    def __post_init__(self):
        q = self.spec.q
        if any(not 0 <= e < q for e in self.elems):
            raise ValueError(f"element out of range for GF({q}): {self.elems}")

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]

    def __add__(self, other: Word) -> Word:
        _check_pair(self, other)
        at = self.spec.add_table
        return Word(tuple(int(at[a, b]) for a, b in zip(self.elems, other.elems)), self.spec)

    def __sub__(self, other: Word) -> Word:
        return word_sub(self, other)

    def scale(self, alpha: int) -> Word:
        return Word(tuple(self.spec.mul(alpha, a) for a in self.elems), self.spec)

    def is_zero(self) -> bool:
        return not any(self.elems)

    @property
    def index(self) -> int:
        """Position in the global word order (lexicographic, base q)."""
        q, idx = self.spec.q, 0
        for e in self.elems:
            idx = idx * q + e
        return idx

    @classmethod
    def from_index(cls, idx: int, n: int, spec: FieldSpec) -> Word:
        q = spec.q
        out = [0] * n
        for i in range(n - 1, -1, -1):
            idx, out[i] = divmod(idx, q)
        return cls(tuple(out), spec)

    @classmethod
    def zero(cls, n: int, spec: FieldSpec) -> Word:
        return cls((0,) * n, spec)

    def concat(self, other: Word) -> Word:
        if self.spec != other.spec:
            raise FieldMismatch("words live in different fields")
        return Word(self.elems + other.elems, self.spec)

    def to_str(self) -> str:
        return format_digits(self.elems, self.spec.q)

    @classmethod
    def parse(cls, text: str, spec: FieldSpec) -> Word:
        return cls(parse_digits(text, spec.q), spec)

    def __repr__(self) -> str:
        return f"Word({self.to_str()!r}, q={self.spec.q})"


def format_digits(elems: Sequence[int], q: int) -> str:
    if q <= len(_ALPHABET):
        return "".join(_ALPHABET[e] for e in elems)
    return ".".join(str(e) for e in elems)


def parse_digits(text: str, q: int) -> tuple[int, ...]:
    if q <= len(_ALPHABET):
        return tuple(_ALPHABET.index(c) for c in text.lower())
    return tuple(int(c) for c in text.split(".")) if text else ()


def all_words(n: int, spec: FieldSpec) -> list[Word]:
    """Every word of length ``n`` in global order."""
    return [Word.from_index(i, n, spec) for i in range(spec.q**n)]


def _check_pair(u: Word, v: Word) -> None:
    if u.spec != v.spec:
        raise FieldMismatch(f"GF({u.spec.q}) vs GF({v.spec.q})")
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")


def mul(a: int, b: int, spec: FieldSpec) -> int:
    return spec.mul(a, b)


def inv(a: int, spec: FieldSpec) -> int:
    return spec.inv(a)


def word_sub(u: Word, v: Word) -> Word:
    _check_pair(u, v)
    at, nt = u.spec.add_table, u.spec.neg_table
    return Word(tuple(int(at[a, nt[b]]) for a, b in zip(u.elems, v.elems)), u.spec)

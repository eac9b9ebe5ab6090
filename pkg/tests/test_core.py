from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from troposign.core import (
    BOT,
    NEG_INF,
    ONE,
    TOP,
    ZERO,
    Bal,
    Neg,
    Pos,
    SignedTrop,
    TropicalError,
    add,
    balances,
    from_pair,
    geq,
    gt,
    half,
    inverse,
    is_balanced,
    is_signed,
    leq,
    lt,
    modulus,
    mul,
    neg,
    power,
    sign_class,
    sqrt_pos,
    to_pair,
    tsum,
)
from oracles import table1_balance, table1_leq
from strategies import signed, sym


def test_addition_examples():
    assert add(Pos(2), Neg(3)) == Neg(3)
    assert add(Pos(2), Neg(2)) == Bal(2)
    assert add(ZERO, Bal(5)) == Bal(5)


def test_multiplication_examples():
    assert mul(Pos(2), Neg(3)) == Neg(5)
    assert mul(ZERO, Bal(7)) == ZERO
    assert mul(Bal(1), Pos(2)) == Bal(3)


def test_negation_examples():
    assert neg(Pos(4)) == Neg(4)
    assert neg(Bal(4)) == Bal(4)
    assert add(Pos(4), neg(Pos(4))) == Bal(4)


def test_modulus_examples():
    assert modulus(Neg(3)) == 3
    assert modulus(ZERO) == NEG_INF
    assert modulus(add(Pos(2), Neg(2))) == 2


def test_sign_classes():
    assert sign_class(Pos(0)) == "positive"
    assert sign_class(Bal(-3)) == "balanced"
    assert sign_class(ZERO) == "zero"
    assert is_signed(ZERO) and is_balanced(ZERO)


def test_sqrt_pos():
    assert sqrt_pos(Pos(6)) == Pos(3)
    assert sqrt_pos(ZERO) == ZERO
    assert sqrt_pos(Pos(-4)) == Pos(-2)
    with pytest.raises(TropicalError):
        sqrt_pos(Neg(1))


def test_order_examples():
    assert leq(Bal(3), Pos(1))
    assert leq(Pos(5), Bal(7)) and leq(Bal(7), Pos(4))
    assert not leq(Pos(5), Pos(4))


def test_balance_examples():
    assert not balances(Pos(2), Neg(2))
    assert balances(Bal(5), Pos(3))
    assert balances(Pos(2), Pos(2))


def test_chain():
    chain = [Pos(1), Pos(0), Pos(-1), ZERO, Neg(-1), Neg(0), Neg(1)]
    for a, b in zip(chain, chain[1:]):
        assert gt(a, b) and lt(b, a)


def _classes(mags):
    out = [ZERO]
    for m in mags:
        out += [Pos(m), Neg(m), Bal(m)]
    return out


@pytest.mark.parametrize("a", _classes(range(-2, 3)), ids=str)
def test_order_table_rows(a):
    for b in _classes(range(-2, 3)):
        assert leq(a, b) == table1_leq(a, b), (a, b)
        assert balances(a, b) == table1_balance(a, b), (a, b)


def test_pair_round_trip():
    for p, m in product([NEG_INF, -1, 0, 2], repeat=2):
        a = from_pair(p, m)
        assert from_pair(*to_pair(a)) == a


def test_pair_reduction():
    assert from_pair(3, 1) == Pos(3)
    assert from_pair(1, 3) == Neg(3)
    assert from_pair(2, 2) == Bal(2)
    assert from_pair(NEG_INF, NEG_INF) == ZERO


def test_extended_elements():
    assert add(TOP, Pos(3)) == TOP
    assert mul(ZERO, TOP) == ZERO
    with pytest.raises(TropicalError):
        add(BOT, Pos(1))


def test_power_and_inverse():
    assert power(Neg(2), 3) == Neg(6)
    assert power(Neg(2), 2) == Pos(4)
    assert power(Pos(5), 0) == ONE
    assert inverse(Neg(Fraction(3, 2))) == Neg(Fraction(-3, 2))
    with pytest.raises(TropicalError):
        inverse(Bal(1))


def test_half():
    assert half(6) == 3
    assert half(NEG_INF) == NEG_INF
    assert half(Fraction(1)) == Fraction(1, 2)


def test_tsum():
    assert tsum([]) == ZERO
    assert tsum([Pos(1), Neg(2), Pos(2)]) == Bal(2)


def test_bad_construction():
    with pytest.raises((TropicalError, ValueError)):
        SignedTrop("+", None)


@given(sym, sym, sym)
def test_semiring_axioms(a, b, c):
    assert add(a, add(b, c)) == add(add(a, b), c)
    assert add(a, b) == add(b, a)
    assert mul(a, mul(b, c)) == mul(mul(a, b), c)
    assert mul(a, b) == mul(b, a)
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, ZERO) == a
    assert mul(a, ONE) == a
    assert mul(a, ZERO) == ZERO


@given(sym, sym)
def test_modulus_is_a_morphism(a, b):
    assert modulus(add(a, b)) == max(modulus(a), modulus(b))
    assert modulus(mul(a, b)) == modulus(a) + modulus(b)


@given(sym)
def test_self_balance(a):
    assert balances(a, a)
    assert is_balanced(add(a, neg(a)))


@given(signed, signed)
def test_order_total_on_signed(a, b):
    assert leq(a, b) or leq(b, a)
    assert geq(a, b) == leq(b, a)


@given(signed, signed, signed)
def test_order_transitive_on_signed(a, b, c):
    if leq(a, b) and leq(b, c):
        assert leq(a, c)


@given(st.sampled_from(["+", "-"]), st.fractions(max_denominator=8))
def test_signed_values_are_signed(kind, m):
    a = Pos(m) if kind == "+" else Neg(m)
    assert is_signed(a) and not is_balanced(a)

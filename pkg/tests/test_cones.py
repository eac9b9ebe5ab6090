import random
from itertools import product

import pytest
from hypothesis import given

from troposign.cones import (
    cp_factorize,
    is_copositive,
    is_cp,
    is_cpsd,
    is_pd_signed,
    is_psd_signed,
    is_psd_trop,
)
from troposign.core import NEG_INF, ZERO, Neg, Pos, geq, gt
from troposign.corpus import random_psd_biased, random_trop_symmetric
from troposign.linalg import gram_trop, quadratic_form
from oracles import form_nonnegative_on_grid
from strategies import symmetric_trop

I = NEG_INF
REMARK = ((Pos(2), Pos(3)), (Pos(3), Pos(2)))


def test_psd_signed_examples():
    v = is_psd_signed(REMARK)
    assert not v.member
    assert (v.certificate["i"], v.certificate["j"]) == (0, 1)
    assert is_psd_signed(((Pos(2), Pos(2)), (Pos(2), Pos(2)))).member
    assert is_psd_signed(((Pos(1), ZERO), (ZERO, Pos(-3)))).member


def test_psd_certificate_is_a_violation():
    rng = random.Random(5)
    for _ in range(300):
        a = random_psd_biased(rng, rng.randint(1, 4))
        v = is_psd_signed(a)
        if not v.member and "x" in v.certificate:
            assert not geq(quadratic_form(a, v.certificate["x"]), ZERO)


def test_psd_trop_examples():
    assert not is_psd_trop(((2, 3), (3, 2))).member
    assert is_psd_trop(((1, 1), (1, 1))).member


def test_psd_trop_finite_characterization():
    for a, b, c in product(range(-2, 3), repeat=3):
        x = ((a, b), (b, c))
        assert is_psd_trop(x).member == (2 * b <= a + c)


def test_pd_examples():
    assert is_pd_signed(((Pos(0), Neg(-1)), (Neg(-1), Pos(0)))).member
    assert not is_pd_signed(((Pos(0), Pos(0)), (Pos(0), Pos(0)))).member
    assert not is_pd_signed(((ZERO,),)).member


def test_pd_is_strict():
    # strictly positive forms: x^T A x strictly above Zero for nonzero signed x on a grid
    rng = random.Random(8)
    grid = [ZERO] + [s(m) for m in (-1, 0, 1) for s in (Pos, Neg)]
    for _ in range(200):
        a = random_psd_biased(rng, 2)
        if is_pd_signed(a).member:
            for x in product(grid, repeat=2):
                if x != (ZERO, ZERO):
                    assert gt(quadratic_form(a, x), ZERO)


def test_cp_examples():
    x = ((2, 2), (2, 2))
    assert is_cp(x).member
    y = cp_factorize(x)
    assert y == ((1, I, 1), (I, 1, 1))
    assert gram_trop(y) == x
    assert not is_cp(((2, 3), (3, 2))).member
    assert not is_cp(((I, 0), (0, 1))).member
    assert is_cp(((0, I), (I, 0))).member
    with pytest.raises(ValueError):
        cp_factorize(((2, 3), (3, 2)))


def test_cpsd_examples():
    assert is_cpsd(((0, I), (I, 0))).member
    assert is_cpsd(((2, 2), (2, 2))).member
    assert not is_cpsd(((2, 3), (3, 2))).member


def test_copositive_examples():
    assert is_copositive(((Pos(0), Pos(5)), (Pos(5), Pos(0)))).member
    v = is_copositive(((Pos(0), Neg(5)), (Neg(5), Pos(0))))
    assert not v.member
    assert not geq(quadratic_form(((Pos(0), Neg(5)), (Neg(5), Pos(0))), v.certificate["x"]), ZERO)
    assert is_copositive(REMARK).member
    with pytest.raises(ValueError):
        is_copositive(((Pos(0), Pos(1)), (Pos(2), Pos(0))))


def test_psd_grid_oracle_n2_small():
    grid = [ZERO] + [s(m) for m in (-1, 0, 1) for s in (Pos, Neg)]
    for a, b, c in product(grid, repeat=3):
        m = ((a, b), (b, c))
        assert is_psd_signed(m).member == form_nonnegative_on_grid(m)
        assert is_copositive(m).member == form_nonnegative_on_grid(m, nonneg=True)


def test_collapse_on_random_matrices():
    rng = random.Random(9)
    for _ in range(300):
        x = random_trop_symmetric(rng, rng.randint(1, 4))
        a, b, c = is_cp(x).member, is_cpsd(x).member, is_psd_trop(x).member
        assert a == b == c


@given(symmetric_trop())
def test_cp_round_trip(x):
    if is_cp(x).member:
        y = cp_factorize(x)
        n = len(x)
        assert len(y) == n and all(len(r) == n * (n + 1) // 2 for r in y)
        assert gram_trop(y) == x


@given(symmetric_trop(max_n=3))
def test_psd_signed_embedding_agrees(x):
    assert is_psd_trop(x).member == is_cp(x).member

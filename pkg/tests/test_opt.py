import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from troposign.cones import is_copositive
from troposign.core import BOT, NEG_INF, ZERO, Bal, Neg, Pos, TropicalError, is_signed, leq, lt
from troposign.corpus import random_psd_biased
from troposign.linalg import quadratic_form
from oracles import ex_pol_table as pieces
from troposign.opt import (
    copositive_qp_value,
    eval_poly,
    minimize_poly,
    poly_roots,
    quad_objective,
    signed_poly,
    solve_quadratic,
)

EX_POL = (Pos(0), Pos(4), Pos(4))


def test_eval_examples():
    assert eval_poly(EX_POL, Neg(0)) == Bal(4)
    assert eval_poly(EX_POL, Pos(1)) == Pos(6)
    assert eval_poly(EX_POL, Neg(-2)) == Neg(2)


def test_eval_matches_case_table():
    for k in range(-32, 33):
        m = Fraction(k, 4)
        for x in (Pos(m), Neg(m)):
            assert eval_poly(EX_POL, x) == pieces(x), x
    assert eval_poly(EX_POL, ZERO) == pieces(ZERO)


def test_root_examples():
    assert poly_roots(EX_POL) == [Neg(0), Neg(-4)]
    assert poly_roots((Pos(0), ZERO, Pos(0))) == []
    assert poly_roots((Neg(5), Pos(0))) == [Pos(5)]


def test_minimize_examples():
    r = minimize_poly(EX_POL)
    assert r.value == Neg(4)
    assert r.kind == "limit" and r.point == Neg(0)
    assert r.attainment == "limit at ⊖0"
    assert minimize_poly((ZERO, Pos(0))).value == BOT
    r = minimize_poly((Pos(0), ZERO, Pos(0)))
    assert r.value == Pos(0) and r.point == ZERO and r.kind == "attained"
    assert minimize_poly((Pos(1), Pos(0), Neg(2))).value == BOT


def test_root_without_sign_change():
    # three monomials tie at ⊖0 but the value stays positive on both sides
    f = (Pos(0), Pos(0), Pos(0))
    assert Neg(0) in poly_roots(f)
    r = minimize_poly(f)
    assert r.value == Pos(0) and r.kind == "attained"
    assert _grid_inf(f) == Pos(0)


def test_signed_poly_trims():
    assert signed_poly((Pos(1), ZERO, ZERO)) == (Pos(1),)
    with pytest.raises(TropicalError):
        signed_poly((ZERO, ZERO))


def _grid_inf(f, step=Fraction(1, 8), lo=-10, hi=10):
    best = None
    m = Fraction(lo)
    xs = [ZERO]
    while m <= hi:
        xs += [Pos(m), Neg(m)]
        m += step
    for x in xs:
        y = eval_poly(f, x)
        if is_signed(y) and (best is None or lt(y, best)):
            best = y
    return best


poly_coeff = st.one_of(
    st.just(ZERO),
    st.integers(-3, 3).map(Pos),
    st.integers(-3, 3).map(Neg),
)


@settings(max_examples=200)
@given(st.lists(poly_coeff, min_size=2, max_size=4), st.integers(-3, 3))
def test_minimize_against_grid(low, lead):
    low = low[: len(low) - len(low) % 2]
    f = tuple(low) + (Pos(lead),)
    f = signed_poly(f)
    r = minimize_poly(f)
    if r.value == BOT:
        return
    best = _grid_inf(f)
    assert leq(r.value, best)
    if r.kind == "attained":
        assert eval_poly(f, r.point) == r.value
    else:
        # the grid gets within a small modulus gap of the infimum, same sign
        assert best.kind == r.value.kind
        assert abs(best.mag - r.value.mag) <= Fraction(len(f), 8)


REMARK_A = ((Pos(0), Neg(-1)), (Neg(-1), Pos(0)))


@pytest.mark.parametrize(
    "theta,xstar,xbar,value",
    [
        (0, (Neg(0), Neg(0)), (Neg(0), Neg(0)), Neg(0)),
        (Fraction(1, 2), (Neg(0), Neg(Fraction(1, 2))), (Neg(0), Neg(Fraction(1, 2))), Neg(1)),
        (2, (Neg(1), Neg(2)), (Neg(0), Neg(2)), Neg(4)),
    ],
)
def test_quadratic_remark_instance(theta, xstar, xbar, value):
    s = solve_quadratic(REMARK_A, (Pos(0), Pos(theta)))
    assert s.xstar == xstar and s.xbar == xbar and s.value == value
    assert (s.xstar != s.xbar) == (theta > 1)


def test_quadratic_trivial():
    a = ((Pos(0), ZERO), (ZERO, Pos(0)))
    s = solve_quadratic(a, (ZERO, ZERO))
    assert s.value == ZERO and s.xbar == (ZERO, ZERO)


def test_quadratic_value_is_approached():
    # the objective at x̄ shifted slightly toward zero is signed and near the value
    s = solve_quadratic(REMARK_A, (Pos(0), Pos(2)))
    eps = Fraction(1, 100)
    x = tuple(Neg(v.mag - eps) for v in s.xbar)
    y = quad_objective(REMARK_A, (Pos(0), Pos(2)), x)
    assert y.kind == "-" and 4 - y.mag <= 2 * eps


def test_quadratic_rejects_non_pd():
    with pytest.raises(TropicalError):
        solve_quadratic(((Pos(0), Pos(0)), (Pos(0), Pos(0))), (Pos(0), Pos(0)))


def test_copositive_qp():
    assert copositive_qp_value(((Pos(2), Pos(3)), (Pos(3), Pos(2)))) == (ZERO, None)
    a = ((Pos(0), Neg(5)), (Neg(5), Pos(0)))
    v, x = copositive_qp_value(a)
    assert v == BOT and all(leq(ZERO, xi) for xi in x)
    assert lt(quadratic_form(a, x), ZERO)
    v, x = copositive_qp_value(((Neg(3),),))
    assert v == BOT


def test_copositive_qp_random():
    rng = random.Random(4)
    for _ in range(300):
        a = random_psd_biased(rng, rng.randint(1, 4))
        v, x = copositive_qp_value(a)
        assert (v == ZERO) == is_copositive(a).member
        if x is not None:
            q = quadratic_form(a, x)
            assert is_signed(q) and lt(q, ZERO)
            assert q.mag is not None and q.mag > NEG_INF

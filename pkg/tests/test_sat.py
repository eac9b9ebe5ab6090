import random
from fractions import Fraction

import pytest

from troposign.core import ZERO, Neg, Pos
from troposign.sat import (
    DEFAULT_DOMAIN,
    FALSE,
    TRUE,
    cnf_satisfiable,
    decode,
    encode_3sat,
    feasibility_bruteforce,
    format_dimacs,
    parse_dimacs,
    random_3cnf,
    satisfies,
    x_index,
    y_index,
)


def test_single_clause_layout():
    system = encode_3sat([(1, -2, 3)])
    assert system.nvars == 6
    labels = [c.label for c in system.constraints]
    assert sum(lab.startswith("domain") for lab in labels) == 12
    assert sum(lab.startswith("link") for lab in labels) == 6
    clause = [c for c in system.constraints if c.label == "clause 1"]
    assert len(clause) == 2
    assert {i for i, _ in clause[0].lin} == {x_index(1), y_index(2), x_index(3)}
    assert clause[0].const == Neg(1)


def test_empty_cnf_is_feasible():
    res = feasibility_bruteforce(encode_3sat([], nvars=2))
    assert res.feasible


def test_forced_false_variable():
    cnf = [(1, 1, 1), (-1, -1, -1)]
    assert not feasibility_bruteforce(encode_3sat(cnf)).feasible
    assert not feasibility_bruteforce(encode_3sat([(1,), (-1,)])).feasible


def test_witness_decodes_to_model():
    cnf = [(1, -2, 3), (-1, 2), (2, 3, -3), (-3,)]
    res = feasibility_bruteforce(encode_3sat(cnf))
    assert res.feasible
    assert satisfies(cnf, decode(res.witness, 3))


def test_domain_constraint_factorization():
    system = encode_3sat([], nvars=1)
    dom = [c for c in system.constraints if c.label == "domain x1"]
    for s in DEFAULT_DOMAIN:
        x = [s, ZERO]
        assert all(c.holds(x) for c in dom)


def test_domain_constraint_forces_boolean_values():
    # over a wide signed grid only 0 and 1 satisfy s² ⊖ 1s ⊕ 1 ∇ 0
    system = encode_3sat([], nvars=1)
    dom = [c for c in system.constraints if c.label == "domain x1"]
    grid = [ZERO] + [s(Fraction(k, 4)) for k in range(-12, 13) for s in (Pos, Neg)]
    ok = [v for v in grid if all(c.holds([v, ZERO]) for c in dom)]
    assert ok == [FALSE, TRUE]


def test_wide_domain_agrees():
    grid = [ZERO, Neg(0), Neg(1), Pos(-1), FALSE, Pos(Fraction(1, 2)), TRUE, Pos(2)]
    for cnf in ([(1,)], [(1,), (-1,)], [(1, -1)]):
        a = feasibility_bruteforce(encode_3sat(cnf), grid).feasible
        assert a == (cnf_satisfiable(cnf) is not None)


def test_random_agreement():
    rng = random.Random(12)
    for _ in range(60):
        m = rng.randint(1, 6)
        cnf = random_3cnf(rng, m, rng.randint(0, 10))
        res = feasibility_bruteforce(encode_3sat(cnf, m))
        model = cnf_satisfiable(cnf, m)
        assert res.feasible == (model is not None)
        if res.feasible:
            assert satisfies(cnf, decode(res.witness, m))


def test_dimacs_round_trip():
    cnf = [(1, -2, 3), (-1,), (2, 3)]
    text = format_dimacs(3, cnf, "example")
    assert text.startswith("c example")
    assert parse_dimacs(text) == (3, cnf)


def test_dimacs_errors():
    with pytest.raises(ValueError):
        parse_dimacs("p cnf 2 1\n1 3 0\n")
    with pytest.raises(ValueError):
        parse_dimacs("1 2 0\n")
    with pytest.raises(ValueError):
        encode_3sat([(1, 2, 3, 4)])

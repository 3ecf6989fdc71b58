import json

import pytest

import braidcoh


def test_normal_form():
    assert braidcoh.normal_form("jordan", "y*x") == "x*y - 1/2*x^2"


def test_act_and_coproduct():
    assert braidcoh.act("jordan", 2, "y") == "y + 2*x"
    terms = braidcoh.coproduct("jordan", "x")
    assert sorted(terms) == [("1", ["1", "x"]), ("1", ["x", "1"])]


def test_super_jordan_dims():
    assert [len(braidcoh.basis("super-jordan", n)) for n in range(6)] == [1, 2, 3, 4, 5, 6]


def test_cohomology():
    assert braidcoh.cohomology("jordan", 3) == [1, 2, 1, 0]
    assert braidcoh.cohomology("super-jordan", 4) == [1, 2, 2, 2, 2]


def test_commutativity_rows():
    rep = braidcoh.verify_commutativity("super-jordan", 2, 2, 6)
    assert rep["pass"]
    assert {"p", "q", "generator", "lhs", "rhs", "sign", "pass"} <= set(rep["rows"][0])


def test_checks():
    assert braidcoh.verify_dec("jordan", 1, 2, 4)["pass"]
    assert braidcoh.verify_coduoid("jordan", 3, 6)["pass"]
    assert braidcoh.validate_resolution("super-jordan", 6)["pass"]


def test_cli_roundtrip():
    code, out, _ = braidcoh.run_cli(["cohomology", "--algebra", "jordan", "--max-h", "3"])
    assert code == 0
    assert json.loads(out) == {"H": [1, 2, 1, 0]}
    assert braidcoh.run_cli(["nf"])[0] == 2


def test_errors():
    with pytest.raises(ValueError):
        braidcoh.normal_form("jordan", "y*")
    with pytest.raises(ValueError):
        braidcoh.cohomology("heisenberg", 2)

import json
from fractions import Fraction

import pytest

import higgsdt


def test_partitions():
    assert higgsdt.partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert len(higgsdt.partitions(10)) == 42


def test_rank_one_genus_zero():
    assert higgsdt.idt(0, 1, 1) == [[("1", -1)]]
    w = higgsdt.omega(0, 1, 1)
    assert (w["sign"], w["half_power"], w["poly"]) == (-1, 3, [("1", 1)])
    assert higgsdt.volume(0, 1, 1, 0) == [("q^2", 1)]


def test_rank_one_genus_one():
    # (1 - t/a)(q - a), (-1)^p with p = 1
    expect = {"a1^1": -1, "t^1": 1, "q^1": 1, "q^1 t^1 a1^-1": -1}
    assert dict(higgsdt.idt(1, 1, 1)[0]) == {k: -v for k, v in expect.items()}


def test_canonical():
    a = dict(higgsdt.idt(1, rmax=1, canonical=True, t_one=True)[0])
    assert a == {"1": 1, "a1^1": -1, "q^1 a1^-1": -1, "q^1": 1}


def test_coefficients_are_python_ints():
    for poly in higgsdt.idt(1, 2, 3):
        for mono, c in poly:
            assert isinstance(mono, str)
            assert isinstance(c, int)


def test_oracle():
    r = higgsdt.oracle_p1(2, 1, 2, 1)
    assert r["equal"] and r["oracle"] == 32
    half = higgsdt.oracle_p1(3, 1, 1, 0)
    assert half["oracle"] == Fraction(9, 2)
    with pytest.raises(ValueError):
        higgsdt.oracle_p1(2, 1, 2, 2)


def test_specialize_and_stabilization():
    assert higgsdt.specialize(5, 2, rmax=1) == [-4]
    rep = higgsdt.stabilization(0, 1, 2, 8)
    assert rep["periodic"] and rep["matches"]


def test_invalid_parameters():
    with pytest.raises(ValueError):
        higgsdt.idt(0, -3, 1)


def test_cli_in_process():
    code, out, err = higgsdt.run_cli(["compute", "--genus", "0", "--ell", "1", "--rmax", "1"])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["schema"] == "higgsdt.compute/1"
    assert doc["results"][0]["volume"]["poly"] == [["q^2", 1]]
    code, _, err = higgsdt.run_cli(["verify", "bogus"])
    assert code == 2 and err

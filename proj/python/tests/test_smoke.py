from fractions import Fraction

import pytest

import torusfk


def test_hh_table_matches_reference():
    computed = torusfk.hh_table("Q", 8)
    assert computed == torusfk.reference_hh_table("Q")
    assert torusfk.hh_table("F2", 8, "skoldberg") == torusfk.reference_hh_table("F2")


def test_minimal_model_closed_form():
    ok, text = torusfk.minimal_model("Q", 8)
    assert ok
    assert torusfk.ainf_violations(text, 8) == 0


def test_m6_certificate():
    cert = torusfk.m6_certificate("Q")
    assert cert["cocycle"] and cert["nonzero"] and cert["chain_closed"]
    assert len(cert["values"]) == 4


def test_invariants_of_realized_structure():
    text = torusfk.mc_realize("2", "-1/3", 10)
    m6, m8 = torusfk.invariants(text)
    assert Fraction(m6) == 2
    assert Fraction(m8) == Fraction(-1, 3)


def test_series():
    assert torusfk.partition_series(6)[:6] == [1, 1, 2, 3, 5, 7]
    assert torusfk.jacobi_check(30)
    assert not any(torusfk.mu2_series(4))
    mu3 = torusfk.mu3_series(4)
    assert mu3 == [-c for c in torusfk.theta_v(len(mu3) - 1)]


def test_witness_signs():
    tris = torusfk.witnesses("triangle", 3)
    assert tris
    for w in tris:
        assert w["sign"] == (-1) ** ((w["q"] + w["r"] + w["s"]) % 2)
    with pytest.raises(ValueError):
        torusfk.witnesses("hexagon", 3)


def test_run_cli():
    code, out, err = torusfk.run_cli(["jacobi", "--order", "20"])
    assert code == 0
    code, _, _ = torusfk.run_cli(["m6", "--field", "F2"])
    assert code == 2

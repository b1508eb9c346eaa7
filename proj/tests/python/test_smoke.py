from fractions import Fraction

import pytest

import padic_periods as pp


def evaluate(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))


def test_xitilde_rational_special_values():
    p, u = 3, 4
    assert pp.xitilde(p, 1, "0..1", "{}") == [Fraction(1)]
    coeffs = pp.xitilde(p, 1, "0..1", "0..0")
    # j = 1 lies outside J': congruent to 1 modulo omega_0^(1), whose root is u - 1
    assert evaluate(coeffs, Fraction(u - 1)) == 1
    # j = 0 lies in J': congruent to xi_1 / p modulo omega_1, and xi_1(0) = p
    assert evaluate(coeffs, Fraction(0)) == 1
    assert len(coeffs) - 1 < (p - 1) * 1 + 2


def test_norm_bounds_hold():
    for n in (1, 2):
        r = pp.norm_bounds(5, n, "0..2", "0..1")
        assert r["ok"]
        assert r["lower"] <= r["attained"] <= r["upper"]


def test_unit_quotient_invariants():
    d = pp.unit_quotient(3, 2, "0..1")
    assert d["degree"] == 3
    assert d["mu"] == 0
    assert d["proven_bounds_ok"]


def test_polygons_katz_mazur():
    d = pp.polygons(3, [[Fraction(1, 3), 2], [0, 9]], [-1, 2])
    assert d["newton"] == [Fraction(-1), Fraction(2)]
    assert d["katz_mazur"]
    assert d["hodge"] == [Fraction(-1), Fraction(2)]


def test_pollack_and_recursion_reports():
    m = pp.dim2_module(3, 1, 0, 2)
    assert m["weights"] == [-1, 0]
    rep = pp.pollack_report(m, N=0, n_max=3)
    assert rep["all_ok"]
    rep = pp.z_recursion_report(m, N=1, n_max=3)
    assert rep["all_ok"] and len(rep["rows"]) == 3


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        pp.xitilde(4, 1, "0..1", "0..0")

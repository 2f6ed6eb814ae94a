import json
from fractions import Fraction

import pytest

import dfrob

F = Fraction


def test_basic_polynomials_forward():
    p = dfrob.basic_polynomials("forward", 3)
    assert p[2] == [0, -1, 1]
    assert p[3] == [0, 2, -3, 1]
    assert all(isinstance(c, Fraction) for c in p[3])


def test_bessel_zero_series_and_values():
    prob = dfrob.family_problem("bessel", nu="0")
    zeta = dfrob.solve_series(prob, 6)
    assert zeta == [1, 0, F(-1, 4), 0, F(1, 64), 0, F(-1, 2304)]
    u = dfrob.zeta_to_u(dfrob.solve_series(prob, 50), 50)
    assert u[:5] == [1, 1, F(1, 2), F(-1, 2), F(-13, 8)]
    res = dfrob.residuals(prob, u)
    assert res[0][0] == 2
    assert all(r == 0 for _, r in res)


def test_hermite_cubic():
    prob = dfrob.ordinary_problem([0, -2], [6], zeta0=0, zeta1=-12)
    u = dfrob.zeta_to_u(dfrob.solve_series(prob, 50), 50)
    assert u == [8 * n**3 - 24 * n**2 + 4 * n for n in range(51)]


def test_round_trip_lminus():
    zeta = [F(1, 3), -2, F(5, 7), 0, 1]
    u = dfrob.zeta_to_u(zeta, 4, lattice="Lminus")
    assert dfrob.u_to_zeta(u, lattice="Lminus") == zeta


def test_star_product_and_discretize():
    assert dfrob.star_product([1, 1], [1, -1]) == [1, 0, -1]
    eq = dfrob.discretize(dfrob.family_problem("bessel", nu="0"), length=3)
    assert eq["valid_from"] == 2
    assert eq["rows"][0] == (2, [(0, 2), (-1, -3), (-2, 2)])


def test_family_solutions_and_problem_json():
    sols = dfrob.family_solutions("constant", length=5, alpha="-3", beta="2")
    assert sols["u1"] == [3**n for n in range(6)]
    prob = dfrob.problem_from_json('{"kind":"ordinary","a":["0","−2"],"b":["6"]}')
    assert prob == dfrob.ordinary_problem([0, -2], [6])
    assert json.loads(prob.to_json())["kind"] == "ordinary"


def test_continuum_error_decreases():
    prob = dfrob.family_problem("airy")
    errs = [dfrob.continuum_error(prob, 1, n)[0] for n in (8, 16, 32, 64)]
    assert errs == sorted(errs, reverse=True)
    assert isinstance(errs[0], Fraction)


def test_errors():
    with pytest.raises(dfrob.NoAdmissibleRoot):
        dfrob.solve_series(dfrob.singular_problem([0, 1], [-2]), 4)
    with pytest.raises(dfrob.InvalidProblem):
        dfrob.singular_problem([1], [])
    with pytest.raises(dfrob.DfrobError):
        dfrob.problem_from_json('{"kind":"weird"}')
    with pytest.raises(TypeError):
        dfrob.star_product([0.5], [1])


def test_cli_in_process():
    code, out, _ = dfrob.run_cli(["verify", "--family", "hermite", "--lambda", "3"])
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("PASS")
    assert dfrob.run_cli(["bogus"])[0] == 1

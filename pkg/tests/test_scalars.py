"""Exact scalar towers: rationals, rational functions, polynomials."""

import pytest

from braucas.scalars import (Q, QONE, RatFunc, RF_ONE, RF_ZERO, OMEGA,
                             UPoly, MPoly, PoleError)


def test_ratfunc_reduction_canonical():
    # (w^2 - 1)/(w - 1) reduces to w + 1
    r = RatFunc((Q(-1), Q(0), QONE), (Q(-1), QONE))
    assert r == RatFunc((QONE, QONE))
    # denominator normalized monic: 2/(2w) == 1/w
    assert RatFunc((Q(2),), (Q(0), Q(2))) == RatFunc((QONE,), (Q(0), QONE))


def test_ratfunc_field_arithmetic():
    a = RatFunc((QONE,), (Q(3), QONE))          # 1/(w+3)
    b = RatFunc((Q(2), QONE))                   # w+2
    assert a * b + a == RatFunc((Q(3), QONE), (Q(3), QONE))  # (w+3)/(w+3)
    assert a * b + a == RF_ONE
    assert (a - a) == RF_ZERO
    assert (b / b) == RF_ONE
    assert OMEGA * OMEGA - 1 == (OMEGA - 1) * (OMEGA + 1)


def test_ratfunc_eval_and_poles():
    a = RatFunc((QONE,), (Q(3), QONE))
    assert a.eval(Q(0)) == Q(1, 3)
    with pytest.raises(PoleError):
        a.eval(Q(-3))
    # removable singularity disappears after reduction
    r = RatFunc((Q(-9), Q(0), QONE), (Q(3), QONE))  # (w^2-9)/(w+3) = w-3
    assert r.eval(Q(-3)) == Q(-6)


def test_ratfunc_json_roundtrip():
    r = RatFunc((Q(1, 2), QONE), (Q(-5), Q(0), QONE))
    assert RatFunc.from_json(r.to_json()) == r


def test_upoly_basics():
    u = UPoly.u()
    p = (u + 1) * (u - 1)
    assert p.coeff(0) == Q(-1) and p.coeff(2) == QONE and p.degree() == 2
    assert p.eval(Q(3)) == Q(8)
    # p(u + 1/2) - p(u - 1/2) = 2u for p = u^2 - 1
    diff = p.compose_linear(1, Q(1, 2)) - p.compose_linear(1, Q(-1, 2))
    assert diff == UPoly((Q(0), Q(2)))
    # parity: p(-u) == p(u) for the even p
    assert p.compose_linear(-1, 0) == p


def test_mpoly_ring_and_substitution():
    x, y = MPoly.var("l1"), MPoly.var("l2")
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.substitute("l2", MPoly.const(Q(0))) == x * x
    # variable order: u sorts before l's regardless of insertion
    q = y * MPoly.var("u")
    assert q.vars[0] == "u"


def test_mpoly_coeff_extraction_and_json():
    u, x = MPoly.var("u"), MPoly.var("l1")
    p = u * u * x + u * (x + 1) + MPoly.const(Q(7))
    assert p.coeff_of_var_power("u", 2) == x
    assert p.coeff_of_var_power("u", 1) == x + 1
    assert MPoly.from_json(p.to_json()).trim() == p.trim()


def test_mpoly_omega_coefficients():
    x = MPoly.var("l1")
    p = x * OMEGA  # RatFunc coefficient
    assert p.eval_omega(Q(5)) == x * Q(5)

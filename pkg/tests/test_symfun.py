"""Factorial symmetric polynomials and closed-form image targets."""

import itertools
import random

from braucas.scalars import Q, MPoly
from braucas import symfun
from braucas.symfun import (ShiftConfig, factorial_e, factorial_h,
                            a_lambda, partitions_upto, vanishing_check,
                            binom, alpha, target_chi)


def test_shift_config():
    assert ShiftConfig("o", 4).eps == 0
    assert ShiftConfig("o", 5).eps == Q(1, 2)
    assert ShiftConfig("sp", 4).eps == 1
    s = ShiftConfig("sp", 6)
    assert [s.a(i) for i in (1, 2, 3)] == [1, 4, 9]
    assert [s.rho(i) for i in (1, 2, 3)] == [3, 2, 1]


def test_classical_limit_bruteforce():
    rng = random.Random(99)
    zero = lambda i: Q(0)
    for n in (2, 3):
        for k in range(1, 5):
            zs = [Q(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
            def prod(c):
                out = Q(1)
                for v in c:
                    out *= v
                return out
            e_brute = sum((prod(c) for c in
                           itertools.combinations(zs, k)), Q(0))
            h_brute = sum((prod(c) for c in
                           itertools.combinations_with_replacement(zs, k)),
                          Q(0))
            assert factorial_e(k, zs, zero) == e_brute
            assert factorial_h(k, zs, zero) == h_brute


def test_degree_bounds():
    s = ShiftConfig("o", 4)
    zs = [Q(5), Q(7)]
    assert factorial_e(3, zs, s.a) == 0  # k > n: empty sum
    assert factorial_e(0, zs, s.a) == 1
    assert factorial_h(0, zs, s.a) == 1


def test_vanishing_families():
    for family, N in [("o", 4), ("o", 5), ("o", 6), ("sp", 4), ("sp", 6)]:
        s = ShiftConfig(family, N)
        for kind in ("e", "h"):
            for k in (1, 2, 3):
                assert vanishing_check(kind, k, s), (family, N, kind, k)


def test_a_lambda_values():
    s = ShiftConfig("sp", 4)  # eps=1, n=2: a_i = i^2
    # lambda = (2,1): l = (lambda_1 + 2, lambda_2 + 1) = (4, 2)
    assert a_lambda((2, 1), s) == (16, 4)
    assert a_lambda((), s) == (4, 1)


def test_partitions_upto():
    ps = partitions_upto(3, 2)
    assert set(ps) == {(), (1,), (2,), (3,), (1, 1), (2, 1)}


def test_binom_and_alpha():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0           # 0 <= a < k vanishes
    assert binom(-3, 2) == 6          # generalized: (-3)(-4)/2
    assert binom(Q(1, 2), 2) == Q(-1, 8)
    assert alpha(3, 2) == Q(5, 3)


def test_target_chi_smallest_cases():
    # one-leg antisymmetric target: chi = binom(N, 1) * u
    chi = target_chi("o", "asym", 1, 4)
    assert chi == MPoly.var("u") * Q(4)
    # one-leg symplectic symmetric target: chi = -binom(2n+1, 1) * u... the
    # r=0 coefficient is (-1)^0 binom(2n+1, 1) = 2n+1
    chi_sp = target_chi("sp", "sym", 1, 4)
    assert chi_sp == MPoly.var("u") * Q(5)


def test_target_chi_two_legs_orth_sym():
    # m=2: alpha_2 [ binom(N+0, 2)(u-1/2)(u+1/2) + h_1(l^2|a) ]
    N = 3
    s = ShiftConfig("o", N)
    u = MPoly.var("u")
    zs = symfun.shifted_weight_squares(s)
    expect = (factorial_h(0, zs, s.a) * (u - Q(1, 2)) * (u + Q(1, 2))
              * (alpha(N, 2) * binom(N, 2))
              + factorial_h(1, zs, s.a) * alpha(N, 2))
    assert target_chi("o", "sym", 2, N) == expect.trim()


def test_target_chi_numeric_u():
    chi = target_chi("o", "asym", 1, 4, u=Q(2))
    assert chi == MPoly.const(Q(8))

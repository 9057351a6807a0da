"""Factorial symmetric polynomials and the closed-form eigenvalue targets.

The factorial elementary and complete symmetric polynomials deform the
classical e_k, h_k along a content sequence a = (a_1, a_2, ...):

    e_k(z|a) = sum over p_1 < ... < p_k of
               (z_{p_1} - a_{p_1}) (z_{p_2} - a_{p_2 - 1}) ...
               (z_{p_k} - a_{p_k - k + 1}),
    h_k(z|a) = sum over p_1 <= ... <= p_k of
               (z_{p_1} - a_{p_1}) (z_{p_2} - a_{p_2 + 1}) ...
               (z_{p_k} - a_{p_k + k - 1}).

For each classical family the sequence is a_i = (eps + i - 1)^2 with
eps = 0 (o_{2n}), 1/2 (o_{2n+1}), 1 (sp_2n), and the natural arguments
are z_i = l_i^2 where l_i = lambda_i + n - i + eps.  `target_chi` builds
the four closed-form Harish-Chandra targets (symmetrizer and
anti-symmetrizer, orthogonal and symplectic) as polynomials in u and
lambda, fully expanded in the lambda basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalars import Q, MPoly
from .tensor import ActionConfig


@dataclass(frozen=True)
class ShiftConfig:
    """rho-shift and content-sequence data for one classical family."""
    family: str
    N: int

    @property
    def cfg(self):
        return ActionConfig(self.family, self.N)

    @property
    def n(self):
        return self.N // 2

    @property
    def eps(self):
        if self.family == "sp":
            return Q(1)
        return Q(1, 2) if self.N % 2 else Q(0)

    def a(self, i):
        """a_i = (eps + i - 1)^2, 1-based."""
        v = self.eps + i - 1
        return v * v

    def rho(self, i):
        return self.n - i + self.eps


def factorial_e(k, zs, a):
    """Factorial elementary symmetric polynomial e_k(z|a).

    zs may hold numbers or MPoly values; `a` is a callable i -> a_i.
    Zero for k > n, the empty sum.
    """
    n = len(zs)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return _one_like(zs)
    total = None
    for ps in itertools.combinations(range(1, n + 1), k):
        term = None
        for j, p in enumerate(ps, start=1):
            factor = zs[p - 1] - a(p - j + 1)
            term = factor if term is None else term * factor
        total = term if total is None else total + term
    return total if total is not None else _zero_like(zs)


def factorial_h(k, zs, a):
    """Factorial complete symmetric polynomial h_k(z|a)."""
    n = len(zs)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return _one_like(zs)
    total = None
    for ps in itertools.combinations_with_replacement(range(1, n + 1), k):
        term = None
        for j, p in enumerate(ps, start=1):
            factor = zs[p - 1] - a(p + j - 1)
            term = factor if term is None else term * factor
        total = term if total is None else total + term
    return total if total is not None else _zero_like(zs)


def _one_like(zs):
    if zs and isinstance(zs[0], MPoly):
        return MPoly.const(1)
    return Q(1)


def _zero_like(zs):
    if zs and isinstance(zs[0], MPoly):
        return MPoly()
    return Q(0)


def a_lambda(partition, shift: ShiftConfig):
    """The n-tuple (a_{lambda_1+n}, ..., a_{lambda_n+1}) = (l_1^2, ..., l_n^2)."""
    n = shift.n
    parts = list(partition) + [0] * (n - len(partition))
    if len(parts) != n or any(parts[i] < parts[i + 1] for i in range(n - 1)):
        raise ValueError(f"not a partition of length <= {n}: {partition}")
    return tuple(shift.a(parts[i] + n - i) for i in range(n))


def partitions_upto(max_weight, max_length):
    """All partitions with |lambda| <= max_weight and length <= max_length."""
    out = [()]
    def rec(prefix, remaining, cap):
        for part in range(min(remaining, cap), 0, -1):
            if len(prefix) + 1 <= max_length:
                nxt = prefix + (part,)
                out.append(nxt)
                rec(nxt, remaining - part, part)
    rec((), max_weight, max_weight)
    return out


def vanishing_check(kind, k, shift: ShiftConfig, max_weight=6):
    """Exhaustively confirm the vanishing family for one (kind, k).

    e_k(a_lambda|a) = 0 whenever ell(lambda) < k, and
    h_k(a_lambda|a) = 0 whenever lambda_1 < k, over all partitions with
    |lambda| <= max_weight and length <= n.
    """
    n = shift.n
    for lam in partitions_upto(max_weight, n):
        if kind == "e":
            if len(lam) >= k:
                continue
            val = factorial_e(k, list(a_lambda(lam, shift)), shift.a)
        elif kind == "h":
            if (lam[0] if lam else 0) >= k:
                continue
            val = factorial_h(k, list(a_lambda(lam, shift)), shift.a)
        else:
            raise ValueError(f"kind must be 'e' or 'h', got {kind!r}")
        if val != 0:
            return False
    return True


def binom(a, k):
    """Generalized binomial coefficient; 0 for 0 <= a < k, exact otherwise."""
    if k < 0:
        return Q(0)
    out = Q(1)
    for i in range(k):
        out = out * Q(a - i, i + 1)
    return out


def alpha(N, m):
    """alpha_m = (N + 2m - 2) / (N + m - 2), the orthogonal normalization."""
    return Q(N + 2 * m - 2, N + m - 2)


def shifted_weight_squares(shift: ShiftConfig):
    """[(lambda_i + rho_i)^2] as MPolys in l1..ln."""
    out = []
    for i in range(1, shift.n + 1):
        li = MPoly.var(f"l{i}") + shift.rho(i)
        out.append(li * li)
    return out


def target_chi(family, projector, m, N, u="symbolic"):
    """Closed-form Harish-Chandra target for one family and projector.

    Returns the expanded MPoly in (u, l1..ln) (or just l's when u is a
    number): a weighted sum of factorial e_r or h_r at z = l^2 times
    falling products in u.  projector is "sym" or "asym".
    """
    shift = ShiftConfig(family, N)
    n = shift.n
    zs = shifted_weight_squares(shift)
    uval = MPoly.var("u") if u == "symbolic" else MPoly.const(Q(u))
    total = MPoly()
    for r in range(m // 2 + 1):
        if family == "o" and projector == "sym":
            coeff = alpha(N, m) * binom(N + m - 2, m - 2 * r)
            base = factorial_h(r, zs, shift.a)
        elif family == "o" and projector == "asym":
            coeff = Q((-1) ** r) * binom(N - 2 * r, m - 2 * r)
            base = factorial_e(r, zs, shift.a)
        elif family == "sp" and projector == "sym":
            coeff = Q((-1) ** r) * binom(2 * n - 2 * r + 1, m - 2 * r)
            base = factorial_e(r, zs, shift.a)
        elif family == "sp" and projector == "asym":
            coeff = binom(2 * n + m - 1, m - 2 * r)
            base = factorial_h(r, zs, shift.a)
        else:
            raise ValueError(f"unknown target {family!r}/{projector!r}")
        if not coeff:
            continue
        prod = MPoly.const(1)
        for i in range(m - 2 * r):
            prod = prod * (uval + (r + i - Q(m - 1, 2)))
        total = total + base * prod * coeff
    return total.trim()

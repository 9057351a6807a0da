"""Sparse exact operators on (C^N)^{x m} and the Brauer algebra actions.

Multi-indices are encoded base N: the m-tuple (i_1, ..., i_m) with
1 <= i_a <= N becomes sum_a (i_a - 1) * N^(m-a).  Operators are plain
dicts (row, col) -> value; values may be ints, rationals, or RatFunc
(omega kept symbolic).

The orthogonal action sends s_ab -> P_ab, eps_ab -> Q_ab; the symplectic
action sends s_ab -> -P_ab, eps_ab -> -Q_ab with the sign-twisted Q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import Q, RatFunc
from . import brauer


@dataclass(frozen=True)
class ActionConfig:
    """Which classical family acts, and on what dimension."""
    family: str  # "o" or "sp"
    N: int

    def __post_init__(self):
        if self.family not in ("o", "sp"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "sp" and self.N % 2:
            raise ValueError("symplectic requires even N")
        if self.N < 2:
            raise ValueError("need N >= 2")

    @property
    def n(self):
        return self.N // 2

    def prime(self, i):
        return self.N - i + 1

    def sign(self, i):
        """epsilon_i: all +1 orthogonal; +-1 split at n for symplectic."""
        if self.family == "o":
            return 1
        return 1 if i <= self.n else -1

    @property
    def omega_value(self):
        return self.N if self.family == "o" else -self.N


class TensorOp:
    """Sparse operator on (C^N)^{x m}."""

    __slots__ = ("N", "m", "entries")

    def __init__(self, N, m, entries=None):
        self.N = N
        self.m = m
        self.entries = {}
        if entries:
            for rc, v in entries.items():
                if v:
                    self.entries[rc] = v

    @classmethod
    def identity(cls, N, m):
        op = cls(N, m)
        for i in range(N ** m):
            op.entries[(i, i)] = 1
        return op

    def index(self, tup):
        """Encode a 1-based m-tuple."""
        idx = 0
        for i in tup:
            idx = idx * self.N + (i - 1)
        return idx

    def tuple_of(self, idx):
        digits = []
        for _ in range(self.m):
            digits.append(idx % self.N + 1)
            idx //= self.N
        return tuple(reversed(digits))

    def _check(self, other):
        if self.N != other.N or self.m != other.m:
            raise ValueError("dimension mismatch")

    def __eq__(self, other):
        return (isinstance(other, TensorOp) and self.N == other.N
                and self.m == other.m and self.entries == other.entries)

    def __bool__(self):
        return bool(self.entries)

    def __add__(self, other):
        self._check(other)
        out = dict(self.entries)
        for rc, v in other.entries.items():
            s = out.get(rc, 0) + v
            if s:
                out[rc] = s
            else:
                out.pop(rc, None)
        res = TensorOp(self.N, self.m)
        res.entries = out
        return res

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        res = TensorOp(self.N, self.m)
        if c:
            res.entries = {rc: v * c for rc, v in self.entries.items()}
        return res

    def __mul__(self, other):
        """Operator product self . other (self applied after other)."""
        self._check(other)
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                s = out.get((r, c), 0) + v * w
                if s:
                    out[(r, c)] = s
                else:
                    out.pop((r, c), None)
        res = TensorOp(self.N, self.m)
        res.entries = out
        return res

    def full_trace(self):
        tot = 0
        for (r, c), v in self.entries.items():
            if r == c:
                tot = tot + v
        return tot

    def partial_trace(self, leg):
        """Contract the given leg (1-based); result acts on m-1 legs."""
        if not (1 <= leg <= self.m):
            raise ValueError(f"leg {leg} out of range for m={self.m}")
        N, m = self.N, self.m
        hi = N ** (m - leg)          # strides below the contracted digit
        out = {}
        for (r, c), v in self.entries.items():
            rd, ru = r % hi, r // hi
            cd, cu = c % hi, c // hi
            if ru % N != cu % N:
                continue
            nr = (ru // N) * hi + rd
            nc = (cu // N) * hi + cd
            s = out.get((nr, nc), 0) + v
            if s:
                out[(nr, nc)] = s
            else:
                out.pop((nr, nc), None)
        res = TensorOp(N, m - 1)
        res.entries = out
        return res

    def map_values(self, f):
        res = TensorOp(self.N, self.m)
        for rc, v in self.entries.items():
            w = f(v)
            if w:
                res.entries[rc] = w
        return res

    def eval_omega(self, w0):
        return self.map_values(
            lambda v: v.eval(w0) if isinstance(v, RatFunc) else v)

    def to_json(self):
        return {"N": self.N, "m": self.m,
                "entries": [[list(self.tuple_of(r)), list(self.tuple_of(c)),
                             v.to_json() if isinstance(v, RatFunc) else str(v)]
                            for (r, c), v in sorted(self.entries.items())]}

    def __repr__(self):
        return (f"TensorOp(N={self.N}, m={self.m}, "
                f"nnz={len(self.entries)})")


def op_P(cfg, m, a, b):
    """The leg-swap operator P_ab."""
    _check_legs(m, a, b)
    N = cfg.N
    op = TensorOp(N, m)
    sa, sb = N ** (m - a), N ** (m - b)
    for base in _free_indices(N, m, (a, b)):
        for i in range(N):
            for j in range(N):
                row = base + i * sa + j * sb
                col = base + j * sa + i * sb
                op.entries[(row, col)] = 1
    return op


def op_Q(cfg, m, a, b):
    """The bilinear-form contraction operator Q_ab."""
    _check_legs(m, a, b)
    N = cfg.N
    op = TensorOp(N, m)
    sa, sb = N ** (m - a), N ** (m - b)
    for base in _free_indices(N, m, (a, b)):
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                row = base + (i - 1) * sa + (cfg.prime(i) - 1) * sb
                col = base + (j - 1) * sa + (cfg.prime(j) - 1) * sb
                val = cfg.sign(i) * cfg.sign(j)
                op.entries[(row, col)] = op.entries.get((row, col), 0) + val
    return op


def _check_legs(m, a, b):
    if not (1 <= a < b <= m):
        raise ValueError(f"need 1 <= a < b <= m, got a={a}, b={b}, m={m}")


def _free_indices(N, m, skip):
    """Encoded indices over all legs except those in `skip` (zeros there)."""
    legs = [a for a in range(1, m + 1) if a not in skip]
    out = [0]
    for a in legs:
        stride = N ** (m - a)
        out = [base + i * stride for base in out for i in range(N)]
    return out


_REP_CACHE = {}


def rep_diagram(cfg, d):
    """Image of a single diagram under the family's Brauer action.

    Entries are plain integers; the symplectic minus signs enter per
    generator of the word, matching s_ab -> -P_ab, eps_ab -> -Q_ab.
    """
    key = (cfg.family, cfg.N, d)
    if key in _REP_CACHE:
        return _REP_CACHE[key]
    m = d.m
    word = brauer.diagram_to_word(d)
    op = TensorOp.identity(cfg.N, m)
    for kind, a, b in word:
        gen = op_P(cfg, m, a, b) if kind == "s" else op_Q(cfg, m, a, b)
        op = op * gen
    if cfg.family == "sp" and len(word) % 2:
        op = op.scale(-1)
    _REP_CACHE[key] = op
    return op


def rep_element_grouped(cfg, x):
    """Image of a BrauerElement as [(coeff, integer-entry operator)].

    Diagrams sharing a coefficient are summed with integer arithmetic
    first; the handful of distinct RatFunc coefficients (omega symbolic)
    multiply in only at the end.
    """
    groups = {}
    for d, coeff in x.terms.items():
        groups.setdefault(coeff, []).append(d)
    out = []
    for coeff, ds in sorted(groups.items(), key=lambda t: hash(t[0])):
        acc = {}
        for d in ds:
            for rc, v in rep_diagram(cfg, d).entries.items():
                s = acc.get(rc, 0) + v
                if s:
                    acc[rc] = s
                else:
                    del acc[rc]
        op = TensorOp(cfg.N, x.m)
        op.entries = acc
        out.append((coeff, op))
    return out


def rep_element(cfg, x):
    """Image of a BrauerElement; coefficients stay RatFunc in omega."""
    out = TensorOp(cfg.N, x.m)
    acc = out.entries
    for coeff, op in rep_element_grouped(cfg, x):
        for rc, v in op.entries.items():
            s = acc.get(rc, 0) + coeff * v
            if s:
                acc[rc] = s
            else:
                acc.pop(rc, None)
    return out

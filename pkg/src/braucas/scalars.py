"""Exact scalar tower: rationals, rational functions in omega, polynomials.

Everything downstream works over one of four rings:

  * big rationals (gmpy2.mpq),
  * rational functions in the Brauer parameter omega (RatFunc),
  * dense univariate polynomials in u over the rationals (UPoly),
  * sparse multivariate polynomials in (u, l1, ..., ln) whose
    coefficients are RatFunc values (MPoly).

All arithmetic is exact; there is no floating point anywhere.  RatFunc
values are kept fully reduced (gcd'd out, monic denominator) so that
structural equality coincides with mathematical equality and removable
singularities evaluate cleanly.  This is what makes the omega -> -2n
limits in the symplectic constructions come out automatically.
"""

from __future__ import annotations

from gmpy2 import mpq

Q = mpq
QZERO = mpq(0)
QONE = mpq(1)


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at a pole."""


# ---------------------------------------------------------------------------
# dense univariate polynomials over mpq, as tuples low -> high
# ---------------------------------------------------------------------------

def pnormalize(coeffs):
    cs = [Q(c) for c in coeffs]
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return pnormalize(out)


def pneg(p):
    return tuple(-c for c in p)


def psub(p, q):
    return padd(p, pneg(q))


def pmul(p, q):
    if not p or not q:
        return ()
    out = [QZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return pnormalize(out)


def pscale(p, c):
    c = Q(c)
    if not c:
        return ()
    return tuple(a * c for a in p)


def pdivmod(p, q):
    """Exact division with remainder over the rationals; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    lead = q[-1]
    dq = len(q) - 1
    quot = [QZERO] * max(len(p) - dq, 0)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if not c:
            continue
        f = c / lead
        quot[i - dq] = f
        for j in range(dq + 1):
            rem[i - dq + j] -= f * q[j]
    return pnormalize(quot), pnormalize(rem)


def pgcd(p, q):
    """Monic gcd by the Euclidean algorithm."""
    while q:
        p, q = q, pdivmod(p, q)[1]
    if not p:
        return ()
    return tuple(c / p[-1] for c in p)


def peval(p, x):
    x = Q(x)
    acc = QZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pstr(p, var="w"):
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}" if c != 1 else var)
        else:
            parts.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# rational functions in omega
# ---------------------------------------------------------------------------

class RatFunc:
    """A reduced rational function in omega over the rationals.

    Canonical form: gcd(num, den) = 1 and den monic, so two values are
    equal iff their representations are equal.  Construction always
    reduces, hence (w^2-4)/(w-2) is stored as w+2 and evaluating at 2
    is legal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(QONE,)):
        num = pnormalize(num)
        den = pnormalize(den)
        if not den:
            raise PoleError("division by zero in omega-field")
        if not num:
            self.num, self.den = (), (QONE,)
            return
        g = pgcd(num, den)
        if len(g) > 1:
            num = pdivmod(num, g)[0]
            den = pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        self.num, self.den = num, den

    @classmethod
    def const(cls, c):
        c = Q(c)
        r = cls.__new__(cls)
        r.num = (c,) if c else ()
        r.den = (QONE,)
        return r

    @classmethod
    def omega(cls):
        r = cls.__new__(cls)
        r.num = (QZERO, QONE)
        r.den = (QONE,)
        return r

    def is_constant(self):
        return len(self.num) <= 1 and self.den == (QONE,)

    def as_q(self):
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.num[0] if self.num else QZERO

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, mpq)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, mpq)):
            return RatFunc.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        num = padd(pmul(self.num, other.den), pmul(other.num, self.den))
        return RatFunc(num, pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num = pneg(self.num)
        r.den = self.den
        return r

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise PoleError("division by zero in omega-field")
        return RatFunc(pmul(self.num, other.den), pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __pow__(self, k):
        out = RatFunc.const(1)
        for _ in range(k):
            out = out * self
        return out

    def eval(self, w0):
        """Exact value at omega = w0; raises PoleError at a genuine pole."""
        w0 = Q(w0)
        dv = peval(self.den, w0)
        if not dv:
            raise PoleError(
                f"pole at specialization point omega={w0} "
                f"(denominator {pstr(self.den)})")
        return peval(self.num, w0) / dv

    def __repr__(self):
        if self.den == (QONE,):
            return pstr(self.num)
        return f"({pstr(self.num)})/({pstr(self.den)})"

    def to_json(self):
        return {"num_poly": [str(c) for c in self.num],
                "den_poly": [str(c) for c in self.den]}

    @classmethod
    def from_json(cls, data):
        r = cls.__new__(cls)
        r.num = tuple(Q(c) for c in data["num_poly"])
        r.den = tuple(Q(c) for c in data["den_poly"])
        return r


RF_ZERO = RatFunc.const(0)
RF_ONE = RatFunc.const(1)
OMEGA = RatFunc.omega()


# ---------------------------------------------------------------------------
# dense polynomials in u over mpq
# ---------------------------------------------------------------------------

class UPoly:
    """Polynomial in the spectral shift variable u with rational coefficients.

    Used as the scalar ring for enveloping-algebra elements while u is
    kept symbolic; degree stays tiny (at most the number of tensor legs).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = pnormalize(coeffs)

    @classmethod
    def const(cls, c):
        return cls((Q(c),))

    @classmethod
    def u(cls):
        return cls((QZERO, QONE))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, mpq)):
            other = UPoly.const(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, mpq)):
            return UPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return UPoly(padd(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(pneg(self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return UPoly(psub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return UPoly(pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else QZERO

    def eval(self, x):
        return peval(self.coeffs, x)

    def compose_linear(self, a, b):
        """p(a*u + b), used for parity (a=-1) and half-shifts (b=+-1/2)."""
        a, b = Q(a), Q(b)
        lin = (b, a)
        acc = ()
        for c in reversed(self.coeffs):
            acc = padd(pmul(acc, lin), (c,))
        return UPoly(acc)

    def __repr__(self):
        return pstr(self.coeffs, "u")


# ---------------------------------------------------------------------------
# sparse multivariate polynomials with RatFunc coefficients
# ---------------------------------------------------------------------------

def _var_key(name):
    # fixed global order: u first, then l1 < l2 < ...
    if name == "u":
        return (0, 0)
    if name.startswith("l"):
        return (1, int(name[1:]))
    return (2, name)


def _to_rf(c):
    if isinstance(c, RatFunc):
        return c
    return RatFunc.const(c)


class MPoly:
    """Sparse polynomial in variables drawn from {u, l1, ..., ln}.

    Terms map dense exponent tuples (one slot per variable, in the fixed
    order u < l1 < l2 < ...) to RatFunc coefficients; zero coefficients
    are never stored.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                c = _to_rf(c)
                if c:
                    self.terms[tuple(exp)] = c

    @classmethod
    def const(cls, c, vars=()):
        c = _to_rf(c)
        p = cls(vars)
        if c:
            p.terms[(0,) * len(p.vars)] = c
        return p

    @classmethod
    def var(cls, name):
        p = cls((name,))
        p.terms[(1,)] = RF_ONE
        return p

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _aligned(self, other):
        """Re-express both polynomials over the union variable set."""
        if isinstance(other, (int, mpq, RatFunc)):
            other = MPoly.const(other)
        if self.vars == other.vars:
            return self, other
        union = sorted(set(self.vars) | set(other.vars), key=_var_key)
        return self.extend(union), other.extend(union)

    def extend(self, newvars):
        newvars = tuple(newvars)
        if newvars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(newvars)}
        out = MPoly(newvars)
        for exp, c in self.terms.items():
            nexp = [0] * len(newvars)
            for v, e in zip(self.vars, exp):
                nexp[pos[v]] = e
            out.terms[tuple(nexp)] = c
        return out

    def __eq__(self, other):
        if isinstance(other, (int, mpq, RatFunc)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.trim().terms.items()))

    def trim(self):
        """Drop variables that never occur, for canonical comparisons."""
        used = [i for i in range(len(self.vars))
                if any(exp[i] for exp in self.terms)]
        if len(used) == len(self.vars):
            return self
        out = MPoly(tuple(self.vars[i] for i in used))
        for exp, c in self.terms.items():
            out.terms[tuple(exp[i] for i in used)] = c
        return out

    def __add__(self, other):
        a, b = self._aligned(other)
        out = MPoly(a.vars)
        out.terms = dict(a.terms)
        for exp, c in b.terms.items():
            s = out.terms.get(exp, RF_ZERO) + c
            if s:
                out.terms[exp] = s
            else:
                out.terms.pop(exp, None)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MPoly(self.vars)
        out.terms = {exp: -c for exp, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, mpq, RatFunc)):
            other = MPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, mpq, RatFunc)):
            c = _to_rf(other)
            out = MPoly(self.vars)
            if c:
                out.terms = {exp: v * c for exp, v in self.terms.items()}
            return out
        a, b = self._aligned(other)
        out = MPoly(a.vars)
        acc = out.terms
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                s = acc.get(exp, RF_ZERO) + c1 * c2
                if s:
                    acc[exp] = s
                else:
                    acc.pop(exp, None)
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        out = MPoly.const(1, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, name, value):
        """Substitute one variable by an MPoly (or constant) and expand."""
        if name not in self.vars:
            return self
        if isinstance(value, (int, mpq, RatFunc)):
            value = MPoly.const(value)
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        out = MPoly(rest)
        powers = {0: MPoly.const(1, rest)}
        for exp, c in sorted(self.terms.items()):
            e = exp[i]
            if e not in powers:
                p = powers[max(powers)]
                for _ in range(max(powers), e):
                    p = p * value
                    powers[max(powers) + 1] = p
            base = MPoly(rest, {exp[:i] + exp[i + 1:]: c})
            out = out + base * powers[e]
        return out

    def eval_omega(self, w0):
        """Evaluate every coefficient at omega = w0."""
        out = MPoly(self.vars)
        for exp, c in self.terms.items():
            v = c.eval(w0)
            if v:
                out.terms[exp] = RatFunc.const(v)
        return out

    def coeff_of_var_power(self, name, k):
        """The MPoly coefficient of name**k, in the remaining variables."""
        if name not in self.vars:
            return self if k == 0 else MPoly(self.vars)
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        out = MPoly(rest)
        for exp, c in self.terms.items():
            if exp[i] == k:
                out.terms[exp[:i] + exp[i + 1:]] = c
        return out

    def to_json(self):
        p = self.trim()
        return {"vars": list(p.vars),
                "terms": [{"exp": list(exp), "coeff": c.to_json()}
                          for exp, c in sorted(p.terms.items())]}

    @classmethod
    def from_json(cls, data):
        out = cls(tuple(data["vars"]))
        for t in data["terms"]:
            out.terms[tuple(t["exp"])] = RatFunc.from_json(t["coeff"])
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items()):
            mono = "*".join(
                (v if e == 1 else f"{v}^{e}")
                for v, e in zip(self.vars, exp) if e)
            cs = repr(c)
            if "+" in cs or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts)

"""The Brauer algebra B_m(omega): diagrams, products, projectors.

An m-diagram is a perfect matching on 2m dots (two rows of m).  Dots are
encoded as integers: top_i = i-1 and bot_i = m+i-1 for i = 1..m.
Multiplying two diagrams concatenates them, removes the closed loops
formed in the middle and records their count s; the algebra product of
the diagrams is omega^s times the loop-free concatenation.

Elements carry coefficients in the rational-function field C(omega)
(RatFunc), so the symmetrizer can be built once with omega symbolic and
specialized later -- including at the symplectic point omega = -2n where
intermediate expressions have poles.
"""

from __future__ import annotations

import itertools

from .scalars import Q, RatFunc, RF_ONE, OMEGA


class Diagram:
    """A perfect matching on the 2m dots of an m-diagram, in canonical form."""

    __slots__ = ("m", "edges", "_hash")

    def __init__(self, m, edges):
        pairs = tuple(sorted(tuple(sorted(e)) for e in edges))
        seen = [d for e in pairs for d in e]
        if sorted(seen) != list(range(2 * m)):
            raise ValueError(f"not a perfect matching on {2*m} dots: {pairs}")
        self.m = m
        self.edges = pairs
        self._hash = hash((m, pairs))

    def __eq__(self, other):
        return (isinstance(other, Diagram)
                and self.m == other.m and self.edges == other.edges)

    def __hash__(self):
        return self._hash

    def match_array(self):
        match = [0] * (2 * self.m)
        for x, y in self.edges:
            match[x] = y
            match[y] = x
        return match

    def __repr__(self):
        m = self.m

        def name(d):
            return f"T{d+1}" if d < m else f"B{d-m+1}"

        return "{" + ",".join(f"({name(x)},{name(y)})"
                              for x, y in self.edges) + "}"


def identity_diagram(m):
    return Diagram(m, [(i, m + i) for i in range(m)])


def s_diagram(m, a, b):
    """The transposition diagram s_ab, 1-based, a < b."""
    _check_pair(m, a, b)
    a, b = a - 1, b - 1
    edges = [(i, m + i) for i in range(m) if i not in (a, b)]
    edges += [(a, m + b), (b, m + a)]
    return Diagram(m, edges)


def eps_diagram(m, a, b):
    """The horizontal-pair diagram eps_ab, 1-based, a < b."""
    _check_pair(m, a, b)
    a, b = a - 1, b - 1
    edges = [(i, m + i) for i in range(m) if i not in (a, b)]
    edges += [(a, b), (m + a, m + b)]
    return Diagram(m, edges)


def _check_pair(m, a, b):
    if not (1 <= a < b <= m):
        raise ValueError(f"need 1 <= a < b <= m, got a={a}, b={b}, m={m}")


def perm_diagram(m, perm):
    """Diagram of a permutation given as a 0-based image tuple."""
    return Diagram(m, [(i, m + perm[i]) for i in range(m)])


def all_diagrams(m):
    """All (2m-1)!! diagrams on 2m dots."""
    out = []

    def pair_up(dots, acc):
        if not dots:
            out.append(Diagram(m, acc))
            return
        first = dots[0]
        for j in range(1, len(dots)):
            rest = dots[1:j] + dots[j + 1:]
            pair_up(rest, acc + [(first, dots[j])])

    pair_up(list(range(2 * m)), [])
    return out


def diagram_compose(d1, d2):
    """Concatenate d1 above d2; return (resulting diagram, loop count)."""
    if d1.m != d2.m:
        raise ValueError(f"diagram sizes differ: {d1.m} vs {d2.m}")
    m = d1.m
    m1 = d1.match_array()
    m2 = d2.match_array()
    # nodes are (layer, dot); layer 1 = d1, layer 2 = d2.  d1's bottom
    # dot i is glued to d2's top dot i.
    visited_mid = set()  # middle dots, indexed 0..m-1

    def walk(layer, dot):
        """Follow the strand until an outer dot; return its result label."""
        while True:
            if layer == 1:
                partner = m1[dot]
                if partner < m:
                    return partner          # result top dot
                visited_mid.add(partner - m)
                layer, dot = 2, partner - m
            else:
                partner = m2[dot]
                if partner >= m:
                    return m + (partner - m)  # result bottom dot
                visited_mid.add(partner)
                layer, dot = 1, m + partner

    edges = []
    done = set()
    for t in range(m):
        if t in done:
            continue
        other = walk(1, t)
        edges.append((t, other))
        done.add(t)
        done.add(other)
    for b in range(m):
        dot = m + b
        if dot in done:
            continue
        other = walk(2, dot)
        edges.append((dot, other))
        done.add(dot)
        done.add(other)

    loops = 0
    seen = set()
    for i in range(m):
        if i in visited_mid or i in seen:
            continue
        # trace the closed cycle through middle dot i
        loops += 1
        layer, dot = 2, i
        while True:
            seen.add(dot if layer == 2 else dot - m)
            if layer == 2:
                partner = m2[dot]
                layer, dot = 1, m + partner
            else:
                partner = m1[dot]
                layer, dot = 2, partner - m
                if dot == i:
                    break
    return Diagram(m, edges), loops


_OMEGA_POWERS = [RF_ONE]


def omega_power(s):
    while len(_OMEGA_POWERS) <= s:
        _OMEGA_POWERS.append(_OMEGA_POWERS[-1] * OMEGA)
    return _OMEGA_POWERS[s]


class BrauerElement:
    """A C(omega)-linear combination of m-diagrams."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {}
        if terms:
            for d, c in terms.items():
                if not isinstance(c, RatFunc):
                    c = RatFunc.const(c)
                if c:
                    self.terms[d] = c

    @classmethod
    def zero(cls, m):
        return cls(m)

    @classmethod
    def one(cls, m):
        return cls(m, {identity_diagram(m): RF_ONE})

    @classmethod
    def from_diagram(cls, d, coeff=RF_ONE):
        return cls(d.m, {d: coeff})

    def __eq__(self, other):
        if isinstance(other, (int,)) and other == 0:
            return not self.terms
        return (isinstance(other, BrauerElement)
                and self.m == other.m and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, (int, RatFunc)) or hasattr(other, "denominator"):
            other = BrauerElement(self.m, {identity_diagram(self.m):
                                           RatFunc.const(other)
                                           if not isinstance(other, RatFunc)
                                           else other})
        if self.m != other.m:
            raise ValueError("mismatched m")
        out = dict(self.terms)
        for d, c in other.terms.items():
            s = out.get(d, 0) + c
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        res = BrauerElement(self.m)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = BrauerElement(self.m)
        res.terms = {d: -c for d, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, BrauerElement):
            return self + (-other)
        return self + (-RatFunc.const(other)
                       if not isinstance(other, RatFunc) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not isinstance(c, RatFunc):
            c = RatFunc.const(c)
        res = BrauerElement(self.m)
        if c:
            res.terms = {d: v * c for d, v in self.terms.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, (int, RatFunc)):
            return self.scale(other)
        if self.m != other.m:
            raise ValueError("mismatched m")
        out = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, loops = diagram_compose(d1, d2)
                c = c1 * c2
                if loops:
                    c = c * omega_power(loops)
                s = out.get(d, 0) + c
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        res = BrauerElement(self.m)
        res.terms = out
        return res

    def __rmul__(self, other):
        # scalars commute with everything
        return self.scale(other)

    def eval_omega(self, w0):
        """Specialize omega; raises PoleError on genuine poles."""
        res = BrauerElement(self.m)
        for d, c in self.terms.items():
            v = c.eval(w0)
            if v:
                res.terms[d] = RatFunc.const(v)
        return res

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c!r})*{d!r}"
                          for d, c in sorted(self.terms.items(),
                                             key=lambda t: t[0].edges))

    def to_json(self):
        return {"m": self.m,
                "terms": [{"edges": [list(e) for e in d.edges],
                           "coeff": c.to_json()}
                          for d, c in sorted(self.terms.items(),
                                             key=lambda t: t[0].edges)]}


def close_last_strand(x):
    """Diagrammatic closure of strand m: join the last top and bottom dots.

    Sends an element of the m-dot algebra to the (m-1)-dot algebra; a
    diagram whose last strand is a through edge closes to a loop and
    frees one factor omega.  This is the algebra-level counterpart of
    the partial trace over the last tensor leg, with omega kept
    symbolic where the matrix trace would insert the literal dimension.
    """
    m = x.m
    if m < 1:
        raise ValueError("nothing to close")
    top, bot = m - 1, 2 * m - 1

    def renumber(dot):
        return dot if dot < top else dot - 1

    out = BrauerElement(m - 1)
    acc = out.terms
    for d, c in x.terms.items():
        match = d.match_array()
        edges = [e for e in d.edges if top not in e and bot not in e]
        if match[top] == bot:
            c = c * OMEGA
        else:
            edges.append((match[top], match[bot]))
        nd = Diagram(m - 1, [(renumber(a), renumber(b)) for a, b in edges])
        s = acc.get(nd, 0) + c
        if s:
            acc[nd] = s
        else:
            acc.pop(nd, None)
    return out


def jucys_murphy(m, b):
    """x_b = sum_{a<b} (s_ab - eps_ab); x_1 = 0."""
    if not (1 <= b <= m):
        raise ValueError(f"need 1 <= b <= m, got b={b}, m={m}")
    out = BrauerElement.zero(m)
    for a in range(1, b):
        out = out + BrauerElement.from_diagram(s_diagram(m, a, b))
        out = out - BrauerElement.from_diagram(eps_diagram(m, a, b))
    return out


def _symmetrizer_jm(m):
    out = BrauerElement.one(m)
    for r in range(2, m + 1):
        x = jucys_murphy(m, r)
        f1 = BrauerElement.one(m) + x
        f2 = x + (OMEGA + (r - 3))
        denom = (OMEGA + (2 * r - 4)) * r
        out = out * f1 * f2
        out = out.scale(RF_ONE / denom)
    return out


def _symmetrizer_pairwise(m):
    out = BrauerElement.one(m)
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            f = (BrauerElement.one(m)
                 + BrauerElement.from_diagram(
                     s_diagram(m, a, b), RF_ONE / (b - a))
                 - BrauerElement.from_diagram(
                     eps_diagram(m, a, b),
                     RF_ONE / (OMEGA / 2 + (b - a - 1))))
            out = out * f
    fact = 1
    for r in range(2, m + 1):
        fact *= r
    return out.scale(Q(1, fact))


_SYM_CACHE = {}
_ASYM_CACHE = {}


def symmetrizer(m):
    """The single-row primitive idempotent S^(m).

    Computed from the Jucys-Murphy product formula and cross-checked
    against the ordered pairwise-product formula; the two must agree.
    """
    if m not in _SYM_CACHE:
        s = _symmetrizer_jm(m)
        if m <= 5:
            assert s == _symmetrizer_pairwise(m), \
                f"symmetrizer formulas disagree at m={m}"
        _SYM_CACHE[m] = s
    return _SYM_CACHE[m]


def antisymmetrizer(m):
    """The single-column idempotent A^(m) = (1/m!) sum_pi sgn(pi) pi."""
    if m not in _ASYM_CACHE:
        terms = {}
        fact = 1
        for r in range(2, m + 1):
            fact *= r
        for perm in itertools.permutations(range(m)):
            inv = sum(1 for i in range(m) for j in range(i + 1, m)
                      if perm[i] > perm[j])
            sgn = -1 if inv % 2 else 1
            terms[perm_diagram(m, perm)] = RatFunc.const(Q(sgn, fact))
        _ASYM_CACHE[m] = BrauerElement(m, terms)
    return _ASYM_CACHE[m]


def _perm_to_transpositions(perm):
    """Factor a permutation into transpositions; composition order is
    arranged so that the generator word below evaluates back to it."""
    m = len(perm)
    factors = []
    seen = set()
    for start in range(m):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        # (c0 c1 ... ck-1) = (c0 c1) o (c1 c2) o ... o (ck-2 ck-1)
        for i in range(len(cycle) - 1):
            factors.append((cycle[i], cycle[i + 1]))
    # word evaluates right factor first under diagram composition
    factors.reverse()
    return factors


def diagram_to_word(d):
    """Express a diagram as a loop-free word in the generators.

    Returns a list of tokens ("s", a, b) and ("e", a, b) with 1-based
    a < b; evaluating the word left-to-right by diagram multiplication
    reproduces d with coefficient exactly 1 (no omega factors).
    """
    m = d.m
    top_pairs, bot_pairs, through = [], [], []
    for x, y in d.edges:
        if x < m and y < m:
            top_pairs.append((x, y))
        elif x >= m and y >= m:
            bot_pairs.append((x - m, y - m))
        else:
            through.append((x, y - m))
    h = len(top_pairs)

    sigma = [None] * m
    for k, (a, b) in enumerate(top_pairs):
        sigma[a] = 2 * k
        sigma[b] = 2 * k + 1
    tau = [None] * m
    for k, (c, dd) in enumerate(bot_pairs):
        tau[2 * k] = c
        tau[2 * k + 1] = dd
    for j, (t, u) in enumerate(sorted(through)):
        sigma[t] = 2 * h + j
        tau[2 * h + j] = u

    word = []
    for a, b in _perm_to_transpositions(tuple(sigma)):
        word.append(("s", min(a, b) + 1, max(a, b) + 1))
    for k in range(h):
        word.append(("e", 2 * k + 1, 2 * k + 2))
    for a, b in _perm_to_transpositions(tuple(tau)):
        word.append(("s", min(a, b) + 1, max(a, b) + 1))
    return word


def word_to_element(m, word):
    """Evaluate a generator word by diagram multiplication."""
    out = BrauerElement.one(m)
    for kind, a, b in word:
        gen = s_diagram(m, a, b) if kind == "s" else eps_diagram(m, a, b)
        out = out * BrauerElement.from_diagram(gen)
    return out

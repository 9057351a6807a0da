"""o_N and sp_2n in the split realization, with PBW normal forms.

Generators are F_ij = E_ij - E_{j'i'} (orthogonal) or
F_ij = E_ij - eps_i eps_j E_{j'i'} (symplectic), i' = N - i + 1.  Since
F + F' = 0 identifies F_ij with -(sign) F_{j'i'}, one representative per
pair suffices: we keep (i,j) when (i,j) <=_lex (j',i') and the matrix is
nonzero.  Basis order is lowering (i>j) < cartan (F_11..F_nn) < raising
(i<j), lexicographic within each class; with raising generators rightmost
in PBW monomials, the Harish-Chandra image is read off from the
cartan-only monomials.

Enveloping-algebra elements are dicts mapping nondecreasing tuples of
basis indices to scalars (rationals, or u-polynomials when a spectral
parameter is kept symbolic).  Rewriting x y -> y x + [x, y] is memoized
per basis; structure constants are extracted from the defining matrices
and cross-checked by reconstruction.
"""

from __future__ import annotations

from .scalars import Q, QONE, RatFunc, MPoly
from .tensor import ActionConfig

LOWERING, CARTAN, RAISING = 0, 1, 2


def _mat_mul(A, B):
    by_row = {}
    for (i, j), v in B.items():
        by_row.setdefault(i, []).append((j, v))
    out = {}
    for (i, k), v in A.items():
        for j, w in by_row.get(k, ()):
            s = out.get((i, j), 0) + v * w
            if s:
                out[(i, j)] = s
            else:
                del out[(i, j)]
    return out


def _mat_sub(A, B):
    out = dict(A)
    for ij, v in B.items():
        s = out.get(ij, 0) - v
        if s:
            out[ij] = s
        else:
            out.pop(ij, None)
    return out


class LieBasis:
    """Canonical generator set of o_N or sp_2n with structure constants."""

    def __init__(self, cfg: ActionConfig):
        self.cfg = cfg
        N, n = cfg.N, cfg.n
        gens = []
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if (i, j) > (cfg.prime(j), cfg.prime(i)):
                    continue
                mat = self._f_matrix(i, j)
                if not mat:
                    continue
                cls = CARTAN if i == j else (RAISING if i < j else LOWERING)
                gens.append((cls, i, j, mat))
        gens.sort(key=lambda g: (g[0], g[1], g[2]))
        self.pairs = [(i, j) for _, i, j, _ in gens]
        self.classes = [c for c, _, _, _ in gens]
        self.matrices = [m for _, _, _, m in gens]
        self.dim = len(gens)
        expected = N * (N - 1) // 2 if cfg.family == "o" else n * (2 * n + 1)
        assert self.dim == expected, (self.dim, expected)
        self.cartan_pos = {}
        for idx, (cls, (i, j)) in enumerate(zip(self.classes, self.pairs)):
            if cls == CARTAN:
                self.cartan_pos[idx] = i  # F_ii <-> lambda_i

        # decomposition of every F_ij over the canonical generators
        index_of = {p: k for k, p in enumerate(self.pairs)}
        self.pair_decomp = {}
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                pi, pj = cfg.prime(i), cfg.prime(j)
                if (i, j) in index_of:
                    self.pair_decomp[(i, j)] = (index_of[(i, j)], QONE)
                elif (pj, pi) in index_of:
                    # F + F' = 0 gives F_ij = -(sign) F_{j'i'}
                    c = -Q(cfg.sign(i) * cfg.sign(j))
                    self.pair_decomp[(i, j)] = (index_of[(pj, pi)], c)
                else:
                    self.pair_decomp[(i, j)] = None  # identically zero

        self.bracket = self._structure_constants()
        self._mg_cache = {}   # (mono, g) -> dict for mono * g
        self._gm_cache = {}   # (g, mono) -> dict for g * mono

    def _f_matrix(self, i, j):
        cfg = self.cfg
        mat = {(i, j): Q(1)}
        jp, ip = cfg.prime(j), cfg.prime(i)
        c = Q(cfg.sign(i) * cfg.sign(j)) if cfg.family == "sp" else Q(1)
        s = mat.get((jp, ip), 0) - c
        if s:
            mat[(jp, ip)] = s
        else:
            del mat[(jp, ip)]
        return mat

    def _expand_in_basis(self, mat):
        """Coordinates of a matrix known to lie in the span of the basis."""
        cfg = self.cfg
        coords = []
        for k, (i, j) in enumerate(self.pairs):
            c = mat.get((i, j), 0)
            if c and (i, j) == (cfg.prime(j), cfg.prime(i)):
                c = Q(c) / 2  # self-paired generator F_{i,i'} = 2 E_{i,i'}
            if c:
                coords.append((k, Q(c)))
        check = {}
        for k, c in coords:
            for ij, v in self.matrices[k].items():
                s = check.get(ij, 0) + c * v
                if s:
                    check[ij] = s
                else:
                    del check[ij]
        assert check == mat, "matrix not in the span of the basis"
        return tuple(coords)

    def _structure_constants(self):
        bracket = {}
        for x in range(self.dim):
            X = self.matrices[x]
            for y in range(x + 1, self.dim):
                Y = self.matrices[y]
                comm = _mat_sub(_mat_mul(X, Y), _mat_mul(Y, X))
                vec = self._expand_in_basis(comm)
                if vec:
                    bracket[(x, y)] = vec
                    bracket[(y, x)] = tuple((k, -c) for k, c in vec)
        return bracket

    # -- PBW rewriting ----------------------------------------------------

    def mul_mono_gen(self, mono, g):
        """Normal form of (normal monomial) * (single generator)."""
        key = (mono, g)
        cached = self._mg_cache.get(key)
        if cached is not None:
            return cached
        if not mono or mono[-1] <= g:
            res = {mono + (g,): QONE}
        else:
            h = mono[-1]
            pre = mono[:-1]
            res = {}
            for m1, c1 in self.mul_mono_gen(pre, g).items():
                for m2, c2 in self.mul_mono_gen(m1, h).items():
                    s = res.get(m2, 0) + c1 * c2
                    if s:
                        res[m2] = s
                    else:
                        del res[m2]
            for k, ck in self.bracket.get((h, g), ()):
                for m2, c2 in self.mul_mono_gen(pre, k).items():
                    s = res.get(m2, 0) + ck * c2
                    if s:
                        res[m2] = s
                    else:
                        del res[m2]
        self._mg_cache[key] = res
        return res

    def mul_gen_mono(self, g, mono):
        """Normal form of (single generator) * (normal monomial)."""
        key = (g, mono)
        cached = self._gm_cache.get(key)
        if cached is not None:
            return cached
        if not mono or g <= mono[0]:
            res = {(g,) + mono: QONE}
        else:
            h = mono[0]
            rest = mono[1:]
            res = {}
            for m1, c1 in self.mul_gen_mono(g, rest).items():
                for m2, c2 in self.mul_gen_mono(h, m1).items():
                    s = res.get(m2, 0) + c1 * c2
                    if s:
                        res[m2] = s
                    else:
                        del res[m2]
            for k, ck in self.bracket.get((g, h), ()):
                for m2, c2 in self.mul_gen_mono(k, rest).items():
                    s = res.get(m2, 0) + ck * c2
                    if s:
                        res[m2] = s
                    else:
                        del res[m2]
        self._gm_cache[key] = res
        return res

    def nf_word(self, word):
        """Normal form of an arbitrary product of generators."""
        acc = {(): QONE}
        for g in word:
            nxt = {}
            for mono, c in acc.items():
                for m2, c2 in self.mul_mono_gen(mono, g).items():
                    s = nxt.get(m2, 0) + c * c2
                    if s:
                        nxt[m2] = s
                    else:
                        del nxt[m2]
            acc = nxt
        return acc

    def gen_element(self, i, j):
        """F_ij as an enveloping-algebra element (may be zero)."""
        dec = self.pair_decomp[(i, j)]
        if dec is None:
            return {}
        g, c = dec
        return {(g,): c}

    def describe(self, idx):
        i, j = self.pairs[idx]
        return f"F[{i},{j}]"


_BASIS_CACHE = {}


def build_basis(cfg: ActionConfig) -> LieBasis:
    key = (cfg.family, cfg.N)
    if key not in _BASIS_CACHE:
        _BASIS_CACHE[key] = LieBasis(cfg)
    return _BASIS_CACHE[key]


# -- element arithmetic (elements are dicts mono -> scalar) -----------------

def uea_add(x, y):
    out = dict(x)
    for m, c in y.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            del out[m]
    return out


def uea_scale(x, c):
    if not c:
        return {}
    return {m: v * c for m, v in x.items()}


def uea_sub(x, y):
    return uea_add(x, uea_scale(y, -QONE))


def uea_mul(basis, x, y):
    out = {}
    for m2, c2 in y.items():
        # fold the generators of m2 into each monomial of x
        part = x
        for g in m2:
            nxt = {}
            for mono, c in part.items():
                for mm, cc in basis.mul_mono_gen(mono, g).items():
                    s = nxt.get(mm, 0) + c * cc
                    if s:
                        nxt[mm] = s
                    else:
                        del nxt[mm]
            part = nxt
        for mono, c in part.items():
            s = out.get(mono, 0) + c * c2
            if s:
                out[mono] = s
            else:
                del out[mono]
    return out


def normal_form(basis, word, scalar=QONE):
    """PBW normal form of scalar * (product of generators by index)."""
    return uea_scale(basis.nf_word(tuple(word)), scalar)


def commutator_with_gen(basis, x, g):
    """[x, F_g] for a single basis generator, as an element."""
    out = {}
    for mono, c in x.items():
        for mm, cc in basis.mul_mono_gen(mono, g).items():
            s = out.get(mm, 0) + c * cc
            if s:
                out[mm] = s
            else:
                del out[mm]
        for mm, cc in basis.mul_gen_mono(g, mono).items():
            s = out.get(mm, 0) - c * cc
            if s:
                out[mm] = s
            else:
                del out[mm]
    return out


def is_central(basis, x):
    """True iff x commutes with every generator; else (False, witness)."""
    for g in range(basis.dim):
        w = commutator_with_gen(basis, x, g)
        if w:
            return False, (g, w)
    return True, None


class NonCentralError(ValueError):
    def __init__(self, basis, witness):
        g, w = witness
        self.witness = witness
        super().__init__(
            f"element is not central: [z, {basis.describe(g)}] != 0 "
            f"({len(w)} terms)")


def hc_image(basis, x, check=True):
    """Harish-Chandra image as an MPoly in l1..ln (lambda coordinates).

    Keeps the cartan-only PBW monomials and maps F_ii -> l_i; monomials
    with a raising factor kill the highest vector, monomials with a
    lowering factor contribute nothing to its weight component.
    """
    if check:
        ok, witness = is_central(basis, x)
        if not ok:
            raise NonCentralError(basis, witness)
    n = basis.cfg.n
    vars = tuple(f"l{i}" for i in range(1, n + 1))
    out = MPoly(vars)
    for mono, c in x.items():
        exp = [0] * n
        ok = True
        for g in mono:
            i = basis.cartan_pos.get(g)
            if i is None:
                ok = False
                break
            exp[i - 1] += 1
        if not ok:
            continue
        key = tuple(exp)
        cur = out.terms.get(key, RatFunc.const(0)) + RatFunc.const(c)
        if cur:
            out.terms[key] = cur
        else:
            out.terms.pop(key, None)
    return out


def eval_in_defining_rep(basis, x):
    """Substitute the defining matrices; returns a sparse N x N matrix.

    For a central element the result must be chi(1,0,...,0) times the
    identity: the defining representation is the irreducible highest
    weight module with highest weight (1,0,...,0).
    """
    N = basis.cfg.N
    out = {}
    for mono, c in x.items():
        mat = {(i, i): Q(1) for i in range(1, N + 1)}
        for g in mono:
            mat = _mat_mul(mat, basis.matrices[g])
        for ij, v in mat.items():
            s = out.get(ij, 0) + c * v
            if s:
                out[ij] = s
            else:
                del out[ij]
    return out


def scalar_matrix_value(basis, mat):
    """If mat == c * identity return c, else None."""
    N = basis.cfg.N
    diag = mat.get((1, 1), 0)
    expect = {(i, i): diag for i in range(1, N + 1)} if diag else {}
    return Q(diag) if mat == expect else None


def check_defining_relation(cfg, basis=None):
    """Entrywise check of F1 F2 - F2 F1 = (P-Q) F2 - F2 (P-Q), plus F' = -F.

    Returns (True, None) or (False, witness-entry).
    """
    if basis is None:
        basis = build_basis(cfg)
    N = cfg.N

    # transposition identity F' = -F
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            fp = basis.gen_element(cfg.prime(j), cfg.prime(i))
            if cfg.family == "sp":
                fp = uea_scale(fp, Q(cfg.sign(i) * cfg.sign(j)))
            if fp != uea_scale(basis.gen_element(i, j), -QONE):
                return False, ("transposition", i, j)

    for i in range(1, N + 1):
        for k in range(1, N + 1):
            for j in range(1, N + 1):
                for l in range(1, N + 1):
                    fij = basis.gen_element(i, j)
                    fkl = basis.gen_element(k, l)
                    lhs = uea_sub(uea_mul(basis, fij, fkl),
                                  uea_mul(basis, fkl, fij))
                    rhs = {}
                    sgn = (Q(cfg.sign(i) * cfg.sign(j))
                           if cfg.family == "sp" else QONE)
                    if k == j:
                        rhs = uea_add(rhs, basis.gen_element(i, l))
                    if k == cfg.prime(i):
                        rhs = uea_sub(rhs, uea_scale(
                            basis.gen_element(cfg.prime(j), l), sgn))
                    if i == l:
                        rhs = uea_sub(rhs, basis.gen_element(k, j))
                    if l == cfg.prime(j):
                        rhs = uea_add(rhs, uea_scale(
                            basis.gen_element(k, cfg.prime(i)), sgn))
                    if lhs != rhs:
                        return False, ("relation", (i, k), (j, l))
    return True, None

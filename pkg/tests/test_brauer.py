"""Diagram algebra: multiplication, projectors, Jucys-Murphy elements."""

from braucas.scalars import Q, RatFunc, RF_ONE, OMEGA
from braucas import brauer
from braucas.brauer import (Diagram, BrauerElement, all_diagrams,
                            identity_diagram, s_diagram, eps_diagram,
                            jucys_murphy, symmetrizer, antisymmetrizer,
                            diagram_compose, diagram_to_word,
                            word_to_element)


def test_diagram_counts():
    # (2m-1)!! perfect matchings on 2m dots
    expect = {1: 1, 2: 3, 3: 15, 4: 105}
    for m, c in expect.items():
        assert len(all_diagrams(m)) == c


def test_generator_relations():
    m = 3
    one = BrauerElement.one(m)
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            s = BrauerElement.from_diagram(s_diagram(m, a, b))
            e = BrauerElement.from_diagram(eps_diagram(m, a, b))
            assert s * s == one
            assert e * e == e.scale(OMEGA)  # closing a loop frees omega
            assert s * e == e and e * s == e


def test_compose_loop_counting():
    # eps . eps on 1 leg pair closes exactly one loop
    d = eps_diagram(2, 1, 2)
    dd, loops = diagram_compose(d, d)
    assert dd == d and loops == 1


def test_word_roundtrip():
    for d in all_diagrams(3):
        elt = word_to_element(3, diagram_to_word(d))
        assert elt == BrauerElement.from_diagram(d)


def test_projectors_idempotent_small():
    for m in (2, 3, 4):
        s = symmetrizer(m)
        a = antisymmetrizer(m)
        assert s * s == s
        assert a * a == a


def test_symmetrizer_formulas_agree():
    for m in (2, 3, 4):
        assert brauer._symmetrizer_jm(m) == brauer._symmetrizer_pairwise(m)


def test_projector_absorption():
    for m in (2, 3, 4):
        s = symmetrizer(m)
        a = antisymmetrizer(m)
        for x in range(1, m + 1):
            for y in range(x + 1, m + 1):
                sd = BrauerElement.from_diagram(s_diagram(m, x, y))
                ed = BrauerElement.from_diagram(eps_diagram(m, x, y))
                assert sd * s == s
                assert not ed * s
                assert sd * a == a.scale(-1)
                assert not ed * a


def test_jucys_murphy_commute():
    for m in (3, 4):
        xs = [jucys_murphy(m, b) for b in range(2, m + 1)]
        for x in xs:
            for y in xs:
                assert x * y == y * x


def test_jucys_murphy_eigenvalues():
    for m in (2, 3, 4):
        s = symmetrizer(m)
        a = antisymmetrizer(m)
        for r in range(2, m + 1):
            x = jucys_murphy(m, r)
            assert x * s == s.scale(Q(r - 1))
            assert x * a == a.scale(Q(1 - r))


def test_symmetrizer_coefficients_rational_in_omega():
    # S^(2) = (1 + s)/2 - eps/omega: the eps coefficient is a genuine
    # rational function and evaluates exactly at generic omega
    s = symmetrizer(2)
    d_eps = eps_diagram(2, 1, 2)
    c = s.terms[d_eps]
    assert c == -(RF_ONE / OMEGA)
    se = s.eval_omega(Q(7))
    assert se.terms[d_eps] == RatFunc.const(Q(-1, 7))


def test_close_last_strand_basics():
    # closing the last strand of the identity frees one loop factor omega
    one2 = BrauerElement.one(2)
    closed = brauer.close_last_strand(one2)
    assert closed == BrauerElement.one(1).scale(OMEGA)
    # closing over s_{12} or eps_{12} leaves the single-strand identity
    s = BrauerElement.from_diagram(s_diagram(2, 1, 2))
    e = BrauerElement.from_diagram(eps_diagram(2, 1, 2))
    assert brauer.close_last_strand(s) == BrauerElement.one(1)
    assert brauer.close_last_strand(e) == BrauerElement.one(1)


def test_close_last_strand_projector_closure():
    # closing the last strand of a projector rescales the smaller one,
    # identically in omega (so the identity survives every rank)
    for m in (2, 3, 4):
        gs = ((OMEGA + (m - 3)) * (OMEGA + (2 * m - 2))
              / ((OMEGA + (2 * m - 4)) * m))
        ga = (OMEGA - (m - 1)) / m
        assert (brauer.close_last_strand(symmetrizer(m))
                == symmetrizer(m - 1).scale(gs))
        assert (brauer.close_last_strand(antisymmetrizer(m))
                == antisymmetrizer(m - 1).scale(ga))

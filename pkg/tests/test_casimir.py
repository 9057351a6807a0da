"""Trace-form elements: engines, theorem/corollary checks, continuation."""

import pytest

from braucas.scalars import Q, MPoly, UPoly, PoleError
from braucas.tensor import ActionConfig
from braucas.liealg import build_basis, is_central, hc_image
from braucas import symfun
from braucas.casimir import (CasimirSpec, theorem_spec, _contract,
                             build_casimir, build_casimir_upoly,
                             upoly_coefficients, hc_image_upoly,
                             element_to_json, element_from_json,
                             verify_theorem, verify_corollary,
                             verify_trace_permutation, trace_side_agreement)


def _point(p, values):
    for v in p.vars:
        p = p.substitute(v, MPoly.const(Q(values.get(v, 0))))
    if not p.terms:
        return Q(0)
    (exp, c), = p.terms.items()
    return c.as_q()


def test_spec_validation():
    cfg = ActionConfig("o", 3)
    with pytest.raises(ValueError):
        CasimirSpec(cfg, "nope", 2)
    with pytest.raises(ValueError):
        CasimirSpec(cfg, "sym", 2, (Q(1),))  # wrong shift count
    with pytest.raises(ValueError):
        CasimirSpec(ActionConfig("o", 10), "sym", 5)  # over desk limit


def test_theorem_shift_patterns():
    s = theorem_spec("o", "asym", 2, 5)
    assert s.shifts == (Q(-1), Q(0), Q(1), Q(2))   # u_a = a - k
    s = theorem_spec("o", "sym", 2, 5)
    assert s.shifts == (Q(1), Q(0), Q(-1), Q(-2))  # u_a = k - a
    assert theorem_spec("sp", "sym", 1, 4).shifts == (Q(0), Q(1))
    assert theorem_spec("sp", "asym", 1, 4).shifts == (Q(0), Q(-1))


def test_engines_agree_numeric_and_symbolic():
    cases = [("o", 3, "sym", 2, (1, -1)), ("o", 4, "asym", 2, (2, 0)),
             ("sp", 4, "asym", 2, (1, 2)), ("sp", 4, "sym", 2, (-1, 3)),
             ("o", 5, "sym", 3, (1, 0, -1)), ("sp", 4, "asym", 3, (2, 1, -1))]
    for family, N, projector, m, shifts in cases:
        cfg = ActionConfig(family, N)
        spec = CasimirSpec(cfg, projector, m, tuple(Q(s) for s in shifts))
        assert (_contract(spec, method="diagram")
                == _contract(spec, method="entrywise"))
        spec_u = CasimirSpec(cfg, projector, m)
        assert (_contract(spec_u, method="diagram")
                == _contract(spec_u, method="entrywise"))


def test_smallest_orthogonal_instance():
    # 2-leg symmetric element for o_3: chi = (5/3)(l1^2 + l1)
    r = verify_theorem("o", "sym", 1, 3)
    assert r.passed
    l1 = MPoly.var("l1")
    assert r.chi == (l1 * l1 + l1) * Q(5, 3)


def test_one_leg_pair_examples():
    # orth asym N=4 k=1: chi = -e_1(l^2|a) with l=(lam1+1, lam2), a=(0,1)
    r = verify_theorem("o", "asym", 1, 4)
    assert r.passed
    assert _point(r.chi, {"l1": 2, "l2": 1}) == -Q((2 + 1) ** 2 - 0
                                                   + (1 + 0) ** 2 - 1)
    # symp asym N=4 k=1: chi = h_1(l^2|a) with l=(lam1+2, lam2+1), a=(1,4)
    r = verify_theorem("sp", "asym", 1, 4)
    assert r.passed
    assert _point(r.chi, {"l1": 1, "l2": 1}) == Q((1 + 2) ** 2 - 1
                                                  + (1 + 1) ** 2 - 4)


def test_elements_are_central():
    for family, N, projector, k in [("o", 3, "sym", 1), ("o", 4, "asym", 1),
                                    ("sp", 4, "sym", 1), ("sp", 4, "asym", 1)]:
        spec = theorem_spec(family, projector, k, N)
        elt = build_casimir(spec)
        basis = build_basis(spec.cfg)
        ok, _ = is_central(basis, elt)
        assert ok


def test_symplectic_rank_continuation():
    """The m = 2n symplectic symmetric instance needs the symbolic-loop
    continuation: the entrywise engine with literal loop factors gives a
    different (wrong) value there, while the diagram engine reproduces
    the factorial target."""
    r = verify_theorem("sp", "sym", 2, 4)
    assert r.passed
    spec = theorem_spec("sp", "sym", 2, 4)
    basis = build_basis(spec.cfg)
    wrong = _contract(spec, method="entrywise")
    chi_wrong = hc_image(basis, wrong, check=True).trim()
    assert chi_wrong != r.target  # literal loops break the continuation


def test_normalization_gap_instance():
    # sp6, k=2: the literal normalization divides by zero (n = 2k-1);
    # the omega-limit path is regular and matches the target
    r = verify_theorem("sp", "sym", 2, 6)
    assert r.passed
    with pytest.raises(PoleError):
        build_casimir(theorem_spec("sp", "sym", 2, 6, omega_limit=False))


def test_literal_path_regular_instance():
    # away from the pole region the literal path agrees with the limit
    a = build_casimir(theorem_spec("o", "sym", 1, 3, omega_limit=False))
    b = build_casimir(theorem_spec("o", "sym", 1, 3))
    assert a == b
    r = verify_theorem("sp", "sym", 2, 4, omega_limit=False)
    assert not r.passed
    assert any("PoleError" in note for note in r.notes)


def test_corollary_small_grid():
    for family, N in [("o", 3), ("sp", 4)]:
        for projector in ("sym", "asym"):
            for m in (1, 2, 3):
                r = verify_corollary(family, projector, m, N)
                assert r.passed, r.line()


def test_corollary_symplectic_pole_region():
    # sp4, sym, m in {3,4}: 0/0 normalization, valid via the omega limit
    for m in (3, 4):
        r = verify_corollary("sp", "sym", m, 4)
        assert r.passed, r.line()


def test_upoly_element_structure():
    spec = CasimirSpec(ActionConfig("o", 3), "sym", 2)
    elt = build_casimir_upoly(spec)
    parts = upoly_coefficients(elt)
    assert len(parts) == 3  # degrees 0..2
    assert not parts[1]     # parity: only u-powers of m's parity occur
    basis = build_basis(spec.cfg)
    chi = hc_image_upoly(basis, elt)
    assert chi == symfun.target_chi("o", "sym", 2, 3)


def test_trace_conventions():
    assert trace_side_agreement(ActionConfig("o", 3), "sym", 2, (1, -1))
    assert trace_side_agreement(ActionConfig("sp", 4), "asym", 2, (2, 1))
    cfg = ActionConfig("o", 3)
    assert verify_trace_permutation(cfg, "sym", 2, (2, 1), (1, 2), (0, -1))
    assert verify_trace_permutation(ActionConfig("sp", 4), "asym", 3,
                                    (3, 1, 2), (2, 3, 1), (1, -2, 3))


def test_element_json_roundtrip():
    for spec in (theorem_spec("o", "asym", 1, 4),
                 CasimirSpec(ActionConfig("sp", 4), "sym", 2)):
        basis = build_basis(spec.cfg)
        elt = (build_casimir(spec) if spec.shifts is not None
               else build_casimir_upoly(spec))
        data = element_to_json(basis, elt, {"family": spec.cfg.family,
                                            "N": spec.cfg.N})
        assert element_from_json(basis, data) == elt


def test_report_json_schema():
    r = verify_theorem("o", "sym", 1, 3)
    d = r.to_json()
    assert d["statement"] == "orth-sym-theorem"
    assert d["family"] == "o" and d["N"] == 3 and d["k"] == 1
    assert d["pass"] is True
    assert isinstance(d["millis"], int)
    assert "terms" in d["chi"] and "terms" in d["target"]
    assert r.line().startswith("PASS orth-sym-theorem o3 k=1")

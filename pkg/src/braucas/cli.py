"""Command-line front end: build elements, images, verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 pole
(literal evaluation undefined), 4 non-central input element.  Output is
byte-deterministic for fixed flags: every iteration order is fixed and
randomized checks draw from a seeded generator.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .scalars import Q, OMEGA, PoleError
from . import brauer
from .tensor import ActionConfig, rep_diagram, rep_element
from .liealg import build_basis, NonCentralError, hc_image, check_defining_relation
from . import symfun
from .casimir import (CasimirSpec, theorem_spec, build_casimir,
                      build_casimir_upoly, hc_image_upoly,
                      element_to_json, element_from_json,
                      verify_theorem, verify_corollary,
                      verify_trace_permutation, trace_side_agreement)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_POLE = 3
EXIT_NONCENTRAL = 4

DEFAULT_SEED = 20260823


# ---------------------------------------------------------------------------
# build
# ---------------------------------------------------------------------------

def _parse_shifts(text, m):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != m:
        raise ValueError(f"need {m} comma-separated shifts, got {len(parts)}")
    return tuple(Q(p) for p in parts)


def _spec_from_args(args):
    cfg = ActionConfig(args.family, args.N)
    omega_limit = not args.no_omega_limit
    if args.k is not None:
        return theorem_spec(args.family, args.projector, args.k, args.N,
                            omega_limit)
    shifts = (_parse_shifts(args.shifts, args.m) if args.shifts is not None
              else None)
    return CasimirSpec(cfg, args.projector, args.m, shifts, omega_limit)


def cmd_build(args):
    spec = _spec_from_args(args)
    basis = build_basis(spec.cfg)
    elt = (build_casimir(spec) if spec.shifts is not None
           else build_casimir_upoly(spec))
    meta = {
        "family": spec.cfg.family,
        "N": spec.cfg.N,
        "projector": spec.projector,
        "m": spec.m,
        "shifts": ("symbolic" if spec.shifts is None
                   else [str(s) for s in spec.shifts]),
        "omega_limit": spec.omega_limit,
    }
    data = element_to_json(basis, elt, meta)
    out = json.dumps(data, indent=1)
    _write_output(args.output, out + "\n")
    return EXIT_OK


def _write_output(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# hc
# ---------------------------------------------------------------------------

def cmd_hc(args):
    if args.input in (None, "-"):
        data = json.load(sys.stdin)
    else:
        with open(args.input) as fh:
            data = json.load(fh)
    cfg = ActionConfig(data["family"], data["N"])
    basis = build_basis(cfg)
    elt = element_from_json(basis, data)
    symbolic = data.get("shifts") == "symbolic"
    chi = (hc_image_upoly(basis, elt, check=True) if symbolic
           else hc_image(basis, elt, check=True).trim())
    rendered = repr(chi)
    if args.format == "text":
        _write_output(args.output, rendered + "\n")
    else:
        out = {"family": data["family"], "N": data["N"],
               "chi": chi.to_json(), "rendered": rendered}
        _write_output(args.output, json.dumps(out, indent=1) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

def _run_checks(checks, out=sys.stdout):
    """checks: iterable of (name, thunk) -> overall ok; prints one line each."""
    all_ok = True
    for name, thunk in checks:
        t0 = time.perf_counter()
        try:
            ok = bool(thunk())
            note = ""
        except Exception as exc:  # report, never crash the harness
            ok = False
            note = f" [{type(exc).__name__}: {exc}]"
        ms = int((time.perf_counter() - t0) * 1000)
        all_ok &= ok
        out.write(f"{'PASS' if ok else 'FAIL'} {name} ({ms} ms){note}\n")
    return all_ok


def _double_factorial(m):
    out = 1
    for r in range(1, 2 * m, 2):
        out *= r
    return out


def suite_brauer(args):
    m_cap = args.m if args.m is not None else 4
    checks = []
    for m in range(1, m_cap + 1):
        checks.append((f"brauer diagram count m={m}",
                       lambda m=m: len(brauer.all_diagrams(m))
                       == _double_factorial(m)))
    for m in range(1, m_cap + 1):
        def idem(m=m):
            s = brauer.symmetrizer(m)
            a = brauer.antisymmetrizer(m)
            return s * s == s and a * a == a
        checks.append((f"brauer projectors idempotent m={m}", idem))

        def absorb(m=m):
            s = brauer.symmetrizer(m)
            a = brauer.antisymmetrizer(m)
            for x in range(1, m + 1):
                for y in range(x + 1, m + 1):
                    sd = brauer.BrauerElement.from_diagram(
                        brauer.s_diagram(m, x, y))
                    ed = brauer.BrauerElement.from_diagram(
                        brauer.eps_diagram(m, x, y))
                    if sd * s != s or (ed * s):
                        return False
                    if sd * a != a.scale(-1) or (ed * a):
                        return False
            return True
        checks.append((f"brauer projector absorption m={m}", absorb))
    for m in range(2, min(m_cap, 4) + 1):
        def jm_comm(m=m):
            xs = [brauer.jucys_murphy(m, b) for b in range(2, m + 1)]
            return all(x * y == y * x for x in xs for y in xs)
        checks.append((f"jucys-murphy commute m={m}", jm_comm))
    for m in range(2, m_cap + 1):
        def jm_eig(m=m):
            s = brauer.symmetrizer(m)
            a = brauer.antisymmetrizer(m)
            for r in range(2, m + 1):
                x = brauer.jucys_murphy(m, r)
                if x * s != s.scale(Q(r - 1)) or x * a != a.scale(Q(1 - r)):
                    return False
            return True
        checks.append((f"jucys-murphy eigenvalues m={m}", jm_eig))
    return checks


def partial_trace_factor(family, projector, m):
    """Scalar in tr_m rep(projector_m) = scalar * rep(projector_{m-1}).

    As a rational function of omega: (omega+m-3)(omega+2m-2)/(m(omega+2m-4))
    for the symmetrizer, (omega-m+1)/m for the anti-symmetrizer, with one
    global minus sign for the symplectic action.  At omega = N this gives
    the orthogonal scalars (N+m-3)(N+2m-2)/(m(N+2m-4)) and (N-m+1)/m; at
    omega = -2n the symplectic ones (2n-m+3)(n-m+1)/(m(n-m+2)) and
    (2n+m-1)/m, matching the element-level difference recurrences.
    """
    f = closure_factor(projector, m)
    return f if family == "o" else -f


def check_rep_property(cfg, m, rng, pairs):
    """rep(d1) rep(d2) == omega^loops rep(d1 d2) on random diagram pairs."""
    ds = brauer.all_diagrams(m)
    w0 = Q(cfg.omega_value)
    for _ in range(pairs):
        d1, d2 = rng.choice(ds), rng.choice(ds)
        d, loops = brauer.diagram_compose(d1, d2)
        lhs = rep_diagram(cfg, d1) * rep_diagram(cfg, d2)
        if lhs != rep_diagram(cfg, d).map_values(lambda v: v * w0 ** loops):
            return False
    return True


def closure_factor(projector, m):
    """Scalar in close_last_strand(projector_m) = scalar * projector_{m-1},
    as a rational function of omega."""
    if projector == "sym":
        return ((OMEGA + (m - 3)) * (OMEGA + (2 * m - 2))
                / ((OMEGA + (2 * m - 4)) * m))
    return (OMEGA - (m - 1)) / m


def check_closure(projector, m):
    """Algebra-level partial trace: an exact rational-function identity.

    Holds identically in omega, so it also covers the rank where the
    projector itself has no literal specialization (symplectic
    symmetrizer at m = 2n).
    """
    x = (brauer.symmetrizer(m) if projector == "sym"
         else brauer.antisymmetrizer(m))
    y = (brauer.symmetrizer(m - 1) if projector == "sym"
         else brauer.antisymmetrizer(m - 1))
    return brauer.close_last_strand(x) == y.scale(closure_factor(projector, m))


def check_partial_trace(cfg, projector, m):
    """Partial-trace recurrence at the literal rank.

    Both sides keep omega symbolic until a single evaluation at
    omega = +-N at the end.  Valid wherever the projector specializes;
    the symplectic symmetrizer at m = 2n has no literal specialization
    (the entrywise omega-limit of the matrix trace is not the rank
    continuation there), so that rank is carried by check_closure.
    """
    x = (brauer.symmetrizer(m) if projector == "sym"
         else brauer.antisymmetrizer(m))
    y = (brauer.symmetrizer(m - 1) if projector == "sym"
         else brauer.antisymmetrizer(m - 1))
    w0 = cfg.omega_value
    lhs = rep_element(cfg, x).partial_trace(m).eval_omega(w0)
    c = partial_trace_factor(cfg.family, projector, m)
    rhs = rep_element(cfg, y).map_values(lambda v: v * c).eval_omega(w0)
    return lhs == rhs


def suite_tensor(args):
    rng = random.Random(args.seed)
    pairs = args.pairs
    checks = []
    fams = [("o", 3), ("o", 4), ("sp", 4)]
    for family, N in fams:
        for m in (2, 3):
            cfg = ActionConfig(family, N)
            checks.append(
                (f"rep property {family}{N} m={m} ({pairs} pairs)",
                 lambda cfg=cfg, m=m: check_rep_property(cfg, m, rng, pairs)))
    for projector in ("sym", "asym"):
        for m in (2, 3, 4):
            checks.append(
                (f"closure identity {projector} m={m}",
                 lambda p=projector, m=m: check_closure(p, m)))
    for family, N in [("o", 4), ("o", 5), ("sp", 4), ("sp", 6)]:
        cfg = ActionConfig(family, N)
        for projector in ("sym", "asym"):
            for m in (2, 3):
                checks.append(
                    (f"partial trace {family}{N} {projector} m={m}",
                     lambda cfg=cfg, p=projector, m=m:
                     check_partial_trace(cfg, p, m)))
    return checks


def suite_liealg(args):
    checks = []
    for family, N in [("o", 3), ("o", 4), ("o", 5), ("o", 6),
                      ("sp", 4), ("sp", 6)]:
        cfg = ActionConfig(family, N)
        checks.append(
            (f"defining relation {family}{N}",
             lambda cfg=cfg: check_defining_relation(cfg)[0]))
    return checks


def check_classical_limit(kind, k, n, rng):
    """Factorial polynomial at a = 0 equals the classical e_k / h_k."""
    import itertools
    zs = [Q(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(n)]
    zero = lambda i: Q(0)
    if kind == "e":
        got = symfun.factorial_e(k, zs, zero)
        want = sum((_prod(c) for c in itertools.combinations(zs, k)), Q(0))
    else:
        got = symfun.factorial_h(k, zs, zero)
        want = sum((_prod(c) for c in
                    itertools.combinations_with_replacement(zs, k)), Q(0))
    return got == want


def _prod(vals):
    out = Q(1)
    for v in vals:
        out = out * v
    return out


def suite_symfun(args):
    rng = random.Random(args.seed)
    checks = []
    for family, N in [("o", 4), ("o", 5), ("o", 6), ("sp", 4), ("sp", 6)]:
        shift = symfun.ShiftConfig(family, N)
        for kind in ("e", "h"):
            for k in (1, 2, 3):
                checks.append(
                    (f"vanishing {kind}_{k} {family}{N}",
                     lambda kind=kind, k=k, s=shift:
                     symfun.vanishing_check(kind, k, s)))
    for kind in ("e", "h"):
        for k in range(1, 5):
            for n in (2, 3):
                checks.append(
                    (f"classical limit {kind}_{k} n={n}",
                     lambda kind=kind, k=k, n=n:
                     check_classical_limit(kind, k, n, rng)))
    return checks


def _theorem_grid(args):
    if args.N is not None and args.k is not None:
        fams = [args.family] if args.family else ["o", "sp"]
        return [(f, p, args.k, args.N) for f in fams
                for p in ("sym", "asym")
                if not (f == "sp" and args.N % 2)]
    max_N = args.max_N if args.max_N is not None else 5
    max_k = args.max_k if args.max_k is not None else 2
    grid = []
    for N in range(3, max_N + 1):
        for k in range(1, max_k + 1):
            grid.append(("o", "sym", k, N))
            if k <= N // 2:
                grid.append(("o", "asym", k, N))
    for N in range(4, max_N + 2, 2):
        for k in range(1, max_k + 1):
            grid.append(("sp", "sym", k, N))
            grid.append(("sp", "asym", k, N))
    if args.family:
        grid = [g for g in grid if g[0] == args.family]
    return grid


def suite_theorems(args, reports):
    checks = []
    for family, projector, k, N in _theorem_grid(args):
        def run(f=family, p=projector, k=k, N=N):
            r = verify_theorem(f, p, k, N)
            reports.append(r)
            return r.passed
        checks.append((f"theorem {family}{N} {projector} k={k}", run))
    return checks


def suite_corollaries(args, reports):
    max_m = args.max_m if args.max_m is not None else 3
    grids = [("o", (3, 4, 5)), ("sp", (4, 6))]
    if args.family:
        grids = [g for g in grids if g[0] == args.family]
    checks = []
    for family, Ns in grids:
        for N in Ns:
            if args.N is not None and N != args.N:
                continue
            for projector in ("sym", "asym"):
                for m in range(1, max_m + 1):
                    def run(f=family, p=projector, m=m, N=N):
                        r = verify_corollary(f, p, m, N)
                        reports.append(r)
                        return r.passed
                    checks.append(
                        (f"corollary {family}{N} {projector} m={m}", run))
    return checks


def suite_lemma(args):
    rng = random.Random(args.seed)
    checks = []
    for family, N in [("o", 3), ("sp", 4)]:
        cfg = ActionConfig(family, N)
        for projector in ("sym", "asym"):
            for m in (2, 3):
                sigma = list(range(1, m + 1))
                tau = list(range(1, m + 1))
                rng.shuffle(sigma)
                rng.shuffle(tau)
                shifts = tuple(Q(rng.randint(-3, 3)) for _ in range(m))
                checks.append(
                    (f"trace permutation {family}{N} {projector} m={m}",
                     lambda cfg=cfg, p=projector, m=m, s=tuple(sigma),
                     t=tuple(tau), sh=shifts:
                     verify_trace_permutation(cfg, p, m, s, t, sh)))
    checks.append(("trace side convention o3 sym m=2",
                   lambda: trace_side_agreement(ActionConfig("o", 3),
                                                "sym", 2, (Q(1), Q(-1)))))
    return checks


def cmd_verify(args):
    reports = []
    suites = {
        "brauer": lambda: suite_brauer(args),
        "tensor": lambda: suite_tensor(args),
        "liealg": lambda: suite_liealg(args),
        "symfun": lambda: suite_symfun(args),
        "theorems": lambda: suite_theorems(args, reports),
        "corollaries": lambda: suite_corollaries(args, reports),
        "lemma": lambda: suite_lemma(args),
    }
    if args.suite == "all":
        selected = list(suites)
    else:
        selected = [args.suite]
    ok = True
    for name in selected:
        ok &= _run_checks(suites[name]())
    if args.report and reports:
        with open(args.report, "w") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=1)
            fh.write("\n")
    sys.stdout.write("ALL PASS\n" if ok else "FAILURES PRESENT\n")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="braucas",
        description=("Exact trace-form Casimir elements for orthogonal and "
                     "symplectic Lie algebras, with verification suites."))
    sub = parser.add_subparsers(dest="subcommand", required=True)

    pb = sub.add_parser("build", help="build one element as JSON")
    pb.add_argument("--family", required=True, choices=["o", "sp"])
    pb.add_argument("--N", required=True, type=int)
    pb.add_argument("--projector", required=True, choices=["sym", "asym"])
    group = pb.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int,
                       help="use the 2k-leg theorem shift pattern")
    group.add_argument("--m", type=int,
                       help="leg count; symbolic u unless --shifts given")
    pb.add_argument("--shifts", help="comma-separated rational shifts")
    pb.add_argument("--no-omega-limit", action="store_true",
                    help="evaluate coefficients literally (may hit a pole)")
    pb.add_argument("--output", "-o", default="-")
    pb.set_defaults(func=cmd_build)

    ph = sub.add_parser("hc", help="Harish-Chandra image of an element JSON")
    ph.add_argument("--input", "-i", default="-")
    ph.add_argument("--output", "-o", default="-")
    ph.add_argument("--format", choices=["json", "text"], default="json")
    ph.set_defaults(func=cmd_hc)

    pv = sub.add_parser("verify", help="run verification suites")
    pv.add_argument("--suite", default="all",
                    choices=["brauer", "tensor", "liealg", "symfun",
                             "theorems", "corollaries", "lemma", "all"])
    pv.add_argument("--family", choices=["o", "sp"])
    pv.add_argument("--N", type=int)
    pv.add_argument("--k", type=int)
    pv.add_argument("--m", type=int)
    pv.add_argument("--max-N", dest="max_N", type=int)
    pv.add_argument("--max-k", dest="max_k", type=int)
    pv.add_argument("--max-m", dest="max_m", type=int)
    pv.add_argument("--pairs", type=int, default=10,
                    help="random diagram pairs per rep-property check")
    pv.add_argument("--seed", type=int, default=DEFAULT_SEED)
    pv.add_argument("--report", help="write VerificationReport JSON here")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PoleError as exc:
        sys.stderr.write(f"pole: {exc}\n")
        return EXIT_POLE
    except NonCentralError as exc:
        sys.stderr.write(f"non-central: {exc}\n")
        return EXIT_NONCENTRAL
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

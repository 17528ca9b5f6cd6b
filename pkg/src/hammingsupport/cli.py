"""Command-line front end.

Subcommands: gen, verify, project, reduce, bound, minsupport, characterize,
selfcheck.  Values print as exact fractions, coordinates are 1-based on the
command line (the Python API is 0-based), and --json switches the report
commands to machine-readable output.

Exit codes: 0 success/conclusive, 1 usage or regime error, 2 inconclusive
(search budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import characterize as chz
from . import constructions as cons
from . import reduction, search, spectra
from .core import GridFunction, HGFError, dumps_hgf, read_hgf, write_hgf


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this tool reserves 2 for budget stops
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(f"error: {message}")


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SystemExit(f"error: bad rational {text!r}") from None


def _parse_factor(text: str) -> cons.ElementaryFactor:
    text = text.strip()
    if "(" in text:
        kind, rest = text.split("(", 1)
        if not rest.endswith(")"):
            raise SystemExit(f"error: bad factor {text!r}")
        params = tuple(int(p) for p in rest[:-1].split(","))
    else:
        kind, params = text, ()
    try:
        return cons.ElementaryFactor(kind.strip(), params)
    except ValueError as exc:
        raise SystemExit(f"error: bad factor {text!r}: {exc}") from None


def _cycles_one_based(sigma: tuple[int, ...]) -> str:
    seen = [False] * len(sigma)
    parts = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        nxt = sigma[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = sigma[nxt]
        parts.append("(" + " ".join(str(c + 1) for c in cycle) + ")")
    return "".join(parts)


def _emit(f: GridFunction, out: str | None) -> None:
    if out:
        write_hgf(f, out)
    else:
        sys.stdout.write(dumps_hgf(f))


def _note(msg: str, to_stderr: bool) -> None:
    print(msg, file=sys.stderr if to_stderr else sys.stdout)


# -- gen -----------------------------------------------------------------


def _cmd_gen(args) -> int:
    family = args.family
    if family in ("f1", "f2"):
        for name in ("n", "q", "i", "j"):
            if getattr(args, name) is None:
                raise SystemExit(f"error: --{name} is required for {family}")
        factors = None
        if args.factors:
            factors = [_parse_factor(t) for t in args.factors.split(";") if t.strip()]
        c = _parse_fraction(args.c) if args.c else 1
        build = cons.build_F1 if family == "f1" else cons.build_F2
        f = build(args.n, args.q, args.i, args.j, factors, c)
        membership = (args.i, args.j)
    elif family in ("a1", "a2", "a3", "a4"):
        if args.q is None:
            raise SystemExit("error: --q is required for elementary factors")
        params = ()
        if family in ("a1", "a2"):
            if args.k is None or args.m is None:
                raise SystemExit(f"error: --k and --m are required for {family}")
            params = (args.k, args.m)
        elif family == "a4":
            if args.m is None:
                raise SystemExit("error: --m is required for a4")
            params = (args.m,)
        f = cons.elementary(cons.ElementaryFactor(family, params), args.q)
        membership = {"a1": (1, 1), "a2": (1, 1), "a3": (0, 0), "a4": (0, 1)}[family]
    elif family == "counterexample-g":
        if args.q is None:
            raise SystemExit("error: --q is required for counterexample-g")
        f = cons.counterexample_g(args.q)
        membership = (1, 2)
    elif family == "counterexample-h":
        f = cons.counterexample_h()
        membership = (2, 2)
    else:  # counterexample-v
        f = cons.counterexample_v()
        membership = (2, 2)
    _emit(f, args.out)
    to_stderr = args.out is None
    _note(f"support {f.support_size()}", to_stderr)
    lo, hi = membership
    _note(
        f"member of U_[{lo},{hi}]({f.n},{f.q}): {spectra.in_direct_sum(f, lo, hi)}",
        to_stderr,
    )
    return 0


# -- verify ----------------------------------------------------------------


def _cmd_verify(args) -> int:
    f = read_hgf(args.file)
    profile = spectra.spectral_profile(f)
    uniform = reduction.is_uniform(f) if f.n >= 1 else None
    report: dict = {
        "n": f.n,
        "q": f.q,
        "support": f.support_size(),
        "profile": list(profile),
    }
    if uniform is not None:
        report["uniform"] = uniform.uniform
        report["uniform_witnesses"] = [
            None if w is None else w for w in uniform.witnesses
        ]
    if args.lo is not None and args.hi is not None:
        report["range"] = [args.lo, args.hi]
        report["member"] = spectra.in_direct_sum(f, args.lo, args.hi)
    if f.is_zero():
        report["warning"] = "zero function: trivially in every subspace"
    if args.json:
        print(json.dumps(report))
        return 0
    print(f"n={f.n} q={f.q} support={f.support_size()}")
    print("profile (nonzero projections):", " ".join(map(str, profile)) or "-")
    if uniform is not None:
        ws = " ".join("-" if w is None else str(w) for w in uniform.witnesses)
        print(f"uniform: {uniform.uniform} (exceptional symbols per coordinate: {ws})")
    if "member" in report:
        print(f"member of U_[{args.lo},{args.hi}]: {report['member']}")
    if "warning" in report:
        print(report["warning"])
    return 0


# -- project ---------------------------------------------------------------


def _cmd_project(args) -> int:
    f = read_hgf(args.file)
    _emit(spectra.project_eigenspace(f, args.i), args.out)
    return 0


# -- reduce ------------------------------------------------------------------


def _cmd_reduce(args) -> int:
    f = read_hgf(args.file)
    r = args.coord - 1
    if not 0 <= r < f.n:
        raise SystemExit(f"error: coordinate {args.coord} out of range 1..{f.n}")
    parts = reduction.slices(f, r)
    profile = spectra.spectral_profile(f)
    lo = args.lo if args.lo is not None else (profile[0] if profile else 0)
    hi = args.hi if args.hi is not None else (profile[-1] if profile else 0)
    descent = reduction.check_lemma_reduction(f, lo, hi, r)
    ineq = reduction.support_lower_bound_inequality(f, r)
    report: dict = {
        "coordinate": args.coord,
        "range": [lo, hi],
        "slice_supports": [p.support_size() for p in parts],
        "descent_precondition": descent.precondition_ok,
        "descent_cases": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in descent.cases
        ],
        "slice_inequality": {
            "applicable": ineq.precondition_ok,
            "lhs": ineq.lhs,
            "rhs": ineq.rhs,
        },
    }
    if args.symbol is not None:
        van = reduction.check_lemma_vanishing_slices(f, lo, hi, r, args.symbol)
        report["vanishing_slices"] = {
            "precondition": van.precondition_ok,
            "nonzero_slices": list(van.nonzero_slices),
            "conclusion": van.conclusion_ok,
        }
    if args.json:
        print(json.dumps(report))
        return 0
    print(f"slices at coordinate {args.coord}: supports", report["slice_supports"])
    print(f"range [{lo},{hi}] descent checks "
          f"(precondition {'ok' if descent.precondition_ok else 'FAILED'}):")
    for case in descent.cases:
        mark = "pass" if case.passed else f"FAIL ({case.detail})"
        print(f"  {case.name}: {mark}")
    if ineq.precondition_ok:
        print(f"slice inequality: |f| = {ineq.lhs} >= {ineq.rhs}")
    else:
        print("slice inequality: not applicable (leading slices differ)")
    if "vanishing_slices" in report:
        van = report["vanishing_slices"]
        print(
            f"vanishing-slices rule: precondition {van['precondition']}, "
            f"conclusion {van['conclusion']}"
        )
    return 0


# -- bound -------------------------------------------------------------------


def _cmd_bound(args) -> int:
    b = cons.min_support_bound(args.n, args.q, args.i, args.j)
    if args.json:
        print(
            json.dumps(
                {
                    "value": b.value,
                    "regime": b.regime.value,
                    "valid": b.valid,
                    "characterized": b.characterized,
                    "uniform_value": b.uniform_value,
                    "note": b.note,
                }
            )
        )
        return 0
    print(f"bound {b.value} ({b.regime.value})")
    print(f"valid at q={args.q}: {b.valid}; equality characterized: {b.characterized}")
    if b.uniform_value is not None:
        print(f"uniform-function bound: {b.uniform_value}")
    print(b.note)
    return 0


# -- minsupport ---------------------------------------------------------------


def _cmd_minsupport(args) -> int:
    budget = search.SearchBudget(
        max_support=args.max_support,
        max_subsets=args.max_subsets,
        symmetry_pruning=not args.no_prune,
    )
    report = search.find_minimum(args.n, args.q, args.lo, args.hi, budget)
    if args.emit_witness and report.witness is not None:
        write_hgf(report.witness, args.emit_witness)
    if args.json:
        print(
            json.dumps(
                {
                    "minimum": report.minimum,
                    "lower": report.lower,
                    "upper": report.upper,
                    "conclusive": report.conclusive,
                    "subsets_examined": report.subsets_examined,
                    "witness_support": (
                        None if report.witness is None else report.witness.support_size()
                    ),
                }
            )
        )
    elif report.conclusive:
        print(f"minimum support in U_[{args.lo},{args.hi}]({args.n},{args.q}): "
              f"{report.minimum}")
        print(f"rank tests: {report.subsets_examined}")
    else:
        upper = "?" if report.upper is None else report.upper
        print(f"inconclusive: minimum in [{report.lower}, {upper}] "
              f"after {report.subsets_examined} rank tests")
    return 0 if report.conclusive else 2


# -- characterize --------------------------------------------------------------


def _cmd_characterize(args) -> int:
    f = read_hgf(args.file)
    verdict = chz.is_minimum_and_characterized(f, args.lo, args.hi)
    fact = verdict.factorization
    if args.json:
        cert = None
        if fact.certificate is not None:
            cert = {
                "family": fact.certificate.family,
                "sigma": list(fact.certificate.sigma),
                "factors": [str(x) for x in fact.certificate.factors],
                "c": _fmt(fact.certificate.c),
            }
        print(
            json.dumps(
                {
                    "support": verdict.support,
                    "bound": verdict.bound.value,
                    "meets_bound": verdict.meets_bound,
                    "status": fact.status.value,
                    "certificate": cert,
                    "summary": verdict.summary,
                }
            )
        )
        return 0
    print(verdict.summary)
    print(f"support {verdict.support}, formula value {verdict.bound.value} "
          f"({verdict.bound.regime.value}); {verdict.bound.note}")
    if fact.certificate is not None:
        cert = fact.certificate
        print(f"certificate: family {cert.family}, c = {_fmt(cert.c)}")
        print(f"  sigma = {_cycles_one_based(cert.sigma)}")
        print("  factors:", " ".join(str(x) for x in cert.factors))
    elif fact.reason:
        print(fact.reason)
    return 0


# -- selfcheck ------------------------------------------------------------------


def _random_member(n, q, lo, hi, rng) -> GridFunction:
    """A nonzero integer-valued member of U_[lo,hi](n,q)."""
    while True:
        raw = GridFunction(
            n, q, tuple(Fraction(rng.randint(-9, 9)) for _ in range(q**n))
        )
        f = spectra.project_span(raw, lo, hi).scale(q**n)
        if not f.is_zero():
            return f


def _check_elementary_memberships():
    for q in range(2, 8):
        for k in range(q):
            for m in range(q):
                f = cons.elementary(cons.a1(k, m), q)
                assert spectra.is_eigenfunction(f, 1) and f.support_size() == 2 * (q - 1)
                if k != m:
                    g = cons.elementary(cons.a2(k, m), q)
                    assert spectra.is_eigenfunction(g, 1) and g.support_size() == 2
        assert spectra.is_eigenfunction(cons.elementary(cons.a3(), q), 0)
        for m in range(q):
            h = cons.elementary(cons.a4(m), q)
            assert spectra.in_direct_sum(h, 0, 1) and h.support_size() == 1


def _check_family_constructions(rng, qs=(3, 4), n_max=3, draws=3):
    for q in qs:
        for n in range(1, n_max + 1):
            for i in range(n + 1):
                for j in range(i, n + 1):
                    for _ in range(draws):
                        if i + j <= n:
                            f = cons.build_F1(n, q, i, j, _random_f1(n, q, i, j, rng))
                            expect = cons.f1_support_size(n, q, i, j)
                        else:
                            f = cons.build_F2(n, q, i, j, _random_f2(n, q, i, j, rng))
                            expect = cons.f2_support_size(n, q, i, j)
                        assert f.support_size() == expect
                        assert spectra.in_direct_sum(f, i, j)


def _random_f1(n, q, i, j, rng):
    out = [cons.a1(rng.randrange(q), rng.randrange(q)) for _ in range(i)]
    out += [cons.a3() for _ in range(n - i - j)]
    out += [cons.a4(rng.randrange(q)) for _ in range(j - i)]
    return out


def _random_f2(n, q, i, j, rng):
    out = [cons.a1(rng.randrange(q), rng.randrange(q)) for _ in range(n - j)]
    for _ in range(i + j - n):
        k = rng.randrange(q)
        m = rng.randrange(q - 1)
        out.append(cons.a2(k, m if m < k else m + 1))
    out += [cons.a4(rng.randrange(q)) for _ in range(j - i)]
    return out


def _check_projector_algebra(rng, configs=((2, 3), (3, 3), (2, 4), (3, 4))):
    for n, q in configs:
        raw = GridFunction(
            n, q, tuple(Fraction(rng.randint(-9, 9)) for _ in range(q**n))
        )
        parts = spectra.decompose(raw)
        total = parts[0]
        for p in parts[1:]:
            total = total + p
        assert total == raw
        for i, part in enumerate(parts):
            assert spectra.is_eigenfunction(part, i)
            again = spectra.decompose(part)
            for j, piece in enumerate(again):
                assert piece == (part if j == i else GridFunction.zero(n, q))
        for i in range(n + 1):
            assert spectra.eigenspace_dimension(n, q, i) == spectra.krawtchouk(n, q, i, 0)


def _check_slice_descent(rng, configs=((2, 3), (3, 3), (2, 4), (3, 4)), rounds=10):
    for n, q in configs:
        for _ in range(rounds):
            lo = rng.randint(0, n)
            hi = rng.randint(lo, n)
            f = _random_member(n, q, lo, hi, rng)
            r = rng.randrange(n)
            assert reduction.check_lemma_reduction(f, lo, hi, r).passed
            ineq = reduction.support_lower_bound_inequality(f, r)
            if ineq.precondition_ok:
                assert ineq.passed


def _check_partition_and_uniformity(rng):
    # F1 products are uniform; F2 products are not (their a2 coordinate has
    # two distinct nonzero slices once q >= 3)
    for n, q in ((2, 3), (3, 3), (3, 4)):
        for i in range(n + 1):
            for j in range(i, n + 1):
                if i + j <= n:
                    f = cons.build_F1(n, q, i, j, _random_f1(n, q, i, j, rng))
                    assert reduction.is_uniform(f).uniform
                else:
                    f = cons.build_F2(n, q, i, j, _random_f2(n, q, i, j, rng))
                    assert not reduction.is_uniform(f).uniform
                for r in range(n):
                    total = sum(p.support_size() for p in reduction.slices(f, r))
                    assert total == f.support_size()


def _check_minimality_quick():
    expectations = [(2, 3, 1, 1, 4), (2, 3, 0, 1, 3), (2, 3, 1, 2, 2)]
    expectations += [(1, q, 1, 1, 2) for q in (3, 4, 5)]
    for n, q, lo, hi, value in expectations:
        report = search.verify_lower_bound(n, q, lo, hi)
        assert report.conclusive and report.holds, (n, q, lo, hi)
        assert report.bound.value == value


def _check_fixture_g():
    for q in (4, 5, 6):
        g = cons.counterexample_g(q)
        assert g.support_size() == 2
        assert spectra.in_direct_sum(g, 1, 2)
        left = cons.elementary(cons.a2(0, q - 1), q).tensor(
            cons.elementary(cons.a4(0), q)
        )
        right = cons.elementary(cons.a4(q - 1), q).tensor(
            cons.elementary(cons.a2(0, q - 1), q)
        )
        assert g == left + right
        status = chz.factorize(g, 1, 2).status
        assert status is chz.FactorizeStatus.UNCHARACTERIZED_REGIME


def _check_fixture_h():
    h = cons.counterexample_h()
    assert h.support_size() == 12
    assert spectra.is_eigenfunction(h, 2)
    assert cons.min_support_bound(3, 4, 2, 2).value == 12
    assert chz.factorize(h, 2, 2).status is chz.FactorizeStatus.NOT_IN_FAMILY


def _check_fixture_v():
    v = cons.counterexample_v()
    assert v.support_size() == 6
    assert spectra.is_eigenfunction(v, 2)
    bound = cons.min_support_bound(3, 3, 2, 2)
    assert bound.value == 8 and not bound.valid
    assert v.support_size() < bound.value


def _check_roundtrips(rng, rounds=10):
    for _ in range(rounds):
        q = rng.choice((3, 4, 5))
        n = rng.randint(1, 3)
        i = rng.randint(0, n)
        j = rng.randint(i, n)
        c = Fraction(rng.choice((1, 2, -1, -3)), rng.choice((1, 2)))
        if i + j <= n:
            f = cons.build_F1(n, q, i, j, _random_f1(n, q, i, j, rng), c)
        elif i == j:
            f = cons.build_F2(n, q, i, j, _random_f2(n, q, i, j, rng), c)
        else:
            continue
        sigma = list(range(n))
        rng.shuffle(sigma)
        g = f.permute(tuple(sigma))
        result = chz.factorize(g, i, j)
        assert result.status is chz.FactorizeStatus.CERTIFIED
        assert result.certificate.matches(g)


def _check_tensor_additivity(rng, rounds=10):
    for _ in range(rounds):
        q = rng.choice((3, 4))
        m = rng.randint(1, 2)
        n = rng.randint(1, 2)
        i = rng.randint(0, m)
        j = rng.randint(0, n)
        f = _random_member(m, q, i, i, rng)
        g = _random_member(n, q, j, j, rng)
        assert spectra.eigenvalue(m, q, i) + spectra.eigenvalue(n, q, j) == \
            spectra.eigenvalue(m + n, q, i + j)
        assert spectra.is_eigenfunction(f.tensor(g), i + j)


def _check_minimality_full():
    for n, q, lo, hi, value in ((2, 4, 1, 1, 6), (3, 3, 0, 1, 9), (2, 5, 1, 1, 8)):
        report = search.verify_lower_bound(n, q, lo, hi)
        assert report.conclusive and report.holds
        assert report.bound.value == value


def _check_open_regime_minimum():
    report = search.find_minimum(3, 3, 2, 2)
    assert report.conclusive and report.minimum == 6
    assert report.witness.support_size() == 6
    assert spectra.in_direct_sum(report.witness, 2, 2)


def _check_uniform_bound():
    for n, q in ((2, 3), (2, 4), (3, 3)):
        for i in range(n + 1):
            for j in range(i, n + 1):
                if i + j < n:
                    continue
                report = search.find_minimum(n, q, i, j)
                assert report.conclusive
                if reduction.is_uniform(report.witness).uniform:
                    assert report.minimum >= cons.uniform_support_bound(n, q, i, j)


QUICK_CHECKS = [
    ("elementary memberships (q <= 7)", lambda rng: _check_elementary_memberships()),
    ("product families: support and membership", _check_family_constructions),
    ("projector algebra", _check_projector_algebra),
    ("slice descent rules", _check_slice_descent),
    ("slice partition and uniformity of products", _check_partition_and_uniformity),
    ("exhaustive minimality, small instances", lambda rng: _check_minimality_quick()),
    ("sharpness fixture g (q = 4, 5, 6)", lambda rng: _check_fixture_g()),
    ("sharpness fixture h (q = 4)", lambda rng: _check_fixture_h()),
    ("sharpness fixture v (q = 3)", lambda rng: _check_fixture_v()),
    ("factorization round-trips", _check_roundtrips),
    ("tensor eigen additivity", _check_tensor_additivity),
]

FULL_CHECKS = [
    ("exhaustive minimality, larger instances", lambda rng: _check_minimality_full()),
    ("minimum in U_[2,2](3,3) is 6, below the formula", lambda rng: _check_open_regime_minimum()),
    ("uniform-function bound on search witnesses", lambda rng: _check_uniform_bound()),
]


def selfcheck_rows(scale: str = "quick", seed: int = 20240923):
    checks = list(QUICK_CHECKS)
    if scale == "full":
        checks += FULL_CHECKS
    rows = []
    for name, fn in checks:
        rng = random.Random(seed)
        start = time.perf_counter()
        try:
            fn(rng)
            passed, detail = True, ""
        except AssertionError as exc:
            passed, detail = False, str(exc)
        rows.append((name, passed, time.perf_counter() - start, detail))
    return rows


def _cmd_selfcheck(args) -> int:
    rows = selfcheck_rows(args.scale)
    if args.json:
        print(
            json.dumps(
                [
                    {"name": n, "passed": p, "seconds": round(t, 3), "detail": d}
                    for n, p, t, d in rows
                ]
            )
        )
    else:
        width = max(len(n) for n, *_ in rows)
        for name, passed, seconds, detail in rows:
            status = "pass" if passed else f"FAIL {detail}"
            print(f"{name:<{width}}  {seconds:7.2f}s  {status}")
    return 0 if all(p for _, p, _, _ in rows) else 1


# -- parser wiring --------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="hammingsupport")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a construction in HGF format")
    gen.add_argument(
        "--family",
        required=True,
        choices=[
            "f1", "f2", "a1", "a2", "a3", "a4",
            "counterexample-g", "counterexample-h", "counterexample-v",
        ],
    )
    gen.add_argument("--n", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--i", type=int)
    gen.add_argument("--j", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--c", help="nonzero rational scalar, e.g. -3/2")
    gen.add_argument(
        "--factors", help="semicolon-separated factor list, e.g. 'a1(2,1);a3;a4(0)'"
    )
    gen.add_argument("-o", "--out")
    gen.set_defaults(fn=_cmd_gen)

    verify = sub.add_parser("verify", help="projection profile of an HGF file")
    verify.add_argument("file")
    verify.add_argument("--lo", type=int)
    verify.add_argument("--hi", type=int)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(fn=_cmd_verify)

    project = sub.add_parser("project", help="project onto one eigenspace")
    project.add_argument("file")
    project.add_argument("--i", type=int, required=True)
    project.add_argument("-o", "--out")
    project.set_defaults(fn=_cmd_project)

    reduce_p = sub.add_parser("reduce", help="slices and slice-rule reports")
    reduce_p.add_argument("file")
    reduce_p.add_argument("--coord", type=int, required=True, help="1-based coordinate")
    reduce_p.add_argument("--lo", type=int)
    reduce_p.add_argument("--hi", type=int)
    reduce_p.add_argument("--symbol", type=int, help="check the vanishing-slices rule")
    reduce_p.add_argument("--json", action="store_true")
    reduce_p.set_defaults(fn=_cmd_reduce)

    bound = sub.add_parser("bound", help="minimum-support formula and validity")
    bound.add_argument("--n", type=int, required=True)
    bound.add_argument("--q", type=int, required=True)
    bound.add_argument("--i", type=int, required=True)
    bound.add_argument("--j", type=int, required=True)
    bound.add_argument("--json", action="store_true")
    bound.set_defaults(fn=_cmd_bound)

    mins = sub.add_parser("minsupport", help="exhaustive minimum-support search")
    mins.add_argument("--n", type=int, required=True)
    mins.add_argument("--q", type=int, required=True)
    mins.add_argument("--lo", type=int, required=True)
    mins.add_argument("--hi", type=int, required=True)
    mins.add_argument("--max-support", type=int)
    mins.add_argument("--max-subsets", type=int)
    mins.add_argument("--no-prune", action="store_true")
    mins.add_argument("--emit-witness")
    mins.add_argument("--json", action="store_true")
    mins.set_defaults(fn=_cmd_minsupport)

    char = sub.add_parser("characterize", help="minimality verdict and certificate")
    char.add_argument("file")
    char.add_argument("--lo", type=int, required=True)
    char.add_argument("--hi", type=int, required=True)
    char.add_argument("--json", action="store_true")
    char.set_defaults(fn=_cmd_characterize)

    self_p = sub.add_parser("selfcheck", help="re-verify the built-in claim battery")
    self_p.add_argument("--scale", choices=["quick", "full"], default="quick")
    self_p.add_argument("--json", action="store_true")
    self_p.set_defaults(fn=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 1
        return 0 if exc.code is None else int(exc.code)
    except (HGFError, cons.RegimeError, spectra.ScaleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

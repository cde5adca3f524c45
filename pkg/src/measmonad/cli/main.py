"""Command-line front end.

Exit codes: 0 success, 1 a law suite failed, 2 bad input (unreadable or
malformed document, wrong kind of measure, unknown map).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from decimal import Decimal, localcontext
from fractions import Fraction

from ..em_algebra import (
    barycenter,
    check_algebra_laws,
    check_convexity,
    check_integration_linearity,
    free_algebra,
    integrate,
    real_algebra,
    vector_algebra,
)
from ..errors import KindMismatch
from ..laws import LawReport
from ..monad import check_monad_laws, check_monad_morphism, kappa
from ..pettis import (
    Functional,
    check_pettis_algebra,
    coordinate_functionals,
    enough_pettis_equivalence_check,
    pettis_integral,
    verify_pettis,
)
from ..signed_measure import SignedMeasure, jordan_hahn, pushforward, total_variation
from ..spaces import (
    Box,
    FiniteLabeled,
    IntegerLine,
    Interval,
    MeasureSpace,
    Morphism,
    RationalLine,
    RationalVector,
    Space,
    abs_bound,
    identity,
)
from . import grid
from .document import dump_measure_document, dump_point, measure_to_dict, parse_measure_document

EXIT_OK, EXIT_LAW_FAILURE, EXIT_BAD_INPUT = 0, 1, 2


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# rendering


def render_rational(q: Fraction, decimal: int | None) -> str:
    if decimal is None:
        return str(q)
    with localcontext() as ctx:
        ctx.prec = max(50, decimal + 30)
        value = Decimal(q.numerator) / Decimal(q.denominator)
        return str(value.quantize(Decimal(1).scaleb(-decimal)))


def render_point(p, decimal: int | None = None) -> str:
    if isinstance(p, Fraction):
        return render_rational(p, decimal)
    if isinstance(p, int):
        return str(p)
    if isinstance(p, tuple):
        return "(" + ", ".join(render_point(c, decimal) for c in p) + ")"
    if isinstance(p, SignedMeasure):
        return dump_measure_document(p).rstrip("\n")
    return str(p)


def _parse_row(text: str) -> list[Fraction]:
    try:
        return [Fraction(c.strip()) for c in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational list {text!r}") from exc


def _parse_matrix(text: str) -> list[list[Fraction]]:
    rows = [_parse_row(r) for r in text.split(";")]
    if len({len(r) for r in rows}) != 1:
        raise UsageError(f"ragged matrix {text!r}")
    return rows


# ---------------------------------------------------------------------------
# built-in morphisms


def catalog_morphism(args, domain: Space) -> Morphism:
    """The named map selected by ``--map`` (``identity``, ``mod``, ``affine``, ``proj``)."""
    name = args.map
    if name == "identity":
        return identity(domain)
    if name == "mod":
        if not isinstance(domain, IntegerLine):
            raise UsageError("mod needs a measure on the integers")
        k = args.k
        if k is None or k < 1:
            raise UsageError("mod needs --k >= 1")
        return Morphism(domain, domain, lambda n: n % k, lambda b: Interval(domain, 0, k - 1), name=f"mod{k}")
    if name == "proj":
        if not isinstance(domain, RationalVector):
            raise UsageError("proj needs a measure on a vector space")
        i = args.index
        if i is None or not 0 <= i < domain.dimension:
            raise UsageError(f"proj needs --index in [0, {domain.dimension})")
        line = RationalLine()
        return Morphism(domain, line, lambda v: v[i], lambda b: _line_ball(line, abs_bound(b)), name=f"pi{i}")
    if name == "affine":
        if args.matrix is None:
            raise UsageError("affine needs --matrix")
        A = _parse_matrix(args.matrix)
        rows, cols = len(A), len(A[0])
        b = _parse_row(args.offset) if args.offset else [Fraction(0)] * rows
        if len(b) != rows:
            raise UsageError("--offset length must match the number of matrix rows")
        norm = max(sum(abs(a) for a in row) for row in A)
        shift = max(abs(c) for c in b)
        if isinstance(domain, (IntegerLine, RationalLine)) and rows == cols == 1:
            line = RationalLine()
            return Morphism(
                domain,
                line,
                lambda x: A[0][0] * x + b[0],
                lambda B: _line_ball(line, norm * abs_bound(B) + shift),
                name="affine",
            )
        if not isinstance(domain, RationalVector) or domain.dimension != cols:
            raise UsageError(f"a {rows}x{cols} matrix cannot act on {domain!r}")
        target = RationalVector(rows)
        return Morphism(
            domain,
            target,
            lambda v: tuple(sum((a * x for a, x in zip(row, v)), Fraction(0)) + c for row, c in zip(A, b)),
            lambda B: Box(target, norm * abs_bound(B) + shift),
            name="affine",
        )
    raise UsageError(f"unknown map {name!r}")


def _line_ball(line, r):
    return Interval(line, -r, r)


def algebra_for(space: Space):
    if isinstance(space, RationalLine):
        return real_algebra()
    if isinstance(space, RationalVector):
        return vector_algebra(space.dimension)
    if isinstance(space, MeasureSpace):
        return free_algebra(space.base)
    raise UsageError(f"no built-in algebra on {space!r}")


def _as_rational_line(mu: SignedMeasure) -> SignedMeasure:
    """View a measure on the integers as one on the rational line."""
    if isinstance(mu.space, IntegerLine):
        line = RationalLine()
        return pushforward(Morphism(mu.space, line, Fraction, lambda b: b, name="incl"), mu)
    return mu


# ---------------------------------------------------------------------------
# commands


def _read(path: str) -> SignedMeasure:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_measure_document(text)


def cmd_tv(args, out):
    mu = _read(args.file)
    print(render_rational(total_variation(mu), args.decimal), file=out)
    return EXIT_OK


def cmd_jordan(args, out):
    mu = _read(args.file)
    jd = jordan_hahn(mu)
    doc = {
        "positive_part": measure_to_dict(jd.positive_part),
        "negative_part": measure_to_dict(jd.negative_part),
        "hahn_positive_set": [dump_point(mu.space, p) for p in mu.space.sorted(jd.hahn_positive_set)],
        "hahn_negative_set": [dump_point(mu.space, p) for p in mu.space.sorted(jd.hahn_negative_set)],
    }
    print(json.dumps(doc, indent=2), file=out)
    return EXIT_OK


def cmd_push(args, out):
    mu = _read(args.file)
    f = catalog_morphism(args, mu.space)
    out.write(dump_measure_document(pushforward(f, mu)))
    return EXIT_OK


def cmd_kappa(args, out):
    M = _read(args.file)
    if not isinstance(M.space, MeasureSpace):
        raise UsageError("kappa needs a measure whose space has kind 'measures'")
    out.write(dump_measure_document(kappa(M)))
    return EXIT_OK


def cmd_integrate(args, out):
    mu = _read(args.file)
    f = catalog_morphism(args, mu.space)
    image = _as_rational_line(pushforward(f, mu))
    A = algebra_for(image.space)
    value = integrate(A, identity(image.space), image)
    print(render_point(value, args.decimal), file=out)
    return EXIT_OK


def cmd_barycenter(args, out):
    mu = _as_rational_line(_read(args.file))
    print(render_point(barycenter(algebra_for(mu.space), mu), args.decimal), file=out)
    return EXIT_OK


def cmd_pettis(args, out):
    mu = _read(args.file)
    f = catalog_morphism(args, mu.space)
    if not isinstance(f.codomain, RationalVector):
        raise UsageError(f"pettis needs a map into a vector space, not {f.codomain!r}")
    n = f.codomain.dimension
    x = pettis_integral(n, f, mu)
    functionals = coordinate_functionals(n)
    if args.functionals:
        extra = [Functional(tuple(row)) for row in _parse_matrix(args.functionals)]
        if any(phi.dimension != n for phi in extra):
            raise UsageError(f"functionals must have {n} coefficients")
        functionals += extra
    report = verify_pettis(x, f, mu, functionals)
    print(render_point(x, args.decimal), file=out)
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_LAW_FAILURE


LAW_SUITES = ("monad", "monad-morphism", "algebra", "integration", "convexity", "pettis")


def run_law_suites(seed: int, cases: int, suites=LAW_SUITES) -> LawReport:
    """Run the selected suites; law ids in the result read ``suite:law[@carrier]``."""
    total = LawReport("check-laws", seed)
    carriers = [
        FiniteLabeled(frozenset("abcdef")),
        IntegerLine(),
        RationalVector(2),
    ]

    def add(report, tag=None):
        suffix = f"@{tag}" if tag else ""
        rename = lambda law: f"{report.suite}:{law}{suffix}"  # noqa: E731
        for law, n in report.checks.items():
            total.checks[rename(law)] = n
        total.failures.extend(replace(f, law=rename(f.law)) for f in report.failures)
        total.notes.extend(report.notes)

    if "monad" in suites:
        for X in carriers:
            add(check_monad_laws(X, seed, cases), repr(X))
    if "monad-morphism" in suites:
        for X in carriers:
            add(check_monad_morphism(X, seed, cases), repr(X))
    if "algebra" in suites:
        for A in (real_algebra(), vector_algebra(3), free_algebra(carriers[0])):
            add(check_algebra_laws(A, seed, cases))
    if "integration" in suites:
        add(check_integration_linearity(vector_algebra(3), seed, cases))
    if "convexity" in suites:
        V = RationalVector(2)
        corners = V.finite([(0, 0), (1, 0), (0, 1), (1, 1)])
        add(check_convexity(vector_algebra(2), corners, seed, cases))
    if "pettis" in suites:
        add(enough_pettis_equivalence_check(2, seed, cases))
        add(check_pettis_algebra(2, seed, cases))
    return total


def cmd_check_laws(args, out):
    suites = LAW_SUITES if args.suite == "all" else (args.suite,)
    if args.cases < 1:
        raise UsageError("--cases must be at least 1")
    report = run_law_suites(args.seed, args.cases, suites)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2), file=out)
    else:
        print(_law_table(report), file=out)
        for failure in report.failures[:20]:
            print(f"FAILURE {failure.law} seed={failure.seed} lhs={failure.lhs!r} rhs={failure.rhs!r}", file=out)
        print("ALL LAWS HOLD" if report.passed else f"{len(report.failures)} FAILING CASES", file=out)
    return EXIT_OK if report.passed else EXIT_LAW_FAILURE


def _law_table(report: LawReport) -> str:
    failing = {}
    for f in report.failures:
        failing[f.law] = failing.get(f.law, 0) + 1
    return "\n".join(
        f"{'FAIL' if failing.get(law) else 'PASS'} {law}: {n} cases"
        for law, n in report.checks.items()
    )


def cmd_demo_centroid(args, out):
    if args.region == "unit-square":
        region = grid.unit_square()
    elif args.region == "triangle":
        verts = [_parse_row(v) for v in (args.vertices or "0,0;1,0;0,1").split(";")]
        if len(verts) != 3 or any(len(v) != 2 for v in verts):
            raise UsageError("--vertices needs three 2-d points, e.g. '0,0;1,0;0,1'")
        region = grid.triangle(*verts)
    else:
        if not args.lo or not args.hi:
            raise UsageError("box needs --lo and --hi")
        region = grid.box(_parse_row(args.lo), _parse_row(args.hi))
    mu = grid.grid_uniform(region, args.resolution)
    print(render_point(barycenter(vector_algebra(2), mu), args.decimal), file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="measmonad", description="Exact signed measures and their integrals.")
    parser.add_argument("--decimal", type=int, metavar="D", help="render rationals with D decimal digits")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="measure document ('-' for stdin)")
        return p

    def with_map(p, default="identity"):
        p.add_argument("--map", default=default, choices=["identity", "mod", "affine", "proj"])
        p.add_argument("--k", type=int, help="modulus for --map mod")
        p.add_argument("--matrix", help="rows separated by ';', entries by ',' (e.g. '1,0;0,2')")
        p.add_argument("--offset", help="offset vector for --map affine (e.g. '0,1')")
        p.add_argument("--index", type=int, help="coordinate for --map proj")
        return p

    with_file("tv", "total variation of a measure").set_defaults(func=cmd_tv)
    with_file("jordan", "Jordan and Hahn decomposition").set_defaults(func=cmd_jordan)
    with_map(with_file("push", "direct image along a built-in map")).set_defaults(func=cmd_push)
    with_file("kappa", "flatten a measure on measures").set_defaults(func=cmd_kappa)
    with_map(with_file("integrate", "integral of a built-in map")).set_defaults(func=cmd_integrate)
    with_file("barycenter", "centre of mass of a probability measure").set_defaults(func=cmd_barycenter)
    p = with_map(with_file("pettis", "Pettis integral of a vector-valued map"))
    p.add_argument("--functionals", help="extra functionals to verify against, rows separated by ';'")
    p.set_defaults(func=cmd_pettis)

    p = sub.add_parser("check-laws", help="run the seeded law suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--suite", default="all", choices=("all",) + LAW_SUITES)
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(func=cmd_check_laws)

    p = sub.add_parser("demo-centroid", help="barycentre of a uniform grid measure on a region")
    p.add_argument("--region", default="unit-square", choices=["unit-square", "triangle", "box"])
    p.add_argument("--vertices", help="triangle vertices, e.g. '0,0;1,0;0,1'")
    p.add_argument("--lo", help="box lower corner, e.g. '0,0'")
    p.add_argument("--hi", help="box upper corner, e.g. '2,1'")
    p.add_argument("--resolution", type=int, default=64)
    p.set_defaults(func=cmd_demo_centroid)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    if args.decimal is not None and args.decimal < 0:
        print("error: --decimal must be nonnegative", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        return args.func(args, out)
    except (ValueError, KindMismatch) as exc:
        # DocumentError, UsageError, NotAProbabilityMeasure, EmptyRegion, SpaceMismatch are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run())

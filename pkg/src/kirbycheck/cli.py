"""Command-line surface.

Exit codes: 0 on success, 1 when a check fails (invalid structure,
failing certificate, failing corpus run), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from .formats import (
    ParseError,
    export_dt,
    parse_front_text,
    parse_handle_text,
    parse_movie_text,
    parse_script_text,
    serialize_handle,
)
from .front import rotation_number, stein_check, thurston_bennequin, validate_front, writhe
from .homology import boundary_h1, euler_characteristic, homology
from .movie import complement_structure, double, glue_along_curve, validate_movie, verify_product
from .moves import replay_script
from .presentation import abelianization, certify_trivial, pi1_presentation, tietze_simplify
from .structures import validate

CHECK_FAILED = 1
USAGE_ERROR = 2


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise SystemExit(f"cannot read {path}: {exc}")


def _detect_kind(text: str) -> str:
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        head = body.split()[0]
        if head in ("movie", "core", "birth", "band", "final"):
            return "movie"
        if head in ("front", "lcusp", "rcusp", "cross", "pass", "orient"):
            return "front"
        if head in (
            "script",
            "slide",
            "cancel12",
            "cancel23",
            "dottozero",
            "zerotodot",
            "rethread",
            "reduce",
            "renamecurve",
            "provenance",
        ):
            return "script"
        return "handle"
    return "handle"


def _load_handle(path: str):
    return parse_handle_text(_read(path))[1]


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        print(f"wrote {out}")
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    text = _read(args.file)
    kind = _detect_kind(text)
    if kind == "handle":
        _, hs = parse_handle_text(text)
        report = validate(hs)
        print(report)
        return 0 if report.is_valid else CHECK_FAILED
    if kind == "movie":
        report = validate_movie(parse_movie_text(text))
        print(report)
        return 0 if report.is_valid else CHECK_FAILED
    if kind == "front":
        code = 0
        for front in parse_front_text(text):
            report = validate_front(front)
            print(f"{front.name}: {report}")
            if not report.is_valid:
                code = CHECK_FAILED
        return code
    parse_script_text(text)
    print("ok")
    return 0


def cmd_invariants(args) -> int:
    hs = _load_handle(args.file)
    report = validate(hs)
    if not report.is_valid:
        print(report)
        return CHECK_FAILED
    h0, h1, h2 = homology(hs)
    print(f"H0 = {h0}")
    print(f"H1 = {h1}")
    print(f"H2 = {h2}")
    try:
        print(f"boundary H1 = {boundary_h1(hs)}")
    except ValueError as exc:
        print(f"boundary H1: {exc}")
    print(f"pi1 abelianized = {abelianization(pi1_presentation(hs))}")
    print(f"euler characteristic = {euler_characteristic(hs)}")
    return 0


def cmd_pi1(args) -> int:
    hs = _load_handle(args.file)
    p = pi1_presentation(hs)
    print(p)
    if args.simplify:
        simplified, trace = tietze_simplify(p, args.budget)
        print(f"simplified ({len(trace)} moves): {simplified}")
        cert = certify_trivial(p, args.budget)
        print(f"triviality: {cert.status}")
    return 0


def cmd_apply(args) -> int:
    hs = _load_handle(args.file)
    script = parse_script_text(_read(args.script))
    result, audit = replay_script(hs, script)
    if args.audit:
        print(audit)
    if args.report_dir:
        from .report import write_audit_report

        for path in write_audit_report(audit, args.report_dir, script.name or "audit"):
            print(f"wrote {path}")
    if not audit.ok:
        print(f"script failed: {audit.first_error}")
        return CHECK_FAILED
    _write_or_print(serialize_handle(result, script.name or "result"), args.out)
    return 0


def cmd_movie_complement(args) -> int:
    movie = parse_movie_text(_read(args.file))
    hs = complement_structure(movie)
    _write_or_print(serialize_handle(hs, movie.name + "-complement"), args.out)
    return 0


def cmd_double(args) -> int:
    hs = _load_handle(args.file)
    _write_or_print(serialize_handle(double(hs), "doubled"), args.out)
    return 0


def cmd_verify_product(args) -> int:
    hs = _load_handle(args.file)
    script = parse_script_text(_read(args.script))
    cert = verify_product(hs, script)
    print(cert)
    if args.audit:
        print(cert.audit)
    return 0 if cert.passed else CHECK_FAILED


def cmd_glue(args) -> int:
    base = _load_handle(args.base)
    comp = _load_handle(args.complement)
    notes: list[str] = []
    glued = glue_along_curve(base, args.curve, comp, notes)
    for note in notes:
        print(f"# {note}")
    _write_or_print(serialize_handle(glued, "glued"), args.out)
    return 0


def cmd_tb(args) -> int:
    code = 0
    for front in parse_front_text(_read(args.file)):
        report = validate_front(front)
        if not report.is_valid:
            print(f"{front.name}: invalid: {report}")
            code = CHECK_FAILED
            continue
        try:
            tb = thurston_bennequin(front)
            r = rotation_number(front)
            print(f"{front.name}: tb = {tb}, rotation = {r}, writhe = {writhe(front)}")
        except ValueError as exc:
            print(f"{front.name}: {exc}")
            code = CHECK_FAILED
    return code


def cmd_stein(args) -> int:
    hs = _load_handle(args.file)
    fronts = {}
    for path in args.fronts:
        for front in parse_front_text(_read(path)):
            fronts[front.name] = front
    report = stein_check(hs, fronts)
    print(report)
    return 0 if report.passed else CHECK_FAILED


def cmd_export_dt(args) -> int:
    hs = _load_handle(args.file)
    sys.stdout.write(export_dt(hs, args.components))
    return 0


def cmd_corpus(args) -> int:
    from . import corpus

    if args.action == "list":
        for name in corpus.asset_names():
            asset = corpus.load_asset(name)
            print(f"{name:24s} {asset.kind:7s} {asset.provenance}")
        return 0
    results = corpus.run_corpus()
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} corpus checks passed")
    if args.report_dir:
        from .report import write_corpus_report

        for path in write_corpus_report(results, args.report_dir):
            print(f"wrote {path}")
    return 0 if not failed else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kirbycheck",
        description="verification engine for 4-manifold handle calculus",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a handle/movie/front/script file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("invariants", help="homology, boundary H1, abelianized pi1")
    p.add_argument("file")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("pi1", help="fundamental group presentation")
    p.add_argument("file")
    p.add_argument("--simplify", action="store_true")
    p.add_argument("--budget", type=int, default=10_000)
    p.set_defaults(fn=cmd_pi1)

    p = sub.add_parser("apply", help="replay a move script on a structure")
    p.add_argument("file")
    p.add_argument("script")
    p.add_argument("--audit", action="store_true")
    p.add_argument("--out")
    p.add_argument("--report-dir")
    p.set_defaults(fn=cmd_apply)

    p = sub.add_parser("movie-complement", help="complement handle structure of a movie")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_movie_complement)

    p = sub.add_parser("double", help="double a complement structure")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_double)

    p = sub.add_parser("verify-product", help="certify a doubled complement cancels to a product")
    p.add_argument("file")
    p.add_argument("script")
    p.add_argument("--audit", action="store_true")
    p.set_defaults(fn=cmd_verify_product)

    p = sub.add_parser("glue", help="glue a complement onto a marked curve")
    p.add_argument("base")
    p.add_argument("curve")
    p.add_argument("complement")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_glue)

    p = sub.add_parser("tb", help="Thurston-Bennequin and rotation numbers of fronts")
    p.add_argument("file")
    p.set_defaults(fn=cmd_tb)

    p = sub.add_parser("stein", help="framing = tb - 1 check for every 2-handle")
    p.add_argument("file")
    p.add_argument("--fronts", action="append", required=True)
    p.set_defaults(fn=cmd_stein)

    p = sub.add_parser("export-dt", help="Dowker-Thistlethwaite export of marked components")
    p.add_argument("file")
    p.add_argument("components", nargs="+")
    p.set_defaults(fn=cmd_export_dt)

    p = sub.add_parser("corpus", help="corpus operations")
    p.add_argument("action", choices=["run", "list"])
    p.add_argument("--report-dir")
    p.set_defaults(fn=cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())

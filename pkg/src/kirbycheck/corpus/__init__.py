"""The figure corpus: transcribed assets and the full replay/check battery.

Each asset is a text file with a provenance header naming the figure it
transcribes and the transcription choices (orientations, labels).
``run_corpus`` replays every script and checks every corpus-level
assertion; it is the engine behind ``kirbycheck corpus run``.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..formats import (
    dt_to_gauss,
    export_dt,
    gauss_equivalent,
    parse_dt,
    parse_front_text,
    parse_handle_text,
    parse_movie_text,
    parse_script_text,
    serialize_handle,
)
from ..front import FrontDiagram, stein_check, thurston_bennequin, validate_front
from ..homology import boundary_h1, homology
from ..linalg import Z
from ..movie import (
    check_complement_invariants,
    complement_structure,
    double,
    glue_along_curve,
    homology_cobordism_check,
    verify_product,
)
from ..moves import canonical_form, replay_script
from ..presentation import abelianization, certify_trivial, pi1_presentation
from ..structures import (
    HandleStructure,
    MarkedCurve,
    OneHandle,
    attach_two_handle_along_curve,
    validate,
)
from ..words import Word

TIETZE_BUDGET = 10_000


@dataclass(frozen=True)
class CorpusAsset:
    name: str
    kind: str  # handle | movie | front | script
    provenance: str
    text: str


_FILES = {
    "fig01-knotK": "fig01-knotK.txt",
    "fig01-export": "fig01-export.txt",
    "fig02-movie-K": "fig02-movie-K.txt",
    "fig03-mazur-movie": "fig03-mazur-movie.txt",
    "fig04-complement-K": "fig04-complement-K.txt",
    "fig05-W1": "fig05-W1.txt",
    "fig07-frontK": "fig07-frontK.txt",
    "fig08-post-slide": "fig08-post-slide.txt",
    "fig09-front-eta": "fig09-front-eta.txt",
    "fig10-front-feta": "fig10-front-feta.txt",
    "fig11-W1": "fig11-W1.txt",
    "fig11-fronts": "fig11-fronts.txt",
    "fig12-W2": "fig12-W2.txt",
    "fig12-fronts": "fig12-fronts.txt",
    "fig14-front-mu": "fig14-front-mu.txt",
    "fig15-front-fmu": "fig15-front-fmu.txt",
    "fig16-Q1": "fig16-Q1.txt",
    "fig16-fronts": "fig16-fronts.txt",
    "fig17-Q2": "fig17-Q2.txt",
    "fig17-fronts": "fig17-fronts.txt",
    "cork-W": "cork-W.txt",
    "ribbon-C": "ribbon-C.txt",
    "fig04-to-fig01": "script-fig04-to-fig01.txt",
    "mazur-product": "script-mazur-product.txt",
    "movieK-product": "script-movieK-product.txt",
    "cork-twist-W": "script-cork-twist-W.txt",
    "anticork-twist": "script-anticork-twist.txt",
    "fig08-arrow-slide": "script-fig08-arrow-slide.txt",
    "single-pair-W1": "script-single-pair-W1.txt",
    "single-pair-W2": "script-single-pair-W2.txt",
}


def asset_names() -> list[str]:
    return sorted(_FILES)


def load_asset(name: str) -> CorpusAsset:
    try:
        filename = _FILES[name]
    except KeyError:
        raise KeyError(f"unknown corpus asset {name!r}") from None
    text = resources.files("kirbycheck.corpus").joinpath(filename).read_text()
    provenance = ""
    kind = ""
    for line in text.splitlines():
        if line.startswith("# provenance:"):
            provenance = line[len("# provenance:") :].strip()
        elif line.startswith("# kind:"):
            kind = line[len("# kind:") :].strip()
        elif not line.startswith("#") and line.strip():
            break
    return CorpusAsset(name, kind, provenance, text)


def load_structure(name: str) -> HandleStructure:
    return parse_handle_text(load_asset(name).text)[1]


def load_movie(name: str):
    return parse_movie_text(load_asset(name).text)


def load_script(name: str):
    return parse_script_text(load_asset(name).text)


def load_fronts(name: str) -> dict[str, FrontDiagram]:
    return {f.name: f for f in parse_front_text(load_asset(name).text)}


@dataclass(frozen=True)
class CheckResult:
    group: str
    name: str
    passed: bool
    details: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.details})" if self.details else ""
        return f"{status}  [{self.group}] {self.name}{tail}"


def _checked(results: list[CheckResult], group: str, name: str, fn) -> None:
    try:
        ok, details = fn()
    except Exception as exc:  # a crash is a failing check, not a crash of the run
        ok, details = False, f"{type(exc).__name__}: {exc}"
    results.append(CheckResult(group, name, bool(ok), details))


def run_corpus() -> list[CheckResult]:
    """Replay every corpus script and check every corpus assertion."""
    results: list[CheckResult] = []

    # ---- every asset parses, validates, and round-trips -------------------
    for name in asset_names():
        def parse_one(name=name):
            asset = load_asset(name)
            if not asset.provenance:
                return False, "missing provenance note"
            if asset.kind == "handle":
                hs = parse_handle_text(asset.text)[1]
                report = validate(hs)
                if not report.is_valid:
                    return False, "; ".join(report.violations)
                canonical = canonical_form(hs)
                text = serialize_handle(canonical, name)
                reparsed = parse_handle_text(text)[1]
                if serialize_handle(canonical_form(reparsed), name) != text:
                    return False, "canonical round-trip changed the encoding"
            elif asset.kind == "movie":
                movie = parse_movie_text(asset.text)
                from ..movie import validate_movie

                report = validate_movie(movie)
                if not report.is_valid:
                    return False, "; ".join(report.violations)
            elif asset.kind == "front":
                fronts = parse_front_text(asset.text)
                for f in fronts:
                    report = validate_front(f)
                    if not report.is_valid:
                        return False, f"{f.name}: " + "; ".join(report.violations)
            elif asset.kind == "script":
                parse_script_text(asset.text)
            else:
                return False, f"unknown kind {asset.kind!r}"
            return True, ""

        _checked(results, "assets", f"{name} parses+validates", parse_one)

    # ---- contractibility of the two Stein pictures ------------------------
    for name in ("fig11-W1", "fig12-W2"):
        def contractible(name=name):
            hs = load_structure(name)
            h0, h1, h2 = homology(hs)
            if not (h1.is_trivial and h2.is_trivial):
                return False, f"H1={h1} H2={h2}"
            cert = certify_trivial(pi1_presentation(hs), TIETZE_BUDGET)
            return cert.is_trivial, f"trace length {len(cert.trace)}"

        _checked(results, "contractible", name, contractible)

    # ---- homotopy circle-times-ball pair -----------------------------------
    for name in ("fig16-Q1", "fig17-Q2"):
        def homotopy_s1(name=name):
            hs = load_structure(name)
            h0, h1, h2 = homology(hs)
            ab = abelianization(pi1_presentation(hs))
            ok = h1 == Z and h2.is_trivial and ab == Z
            return ok, f"H1={h1} H2={h2} pi1ab={ab}"

        _checked(results, "homotopy-circle", name, homotopy_s1)

    # ---- captioned tb values ----------------------------------------------
    captions = {
        "fig07-frontK": 4,
        "fig09-front-eta": -3,
        "fig10-front-feta": -3,
        "fig14-front-mu": -1,
        "fig15-front-fmu": -3,
    }
    for name, want in captions.items():
        def tb_check(name=name, want=want):
            fronts = list(load_fronts(name).values())
            got = thurston_bennequin(fronts[0])
            return got == want, f"tb={got}, caption {want}"

        _checked(results, "tb-captions", name, tb_check)

    # ---- Stein criterion ----------------------------------------------------
    for struct, fronts in (
        ("fig11-W1", "fig11-fronts"),
        ("fig12-W2", "fig12-fronts"),
        ("fig16-Q1", "fig16-fronts"),
        ("fig17-Q2", "fig17-fronts"),
    ):
        def stein(struct=struct, fronts=fronts):
            report = stein_check(load_structure(struct), load_fronts(fronts))
            return report.passed, "; ".join(
                f"{v.handle}: {v.framing} vs tb-1={v.tb - 1}" for v in report.verdicts
            )

        _checked(results, "stein", struct, stein)

    # ---- complement invariants for every corpus movie -----------------------
    for name in ("fig02-movie-K", "fig03-mazur-movie"):
        def complement_ok(name=name):
            problems = check_complement_invariants(complement_structure(load_movie(name)))
            return not problems, "; ".join(problems)

        _checked(results, "complement", name, complement_ok)

    # ---- product certificates ------------------------------------------------
    for movie_name, script_name in (
        ("fig03-mazur-movie", "mazur-product"),
        ("fig02-movie-K", "movieK-product"),
    ):
        def product(movie_name=movie_name, script_name=script_name):
            doubled = double(complement_structure(load_movie(movie_name)))
            cert = verify_product(doubled, load_script(script_name))
            return cert.passed, cert.final_summary if cert.passed else "; ".join(cert.failures)

        _checked(results, "product", f"{movie_name} + {script_name}", product)

    # ---- figure 4 reduces to figure 1 ----------------------------------------
    def fig4_to_fig1():
        hs, audit = replay_script(load_structure("fig04-complement-K"), load_script("fig04-to-fig01"))
        if not audit.ok:
            return False, audit.first_error or "replay failed"
        want = load_structure("fig01-knotK")
        same = canonical_form(hs) == canonical_form(want)
        return same, "canonical forms match" if same else "canonical forms differ"

    _checked(results, "reduction", "fig04 -> fig01", fig4_to_fig1)

    # ---- the movie complement matches the transcribed complement -------------
    def movie_matches_fig04():
        built = complement_structure(load_movie("fig02-movie-K"))
        want = load_structure("fig04-complement-K")
        same = canonical_form(built) == canonical_form(want)
        return same, ""

    _checked(results, "reduction", "movie complement == fig04", movie_matches_fig04)

    # ---- cork / anticork twists ------------------------------------------------
    for source, script_name, target in (
        ("fig11-W1", "cork-twist-W", "fig12-W2"),
        ("fig16-Q1", "anticork-twist", "fig17-Q2"),
    ):
        def twist(source=source, script_name=script_name, target=target):
            src = load_structure(source)
            out, audit = replay_script(src, load_script(script_name))
            if not audit.ok:
                return False, audit.first_error or "replay failed"
            if boundary_h1(src) != boundary_h1(out):
                return False, "boundary H1 changed across the twist"
            same = canonical_form(out) == canonical_form(load_structure(target))
            return same, "matches and boundary invariant" if same else "canonical forms differ"

        _checked(results, "twist", f"{source} -> {target}", twist)

    # ---- boundary surgeries along the linking circles -----------------------------------------
    for name, curve in (("fig11-W1", "gamma1"), ("fig12-W2", "gamma2")):
        def surgery(name=name, curve=curve):
            hs = attach_two_handle_along_curve(load_structure(name), curve, "surgery", 0)
            got = boundary_h1(hs)
            return got == Z, f"boundary H1 = {got}"

        _checked(results, "surgery", f"{name} along {curve}", surgery)

    for name, script_name in (("fig11-W1", "single-pair-W1"), ("fig12-W2", "single-pair-W2")):
        def single_pair(name=name, script_name=script_name):
            out, audit = replay_script(load_structure(name), load_script(script_name))
            if not audit.ok:
                return False, audit.first_error or "replay failed"
            ok = len(out.one_handles) == 1 and len(out.two_handles) == 1
            return ok, f"{len(out.one_handles)} one-handles, {len(out.two_handles)} two-handles"

        _checked(results, "surgery", f"{name} single-pair reduction", single_pair)

    # ---- roping constructions ----------------------------------------------------
    def rope_W1():
        comp = complement_structure(load_movie("fig02-movie-K"))
        glued = glue_along_curve(load_structure("cork-W"), "eta", comp)
        same = canonical_form(glued) == canonical_form(load_structure("fig05-W1"))
        h0, h1, h2 = homology(glued)
        trivial = h1.is_trivial and h2.is_trivial
        cert = certify_trivial(pi1_presentation(glued), TIETZE_BUDGET)
        ok = same and trivial and cert.is_trivial
        return ok, f"match={same} H1={h1} H2={h2} pi1-trivial={cert.is_trivial}"

    _checked(results, "glue", "cork-W + complement == fig05-W1", rope_W1)

    def rope_Q1():
        comp = complement_structure(load_movie("fig02-movie-K"))
        glued = glue_along_curve(load_structure("ribbon-C"), "mu", comp)
        same = canonical_form(glued) == canonical_form(load_structure("fig16-Q1"))
        h1 = homology(glued)[1]
        return same and h1 == Z, f"match={same} H1={h1}"

    _checked(results, "glue", "ribbon-C + complement == fig16-Q1", rope_Q1)

    def collar_glue():
        base = HandleStructure(
            one_handles=(OneHandle("m0"),),
            curves=(MarkedCurve("g", Word([("m0", 1)]), 0),),
        )
        comp = complement_structure(load_movie("fig03-mazur-movie"))
        glued = glue_along_curve(base, "g", comp)
        report = homology_cobordism_check(glued, (["g"], ["K"]))
        return report.passed, "; ".join(report.details)

    _checked(results, "glue", "invertible-cobordism endpoint check", collar_glue)

    # ---- figure 8 slide -------------------------------------------------------------
    def fig08():
        out, audit = replay_script(load_structure("fig11-W1"), load_script("fig08-arrow-slide"))
        if not audit.ok:
            return False, audit.first_error or "replay failed"
        same = canonical_form(out) == canonical_form(load_structure("fig08-post-slide"))
        return same, ""

    _checked(results, "slide", "fig11 arrowed slide == fig08-post-slide", fig08)

    # ---- DT export ---------------------------------------------------------------------
    def dt_round_trip():
        hs = load_structure("fig01-export")
        text = export_dt(hs, ["K", "U"])
        if text != export_dt(hs, ["K", "U"]):
            return False, "export is not deterministic"
        names, codes = parse_dt(text)
        original = [hs.curve("K").gauss, hs.curve("U").gauss]
        ok = names == ["K", "U"] and gauss_equivalent(dt_to_gauss(codes), original)
        return ok, text.splitlines()[1]

    _checked(results, "export", "fig01 DT round-trip", dt_round_trip)

    return results


def corpus_report_rows(results: list[CheckResult]) -> list[tuple[str, str, str, str]]:
    return [
        (r.group, r.name, "pass" if r.passed else "fail", r.details) for r in results
    ]


def captioned_tb_values() -> list[tuple[str, int, int]]:
    """(front asset, computed tb, captioned tb) for the caption figures."""
    captions = {
        "fig07-frontK": 4,
        "fig09-front-eta": -3,
        "fig10-front-feta": -3,
        "fig14-front-mu": -1,
        "fig15-front-fmu": -3,
    }
    out = []
    for name, want in captions.items():
        front = list(load_fronts(name).values())[0]
        out.append((name, thurston_bennequin(front), want))
    return out

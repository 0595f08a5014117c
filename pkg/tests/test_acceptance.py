"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Criteria 1-9 are exact corpus facts with stated runtime bounds; criterion
10 is the randomized property battery (sizes pinned here, wall-clock
budget 60 s for the whole battery).
"""

import random
import time

from kirbycheck.corpus import load_fronts, load_movie, load_script, load_structure
from kirbycheck.front import apply_front_move, stein_check, thurston_bennequin
from kirbycheck.homology import boundary_h1, homology
from kirbycheck.linalg import IntegerMatrix, Z, cokernel
from kirbycheck.movie import (
    check_complement_invariants,
    complement_structure,
    double,
    verify_product,
)
from kirbycheck.moves import apply_slide, cancel_pair_12, canonical_form, replay_script
from kirbycheck.presentation import abelianization, certify_trivial, pi1_presentation
from kirbycheck.structures import attach_two_handle_along_curve, passage_matrix

from conftest import random_structure, random_structure_with_cancelling_pair
from oracles import enumerate_cokernel, invariant_factors_by_minors
from test_front import applicable_moves, per_component_invariants, random_front

BUDGET = 10_000


def report(criterion: str, ok: bool, details: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[acceptance {criterion}] {status}" + (f"  {details}" if details else ""))
    assert ok, f"acceptance criterion {criterion} failed: {details}"


def test_criterion_1_contractibility():
    t0 = time.perf_counter()
    for name in ("fig11-W1", "fig12-W2"):
        start = time.perf_counter()
        hs = load_structure(name)
        _, h1, h2 = homology(hs)
        cert = certify_trivial(pi1_presentation(hs), BUDGET)
        elapsed = time.perf_counter() - start
        ok = h1.is_trivial and h2.is_trivial and cert.is_trivial and elapsed < 1.0
        report("1", ok, f"{name}: H1={h1} H2={h2} pi1={cert.status} in {elapsed:.3f}s")
    print(f"[acceptance 1] total {time.perf_counter() - t0:.3f}s")


def test_criterion_2_homotopy_circle():
    for name in ("fig16-Q1", "fig17-Q2"):
        start = time.perf_counter()
        hs = load_structure(name)
        _, h1, h2 = homology(hs)
        ab = abelianization(pi1_presentation(hs))
        elapsed = time.perf_counter() - start
        ok = h1 == Z and h2.is_trivial and ab == Z and elapsed < 1.0
        report("2", ok, f"{name}: H1={h1} H2={h2} pi1ab={ab} in {elapsed:.3f}s")


def test_criterion_3_captioned_tb():
    expected = {
        "fig07-frontK": 4,
        "fig09-front-eta": -3,
        "fig10-front-feta": -3,
        "fig14-front-mu": -1,
        "fig15-front-fmu": -3,
    }
    for name, want in expected.items():
        front = next(iter(load_fronts(name).values()))
        got = thurston_bennequin(front)
        report("3", got == want, f"{name}: tb={got}, captioned {want}")


def test_criterion_4_stein():
    for struct, fronts in (
        ("fig11-W1", "fig11-fronts"),
        ("fig12-W2", "fig12-fronts"),
        ("fig16-Q1", "fig16-fronts"),
        ("fig17-Q2", "fig17-fronts"),
    ):
        rep = stein_check(load_structure(struct), load_fronts(fronts))
        detail = ", ".join(f"{v.handle}:{v.framing}=tb-1" for v in rep.verdicts)
        report("4", rep.passed, f"{struct}: {detail}")


def test_criterion_5_complement_facts():
    for name in ("fig02-movie-K", "fig03-mazur-movie"):
        problems = check_complement_invariants(complement_structure(load_movie(name)))
        report("5", not problems, f"{name}: {'; '.join(problems) or 'H*=(Z,Z,0), core generates'}")


def test_criterion_6_products():
    for movie_name, script_name in (
        ("fig03-mazur-movie", "mazur-product"),
        ("fig02-movie-K", "movieK-product"),
    ):
        start = time.perf_counter()
        doubled = double(complement_structure(load_movie(movie_name)))
        cert = verify_product(doubled, load_script(script_name))
        elapsed = time.perf_counter() - start
        ok = cert.passed and elapsed < 1.0
        report("6", ok, f"{movie_name}: {cert.final_summary} in {elapsed:.3f}s")


def test_criterion_7_fig4_reduces_to_fig1():
    out, audit = replay_script(
        load_structure("fig04-complement-K"), load_script("fig04-to-fig01")
    )
    ok = audit.ok and canonical_form(out) == canonical_form(load_structure("fig01-knotK"))
    kw = out.curve("K").word.to_text()
    report("7", ok, f"reduced K word: {kw}")


def test_criterion_8_twists():
    for source, script_name, target in (
        ("fig11-W1", "cork-twist-W", "fig12-W2"),
        ("fig16-Q1", "anticork-twist", "fig17-Q2"),
    ):
        src = load_structure(source)
        out, audit = replay_script(src, load_script(script_name))
        ok = (
            audit.ok
            and canonical_form(out) == canonical_form(load_structure(target))
            and boundary_h1(src) == boundary_h1(out)
        )
        report("8", ok, f"{source} -> {target}, boundary {boundary_h1(src)}")


def test_criterion_9_boundary_surgery():
    for name, curve in (("fig11-W1", "gamma1"), ("fig12-W2", "gamma2")):
        hs = attach_two_handle_along_curve(load_structure(name), curve, "surgery", 0)
        got = boundary_h1(hs)
        report("9", got == Z, f"{name} surgered along {curve}: boundary H1 = {got}")


def test_criterion_10_property_battery():
    t0 = time.perf_counter()

    # (a) Smith normal form vs the brute-force oracle, 1000 matrices <= 6x6
    rng = random.Random(101)
    mismatches = 0
    enumerated = 0
    for _ in range(1000):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = IntegerMatrix(
            [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        )
        got = cokernel(m)
        if got != invariant_factors_by_minors(m):
            mismatches += 1
        exhaustive = enumerate_cokernel(m)
        if exhaustive is not None:
            enumerated += 1
            if (got.free_rank, got.torsion) != (0, exhaustive.torsion):
                mismatches += 1
    report("10a", mismatches == 0, f"1000 matrices, {enumerated} enumerated exhaustively")

    # (b) move invariance on 500 randomized cases
    rng = random.Random(202)
    bad = 0
    for case in range(500):
        if case % 2 == 0:
            hs = random_structure(rng)
            ids = list(hs.two_ids)
            if len(ids) < 2:
                continue
            out = apply_slide(hs, *rng.sample(ids, 2), rng.choice((1, -1)))
        else:
            hs, x, h = random_structure_with_cancelling_pair(rng)
            out = cancel_pair_12(hs, x, h)
        if (
            homology(out) != homology(hs)
            or boundary_h1(out) != boundary_h1(hs)
            or abelianization(pi1_presentation(out)) != abelianization(pi1_presentation(hs))
        ):
            bad += 1
    report("10b", bad == 0, "500 randomized slides/cancellations preserve invariants")

    # (c) Legendrian move invariance on 500 randomized fronts
    rng = random.Random(303)
    bad = 0
    for _ in range(500):
        front = random_front(rng)
        before = per_component_invariants(front)
        current = front
        applied = 0
        for move in applicable_moves(current, rng) * 3:
            if applied >= 20:
                break
            try:
                current = apply_front_move(current, move)
                applied += 1
            except ValueError:
                continue
        if per_component_invariants(current) != before:
            bad += 1
    report("10c", bad == 0, "500 fronts, move sequences up to length 20")

    # (d) chain-level consistency of pi1 abelianization with H1
    rng = random.Random(404)
    bad = 0
    for name in ("fig01-knotK", "fig04-complement-K", "fig05-W1", "fig11-W1",
                 "fig12-W2", "fig16-Q1", "fig17-Q2", "cork-W", "ribbon-C",
                 "fig08-post-slide"):
        hs = load_structure(name)
        if abelianization(pi1_presentation(hs)) != cokernel(passage_matrix(hs)):
            bad += 1
    for _ in range(300):
        hs = random_structure(rng)
        if abelianization(pi1_presentation(hs)) != cokernel(passage_matrix(hs)):
            bad += 1
    report("10d", bad == 0, "pi1 abelianization == H1 on corpus and 300 random structures")

    elapsed = time.perf_counter() - t0
    report("10", elapsed < 60.0, f"property battery in {elapsed:.1f}s (< 60s)")

"""Shared random generators for the property suites.

Everything takes an explicit ``random.Random`` so the suites are
reproducible; sizes stay at desk scale.
"""

from __future__ import annotations

import random

import pytest

from kirbycheck.structures import (
    HandleStructure,
    LinkingTable,
    MarkedCurve,
    OneHandle,
    TwoHandle,
)
from kirbycheck.movie import Band, Birth, Movie
from kirbycheck.words import Word


def random_word(rng: random.Random, gens: list[str], max_len: int = 5) -> Word:
    return Word(
        [(rng.choice(gens), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len))]
    )


def random_structure(
    rng: random.Random,
    max_one: int = 3,
    max_two: int = 3,
    with_curve: bool = True,
) -> HandleStructure:
    ones = [OneHandle(f"x{i}") for i in range(rng.randint(1, max_one))]
    gens = [o.id for o in ones]
    twos = [
        TwoHandle(f"h{j}", rng.randint(-3, 3), random_word(rng, gens))
        for j in range(rng.randint(1, max_two))
    ]
    linking = {}
    for i in range(len(twos)):
        for j in range(i + 1, len(twos)):
            linking[(twos[i].id, twos[j].id)] = rng.randint(-2, 2)
    curves = []
    if with_curve:
        curves.append(MarkedCurve("K", random_word(rng, gens, 4), rng.randint(-2, 2)))
        for h in twos:
            linking[("K", h.id)] = rng.randint(-2, 2)
    return HandleStructure(ones, twos, 0, LinkingTable(linking), curves)


def random_structure_with_cancelling_pair(rng: random.Random) -> tuple[HandleStructure, str, str]:
    """A valid structure in which h0 passes x0 geometrically once."""
    hs = random_structure(rng)
    word = [(g, s) for g, s in hs.two_handle("h0").word.letters if g != "x0"]
    pos = rng.randint(0, len(word))
    word.insert(pos, ("x0", rng.choice((1, -1))))
    return hs.with_two_handle_word("h0", Word(word)), "x0", "h0"


def random_movie(rng: random.Random, max_bands: int = 3) -> Movie:
    """A certified movie whose complement satisfies the solid-torus facts.

    Band i passes its own birth circle algebraically once and earlier
    generators with algebraic count zero, which pins H1 = Z generated by
    the core.
    """
    m = rng.randint(0, max_bands)
    births = [f"u{i}" for i in range(1, m + 1)]
    events: list = [Birth(u) for u in births]
    for i, u in enumerate(births):
        allowed = ["x0"] + births[:i]
        letters: list[tuple[str, int]] = []
        for g in rng.sample(allowed, k=rng.randint(0, len(allowed))):
            sign = rng.choice((1, -1))
            letters.extend([(g, sign), (g, -sign)])
        rng.shuffle(letters)
        letters.insert(rng.randint(0, len(letters)), (u, rng.choice((1, -1))))
        links = tuple(
            (f"b{j}", rng.randint(-1, 1)) for j in range(1, i + 1) if rng.random() < 0.5
        )
        events.append(Band(f"b{i+1}", ("x0", u), Word(letters), rng.randint(-2, 2), links))
    final_letters: list[tuple[str, int]] = [("x0", 1)]
    for g in births:
        if rng.random() < 0.5:
            sign = rng.choice((1, -1))
            final_letters.extend([(g, sign), (g, -sign)])
    rng.shuffle(final_letters)
    return Movie(
        "random",
        "x0",
        tuple(events),
        "K",
        Word(final_letters),
        tuple((f"b{i+1}", 0) for i in range(m)),
        0,
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260811)

import pytest

from kirbycheck.corpus import asset_names, load_asset
from kirbycheck.formats import (
    ParseError,
    dt_to_gauss,
    export_dt,
    gauss_equivalent,
    normalize_gauss,
    parse_dt,
    parse_front_text,
    parse_handle_text,
    parse_movie_text,
    parse_script_text,
    serialize_front,
    serialize_handle,
    serialize_movie,
    serialize_script,
)
from kirbycheck.moves import canonical_form
from kirbycheck.structures import HandleStructure, MarkedCurve
from kirbycheck.words import Word

from conftest import random_structure


def test_minimal_handle_file():
    _, hs = parse_handle_text("onehandle x1\n")
    assert hs.one_ids == ("x1",)


def test_word_referencing_unknown_generator_is_parse_error():
    text = "twohandle h1 framing=0\nword h1 x1+ x1-\n"
    with pytest.raises(ParseError) as err:
        parse_handle_text(text)
    assert err.value.line == 2
    assert "unresolved" in err.value.message


def test_asymmetric_lk_is_parse_error():
    text = (
        "onehandle x\ntwohandle h1 framing=0\ntwohandle h2 framing=0\n"
        "lk h1 h2 2\nlk h2 h1 3\n"
    )
    with pytest.raises(ParseError, match="asymmetric linking"):
        parse_handle_text(text)


def test_handle_round_trip_random(rng):
    from kirbycheck.structures import validate

    for _ in range(50):
        hs = random_structure(rng)
        text = serialize_handle(hs, "demo")
        name, back = parse_handle_text(text)
        assert name == "demo"
        assert back == hs
        assert serialize_handle(back, name) == text
        if validate(hs).is_valid:
            assert validate(back).is_valid


def test_corpus_canonical_round_trip():
    asset = load_asset("fig11-W1")
    hs = parse_handle_text(asset.text)[1]
    canonical = canonical_form(hs)
    text = serialize_handle(canonical, "fig11-W1")
    again = parse_handle_text(text)[1]
    assert serialize_handle(canonical_form(again), "fig11-W1") == text


def test_movie_round_trip():
    asset = load_asset("fig02-movie-K")
    movie = parse_movie_text(asset.text)
    assert parse_movie_text(serialize_movie(movie)) == movie


def test_front_negative_slot_is_parse_error():
    with pytest.raises(ParseError, match="negative slot"):
        parse_front_text("front f\nlcusp -1\n")


def test_front_round_trip():
    fronts = parse_front_text(load_asset("fig16-fronts").text)
    assert {f.name for f in fronts} == {"r", "b1", "b2"}
    text = "".join(serialize_front(f) for f in fronts)
    assert parse_front_text(text) == fronts


def test_script_round_trip():
    script = parse_script_text(load_asset("anticork-twist").text)
    assert parse_script_text(serialize_script(script)) == script


def test_rethread_outside_block_is_error():
    with pytest.raises(ParseError, match="rethread outside"):
        parse_script_text("script s\nrethread q b+\n")


def test_unknown_directive_reports_line():
    with pytest.raises(ParseError) as err:
        parse_handle_text("onehandle x\nfrobnicate y\n")
    assert err.value.line == 2


def test_dt_unknot():
    hs = HandleStructure(curves=[MarkedCurve("U", Word(), gauss=())])
    assert export_dt(hs, ["U"]) == "dt U\n\n"


def test_dt_hopf_hand_enumeration():
    # two crossings; passages numbered 1..4 along the components give the
    # classic one-even-label-per-component code
    hs = HandleStructure(
        curves=[
            MarkedCurve("A", Word(), gauss=(1, -2)),
            MarkedCurve("B", Word(), gauss=(-1, 2)),
        ]
    )
    assert export_dt(hs, ["A", "B"]) == "dt A B\n4 / 2\n"


def test_dt_trefoil():
    hs = HandleStructure(curves=[MarkedCurve("T", Word(), gauss=(1, -2, 3, -1, 2, -3))])
    assert export_dt(hs, ["T"]) == "dt T\n4 6 2\n"


def test_dt_requires_gauss():
    hs = HandleStructure(curves=[MarkedCurve("K", Word())])
    with pytest.raises(ValueError, match="crossing-level"):
        export_dt(hs, ["K"])


def test_dt_rejects_inconsistent_gauss():
    hs = HandleStructure(curves=[MarkedCurve("K", Word(), gauss=(1, 2, -1))])
    with pytest.raises(ValueError):
        export_dt(hs, ["K"])


def test_dt_reimport_reproduces_gauss():
    hs = parse_handle_text(load_asset("fig01-export").text)[1]
    text = export_dt(hs, ["K", "U"])
    names, codes = parse_dt(text)
    assert names == ["K", "U"]
    original = [hs.curve("K").gauss, hs.curve("U").gauss]
    assert gauss_equivalent(dt_to_gauss(codes), original)
    assert not gauss_equivalent(dt_to_gauss(codes), [original[0], (1, -2)])


def test_normalize_gauss():
    assert normalize_gauss([(5, -9, 5 * 0 + 9)]) == [(1, -2, 2)]


def test_every_asset_has_provenance_and_kind():
    for name in asset_names():
        asset = load_asset(name)
        assert asset.provenance, name
        assert asset.kind in ("handle", "movie", "front", "script"), name


def test_empty_movie_with_core_header_is_product():
    movie = parse_movie_text("movie m\ncore x0\nfinal K\nword K x0+\n")
    assert movie.events == ()
    from kirbycheck.movie import complement_structure
    hs = complement_structure(movie)
    assert len(hs.one_handles) == 1 and not hs.two_handles

import random

import pytest

from kirbycheck.structures import (
    HandleStructure,
    LinkingTable,
    MarkedCurve,
    OneHandle,
    TwoHandle,
    attach_two_handle_along_curve,
    boundary_surgery_form,
    curve_class,
    geometric_passage_count,
    passage_matrix,
    validate,
)
from kirbycheck.homology import boundary_h1
from kirbycheck.words import Word

from conftest import random_structure
from oracles import naive_signed_count

W = Word.from_text


def test_empty_structure_valid():
    assert validate(HandleStructure()).is_valid


def test_unresolved_generator():
    hs = HandleStructure(two_handles=[TwoHandle("h", 0, W("x+"))])
    report = validate(hs)
    assert not report.is_valid
    assert any("unresolved generator" in v for v in report.violations)


def test_asymmetric_linking_rejected():
    # the table cannot even be built with conflicting symmetric entries
    with pytest.raises(ValueError):
        LinkingTable({("h1", "h2"): 2, ("h2", "h1"): 3})


def test_undeclared_two_handle_pair_warns():
    hs = HandleStructure(
        one_handles=[OneHandle("x")],
        two_handles=[TwoHandle("h1", 0, W("x+")), TwoHandle("h2", 1, W("x-"))],
    )
    report = validate(hs)
    assert report.is_valid
    assert any("undeclared" in w for w in report.warnings)


def test_passage_matrix_examples():
    hs = HandleStructure(
        one_handles=[OneHandle("x")], two_handles=[TwoHandle("h", 0, W("x+ x-"))]
    )
    assert passage_matrix(hs).entries == ((0,),)
    hs2 = HandleStructure(
        one_handles=[OneHandle("x")], two_handles=[TwoHandle("h", 0, W("x+"))]
    )
    assert passage_matrix(hs2).entries == ((1,),)
    hs3 = HandleStructure(one_handles=[OneHandle("x"), OneHandle("y")])
    pm = passage_matrix(hs3)
    assert (pm.rows, pm.cols) == (0, 2)


def test_passage_matrix_matches_naive_counts(rng):
    for _ in range(200):
        hs = random_structure(rng)
        pm = passage_matrix(hs)
        for i, h in enumerate(hs.two_handles):
            for j, x in enumerate(hs.one_ids):
                assert pm[i, j] == naive_signed_count(h.word.letters, x)


def test_geometric_passage_count():
    hs = HandleStructure(
        one_handles=[OneHandle("x"), OneHandle("y")],
        two_handles=[TwoHandle("h", 0, W("x+ x-")), TwoHandle("g", 0, W("y+"))],
        linking=LinkingTable({("h", "g"): 0}),
    )
    assert geometric_passage_count(hs, "h", "x") == 2
    assert geometric_passage_count(hs, "g", "y") == 1
    assert geometric_passage_count(hs, "g", "x") == 0
    with pytest.raises(KeyError):
        geometric_passage_count(hs, "h", "zz")


def test_geometric_bounds_algebraic(rng):
    # geo >= |algebraic| always; equality iff no +/- pair of that generator
    for _ in range(200):
        hs = random_structure(rng)
        pm = passage_matrix(hs)
        for i, h in enumerate(hs.two_handles):
            for j, x in enumerate(hs.one_ids):
                geo = geometric_passage_count(hs, h.id, x)
                assert geo >= abs(pm[i, j])
                signs = {s for g, s in h.word.letters if g == x}
                assert (geo == abs(pm[i, j])) == (len(signs) < 2)


def test_boundary_surgery_form_examples():
    plain = HandleStructure(two_handles=[TwoHandle("h", 0, Word())])
    assert boundary_surgery_form(plain).entries == ((0,),)
    dot = HandleStructure(one_handles=[OneHandle("x")])
    assert boundary_surgery_form(dot).entries == ((0,),)
    both = HandleStructure(
        one_handles=[OneHandle("x")], two_handles=[TwoHandle("h", 5, W("x+"))]
    )
    assert boundary_surgery_form(both).entries == ((0, 1), (1, 5))


def test_boundary_surgery_form_symmetric(rng):
    for _ in range(100):
        hs = random_structure(rng)
        form = boundary_surgery_form(hs)
        assert form.is_symmetric()
        n1 = len(hs.one_handles)
        for i in range(n1):
            assert form[i, i] == 0
        for k, h in enumerate(hs.two_handles):
            assert form[n1 + k, n1 + k] == h.framing


def test_boundary_form_requires_declared_pairs():
    hs = HandleStructure(
        one_handles=[OneHandle("x")],
        two_handles=[TwoHandle("h1", 0, W("x+")), TwoHandle("h2", 0, W("x-"))],
    )
    with pytest.raises(ValueError, match="missing linking data"):
        boundary_surgery_form(hs)


def test_curve_class_examples():
    hs = HandleStructure(
        one_handles=[OneHandle("x"), OneHandle("y")],
        curves=[
            MarkedCurve("a", W("x+")),
            MarkedCurve("b", W("x+ y+ x-")),
            MarkedCurve("meridian", Word()),
        ],
    )
    assert curve_class(hs, "a") == (1, 0)
    assert curve_class(hs, "b") == (0, 1)
    assert curve_class(hs, "meridian") == (0, 0)
    with pytest.raises(KeyError):
        curve_class(hs, "nope")


def test_attach_two_handle_along_curve():
    hs = HandleStructure(
        one_handles=[OneHandle("x")],
        curves=[MarkedCurve("g", W("x+"), 0)],
    )
    out = attach_two_handle_along_curve(hs, "g", "s", framing=0)
    assert out.two_handle("s").word == W("x+")
    # 0-surgery along the core undoes the carving: a 3-sphere boundary
    assert boundary_h1(out).is_trivial
    with pytest.raises(ValueError):
        attach_two_handle_along_curve(hs, "g", "g")

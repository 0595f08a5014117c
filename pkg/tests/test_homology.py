import pytest

from kirbycheck.homology import (
    boundary_h1,
    curve_generates_h1,
    euler_characteristic,
    homology,
)
from kirbycheck.linalg import Z
from kirbycheck.structures import (
    HandleStructure,
    LinkingTable,
    MarkedCurve,
    OneHandle,
    TwoHandle,
    passage_matrix,
)
from kirbycheck.words import Word

from conftest import random_structure

W = Word.from_text


def test_circle_times_ball():
    hs = HandleStructure(one_handles=[OneHandle("x")])
    h0, h1, h2 = homology(hs)
    assert (str(h0), str(h1), str(h2)) == ("Z", "Z", "0")
    assert boundary_h1(hs) == Z


def test_cancelling_pair_is_ball():
    hs = HandleStructure(
        one_handles=[OneHandle("x")], two_handles=[TwoHandle("h", 0, W("x+"))]
    )
    _, h1, h2 = homology(hs)
    assert h1.is_trivial and h2.is_trivial
    assert boundary_h1(hs).is_trivial


def test_three_handles_refused():
    hs = HandleStructure(one_handles=[OneHandle("x")], three_handle_count=1)
    with pytest.raises(ValueError, match="uncancelled 3-handles"):
        homology(hs)


def test_zero_surgery_boundary():
    hs = HandleStructure(two_handles=[TwoHandle("h", 0, Word())])
    assert boundary_h1(hs) == Z


def test_unimodular_square_structures_are_contractible(rng):
    # as many 2-handles as 1-handles and determinant +-1 forces trivial H1, H2
    found = 0
    for _ in range(500):
        hs = random_structure(rng, with_curve=False)
        if len(hs.one_handles) != len(hs.two_handles):
            continue
        pm = passage_matrix(hs)
        if abs(pm.determinant()) != 1:
            continue
        found += 1
        _, h1, h2 = homology(hs)
        assert h1.is_trivial and h2.is_trivial
    assert found > 10


def test_euler_characteristic():
    hs = HandleStructure(
        one_handles=[OneHandle("x"), OneHandle("y")],
        two_handles=[TwoHandle("h", 0, Word())],
        three_handle_count=1,
    )
    assert euler_characteristic(hs) == 1 - 2 + 1 - 1


def test_curve_generates_h1():
    hs = HandleStructure(
        one_handles=[OneHandle("x"), OneHandle("y")],
        two_handles=[TwoHandle("h", 0, W("y+"))],
        curves=[MarkedCurve("c", W("x+")), MarkedCurve("d", W("x+ x+"))],
        linking=LinkingTable({("c", "h"): 0, ("d", "h"): 0}),
    )
    assert curve_generates_h1(hs, "c")
    assert not curve_generates_h1(hs, "d")

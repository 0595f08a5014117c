import pytest
from hypothesis import given, strategies as st

from kirbycheck.words import Word

letters = st.lists(
    st.tuples(st.sampled_from(["a", "b", "c"]), st.sampled_from([1, -1])), max_size=12
)


def test_text_round_trip():
    w = Word.from_text("x1+ x2- x1+")
    assert w.to_text() == "x1+ x2- x1+"
    assert Word.from_text(w.to_text()) == w


def test_bad_letter_rejected():
    with pytest.raises(ValueError):
        Word.from_text("x1")
    with pytest.raises(ValueError):
        Word([("x", 2)])


def test_rotation_equality():
    assert Word.from_text("a+ b+ c-") == Word.from_text("c- a+ b+")
    assert Word.from_text("a+ b+") != Word.from_text("a+ b-")
    assert hash(Word.from_text("a+ b+")) == hash(Word.from_text("b+ a+"))


def test_free_reduction_examples():
    assert Word.from_text("a+ a-").free_reduced() == Word()
    assert Word.from_text("a+ b+ b- a+").free_reduced() == Word.from_text("a+ a+")
    # cyclic conjugation melts away under cyclic reduction
    assert Word.from_text("a+ b+ a-").cyclic_reduced() == Word.from_text("b+")


@given(letters)
def test_free_reduction_idempotent(ls):
    w = Word(ls)
    assert w.free_reduced().free_reduced() == w.free_reduced()
    assert w.cyclic_reduced().cyclic_reduced() == w.cyclic_reduced()


@given(letters)
def test_inverse_cancels(ls):
    w = Word(ls)
    assert (w * w.inverse()).free_reduced() == Word()


@given(letters)
def test_rotation_preserves_counts(ls):
    w = Word(ls)
    r = w.rotated(3)
    for g in ("a", "b", "c"):
        assert w.signed_count(g) == r.signed_count(g)
        assert w.unsigned_count(g) == r.unsigned_count(g)
    assert w == r


def test_substitute_is_literal():
    w = Word.from_text("a+ b+ a-")
    out = w.substitute("a", Word.from_text("c+ c-"))
    assert out.to_text() == "c+ c- b+ c+ c-"


def test_delete_and_rename():
    w = Word.from_text("a+ b+ a-")
    assert w.delete_generator("a") == Word.from_text("b+")
    assert w.rename_generator("a", "z").to_text() == "z+ b+ z-"


def test_abelianized():
    w = Word.from_text("a+ b+ a+ b- a-")
    assert w.abelianized(["a", "b"]) == (1, 0)

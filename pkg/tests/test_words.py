import pytest

from stringc.words import Word, parse_word, w


def test_normalization_merges_adjacent():
    assert Word((("p", 2), ("p", 3))).syllables == (("p", 5),)
    assert Word((("p", 2), ("p", -2))).syllables == ()
    assert Word((("p", 1), ("q", 2), ("q", -2), ("p", 1))).syllables == (("p", 2),)


def test_mul_pow_inverse():
    a = w(("p", 3), ("q", 1))
    assert (a * a.inverse()).is_identity()
    assert (a ** 0).is_identity()
    assert (a ** 2).syllables == (("p", 3), ("q", 1), ("p", 3), ("q", 1))
    assert (a ** -1).syllables == (("q", -1), ("p", -3))


def test_exponent_sum_and_generators():
    word = w(("p", 3), ("q", -1), ("p", -5))
    assert word.exponent_sum("p") == -2
    assert word.generators() == {"p", "q"}


@pytest.mark.parametrize("text,expect", [
    ("s0^2", (("s0", 2),)),
    ("(s0 s1)^4", (("s0", 1), ("s1", 1)) * 4),
    ("p^-1 q p", (("p", -1), ("q", 1), ("p", 1))),
    ("(s0 s1 s2 s1)^2 (s2 s1)^8",
     (("s0", 1), ("s1", 1), ("s2", 1), ("s1", 1)) * 2 + (("s2", 1), ("s1", 1)) * 8),
    ("1" * 0 + "p^0", ()),
])
def test_parse_word(text, expect):
    assert parse_word(text).syllables == Word(expect).syllables


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_word("(s0 s1")
    with pytest.raises(ValueError):
        parse_word("s0 )")


def test_str_roundtrip():
    word = w(("p", 3), ("q", -2), ("r", 1))
    assert parse_word(str(word)).syllables == word.syllables

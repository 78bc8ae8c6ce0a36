from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goeritz.words import (
    AbelianPair,
    CyclicWord,
    Word,
    WordParseError,
    cyclic_reduce,
    format_word,
    parse_word,
    reduce_word,
)

raw_pairs = st.lists(
    st.tuples(st.sampled_from("xy"), st.integers(min_value=-6, max_value=6)),
    max_size=12,
)


def words(max_syllables: int = 12) -> st.SearchStrategy[Word]:
    return st.builds(lambda ps: Word(tuple(ps)), raw_pairs)


class TestReduction:
    def test_adjacent_inverses_cancel(self):
        w = reduce_word([("x", 1), ("y", 1), ("y", -1), ("x", -1)])
        assert w.is_identity()
        assert format_word(w) == ""

    def test_partial_merge(self):
        w = reduce_word([("x", 1), ("x", 1), ("y", -1), ("y", -1), ("y", 1)])
        assert w.syllables == (("x", 2), ("y", -1))

    def test_zero_exponents_dropped(self):
        assert Word((("x", 0), ("y", 3))).syllables == (("y", 3),)

    def test_cascading_cancellation(self):
        w = reduce_word([("x", 2), ("y", 1), ("y", -1), ("x", -2), ("y", 5)])
        assert w.syllables == (("y", 5),)

    @given(words())
    def test_inverse_cancels(self, w: Word):
        assert (w * w.inverse()).is_identity()

    @given(words(), words())
    def test_length_subadditive(self, u: Word, v: Word):
        assert (u * v).length <= u.length + v.length

    @given(words())
    def test_letters_roundtrip(self, w: Word):
        assert Word.from_letters(w.letters()) == w


class TestParse:
    def test_power_expansion(self):
        w = parse_word("(xy^5)^4xy^4")
        assert len(w.syllables) == 10
        assert w.abelianization() == AbelianPair(5, 24)

    def test_exponent_one_omitted_on_format(self):
        assert format_word(parse_word("x^1y^1")) == "xy"

    def test_negative_exponents(self):
        assert parse_word("x^-2y^3").syllables == (("x", -2), ("y", 3))

    def test_whitespace_ignored(self):
        assert parse_word(" x y ^ 2 ") == parse_word("xy^2")

    def test_empty_is_identity(self):
        assert parse_word("").is_identity()

    def test_nested_groups(self):
        assert parse_word("((xy)^2x)^2") == parse_word("xyxyxxyxyx")

    def test_error_position(self):
        with pytest.raises(WordParseError) as info:
            parse_word("xy^5z")
        assert info.value.position == 4

    def test_group_requires_exponent(self):
        with pytest.raises(WordParseError):
            parse_word("(xy)")

    def test_unclosed_paren(self):
        with pytest.raises(WordParseError):
            parse_word("(xy^2")

    def test_bare_caret_rejected(self):
        with pytest.raises(WordParseError):
            parse_word("x^")

    @given(words())
    def test_format_parse_roundtrip(self, w: Word):
        assert parse_word(format_word(w)) == w


class TestCyclic:
    def test_conjugate_collapses(self):
        cyc, conj = cyclic_reduce(parse_word("xyx^-1"))
        assert cyc.to_word() == parse_word("y")
        assert conj == parse_word("x")

    def test_canonical_rotation_is_least(self):
        # letter order x < x^-1 < y < y^-1, so the x-run leads
        assert str(CyclicWord.of("yx^2")) == "x^2y"

    def test_power_rotation(self):
        base = CyclicWord.of("xy^5")
        assert CyclicWord.of("(y^5x)^3").letters == base.letters * 3

    def test_identity(self):
        cyc, conj = cyclic_reduce(Word.identity())
        assert cyc.is_identity()
        assert conj.is_identity()

    def test_rejects_unreduced_letters(self):
        with pytest.raises(ValueError):
            CyclicWord((0, 1))

    def test_swap_generators(self):
        assert CyclicWord.of("x^2y").swap_generators() == CyclicWord.of("y^2x")

    def test_inverse(self):
        w = CyclicWord.of("xy^3xy^5")
        assert w.inverse().inverse() == w
        assert w.inverse().abelianization() == -w.abelianization()

    @given(words())
    def test_reconstruction(self, w: Word):
        cyc, conj = cyclic_reduce(w)
        assert conj * cyc.to_word() * conj.inverse() == w

    @given(words())
    def test_canonical_is_min_rotation(self, w: Word):
        cyc, _ = cyclic_reduce(w)
        seq = cyc.letters
        n = len(seq)
        rotations = [seq[i:] + seq[:i] for i in range(n)] or [()]
        assert seq == min(rotations)

    @given(words(), words())
    def test_conjugation_invariance(self, w: Word, g: Word):
        assert CyclicWord.of(g * w * g.inverse()) == CyclicWord.of(w)

    @settings(max_examples=60)
    @given(words())
    def test_syllable_length_agrees(self, w: Word):
        cyc, _ = cyclic_reduce(w)
        assert sum(abs(e) for _, e in cyc.syllables) == cyc.length

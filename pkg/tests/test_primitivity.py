from __future__ import annotations

import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goeritz.primitivity import (
    MOVE_IDS,
    apply_whitehead,
    enumerate_primitives,
    is_primitive,
    is_primitive_power,
    oz_form_check,
)
from goeritz.words import CyclicWord, Word, letter_inverse, parse_word

raw_pairs = st.lists(
    st.tuples(st.sampled_from("xy"), st.integers(min_value=-5, max_value=5)),
    max_size=8,
)
words = st.builds(lambda ps: Word(tuple(ps)), raw_pairs)


def all_cyclic_words(max_len: int):
    """Every cyclically reduced conjugacy class of length <= max_len."""
    seen = set()
    for n in range(max_len + 1):
        for letters in itertools.product(range(4), repeat=n):
            ok = all(
                letters[i] != letter_inverse(letters[(i + 1) % n])
                for i in range(n)
            )
            if n == 1:
                ok = True
            if ok:
                try:
                    seen.add(CyclicWord(letters))
                except ValueError:
                    pass
    return seen


class TestIsPrimitive:
    def test_generator(self):
        assert is_primitive("x").is_primitive

    def test_shell_word(self):
        assert is_primitive("(xy^5)^4xy^4").is_primitive

    def test_x2y3(self):
        assert not is_primitive("x^2y^3").is_primitive

    def test_identity(self):
        verdict = is_primitive(Word.identity())
        assert not verdict.is_primitive
        assert not verdict.is_primitive_power

    def test_trace_strictly_decreases(self):
        verdict = is_primitive("(xy^5)^4xy^4")
        lengths = [length for _, length in verdict.reduction_trace]
        assert lengths == sorted(lengths, reverse=True)
        assert len(set(lengths)) == len(lengths)
        assert lengths[-1] == 1

    def test_trace_replays(self):
        w = CyclicWord.of("(xy^5)^4xy^4")
        for move_id, length in is_primitive(w).reduction_trace:
            w = apply_whitehead(w, move_id)
            assert w.length == length

    @given(words)
    def test_invariance_under_inverse(self, w: Word):
        cyc = CyclicWord.of(w)
        assert is_primitive(cyc).is_primitive == is_primitive(cyc.inverse()).is_primitive

    @given(words)
    def test_invariance_under_swap(self, w: Word):
        cyc = CyclicWord.of(w)
        assert (
            is_primitive(cyc).is_primitive
            == is_primitive(cyc.swap_generators()).is_primitive
        )

    @given(words, words)
    def test_invariance_under_conjugation(self, w: Word, g: Word):
        assert (
            is_primitive(g * w * g.inverse()).is_primitive
            == is_primitive(w).is_primitive
        )

    @given(words)
    def test_primitive_has_coprime_abelianization(self, w: Word):
        cyc = CyclicWord.of(w)
        if is_primitive(cyc).is_primitive:
            pair = cyc.abelianization()
            assert gcd(pair.e_x, pair.e_y) == 1


class TestPrimitivePower:
    def test_square_of_pair(self):
        verdict = is_primitive_power("(xy)^2")
        assert verdict.is_primitive_power
        assert not verdict.is_primitive
        assert verdict.power_root == parse_word("xy")

    def test_seventh_power(self):
        verdict = is_primitive_power("y^7")
        assert verdict.is_primitive_power
        assert verdict.power_root == parse_word("y")

    def test_x2y2(self):
        verdict = is_primitive_power("x^2y^2")
        assert not verdict.is_primitive_power
        assert verdict.power_root is None

    @given(words)
    def test_primitive_implies_power_with_trivial_root(self, w: Word):
        verdict = is_primitive(w)
        if verdict.is_primitive:
            assert verdict.is_primitive_power
            assert verdict.power_root is not None
            assert CyclicWord.of(verdict.power_root) == CyclicWord.of(w)

    @given(words, st.integers(min_value=1, max_value=4))
    def test_powers_of_primitives(self, w: Word, k: int):
        if is_primitive(w).is_primitive:
            assert is_primitive_power(w**k).is_primitive_power


class TestOzForm:
    def test_shell_word(self):
        assert oz_form_check("(xy^5)^4xy^4")

    def test_gap_two(self):
        assert not oz_form_check("xy^3xy^1")

    def test_generator(self):
        assert oz_form_check("x")

    def test_single_letters_pass(self):
        assert oz_form_check("y")
        assert oz_form_check("x^-1")
        assert not oz_form_check("y^9")

    def test_long_x_runs_pass_in_swapped_role(self):
        assert oz_form_check("x^2yx^3y")
        assert not oz_form_check("x^2y^2")

    def test_mixed_sign_fails(self):
        assert not oz_form_check("xyx^-1y")
        assert not oz_form_check("xyxy^-1")

    def test_not_sufficient(self):
        # y-exponents stay within {1, 2} yet the word is not a
        # primitive power (abelianization (4, 6) is not coprime and the
        # exponent pattern 2,2,1,1 is aperiodic)
        assert oz_form_check("xy^2xy^2xyxy")
        assert not is_primitive_power("xy^2xy^2xyxy").is_primitive_power

    @given(words)
    def test_necessary_for_primitivity(self, w: Word):
        if is_primitive(w).is_primitive:
            assert oz_form_check(w)


class TestEnumeratePrimitives:
    def test_length_one(self):
        expected = {CyclicWord.of(s) for s in ("x", "x^-1", "y", "y^-1")}
        assert enumerate_primitives(1) == expected

    def test_length_two(self):
        added = {CyclicWord.of(s) for s in ("xy", "xy^-1", "x^-1y", "x^-1y^-1")}
        assert enumerate_primitives(2) == enumerate_primitives(1) | added

    def test_guard(self):
        with pytest.raises(ValueError):
            enumerate_primitives(21)

    def test_all_pass_oz(self):
        assert all(oz_form_check(w) for w in enumerate_primitives(8))

    def test_counts_match_coprime_pairs(self):
        # classes of length n >= 2 correspond to coprime exponent pairs,
        # 4 sign choices each, so each length contributes 4 * phi(n)
        by_len: dict[int, int] = {}
        for w in enumerate_primitives(9):
            by_len[w.length] = by_len.get(w.length, 0) + 1
        phi = lambda n: sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
        assert by_len[1] == 4
        for n in range(2, 10):
            assert by_len[n] == 4 * phi(n)

    def test_oracle_vs_oracle(self):
        primitives = enumerate_primitives(7)
        for w in all_cyclic_words(7):
            assert is_primitive(w).is_primitive == (w in primitives)


@settings(max_examples=40)
@given(words, st.sampled_from(MOVE_IDS))
def test_moves_preserve_primitivity(w: Word, move_id: str):
    cyc = CyclicWord.of(w)
    image = apply_whitehead(cyc, move_id)
    assert is_primitive(image).is_primitive == is_primitive(cyc).is_primitive

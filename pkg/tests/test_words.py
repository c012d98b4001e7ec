from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bisector_words import words
from oracles import is_interlacing_literal

EXAMPLE_18 = (0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1)


def random_words(max_n=8):
    return (
        st.integers(3, max_n)
        .flatmap(lambda n: st.lists(st.integers(0, 1), min_size=2 * n, max_size=2 * n))
        .map(tuple)
    )


class TestSignature:
    def test_n9_example(self):
        assert words.signature(EXAMPLE_18) == (1, 0, 1, 1, 2, 1, 1, 0, 2)

    def test_n3_examples(self):
        assert words.signature((1, 0, 1, 1, 0, 0)) == (2, 0, 1)
        assert words.signature((0, 1, 0, 1, 0, 1)) == (1, 1, 1)

    @given(random_words())
    def test_sum_is_popcount(self, w):
        assert sum(words.signature(w)) == sum(w)

    def test_rejects_odd_length(self):
        with pytest.raises(ValueError):
            words.signature((1, 0, 1, 1, 0))

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            words.signature((1, 0, 1, 0))


class TestInterlacing:
    @pytest.mark.parametrize(
        "sig,expected",
        [
            ((1, 0, 1, 1, 2, 1, 1, 0, 2), True),
            ((1, 1, 1), False),
            ((2, 0, 1), True),
            ((0, 1, 2, 1, 2, 1, 0, 1), False),
            ((0, 2, 1), True),
            ((0, 2, 2), False),
            ((0, 1, 2, 2), False),  # lone 0 needs a unique 2 overall
        ],
    )
    def test_examples_and_oracle(self, sig, expected):
        assert words.is_interlacing(sig) is expected
        assert is_interlacing_literal(sig) is expected

    @pytest.mark.parametrize("n", range(3, 11))
    def test_matches_literal_definition_everywhere(self, n):
        for sig in product((0, 1, 2), repeat=n):
            assert words.is_interlacing(sig) == is_interlacing_literal(sig), sig

    @given(st.integers(3, 9).flatmap(lambda n: st.lists(st.integers(0, 2), min_size=n, max_size=n)))
    def test_invariant_under_shift_and_reversal(self, sig):
        sig = tuple(sig)
        base = words.is_interlacing(sig)
        for k in range(len(sig)):
            assert words.is_interlacing(sig[k:] + sig[:k]) == base
        assert words.is_interlacing(sig[::-1]) == base

    def test_implies_equal_letter_counts(self):
        for n in (4, 5, 6):
            for sig in product((0, 1, 2), repeat=n):
                if words.is_interlacing(sig):
                    assert sig.count(0) == sig.count(2) >= 1


class TestRealizable:
    def test_examples(self):
        assert words.is_realizable((1, 0, 1, 1, 0, 0)) is True
        assert words.is_realizable((0, 1, 0, 1, 0, 1)) is False
        # signature of 111000 is (1,1,1): not realizable despite n ones
        assert words.is_realizable((1, 1, 1, 0, 0, 0)) is False

    @given(random_words())
    def test_constant_on_bracelet_classes(self, w):
        base = words.is_realizable(w)
        for variant in words.bracelet_class(w):
            assert words.is_realizable(variant) == base


class TestBracelet:
    def test_same_class_and_orbit(self):
        a = words.canonical_bracelet((1, 1, 0, 1, 0, 0))
        b = words.canonical_bracelet((1, 0, 1, 1, 0, 0))
        assert a == b
        assert a.orbit_size == 12

    def test_idempotent(self):
        b = words.canonical_bracelet(EXAMPLE_18)
        assert words.canonical_bracelet(b.word) == b

    @given(random_words(), st.integers(0, 100), st.booleans())
    def test_invariant_on_class(self, w, shift, reverse):
        variant = w[::-1] if reverse else w
        k = shift % len(variant)
        variant = variant[k:] + variant[:k]
        assert words.canonical_bracelet(variant) == words.canonical_bracelet(w)

    @given(random_words())
    def test_orbit_divides_4n(self, w):
        b = words.canonical_bracelet(w)
        assert 4 * b.n % b.orbit_size == 0

    def test_periodic_palindrome_has_small_orbit(self):
        w = (1, 0, 1, 0, 1, 0, 1, 0)  # period 2 and reversal-symmetric
        assert words.canonical_bracelet(w).orbit_size < 4 * 4

    def test_string_form(self):
        assert str(words.canonical_bracelet((1, 0, 1, 1, 0, 0))) == "001011"


class TestFolding:
    def test_fold_example(self):
        assert words.fold((1, 0, 1, 1, 0, 0)) == ("11", "00", "10")

    def test_unfold_example(self):
        assert words.unfold(("11", "00", "10"), True) == (1, 0, 1, 1, 0, 0)

    def test_alternating_word_has_no_balanced_letters(self):
        f = words.fold((1, 0, 1, 0, 1, 0))
        assert all(a in ("10", "01") for a in f)
        assert words.unfold(f, True) == words.unfold(f, False)

    def test_roundtrip_with_matching_flag(self):
        for w in [(1, 0, 1, 1, 0, 0), EXAMPLE_18]:
            f = words.fold(w)
            balanced = [a for a in f if a in ("00", "11")]
            flag = balanced[0] == "11"
            assert words.unfold(f, flag) == w

    def test_fold_of_unfold_restores_alternation(self):
        f = ("11", "00", "10", "11", "00")
        assert words.fold(words.unfold(f, True)) == f


class TestPrefixCounts:
    def test_examples(self):
        assert words.prefix_counts((1, 0, 1, 1, 2, 1, 1, 0, 2), 9) == (2, 5, 2)
        assert words.prefix_counts((1, 0, 1, 1, 2, 1, 1, 0, 2), 0) == (0, 0, 0)
        assert words.prefix_counts((2, 0, 1), 2) == (1, 0, 1)

    def test_counts_sum_to_floor_x(self):
        sig = (1, 0, 1, 1, 2, 1, 1, 0, 2)
        for x in (0, 2.5, 6.9, 9):
            assert sum(words.prefix_counts(sig, x)) == int(x)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            words.prefix_counts((2, 0, 1), 4)
        with pytest.raises(ValueError):
            words.prefix_counts((2, 0, 1), -1)


class TestSerialization:
    def test_string_roundtrip(self):
        w = words.word_from_string("101100")
        assert w == (1, 0, 1, 1, 0, 0)
        assert words.word_to_string(w) == "101100"

    def test_bad_characters(self):
        with pytest.raises(ValueError):
            words.word_from_string("10210a")

    @given(random_words())
    def test_int_roundtrip(self, w):
        n = len(w) // 2
        assert words.int_to_word(words.word_to_int(w), n) == w


def test_run_word():
    assert words.run_word(3) == (1, 0, 1, 1, 0, 0)
    assert words.run_word(5) == (1, 0, 1, 1, 1, 1, 0, 0, 0, 0)
    assert sum(words.run_word(7)) == 7
    assert words.is_realizable(words.run_word(6))
    with pytest.raises(ValueError):
        words.run_word(2)

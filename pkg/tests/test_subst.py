"""Tests for free-monoid substitutions and the Thue-Morse cross-check."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadtorus.subst import (
    RUNLEN_SUB,
    TM_SUB,
    Substitution,
    run_lengths,
    thue_morse_check,
    thue_morse_word,
)


def naive_power(sub: Substitution, word, n: int):
    word = tuple(word)
    for _ in range(n):
        word = sub(word)
    return word


@given(st.text(alphabet="01", max_size=8), st.integers(min_value=0, max_value=4))
def test_apply_power_matches_naive(word, n):
    assert TM_SUB.apply_power(word, n) == naive_power(TM_SUB, word, n)
    assert RUNLEN_SUB.apply_power(word, n) == naive_power(RUNLEN_SUB, word, n)


@given(st.text(alphabet="01", max_size=6), st.integers(min_value=0, max_value=6))
def test_counts_match_explicit_expansion(word, n):
    image = naive_power(TM_SUB, word, n)
    assert TM_SUB.word_length(word, n) == len(image)
    counts = TM_SUB.letter_counts(word, n)
    for letter in "01":
        assert counts[letter] == image.count(letter)
    tau = {"0": 3, "1": 7}
    assert TM_SUB.weighted_length(word, n, tau) == sum(tau[a] for a in image)


def test_incidence_matrix_of_composition():
    comp = TM_SUB.compose(RUNLEN_SUB)
    m1 = TM_SUB.incidence_matrix()
    m2 = RUNLEN_SUB.incidence_matrix()
    prod = [
        [sum(m1[i][k] * m2[k][j] for k in range(2)) for j in range(2)]
        for i in range(2)
    ]
    assert comp.incidence_matrix() == prod
    for letter, image in RUNLEN_SUB.images.items():
        assert comp.images[letter] == TM_SUB(image)


def test_reversed_substitution():
    rev = RUNLEN_SUB.reversed()
    for letter, image in RUNLEN_SUB.images.items():
        assert rev.images[letter] == image[::-1]
    word = tuple("0110")
    assert rev(word[::-1]) == RUNLEN_SUB(word)[::-1]


def test_endomorphism_flag():
    assert TM_SUB.is_endomorphism
    assert Substitution({"0": "01", "1": "0"}).is_endomorphism
    assert not Substitution({"0": "02", "1": "1"}).is_endomorphism
    with pytest.raises(ValueError):
        Substitution({"0": "02", "1": "1"}).incidence_matrix()


def test_max_image_length():
    assert TM_SUB.max_image_length() == 2
    assert RUNLEN_SUB.max_image_length() == 5


def test_thue_morse_prefix():
    assert thue_morse_word(16)[:16] == tuple("0110100110010110")
    # fixed point of the doubling substitution
    assert TM_SUB(thue_morse_word(8))[:16] == thue_morse_word(16)[:16]


def test_run_lengths():
    assert run_lengths(tuple("0110100110010110")) == [1, 2, 1, 1, 2, 2, 2, 1, 1, 2, 1]
    assert run_lengths(()) == []
    assert run_lengths(tuple("000")) == [3]


@pytest.mark.parametrize("n", [1, 10, 1000, 10**4])
def test_thue_morse_check(n):
    assert thue_morse_check(n)


def test_cube_free_sample():
    word = thue_morse_word(4096)
    rng = random.Random(7)
    for _ in range(200):
        k = rng.randrange(1, 30)
        i = rng.randrange(0, len(word) - 3 * k)
        chunk = word[i : i + 3 * k]
        assert not (chunk[:k] == chunk[k : 2 * k] == chunk[2 * k :])

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from gfmzv.words import (
    B, X, Y, Poly, Series, depth, enumerate_words, exp_conc, format_poly, format_word,
    log_conc, parse_poly, parse_word, weight, words_up_to,
)
from strategies import polys, rationals, words


def brute_words(alphabet, n):
    """Every letter sequence of weight n, found by trying all tuples of small letters."""
    found = []
    for length in range(n + 1):
        for w in product(range(n + 1), repeat=length):
            if all(alphabet.is_letter(a) for a in w) and weight(w, alphabet) == n:
                found.append(w)
    return found


def test_weight_and_depth_examples():
    assert weight((2, 0, 3), B) == 6
    assert weight((), B) == 0
    assert weight((0, 0, 1), X) == 3
    assert depth((2, 0, 3), B) == 2
    assert depth((), B) == 0
    assert depth((0, 1, 0, 1), X) == 2


def test_poly_basics():
    p = parse_poly("2*b2 + 3*b1.b1")
    assert p.coeff((2,)) == 2
    assert not (p + (-p))
    assert Poly.word(B, (2,)).scale(Fraction(1, 2)).coeff((2,)) == Fraction(1, 2)


def test_enumerate_examples():
    assert enumerate_words(B, 1) == [(0,), (1,)]
    assert enumerate_words(B, 2) == [(0, 0), (0, 1), (1, 0), (1, 1), (2,)]
    assert enumerate_words(Y, 3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]


@pytest.mark.parametrize("alphabet", [B, X, Y])
@pytest.mark.parametrize("n", range(6))
def test_enumerate_matches_brute_force(alphabet, n):
    assert sorted(enumerate_words(alphabet, n)) == sorted(brute_words(alphabet, n))


def test_b_word_counts_are_fibonacci():
    # b-words of weight n are counted by F(2n+1), a closed form independent of the enumerator
    fib = [0, 1]
    while len(fib) < 20:
        fib.append(fib[-1] + fib[-2])
    assert [len(enumerate_words(B, n)) for n in range(9)] == [fib[2 * n + 1] for n in range(9)]


@given(words(B, 6))
def test_word_text_round_trip(w):
    assert parse_word(format_word(w, B), B) == (B, w)
    assert parse_word(format_word(w, B, sep=" "), B) == (B, w)


@pytest.mark.parametrize("bad", ["b1 q2", "y0", "b1 x0", "bx"])
def test_parse_word_names_bad_token(bad):
    with pytest.raises(ValueError) as e:
        parse_word(bad)
    assert any(tok in str(e.value) for tok in bad.split())


@given(polys(B, 5))
def test_poly_text_round_trip(p):
    assert parse_poly(format_poly(p), B) == p


@given(polys(B, 4), polys(B, 4), polys(B, 4))
def test_concatenation_associative_and_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(rationals)
def test_exp_log_inverse(c):
    p = Poly(B, {(1,): c, (2,): 2 * c})
    s = exp_conc(p, 5)
    assert log_conc(s) == Series.from_poly(p, 5)
    assert s * s.inverse() == Series.one(B, 5)


def test_series_truncates_products():
    s = Series.from_poly(parse_poly("b1"), 2) + Series.one(B, 2)
    assert (s * s).max_weight() == 2
    assert s.power(3).coeff((1, 1)) == 3


def test_words_up_to_is_graded_in_order():
    ws = words_up_to(X, 4)
    assert [weight(w, X) for w in ws] == sorted(weight(w, X) for w in ws)

import itertools

import pytest
from hypothesis import given, strategies as st

from bertrandnum import (
    EPWord,
    WordError,
    epword,
    format_epword,
    format_word,
    is_parry_valid,
    lex_cmp,
    parse_epword,
    parse_word,
    quasi_to_greedy,
    shift,
)

# ---------------------------------------------------------------------------
# brute-force oracle: compare digit streams position by position


def brute_parry_valid(d: EPWord, strict: bool, depth: int = 50) -> bool:
    head = [d.digit(j) for j in range(2 * depth)]
    for i in range(1, depth + 1):
        shifted = head[i : i + depth]
        original = head[:depth]
        if shifted > original:
            return False
        if strict and shifted == original:
            return False
    return True


def small_epwords(max_total=6, max_digit=2):
    """Every eventually periodic word with pre+per of total length <= max_total
    over the digits 0..max_digit."""
    digits = range(max_digit + 1)
    for total in range(1, max_total + 1):
        for per_len in range(1, total + 1):
            pre_len = total - per_len
            for pre in itertools.product(digits, repeat=pre_len):
                for per in itertools.product(digits, repeat=per_len):
                    yield epword(pre, per)


# ---------------------------------------------------------------------------
# canonical form


def test_canonical_examples():
    assert epword((1, 1, 0), (0,)) == epword((1, 1), (0,))
    assert epword((1, 0, 1), (0, 1)) == epword((), (1, 0))
    assert epword((2, 1), (1,)) == epword((2,), (1,))
    assert epword((), (1, 0, 1, 0)) == epword((), (1, 0))
    assert epword((), ()) == epword((), (0,))


def test_canonical_idempotent_exhaustive():
    for w in small_epwords():
        again = epword(w.pre, w.per)
        assert again == w
        assert again.pre == w.pre and again.per == w.per


def test_negative_digit_rejected():
    with pytest.raises(WordError):
        epword((1, -1), (0,))


def test_digit_and_prefix():
    w = epword((2,), (1,))
    assert [w.digit(i) for i in range(5)] == [2, 1, 1, 1, 1]
    assert w.prefix(4) == (2, 1, 1, 1)
    assert epword((1, 1), (0,)).prefix(5) == (1, 1, 0, 0, 0)


# ---------------------------------------------------------------------------
# lexicographic comparison


def test_lex_finite_first_differing_letter():
    assert lex_cmp((1, 1, 0), (1, 0, 1)) == 1
    assert lex_cmp((1, 0, 1), (1, 1, 0)) == -1


def test_lex_quasi_greedy_below_greedy():
    # (10)^w is lexicographically below 110^w
    assert lex_cmp(epword((), (1, 0)), epword((1, 1), (0,))) == -1


def test_lex_reflexive():
    w = epword((1, 0), (2, 1))
    assert lex_cmp(w, w) == 0
    assert lex_cmp((0, 1, 2), (0, 1, 2)) == 0


def test_lex_finite_length_mismatch_rejected():
    with pytest.raises(WordError):
        lex_cmp((1, 0), (1, 0, 0))


def test_lex_mixed_pads_with_zeros():
    # documented extension: a finite word is read as word . 0^w
    assert lex_cmp((1, 1), epword((1, 1), (0,))) == 0
    assert lex_cmp((1, 0), epword((), (1, 0))) == -1
    assert lex_cmp(epword((), (1,)), (1, 1)) == 1


def test_lex_agrees_with_long_prefixes():
    words = list(small_epwords(max_total=4, max_digit=2))
    for u in words[::7]:
        for v in words[::11]:
            expected = 0
            pu = u.prefix(60)
            pv = v.prefix(60)
            if pu != pv:
                expected = -1 if pu < pv else 1
            assert lex_cmp(u, v) == expected


@st.composite
def epwords(draw):
    pre = draw(st.lists(st.integers(0, 3), max_size=5))
    per = draw(st.lists(st.integers(0, 3), min_size=1, max_size=5))
    return epword(tuple(pre), tuple(per))


@given(epwords(), epwords(), epwords())
def test_lex_total_order(u, v, w):
    cuv, cvu = lex_cmp(u, v), lex_cmp(v, u)
    assert cuv == -cvu
    if cuv == 0:
        assert u == v  # canonical form makes equality structural
    if lex_cmp(u, v) <= 0 and lex_cmp(v, w) <= 0:
        assert lex_cmp(u, w) <= 0


# ---------------------------------------------------------------------------
# shift


def test_shift_examples():
    assert shift(epword((1, 1), (0,)), 1) == epword((1,), (0,))
    assert shift(epword((), (1, 0)), 2) == epword((), (1, 0))
    assert shift(epword((2,), (1,)), 1) == epword((), (1,))


def test_shift_matches_digit_streams():
    for w in small_epwords(max_total=4):
        for i in range(8):
            assert shift(w, i).prefix(20) == tuple(w.digit(i + j) for j in range(20))


# ---------------------------------------------------------------------------
# shift domination (Parry validity)


def test_parry_valid_constant_word():
    two = epword((), (2,))
    assert not is_parry_valid(two, strict=True)
    assert is_parry_valid(two, strict=False)


def test_parry_valid_golden_expansion():
    assert is_parry_valid(epword((1, 1), (0,)), strict=True)


def test_parry_invalid_10_then_ones():
    # sigma^2(101^w) = 1^w beats 101^w; confirmed by the depth-10 oracle
    w = epword((1, 0), (1,))
    assert brute_parry_valid(w, strict=True, depth=10) is False
    assert is_parry_valid(w, strict=True) is False


def test_parry_valid_agrees_with_depth50_oracle():
    for w in small_epwords():
        for strict in (False, True):
            assert is_parry_valid(w, strict) == brute_parry_valid(w, strict), (w, strict)


# ---------------------------------------------------------------------------
# the quasi-greedy -> greedy transform


def test_quasi_to_greedy_examples():
    assert quasi_to_greedy(epword((), (2,))) == epword((3,), (0,))
    assert quasi_to_greedy(epword((), (1, 0))) == epword((1, 1), (0,))
    assert quasi_to_greedy(epword((2,), (1,))) == epword((2,), (1,))


def test_quasi_to_greedy_rejects_invalid():
    with pytest.raises(WordError):
        quasi_to_greedy(epword((0, 1), (2,)))


def test_quasi_to_greedy_outputs_strictly_dominated():
    # exhaustive over the small enumeration: non-strict domination always
    # upgrades to strict domination under this transform
    for a in small_epwords(max_total=6, max_digit=2):
        if is_parry_valid(a, strict=False):
            d = quasi_to_greedy(a)
            assert is_parry_valid(d, strict=True), (a, d)


# ---------------------------------------------------------------------------
# text syntax


def test_parse_format_roundtrip():
    for text, word in [
        ("11(0)", epword((1, 1), (0,))),
        ("110(0)", epword((1, 1), (0,))),
        ("(10)", epword((), (1, 0))),
        ("2(1)", epword((2,), (1,))),
        ("110", epword((1, 1), (0,))),
        ("[10,0,1]([2])", epword((10, 0, 1), (2,))),
    ]:
        assert parse_epword(text) == word
    w = epword((10, 0, 1), (2,))
    assert parse_epword(format_epword(w)) == w


def test_parse_word_finite():
    assert parse_word("110") == (1, 1, 0)
    assert parse_word("[10,0,1]") == (10, 0, 1)
    assert parse_word("ε") == ()
    assert format_word(()) == "ε"
    assert format_word((1, 1, 0)) == "110"
    assert format_word((10, 0)) == "[10,0]"


def test_parse_word_bad_syntax():
    with pytest.raises(WordError):
        parse_word("1a0")
    with pytest.raises(WordError):
        parse_epword("11(")

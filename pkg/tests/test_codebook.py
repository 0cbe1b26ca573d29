import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_ternary_min_length
from strategies import prefix_free_codebooks, random_codebook_dict
from rotcode.codebook import (
    Codebook,
    build_huffman_goldman,
    canonical_ternary_codes,
    expected_length,
    goldman_label,
    parse_codebook,
    read_codebook,
    read_frequencies,
    ternary_huffman_lengths,
    validate_prefix_free,
    write_codebook,
)
from rotcode.errors import CodebookError, CodebookParseError, CoverageError, DegenerateSourceError


@pytest.mark.parametrize("book, ok", [
    ({0: "A", 1: "T"}, True),
    ({0: "A", 1: "AT"}, False),
    ({0: "ATC", 1: "ATC"}, False),
    ({0: "GA", 1: "GT", 2: "C", 3: "A", 4: "TTT"}, True),
    ({0: "GA", 1: "G"}, False),
])
def test_validate_prefix_free(book, ok):
    assert validate_prefix_free(book) is ok


def test_codebook_rejects_bad_input():
    with pytest.raises(CodebookError):
        Codebook({})
    with pytest.raises(CodebookError):
        Codebook({0: "A", 1: "AT"})
    with pytest.raises(CodebookError):
        Codebook({0: "AN"})
    with pytest.raises(CodebookError):
        Codebook({-1: "A"})
    with pytest.raises(CodebookError):
        Codebook({0: "A" * 33})


def test_codebook_is_a_mapping():
    cb = Codebook({1: "TC", 0: "A"})
    assert list(cb) == [0, 1]
    assert cb == {0: "A", 1: "TC"}
    assert cb.lengths() == {0: 1, 1: 2}
    assert cb.inverse() == {"A": 0, "TC": 1}
    assert hash(cb) == hash(Codebook({0: "A", 1: "TC"}))


def test_equal_weights_three_symbols():
    cb = build_huffman_goldman({0: 9, 1: 9, 2: 9})
    assert sorted(map(len, cb.values())) == [1, 1, 1]


def test_five_equiprobable_symbols():
    freqs = {i: 1 for i in range(5)}
    cb = build_huffman_goldman(freqs)
    # frozen from the brute-force oracle
    assert brute_force_ternary_min_length(list(freqs.values())) == Fraction(8, 5)
    assert expected_length(cb, freqs) == Fraction(8, 5)


def test_dummy_padding_for_even_alphabets():
    # 4 symbols: one zero-weight dummy makes the merges ternary
    lengths = ternary_huffman_lengths({0: 5, 1: 3, 2: 1, 3: 1})
    assert lengths == {0: 1, 1: 1, 2: 2, 3: 2}


def test_zero_count_symbols_are_dropped():
    cb = build_huffman_goldman({0: 4, 1: 0, 2: 2})
    assert set(cb) == {0, 2}


@pytest.mark.parametrize("freqs", [{}, {0: 5}, {0: 5, 1: 0}])
def test_degenerate_source(freqs):
    with pytest.raises(DegenerateSourceError):
        build_huffman_goldman(freqs)


def test_tie_break_is_deterministic():
    freqs = {7: 2, 3: 2, 5: 2, 1: 2}
    assert build_huffman_goldman(freqs) == build_huffman_goldman(dict(reversed(freqs.items())))


def test_canonical_codes_follow_length_then_id():
    codes = canonical_ternary_codes({4: 1, 2: 2, 9: 2, 1: 1})
    assert codes == {1: (0,), 4: (1,), 2: (2, 0), 9: (2, 1)}


@pytest.mark.parametrize("trits, word", [
    ((0,), "T"),
    ((1,), "C"),
    ((2,), "G"),
    ((0, 0, 0), "TAT"),
    ((2, 2, 2), "GCG"),
])
def test_goldman_label(trits, word):
    assert goldman_label(trits) == word


@settings(max_examples=200, deadline=None)
@given(st.dictionaries(st.integers(0, 300), st.integers(1, 10_000), min_size=2, max_size=60))
def test_huffman_goldman_properties(freqs):
    cb = build_huffman_goldman(freqs)
    assert validate_prefix_free(cb)
    assert set(cb) == set(freqs)
    for word in cb.values():
        assert all(a != b for a, b in zip(word, word[1:]))
    assert sum(Fraction(1, 3 ** len(w)) for w in cb.values()) <= 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 50), min_size=2, max_size=6))
def test_huffman_matches_brute_force(weights):
    freqs = dict(enumerate(weights))
    cb = build_huffman_goldman(freqs)
    assert expected_length(cb, freqs) == brute_force_ternary_min_length(weights)


def test_expected_length_examples():
    assert expected_length({0: "A", 1: "TC"}, {0: 3, 1: 1}) == Fraction(5, 4)
    assert expected_length({0: "AT", 1: "TC", 2: "GA"}, {0: 7, 1: 1, 2: 12}) == 2
    with pytest.raises(CoverageError):
        expected_length({0: "A"}, {0: 1, 5: 2})


def test_read_codebook_format(tmp_path):
    p = tmp_path / "cb.txt"
    p.write_text("# comment\n0\tA\n1\tTC\n")
    assert read_codebook(p) == {0: "A", 1: "TC"}


@pytest.mark.parametrize("text, lineno, fragment", [
    ("0\tA\n1\tAB\n", 2, "non-nucleotide"),
    ("0\tA\n0\tT\n", 2, "duplicate"),
    ("0\tA\n1\tAT\n", 2, "prefix"),
    ("0 A\n", 1, "TAB"),
    ("x\tA\n", 1, "decimal"),
])
def test_parse_errors_name_the_line(text, lineno, fragment):
    with pytest.raises(CodebookParseError) as info:
        parse_codebook(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)


def test_write_read_roundtrip_100_entries(tmp_path):
    rng = random.Random(1234)
    book = {}
    while len(book) < 100:
        book = random_codebook_dict(rng, max_leaves=300)
    book = dict(list(book.items())[:100])
    path = tmp_path / "big.txt"
    write_codebook(book, path)
    assert read_codebook(path) == book
    assert path.read_bytes().count(b"\r") == 0


@settings(max_examples=50, deadline=None)
@given(prefix_free_codebooks())
def test_roundtrip_property(tmp_path_factory, book):
    path = tmp_path_factory.mktemp("cb") / "cb.txt"
    write_codebook(book, path)
    assert read_codebook(path) == book


def test_read_frequencies(tmp_path):
    p = tmp_path / "f.txt"
    p.write_text("0 9\n1\t9\n# x\n2 9\n")
    assert read_frequencies(p) == {0: 9, 1: 9, 2: 9}

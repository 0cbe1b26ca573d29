import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import trace_encode
from strategies import prefix_free_codebooks
from rotcode.analyzer import homopolymer_runs, runs
from rotcode.codebook import build_huffman_goldman
from rotcode.entropy_stream import PrefixDecoder, decode_stream, encode_stream
from rotcode.errors import CoverageError, DecodeError
from rotcode.rotation import Mode, Scheduler, generate_codes

BOOK = {0: "A", 1: "TC"}


def test_encode_round_robin_trace():
    out = encode_stream([0, 0, 0], generate_codes(BOOK), Scheduler(Mode.ROUND_ROBIN), 1)
    assert out == trace_encode([0, 0, 0], BOOK, [0, 1, 2], 1) == "ATC"


def test_encode_without_rotation_keeps_homopolymer():
    assert encode_stream([0, 0, 0], generate_codes(BOOK), Scheduler(Mode.NONE), 1) == "AAA"


def test_decode_trace():
    rs = generate_codes(BOOK)
    assert decode_stream("ATC", rs, Scheduler(Mode.ROUND_ROBIN), 1, 3) == [0, 0, 0]


def test_fragment_boundaries():
    rs = generate_codes(BOOK)
    src = [0, 1, 0, 0, 1, 1, 0]
    out = encode_stream(src, rs, Scheduler(Mode.ROUND_ROBIN), 3)
    assert out == trace_encode(src, BOOK, [0, 1, 2], 3)


def test_coverage_error_reports_position():
    with pytest.raises(CoverageError) as info:
        encode_stream([0, 1, 5], generate_codes(BOOK), Scheduler(), 6)
    assert info.value.position == 2


@pytest.mark.parametrize("stream, n, offset", [
    ("ATCA", 2, 3),      # trailing garbage
    ("AT", 3, 2),        # stream ends inside a codeword
    ("", 1, 0),          # premature end
])
def test_decode_errors(stream, n, offset):
    rs = generate_codes(BOOK)
    with pytest.raises(DecodeError) as info:
        decode_stream(stream, rs, Scheduler(Mode.NONE), 6, n)
    assert info.value.offset == offset


def test_no_codeword_matches_reports_earliest_offset():
    rs = generate_codes({0: "AT", 1: "AC", 2: "G"})
    with pytest.raises(DecodeError) as info:
        decode_stream("ATGAA", rs, Scheduler(), 6, 3)
    assert info.value.offset == 4


def test_prefix_decoder_read():
    dec = PrefixDecoder(build_huffman_goldman({0: 5, 1: 3, 2: 1, 3: 1, 4: 1}))
    word = dec.codebook[3]
    assert dec.read("xx" + word + "T", 2) == (3, 2 + len(word))


def test_wrong_seed_does_not_silently_match():
    rs = generate_codes(build_huffman_goldman({i: i + 1 for i in range(12)}))
    rng = random.Random(3)
    src = [rng.randrange(12) for _ in range(500)]
    ns = encode_stream(src, rs, Scheduler(Mode.PSEUDO_RANDOM, 1), 6)
    try:
        out = decode_stream(ns, rs, Scheduler(Mode.PSEUDO_RANDOM, 2), 6, len(src))
    except DecodeError:
        return
    assert out != src


@pytest.mark.parametrize("mode", list(Mode))
def test_large_roundtrip(mode):
    rng = random.Random(11)
    freqs = {i: rng.randint(1, 100) for i in range(12)}
    rs = generate_codes(build_huffman_goldman(freqs))
    src = [rng.randrange(12) for _ in range(10_000)]
    ns = encode_stream(src, rs, Scheduler(mode, 77), 6)
    assert decode_stream(ns, rs, Scheduler(mode, 77), 6, len(src)) == src


@settings(max_examples=150, deadline=None)
@given(
    prefix_free_codebooks(),
    st.sampled_from(list(Mode)),
    st.integers(0, 2**64 - 1),
    st.sampled_from([1, 6, 64]),
    st.integers(0, 2**32 - 1),
)
def test_roundtrip_and_rate_invariance(book, mode, seed, frag, src_seed):
    rng = random.Random(src_seed)
    symbols = list(book)
    src = [rng.choice(symbols) for _ in range(rng.randint(0, 300))]
    rs = generate_codes(book)
    ns = encode_stream(src, rs, Scheduler(mode, seed), frag)
    plain = encode_stream(src, rs, Scheduler(Mode.NONE), frag)
    assert len(ns) == len(plain) == sum(len(book[s]) for s in src)
    assert decode_stream(ns, rs, Scheduler(mode, seed), frag, len(src)) == src


def _symbol_runs(src):
    out = []
    for sym in src:
        if out and out[-1][0] == sym:
            out[-1][1] += 1
        else:
            out.append([sym, 1])
    return out


@pytest.mark.parametrize("frag", [1, 3, 6])
def test_round_robin_bounds_homopolymers_on_skewed_source(frag):
    # p(0) = 0.95 with a single-letter codeword for 0; runs of 0 up to 60 long
    rng = random.Random(8)
    src = []
    while len(src) < 5000:
        src += [0] * rng.randint(1, 60) + [1]
    book = {0: "A", 1: "TG"}
    rs = generate_codes(book)
    rotated = encode_stream(src, rs, Scheduler(Mode.ROUND_ROBIN), frag)
    plain = encode_stream(src, rs, Scheduler(Mode.NONE), frag)
    longest_symbol_run = max(n for sym, n in _symbol_runs(src) if sym == 0)
    assert max(n for _, n in runs(plain)) == longest_symbol_run
    assert max(n for _, n in runs(rotated)) <= frag
    if frag < 4:
        assert homopolymer_runs(rotated) == []

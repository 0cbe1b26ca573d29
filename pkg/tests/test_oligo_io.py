import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotcode.errors import FormatError
from rotcode.oligo_io import OligoPool, format_fasta, parse_fasta, read_fasta, reassemble, segment, write_fasta

streams = st.text("ATCG", max_size=1500)


def test_segment_lengths():
    pool = segment("A" * 450, 200)
    assert [len(o) for o in pool] == [200, 200, 50]
    assert pool.last_len == 50
    assert len(segment("A" * 200, 200)) == 1
    assert len(segment("", 200)) == 0


def test_reassemble():
    assert reassemble(OligoPool(["AT", "CG"], 2)) == "ATCG"
    assert reassemble(OligoPool([], 2)) == ""


@given(streams, st.integers(1, 250))
def test_segment_reassemble_roundtrip(s, n):
    assert reassemble(segment(s, n)) == s


def test_fasta_headers(tmp_path):
    path = tmp_path / "p.fasta"
    write_fasta(OligoPool(["ATCG", "GGCA", "T"], 4), path)
    lines = path.read_text().splitlines()
    assert lines[::2] == [">oligo_000000", ">oligo_000001", ">oligo_000002"]


@settings(max_examples=50, deadline=None)
@given(streams, st.integers(1, 250), st.one_of(st.none(), st.text("ATCG", min_size=4, max_size=40)))
def test_fasta_roundtrip(s, n, header):
    pool = segment(s, n, header=header)
    back = parse_fasta(format_fasta(pool), n)
    assert back == pool


def test_file_roundtrip(tmp_path):
    pool = segment("ATCG" * 120, 200, header="ACGT" * 8)
    write_fasta(pool, tmp_path / "x.fa")
    assert read_fasta(tmp_path / "x.fa") == pool
    assert b"\r" not in (tmp_path / "x.fa").read_bytes()


@pytest.mark.parametrize("text, message", [
    (">oligo_000000\nATNG\n", "invalid"),
    (">oligo_000000\nAT\n>oligo_000002\nCG\n", "missing"),
    (">oligo_000000\nAT\n>oligo_000000\nCG\n", "duplicate"),
    (">read7\nAT\n", "unexpected"),
    ("ATCG\n", "before"),
    (">oligo_000000\nATCG\n>oligo_000001\nAT\n>oligo_000002\nATCG\n", "greedy"),
])
def test_fasta_errors(text, message):
    with pytest.raises(FormatError, match=message):
        parse_fasta(text)


def test_empty_fasta():
    pool = parse_fasta("")
    assert len(pool) == 0 and pool.header is None

"""Cutting nucleotide streams into oligos and FASTA serialization.

A FASTA pool file holds an optional ``>header`` record (the nucleotide
mapped stream header) followed by ``>oligo_NNNNNN`` payload records, one
sequence line each.
"""

import re
from dataclasses import dataclass, field

from rotcode.codebook import is_nucleotide_string
from rotcode.errors import FormatError

DEFAULT_OLIGO_LENGTH = 200
HEADER_RECORD = "header"
INDEX_WIDTH = 6

_OLIGO_NAME = re.compile(r"oligo_(\d+)$")


@dataclass
class OligoPool:
    oligos: list = field(default_factory=list)
    oligo_length: int = DEFAULT_OLIGO_LENGTH
    header: str = None

    def __post_init__(self):
        if self.oligo_length < 1:
            raise ValueError("oligo_length must be positive")

    def __len__(self):
        return len(self.oligos)

    def __iter__(self):
        return iter(self.oligos)

    @property
    def last_len(self):
        return len(self.oligos[-1]) if self.oligos else 0

    @property
    def n_nucleotides(self):
        return sum(map(len, self.oligos))


def segment(ns, oligo_length=DEFAULT_OLIGO_LENGTH, header=None):
    if oligo_length < 1:
        raise ValueError("oligo_length must be positive")
    oligos = [ns[i:i + oligo_length] for i in range(0, len(ns), oligo_length)]
    return OligoPool(oligos, oligo_length, header)


def reassemble(pool):
    return "".join(pool.oligos)


def format_fasta(pool):
    lines = []
    if pool.header is not None:
        lines += [f">{HEADER_RECORD}", pool.header]
    for i, oligo in enumerate(pool.oligos):
        lines += [f">oligo_{i:0{INDEX_WIDTH}d}", oligo]
    return "".join(line + "\n" for line in lines)


def write_fasta(pool, path):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_fasta(pool))


def parse_fasta(text, oligo_length=None):
    """Parse a pool file; ``oligo_length`` defaults to the first oligo's length."""
    records = []
    name = None
    seq = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            if name is not None:
                records.append((name, "".join(seq), lineno))
            name, seq = line[1:].strip(), []
        else:
            if name is None:
                raise FormatError(f"line {lineno}: sequence before any '>' record")
            seq.append(line)
    if name is not None:
        records.append((name, "".join(seq), None))

    header = None
    indexed = {}
    for name, seq, _ in records:
        if seq and not is_nucleotide_string(seq):
            bad = sorted(set(seq) - set("ACGT"))
            raise FormatError(f"record {name!r}: invalid character(s) {''.join(bad)!r}")
        if name == HEADER_RECORD:
            if header is not None:
                raise FormatError("duplicate header record")
            header = seq
            continue
        m = _OLIGO_NAME.match(name)
        if not m:
            raise FormatError(f"unexpected record name {name!r}")
        idx = int(m.group(1))
        if idx in indexed:
            raise FormatError(f"duplicate oligo index {idx}")
        if not seq:
            raise FormatError(f"oligo {idx} is empty")
        indexed[idx] = seq
    missing = sorted(set(range(len(indexed))) - indexed.keys())
    if missing:
        raise FormatError(f"missing oligo index {missing[0]}")
    oligos = [indexed[i] for i in range(len(indexed))]
    if oligo_length is None:
        oligo_length = len(oligos[0]) if oligos else DEFAULT_OLIGO_LENGTH
    if any(len(o) != oligo_length for o in oligos[:-1]) or (oligos and len(oligos[-1]) > oligo_length):
        raise FormatError(f"oligos are not a greedy cut at length {oligo_length}")
    return OligoPool(oligos, oligo_length, header)


def read_fasta(path, oligo_length=None):
    with open(path, encoding="ascii", errors="replace") as fh:
        return parse_fasta(fh.read(), oligo_length)

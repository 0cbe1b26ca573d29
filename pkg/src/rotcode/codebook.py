"""Quaternary codebooks: validation, Huffman/Goldman construction and file I/O.

A codebook maps non-negative integer symbol ids to codewords over the
nucleotide alphabet ``A < T < C < G``. Codewords are plain ``str``.
"""

import heapq
import itertools
from collections.abc import Mapping
from fractions import Fraction

from rotcode.errors import (
    CodebookError,
    CodebookParseError,
    CoverageError,
    DegenerateSourceError,
    FormatError,
)

NUCLEOTIDES = "ATCG"
MAX_CODEWORD_LENGTH = 32

_NUCLEOTIDE_SET = frozenset(NUCLEOTIDES)


def is_nucleotide_string(s):
    return bool(s) and set(s) <= _NUCLEOTIDE_SET


def _find_prefix_violation(codewords):
    """Return a ``(shorter, longer)`` pair violating prefix-freeness, or None.

    After lexicographic sorting, any word that prefixes another also
    prefixes its immediate successor, so a linear scan suffices.
    """
    ordered = sorted(codewords)
    for a, b in zip(ordered, ordered[1:]):
        if b.startswith(a):
            return a, b
    return None


def validate_prefix_free(cb):
    """True iff no codeword is a duplicate or proper prefix of another."""
    words = list(cb.values()) if isinstance(cb, Mapping) else list(cb)
    return _find_prefix_violation(words) is None


class Codebook(Mapping):
    """Immutable, validated prefix-free map ``symbol id -> codeword``."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries):
        entries = dict(entries)
        if not entries:
            raise CodebookError("codebook must have at least one entry")
        for sym, word in entries.items():
            if not isinstance(sym, int) or isinstance(sym, bool) or sym < 0:
                raise CodebookError(f"symbol id must be a non-negative int, got {sym!r}")
            if not isinstance(word, str) or not is_nucleotide_string(word):
                raise CodebookError(f"symbol {sym}: codeword {word!r} is not a non-empty ACGT string")
            if len(word) > MAX_CODEWORD_LENGTH:
                raise CodebookError(
                    f"symbol {sym}: codeword length {len(word)} exceeds cap {MAX_CODEWORD_LENGTH}"
                )
        violation = _find_prefix_violation(entries.values())
        if violation is not None:
            raise CodebookError("not prefix-free: %r is a prefix of %r" % violation)
        self._entries = dict(sorted(entries.items()))
        self._hash = None

    def __getitem__(self, sym):
        return self._entries[sym]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, Codebook):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == dict(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._entries.items()))
        return self._hash

    def __repr__(self):
        return f"Codebook({self._entries!r})"

    def lengths(self):
        return {sym: len(word) for sym, word in self._entries.items()}

    @property
    def max_length(self):
        return max(len(w) for w in self._entries.values())

    def inverse(self):
        return {word: sym for sym, word in self._entries.items()}


def _as_codebook(cb):
    return cb if isinstance(cb, Codebook) else Codebook(cb)


# -- ternary Huffman ----------------------------------------------------------

def _check_frequencies(freqs):
    for sym, count in freqs.items():
        if not isinstance(sym, int) or sym < 0:
            raise CodebookError(f"symbol id must be a non-negative int, got {sym!r}")
        if not isinstance(count, int) or count < 0:
            raise CodebookError(f"symbol {sym}: count must be a non-negative int, got {count!r}")
    used = sorted(s for s, c in freqs.items() if c > 0)
    if len(used) < 2:
        raise DegenerateSourceError(
            f"need at least two symbols with nonzero count, got {len(used)}"
        )
    return used


def ternary_huffman_lengths(freqs):
    """Optimal ternary codeword lengths for the nonzero-count symbols.

    Zero-weight dummies pad the leaf count to an odd number so every merge
    takes exactly three nodes. Ties break on (real leaves by symbol id,
    then dummies, then internal nodes in creation order).
    """
    used = _check_frequencies(freqs)
    n_dummies = (len(used) - 1) % 2  # (n - 1) must be a multiple of k - 1 = 2

    # heap items: (weight, class, order, members); class 0 real, 1 dummy, 2 internal
    heap = [(freqs[s], 0, s, (s,)) for s in used]
    heap += [(0, 1, i, ()) for i in range(n_dummies)]
    heapq.heapify(heap)
    depth = dict.fromkeys(used, 0)
    serial = itertools.count()
    while len(heap) > 1:
        merged = [heapq.heappop(heap) for _ in range(3)]
        members = tuple(itertools.chain.from_iterable(m[3] for m in merged))
        for s in members:
            depth[s] += 1
        heapq.heappush(heap, (sum(m[0] for m in merged), 2, next(serial), members))
    return depth


def canonical_ternary_codes(lengths):
    """Assign canonical ternary digit strings in (length, symbol id) order."""
    order = sorted(lengths, key=lambda s: (lengths[s], s))
    codes = {}
    code = 0
    prev_len = lengths[order[0]]
    for i, sym in enumerate(order):
        length = lengths[sym]
        if i:
            code = (code + 1) * 3 ** (length - prev_len)
        if code >= 3 ** length:
            raise CodebookError("lengths violate the ternary Kraft inequality")
        digits = []
        c = code
        for _ in range(length):
            c, d = divmod(c, 3)
            digits.append(d)
        codes[sym] = tuple(reversed(digits))
        prev_len = length
    return codes


def goldman_label(trits, previous="A"):
    """Map a ternary digit string to nucleotides without adjacent repeats.

    Trit ``t`` selects the ``t``-th nucleotide (in A<T<C<G order) among the
    three that differ from the previously emitted one.
    """
    out = []
    for t in trits:
        choices = [n for n in NUCLEOTIDES if n != previous]
        previous = choices[t]
        out.append(previous)
    return "".join(out)


def build_huffman_goldman(freqs):
    """Build a Huffman/Goldman codebook for the nonzero-count symbols of ``freqs``.

    Symbols with a zero count get no codeword.
    """
    lengths = ternary_huffman_lengths(freqs)
    if max(lengths.values()) > MAX_CODEWORD_LENGTH:
        raise CodebookError(f"Huffman tree deeper than {MAX_CODEWORD_LENGTH}")
    trits = canonical_ternary_codes(lengths)
    return Codebook({sym: goldman_label(t) for sym, t in trits.items()})


def expected_length(cb, freqs):
    """Average codeword length in nucleotides per symbol, as a Fraction."""
    total = 0
    weighted = 0
    for sym, count in freqs.items():
        if count == 0:
            continue
        if sym not in cb:
            raise CoverageError(sym)
        total += count
        weighted += count * len(cb[sym])
    if total == 0:
        raise DegenerateSourceError("frequency table has no nonzero counts")
    return Fraction(weighted, total)


# -- file I/O -----------------------------------------------------------------

def parse_codebook(text):
    entries = {}
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise CodebookParseError(lineno, "expected '<symbol id><TAB><codeword>'")
        sym_text, word = fields[0].strip(), fields[1].strip()
        if not sym_text.isdigit():
            raise CodebookParseError(lineno, f"symbol id {sym_text!r} is not a decimal integer")
        sym = int(sym_text)
        if not word:
            raise CodebookParseError(lineno, "empty codeword")
        bad = sorted(set(word) - _NUCLEOTIDE_SET)
        if bad:
            raise CodebookParseError(lineno, f"non-nucleotide character(s) {''.join(bad)!r}")
        if len(word) > MAX_CODEWORD_LENGTH:
            raise CodebookParseError(lineno, f"codeword longer than {MAX_CODEWORD_LENGTH}")
        if sym in entries:
            raise CodebookParseError(lineno, f"duplicate symbol id {sym}")
        for other in entries.values():
            if word.startswith(other) or other.startswith(word):
                raise CodebookParseError(
                    lineno, f"codeword {word!r} conflicts with {other!r} (prefix violation)"
                )
        entries[sym] = word
    if not entries:
        raise CodebookParseError(0, "no codebook entries")
    return Codebook(entries)


def format_codebook(cb):
    return "".join(f"{sym}\t{word}\n" for sym, word in sorted(cb.items()))


def read_codebook(path):
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_codebook(fh.read())


def write_codebook(cb, path):
    cb = _as_codebook(cb)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_codebook(cb))


def read_frequencies(path):
    """Read ``<symbol id> <count>`` lines (tab or space separated, ``#`` comments)."""
    freqs = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2 or not all(f.isdigit() for f in fields):
                raise FormatError(f"{path}: line {lineno}: expected '<symbol id> <count>'")
            sym, count = int(fields[0]), int(fields[1])
            if sym in freqs:
                raise FormatError(f"{path}: line {lineno}: duplicate symbol id {sym}")
            freqs[sym] = count
    return freqs

"""Rotated codebooks and the deterministic code-choice schedulers.

Each rotation ``k`` shifts every nucleotide ``k`` places along the cyclic
order A -> T -> C -> G -> A. Codeword lengths are unchanged, so any
schedule of rotations costs exactly as many nucleotides as the original
code.
"""

import enum
from dataclasses import dataclass

from rotcode.codebook import NUCLEOTIDES, Codebook, _as_codebook

N_CODES = 4

MASK64 = (1 << 64) - 1
GOLDEN64 = 0x9E3779B97F4A7C15

_INDEX = {n: i for i, n in enumerate(NUCLEOTIDES)}
_SHIFT_TABLES = [
    str.maketrans(NUCLEOTIDES, NUCLEOTIDES[k:] + NUCLEOTIDES[:k]) for k in range(N_CODES)
]


def switch_letters(codeword, k):
    """Shift each nucleotide of ``codeword`` by ``k`` positions in A,T,C,G."""
    if k not in range(N_CODES):
        raise ValueError(f"rotation index must be in 0..3, got {k!r}")
    if not codeword or not set(codeword) <= _INDEX.keys():
        raise ValueError(f"not a nucleotide string: {codeword!r}")
    return codeword.translate(_SHIFT_TABLES[k])


def rotate_codebook(cb, k):
    return Codebook({sym: switch_letters(word, k) for sym, word in cb.items()})


@dataclass(frozen=True)
class RotationSet:
    """The input code and its three letter-rotated variants."""

    codes: tuple

    def __post_init__(self):
        if len(self.codes) != N_CODES:
            raise ValueError(f"a RotationSet holds exactly {N_CODES} codebooks")

    def __getitem__(self, k):
        return self.codes[k]

    @property
    def base(self):
        return self.codes[0]


def generate_codes(input_code):
    """Build the four codes: ``codes[0]`` is the input, ``codes[k]`` its k-shift."""
    base = _as_codebook(input_code)
    return RotationSet((base,) + tuple(rotate_codebook(base, k) for k in range(1, N_CODES)))


# -- scheduling ---------------------------------------------------------------

class Mode(enum.IntEnum):
    NONE = 0
    ROUND_ROBIN = 1
    PSEUDO_RANDOM = 2

    @classmethod
    def parse(cls, text):
        names = {
            "none": cls.NONE,
            "roundrobin": cls.ROUND_ROBIN,
            "round_robin": cls.ROUND_ROBIN,
            "random": cls.PSEUDO_RANDOM,
            "pseudo_random": cls.PSEUDO_RANDOM,
        }
        try:
            return names[text.lower()]
        except KeyError:
            raise ValueError(f"unknown schedule mode {text!r}") from None

    @property
    def cli_name(self):
        return ("none", "roundrobin", "random")[self]


def _nonzero(state):
    state &= MASK64
    return state if state else GOLDEN64


def xorshift64(x):
    x ^= (x << 13) & MASK64
    x ^= x >> 7
    x ^= (x << 17) & MASK64
    return x


def row_state(seed, row_index):
    """PRNG state at the start of block row ``row_index``."""
    return _nonzero(seed ^ ((row_index * GOLDEN64) & MASK64))


class Scheduler:
    """Chooses which of the four codes encodes each fragment.

    Encoder and decoder must build schedulers with the same mode and seed
    and issue the same ``reset_for_row`` calls; the sequence of
    ``next_code`` results is then identical on both sides.
    """

    def __init__(self, mode=Mode.NONE, seed=0):
        self.mode = Mode(mode)
        if not 0 <= seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.seed = seed
        self.counter = 0
        self.prng_state = _nonzero(seed)

    def __repr__(self):
        return (f"Scheduler(mode={self.mode.name}, seed={self.seed}, "
                f"counter={self.counter}, prng_state={self.prng_state:#x})")

    def next_code(self):
        if self.mode is Mode.ROUND_ROBIN:
            k = self.counter % N_CODES
            self.counter += 1
            return k
        if self.mode is Mode.PSEUDO_RANDOM:
            self.prng_state = xorshift64(self.prng_state)
            self.counter += 1
            return self.prng_state >> 62
        return 0

    def draws(self, n):
        """Return the next ``n`` code indices as a list."""
        if self.mode is Mode.PSEUDO_RANDOM:
            x = self.prng_state
            out = []
            append = out.append
            for _ in range(n):
                x ^= (x << 13) & MASK64
                x ^= x >> 7
                x ^= (x << 17) & MASK64
                append(x >> 62)
            self.prng_state = x
            self.counter += n
            return out
        return [self.next_code() for _ in range(n)]

    def reset_for_row(self, row_index):
        if self.mode is Mode.ROUND_ROBIN:
            self.counter = 0
        elif self.mode is Mode.PSEUDO_RANDOM:
            self.counter = 0
            self.prng_state = row_state(self.seed, row_index)
        return self

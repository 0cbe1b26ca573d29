"""Stream headers, serialized as nucleotides (2 bits each: A=00 T=01 C=10 G=11).

All integers are big-endian unsigned. Common prefix::

    magic        32  0x524F5443 ("ROTC")
    version       8  1
    kind          8  0 = image, 1 = symbol stream
    mode          8  0 = none, 1 = round robin, 2 = pseudo-random
    seed         64
    payload_len  32  payload nucleotides following the header

Image headers continue with::

    width 16, height 16, quality 8, n_blocks 32,
    dc histogram: n 16, then n x (symbol 16, count 32)
    ac histogram: n 16, then n x (symbol 16, count 32)

Symbol-stream headers continue with::

    fragment_len 32, n_symbols 32
"""

import struct
from dataclasses import dataclass, field

from rotcode.errors import FormatError
from rotcode.rotation import Mode

MAGIC = 0x524F5443
VERSION = 1
KIND_IMAGE = 0
KIND_STREAM = 1

_COMMON = struct.Struct(">IBBBQI")
_IMAGE = struct.Struct(">HHBI")
_STREAM = struct.Struct(">II")
_HIST_LEN = struct.Struct(">H")
_HIST_ENTRY = struct.Struct(">HI")

_BITS = {0: "A", 1: "T", 2: "C", 3: "G"}
_VALUES = {v: k for k, v in _BITS.items()}


def bytes_to_nucleotides(data):
    return "".join(
        _BITS[(b >> 6) & 3] + _BITS[(b >> 4) & 3] + _BITS[(b >> 2) & 3] + _BITS[b & 3]
        for b in data
    )


def nucleotides_to_bytes(ns):
    if len(ns) % 4:
        raise FormatError("nucleotide header length is not a multiple of 4")
    try:
        vals = [_VALUES[n] for n in ns]
    except KeyError as exc:
        raise FormatError(f"invalid nucleotide {exc.args[0]!r} in header") from None
    return bytes(
        (vals[i] << 6) | (vals[i + 1] << 4) | (vals[i + 2] << 2) | vals[i + 3]
        for i in range(0, len(vals), 4)
    )


@dataclass
class ImageHeader:
    width: int
    height: int
    quality: int
    mode: Mode
    seed: int
    n_blocks: int
    dc_hist: dict = field(default_factory=dict)
    ac_hist: dict = field(default_factory=dict)
    payload_len: int = 0

    kind = KIND_IMAGE


@dataclass
class StreamHeader:
    mode: Mode
    seed: int
    fragment_len: int
    n_symbols: int
    payload_len: int = 0

    kind = KIND_STREAM


def _pack_hist(hist):
    items = sorted((s, c) for s, c in hist.items() if c)
    return _HIST_LEN.pack(len(items)) + b"".join(_HIST_ENTRY.pack(s, c) for s, c in items)


def pack_header(h):
    """Serialize an :class:`ImageHeader` or :class:`StreamHeader` to bytes."""
    try:
        out = _COMMON.pack(MAGIC, VERSION, h.kind, int(h.mode), h.seed, h.payload_len)
        if h.kind == KIND_IMAGE:
            out += _IMAGE.pack(h.width, h.height, h.quality, h.n_blocks)
            out += _pack_hist(h.dc_hist) + _pack_hist(h.ac_hist)
        else:
            out += _STREAM.pack(h.fragment_len, h.n_symbols)
    except struct.error as exc:
        raise FormatError(f"header field out of range: {exc}") from None
    return out


def encode_header(h):
    return bytes_to_nucleotides(pack_header(h))


class _Reader:
    def __init__(self, data):
        self.data = data
        self.pos = 0

    def take(self, st):
        if self.pos + st.size > len(self.data):
            raise FormatError("header truncated")
        vals = st.unpack_from(self.data, self.pos)
        self.pos += st.size
        return vals

    def hist(self):
        (n,) = self.take(_HIST_LEN)
        hist = {}
        for _ in range(n):
            s, c = self.take(_HIST_ENTRY)
            hist[s] = c
        return hist


def unpack_header(data):
    """Parse header bytes; returns ``(header, bytes consumed)``."""
    r = _Reader(data)
    magic, version, kind, mode, seed, payload_len = r.take(_COMMON)
    if magic != MAGIC:
        raise FormatError(f"bad header magic {magic:#x}")
    if version != VERSION:
        raise FormatError(f"unsupported header version {version}")
    try:
        mode = Mode(mode)
    except ValueError:
        raise FormatError(f"unknown schedule mode {mode}") from None
    if kind == KIND_IMAGE:
        width, height, quality, n_blocks = r.take(_IMAGE)
        dc_hist = r.hist()
        ac_hist = r.hist()
        h = ImageHeader(width, height, quality, mode, seed, n_blocks, dc_hist, ac_hist, payload_len)
    elif kind == KIND_STREAM:
        fragment_len, n_symbols = r.take(_STREAM)
        h = StreamHeader(mode, seed, fragment_len, n_symbols, payload_len)
    else:
        raise FormatError(f"unknown stream kind {kind}")
    return h, r.pos


def decode_header(ns):
    h, used = unpack_header(nucleotides_to_bytes(ns))
    if used * 4 != len(ns):
        raise FormatError("trailing data after header")
    return h

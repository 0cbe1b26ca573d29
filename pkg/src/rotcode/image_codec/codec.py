"""Grayscale block image codec with a rotating run/category entropy coder.

Blocks are coded in raster order. Each block draws one code index from
the scheduler and uses that rotation for both its DC-category token and
its AC run/category tokens; the DC and AC token alphabets have separate
Huffman/Goldman tables, as in baseline JPEG. Coefficient values go
through the fixed-length value code, which is never rotated. At the start
of every block row the scheduler and the DC predictor are reset, so an
error cannot propagate past the end of its row.
"""

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from rotcode.codebook import build_huffman_goldman
from rotcode.entropy_stream import PrefixDecoder
from rotcode.errors import DecodeError
from rotcode.header import ImageHeader
from rotcode.image_codec.tokens import ac_token, block_to_symbols, dc_token, symbols_to_block
from rotcode.image_codec.transform import (
    BLOCK,
    coefficients_to_pixels,
    pixels_to_coefficients,
)
from rotcode.image_codec.value_code import build_value_code
from rotcode.rotation import N_CODES, Mode, Scheduler, generate_codes


@dataclass
class EncodedImage:
    header: ImageHeader
    payload: str
    block_codes: list  # code index used by each block, raster order
    block_offsets: list  # payload offset where each block starts
    segments: list = field(default_factory=list)  # (kind, word) when traced

    @property
    def n_nucleotides(self):
        return len(self.payload)


def _as_image(img):
    img = np.asarray(img)
    if img.ndim != 2:
        raise ValueError(f"expected a 2-D grayscale image, got shape {img.shape}")
    if img.dtype != np.uint8:
        if img.min() < 0 or img.max() > 255:
            raise ValueError("pixel values must lie in 0..255")
        img = img.astype(np.uint8)
    if img.shape[0] < 1 or img.shape[1] < 1:
        raise ValueError("empty image")
    return img


def tokenize(qcoefs):
    """Token lists for every block, raster order, DC predictor reset per row."""
    rows, cols = qcoefs.shape[:2]
    blocks = []
    for r in range(rows):
        prev_dc = 0
        for c in range(cols):
            pairs, prev_dc = block_to_symbols(qcoefs[r, c], prev_dc)
            blocks.append(pairs)
    return blocks


def _ensure_two_symbols(hist):
    """A Huffman table needs two symbols; pad with the smallest unused id."""
    hist = {s: c for s, c in hist.items() if c}
    sym = 0
    while len(hist) < 2:
        if sym not in hist:
            hist[sym] = 1
        sym += 1
    return hist


def token_histograms(blocks):
    dc, ac = Counter(), Counter()
    for pairs in blocks:
        dc[pairs[0][0].symbol] += 1
        for tok, _ in pairs[1:]:
            ac[tok.symbol] += 1
    return _ensure_two_symbols(dc), _ensure_two_symbols(ac)


def rotation_sets(dc_hist, ac_hist):
    return generate_codes(build_huffman_goldman(dc_hist)), generate_codes(build_huffman_goldman(ac_hist))


def block_schedule(mode, seed, rows, cols):
    """Code index for every block: one draw per block, reset at each row start."""
    st = Scheduler(mode, seed)
    codes = []
    for r in range(rows):
        st.reset_for_row(r)
        codes += [st.next_code() for _ in range(cols)]
    return codes


def encode_image(img, quality=50, mode=Mode.NONE, seed=0, trace=False):
    img = _as_image(img)
    h, w = img.shape
    qcoefs = pixels_to_coefficients(img, quality)
    rows, cols = qcoefs.shape[:2]
    blocks = tokenize(qcoefs)
    dc_hist, ac_hist = token_histograms(blocks)
    dc_rs, ac_rs = rotation_sets(dc_hist, ac_hist)
    dc_maps = [dict(c) for c in dc_rs.codes]
    ac_maps = [dict(c) for c in ac_rs.codes]
    vc = build_value_code()
    mode = Mode(mode)
    codes = block_schedule(mode, seed, rows, cols)

    out = []
    segments = []
    offsets = []
    pos = 0
    for pairs, k in zip(blocks, codes):
        offsets.append(pos)
        dc_tok, diff = pairs[0]
        words = [("dc", dc_maps[k][dc_tok.symbol])]
        if dc_tok.category:
            words.append(("value", vc.encode(dc_tok.category, diff)))
        for tok, v in pairs[1:]:
            words.append(("ac", ac_maps[k][tok.symbol]))
            if tok.has_value:
                words.append(("value", vc.encode(tok.category, v)))
        out += [wd for _, wd in words]
        pos += sum(len(wd) for _, wd in words)
        if trace:
            segments += words
    payload = "".join(out)
    header = ImageHeader(
        width=w, height=h, quality=quality, mode=mode, seed=seed,
        n_blocks=rows * cols, dc_hist=dc_hist, ac_hist=ac_hist, payload_len=len(payload),
    )
    return EncodedImage(header, payload, codes, offsets, segments)


def _read_value(payload, pos, cat, vc):
    length = vc.length(cat)
    word = payload[pos:pos + length]
    if len(word) < length:
        raise DecodeError("stream ended inside a value", offset=len(payload))
    value = vc.decode(cat, word)
    if value is None:
        raise DecodeError(f"invalid category-{cat} value word {word!r}", offset=pos)
    return value, pos + length


def _read_block(payload, pos, dc_dec, ac_dec, vc):
    sym, pos = dc_dec.read(payload, pos)
    tok = dc_token(sym)
    diff = 0
    if tok.category:
        diff, pos = _read_value(payload, pos, tok.category, vc)
    pairs = [(tok, diff)]
    filled = 1
    while filled < 64:
        start = pos
        sym, pos = ac_dec.read(payload, pos)
        tok = ac_token(sym)
        if tok.flavor == "EOB":
            pairs.append((tok, None))
            break
        if tok.flavor == "ZRL":
            filled += 16
            if filled > 63:
                raise DecodeError("zero run past end of block", offset=start)
            pairs.append((tok, None))
            continue
        filled += tok.run
        if filled > 63:
            raise DecodeError("coefficient run past end of block", offset=start)
        v, pos = _read_value(payload, pos, tok.category, vc)
        pairs.append((tok, v))
        filled += 1
    return pairs, pos


def decode_image(payload, header):
    """Rebuild the image; raises :class:`DecodeError` carrying block coordinates.

    On error the exception's ``partial`` attribute holds the image decoded
    so far, with undecoded blocks left at mid-gray.
    """
    cols = -(-header.width // BLOCK)
    rows = -(-header.height // BLOCK)
    if rows * cols != header.n_blocks:
        raise DecodeError(f"header block count {header.n_blocks} does not match {rows}x{cols}")
    dc_rs, ac_rs = rotation_sets(header.dc_hist, header.ac_hist)
    dc_dec = [PrefixDecoder(dc_rs.codes[k]) for k in range(N_CODES)]
    ac_dec = [PrefixDecoder(ac_rs.codes[k]) for k in range(N_CODES)]
    vc = build_value_code()
    st = Scheduler(header.mode, header.seed)
    qcoefs = np.zeros((rows, cols, BLOCK, BLOCK), dtype=np.int64)

    def fail(message, offset, r, c):
        err = DecodeError(message, offset=offset, block_row=r, block_col=c)
        err.partial = coefficients_to_pixels(qcoefs, header.quality, (header.height, header.width))
        return err

    pos = 0
    for r in range(rows):
        st.reset_for_row(r)
        prev_dc = 0
        for c in range(cols):
            k = st.next_code()
            try:
                pairs, pos = _read_block(payload, pos, dc_dec[k], ac_dec[k], vc)
                block, dc = symbols_to_block(pairs, prev_dc)
            except DecodeError as exc:
                raise fail(exc.reason, exc.offset, r, c) from None
            qcoefs[r, c] = block
            prev_dc = dc
    if pos != len(payload):
        raise fail(f"{len(payload) - pos} trailing nucleotides", pos, rows - 1, cols - 1)
    if header.payload_len != len(payload):
        raise fail(
            f"payload length {len(payload)} differs from header ({header.payload_len})",
            len(payload), rows - 1, cols - 1,
        )
    return coefficients_to_pixels(qcoefs, header.quality, (header.height, header.width))


def psnr(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    mse = np.mean((a - b) ** 2)
    if mse == 0:
        return math.inf
    return 10 * math.log10(255.0 ** 2 / mse)


def nt_per_pixel(n_nucleotides, shape):
    return n_nucleotides / (shape[0] * shape[1])

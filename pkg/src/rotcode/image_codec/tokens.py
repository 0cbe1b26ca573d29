"""Run/category tokenization of quantized 8x8 coefficient blocks."""

from typing import NamedTuple

import numpy as np

MAX_CATEGORY = 11
MAX_RUN = 15


def _zigzag_order(n=8):
    return sorted(
        ((r, c) for r in range(n) for c in range(n)),
        key=lambda rc: (rc[0] + rc[1], rc[0] if (rc[0] + rc[1]) % 2 else rc[1]),
    )


ZIGZAG = _zigzag_order()
ZIGZAG_FLAT = np.array([r * 8 + c for r, c in ZIGZAG])


class Token(NamedTuple):
    flavor: str  # "DC", "AC", "EOB", "ZRL"
    run: int
    category: int

    @property
    def symbol(self):
        """Symbol id: the category for DC tokens, ``run * 16 + category`` otherwise."""
        if self.flavor == "DC":
            return self.category
        return self.run * 16 + self.category

    @property
    def has_value(self):
        return self.category > 0


EOB = Token("EOB", 0, 0)
ZRL = Token("ZRL", 15, 0)


def dc_token(symbol):
    return Token("DC", 0, symbol)


def ac_token(symbol):
    run, cat = divmod(symbol, 16)
    if symbol == 0:
        return EOB
    if symbol == 0xF0:
        return ZRL
    return Token("AC", run, cat)


def category(v):
    """JPEG magnitude category: smallest c with |v| < 2**c."""
    v = abs(int(v))
    if v >= 1 << MAX_CATEGORY:
        raise OverflowError(f"|{v}| does not fit in category {MAX_CATEGORY}")
    return v.bit_length()


def block_to_symbols(block, prev_dc):
    """Tokenize a quantized block; returns ``([(token, value), ...], dc)``.

    ``value`` is None for tokens carrying no value (EOB, ZRL, DC category 0
    has value 0).
    """
    flat = np.asarray(block, dtype=np.int64).reshape(64)[ZIGZAG_FLAT]
    dc = int(flat[0])
    diff = dc - prev_dc
    out = [(Token("DC", 0, category(diff)), diff)]
    run = 0
    last_nonzero = max((i for i in range(1, 64) if flat[i]), default=0)
    for i in range(1, last_nonzero + 1):
        v = int(flat[i])
        if v == 0:
            run += 1
            continue
        while run > MAX_RUN:
            out.append((ZRL, None))
            run -= 16
        out.append((Token("AC", run, category(v)), v))
        run = 0
    if last_nonzero < 63:
        out.append((EOB, None))
    return out, dc


def symbols_to_block(pairs, prev_dc):
    """Inverse of :func:`block_to_symbols`; returns ``(block, dc)``."""
    flat = np.zeros(64, dtype=np.int64)
    it = iter(pairs)
    tok, diff = next(it)
    if tok.flavor != "DC":
        raise ValueError("block must start with a DC token")
    dc = prev_dc + diff
    flat[0] = dc
    pos = 1
    for tok, v in it:
        if tok.flavor == "EOB":
            break
        if tok.flavor == "ZRL":
            pos += 16
            continue
        pos += tok.run
        if pos > 63:
            raise ValueError("run past end of block")
        flat[pos] = v
        pos += 1
    block = np.zeros(64, dtype=np.int64)
    block[ZIGZAG_FLAT] = flat
    return block.reshape(8, 8), dc

"""Encoding and decoding symbol sequences with a rotating set of codes."""

from rotcode.errors import CoverageError, DecodeError
from rotcode.rotation import N_CODES, RotationSet, generate_codes


class PrefixDecoder:
    """Greedy prefix-code reader for one codebook.

    ``_nodes`` maps every proper prefix of a codeword to None and every
    complete codeword to its symbol, which is all a walk needs to detect
    both a match and the earliest impossible nucleotide.
    """

    def __init__(self, codebook):
        self.codebook = codebook
        nodes = {}
        for sym, word in codebook.items():
            for i in range(1, len(word)):
                nodes.setdefault(word[:i], None)
            nodes[word] = sym
        self._nodes = nodes

    def read(self, stream, pos):
        """Decode one symbol starting at ``pos``; return ``(symbol, new_pos)``."""
        nodes = self._nodes
        end = len(stream)
        i = pos
        while i < end:
            i += 1
            prefix = stream[pos:i]
            if prefix not in nodes:
                raise DecodeError("no codeword matches", offset=i - 1)
            sym = nodes[prefix]
            if sym is not None:
                return sym, i
        raise DecodeError("stream ended inside a codeword", offset=end)


def _as_rotation_set(rs):
    return rs if isinstance(rs, RotationSet) else generate_codes(rs)


def encode_stream(src, rs, st, fragment_len=6):
    """Encode ``src`` switching code every ``fragment_len`` symbols.

    The scheduler ``st`` is advanced in place: one draw at stream start
    and one after each completed fragment.
    """
    if fragment_len < 1:
        raise ValueError("fragment_len must be positive")
    rs = _as_rotation_set(rs)
    codes = [dict(c) for c in rs.codes]
    out = []
    k = 0
    for i, sym in enumerate(src):
        if i % fragment_len == 0:
            k = st.next_code()
        try:
            out.append(codes[k][sym])
        except KeyError:
            raise CoverageError(sym, position=i) from None
    return "".join(out)


def decode_stream(ns, rs, st, fragment_len, n_symbols):
    """Inverse of :func:`encode_stream`.

    ``st`` must be in the same state the encoder's scheduler was in
    before encoding. Raises :class:`DecodeError` on a corrupt, truncated
    or over-long stream.
    """
    if fragment_len < 1:
        raise ValueError("fragment_len must be positive")
    rs = _as_rotation_set(rs)
    decoders = [PrefixDecoder(rs.codes[k]) for k in range(N_CODES)]
    out = []
    pos = 0
    k = 0
    for i in range(n_symbols):
        if i % fragment_len == 0:
            k = st.next_code()
        sym, pos = decoders[k].read(ns, pos)
        out.append(sym)
    if pos != len(ns):
        raise DecodeError(f"{len(ns) - pos} trailing nucleotides after last symbol", offset=pos)
    return out

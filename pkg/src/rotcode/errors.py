"""Exception hierarchy shared by all rotcode modules."""


class RotcodeError(Exception):
    """Base class for every error raised by this package."""


class CodebookError(RotcodeError, ValueError):
    """Invalid codebook contents (empty, not prefix-free, bad letters...)."""


class CodebookParseError(CodebookError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class DegenerateSourceError(RotcodeError, ValueError):
    """Fewer than two symbols with a nonzero count."""


class CoverageError(RotcodeError, KeyError):
    """A symbol has no codeword in the active codebook."""

    def __init__(self, symbol, position=None):
        self.symbol = symbol
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"symbol {symbol!r} has no codeword{where}")

    def __str__(self):
        # KeyError quotes its argument; keep the message readable
        return self.args[0]


class DecodeError(RotcodeError, ValueError):
    """Corrupt or truncated nucleotide stream.

    ``offset`` is the earliest failing nucleotide offset in the payload.
    Image decoding also sets ``block_row``/``block_col``.
    """

    def __init__(self, message, offset=None, block_row=None, block_col=None):
        self.reason = message
        self.offset = offset
        self.block_row = block_row
        self.block_col = block_col
        parts = [message]
        if block_row is not None:
            parts.append(f"block (row={block_row}, col={block_col})")
        if offset is not None:
            parts.append(f"nucleotide offset {offset}")
        super().__init__(", ".join(parts))


class FormatError(RotcodeError, ValueError):
    """Malformed FASTA, PGM, header or symbol file."""

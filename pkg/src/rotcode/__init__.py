"""Rotating codebook labeling for quaternary entropy coders (DNA data storage)."""

from rotcode.codebook import (
    NUCLEOTIDES,
    Codebook,
    build_huffman_goldman,
    expected_length,
    read_codebook,
    validate_prefix_free,
    write_codebook,
)
from rotcode.errors import (
    CodebookError,
    CodebookParseError,
    CoverageError,
    DecodeError,
    DegenerateSourceError,
    RotcodeError,
)
from rotcode.rotation import (
    Mode,
    RotationSet,
    Scheduler,
    generate_codes,
    switch_letters,
)
from rotcode.entropy_stream import decode_stream, encode_stream

__version__ = "0.1.0"

__all__ = [
    "NUCLEOTIDES",
    "Codebook",
    "CodebookError",
    "CodebookParseError",
    "CoverageError",
    "DecodeError",
    "DegenerateSourceError",
    "Mode",
    "RotationSet",
    "RotcodeError",
    "Scheduler",
    "build_huffman_goldman",
    "decode_stream",
    "encode_stream",
    "expected_length",
    "generate_codes",
    "read_codebook",
    "switch_letters",
    "validate_prefix_free",
    "write_codebook",
]

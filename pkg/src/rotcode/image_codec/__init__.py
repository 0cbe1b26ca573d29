from rotcode.image_codec.codec import (
    EncodedImage,
    block_schedule,
    decode_image,
    encode_image,
    nt_per_pixel,
    psnr,
    tokenize,
)
from rotcode.image_codec.pgm import read_pgm, write_pgm
from rotcode.image_codec.tokens import EOB, ZRL, Token, block_to_symbols, category, symbols_to_block
from rotcode.image_codec.transform import (
    dct8_forward,
    dct8_inverse,
    dequantize,
    quant_table,
    quantize,
    reconstruct,
)
from rotcode.image_codec.value_code import build_value_code

__all__ = [
    "EOB",
    "ZRL",
    "EncodedImage",
    "Token",
    "block_schedule",
    "block_to_symbols",
    "build_value_code",
    "category",
    "dct8_forward",
    "dct8_inverse",
    "decode_image",
    "dequantize",
    "encode_image",
    "nt_per_pixel",
    "psnr",
    "quant_table",
    "quantize",
    "read_pgm",
    "reconstruct",
    "symbols_to_block",
    "tokenize",
    "write_pgm",
]

"""8x8 orthonormal DCT, JPEG quantization and block tiling."""

import numpy as np

BLOCK = 8

# ITU-T T.81 Annex K, Table K.1 (luminance)
LUMA_TABLE = np.array([
    [16, 11, 10, 16, 24, 40, 51, 61],
    [12, 12, 14, 19, 26, 58, 60, 55],
    [14, 13, 16, 24, 40, 57, 69, 56],
    [14, 17, 22, 29, 51, 87, 80, 62],
    [18, 22, 37, 56, 68, 109, 103, 77],
    [24, 35, 55, 64, 81, 104, 113, 92],
    [49, 64, 78, 87, 103, 121, 120, 101],
    [72, 92, 95, 98, 112, 100, 103, 99],
], dtype=np.int64)


def _dct_matrix(n=BLOCK):
    k = np.arange(n)[:, None]
    x = np.arange(n)[None, :]
    m = np.cos(np.pi * (2 * x + 1) * k / (2 * n)) * np.sqrt(2.0 / n)
    m[0, :] = np.sqrt(1.0 / n)
    return m


DCT = _dct_matrix()


def dct8_forward(block):
    """Orthonormal type-II 2-D DCT of an 8x8 block (any numeric dtype)."""
    b = np.asarray(block, dtype=np.float64)
    return DCT @ b @ DCT.T


def dct8_inverse(coefs):
    c = np.asarray(coefs, dtype=np.float64)
    return DCT.T @ c @ DCT


def round_half_away(x):
    x = np.asarray(x, dtype=np.float64)
    return (np.sign(x) * np.floor(np.abs(x) + 0.5)).astype(np.int64)


def quant_table(quality, base=LUMA_TABLE):
    """Annex K table scaled by the libjpeg quality convention."""
    if not 1 <= quality <= 100:
        raise ValueError(f"quality must be in 1..100, got {quality}")
    scale = 5000 // quality if quality < 50 else 200 - 2 * quality
    # integer form of round(base * scale / 100), halves rounded up
    table = (base * scale + 50) // 100
    return np.maximum(table, 1)


def quantize(coefs, table):
    return round_half_away(np.asarray(coefs, dtype=np.float64) / table)


def dequantize(q, table):
    return np.asarray(q, dtype=np.int64) * table


def pad_to_blocks(img):
    """Edge-replicate a 2-D image to multiples of 8 in both dimensions."""
    img = np.asarray(img)
    h, w = img.shape
    ph, pw = -h % BLOCK, -w % BLOCK
    if ph or pw:
        img = np.pad(img, ((0, ph), (0, pw)), mode="edge")
    return img


def pixels_to_coefficients(img, quality):
    """Quantized DCT coefficients of every block, shape (rows, cols, 8, 8)."""
    padded = pad_to_blocks(img).astype(np.float64) - 128.0
    h, w = padded.shape
    tiles = padded.reshape(h // BLOCK, BLOCK, w // BLOCK, BLOCK).swapaxes(1, 2)
    coefs = np.einsum("ij,rcjk,lk->rcil", DCT, tiles, DCT)
    return quantize(coefs, quant_table(quality))


def coefficients_to_pixels(qcoefs, quality, shape):
    """Dequantize, inverse-transform and crop back to ``shape`` as uint8."""
    deq = dequantize(qcoefs, quant_table(quality)).astype(np.float64)
    tiles = np.einsum("ji,rcjk,kl->rcil", DCT, deq, DCT)
    rows, cols = qcoefs.shape[:2]
    img = tiles.swapaxes(1, 2).reshape(rows * BLOCK, cols * BLOCK) + 128.0
    img = np.clip(round_half_away(img), 0, 255).astype(np.uint8)
    h, w = shape
    return img[:h, :w]


def reconstruct(img, quality):
    """What a lossless entropy stage must reproduce: quantize, then invert."""
    img = np.asarray(img)
    return coefficients_to_pixels(pixels_to_coefficients(img, quality), quality, img.shape)

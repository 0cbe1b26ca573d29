"""Deterministic synthetic grayscale test images."""

import numpy as np


def gradient(height=64, width=64):
    """Diagonal ramp from 0 to 255."""
    y, x = np.mgrid[0:height, 0:width]
    ramp = (x + y) / max(height + width - 2, 1)
    return np.round(ramp * 255).astype(np.uint8)


def noise(height=64, width=64, seed=0):
    return np.random.default_rng(seed).integers(0, 256, size=(height, width), dtype=np.uint8)


def low_entropy(height=512, width=512, seed=0):
    """Mostly flat scene: uniform background, a few soft-edged discs and bars.

    Large flat areas make the DC-difference and end-of-block tokens dominate
    the token statistics, the regime where an unrotated coder repeats the
    same short codewords block after block.
    """
    rng = np.random.default_rng(seed)
    img = np.full((height, width), 96.0)
    y, x = np.mgrid[0:height, 0:width]
    for _ in range(6):
        cy, cx = rng.uniform(0, height), rng.uniform(0, width)
        radius = rng.uniform(0.05, 0.15) * min(height, width)
        level = rng.uniform(20, 235)
        d = np.hypot(y - cy, x - cx)
        img = np.where(d < radius, level, img)
    for _ in range(3):
        r0 = int(rng.integers(0, height - 16))
        img[r0:r0 + 16, :] = rng.uniform(40, 200)
    return np.clip(np.round(img), 0, 255).astype(np.uint8)

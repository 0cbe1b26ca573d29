"""8-bit binary PGM (P5) input and output."""

import numpy as np
from PIL import Image, UnidentifiedImageError

from rotcode.errors import FormatError


def read_pgm(path):
    try:
        with Image.open(path) as im:
            if im.format != "PPM" or im.mode != "L":
                raise FormatError(f"{path}: not an 8-bit grayscale PGM (format={im.format}, mode={im.mode})")
            return np.array(im, dtype=np.uint8)
    except UnidentifiedImageError:
        raise FormatError(f"{path}: not a PGM image") from None


def write_pgm(img, path):
    Image.fromarray(np.asarray(img, dtype=np.uint8), mode="L").save(path, format="PPM")

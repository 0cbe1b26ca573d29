"""Fixed-length constrained code for coefficient values.

Each magnitude category gets words of one length, enumerated in
lexicographic A<T<C<G order with no two adjacent letters equal. This code
is never rotated: its words were chosen for their constraint properties.
"""

from functools import lru_cache

from rotcode.codebook import NUCLEOTIDES
from rotcode.image_codec.tokens import MAX_CATEGORY


def word_length(cat):
    """Shortest L with 4 * 3**(L-1) >= 2**cat."""
    length = 1
    while 4 * 3 ** (length - 1) < 2 ** cat:
        length += 1
    return length


def category_values(cat):
    """JPEG value order for a category: negatives ascending, then positives."""
    lo, hi = 1 << (cat - 1), 1 << cat
    return list(range(-(hi - 1), -lo + 1)) + list(range(lo, hi))


def no_repeat_words(length, count):
    """First ``count`` words of ``length`` without adjacent repeats, lexicographically."""
    out = []

    def extend(prefix):
        if len(out) == count:
            return
        if len(prefix) == length:
            out.append(prefix)
            return
        for n in NUCLEOTIDES:
            if not prefix or prefix[-1] != n:
                extend(prefix + n)

    extend("")
    return out


class ValueCode:
    def __init__(self):
        self.words = {}
        self.encode_map = {}
        self.decode_map = {}
        for cat in range(1, MAX_CATEGORY + 1):
            values = category_values(cat)
            words = no_repeat_words(word_length(cat), len(values))
            self.words[cat] = words
            self.encode_map[cat] = dict(zip(values, words))
            self.decode_map[cat] = dict(zip(words, values))

    def length(self, cat):
        return len(self.words[cat][0]) if cat else 0

    def encode(self, cat, value):
        return self.encode_map[cat][value] if cat else ""

    def decode(self, cat, word):
        """Value for ``word`` in ``cat``, or None if the word is not in the code."""
        return self.decode_map[cat].get(word)


@lru_cache(maxsize=None)
def build_value_code():
    return ValueCode()

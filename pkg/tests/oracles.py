"""Independent reference computations used to derive expected test values.

Nothing here imports the code under test.
"""

import itertools
from fractions import Fraction

import numpy as np


def brute_force_ternary_min_length(weights):
    """Minimum expected length over all ternary prefix-free length assignments.

    A length vector is realizable by a ternary prefix code iff it satisfies
    Kraft (sum 3**-l <= 1); in an optimal assignment heavier symbols never
    get longer words, so nondecreasing lengths against weights sorted in
    decreasing order cover every candidate optimum.
    """
    w = sorted((x for x in weights if x > 0), reverse=True)
    n = len(w)
    best = None
    for lengths in itertools.combinations_with_replacement(range(1, n + 1), n):
        if sum(Fraction(1, 3 ** l) for l in lengths) > 1:
            continue
        cost = Fraction(sum(a * l for a, l in zip(w, lengths)), sum(w))
        if best is None or cost < best:
            best = cost
    return best


def xorshift64_codes(seed, n):
    """Code indices from a numpy uint64 reimplementation of the PRNG."""
    x = np.uint64(seed if seed else 0x9E3779B97F4A7C15)
    out = []
    with np.errstate(over="ignore"):
        for _ in range(n):
            x ^= x << np.uint64(13)
            x ^= x >> np.uint64(7)
            x ^= x << np.uint64(17)
            out.append(int(x >> np.uint64(62)))
    return out


def naive_dct2(block):
    """Direct double-sum orthonormal DCT-II, O(n^4)."""
    n = 8
    out = np.zeros((n, n))
    for u in range(n):
        for v in range(n):
            cu = np.sqrt(1 / n) if u == 0 else np.sqrt(2 / n)
            cv = np.sqrt(1 / n) if v == 0 else np.sqrt(2 / n)
            s = 0.0
            for x in range(n):
                for y in range(n):
                    s += block[x][y] * np.cos((2 * x + 1) * u * np.pi / 16) * np.cos((2 * y + 1) * v * np.pi / 16)
            out[u, v] = cu * cv * s
    return out


def trace_encode(symbols, codebook, codes_per_fragment, fragment_len):
    """Hand-rolled encoder: shift letters by the fragment's code index."""
    order = "ATCG"
    out = []
    for i, s in enumerate(symbols):
        k = codes_per_fragment[i // fragment_len]
        out.append("".join(order[(order.index(ch) + k) % 4] for ch in codebook[s]))
    return "".join(out)

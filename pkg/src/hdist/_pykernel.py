"""Pure-Python kernels. ``_ckernel.pyx`` mirrors this module function for function."""

from functools import lru_cache

NAME = "python"


def binom_mod2(m, r):
    # Lucas: C(m, r) is odd iff the bits of r are a subset of the bits of m.
    if r < 0 or m < 0 or r > m:
        return 0
    return 1 if (m & r) == r else 0


@lru_cache(maxsize=None)
def adem_terms(a, b):
    """Monomials of the Adem expansion of Sq^a Sq^b, for 0 < a < 2b."""
    if a <= 0 or b <= 0 or a >= 2 * b:
        raise ValueError(f"Sq^{a} Sq^{b} is not an inadmissible pair")
    out = []
    for c in range(a // 2 + 1):
        if binom_mod2(b - c - 1, a - 2 * c):
            out.append((a + b - c, c) if c else (a + b,))
    return tuple(out)


def _find_pair(word, leftmost):
    idx = range(len(word) - 1) if leftmost else range(len(word) - 2, -1, -1)
    for i in idx:
        if word[i] < 2 * word[i + 1]:
            return i
    return -1


@lru_cache(maxsize=None)
def _normal(word, leftmost):
    i = _find_pair(word, leftmost)
    if i < 0:
        return frozenset((word,))
    head, tail = word[:i], word[i + 2:]
    acc = set()
    for mid in adem_terms(word[i], word[i + 1]):
        acc ^= _normal(head + mid + tail, leftmost)
    return frozenset(acc)


def normalize_word(word, leftmost=True):
    return _normal(tuple(e for e in word if e), bool(leftmost))


def normalize_words(words, leftmost=True):
    acc = set()
    for w in words:
        acc ^= normalize_word(w, leftmost)
    return frozenset(acc)


def face_blocks(entries):
    """Interval partition of {0..n} for a code given as ints (0, 1, 2 = free).

    Returns J-blocks, each a tuple of (lo, hi) K-blocks.
    """
    n = len(entries)
    blocks = []
    ks = []
    lo = 0
    for i in range(1, n + 1):
        v = entries[i - 1]
        if v == 0:
            continue
        ks.append((lo, i - 1))
        lo = i
        if v == 1:
            blocks.append(tuple(ks))
            ks = []
    ks.append((lo, n))
    blocks.append(tuple(ks))
    return tuple(blocks)


def clear_caches():
    _normal.cache_clear()

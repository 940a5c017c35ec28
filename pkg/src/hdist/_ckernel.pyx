# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same surface as ``_pykernel``."""

NAME = "cython"

cdef dict _adem_cache = {}
cdef dict _left_cache = {}
cdef dict _right_cache = {}


cpdef int binom_mod2(long m, long r):
    if r < 0 or m < 0 or r > m:
        return 0
    return 1 if (m & r) == r else 0


cpdef tuple adem_terms(long a, long b):
    cdef long c
    key = (a, b)
    hit = _adem_cache.get(key)
    if hit is not None:
        return <tuple>hit
    if a <= 0 or b <= 0 or a >= 2 * b:
        raise ValueError(f"Sq^{a} Sq^{b} is not an inadmissible pair")
    out = []
    for c in range(a // 2 + 1):
        if binom_mod2(b - c - 1, a - 2 * c):
            if c:
                out.append((a + b - c, c))
            else:
                out.append((a + b,))
    res = tuple(out)
    _adem_cache[key] = res
    return res


cdef Py_ssize_t _find_pair(tuple word, bint leftmost):
    cdef Py_ssize_t i, n = len(word)
    cdef long x, y
    if leftmost:
        for i in range(n - 1):
            x = word[i]
            y = word[i + 1]
            if x < 2 * y:
                return i
    else:
        i = n - 2
        while i >= 0:
            x = word[i]
            y = word[i + 1]
            if x < 2 * y:
                return i
            i -= 1
    return -1


cdef frozenset _normal(tuple word, bint leftmost):
    cdef dict cache = _left_cache if leftmost else _right_cache
    hit = cache.get(word)
    if hit is not None:
        return <frozenset>hit
    cdef Py_ssize_t i = _find_pair(word, leftmost)
    cdef set acc
    cdef tuple head, tail, mid
    if i < 0:
        res = frozenset((word,))
    else:
        head = word[:i]
        tail = word[i + 2:]
        acc = set()
        for mid in adem_terms(word[i], word[i + 1]):
            acc ^= _normal(head + mid + tail, leftmost)
        res = frozenset(acc)
    cache[word] = res
    return res


def normalize_word(word, leftmost=True):
    return _normal(tuple([e for e in word if e]), bool(leftmost))


def normalize_words(words, leftmost=True):
    cdef set acc = set()
    cdef bint lm = bool(leftmost)
    for w in words:
        acc ^= _normal(tuple([e for e in w if e]), lm)
    return frozenset(acc)


def face_blocks(entries):
    cdef Py_ssize_t n = len(entries)
    cdef Py_ssize_t i, lo = 0
    cdef int v
    cdef list blocks = []
    cdef list ks = []
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
    _left_cache.clear()
    _right_cache.clear()

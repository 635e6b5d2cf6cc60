# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same signatures and results as ``_pure.py``.

The DP keeps per-state counts in unsigned 128-bit integers, which is exact
while ``n_max <= MAX_DP_N`` (34! < 2**128); the Python side routes larger
tables to the big-integer fallback.
"""

from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    """
    typedef unsigned __int128 cp_u128;
    static PyObject *cp_u128_to_py(cp_u128 x) {
        PyObject *hi = PyLong_FromUnsignedLongLong((unsigned long long)(x >> 64));
        PyObject *lo = PyLong_FromUnsignedLongLong((unsigned long long)x);
        PyObject *sh = PyLong_FromLong(64);
        PyObject *t = PyNumber_Lshift(hi, sh);
        PyObject *r = PyNumber_Or(t, lo);
        Py_DECREF(hi); Py_DECREF(lo); Py_DECREF(sh); Py_DECREF(t);
        return r;
    }
    """
    ctypedef unsigned long long u128 "cp_u128"
    object u128_to_py "cp_u128_to_py"(u128 x)

NAME = "cython"
MAX_DP_N = 34
MAX_M = 16
MAX_BRUTE_N = 13


cdef inline void decode(long long idx, int length, int q, int *a) noexcept:
    # mixed radix, most significant digit first: radices length, length-1, ...
    cdef int codes[16]
    cdef int used[64]
    cdef int j, t, c
    for j in range(q - 1, -1, -1):
        codes[j] = <int>(idx % (length - j))
        idx //= (length - j)
    for t in range(length):
        used[t] = 0
    for j in range(q):
        c = codes[j]
        t = 0
        while True:
            if not used[t]:
                if c == 0:
                    break
                c -= 1
            t += 1
        used[t] = 1
        a[j] = t


cdef inline long long encode(int *a, int length, int q) noexcept:
    cdef long long idx = 0
    cdef int j, i, c
    for j in range(q):
        c = a[j]
        for i in range(j):
            if a[i] < a[j]:
                c -= 1
        idx = idx * (length - j) + c
    return idx


cdef inline bint same_order(int *a, int *b, int q) noexcept:
    cdef int i, j
    for i in range(q):
        for j in range(i + 1, q):
            if (a[i] < a[j]) != (b[i] < b[j]):
                return False
    return True


cdef long long falling(int length, int q):
    cdef long long r = 1
    cdef int j
    for j in range(q):
        r *= length - j
    return r


def dp_counts(sigma, int n_max):
    """Exact avoider counts for lengths ``0..n_max`` (see ``_pure.dp_counts``)."""
    cdef int m = len(sigma)
    cdef int q = m - 1
    cdef int length, r, j, gap, below
    cdef long long idx, size, nsize, nidx
    cdef int a[16]
    cdef int b[16]
    cdef int head[16]
    cdef u128 *cur
    cdef u128 *nxt
    cdef u128 c, total
    cdef bint kill
    if m > MAX_M:
        raise ValueError(f"pattern length {m} exceeds kernel limit {MAX_M}")
    if n_max > MAX_DP_N:
        raise ValueError(f"n_max {n_max} exceeds exact 128-bit limit {MAX_DP_N}")
    if q == 0:
        return [1] + [0] * n_max
    counts = []
    f = 1
    for length in range(min(n_max, q) + 1):
        if length > 0:
            f *= length
        counts.append(f)
    if n_max <= q:
        return counts
    for j in range(q):
        head[j] = sigma[j]
    gap = sigma[q] - 1

    size = falling(q, q)
    cur = <u128 *>malloc(size * sizeof(u128))
    if cur == NULL:
        raise MemoryError()
    for idx in range(size):
        cur[idx] = 1
    try:
        for length in range(q, n_max):
            nsize = falling(length + 1, q)
            nxt = <u128 *>calloc(nsize, sizeof(u128))
            if nxt == NULL:
                raise MemoryError()
            total = 0
            for idx in range(size):
                c = cur[idx]
                if c == 0:
                    continue
                decode(idx, length, q, a)
                kill = same_order(a, head, q)
                for r in range(length + 1):
                    if kill:
                        below = 0
                        for j in range(q):
                            if a[j] < r:
                                below += 1
                        if below == gap:
                            continue
                    for j in range(1, q):
                        b[j - 1] = a[j] + 1 if a[j] >= r else a[j]
                    b[q - 1] = r
                    nidx = encode(b, length + 1, q)
                    nxt[nidx] += c
                    total += c
            free(cur)
            cur = nxt
            size = nsize
            counts.append(u128_to_py(total))
    finally:
        free(cur)
    return counts


cdef inline bint _scan(int *p, int n, int *inv, int m) noexcept:
    cdef int i, t, prev, v
    for i in range(n - m + 1):
        prev = p[i + inv[0]]
        for t in range(1, m):
            v = p[i + inv[t]]
            if v < prev:
                break
            prev = v
        else:
            return True
    return False


def has_occurrence(perm, sigma):
    """True if some window of ``perm`` is order-isomorphic to ``sigma``."""
    cdef int m = len(sigma)
    cdef int n = len(perm)
    cdef int inv[16]
    cdef int *p
    cdef int i
    if m > MAX_M:
        raise ValueError(f"pattern length {m} exceeds kernel limit {MAX_M}")
    if n < m:
        return False
    for i in range(m):
        inv[<int>sigma[i] - 1] = i
    p = <int *>malloc(n * sizeof(int))
    if p == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            p[i] = perm[i]
        return _scan(p, n, inv, m)
    finally:
        free(p)


def brute_count(sigma, int n):
    """Number of permutations of length ``n`` avoiding ``sigma``, by enumeration."""
    cdef int m = len(sigma)
    cdef int inv[16]
    cdef int p[16]
    cdef int i, j, t
    cdef long long count = 0
    if m > MAX_M:
        raise ValueError(f"pattern length {m} exceeds kernel limit {MAX_M}")
    if n > MAX_BRUTE_N:
        raise ValueError(f"n {n} exceeds brute-force kernel limit {MAX_BRUTE_N}")
    for i in range(m):
        inv[<int>sigma[i] - 1] = i
    for i in range(n):
        p[i] = i
    while True:
        if not _scan(p, n, inv, m):
            count += 1
        # lexicographic next permutation
        i = n - 2
        while i >= 0 and p[i] > p[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while p[j] < p[i]:
            j -= 1
        t = p[i]; p[i] = p[j]; p[j] = t
        i += 1
        j = n - 1
        while i < j:
            t = p[i]; p[i] = p[j]; p[j] = t
            i += 1
            j -= 1
    return count


def overlap_mask(sigma):
    """Bit ``k`` set iff the length-``k`` prefix and suffix have the same order type."""
    cdef int m = len(sigma)
    cdef int s[64]
    cdef int k, mask = 0
    if m > 30:
        raise ValueError(f"pattern length {m} exceeds kernel limit 30")
    for k in range(m):
        s[k] = sigma[k]
    for k in range(1, m):
        if same_order(s, s + (m - k), k):
            mask |= 1 << k
    return mask

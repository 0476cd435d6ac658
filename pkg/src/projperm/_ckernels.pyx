# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in ``_pykernels``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef enum:
    UNREACHED = 255


cdef inline int _star_distance(const int* images, int size, char* seen) nogil:
    cdef int q = size - 1
    cdef int s = 0, t = 0, start, x
    memset(seen, 0, size)
    for start in range(size):
        if seen[start] or images[start] == start:
            continue
        t += 1
        x = start
        while not seen[x]:
            seen[x] = 1
            if x != q:
                s += 1
            x = images[x]
    if images[q] != q:
        return s + t - 1
    return s + t


def star_distance(images):
    cdef int size = len(images)
    cdef int* buf = <int*> malloc(size * sizeof(int))
    cdef char* seen = <char*> malloc(size)
    cdef int i, n
    if buf == NULL or seen == NULL:
        free(buf)
        free(seen)
        raise MemoryError()
    try:
        for i in range(size):
            buf[i] = images[i]
        n = _star_distance(buf, size, seen)
    finally:
        free(buf)
        free(seen)
    return n


def pgl_scan(f, const int[:] cands, int ncand):
    cdef int size = len(f)
    cdef int* fb = <int*> malloc(size * sizeof(int))
    cdef int* comp = <int*> malloc(size * sizeof(int))
    cdef char* seen = <char*> malloc(size)
    cdef int i, c, n, base
    cdef int best_idx = -1, best_n = 1 << 30
    if fb == NULL or comp == NULL or seen == NULL:
        free(fb)
        free(comp)
        free(seen)
        raise MemoryError()
    try:
        for i in range(size):
            fb[i] = f[i]
        with nogil:
            for c in range(ncand):
                base = c * size
                for i in range(size):
                    comp[i] = cands[base + fb[i]]
                n = _star_distance(comp, size, seen)
                if n < best_n:
                    best_idx = c
                    best_n = n
                    if n == 0:
                        break
    finally:
        free(fb)
        free(comp)
        free(seen)
    return best_idx, best_n


cdef inline long _lehmer(const unsigned char* perm, int m) nogil:
    cdef long r = 0
    cdef int i, j, smaller
    for i in range(m):
        smaller = 0
        for j in range(i + 1, m):
            if perm[j] < perm[i]:
                smaller += 1
        r = r * (m - i) + smaller
    return r


def lehmer_rank(perm):
    cdef int m = len(perm)
    cdef unsigned char buf[32]
    cdef int i
    if m > 32:
        raise ValueError("permutation too long")
    for i in range(m):
        buf[i] = perm[i]
    return _lehmer(buf, m)


def bfs_levels(int q, invstar, affine, int naffine, int max_depth):
    if q > 12:
        raise ValueError("q too large for a full breadth-first search")
    cdef long total = 1
    cdef int i
    for i in range(2, q + 1):
        total *= i
    levels = bytearray(total)
    cdef unsigned char[:] lv = levels
    cdef unsigned char* store = <unsigned char*> malloc((total + 1) * q)
    cdef unsigned char* thetas = <unsigned char*> malloc(naffine * q)
    cdef unsigned char inv[32]
    cdef unsigned char h[32]
    cdef unsigned char* r
    cdef long count = 0, lo, hi, g, rk
    cdef int depth = 0, t, x
    if store == NULL or thetas == NULL:
        free(store)
        free(thetas)
        raise MemoryError()
    try:
        memset(&lv[0], UNREACHED, total)
        for x in range(q):
            inv[x] = invstar[x]
        for i in range(naffine * q):
            thetas[i] = affine[i]
        with nogil:
            for t in range(naffine):
                rk = _lehmer(&thetas[t * q], q)
                if lv[rk] == UNREACHED:
                    lv[rk] = 0
                    for x in range(q):
                        store[count * q + x] = thetas[t * q + x]
                    count += 1
            lo = 0
            hi = count
            while lo < hi and depth < max_depth:
                depth += 1
                for g in range(lo, hi):
                    for x in range(q):
                        h[x] = inv[store[g * q + x]]
                    for t in range(naffine):
                        r = &store[count * q]
                        for x in range(q):
                            r[x] = thetas[t * q + h[x]]
                        rk = _lehmer(r, q)
                        if lv[rk] == UNREACHED:
                            lv[rk] = depth
                            count += 1
                lo = hi
                hi = count
    finally:
        free(store)
        free(thetas)
    return levels

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; same API and results as ``_pykernels``.

A 64-bit path is taken when a magnitude bound proves no intermediate can
overflow; otherwise the loops run on Python integers.
"""

from libc.stdlib cimport malloc, free

cdef long long LIMIT = 1LL << 62


cdef void _unrank(int n, long long rank, int* a, long long* fact):
    cdef int pool[32]
    cdef int k, idx, m, t
    for k in range(n):
        pool[k] = k
    m = n
    for k in range(n - 1, -1, -1):
        idx = <int>(rank // fact[k])
        rank = rank % fact[k]
        a[n - 1 - k] = pool[idx]
        for t in range(idx, m - 1):
            pool[t] = pool[t + 1]
        m -= 1


cdef int _sign(int n, int* a):
    cdef int i, j, inv = 0
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] > a[j]:
                inv += 1
    return -1 if inv & 1 else 1


cdef int _next(int n, int* a):
    """Advance to the next lexicographic permutation; return -1 if parity flipped else 1."""
    cdef int i = n - 2, j = n - 1, t, lo, hi, tail
    while a[i] > a[i + 1]:
        i -= 1
    while a[j] < a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    lo = i + 1
    hi = n - 1
    while lo < hi:
        t = a[lo]; a[lo] = a[hi]; a[hi] = t
        lo += 1
        hi -= 1
    tail = n - 1 - i
    return -1 if (1 + tail // 2) & 1 else 1


cdef long long _ipow(long long x, int e):
    cdef long long r = 1
    while e > 0:
        if e & 1:
            r *= x
        e >>= 1
        if e:
            x *= x
    return r


cdef long long* _factorials(int n):
    cdef long long* fact = <long long*> malloc((n + 1) * sizeof(long long))
    cdef int k
    fact[0] = 1
    for k in range(1, n + 1):
        fact[k] = fact[k - 1] * k
    return fact


def _max_abs(B):
    return max(abs(x) for row in B for x in row)


def _fits(x):
    return x < LIMIT


cdef long long* _matrix_ll(B, int n):
    cdef long long* m = <long long*> malloc(n * n * sizeof(long long))
    cdef int i, j
    for i in range(n):
        for j in range(n):
            m[i * n + j] = B[i][j]
    return m


def leibniz(B, long long start, long long stop):
    cdef int n = len(B)
    cdef long long count = stop - start
    if count <= 0:
        return 0
    if _fits(max(_max_abs(B), 1) ** n * count):
        return _leibniz_ll(B, n, start, stop)
    return _leibniz_obj(B, n, start, stop)


cdef object _leibniz_ll(B, int n, long long start, long long stop):
    cdef long long* fact = _factorials(n)
    cdef long long* m = _matrix_ll(B, n)
    cdef int a[32]
    cdef long long r, p, total = 0
    cdef int i, sign
    _unrank(n, start, a, fact)
    sign = _sign(n, a)
    r = start
    while True:
        p = 1
        for i in range(n):
            p *= m[i * n + a[i]]
        total += p if sign == 1 else -p
        r += 1
        if r >= stop:
            break
        sign *= _next(n, a)
    free(fact)
    free(m)
    return total


cdef object _leibniz_obj(B, int n, long long start, long long stop):
    cdef long long* fact = _factorials(n)
    cdef int a[32]
    cdef long long r
    cdef int i, sign
    rows = [list(row) for row in B]
    total = 0
    _unrank(n, start, a, fact)
    sign = _sign(n, a)
    r = start
    while True:
        p = 1
        for i in range(n):
            p = p * rows[i][a[i]]
        if sign == 1:
            total += p
        else:
            total -= p
        r += 1
        if r >= stop:
            break
        sign *= _next(n, a)
    free(fact)
    return total


def power_blocks(B, int exponent, gamma, long long start, long long stop):
    cdef int n = len(B)
    cdef long long count = stop - start
    if count <= 0:
        return 0, 0, 0, 0
    base = n * _max_abs(B) + abs(gamma)
    if _fits(max(base, 1) ** exponent * (n + 1) * count):
        return _power_blocks_ll(B, n, exponent, gamma, start, stop)
    return _power_blocks_obj(B, n, exponent, gamma, start, stop)


cdef object _power_blocks_ll(B, int n, int exponent, long long gamma, long long start, long long stop):
    cdef long long* fact = _factorials(n)
    cdef long long* m = _matrix_ll(B, n)
    cdef int a[32]
    cdef long long diag[32]
    cdef long long r, full, top, sub
    cdef long long e1 = 0, o1 = 0, o0 = 0, e0 = 0
    cdef int i, sign
    _unrank(n, start, a, fact)
    sign = _sign(n, a)
    r = start
    while True:
        full = gamma
        for i in range(n):
            diag[i] = m[i * n + a[i]]
            full += diag[i]
        top = _ipow(full, exponent)
        sub = 0
        for i in range(n):
            sub += _ipow(full - diag[i], exponent)
        if sign == 1:
            e0 += top
            e1 += sub
        else:
            o0 += top
            o1 += sub
        r += 1
        if r >= stop:
            break
        sign *= _next(n, a)
    free(fact)
    free(m)
    return e1, o1, o0, e0


cdef object _power_blocks_obj(B, int n, int exponent, gamma, long long start, long long stop):
    cdef long long* fact = _factorials(n)
    cdef int a[32]
    cdef long long r
    cdef int i, sign
    rows = [list(row) for row in B]
    e1 = o1 = o0 = e0 = 0
    diag = [0] * n
    _unrank(n, start, a, fact)
    sign = _sign(n, a)
    r = start
    while True:
        full = gamma
        for i in range(n):
            diag[i] = rows[i][a[i]]
            full = full + diag[i]
        top = full ** exponent
        sub = 0
        for i in range(n):
            sub = sub + (full - diag[i]) ** exponent
        if sign == 1:
            e0 += top
            e1 += sub
        else:
            o0 += top
            o1 += sub
        r += 1
        if r >= stop:
            break
        sign *= _next(n, a)
    free(fact)
    return e1, o1, o0, e0


def polarized(B, gammas, long long start, long long stop):
    cdef int n = len(B)
    cdef long long count = stop - start
    if count <= 0:
        return 0
    gmax = max((abs(g) for g in gammas), default=0)
    base = n * _max_abs(B) + gmax
    if _fits(max(base, 1) ** n * (1 << n) * count):
        return _polarized_ll(B, n, [int(g) for g in gammas], start, stop)
    return _polarized_obj(B, n, gammas, start, stop)


cdef object _polarized_ll(B, int n, gammas, long long start, long long stop):
    cdef long long* fact = _factorials(n)
    cdef long long* m = _matrix_ll(B, n)
    cdef int full_mask = 1 << n
    cdef long long* sums = <long long*> malloc(full_mask * sizeof(long long))
    cdef int* signs = <int*> malloc(full_mask * sizeof(int))
    cdef int a[32]
    cdef long long diag[32]
    cdef long long r, acc, total = 0, g
    cdef int i, sign, mask, low, bit, pc
    for mask in range(full_mask):
        pc = 0
        low = mask
        while low:
            pc += low & 1
            low >>= 1
        signs[mask] = 1 if (n - pc) % 2 == 0 else -1
    _unrank(n, start, a, fact)
    sign = _sign(n, a)
    r = start
    while True:
        for i in range(n):
            diag[i] = m[i * n + a[i]]
        g = gammas[r - start]
        sums[0] = g
        acc = signs[0] * _ipow(g, n)
        for mask in range(1, full_mask):
            low = mask & -mask
            bit = 0
            while (1 << bit) != low:
                bit += 1
            sums[mask] = sums[mask ^ low] + diag[bit]
            acc += signs[mask] * _ipow(sums[mask], n)
        total += acc if sign == 1 else -acc
        r += 1
        if r >= stop:
            break
        sign *= _next(n, a)
    free(fact)
    free(m)
    free(sums)
    free(signs)
    return total


cdef object _polarized_obj(B, int n, gammas, long long start, long long stop):
    cdef long long* fact = _factorials(n)
    cdef int full_mask = 1 << n
    cdef int a[32]
    cdef long long r
    cdef int i, sign, mask, low, bit
    rows = [list(row) for row in B]
    sums = [0] * full_mask
    signs = [1 if (n - bin(k).count("1")) % 2 == 0 else -1 for k in range(full_mask)]
    diag = [0] * n
    total = 0
    _unrank(n, start, a, fact)
    sign = _sign(n, a)
    r = start
    while True:
        for i in range(n):
            diag[i] = rows[i][a[i]]
        g = gammas[r - start]
        sums[0] = g
        acc = g ** n * signs[0]
        for mask in range(1, full_mask):
            low = mask & -mask
            bit = 0
            while (1 << bit) != low:
                bit += 1
            sums[mask] = sums[mask ^ low] + diag[bit]
            term = sums[mask] ** n
            if signs[mask] == 1:
                acc += term
            else:
                acc -= term
        if sign == 1:
            total += acc
        else:
            total -= acc
        r += 1
        if r >= stop:
            break
        sign *= _next(n, a)
    free(fact)
    return total

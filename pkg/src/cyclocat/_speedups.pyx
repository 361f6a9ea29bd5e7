# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels for Q[t]/(Phi_N(t)).

Same interface and results as ``cyclocat._pykernels``.  Coefficients are
handled as 64-bit integers with overflow-checked arithmetic; any input that
does not fit, or any overflow, is delegated to the pure-Python kernels, so
results are always exact.
"""

from cyclocat import _pykernels as _py

cdef extern from *:
    """
    static inline int cc_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int cc_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int cc_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int cc_mul_ovf(long long a, long long b, long long *r) nogil
    int cc_add_ovf(long long a, long long b, long long *r) nogil
    int cc_sub_ovf(long long a, long long b, long long *r) nogil

cdef enum:
    MAXPHI = 256


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _load(object seq, long long *out, Py_ssize_t n) except -1:
    """Copy n Python ints into out; return 1 on success, 0 if a value does not fit."""
    cdef Py_ssize_t i
    try:
        for i in range(n):
            out[i] = seq[i]
            if out[i] == -9223372036854775807 - 1:
                return 0
    except OverflowError:
        return 0
    return 1


cdef tuple _finish(long long *num, Py_ssize_t n, long long den):
    """Normalize an int64 fraction (den != 0) and box it."""
    cdef Py_ssize_t i
    cdef long long g
    cdef bint zero = True
    if den < 0:
        if den == -9223372036854775807 - 1:
            return None
        for i in range(n):
            if num[i] == -9223372036854775807 - 1:
                return None
            num[i] = -num[i]
        den = -den
    g = den
    for i in range(n):
        if num[i]:
            zero = False
            if g != 1:
                g = _gcd(g, num[i])
    if zero:
        return (0,) * n, 1
    if g != 1:
        for i in range(n):
            num[i] //= g
        den //= g
    return tuple([num[i] for i in range(n)]), den


def normalize(num, den):
    cdef Py_ssize_t n = len(num)
    cdef long long buf[MAXPHI]
    cdef long long d
    if n > MAXPHI or not _load(num, buf, n):
        return _py.normalize(num, den)
    try:
        d = den
    except OverflowError:
        return _py.normalize(num, den)
    res = _finish(buf, n, d)
    if res is None:
        return _py.normalize(num, den)
    return res


cdef object _addsub(object anum, object aden, object bnum, object bden, int sign):
    cdef Py_ssize_t n = len(anum)
    cdef long long a[MAXPHI]
    cdef long long b[MAXPHI]
    cdef long long out[MAXPHI]
    cdef long long ad, bd, den, x, y
    cdef Py_ssize_t i
    if n > MAXPHI or not _load(anum, a, n) or not _load(bnum, b, n):
        return None
    try:
        ad = aden
        bd = bden
    except OverflowError:
        return None
    if ad == bd:
        for i in range(n):
            if sign > 0:
                if cc_add_ovf(a[i], b[i], &out[i]):
                    return None
            elif cc_sub_ovf(a[i], b[i], &out[i]):
                return None
        den = ad
    else:
        if cc_mul_ovf(ad, bd, &den):
            return None
        for i in range(n):
            if cc_mul_ovf(a[i], bd, &x) or cc_mul_ovf(b[i], ad, &y):
                return None
            if sign > 0:
                if cc_add_ovf(x, y, &out[i]):
                    return None
            elif cc_sub_ovf(x, y, &out[i]):
                return None
    return _finish(out, n, den)


def add(anum, aden, bnum, bden):
    res = _addsub(anum, aden, bnum, bden, 1)
    if res is None:
        return _py.add(anum, aden, bnum, bden)
    return res


def sub(anum, aden, bnum, bden):
    res = _addsub(anum, aden, bnum, bden, -1)
    if res is None:
        return _py.sub(anum, aden, bnum, bden)
    return res


cdef object _mul(object anum, object aden, object bnum, object bden, tuple table):
    cdef Py_ssize_t phi = len(anum)
    cdef long long a[MAXPHI]
    cdef long long b[MAXPHI]
    cdef long long row[MAXPHI]
    cdef long long conv[2 * MAXPHI]
    cdef long long ad, bd, den, p, c
    cdef Py_ssize_t i, j, k
    if phi > MAXPHI or not _load(anum, a, phi) or not _load(bnum, b, phi):
        return None
    try:
        ad = aden
        bd = bden
    except OverflowError:
        return None
    if cc_mul_ovf(ad, bd, &den):
        return None
    for k in range(2 * phi - 1):
        conv[k] = 0
    for i in range(phi):
        if a[i] == 0:
            continue
        for j in range(phi):
            if b[j] == 0:
                continue
            if cc_mul_ovf(a[i], b[j], &p) or cc_add_ovf(conv[i + j], p, &conv[i + j]):
                return None
    for k in range(2 * phi - 2, phi - 1, -1):
        c = conv[k]
        if c == 0:
            continue
        if not _load(table[k - phi], row, phi):
            return None
        for i in range(phi):
            if row[i] == 0:
                continue
            if cc_mul_ovf(c, row[i], &p) or cc_add_ovf(conv[i], p, &conv[i]):
                return None
    return _finish(conv, phi, den)


def mul(anum, aden, bnum, bden, table):
    res = _mul(anum, aden, bnum, bden, table)
    if res is None:
        return _py.mul(anum, aden, bnum, bden, table)
    return res


def scale(anum, aden, p, r):
    cdef Py_ssize_t n = len(anum)
    cdef long long a[MAXPHI]
    cdef long long out[MAXPHI]
    cdef long long pp, rr, ad, den
    cdef Py_ssize_t i
    if n > MAXPHI or not _load(anum, a, n):
        return _py.scale(anum, aden, p, r)
    try:
        pp = p
        rr = r
        ad = aden
    except OverflowError:
        return _py.scale(anum, aden, p, r)
    if cc_mul_ovf(ad, rr, &den):
        return _py.scale(anum, aden, p, r)
    for i in range(n):
        if cc_mul_ovf(a[i], pp, &out[i]):
            return _py.scale(anum, aden, p, r)
    res = _finish(out, n, den)
    if res is None:
        return _py.scale(anum, aden, p, r)
    return res

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernels over W(F_{p^L}) mod p^N.

Twin of muhasse._kernel_py with identical signatures.  When p^N fits in 63
bits (and L, n are small) the work runs on native 64/128-bit integers;
otherwise the call is delegated to the pure-Python kernel, which handles
arbitrary precision.
"""

from libc.stdlib cimport malloc, free

from . import _kernel_py as _py

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64

# canonical coefficients must fit in 63 bits so products fit in 126
FAST_MAX = (1 << 63) - 1

DEF MAXL = 16


cdef inline bint _fast_ok(object pN, Py_ssize_t L, Py_ssize_t n):
    return pN <= FAST_MAX and 1 <= L <= MAXL and n <= 64


cdef int _load_flat(object A, u64* buf, Py_ssize_t L) except -1:
    cdef Py_ssize_t idx = 0, i
    for t in A:
        for i in range(L):
            buf[idx] = t[i]
            idx += 1
    return 0


cdef tuple _dump_elem(const u64* buf, Py_ssize_t L):
    cdef Py_ssize_t i
    return tuple([buf[i] for i in range(L)])


cdef list _dump_flat(const u64* buf, Py_ssize_t count, Py_ssize_t L):
    cdef Py_ssize_t k
    return [_dump_elem(buf + k * L, L) for k in range(count)]


cdef void _vmul(u64* out, const u64* a, const u64* b, const u64* red,
                u64 pN, Py_ssize_t L) noexcept nogil:
    cdef u128 conv[2 * MAXL - 1]
    cdef u128 t
    cdef u64 cj
    cdef Py_ssize_t i, j
    for i in range(2 * L - 1):
        conv[i] = 0
    for i in range(L):
        if a[i]:
            for j in range(L):
                t = (<u128> a[i]) * b[j]
                conv[i + j] += <u64> (t % pN)
    for j in range(2 * L - 2, L - 1, -1):
        cj = <u64> (conv[j] % pN)
        if cj:
            for i in range(L):
                t = (<u128> cj) * red[(j - L) * L + i]
                conv[i] += <u64> (t % pN)
    for i in range(L):
        out[i] = <u64> (conv[i] % pN)


cdef void _vadd_into(u64* acc, const u64* t, u64 pN, Py_ssize_t L) noexcept nogil:
    cdef Py_ssize_t i
    cdef u64 s
    for i in range(L):
        s = acc[i] + t[i]
        if s >= pN:
            s -= pN
        acc[i] = s


cdef void _vsigma(u64* out, const u64* a, const u64* smat, u64 pN,
                  Py_ssize_t L) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef u128 acc
    for i in range(L):
        acc = 0
        for j in range(L):
            acc += <u64> (((<u128> smat[i * L + j]) * a[j]) % pN)
        out[i] = <u64> (acc % pN)


def add(a, b, pN):
    return _py.add(a, b, pN)


def sub(a, b, pN):
    return _py.sub(a, b, pN)


def neg(a, pN):
    return _py.neg(a, pN)


def smul(c, a, pN):
    return _py.smul(c, a, pN)


def mul(a, b, red, pN):
    cdef Py_ssize_t L = len(a)
    if not _fast_ok(pN, L, 1):
        return _py.mul(a, b, red, pN)
    cdef u64 ca[MAXL]
    cdef u64 cb[MAXL]
    cdef u64 cred[MAXL * MAXL]
    cdef u64 cout[MAXL]
    cdef Py_ssize_t i
    for i in range(L):
        ca[i] = a[i]
        cb[i] = b[i]
    _load_flat(red, cred, L)
    _vmul(cout, ca, cb, cred, <u64> pN, L)
    return _dump_elem(cout, L)


def sigma_apply(a, smat, pN):
    cdef Py_ssize_t L = len(a)
    if not _fast_ok(pN, L, 1):
        return _py.sigma_apply(a, smat, pN)
    cdef u64 ca[MAXL]
    cdef u64 cs[MAXL * MAXL]
    cdef u64 cout[MAXL]
    cdef Py_ssize_t i
    for i in range(L):
        ca[i] = a[i]
    _load_flat(smat, cs, L)
    _vsigma(cout, ca, cs, <u64> pN, L)
    return _dump_elem(cout, L)


def mat_mul(A, B, r, m, c, red, pN):
    cdef Py_ssize_t L = len(A[0]) if A else 1
    cdef Py_ssize_t rr = r, mm = m, cc = c
    if not A or not _fast_ok(pN, L, max(rr, max(mm, cc))):
        return _py.mat_mul(A, B, r, m, c, red, pN)
    cdef u64 q = <u64> pN
    cdef u64* bufA = <u64*> malloc(rr * mm * L * sizeof(u64))
    cdef u64* bufB = <u64*> malloc(mm * cc * L * sizeof(u64))
    cdef u64* bufO = <u64*> malloc(rr * cc * L * sizeof(u64))
    if bufA == NULL or bufB == NULL or bufO == NULL:
        free(bufA); free(bufB); free(bufO)
        raise MemoryError()
    cdef u64 cred[MAXL * MAXL]
    cdef u64 tmp[MAXL]
    cdef Py_ssize_t i, j, k, x
    try:
        _load_flat(A, bufA, L)
        _load_flat(B, bufB, L)
        _load_flat(red, cred, L)
        with nogil:
            for i in range(rr):
                for j in range(cc):
                    for x in range(L):
                        bufO[(i * cc + j) * L + x] = 0
                    for k in range(mm):
                        _vmul(tmp, bufA + (i * mm + k) * L,
                              bufB + (k * cc + j) * L, cred, q, L)
                        _vadd_into(bufO + (i * cc + j) * L, tmp, q, L)
        return _dump_flat(bufO, rr * cc, L)
    finally:
        free(bufA); free(bufB); free(bufO)


def mat_sigma(A, smat, pN):
    cdef Py_ssize_t L = len(A[0]) if A else 1
    cdef Py_ssize_t count = len(A)
    if not A or not _fast_ok(pN, L, 1):
        return _py.mat_sigma(A, smat, pN)
    cdef u64 q = <u64> pN
    cdef u64* buf = <u64*> malloc(count * L * sizeof(u64))
    cdef u64* out = <u64*> malloc(count * L * sizeof(u64))
    if buf == NULL or out == NULL:
        free(buf); free(out)
        raise MemoryError()
    cdef u64 cs[MAXL * MAXL]
    cdef Py_ssize_t k
    try:
        _load_flat(A, buf, L)
        _load_flat(smat, cs, L)
        with nogil:
            for k in range(count):
                _vsigma(out + k * L, buf + k * L, cs, q, L)
        return _dump_flat(out, count, L)
    finally:
        free(buf); free(out)


def berkowitz(A, n, red, pN, L):
    cdef Py_ssize_t nn = n, LL = L
    if not _fast_ok(pN, LL, nn) or nn < 1:
        return _py.berkowitz(A, n, red, pN, L)
    cdef u64 q = <u64> pN
    # work arrays: matrix, poly, newpoly, t, v, nv
    cdef u64* bufA = <u64*> malloc(nn * nn * LL * sizeof(u64))
    cdef u64* poly = <u64*> malloc((nn + 1) * LL * sizeof(u64))
    cdef u64* newp = <u64*> malloc((nn + 1) * LL * sizeof(u64))
    cdef u64* tcol = <u64*> malloc((nn + 1) * LL * sizeof(u64))
    cdef u64* v = <u64*> malloc(nn * LL * sizeof(u64))
    cdef u64* nv = <u64*> malloc(nn * LL * sizeof(u64))
    if (bufA == NULL or poly == NULL or newp == NULL or tcol == NULL
            or v == NULL or nv == NULL):
        free(bufA); free(poly); free(newp); free(tcol); free(v); free(nv)
        raise MemoryError()
    cdef u64 cred[MAXL * MAXL]
    cdef u64 tmp[MAXL]
    cdef u64 acc[MAXL]
    cdef Py_ssize_t k, i, j, x, plen
    try:
        _load_flat(A, bufA, LL)
        _load_flat(red, cred, LL)
        with nogil:
            for x in range(LL):
                poly[x] = 0
            poly[0] = 1
            plen = 1
            for k in range(1, nn + 1):
                # t = [1, -a, -RC, -RAC, ...]
                for x in range(LL):
                    tcol[x] = 0
                tcol[0] = 1
                for x in range(LL):
                    tcol[LL + x] = (q - bufA[((k - 1) * nn + (k - 1)) * LL + x]) % q
                for i in range(k - 1):
                    v[i * LL] = 0  # placeholder; filled below
                for i in range(k - 1):
                    for x in range(LL):
                        v[i * LL + x] = bufA[(i * nn + (k - 1)) * LL + x]
                for i in range(k - 1):
                    for x in range(LL):
                        acc[x] = 0
                    for j in range(k - 1):
                        _vmul(tmp, bufA + ((k - 1) * nn + j) * LL, v + j * LL,
                              cred, q, LL)
                        _vadd_into(acc, tmp, q, LL)
                    for x in range(LL):
                        tcol[(i + 2) * LL + x] = (q - acc[x]) % q
                    if i < k - 2:
                        for j in range(k - 1):
                            for x in range(LL):
                                nv[j * LL + x] = 0
                            for x in range(k - 1):
                                _vmul(tmp, bufA + (j * nn + x) * LL, v + x * LL,
                                      cred, q, LL)
                                _vadd_into(nv + j * LL, tmp, q, LL)
                        for j in range((k - 1) * LL):
                            v[j] = nv[j]
                # newpoly[i] = sum_j t[i-j] * poly[j], j <= plen-1, i-j <= k
                for i in range(k + 1):
                    for x in range(LL):
                        acc[x] = 0
                    j = i if i < plen - 1 else plen - 1
                    while j >= 0:
                        if i - j <= k:
                            _vmul(tmp, tcol + (i - j) * LL, poly + j * LL,
                                  cred, q, LL)
                            _vadd_into(acc, tmp, q, LL)
                        j -= 1
                    for x in range(LL):
                        newp[i * LL + x] = acc[x]
                plen = k + 1
                for j in range(plen * LL):
                    poly[j] = newp[j]
            # reverse into ascending order, reuse newp
            for i in range(plen):
                for x in range(LL):
                    newp[(plen - 1 - i) * LL + x] = poly[i * LL + x]
        return _dump_flat(newp, nn + 1, LL)
    finally:
        free(bufA); free(poly); free(newp); free(tcol); free(v); free(nv)

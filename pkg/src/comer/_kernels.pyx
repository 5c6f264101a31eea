# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors ``comer._kernels_py`` call for call.

Residue buffers are ``array('I')`` (uint32), counts ``array('q')`` and byte
tables ``bytearray``, all read through raw pointers: typed memoryviews cost
microseconds per call to acquire, which swamps the work for small primes.
"""

from cpython cimport array
from cpython.bytearray cimport PyByteArray_AS_STRING, PyByteArray_GET_SIZE
from libc.stdlib cimport calloc, free
from libc.string cimport memset

BACKEND = "compiled"

UNSET = 2


cdef inline unsigned char* _bytes(bytearray buf, Py_ssize_t need) except NULL:
    if PyByteArray_GET_SIZE(buf) < need:
        raise ValueError(f"bytearray too short: need {need}")
    return <unsigned char*>PyByteArray_AS_STRING(buf)


cdef inline unsigned int* _residues(array.array buf, Py_ssize_t need) except NULL:
    if buf.ob_descr.typecode != b'I':
        raise TypeError("expected array('I')")
    if len(buf) < need:
        raise ValueError(f"array too short: need {need}")
    return buf.data.as_uints


cdef inline long long* _longs(array.array buf, Py_ssize_t need) except NULL:
    if buf.ob_descr.typecode != b'q':
        raise TypeError("expected array('q')")
    if len(buf) < need:
        raise ValueError(f"array too short: need {need}")
    return buf.data.as_longlongs


def fill_cosets(long long p, long long n, long long g, bytearray class_index,
                array.array elements):
    cdef unsigned char* ci = _bytes(class_index, p)
    cdef unsigned int* el = _residues(elements, p - 1)
    cdef long long k = (p - 1) // n
    cdef unsigned long long x = 1, up = p, ug = g
    cdef long long e, a, i
    with nogil:
        for e in range(p - 1):
            a = e // n
            i = e - a * n
            ci[x] = <unsigned char>i
            el[i * k + a] = <unsigned int>x
            x = x * ug % up


cdef void _sumset(long long p, long long k, const unsigned int* el,
                  long long i, long long j, unsigned char* bitmap) noexcept nogil:
    cdef long long a, b, s, x
    memset(bitmap, 0, p)
    for a in range(i * k, (i + 1) * k):
        x = el[a]
        for b in range(j * k, (j + 1) * k):
            s = x + el[b]
            if s >= p:
                s -= p
            bitmap[s] = 1


def sumset_bitmap(long long p, long long k, array.array elements, long long i, long long j):
    cdef unsigned int* el = _residues(elements, max(i, j) * k + k)
    out = bytearray(p)
    _sumset(p, k, el, i, j, <unsigned char*>PyByteArray_AS_STRING(out))
    return out


def naive_overlaps(long long p, long long n, long long k, array.array elements,
                   array.array overlaps, bytearray status):
    """overlaps[i*n + j] = |(X_0 + X_i) & X_j|; status is 1 where that is all of X_j.

    Returns the flat index of the first overlap that is neither empty nor
    full, or -1.
    """
    cdef unsigned int* el = _residues(elements, n * k)
    cdef long long* ov = _longs(overlaps, n * n)
    cdef unsigned char* st = _bytes(status, n * n)
    cdef unsigned char* bitmap = <unsigned char*>calloc(p, 1)
    if bitmap == NULL:
        raise MemoryError()
    cdef long long i, j, c, hits, bad = -1
    with nogil:
        for i in range(n):
            _sumset(p, k, el, 0, i, bitmap)
            for j in range(n):
                hits = 0
                for c in range(j * k, (j + 1) * k):
                    hits += bitmap[el[c]]
                ov[i * n + j] = hits
                st[i * n + j] = hits == k
                if 0 < hits < k and bad < 0:
                    bad = i * n + j
    free(bitmap)
    return bad


def difference_sets(long long p, long long n, long long k, array.array elements,
                    array.array diffs):
    cdef unsigned int* el = _residues(elements, n * k)
    cdef unsigned int* df = _residues(diffs, n * k)
    cdef long long j, a, gj, d
    with nogil:
        for j in range(n):
            gj = el[j * k]
            for a in range(k):
                d = gj - <long long>el[a]
                df[j * k + a] = <unsigned int>(d + p if d < 0 else d)


cdef inline bint _fast(const unsigned char* ci, const unsigned int* df,
                       long long k, long long i, long long j) noexcept nogil:
    cdef long long a
    for a in range(j * k, (j + 1) * k):
        if ci[df[a]] == i:
            return True
    return False


def fast_test(bytearray class_index, array.array diffs, long long k, long long i, long long j):
    cdef unsigned int* df = _residues(diffs, (j + 1) * k)
    return _fast(<unsigned char*>PyByteArray_AS_STRING(class_index), df, k, i, j)


def sweep_symmetric(long long n, long long k, bytearray class_index, array.array diffs,
                    bytearray status):
    cdef unsigned char* ci = <unsigned char*>PyByteArray_AS_STRING(class_index)
    cdef unsigned int* df = _residues(diffs, n * k)
    cdef unsigned char* st = _bytes(status, n * n)
    cdef long long i, j, tests = 0
    cdef unsigned char v
    with nogil:
        for i in range(n):
            for j in range(i, n):
                v = _fast(ci, df, k, i, j)
                tests += 1
                st[i * n + j] = v
                st[j * n + i] = v
    return tests


def sweep_asymmetric(long long n, long long k, bytearray class_index, array.array diffs,
                     bytearray status):
    cdef unsigned char* ci = <unsigned char*>PyByteArray_AS_STRING(class_index)
    cdef unsigned int* df = _residues(diffs, n * k)
    cdef unsigned char* st = _bytes(status, n * n)
    cdef long long m = n // 2
    cdef long long i, j, t, tests = 0
    cdef unsigned char v
    with nogil:
        for i in range(n):
            for t in range(i, n):
                j = (t + m) % n
                v = _fast(ci, df, k, i, j)
                tests += 1
                st[i * n + j] = v
                st[((j + m) % n) * n + (i + m) % n] = v
    return tests

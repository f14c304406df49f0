# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: bit-packed local complementation and GF(2) elimination.

Drop-in twin of lckit._core_py.  Rows cross the boundary as Python ints,
get unpacked once into a flat uint64 buffer, and the loops run in C.
"""

cdef extern from *:
    """
    static inline int lckit_ctz64(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    """
    int lckit_ctz64(unsigned long long x) nogil

BACKEND_NAME = "c"


cdef unsigned long long[::1] _pack(object rows, Py_ssize_t count, Py_ssize_t words, object ba):
    cdef unsigned long long[::1] buf = memoryview(ba).cast("Q")
    cdef Py_ssize_t i
    nbytes = words * 8
    mv = memoryview(ba)
    for i in range(count):
        mv[i * nbytes:(i + 1) * nbytes] = (<object> rows[i]).to_bytes(nbytes, "little")
    return buf


cdef object _unpack_row(object ba, Py_ssize_t i, Py_ssize_t nbytes):
    return int.from_bytes(ba[i * nbytes:(i + 1) * nbytes], "little")


def apply_sequence_rows(rows, n, seq):
    """Apply local complementation at each vertex of seq, in order."""
    cdef Py_ssize_t cn = n
    cdef Py_ssize_t words = (cn + 63) >> 6
    if cn == 0 or len(seq) == 0:
        return list(rows)
    ba = bytearray(cn * words * 8)
    cdef unsigned long long[::1] buf = _pack(rows, cn, words, ba)
    cdef Py_ssize_t v, u, w, k, bv, bu
    cdef unsigned long long x
    for step in seq:
        v = step
        bv = v * words
        for w in range(words):
            x = buf[bv + w]
            while x:
                u = (w << 6) + lckit_ctz64(x)
                x &= x - 1
                bu = u * words
                for k in range(words):
                    buf[bu + k] ^= buf[bv + k]
                buf[bu + (u >> 6)] ^= 1ULL << (u & 63)
    nbytes = words * 8
    return [_unpack_row(ba, i, nbytes) for i in range(cn)]


def gf2_rref_rows(rows, ncols):
    """Reduced row echelon form over GF(2); see the python twin for the contract."""
    cdef Py_ssize_t ncol = ncols
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t words = (ncol + 63) >> 6
    if nrows == 0 or ncol == 0:
        return [], []
    ba = bytearray(nrows * words * 8)
    cdef unsigned long long[::1] buf = _pack(rows, nrows, words, ba)
    cdef Py_ssize_t r = 0, c, i, j, k, piv, wc
    cdef unsigned long long mask, tmp
    pivots = []
    for c in range(ncol):
        if r == nrows:
            break
        wc = c >> 6
        mask = 1ULL << (c & 63)
        piv = -1
        for i in range(r, nrows):
            if buf[i * words + wc] & mask:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(words):
                tmp = buf[r * words + k]
                buf[r * words + k] = buf[piv * words + k]
                buf[piv * words + k] = tmp
        for j in range(nrows):
            if j != r and (buf[j * words + wc] & mask):
                for k in range(words):
                    buf[j * words + k] ^= buf[r * words + k]
        pivots.append(c)
        r += 1
    nbytes = words * 8
    return [_unpack_row(ba, i, nbytes) for i in range(r)], pivots

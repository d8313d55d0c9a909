# cython: language_level=3
"""Compiled monomial kernels (same API as ``_kernels_py``)."""

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc, qsort

MAX_EXPONENT = 2**32 - 1
cdef int64_t _MAX_EXP = 4294967295


cdef struct _Entry:
    int64_t deg
    Py_ssize_t idx


cdef int _cmp_entry(const void* pa, const void* pb) noexcept nogil:
    cdef const _Entry* a = <const _Entry*> pa
    cdef const _Entry* b = <const _Entry*> pb
    if a.deg != b.deg:
        return -1 if a.deg < b.deg else 1
    if a.idx != b.idx:
        return -1 if a.idx < b.idx else 1
    return 0


cdef int64_t* _pack(list vecs, Py_ssize_t n) except NULL:
    cdef Py_ssize_t k = len(vecs)
    cdef Py_ssize_t i, j
    cdef int64_t e
    cdef int64_t* buf = <int64_t*> malloc((k * n + 1) * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(k):
            v = vecs[i]
            if len(v) != n:
                raise ValueError("exponent vectors differ in length")
            for j in range(n):
                e = v[j]
                if e < 0 or e > _MAX_EXP:
                    raise OverflowError("exponent outside [0, MAX_EXPONENT]")
                buf[i * n + j] = e
    except BaseException:
        free(buf)
        raise
    return buf


cdef inline bint _leq(const int64_t* a, const int64_t* b, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t j
    for j in range(n):
        if a[j] > b[j]:
            return False
    return True


cdef list _filter_minimal(int64_t* buf, Py_ssize_t k, Py_ssize_t n):
    """Single-pass minimal filter; ``buf`` holds ``k`` vectors of length ``n``."""
    if k == 0:
        return []
    cdef _Entry* order = <_Entry*> malloc(k * sizeof(_Entry))
    cdef Py_ssize_t* kept = <Py_ssize_t*> malloc(k * sizeof(Py_ssize_t))
    cdef Py_ssize_t i, j, nkept = 0
    cdef int64_t d
    cdef const int64_t* cand
    cdef bint divided
    if order == NULL or kept == NULL:
        free(order)
        free(kept)
        raise MemoryError()
    try:
        with nogil:
            for i in range(k):
                d = 0
                for j in range(n):
                    d += buf[i * n + j]
                order[i].deg = d
                order[i].idx = i
            qsort(order, k, sizeof(_Entry), _cmp_entry)
            for i in range(k):
                cand = buf + order[i].idx * n
                divided = False
                for j in range(nkept):
                    if _leq(buf + kept[j] * n, cand, n):
                        divided = True
                        break
                if not divided:
                    kept[nkept] = order[i].idx
                    nkept += 1
        out = []
        for i in range(nkept):
            out.append(tuple([buf[kept[i] * n + j] for j in range(n)]))
        return out
    finally:
        free(order)
        free(kept)


def minimalize(vecs):
    """Minimal elements of ``vecs`` under divisibility, duplicates removed."""
    cdef list lst = list(vecs)
    if not lst:
        return []
    cdef Py_ssize_t n = len(lst[0])
    cdef int64_t* buf = _pack(lst, n)
    try:
        return _filter_minimal(buf, len(lst), n)
    finally:
        free(buf)


cdef list _pairwise(list gens_a, list gens_b, bint add):
    cdef Py_ssize_t ka = len(gens_a), kb = len(gens_b)
    if ka == 0 or kb == 0:
        return []
    cdef Py_ssize_t n = len(gens_a[0])
    cdef int64_t* a = _pack(gens_a, n)
    cdef int64_t* b = NULL
    cdef int64_t* out = NULL
    cdef Py_ssize_t i, j, t, row
    cdef int64_t x, y
    cdef bint overflow = False
    try:
        b = _pack(gens_b, n)
        out = <int64_t*> malloc((ka * kb * n + 1) * sizeof(int64_t))
        if out == NULL:
            raise MemoryError()
        with nogil:
            for i in range(ka):
                for j in range(kb):
                    row = (i * kb + j) * n
                    for t in range(n):
                        x = a[i * n + t]
                        y = b[j * n + t]
                        if add:
                            x = x + y
                            if x > _MAX_EXP:
                                overflow = True
                        elif y > x:
                            x = y
                        out[row + t] = x
        if overflow:
            raise OverflowError("exponent exceeds MAX_EXPONENT")
        return _filter_minimal(out, ka * kb, n)
    finally:
        free(a)
        free(b)
        free(out)


def lcm_all(gens_a, gens_b):
    """Minimal generators of the ideal spanned by all pairwise lcms."""
    return _pairwise(list(gens_a), list(gens_b), False)


def mul_all(gens_a, gens_b):
    """Minimal generators of the product ideal."""
    return _pairwise(list(gens_a), list(gens_b), True)


def divides_any(gens, m):
    """True if some vector in ``gens`` is componentwise <= ``m``."""
    cdef Py_ssize_t n = len(m)
    cdef Py_ssize_t j
    for g in gens:
        for j in range(n):
            if g[j] > m[j]:
                break
        else:
            return True
    return False


def all_divisible(gens_a, gens_b):
    """True if every vector of ``gens_a`` is divisible by one of ``gens_b``."""
    cdef list la = list(gens_a), lb = list(gens_b)
    if not la:
        return True
    if not lb:
        return False
    cdef Py_ssize_t n = len(la[0])
    cdef Py_ssize_t ka = len(la), kb = len(lb), i, j
    cdef int64_t* a = _pack(la, n)
    cdef int64_t* b = NULL
    cdef bint ok = True, found
    try:
        b = _pack(lb, n)
        with nogil:
            for i in range(ka):
                found = False
                for j in range(kb):
                    if _leq(b + j * n, a + i * n, n):
                        found = True
                        break
                if not found:
                    ok = False
                    break
        return ok
    finally:
        free(a)
        free(b)

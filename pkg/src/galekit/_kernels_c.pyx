# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels with an int64 fast path.

Entries are copied into a C ``long long`` buffer and every multiply and
subtract is overflow-checked.  When a step would overflow, the buffer is
copied back and the remaining work is finished on Python big ints by the
reference implementation, so results are identical to ``_kernels_py``.
"""

from libc.stdlib cimport malloc, free

from galekit import _kernels_py

OPTIMAL = 0
UNBOUNDED = 1

cdef extern from *:
    bint mul_overflow "__builtin_mul_overflow"(long long a, long long b, long long *res) nogil
    bint sub_overflow "__builtin_sub_overflow"(long long a, long long b, long long *res) nogil

cdef long long LIMIT = 4611686018427387904  # 2**62, safe to convert


cdef bint _load(list rows, long long *buf, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t i, j
    cdef object x
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            x = row[j]
            if x > LIMIT or x < -LIMIT:
                return False
            buf[i * ncols + j] = x
    return True


cdef void _store(list rows, long long *buf, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t i, j
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            row[j] = buf[i * ncols + j]


cdef inline long long _floordiv(long long a, long long b) nogil:
    # exact division in the kernels, so truncation equals flooring
    return a // b


cdef int _pivot_c(long long *buf, Py_ssize_t nrows, Py_ssize_t ncols,
                  Py_ssize_t r, Py_ssize_t c, long long denom,
                  long long *tmp, long long *out_denom) nogil:
    """Pivot into ``tmp``; returns 1 on overflow leaving ``buf`` untouched."""
    cdef Py_ssize_t i, j
    cdef long long p = buf[r * ncols + c]
    cdef long long f, a, b, s
    for i in range(nrows):
        if i == r:
            for j in range(ncols):
                tmp[i * ncols + j] = buf[i * ncols + j]
            continue
        f = buf[i * ncols + c]
        for j in range(ncols):
            if mul_overflow(buf[i * ncols + j], p, &a):
                return 1
            if mul_overflow(f, buf[r * ncols + j], &b):
                return 1
            if sub_overflow(a, b, &s):
                return 1
            tmp[i * ncols + j] = _floordiv(s, denom)
    if p < 0:
        for i in range(nrows * ncols):
            tmp[i] = -tmp[i]
        p = -p
    for i in range(nrows * ncols):
        buf[i] = tmp[i]
    out_denom[0] = p
    return 0


def pivot(list rows, Py_ssize_t r, Py_ssize_t c, denom):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0])
    cdef long long *buf
    cdef long long *tmp
    cdef long long new_denom = 0
    if denom > LIMIT:
        return _kernels_py.pivot(rows, r, c, denom)
    buf = <long long *> malloc(2 * nrows * ncols * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    tmp = buf + nrows * ncols
    try:
        if not _load(rows, buf, nrows, ncols):
            return _kernels_py.pivot(rows, r, c, denom)
        if _pivot_c(buf, nrows, ncols, r, c, denom, tmp, &new_denom):
            return _kernels_py.pivot(rows, r, c, denom)
        _store(rows, buf, nrows, ncols)
        return new_denom
    finally:
        free(buf)


def simplex_iterate(list rows, list basis, denom, Py_ssize_t enter_limit):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0])
    cdef Py_ssize_t rhs = ncols - 1
    cdef Py_ssize_t i, j, enter, leave
    cdef long long d, a, b, best_num, best_den, x1, x2
    cdef long long *buf
    cdef long long *tmp
    cdef long long *bas
    cdef bint overflow = False
    if denom > LIMIT:
        return _kernels_py.simplex_iterate(rows, basis, denom, enter_limit)
    buf = <long long *> malloc((2 * nrows * ncols + nrows) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    tmp = buf + nrows * ncols
    bas = tmp + nrows * ncols
    try:
        if not _load(rows, buf, nrows, ncols):
            return _kernels_py.simplex_iterate(rows, basis, denom, enter_limit)
        for i in range(nrows - 1):
            bas[i] = basis[i]
        d = denom
        while True:
            enter = -1
            for j in range(enter_limit):
                if buf[j] < 0:
                    enter = j
                    break
            if enter < 0:
                status = OPTIMAL
                break
            leave = -1
            best_num = 0
            best_den = 0
            for i in range(1, nrows):
                a = buf[i * ncols + enter]
                if a <= 0:
                    continue
                b = buf[i * ncols + rhs]
                if leave < 0:
                    leave = i
                    best_num = b
                    best_den = a
                    continue
                if mul_overflow(b, best_den, &x1) or mul_overflow(best_num, a, &x2):
                    overflow = True
                    break
                if x1 < x2 or (x1 == x2 and bas[i - 1] < bas[leave - 1]):
                    leave = i
                    best_num = b
                    best_den = a
            if overflow:
                break
            if leave < 0:
                status = UNBOUNDED
                break
            if _pivot_c(buf, nrows, ncols, leave, enter, d, tmp, &d):
                overflow = True
                break
            bas[leave - 1] = enter
        _store(rows, buf, nrows, ncols)
        for i in range(nrows - 1):
            basis[i] = bas[i]
        if overflow:
            return _kernels_py.simplex_iterate(rows, basis, d, enter_limit)
        return status, d
    finally:
        free(buf)


def integer_rank(rows, Py_ssize_t ncols):
    cdef list work = [list(r) for r in rows if any(r)]
    cdef Py_ssize_t nrows = len(work)
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef long long prev = 1, p, f, a, b, s
    cdef long long *buf
    cdef long long *tmp
    cdef bint overflow = False
    if nrows == 0 or ncols == 0:
        return 0
    buf = <long long *> malloc(2 * nrows * ncols * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    tmp = buf + nrows * ncols
    try:
        if not _load(work, buf, nrows, ncols):
            return _kernels_py.bareiss_rank(work, ncols, 0, 0, 1)
        for col in range(ncols):
            if rank == nrows:
                break
            piv = -1
            for i in range(rank, nrows):
                if buf[i * ncols + col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(ncols):
                    a = buf[rank * ncols + j]
                    buf[rank * ncols + j] = buf[piv * ncols + j]
                    buf[piv * ncols + j] = a
            p = buf[rank * ncols + col]
            # eliminate into tmp so an overflow leaves buf at a clean column boundary
            for i in range(rank + 1, nrows):
                f = buf[i * ncols + col]
                for j in range(col, ncols):
                    if mul_overflow(buf[i * ncols + j], p, &a) or \
                            mul_overflow(f, buf[rank * ncols + j], &b) or \
                            sub_overflow(a, b, &s):
                        overflow = True
                        break
                    tmp[i * ncols + j] = _floordiv(s, prev)
                if overflow:
                    break
            if overflow:
                _store(work, buf, nrows, ncols)
                return _kernels_py.bareiss_rank(work, ncols, rank, col, prev)
            for i in range(rank + 1, nrows):
                for j in range(col, ncols):
                    buf[i * ncols + j] = tmp[i * ncols + j]
            prev = p
            rank += 1
        return rank
    finally:
        free(buf)

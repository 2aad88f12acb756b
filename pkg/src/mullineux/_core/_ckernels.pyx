# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Function-for-function mirror of mullineux._core._pykernels; see that module
for the semantics.  Partitions and beta-sets cross the boundary as tuples
and are unpacked into C int arrays internally.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef inline int cmod(int x, int e) nogil:
    cdef int m = x % e
    return m + e if m < 0 else m


cdef int* _alloc(Py_ssize_t count) except NULL:
    cdef int* buf = <int*> PyMem_Malloc(count * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _unpack(tuple seq, int* buf):
    cdef Py_ssize_t i
    for i in range(len(seq)):
        buf[i] = <int> seq[i]


cdef tuple _pack(int* buf, Py_ssize_t count):
    cdef Py_ssize_t i
    return tuple([buf[i] for i in range(count)])


cdef void _good_rows_c(int* parts, int r, int j, int e, int* add_row, int* rem_row) nogil:
    # one bottom-up scan; the pair (is_add, row) stack is reduced on the fly
    cdef int a, row_len, sp = 0
    cdef int stack_add[2050]
    cdef int stack_row[2050]
    for a in range(r + 1, 0, -1):
        row_len = parts[a - 1] if a <= r else 0
        if a > r or a == 1 or parts[a - 2] > row_len:
            if cmod(row_len + 1 - a, e) == j:
                if sp > 0 and stack_add[sp - 1] == 0:
                    sp -= 1
                else:
                    stack_add[sp] = 1
                    stack_row[sp] = a
                    sp += 1
        if a <= r and (a == r or row_len > parts[a]):
            if cmod(row_len - a, e) == j:
                stack_add[sp] = 0
                stack_row[sp] = a
                sp += 1
    add_row[0] = 0
    rem_row[0] = 0
    cdef int i
    for i in range(sp):
        if stack_add[i]:
            add_row[0] = stack_row[i]
        else:
            rem_row[0] = stack_row[i]
            break


# the fixed-size stacks above cap the supported number of parts
MAX_ROWS = 2048


cdef int _check_rows(Py_ssize_t r) except -1:
    if r > 2048:
        raise ValueError("partition has more than 2048 parts")
    return 0


cdef int _check_modulus(int e) except -1:
    # keeps a bad modulus from reaching the C remainder
    if e < 1:
        raise ValueError(f"modulus must be >= 1, got {e}")
    return 0


def good_rows(tuple parts, int j, int e):
    """Rows of the good addable and good removable j-node, 0 when absent."""
    _check_modulus(e)
    cdef Py_ssize_t r = len(parts)
    _check_rows(r)
    cdef int* buf = NULL
    cdef int add_row = 0, rem_row = 0
    try:
        buf = _alloc(r + 1)
        _unpack(parts, buf)
        _good_rows_c(buf, <int> r, j, e, &add_row, &rem_row)
    finally:
        PyMem_Free(buf)
    return add_row, rem_row


def f_tilde(tuple parts, int j, int e):
    """Add the good addable j-node, or None when there is none."""
    cdef int a, _rem
    a, _rem = good_rows(parts, j, e)
    if a == 0:
        return None
    if a == len(parts) + 1:
        return parts + (1,)
    return parts[: a - 1] + (parts[a - 1] + 1,) + parts[a:]


def e_tilde(tuple parts, int j, int e):
    """Remove the good removable j-node, or None when there is none."""
    cdef int _add, a
    _add, a = good_rows(parts, j, e)
    if a == 0:
        return None
    if parts[a - 1] == 1:
        return parts[:-1]
    return parts[: a - 1] + (parts[a - 1] - 1,) + parts[a:]


cdef int _strip_c(int* cur, int r, int e, int* out) nogil:
    """Strip to empty, writing residues in removal order; -1 when stalled."""
    cdef int count = 0, j, a, rem_row, add_row
    while r > 0:
        for j in range(e):
            _good_rows_c(cur, r, j, e, &add_row, &rem_row)
            if rem_row > 0:
                if cur[rem_row - 1] == 1:
                    r -= 1
                else:
                    cur[rem_row - 1] -= 1
                out[count] = j
                count += 1
                break
        else:
            return -1
    return count


def strip_residues(tuple parts, int e):
    """Residues removed on the way down to (), or None if not e-regular."""
    _check_modulus(e)
    cdef Py_ssize_t r = len(parts)
    _check_rows(r)
    cdef int n = 0
    for p in parts:
        n += <int> p
    cdef int* buf = NULL
    cdef int* out = NULL
    cdef int count
    try:
        buf = _alloc(r + 1)
        out = _alloc(n + 1)
        _unpack(parts, buf)
        count = _strip_c(buf, <int> r, e, out)
        if count < 0:
            return None
        return _pack(out, count)
    finally:
        PyMem_Free(out)
        PyMem_Free(buf)


cdef int _replay_c(int* residues, int n, int e, int* cur) nogil:
    """Apply the lowering move per residue from the empty partition.

    cur must have room for n rows; returns the row count, or -1 when a step
    is undefined.
    """
    cdef int r = 0, i, a, add_row, rem_row
    for i in range(n):
        _good_rows_c(cur, r, residues[i], e, &add_row, &rem_row)
        if add_row == 0:
            return -1
        if add_row == r + 1:
            cur[r] = 1
            r += 1
        else:
            cur[add_row - 1] += 1
    return r


def replay(tuple residues, int e):
    """Replay f_tilde along residues (first entry applied first) from ()."""
    _check_modulus(e)
    cdef Py_ssize_t n = len(residues)
    _check_rows(n)
    cdef int* res = NULL
    cdef int* cur = NULL
    cdef int r
    try:
        res = _alloc(n + 1)
        cur = _alloc(n + 1)
        _unpack(residues, res)
        r = _replay_c(res, <int> n, e, cur)
        if r < 0:
            return None
        return _pack(cur, r)
    finally:
        PyMem_Free(cur)
        PyMem_Free(res)


def mullineux(tuple parts, int e):
    """Mullineux image via path negation, or None if parts is not e-regular."""
    _check_modulus(e)
    cdef Py_ssize_t r = len(parts)
    _check_rows(r)
    cdef int n = 0
    for p in parts:
        n += <int> p
    _check_rows(n)
    cdef int* buf = NULL
    cdef int* strip = NULL
    cdef int* neg = NULL
    cdef int* cur = NULL
    cdef int count, i, rows
    try:
        buf = _alloc(r + 1)
        strip = _alloc(n + 1)
        neg = _alloc(n + 1)
        cur = _alloc(n + 1)
        _unpack(parts, buf)
        count = _strip_c(buf, <int> r, e, strip)
        if count < 0:
            return None
        for i in range(count):
            neg[i] = cmod(-strip[count - 1 - i], e)
        rows = _replay_c(neg, count, e, cur)
        if rows < 0:
            return None
        return _pack(cur, rows)
    finally:
        PyMem_Free(cur)
        PyMem_Free(neg)
        PyMem_Free(strip)
        PyMem_Free(buf)


cdef void _sort_ints(int* buf, int count) nogil:
    # insertion sort; the matched images are near-sorted and small
    cdef int i, j, v
    for i in range(1, count):
        v = buf[i]
        j = i - 1
        while j >= 0 and buf[j] > v:
            buf[j + 1] = buf[j]
            j -= 1
        buf[j + 1] = v


def psi_step(int e, tuple x1, tuple x2):
    """Forward beta-set step; see the pure twin for the matching rule."""
    cdef Py_ssize_t m1 = len(x1), m2 = len(x2)
    if m1 > m2:
        raise ValueError("psi_step needs |x1| <= |x2|")
    cdef int* a1 = NULL
    cdef int* a2 = NULL
    cdef char* taken = NULL
    cdef int* y1 = NULL
    cdef int* rest = NULL
    cdef int i, t, lo, hi, mid, idx, nrest
    try:
        a1 = _alloc(m1 + 1)
        a2 = _alloc(m2 + 1)
        y1 = _alloc(m1 + 1)
        rest = _alloc(m2 + 1)
        taken = <char*> PyMem_Malloc(m2 + 1)
        if taken == NULL:
            raise MemoryError()
        _unpack(x1, a1)
        _unpack(x2, a2)
        for i in range(m2):
            taken[i] = 0
        for t in range(m1):
            # rightmost index with value <= a1[t]
            lo = 0
            hi = <int> m2  # first index with value > a1[t]
            while lo < hi:
                mid = (lo + hi) // 2
                if a2[mid] <= a1[t]:
                    lo = mid + 1
                else:
                    hi = mid
            idx = lo - 1
            while idx >= 0 and taken[idx]:
                idx -= 1
            if idx < 0:
                idx = <int> m2 - 1
                while taken[idx]:
                    idx -= 1
            taken[idx] = 1
            y1[t] = a2[idx]
        _sort_ints(y1, <int> m1)
        nrest = 0
        for i in range(m2):
            if not taken[i]:
                rest[nrest] = a2[i]
                nrest += 1
        # y2 = staircase, then merge of (x1 + e) and (unmatched x2 + e)
        out2 = []
        for i in range(e):
            out2.append(i)
        lo = 0
        hi = 0
        while lo < m1 or hi < nrest:
            if hi >= nrest or (lo < m1 and a1[lo] <= rest[hi]):
                out2.append(a1[lo] + e)
                lo += 1
            else:
                out2.append(rest[hi] + e)
                hi += 1
        return _pack(y1, m1), tuple(out2)
    finally:
        PyMem_Free(rest)
        PyMem_Free(y1)
        PyMem_Free(taken)
        PyMem_Free(a2)
        PyMem_Free(a1)


def psi_step_inverse(int e, tuple y1, tuple y2):
    """Inverse beta-set step; y2 must start with the staircase 0..e-1."""
    cdef Py_ssize_t m1 = len(y1), m2p = len(y2) - e
    if m1 > m2p:
        raise ValueError("psi_step_inverse needs |y1| <= |y2| - e")
    cdef int* a1 = NULL
    cdef int* a2 = NULL
    cdef char* taken = NULL
    cdef int* x1 = NULL
    cdef int* rest = NULL
    cdef int i, t, lo, hi, mid, idx, nrest
    try:
        a1 = _alloc(m1 + 1)
        a2 = _alloc(m2p + 1)
        x1 = _alloc(m1 + 1)
        rest = _alloc(m2p + 1)
        taken = <char*> PyMem_Malloc(m2p + 1)
        if taken == NULL:
            raise MemoryError()
        _unpack(y1, a1)
        for i in range(m2p):
            a2[i] = <int> y2[e + i] - e
        for i in range(m2p):
            taken[i] = 0
        for t in range(m1):
            # leftmost index with value >= a1[t]
            lo = 0
            hi = <int> m2p
            while lo < hi:
                mid = (lo + hi) // 2
                if a2[mid] < a1[t]:
                    lo = mid + 1
                else:
                    hi = mid
            idx = lo
            while idx < m2p and taken[idx]:
                idx += 1
            if idx == m2p:
                idx = 0
                while taken[idx]:
                    idx += 1
            taken[idx] = 1
            x1[t] = a2[idx]
        _sort_ints(x1, <int> m1)
        nrest = 0
        for i in range(m2p):
            if not taken[i]:
                rest[nrest] = a2[i]
                nrest += 1
        # x2 = merge of y1 and the unmatched remainder
        out2 = []
        lo = 0
        hi = 0
        while lo < m1 or hi < nrest:
            if hi >= nrest or (lo < m1 and a1[lo] <= rest[hi]):
                out2.append(a1[lo])
                lo += 1
            else:
                out2.append(rest[hi])
                hi += 1
        return _pack(x1, m1), tuple(out2)
    finally:
        PyMem_Free(rest)
        PyMem_Free(x1)
        PyMem_Free(taken)
        PyMem_Free(a2)
        PyMem_Free(a1)

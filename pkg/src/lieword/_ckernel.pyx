# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel: same contract as lieword._pykernel, built for speed.

All three functions are exact.  Window dedup hashes are verified with
memcmp before a window is treated as a repeat, and the prefix-Lie profile
answers factor-membership queries from an online suffix automaton instead
of hashing rotation strings.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy, memset

NAME = "c"


def border_array(bytes data):
    """Longest proper border of every prefix: b[i] for data[:i+1] (KMP failure)."""
    cdef const unsigned char* s = data
    cdef Py_ssize_t m = len(data)
    cdef list out = [0] * m
    if m == 0:
        return out
    cdef Py_ssize_t* b = <Py_ssize_t*> malloc(m * sizeof(Py_ssize_t))
    if b == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, k = 0
    b[0] = 0
    for i in range(1, m):
        while k > 0 and s[i] != s[k]:
            k = b[k - 1]
        if s[i] == s[k]:
            k += 1
        b[i] = k
    for i in range(m):
        out[i] = b[i]
    free(b)
    return out


def unique_window_starts(bytes data, Py_ssize_t n):
    """Start offsets of the first occurrence of each distinct length-n window.

    Offsets are 0-based and returned in order of first occurrence.
    Requires 1 <= n <= len(data).
    """
    cdef Py_ssize_t total = len(data)
    if n < 1 or n > total:
        raise ValueError("window length out of range")
    cdef const unsigned char* s = data
    cdef Py_ssize_t count = total - n + 1
    cdef Py_ssize_t tsize = 1
    while tsize < 2 * count:
        tsize <<= 1
    cdef Py_ssize_t mask = tsize - 1
    cdef Py_ssize_t* slot_start = <Py_ssize_t*> malloc(tsize * sizeof(Py_ssize_t))
    cdef unsigned long long* slot_hash = <unsigned long long*> malloc(
        tsize * sizeof(unsigned long long))
    if slot_start == NULL or slot_hash == NULL:
        free(slot_start)
        free(slot_hash)
        raise MemoryError()
    memset(slot_start, 0xFF, tsize * sizeof(Py_ssize_t))  # all -1

    cdef unsigned long long BASE = 1099511628211ULL
    cdef unsigned long long h = 0, top = 1
    cdef Py_ssize_t i, j, idx
    cdef bint dup
    for i in range(n):
        h = h * BASE + s[i]
        if i:
            top *= BASE  # BASE ** (n-1)

    out = []
    i = 0
    while True:
        idx = <Py_ssize_t> (h & <unsigned long long> mask)
        dup = False
        while slot_start[idx] != -1:
            j = slot_start[idx]
            if slot_hash[idx] == h and memcmp(s + j, s + i, n) == 0:
                dup = True
                break
            idx = (idx + 1) & mask
        if not dup:
            slot_start[idx] = i
            slot_hash[idx] = h
            out.append(i)
        if i == count - 1:
            break
        h = (h - s[i] * top) * BASE + s[i + n]
        i += 1

    free(slot_start)
    free(slot_hash)
    return out


cdef struct Sam:
    # suffix automaton over a fixed alphabet of width acount
    Py_ssize_t* length
    Py_ssize_t* link
    Py_ssize_t* trans   # trans[state * acount + symbol], -1 when absent
    Py_ssize_t acount
    Py_ssize_t size
    Py_ssize_t last


cdef int sam_init(Sam* sam, Py_ssize_t max_states, Py_ssize_t acount) except -1:
    sam.acount = acount
    sam.length = <Py_ssize_t*> malloc(max_states * sizeof(Py_ssize_t))
    sam.link = <Py_ssize_t*> malloc(max_states * sizeof(Py_ssize_t))
    sam.trans = <Py_ssize_t*> malloc(max_states * acount * sizeof(Py_ssize_t))
    if sam.length == NULL or sam.link == NULL or sam.trans == NULL:
        raise MemoryError()
    memset(sam.trans, 0xFF, max_states * acount * sizeof(Py_ssize_t))
    sam.length[0] = 0
    sam.link[0] = -1
    sam.size = 1
    sam.last = 0
    return 0


cdef void sam_free(Sam* sam) noexcept:
    free(sam.length)
    free(sam.link)
    free(sam.trans)


cdef void sam_extend(Sam* sam, Py_ssize_t c) noexcept:
    cdef Py_ssize_t A = sam.acount
    cdef Py_ssize_t cur = sam.size
    sam.size += 1
    sam.length[cur] = sam.length[sam.last] + 1
    sam.link[cur] = -1
    cdef Py_ssize_t p = sam.last
    cdef Py_ssize_t q, clone
    while p != -1 and sam.trans[p * A + c] == -1:
        sam.trans[p * A + c] = cur
        p = sam.link[p]
    if p == -1:
        sam.link[cur] = 0
    else:
        q = sam.trans[p * A + c]
        if sam.length[p] + 1 == sam.length[q]:
            sam.link[cur] = q
        else:
            clone = sam.size
            sam.size += 1
            sam.length[clone] = sam.length[p] + 1
            sam.link[clone] = sam.link[q]
            memcpy(sam.trans + clone * A, sam.trans + q * A,
                   A * sizeof(Py_ssize_t))
            while p != -1 and sam.trans[p * A + c] == q:
                sam.trans[p * A + c] = clone
                p = sam.link[p]
            sam.link[q] = clone
            sam.link[cur] = clone
    sam.last = cur


def prefix_lie_profile(bytes data):
    """Counts of rotation-closed factor classes for every prefix of ``data``.

    Entry i is the number of conjugacy classes (the empty word's included)
    whose every member occurs in data[:i].  A class can only close when
    one of its members appears for the first time, and that member is then
    a suffix of the current prefix; those suffixes are exactly the ones
    longer than the automaton's last suffix link allows.
    """
    cdef const unsigned char* s = data
    cdef Py_ssize_t total = len(data)
    cdef list profile = [1]
    if total == 0:
        return profile

    cdef Py_ssize_t acount = 0
    cdef Py_ssize_t i
    for i in range(total):
        if s[i] >= acount:
            acount = s[i] + 1

    cdef Sam sam
    sam_init(&sam, 2 * total + 4, acount)

    cdef Py_ssize_t count = 1
    cdef Py_ssize_t prev_known, m, j, t, state, base
    cdef bint closed
    try:
        for i in range(1, total + 1):
            sam_extend(&sam, s[i - 1])
            prev_known = sam.length[sam.link[sam.last]]
            for m in range(prev_known + 1, i + 1):
                base = i - m
                closed = True
                for j in range(1, m):
                    # walk the rotation starting at offset j without
                    # materializing it
                    state = 0
                    for t in range(m):
                        state = sam.trans[state * acount + s[base + (j + t) % m]]
                        if state == -1:
                            break
                    if state == -1:
                        closed = False
                        break
                if closed:
                    count += 1
            profile.append(count)
    finally:
        sam_free(&sam)
    return profile

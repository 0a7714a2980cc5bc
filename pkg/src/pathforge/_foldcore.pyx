# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels for Dyck and alternating Motzkin paths.

Mirrors ``_fold_py`` exactly.  Accumulators are signed 64-bit, which is
exact for k <= K_LIMIT (worst-case sums stay below 2**63); callers fall
back to the pure backend beyond that.
"""

from libc.stdint cimport int64_t
from libc.string cimport memset

from . import _fold_py

cdef enum:
    K_CAP = 30

K_LIMIT = K_CAP


cdef struct DyckAcc:
    int64_t count
    int64_t rise[K_CAP]
    int64_t vert[K_CAP + 1]
    int64_t rise_open[K_CAP]
    int64_t vert_pair[K_CAP + 1]


cdef void _dyck_rec(int pos, int alt, int n, int k,
                    int64_t* cur_r, int64_t* cur_v, DyckAcc* acc) noexcept nogil:
    cdef int rem = n - pos
    cdef int i
    cdef int64_t x
    if rem == 0:
        acc.count += 1
        for i in range(k):
            x = cur_r[i]
            acc.rise[i] += x
            acc.rise_open[i] += x * (2 * i + 3 - x)
        for i in range(k + 1):
            x = cur_v[i]
            acc.vert[i] += x
            acc.vert_pair[i] += x * (x + 1) // 2
        return
    if alt + 1 <= rem - 1:
        cur_r[alt] += 1
        cur_v[alt + 1] += 1
        _dyck_rec(pos + 1, alt + 1, n, k, cur_r, cur_v, acc)
        cur_v[alt + 1] -= 1
        cur_r[alt] -= 1
    if alt > 0:
        cur_v[alt - 1] += 1
        _dyck_rec(pos + 1, alt - 1, n, k, cur_r, cur_v, acc)
        cur_v[alt - 1] -= 1


cdef int64_t _dyck_count_rec(int pos, int alt, int n) noexcept nogil:
    cdef int rem = n - pos
    cdef int64_t total = 0
    if rem == 0:
        return 1
    if alt + 1 <= rem - 1:
        total += _dyck_count_rec(pos + 1, alt + 1, n)
    if alt > 0:
        total += _dyck_count_rec(pos + 1, alt - 1, n)
    return total


def dyck_fold(int k, prefix=()):
    """Compiled twin of ``_fold_py.dyck_fold``."""
    if k > K_CAP:
        raise ValueError(f"compiled backend supports k <= {K_CAP}, got {k}")
    cdef int alt0 = _fold_py.check_dyck_prefix(k, prefix)
    cdef int n = 2 * k
    cdef int64_t cur_r[K_CAP + 1]
    cdef int64_t cur_v[K_CAP + 2]
    cdef DyckAcc acc
    memset(&acc, 0, sizeof(acc))
    memset(cur_r, 0, sizeof(cur_r))
    memset(cur_v, 0, sizeof(cur_v))
    cur_v[0] = 1
    cdef int alt = 0
    cdef int s
    for s in prefix:
        if s == 1:
            cur_r[alt] += 1
            alt += 1
        else:
            alt -= 1
        cur_v[alt] += 1
    cdef int pos0 = len(prefix)
    with nogil:
        _dyck_rec(pos0, alt, n, k, cur_r, cur_v, &acc)
    return (
        acc.count,
        [acc.rise[i] for i in range(k)],
        [acc.vert[i] for i in range(k + 1)],
        [acc.rise_open[i] for i in range(k)],
        [acc.vert_pair[i] for i in range(k + 1)],
    )


def dyck_count(int k, prefix=()):
    """Compiled twin of ``_fold_py.dyck_count``."""
    if k > K_CAP:
        raise ValueError(f"compiled backend supports k <= {K_CAP}, got {k}")
    cdef int alt0 = _fold_py.check_dyck_prefix(k, prefix)
    cdef int n = 2 * k
    cdef int pos0 = len(prefix)
    cdef int64_t total
    with nogil:
        total = _dyck_count_rec(pos0, alt0, n)
    return total


cdef struct AmAcc:
    int64_t cnt[K_CAP]
    int64_t rise[K_CAP * K_CAP]
    int64_t vert[(K_CAP + 1) * K_CAP]
    int64_t lev[K_CAP * K_CAP]
    int64_t wrise[K_CAP]
    int64_t wlev[K_CAP]
    int64_t rpair[K_CAP]
    int64_t lpair[K_CAP]


cdef void _am_rec(int pos, int alt, int rises, int n, int k,
                  int64_t* cur_r, int64_t* cur_v, int64_t* cur_l,
                  AmAcc* acc) noexcept nogil:
    cdef int i, s, odds_after
    cdef int64_t x, y, wr, wl, rp, lp
    if pos == n:
        acc.cnt[rises] += 1
        wr = wl = rp = lp = 0
        for i in range(k):
            x = cur_r[i]
            y = cur_l[i]
            acc.rise[i * k + rises] += x
            acc.lev[i * k + rises] += y
            wr += (i + 1) * x
            wl += i * y
            rp += x * (x - 1) // 2
            lp += y * (y - 1) // 2
        for i in range(k + 1):
            acc.vert[i * k + rises] += cur_v[i]
        acc.wrise[rises] += wr
        acc.wlev[rises] += wl
        acc.rpair[rises] += rp
        acc.lpair[rises] += lp
        return
    s = pos + 1
    # odd integers in [s+1, n]
    odds_after = (n + 1) // 2 - (s + 1) // 2
    if alt <= odds_after:
        if s % 2 == 0:
            cur_l[alt] += 1
        cur_v[alt] += 1
        _am_rec(pos + 1, alt, rises, n, k, cur_r, cur_v, cur_l, acc)
        cur_v[alt] -= 1
        if s % 2 == 0:
            cur_l[alt] -= 1
    if s % 2 == 0:
        if alt + 1 <= odds_after:
            cur_r[alt] += 1
            cur_v[alt + 1] += 1
            _am_rec(pos + 1, alt + 1, rises + 1, n, k, cur_r, cur_v, cur_l, acc)
            cur_v[alt + 1] -= 1
            cur_r[alt] -= 1
    elif alt > 0:
        cur_v[alt - 1] += 1
        _am_rec(pos + 1, alt - 1, rises, n, k, cur_r, cur_v, cur_l, acc)
        cur_v[alt - 1] -= 1


cdef int64_t _am_count_rec(int pos, int alt, int n) noexcept nogil:
    cdef int s, odds_after
    cdef int64_t total = 0
    if pos == n:
        return 1
    s = pos + 1
    odds_after = (n + 1) // 2 - (s + 1) // 2
    if alt <= odds_after:
        total += _am_count_rec(pos + 1, alt, n)
    if s % 2 == 0:
        if alt + 1 <= odds_after:
            total += _am_count_rec(pos + 1, alt + 1, n)
    elif alt > 0:
        total += _am_count_rec(pos + 1, alt - 1, n)
    return total


def alt_motzkin_fold(int k, prefix=()):
    """Compiled twin of ``_fold_py.alt_motzkin_fold``."""
    if k > K_CAP:
        raise ValueError(f"compiled backend supports k <= {K_CAP}, got {k}")
    if k == 0:
        return _fold_py.alt_motzkin_fold(k, prefix)
    cdef int alt0 = _fold_py.check_alt_motzkin_prefix(k, prefix)
    cdef int n = 2 * k
    cdef int64_t cur_r[K_CAP + 1]
    cdef int64_t cur_v[K_CAP + 2]
    cdef int64_t cur_l[K_CAP + 1]
    cdef AmAcc acc
    memset(&acc, 0, sizeof(acc))
    memset(cur_r, 0, sizeof(cur_r))
    memset(cur_v, 0, sizeof(cur_v))
    memset(cur_l, 0, sizeof(cur_l))
    cur_v[0] = 1
    cdef int alt = 0
    cdef int rises = 0
    cdef int pos = 0
    cdef int s
    for s in prefix:
        if s == 1:
            cur_r[alt] += 1
            alt += 1
            rises += 1
        elif s == -1:
            alt -= 1
        elif (pos + 1) % 2 == 0:
            cur_l[alt] += 1
        cur_v[alt] += 1
        pos += 1
    with nogil:
        _am_rec(pos, alt, rises, n, k, cur_r, cur_v, cur_l, &acc)
    counts = [acc.cnt[r] for r in range(k)]
    rise = [[acc.rise[i * k + r] for r in range(k)] for i in range(k)]
    vert = [[acc.vert[i * k + r] for r in range(k)] for i in range(k + 1)]
    lev = [[acc.lev[i * k + r] for r in range(k)] for i in range(k)]
    wrise = [acc.wrise[r] for r in range(k)]
    wlev = [acc.wlev[r] for r in range(k)]
    rpair = [acc.rpair[r] for r in range(k)]
    lpair = [acc.lpair[r] for r in range(k)]
    return counts, rise, vert, lev, wrise, wlev, rpair, lpair


def alt_motzkin_count(int k, prefix=()):
    """Compiled twin of ``_fold_py.alt_motzkin_count``."""
    if k > K_CAP:
        raise ValueError(f"compiled backend supports k <= {K_CAP}, got {k}")
    cdef int alt0 = _fold_py.check_alt_motzkin_prefix(k, prefix)
    cdef int n = 2 * k
    cdef int pos0 = len(prefix)
    cdef int64_t total
    with nogil:
        total = _am_count_rec(pos0, alt0, n)
    return total

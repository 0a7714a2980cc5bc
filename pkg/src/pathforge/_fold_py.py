"""Pure-Python enumeration kernels for Dyck and alternating Motzkin paths.

This is the fallback twin of the compiled ``_foldcore`` extension.  Both
expose the same four entry points (``dyck_count``, ``dyck_fold``,
``alt_motzkin_count``, ``alt_motzkin_fold``) and must return identical
values; the test suite enforces the equivalence.

Steps are encoded as ints: +1 rise, -1 fall, 0 level.  Step positions are
1-based when parity matters (rises on even steps, falls on odd steps).
"""

from __future__ import annotations

from typing import Iterator, Sequence

RISE = 1
FALL = -1
LEVEL = 0

# No accumulator-width limit in pure Python.
K_LIMIT = None


def _odds_in(a: int, b: int) -> int:
    # number of odd integers in [a, b]
    return (b + 1) // 2 - a // 2 if b >= a else 0


def check_dyck_prefix(k: int, prefix: Sequence[int]) -> int:
    """Validate a Dyck prefix for paths of length 2k; return its altitude."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    n = 2 * k
    if len(prefix) > n:
        raise ValueError(f"prefix longer than path: {len(prefix)} > {n}")
    alt = 0
    for pos, s in enumerate(prefix, start=1):
        if s not in (RISE, FALL):
            raise ValueError(f"invalid Dyck step {s!r} at step {pos}")
        alt += s
        if alt < 0:
            raise ValueError(f"prefix dips below zero at step {pos}")
    if alt > n - len(prefix):
        raise ValueError("prefix cannot return to zero")
    return alt


def check_alt_motzkin_prefix(k: int, prefix: Sequence[int]) -> int:
    """Validate an alternating Motzkin prefix; return its altitude."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    n = 2 * k
    if len(prefix) > n:
        raise ValueError(f"prefix longer than path: {len(prefix)} > {n}")
    alt = 0
    for pos, s in enumerate(prefix, start=1):
        if s == RISE and pos % 2 != 0:
            raise ValueError(f"rise on odd step {pos}")
        if s == FALL and pos % 2 != 1:
            raise ValueError(f"fall on even step {pos}")
        if s not in (RISE, FALL, LEVEL):
            raise ValueError(f"invalid step {s!r} at step {pos}")
        alt += s
        if alt < 0:
            raise ValueError(f"prefix dips below zero at step {pos}")
    if alt > _odds_in(len(prefix) + 1, n):
        raise ValueError("prefix cannot return to zero under the alternation rule")
    return alt


def dyck_steps(k: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Yield every Dyck step sequence of length 2k extending ``prefix``,
    in lexicographic order with rise < fall."""
    alt0 = check_dyck_prefix(k, prefix)
    n = 2 * k
    steps = list(prefix)

    def rec(pos: int, alt: int):
        if pos == n:
            yield tuple(steps)
            return
        rem = n - pos
        if alt + 1 <= rem - 1:
            steps.append(RISE)
            yield from rec(pos + 1, alt + 1)
            steps.pop()
        if alt > 0:
            steps.append(FALL)
            yield from rec(pos + 1, alt - 1)
            steps.pop()

    return rec(len(prefix), alt0)


def alt_motzkin_steps(k: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Yield every alternating Motzkin step sequence of length 2k extending
    ``prefix``, in lexicographic order with level < rise and level < fall."""
    alt0 = check_alt_motzkin_prefix(k, prefix)
    n = 2 * k
    steps = list(prefix)

    def rec(pos: int, alt: int):
        if pos == n:
            yield tuple(steps)
            return
        s = pos + 1
        odds_after = _odds_in(s + 1, n)
        if alt <= odds_after:
            steps.append(LEVEL)
            yield from rec(pos + 1, alt)
            steps.pop()
        if s % 2 == 0:
            if alt + 1 <= odds_after:
                steps.append(RISE)
                yield from rec(pos + 1, alt + 1)
                steps.pop()
        elif alt > 0:
            steps.append(FALL)
            yield from rec(pos + 1, alt - 1)
            steps.pop()

    return rec(len(prefix), alt0)


def dyck_prefixes(k: int, depth: int) -> list[tuple[int, ...]]:
    """All completable Dyck prefixes of exactly ``depth`` steps."""
    if not 0 <= depth <= 2 * k:
        raise ValueError(f"depth must be in [0, {2 * k}], got {depth}")
    out: list[tuple[int, ...]] = []
    _prefix_rec(out, [], 0, depth, lambda pos, alt: _dyck_moves(pos, alt, 2 * k))
    return out


def alt_motzkin_prefixes(k: int, depth: int) -> list[tuple[int, ...]]:
    """All completable alternating Motzkin prefixes of exactly ``depth`` steps."""
    if not 0 <= depth <= 2 * k:
        raise ValueError(f"depth must be in [0, {2 * k}], got {depth}")
    out: list[tuple[int, ...]] = []
    _prefix_rec(out, [], 0, depth, lambda pos, alt: _am_moves(pos, alt, 2 * k))
    return out


def _dyck_moves(pos, alt, n):
    rem = n - pos
    moves = []
    if alt + 1 <= rem - 1:
        moves.append(RISE)
    if alt > 0:
        moves.append(FALL)
    return moves


def _am_moves(pos, alt, n):
    s = pos + 1
    odds_after = _odds_in(s + 1, n)
    moves = []
    if alt <= odds_after:
        moves.append(LEVEL)
    if s % 2 == 0:
        if alt + 1 <= odds_after:
            moves.append(RISE)
    elif alt > 0:
        moves.append(FALL)
    return moves


def _prefix_rec(out, steps, alt, depth, moves_at):
    if len(steps) == depth:
        out.append(tuple(steps))
        return
    for mv in moves_at(len(steps), alt):
        steps.append(mv)
        _prefix_rec(out, steps, alt + mv, depth, moves_at)
        steps.pop()


def dyck_count(k: int, prefix: Sequence[int] = ()) -> int:
    """Number of Dyck paths of length 2k extending ``prefix``."""
    return sum(1 for _ in dyck_steps(k, prefix))


def alt_motzkin_count(k: int, prefix: Sequence[int] = ()) -> int:
    """Number of alternating Motzkin paths of length 2k extending ``prefix``."""
    return sum(1 for _ in alt_motzkin_steps(k, prefix))


def dyck_fold(k: int, prefix: Sequence[int] = ()):
    """Accumulate per-altitude statistics over all Dyck paths of length 2k
    extending ``prefix``.

    Returns (count, rise_sums, vertex_sums, rise_open_sums, vertex_pair_sums)
    where, summed over paths, rise_sums[i] adds R_i, vertex_sums[i] adds V_i,
    rise_open_sums[i] adds R_i*(2i+3-R_i) and vertex_pair_sums[i] adds
    C(V_i+1, 2).
    """
    alt0 = check_dyck_prefix(k, prefix)
    n = 2 * k
    cur_r = [0] * (k + 1)
    cur_v = [0] * (k + 1)
    cur_v[0] = 1
    alt = 0
    for s in prefix:
        if s == RISE:
            cur_r[alt] += 1
            alt += 1
        else:
            alt -= 1
        cur_v[alt] += 1
    assert alt == alt0

    count = 0
    rise = [0] * k
    vert = [0] * (k + 1)
    rise_open = [0] * k
    vert_pair = [0] * (k + 1)

    def rec(pos: int, alt: int):
        nonlocal count
        if pos == n:
            count += 1
            for i in range(k):
                x = cur_r[i]
                rise[i] += x
                rise_open[i] += x * (2 * i + 3 - x)
            for i in range(k + 1):
                x = cur_v[i]
                vert[i] += x
                vert_pair[i] += x * (x + 1) // 2
            return
        rem = n - pos
        if alt + 1 <= rem - 1:
            cur_r[alt] += 1
            cur_v[alt + 1] += 1
            rec(pos + 1, alt + 1)
            cur_v[alt + 1] -= 1
            cur_r[alt] -= 1
        if alt > 0:
            cur_v[alt - 1] += 1
            rec(pos + 1, alt - 1)
            cur_v[alt - 1] -= 1

    rec(len(prefix), alt0)
    return count, rise, vert, rise_open, vert_pair


def alt_motzkin_fold(k: int, prefix: Sequence[int] = ()):
    """Accumulate rise-count-resolved statistics over all alternating Motzkin
    paths of length 2k extending ``prefix``.

    Returns (counts_by_rises, rise_sums, vertex_sums, level_sums,
    weighted_rise_sums, weighted_level_sums, rise_pair_sums, level_pair_sums).
    Matrix entries are indexed [altitude][rises]; level statistics count only
    even-step level steps.  The scalar-by-rises vectors add, per path,
    sum_i (i+1)*R_i, sum_i i*L_i, sum_i C(R_i, 2) and sum_i C(L_i, 2).
    """
    alt0 = check_alt_motzkin_prefix(k, prefix)
    n = 2 * k
    nr = max(k, 1)
    cur_r = [0] * (k + 1)
    cur_v = [0] * (k + 1)
    cur_l = [0] * (k + 1)
    cur_v[0] = 1
    alt = 0
    rises0 = 0
    for pos, s in enumerate(prefix):
        if s == RISE:
            cur_r[alt] += 1
            alt += 1
            rises0 += 1
        elif s == FALL:
            alt -= 1
        elif (pos + 1) % 2 == 0:
            cur_l[alt] += 1
        cur_v[alt] += 1
    assert alt == alt0

    counts = [0] * nr
    rise = [[0] * nr for _ in range(k)]
    vert = [[0] * nr for _ in range(k + 1)]
    lev = [[0] * nr for _ in range(k)]
    wrise = [0] * nr
    wlev = [0] * nr
    rpair = [0] * nr
    lpair = [0] * nr

    def rec(pos: int, alt: int, rises: int):
        if pos == n:
            counts[rises] += 1
            wr = wl = rp = lp = 0
            for i in range(k):
                x = cur_r[i]
                y = cur_l[i]
                rise[i][rises] += x
                lev[i][rises] += y
                wr += (i + 1) * x
                wl += i * y
                rp += x * (x - 1) // 2
                lp += y * (y - 1) // 2
            for i in range(k + 1):
                vert[i][rises] += cur_v[i]
            wrise[rises] += wr
            wlev[rises] += wl
            rpair[rises] += rp
            lpair[rises] += lp
            return
        s = pos + 1
        odds_after = _odds_in(s + 1, n)
        if alt <= odds_after:
            if s % 2 == 0:
                cur_l[alt] += 1
            cur_v[alt] += 1
            rec(pos + 1, alt, rises)
            cur_v[alt] -= 1
            if s % 2 == 0:
                cur_l[alt] -= 1
        if s % 2 == 0:
            if alt + 1 <= odds_after:
                cur_r[alt] += 1
                cur_v[alt + 1] += 1
                rec(pos + 1, alt + 1, rises + 1)
                cur_v[alt + 1] -= 1
                cur_r[alt] -= 1
        elif alt > 0:
            cur_v[alt - 1] += 1
            rec(pos + 1, alt - 1, rises)
            cur_v[alt - 1] -= 1

    rec(len(prefix), alt0, rises0)
    return counts, rise, vert, lev, wrise, wlev, rpair, lpair

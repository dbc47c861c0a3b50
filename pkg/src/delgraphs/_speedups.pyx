# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: exact slack-LP simplex over gmpy2 rationals and the
placement-sampling sweep over C integers.

Mirrors ``_pure`` operation-for-operation: identical pivot rule, identical
random streams, identical results.  gmpy2 supplies exact rationals with C
internals; the sampling sweep runs entirely on 128-bit integers whenever
the input magnitudes allow (checked up front), otherwise it defers to the
pure kernel for exactness.
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    ctypedef long long int128 "__int128"

from fractions import Fraction

from gmpy2 import mpq

BACKEND_NAME = "compiled"


class LPError(RuntimeError):
    pass


def solve_slack_lp(int dim, rows):
    """See _pure.solve_slack_lp; same contract, mpq arithmetic."""
    cdef int nvar = 2 * dim + 1
    cdef int s_id = 2 * dim
    cdef int m, i, j, r, e, ncols
    cdef list tab = [], rhs = [], nonbasic, basic, row, other, obj

    zero = mpq(0)
    one = mpq(1)
    for a, b, sigma in rows:
        row = [mpq(c) for c in a]
        row += [-row[j] for j in range(dim)]
        row.append(mpq(sigma))
        tab.append(row)
        rhs.append(mpq(b))
    cap = [zero] * nvar
    cap[s_id] = one
    tab.append(cap)
    rhs.append(one)

    m = len(tab)
    nonbasic = list(range(nvar))
    basic = [nvar + i for i in range(m)]

    def pivot(int r, int e):
        cdef int i, j, ncols
        cdef list row, other
        piv = (<list>tab[r])[e]
        inv = one / piv
        row = <list>tab[r]
        ncols = len(row)
        for j in range(ncols):
            row[j] = row[j] * inv
        row[e] = inv
        rhs[r] = rhs[r] * inv
        for i in range(len(tab)):
            if i == r:
                continue
            other = <list>tab[i]
            f = other[e]
            if f == 0:
                continue
            for j in range(ncols):
                other[j] = other[j] - f * row[j]
            other[e] = -f * inv
            rhs[i] = rhs[i] - f * rhs[r]
        nonbasic[e], basic[r] = basic[r], nonbasic[e]

    def bland(list obj, obj0):
        cdef int e, i, j, r, nnb
        while True:
            e = -1
            e_id = None
            nnb = len(nonbasic)
            for j in range(nnb):
                if obj[j] > 0 and (e_id is None or nonbasic[j] < e_id):
                    e = j
                    e_id = nonbasic[j]
            if e < 0:
                return obj, obj0
            r = -1
            best = None
            r_id = None
            for i in range(len(tab)):
                coef = (<list>tab[i])[e]
                if coef > 0:
                    ratio = rhs[i] / coef
                    if best is None or ratio < best or (ratio == best and basic[i] < r_id):
                        best = ratio
                        r = i
                        r_id = basic[i]
            if r < 0:
                raise LPError("objective unbounded; the s <= 1 cap should prevent this")
            f = obj[e]
            pivot(r, e)
            row = <list>tab[r]
            for j in range(nnb):
                obj[j] = obj[j] - f * row[j]
            obj[e] = -f * row[e]
            obj0 = obj0 + f * rhs[r]

    cdef int worst = 0
    for i in range(1, m):
        if rhs[i] < rhs[worst]:
            worst = i
    if rhs[worst] < 0:
        aux_id = nvar + m
        for i in range(m):
            (<list>tab[i]).append(mpq(-1))
        nonbasic.append(aux_id)
        obj = [zero] * len(nonbasic)
        obj[len(obj) - 1] = mpq(-1)
        obj0 = zero
        e = len(nonbasic) - 1
        r = worst
        for i in range(m):
            if rhs[i] < rhs[r] or (rhs[i] == rhs[r] and basic[i] < basic[r]):
                r = i
        f = obj[e]
        pivot(r, e)
        row = <list>tab[r]
        for j in range(len(obj)):
            obj[j] = obj[j] - f * row[j]
        obj[e] = -f * row[e]
        obj0 = obj0 + f * rhs[r]

        obj, obj0 = bland(obj, obj0)
        if obj0 < 0:
            return False, None, None
        if aux_id in basic:
            r = basic.index(aux_id)
            e = -1
            e_id = None
            row = <list>tab[r]
            for j in range(len(nonbasic)):
                if row[j] != 0 and (e_id is None or nonbasic[j] < e_id):
                    e = j
                    e_id = nonbasic[j]
            if e < 0:
                del tab[r], rhs[r], basic[r]
            else:
                pivot(r, e)
        slot = nonbasic.index(aux_id)
        del nonbasic[slot]
        for i in range(len(tab)):
            del (<list>tab[i])[slot]

    obj = [zero] * len(nonbasic)
    obj0 = zero
    if s_id in basic:
        r = basic.index(s_id)
        obj = [-c for c in <list>tab[r]]
        obj0 = rhs[r]
    else:
        obj[nonbasic.index(s_id)] = one
    obj, obj0 = bland(obj, obj0)

    val = {}
    for i in range(len(basic)):
        val[basic[i]] = rhs[i]
    x = []
    for j in range(dim):
        q = val.get(j, zero) - val.get(dim + j, zero)
        x.append(Fraction(int(q.numerator), int(q.denominator)))
    return True, tuple(x), Fraction(int(obj0.numerator), int(obj0.denominator))


# ---------------------------------------------------------------------------
# Sampling sweep
# ---------------------------------------------------------------------------

cdef uint64_t MIX1 = <uint64_t>0x9E3779B97F4A7C15
cdef uint64_t MIX2 = <uint64_t>0xBF58476D1CE4E5B9
cdef uint64_t MIX3 = <uint64_t>0x94D049BB133111EB


cdef inline uint64_t _next_u64(uint64_t *state) noexcept nogil:
    state[0] = state[0] + MIX1
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * MIX2
    z = (z ^ (z >> 27)) * MIX3
    return z ^ (z >> 31)


cdef inline uint64_t _below(uint64_t *state, uint64_t n) noexcept nogil:
    return _next_u64(state) % n


def sample_stream_check(seed, count):
    cdef uint64_t state = <uint64_t>seed
    cdef int i
    return [_next_u64(&state) for i in range(count)]


def sample_pair_search(shape_rows, points, int i, int j, bint homothet,
                       window, trials, seed):
    """See _pure.sample_pair_search.  Uses the 128-bit integer fast path
    when a conservative magnitude bound allows, else defers to _pure."""
    cdef int64_t lox, hix, loy, hiy
    lox, hix, loy, hiy = window

    # conservative worst-case bound on any containment determinant
    bound = 0
    smax = 1
    for (ax, ay, b), _strict in shape_rows:
        smax = max(smax, abs(ax), abs(ay), abs(b))
    pmax = 1
    for px, py, pd in points:
        pmax = max(pmax, abs(px), abs(py), pd)
    wmax = max(abs(lox), abs(hix), abs(loy), abs(hiy), 1)
    bound = smax * pmax * (wmax + 1) * (1 << 14)
    if bound >= (1 << 120) or len(shape_rows) > 64 or len(points) > 64:
        from . import _pure
        return _pure.sample_pair_search(shape_rows, points, i, j, homothet,
                                        window, trials, seed)

    cdef int nrows = len(shape_rows)
    cdef int npts = len(points)
    cdef int64_t sax[64]
    cdef int64_t say[64]
    cdef int64_t sb[64]
    cdef bint sstrict[64]
    cdef int64_t ppx[64]
    cdef int64_t ppy[64]
    cdef int64_t ppd[64]
    cdef int r
    for r in range(nrows):
        (ax, ay, b), strict = shape_rows[r]
        sax[r] = ax; say[r] = ay; sb[r] = b
        sstrict[r] = bool(strict)
    for r in range(npts):
        px, py, pd = points[r]
        ppx[r] = px; ppy[r] = py; ppd[r] = pd

    cdef uint64_t state = <uint64_t>(<object>seed & ((1 << 64) - 1))
    cdef long long total = trials
    cdef long long trial
    cdef int64_t t_den, tx, ty, lam_num, lam_den, exp, mant
    cdef int k, count
    cdef bint ok
    with nogil:
        for trial in range(total):
            t_den = 1 + <int64_t>_below(&state, 32)
            tx = lox * t_den + <int64_t>_below(&state, <uint64_t>((hix - lox) * t_den + 1))
            ty = loy * t_den + <int64_t>_below(&state, <uint64_t>((hiy - loy) * t_den + 1))
            if homothet:
                exp = <int64_t>_below(&state, 8) - 4
                mant = 8 + <int64_t>_below(&state, 8)
                if exp >= 0:
                    lam_num = mant << exp
                    lam_den = 8
                else:
                    lam_num = mant
                    lam_den = 8 << (-exp)
            else:
                lam_num = 1
                lam_den = 1

            ok = True
            count = 0
            for k in range(npts):
                if _contained(nrows, sax, say, sb, sstrict,
                              ppx[k], ppy[k], ppd[k],
                              tx, ty, t_den, lam_num, lam_den):
                    if k != i and k != j:
                        ok = False
                        break
                    count += 1
                elif k == i or k == j:
                    ok = False
                    break
            if ok and count == 2:
                with gil:
                    return (int(trial), int(tx), int(ty), int(t_den),
                            int(lam_num), int(lam_den))
    return None


cdef inline bint _contained(int nrows, int64_t *sax, int64_t *say, int64_t *sb,
                            bint *sstrict, int64_t px, int64_t py, int64_t pd,
                            int64_t tx, int64_t ty, int64_t t_den,
                            int64_t lam_num, int64_t lam_den) noexcept nogil:
    cdef int r
    cdef int128 v
    for r in range(nrows):
        v = (<int128>sb[r] * lam_num * t_den * pd
             - <int128>lam_den * (<int128>sax[r] * (px * t_den - tx * pd)
                                    + <int128>say[r] * (py * t_den - ty * pd)))
        if v < 0 or (sstrict[r] and v == 0):
            return False
    return True

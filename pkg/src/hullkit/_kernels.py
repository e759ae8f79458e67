"""Compiled inner loops shared by every hull algorithm in the package.

Points travel as parallel ``xs``/``ys`` float64 arrays and are referenced
by int64 index.  Counters live in an int64 array indexed by the constants
below so the kernels can update them without touching Python objects.

The sign predicates evaluate a 2x2 determinant of coordinate differences
in floating point and accept the result when it clears a forward error
bound.  Otherwise the sign is recomputed exactly: with floating-point
expansions when the operand exponents allow it, and with ``Fraction``
arithmetic (through ``numba.objmode``) when they don't.
"""
import math
from fractions import Fraction

import numba as nb
import numpy as np

ORIENT = 0
RAYSHOOT = 1
CALLS = 2
PRUNED = 3
DEPTH = 4
N_COUNTERS = 5

_EPS = 2.0 ** -53
_ERRBOUND = (3.0 + 16.0 * _EPS) * _EPS
# below this the bound no longer covers underflow in the two products
_MIN_BOUND = 2.0 ** -900
_SPLITTER = 134217729.0  # 2**27 + 1
# scaled operands must stay under 2**_TOP_EXP and above 2**-_MAX_SPAN
_TOP_EXP = 500
_MAX_SPAN = 900

_U64_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_U64_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_U64_MIX2 = np.uint64(0x94D049BB133111EB)

_jit = nb.njit(cache=True)
# fixed signature so Python callers passing ints reuse the float64 build
_sign8 = nb.njit(nb.int64(*([nb.float64] * 8)), cache=True)


def _fraction_cross_sign(ax, ay, bx, by, cx, cy, dx, dy):
    F = Fraction
    v = (F(bx) - F(ax)) * (F(dy) - F(cy)) - (F(by) - F(ay)) * (F(dx) - F(cx))
    return (v > 0) - (v < 0)


@_jit
def _two_sum(a, b):
    x = a + b
    bv = x - a
    av = x - bv
    return x, (a - av) + (b - bv)


@_jit
def _two_diff(a, b):
    x = a - b
    bv = a - x
    av = x + bv
    return x, (a - av) + (bv - b)


@_jit
def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


@_jit
def _two_product(a, b):
    x = a * b
    ahi, alo = _split(a)
    bhi, blo = _split(b)
    err = x - ahi * bhi
    err = err - alo * bhi
    err = err - ahi * blo
    return x, alo * blo - err


@_jit
def _expansion_sign(terms):
    # grow a nonoverlapping expansion term by term; its largest component
    # carries the sign of the exact sum
    h = np.empty(terms.shape[0] + 1)
    k = 0
    for i in range(terms.shape[0]):
        q = terms[i]
        kk = 0
        for j in range(k):
            q, e = _two_sum(q, h[j])
            if e != 0.0:
                h[kk] = e
                kk += 1
        if q != 0.0:
            h[kk] = q
            kk += 1
        k = kk
    if k == 0:
        return 0
    return 1 if h[k - 1] > 0.0 else -1


@_sign8
def _exact_cross_sign(ax, ay, bx, by, cx, cy, dx, dy):
    top = -1100
    low = 1100
    vals = (ax, ay, bx, by, cx, cy, dx, dy)
    for v in vals:
        if v != 0.0:
            e = math.frexp(v)[1]
            if e > top:
                top = e
            if e < low:
                low = e
    if top == -1100:
        return 0
    if top - low <= _MAX_SPAN:
        sh = _TOP_EXP - top
        ax = math.ldexp(ax, sh)
        ay = math.ldexp(ay, sh)
        bx = math.ldexp(bx, sh)
        by = math.ldexp(by, sh)
        cx = math.ldexp(cx, sh)
        cy = math.ldexp(cy, sh)
        dx = math.ldexp(dx, sh)
        dy = math.ldexp(dy, sh)
        u1, u0 = _two_diff(bx, ax)
        v1, v0 = _two_diff(dy, cy)
        w1, w0 = _two_diff(by, ay)
        z1, z0 = _two_diff(dx, cx)
        terms = np.empty(16)
        terms[0], terms[1] = _two_product(u1, v1)
        terms[2], terms[3] = _two_product(u1, v0)
        terms[4], terms[5] = _two_product(u0, v1)
        terms[6], terms[7] = _two_product(u0, v0)
        terms[8], terms[9] = _two_product(-w1, z1)
        terms[10], terms[11] = _two_product(-w1, z0)
        terms[12], terms[13] = _two_product(-w0, z1)
        terms[14], terms[15] = _two_product(-w0, z0)
        return _expansion_sign(terms)
    with nb.objmode(res="int64"):
        res = _fraction_cross_sign(ax, ay, bx, by, cx, cy, dx, dy)
    return res


@_sign8
def cross_sign(ax, ay, bx, by, cx, cy, dx, dy):
    """Exact sign of (bx-ax)*(dy-cy) - (by-ay)*(dx-cx)."""
    t1 = (bx - ax) * (dy - cy)
    t2 = (by - ay) * (dx - cx)
    det = t1 - t2
    bound = _ERRBOUND * (abs(t1) + abs(t2))
    # NaN/inf intermediates fail every comparison and drop through
    if bound >= _MIN_BOUND:
        if det > bound:
            return 1
        if -det > bound:
            return -1
    return _exact_cross_sign(ax, ay, bx, by, cx, cy, dx, dy)


@_sign8
def dot_sign(ax, ay, bx, by, cx, cy, dx, dy):
    """Exact sign of (b-a).(d-c), via a quarter-turn of d-c."""
    return cross_sign(ax, ay, bx, by, dy, cx, cy, dx)


# --- index-based predicates -------------------------------------------------

@_jit
def orient(xs, ys, a, b, c):
    return cross_sign(xs[a], ys[a], xs[b], ys[b], xs[a], ys[a], xs[c], ys[c])


@_jit
def above_parallel(xs, ys, p, r, q, u):
    # u strictly left of the line through q with direction r - p
    return cross_sign(xs[p], ys[p], xs[r], ys[r], xs[q], ys[q], xs[u], ys[u]) > 0


@_jit
def along_cmp(xs, ys, p, r, u, v):
    # sign of along(u) - along(v) in frame p->r
    return dot_sign(xs[v], ys[v], xs[u], ys[u], xs[p], ys[p], xs[r], ys[r])


@_jit
def lex_less(xs, ys, u, v):
    return xs[u] < xs[v] or (xs[u] == xs[v] and ys[u] < ys[v])


# --- seeded streams -----------------------------------------------------------

@_jit
def mix64(z):
    z = (z ^ (z >> np.uint64(30))) * _U64_MIX1
    z = (z ^ (z >> np.uint64(27))) * _U64_MIX2
    return z ^ (z >> np.uint64(31))


@_jit
def child_id(cid, side):
    return mix64(cid ^ (np.uint64(side) * _U64_GOLDEN))


@_jit
def draw_below(state, m):
    # SplitMix64 step, then a 53-bit uniform scaled to [0, m)
    state = state + _U64_GOLDEN
    z = mix64(state)
    u = np.float64(z >> np.uint64(11)) * (1.0 / 9007199254740992.0)
    k = np.int64(u * m)
    if k >= m:
        k = m - 1
    return state, k


@_jit
def shuffle_inplace(arr, n, state):
    for i in range(n - 1, 0, -1):
        state, j = draw_below(state, i + 1)
        tmp = arr[i]
        arr[i] = arr[j]
        arr[j] = tmp
    return state


# --- RayShoot -----------------------------------------------------------------

@_jit
def tangent_right(xs, ys, anchor, side, nside, p, r, stats):
    """Member of side[:nside] maximizing the slope seen from a left anchor."""
    best = side[0]
    stats[ORIENT] += nside
    for j in range(1, nside):
        c = side[j]
        o = orient(xs, ys, anchor, best, c)
        if o > 0 or (o == 0 and along_cmp(xs, ys, p, r, c, best) > 0):
            best = c
    return best


@_jit
def tangent_left(xs, ys, anchor, side, nside, p, r, stats):
    """Member of side[:nside] minimizing the slope towards a right anchor."""
    best = side[0]
    stats[ORIENT] += nside
    for j in range(1, nside):
        c = side[j]
        o = orient(xs, ys, best, anchor, c)
        if o > 0 or (o == 0 and along_cmp(xs, ys, p, r, c, best) < 0):
            best = c
    return best


@_jit
def ray_shoot_core(xs, ys, cand, m, q, p, r, sl, sr, stats):
    s = q
    t = q
    sl[0] = q
    sr[0] = q
    nl = 1
    nr = 1
    for k in range(m):
        u = cand[k]
        stats[ORIENT] += 1
        if s == t:
            o = cross_sign(xs[p], ys[p], xs[r], ys[r], xs[s], ys[s], xs[u], ys[u])
        else:
            o = orient(xs, ys, s, t, u)
        above = o > 0
        if o == 0:
            # collinear beyond the current bridge: extend it, so bridges
            # stay maximal and never end on a non-extreme point
            above = along_cmp(xs, ys, p, r, u, s) < 0 or along_cmp(xs, ys, p, r, u, t) > 0
        side = along_cmp(xs, ys, p, r, u, q)
        if above:
            if side <= 0:
                t = tangent_right(xs, ys, u, sr, nr, p, r, stats)
                s = u
            else:
                s = tangent_left(xs, ys, u, sl, nl, p, r, stats)
                t = u
        if side <= 0:
            sl[nl] = u
            nl += 1
        if side >= 0:
            sr[nr] = u
            nr += 1
    stats[RAYSHOOT] += 1
    return s, t


@_jit
def bridge_violation(xs, ys, cand, m, p, r, s, t):
    """Index of a candidate strictly above the bridge line, or -1."""
    for k in range(m):
        u = cand[k]
        if s == t:
            bad = above_parallel(xs, ys, p, r, s, u)
        else:
            bad = orient(xs, ys, s, t, u) > 0
        if bad:
            return u
    return -1


@_jit
def ray_shoot_indices(xs, ys, cand, q, p, r, validate, stats):
    m = cand.shape[0]
    sl = np.empty(m + 1, np.int64)
    sr = np.empty(m + 1, np.int64)
    s, t = ray_shoot_core(xs, ys, cand, m, q, p, r, sl, sr, stats)
    if validate and bridge_violation(xs, ys, cand, m, p, r, s, t) >= 0:
        raise AssertionError("ray_shoot returned a bridge with a point above it")
    return s, t


# --- Quickhull drivers --------------------------------------------------------

@_jit
def farthest_scan(xs, ys, work, lo, hi, a, b, stats):
    f = work[lo]
    stats[ORIENT] += hi - lo
    for k in range(lo + 1, hi):
        u = work[k]
        c = cross_sign(xs[a], ys[a], xs[b], ys[b], xs[f], ys[f], xs[u], ys[u])
        if c > 0 or (c == 0 and lex_less(xs, ys, u, f)):
            f = u
    return f


@_jit
def extremes(xs, ys):
    p = 0
    r = 0
    for i in range(1, xs.shape[0]):
        if lex_less(xs, ys, i, p):
            p = i
        if lex_less(xs, ys, r, i):
            r = i
    return p, r


@_jit
def quickhull_kernel(xs, ys, randomized, seed, shuffle, validate, stats, log):
    """Hull vertex indices, counter-clockwise from the lexicographic minimum.

    ``log`` receives one row per recursive call:
    (a, b, pivot, s, t, size, depth) where a->b is the call's base edge.
    Returns (vertices, number of log rows).
    """
    n = xs.shape[0]
    p, r = extremes(xs, ys)
    if xs[p] == xs[r] and ys[p] == ys[r]:
        stats[PRUNED] += n - 1
        out = np.empty(1, np.int64)
        out[0] = p
        return out, 0

    work = np.empty(n, np.int64)
    scratch = np.empty(n + 2, np.int64)
    nu = 0
    nlow = 0
    for i in range(n):
        if i == p or i == r:
            continue
        stats[ORIENT] += 1
        o = orient(xs, ys, p, r, i)
        if o > 0:
            work[nu] = i
            nu += 1
        elif o < 0:
            scratch[nlow] = i
            nlow += 1
    for k in range(nlow):
        work[nu + k] = scratch[k]
    stats[PRUNED] += n - 2 - nu - nlow

    cap = 4 * n + 8
    t_kind = np.empty(cap, np.int64)
    t_a = np.empty(cap, np.int64)
    t_b = np.empty(cap, np.int64)
    t_lo = np.empty(cap, np.int64)
    t_hi = np.empty(cap, np.int64)
    t_depth = np.empty(cap, np.int64)
    t_id = np.empty(cap, np.uint64)
    top = 0
    if nlow > 0:
        t_kind[top] = 0
        t_a[top] = r
        t_b[top] = p
        t_lo[top] = nu
        t_hi[top] = nu + nlow
        t_depth[top] = 1
        t_id[top] = np.uint64(2)
        top += 1
    t_kind[top] = 1
    t_a[top] = r
    top += 1
    if nu > 0:
        t_kind[top] = 0
        t_a[top] = p
        t_b[top] = r
        t_lo[top] = 0
        t_hi[top] = nu
        t_depth[top] = 1
        t_id[top] = np.uint64(1)
        top += 1

    sl = np.empty(n + 3, np.int64)
    sr = np.empty(n + 3, np.int64)
    cand = np.empty(n + 2, np.int64)
    seed = np.uint64(seed)

    out = np.empty(n, np.int64)
    out[0] = p
    nout = 1
    nlog = 0
    while top > 0:
        top -= 1
        if t_kind[top] == 1:
            out[nout] = t_a[top]
            nout += 1
            continue
        a = t_a[top]
        b = t_b[top]
        lo = t_lo[top]
        hi = t_hi[top]
        depth = t_depth[top]
        cid = t_id[top]
        m = hi - lo
        stats[CALLS] += 1
        if depth > stats[DEPTH]:
            stats[DEPTH] = depth

        if not randomized:
            piv = farthest_scan(xs, ys, work, lo, hi, a, b, stats)
            s = piv
            t = piv
        else:
            state = mix64(seed ^ mix64(cid))
            state, k = draw_below(state, m)
            piv = work[lo + k]
            nc = 0
            for j in range(lo, hi):
                if j != lo + k:
                    cand[nc] = work[j]
                    nc += 1
            cand[nc] = a
            cand[nc + 1] = b
            nc += 2
            if shuffle:
                state = shuffle_inplace(cand, nc, state)
            s, t = ray_shoot_core(xs, ys, cand, nc, piv, a, b, sl, sr, stats)
            if validate and bridge_violation(xs, ys, cand, nc, a, b, s, t) >= 0:
                raise AssertionError("bridge has a point above it")

        log[nlog, 0] = a
        log[nlog, 1] = b
        log[nlog, 2] = piv
        log[nlog, 3] = s
        log[nlog, 4] = t
        log[nlog, 5] = m
        log[nlog, 6] = depth
        nlog += 1

        nl = 0
        nr = 0
        for k in range(lo, hi):
            u = work[k]
            if u == s or u == t:
                continue
            if s != a:
                stats[ORIENT] += 1
                if orient(xs, ys, a, s, u) > 0:
                    work[lo + nl] = u
                    nl += 1
                    continue
            if t != b:
                stats[ORIENT] += 1
                if orient(xs, ys, t, b, u) > 0:
                    scratch[nr] = u
                    nr += 1
                    continue
            stats[PRUNED] += 1
            if validate:
                inside = orient(xs, ys, a, b, u) >= 0
                if s == t:
                    inside = inside and not above_parallel(xs, ys, a, b, s, u)
                else:
                    inside = inside and orient(xs, ys, s, t, u) <= 0
                if not inside:
                    raise AssertionError("pruned a point outside polygon (p, s, t, r)")
        for k in range(nr):
            work[lo + nl + k] = scratch[k]

        if nr > 0:
            t_kind[top] = 0
            t_a[top] = t
            t_b[top] = b
            t_lo[top] = lo + nl
            t_hi[top] = lo + nl + nr
            t_depth[top] = depth + 1
            t_id[top] = child_id(cid, 2)
            top += 1
        if t != b and t != s:
            t_kind[top] = 1
            t_a[top] = t
            top += 1
        if s != a:
            t_kind[top] = 1
            t_a[top] = s
            top += 1
        if nl > 0:
            t_kind[top] = 0
            t_a[top] = a
            t_b[top] = s
            t_lo[top] = lo
            t_hi[top] = lo + nl
            t_depth[top] = depth + 1
            t_id[top] = child_id(cid, 1)
            top += 1

    # emitted clockwise from p; flip to counter-clockwise
    ccw = np.empty(nout, np.int64)
    ccw[0] = out[0]
    for k in range(1, nout):
        ccw[k] = out[nout - k]
    return ccw, nlog


# --- reference hulls and queries ----------------------------------------------

@_jit
def monotone_chain_kernel(xs, ys, order, stats):
    n = order.shape[0]
    uniq = np.empty(n, np.int64)
    k = 0
    for i in range(n):
        u = order[i]
        if k > 0 and xs[u] == xs[uniq[k - 1]] and ys[u] == ys[uniq[k - 1]]:
            continue
        uniq[k] = u
        k += 1
    if k == 1:
        return uniq[:1]
    hull = np.empty(2 * k, np.int64)
    nh = 0
    for i in range(k):
        u = uniq[i]
        while nh >= 2:
            stats[ORIENT] += 1
            if orient(xs, ys, hull[nh - 2], hull[nh - 1], u) > 0:
                break
            nh -= 1
        hull[nh] = u
        nh += 1
    base = nh
    for i in range(k - 2, -1, -1):
        u = uniq[i]
        while nh > base:
            stats[ORIENT] += 1
            if orient(xs, ys, hull[nh - 2], hull[nh - 1], u) > 0:
                break
            nh -= 1
        hull[nh] = u
        nh += 1
    return hull[: nh - 1].copy()


@_jit
def hull_edges_kernel(xs, ys):
    """Ordered pairs (a, b) with every point on or right of a->b, maximal."""
    n = xs.shape[0]
    out = np.empty((n * (n - 1), 2), np.int64)
    ne = 0
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            ok = True
            for c in range(n):
                o = orient(xs, ys, a, b, c)
                if o > 0:
                    ok = False
                    break
                if o == 0:
                    # collinear points must sit on the closed segment
                    if dot_sign(xs[a], ys[a], xs[c], ys[c], xs[a], ys[a], xs[b], ys[b]) < 0:
                        ok = False
                        break
                    if dot_sign(xs[b], ys[b], xs[c], ys[c], xs[b], ys[b], xs[a], ys[a]) < 0:
                        ok = False
                        break
            if ok:
                out[ne, 0] = a
                out[ne, 1] = b
                ne += 1
    return out[:ne].copy()


@_jit
def contains_kernel(hx, hy, xs, ys):
    """Closed-hull membership of each query point; hull given CCW."""
    h = hx.shape[0]
    n = xs.shape[0]
    res = np.zeros(n, np.bool_)
    for i in range(n):
        x = xs[i]
        y = ys[i]
        if h == 1:
            res[i] = x == hx[0] and y == hy[0]
            continue
        if h == 2:
            if cross_sign(hx[0], hy[0], hx[1], hy[1], hx[0], hy[0], x, y) != 0:
                continue
            res[i] = (
                dot_sign(hx[0], hy[0], x, y, hx[0], hy[0], hx[1], hy[1]) >= 0
                and dot_sign(hx[1], hy[1], x, y, hx[1], hy[1], hx[0], hy[0]) >= 0
            )
            continue
        inside = True
        for k in range(h):
            j = k + 1 if k + 1 < h else 0
            if cross_sign(hx[k], hy[k], hx[j], hy[j], hx[k], hy[k], x, y) < 0:
                inside = False
                break
        res[i] = inside
    return res

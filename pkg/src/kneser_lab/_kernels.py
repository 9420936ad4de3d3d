"""Inner search loops.

Every routine here is written against numpy arrays only so that it compiles
under ``numba.njit`` and also runs unchanged as interpreted Python when the
JIT is disabled.  Vertex ids are 0-based inside this module.

The coloring searches are resumable: all DFS state lives in caller-owned
arrays, and a call returns after at most ``max_steps`` node visits.  Status
codes are shared by all resumable kernels.
"""
from __future__ import annotations

import numpy as np

from ._jit import JIT_ENABLED, njit

EXHAUSTED = 0
FOUND = 1
BUDGET = 2


@njit
def color_search(order, inc_ptr, inc_idx, esize, t, canonical, try_order,
                 st, cur, prefmax, vc, cnt, max_steps):
    """Backtracking over proper colorings with colors 1..t.

    ``cnt[e, c]`` counts vertices of edge ``e`` colored ``c``; a placement is
    refused when it would complete a monochromatic edge.  On FOUND the full
    coloring sits in ``vc`` and the next call continues with the next one.
    """
    nv = order.shape[0]
    d = st[0]
    steps = 0
    while True:
        if d < 0:
            st[0] = d
            return EXHAUSTED
        if d == nv:
            st[0] = nv - 1
            return FOUND
        if steps >= max_steps:
            st[0] = d
            return BUDGET
        steps += 1
        v = order[d]
        k = cur[d]
        if k > 0:
            c = try_order[d, k - 1]
            for p in range(inc_ptr[v], inc_ptr[v + 1]):
                cnt[inc_idx[p], c] -= 1
            vc[v] = 0
        limit = t
        if canonical and prefmax[d] + 1 < limit:
            limit = prefmax[d] + 1
        placed = False
        c = 0
        while k < t:
            c = try_order[d, k]
            k += 1
            if c > limit:
                continue
            ok = True
            for p in range(inc_ptr[v], inc_ptr[v + 1]):
                e = inc_idx[p]
                if cnt[e, c] + 1 == esize[e]:
                    ok = False
                    break
            if ok:
                for p in range(inc_ptr[v], inc_ptr[v + 1]):
                    cnt[inc_idx[p], c] += 1
                vc[v] = c
                placed = True
                break
        if placed:
            cur[d] = k
            m = prefmax[d]
            if c > m:
                m = c
            prefmax[d + 1] = m
            d += 1
            if d < nv:
                cur[d] = 0
        else:
            cur[d] = 0
            d -= 1


@njit
def local_search(order, inc_ptr, inc_idx, esize, t, set_of_v, vs_ptr,
                 st, cur, prefmax, curmax, vc, cnt, scnt, sdist, best_vc,
                 stop_at, max_steps):
    """Branch and bound for the minimum local value over proper colorings.

    Sets are the closed neighborhoods N[e - {v}]; ``vs_ptr``/``set_of_v`` list
    the sets containing each vertex.  ``st = [depth, best]``.  The search
    halts early once ``best <= stop_at`` (a known lower bound).
    """
    nv = order.shape[0]
    d = st[0]
    steps = 0
    while True:
        if d < 0:
            st[0] = d
            return EXHAUSTED
        if d == nv:
            if curmax[nv] < st[1]:
                st[1] = curmax[nv]
                for i in range(nv):
                    best_vc[i] = vc[i]
            if st[1] <= stop_at:
                st[0] = -1
                return EXHAUSTED
            d = nv - 1
            continue
        if steps >= max_steps:
            st[0] = d
            return BUDGET
        steps += 1
        v = order[d]
        k = cur[d]
        if k > 0:
            c = k
            for p in range(inc_ptr[v], inc_ptr[v + 1]):
                cnt[inc_idx[p], c] -= 1
            for p in range(vs_ptr[v], vs_ptr[v + 1]):
                s = set_of_v[p]
                scnt[s, c] -= 1
                if scnt[s, c] == 0:
                    sdist[s] -= 1
            vc[v] = 0
        limit = t
        if prefmax[d] + 1 < limit:
            limit = prefmax[d] + 1
        placed = False
        c = 0
        while k < limit:
            k += 1
            c = k
            ok = True
            for p in range(inc_ptr[v], inc_ptr[v + 1]):
                e = inc_idx[p]
                if cnt[e, c] + 1 == esize[e]:
                    ok = False
                    break
            if not ok:
                continue
            m = curmax[d]
            for p in range(vs_ptr[v], vs_ptr[v + 1]):
                s = set_of_v[p]
                nd = sdist[s]
                if scnt[s, c] == 0:
                    nd += 1
                if nd > m:
                    m = nd
            if m >= st[1]:
                continue
            for p in range(inc_ptr[v], inc_ptr[v + 1]):
                cnt[inc_idx[p], c] += 1
            for p in range(vs_ptr[v], vs_ptr[v + 1]):
                s = set_of_v[p]
                if scnt[s, c] == 0:
                    sdist[s] += 1
                scnt[s, c] += 1
            vc[v] = c
            curmax[d + 1] = m
            placed = True
            break
        if placed:
            cur[d] = k
            mm = prefmax[d]
            if c > mm:
                mm = c
            prefmax[d + 1] = mm
            d += 1
            if d < nv:
                cur[d] = 0
        else:
            cur[d] = 0
            d -= 1


@njit
def max_alt_search(pos_vertex, q, emask, inc_ptr, inc_idx, stop_at, best_sym):
    """Maximum alternation length along a fixed vertex order.

    Position ``i`` carries vertex ``pos_vertex[i]``; symbols are 0 (zero) and
    1..q.  A nonzero symbol is allowed only if it completes no edge inside its
    class.  Repeating the previous nonzero symbol is never tried: replacing it
    by 0 keeps the alternation length and relaxes every constraint.  Symbols
    are introduced in increasing order (symbol renaming is a symmetry).
    Returns the best length; ``best_sym`` receives the symbols by position.
    """
    n = pos_vertex.shape[0]
    classmask = np.zeros(q + 1, dtype=np.int64)
    alt = np.zeros(n + 1, dtype=np.int64)
    last = np.zeros(n + 1, dtype=np.int64)
    maxsym = np.zeros(n + 1, dtype=np.int64)
    opts = np.zeros((n + 1, q + 1), dtype=np.int64)
    nopts = np.zeros(n + 1, dtype=np.int64)
    cur = np.zeros(n + 1, dtype=np.int64)
    sym = np.zeros(n + 1, dtype=np.int64)
    best = -1
    for i in range(n):
        best_sym[i] = 0
    if n > 0:
        opts[0, 0] = 1
        opts[0, 1] = 0
        nopts[0] = 2
    i = 0
    while True:
        if i < 0:
            break
        if i == n:
            if alt[n] > best:
                best = alt[n]
                for j in range(n):
                    best_sym[j] = sym[j]
            if best >= stop_at:
                break
            i -= 1
            continue
        v = pos_vertex[i]
        vbit = np.int64(1) << np.int64(v)
        if cur[i] > 0:
            s = opts[i, cur[i] - 1]
            if s > 0:
                classmask[s] &= ~vbit
        if alt[i] + (n - i) <= best:
            cur[i] = 0
            i -= 1
            continue
        placed = False
        while cur[i] < nopts[i]:
            s = opts[i, cur[i]]
            cur[i] += 1
            if s == 0:
                alt[i + 1] = alt[i]
                last[i + 1] = last[i]
                maxsym[i + 1] = maxsym[i]
                sym[i] = 0
                placed = True
                break
            ok = True
            cm = classmask[s] | vbit
            for p in range(inc_ptr[v], inc_ptr[v + 1]):
                if emask[inc_idx[p]] & ~cm == 0:
                    ok = False
                    break
            if ok:
                classmask[s] = cm
                alt[i + 1] = alt[i] + 1
                last[i + 1] = s
                ms = maxsym[i]
                if s > ms:
                    ms = s
                maxsym[i + 1] = ms
                sym[i] = s
                placed = True
                break
        if placed:
            i += 1
            if i < n:
                lim = maxsym[i] + 1
                if lim > q:
                    lim = q
                cnt = 0
                for s in range(1, lim + 1):
                    if s != last[i]:
                        opts[i, cnt] = s
                        cnt += 1
                opts[i, cnt] = 0
                nopts[i] = cnt + 1
                cur[i] = 0
        else:
            cur[i] = 0
            i -= 1
    return best


@njit
def rainbow_search(cand, vmask, vcolor, part_of_slot, slot_first, first_slot,
                   equal_prev, p, ncolors, pos):
    """Fill ``r`` slots (grouped into parts) with kg vertices.

    A vertex may join part ``j`` when its color is new to ``j`` and its base
    edge misses the union of base edges already placed in every other part.
    Within a part candidates are taken in increasing ``cand`` position; the
    first slots of equal-size consecutive parts are also increasing.
    Returns True with ``pos`` holding the chosen candidate positions.
    """
    r = part_of_slot.shape[0]
    ncand = cand.shape[0]
    umask = np.zeros(p, dtype=np.int64)
    saved = np.zeros(r + 1, dtype=np.int64)
    placed = np.zeros(r + 1, dtype=np.bool_)
    pcol = np.zeros((p, ncolors + 1), dtype=np.bool_)
    if r == 0:
        return True
    s = 0
    pos[0] = -1
    while s >= 0:
        if s == r:
            return True
        j = part_of_slot[s]
        if placed[s]:
            u = cand[pos[s]]
            umask[j] = saved[s]
            pcol[j, vcolor[u]] = False
            placed[s] = False
        k = pos[s] + 1
        found = False
        while k < ncand:
            u = cand[k]
            c = vcolor[u]
            if not pcol[j, c]:
                m = vmask[u]
                ok = True
                for jj in range(p):
                    if jj != j and (umask[jj] & m) != 0:
                        ok = False
                        break
                if ok:
                    found = True
                    break
            k += 1
        if found:
            u = cand[k]
            pos[s] = k
            saved[s] = umask[j]
            umask[j] |= vmask[u]
            pcol[j, vcolor[u]] = True
            placed[s] = True
            s += 1
            if s < r:
                if slot_first[s]:
                    jn = part_of_slot[s]
                    if equal_prev[jn]:
                        pos[s] = pos[first_slot[jn - 1]]
                    else:
                        pos[s] = -1
                else:
                    pos[s] = pos[s - 1]
        else:
            s -= 1
    return False


@njit
def _alt_pi_batch_loop(xs, perms):
    out = np.zeros(xs.shape[0], dtype=np.int64)
    n = xs.shape[1]
    for row in range(xs.shape[0]):
        last = 0
        count = 0
        for i in range(n):
            x = xs[row, perms[row, i]]
            if x != 0 and x != last:
                count += 1
                last = x
        out[row] = count
    return out


def _alt_pi_batch_numpy(xs, perms):
    ys = np.take_along_axis(xs, perms, axis=1)
    nz = ys != 0
    n = ys.shape[1]
    idx = np.where(nz, np.arange(n), -1)
    filled = np.maximum.accumulate(idx, axis=1)
    prev = np.full_like(filled, -1)
    prev[:, 1:] = filled[:, :-1]
    prev_val = np.where(prev >= 0, np.take_along_axis(ys, np.maximum(prev, 0), axis=1), 0)
    return np.count_nonzero(nz & (ys != prev_val), axis=1).astype(np.int64)


def alt_pi_batch(xs: np.ndarray, perms: np.ndarray) -> np.ndarray:
    """Greedy alternation lengths for many (vector, order) pairs at once.

    ``perms[r, i]`` is the 0-based index read at step ``i`` for row ``r``.
    """
    xs = np.ascontiguousarray(xs, dtype=np.int64)
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    if JIT_ENABLED:
        return _alt_pi_batch_loop(xs, perms)
    return _alt_pi_batch_numpy(xs, perms)

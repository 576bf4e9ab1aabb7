"""Felsch-style Todd-Coxeter kernel compiled with numba.

Column ``2*g`` is generator ``g`` and column ``2*g + 1`` its inverse.  Words
are flat int32 arrays of column indices.  All state lives in plain arrays so
the kernel can grow and compress the table in place of a Python object.
"""

import numpy as np
from numba import njit

UNDEF = -1
# meta slots
TOP = 0
OVERFLOW = 1
NLIVE = 2
EVER_OVERFLOWED = 3

STATUS_COMPLETE = 0
STATUS_EXCEEDED = 1

DEDUCTION_STACK = 1 << 18


@njit(cache=True)
def _rep(p, k):
    r = k
    while p[r] != r:
        r = p[r]
    while p[k] != r:
        nxt = p[k]
        p[k] = r
        k = nxt
    return r


@njit(cache=True)
def _push(ded_c, ded_x, meta, c, x):
    top = meta[TOP]
    if top < ded_c.shape[0]:
        ded_c[top] = c
        ded_x[top] = x
        meta[TOP] = top + 1
    else:
        meta[OVERFLOW] = 1
        meta[EVER_OVERFLOWED] = 1


@njit(cache=True)
def _merge(p, queue, qinfo, meta, k, l):
    a = _rep(p, k)
    b = _rep(p, l)
    if a != b:
        lo = min(a, b)
        hi = max(a, b)
        p[hi] = lo
        queue[qinfo[1]] = hi
        qinfo[1] += 1
        meta[NLIVE] -= 1


@njit(cache=True)
def _coincidence(table, p, queue, ded_c, ded_x, meta, invc, a, b):
    ncols = table.shape[1]
    qinfo = np.zeros(2, dtype=np.int64)  # head, tail
    _merge(p, queue, qinfo, meta, a, b)
    while qinfo[0] < qinfo[1]:
        g = queue[qinfo[0]]
        qinfo[0] += 1
        for x in range(ncols):
            d = table[g, x]
            if d >= 0:
                ix = invc[x]
                table[d, ix] = UNDEF
                mu = _rep(p, g)
                nu = _rep(p, d)
                if table[mu, x] >= 0:
                    _merge(p, queue, qinfo, meta, nu, table[mu, x])
                elif table[nu, ix] >= 0:
                    _merge(p, queue, qinfo, meta, mu, table[nu, ix])
                else:
                    table[mu, x] = nu
                    table[nu, ix] = mu
                    _push(ded_c, ded_x, meta, mu, x)


@njit(cache=True)
def _scan(table, p, queue, ded_c, ded_x, meta, invc, alpha, flat, s, ln):
    """Scan one word at ``alpha``; deduce on a single gap, merge on a closed cycle."""
    end = s + ln
    f = alpha
    i = s
    while i < end:
        nx = table[f, flat[i]]
        if nx < 0:
            break
        f = nx
        i += 1
    if i == end:
        if f != alpha:
            _coincidence(table, p, queue, ded_c, ded_x, meta, invc, f, alpha)
        return
    b = alpha
    j = end - 1
    while j >= i:
        nx = table[b, invc[flat[j]]]
        if nx < 0:
            break
        b = nx
        j -= 1
    if j < i:
        _coincidence(table, p, queue, ded_c, ded_x, meta, invc, f, b)
    elif j == i:
        x = flat[i]
        table[f, x] = b
        table[b, invc[x]] = f
        _push(ded_c, ded_x, meta, f, x)


@njit(cache=True)
def _process(table, p, queue, ded_c, ded_x, meta, invc, flat, wstart, wlen, col_start, col_words):
    while meta[TOP] > 0:
        meta[TOP] -= 1
        a = ded_c[meta[TOP]]
        x = ded_x[meta[TOP]]
        if p[a] != a:
            continue
        for k in range(col_start[x], col_start[x + 1]):
            w = col_words[k]
            _scan(table, p, queue, ded_c, ded_x, meta, invc, a, flat, wstart[w], wlen[w])
            if p[a] != a:
                break
        if p[a] != a:
            continue
        b = table[a, x]
        if b < 0 or p[b] != b:
            continue
        ix = invc[x]
        for k in range(col_start[ix], col_start[ix + 1]):
            w = col_words[k]
            _scan(table, p, queue, ded_c, ded_x, meta, invc, b, flat, wstart[w], wlen[w])
            if p[b] != b:
                break


@njit(cache=True)
def _full_scan(table, p, queue, ded_c, ded_x, meta, invc, nxt, flat, wstart, wlen, col_start, col_words):
    """Scan every word at every live coset; used after the deduction stack overflowed."""
    nwords = wstart.shape[0]
    for c in range(nxt):
        if p[c] != c:
            continue
        for w in range(nwords):
            if p[c] != c:
                break
            _scan(table, p, queue, ded_c, ded_x, meta, invc, c, flat, wstart[w], wlen[w])
            if meta[TOP] > ded_c.shape[0] // 2:
                _process(table, p, queue, ded_c, ded_x, meta, invc, flat, wstart, wlen, col_start, col_words)
    _process(table, p, queue, ded_c, ded_x, meta, invc, flat, wstart, wlen, col_start, col_words)


@njit(cache=True)
def _compress(table, p, nxt, ncap):
    """Renumber live cosets consecutively; returns (table, p, queue, newidx)."""
    ncols = table.shape[1]
    newidx = np.full(nxt, -1, dtype=np.int64)
    k = 0
    for c in range(nxt):
        if p[c] == c:
            newidx[c] = k
            k += 1
    nt = np.full((ncap, ncols), UNDEF, dtype=np.int32)
    for c in range(nxt):
        if p[c] == c:
            r = newidx[c]
            for x in range(ncols):
                v = table[c, x]
                if v >= 0:
                    nt[r, x] = newidx[_rep(p, v)]
    np_ = np.arange(ncap).astype(np.int64)
    queue = np.zeros(ncap, dtype=np.int64)
    return nt, np_, queue, newidx


@njit(cache=True)
def _grow(table, p, nxt, ncap):
    ncols = table.shape[1]
    nt = np.full((ncap, ncols), UNDEF, dtype=np.int32)
    nt[: table.shape[0]] = table
    np_ = np.arange(ncap).astype(np.int64)
    np_[: p.shape[0]] = p
    queue = np.zeros(ncap, dtype=np.int64)
    return nt, np_, queue


@njit(cache=True)
def _standardize(table, p, nxt, nlive):
    """Renumber live cosets in breadth-first order from coset 0."""
    ncols = table.shape[1]
    order = np.full(nlive, -1, dtype=np.int64)
    newidx = np.full(nxt, -1, dtype=np.int64)
    order[0] = 0
    newidx[0] = 0
    k = 1
    h = 0
    while h < k:
        c = order[h]
        h += 1
        for x in range(ncols):
            v = _rep(p, table[c, x])
            if newidx[v] < 0:
                newidx[v] = k
                order[k] = v
                k += 1
    out = np.empty((k, ncols), dtype=np.int32)
    for i in range(k):
        c = order[i]
        for x in range(ncols):
            out[i, x] = newidx[_rep(p, table[c, x])]
    return out


@njit(cache=True)
def enumerate_cosets(ncols, invc, flat, wstart, wlen, col_start, col_words,
                     sub_flat, sub_start, sub_len, max_cosets, init_cap):
    cap = min(init_cap, max_cosets)
    table = np.full((cap, ncols), UNDEF, dtype=np.int32)
    p = np.arange(cap).astype(np.int64)
    queue = np.zeros(cap, dtype=np.int64)
    ded_c = np.zeros(DEDUCTION_STACK, dtype=np.int64)
    ded_x = np.zeros(DEDUCTION_STACK, dtype=np.int64)
    meta = np.zeros(4, dtype=np.int64)
    meta[NLIVE] = 1
    nxt = 1

    # subgroup generators: scan-and-fill at coset 0
    for sw in range(sub_start.shape[0]):
        s = sub_start[sw]
        end = s + sub_len[sw]
        while True:
            f = 0
            i = s
            while i < end and table[f, sub_flat[i]] >= 0:
                f = table[f, sub_flat[i]]
                i += 1
            if i == end:
                if f != 0:
                    _coincidence(table, p, queue, ded_c, ded_x, meta, invc, f, 0)
                break
            b = 0
            j = end - 1
            while j >= i and table[b, invc[sub_flat[j]]] >= 0:
                b = table[b, invc[sub_flat[j]]]
                j -= 1
            if j < i:
                _coincidence(table, p, queue, ded_c, ded_x, meta, invc, f, b)
                break
            if j == i:
                x = sub_flat[i]
                table[f, x] = b
                table[b, invc[x]] = f
                _push(ded_c, ded_x, meta, f, x)
                break
            if nxt == cap:
                if cap >= max_cosets:
                    return STATUS_EXCEEDED, table[:0], 0
                cap = min(2 * cap, max_cosets)
                table, p, queue = _grow(table, p, nxt, cap)
            x = sub_flat[i]
            table[f, x] = nxt
            table[nxt, invc[x]] = f
            _push(ded_c, ded_x, meta, f, x)
            nxt += 1
            meta[NLIVE] += 1
        _process(table, p, queue, ded_c, ded_x, meta, invc, flat, wstart, wlen, col_start, col_words)

    while True:
        alpha = 0
        while alpha < nxt:
            if p[alpha] == alpha:
                for x in range(ncols):
                    if p[alpha] != alpha:
                        break
                    if table[alpha, x] >= 0:
                        continue
                    if nxt == cap:
                        live = meta[NLIVE]
                        dead = nxt - live
                        if dead > 0 and (dead >= cap // 4 or cap >= max_cosets):
                            table, p, queue, newidx = _compress(table, p, nxt, cap)
                            alpha = newidx[alpha]
                            nxt = live
                        elif cap < max_cosets:
                            cap = min(2 * cap, max_cosets)
                            table, p, queue = _grow(table, p, nxt, cap)
                        else:
                            return STATUS_EXCEEDED, table[:0], 0
                    b = nxt
                    nxt += 1
                    meta[NLIVE] += 1
                    table[alpha, x] = b
                    table[b, invc[x]] = alpha
                    _push(ded_c, ded_x, meta, alpha, x)
                    _process(table, p, queue, ded_c, ded_x, meta, invc, flat, wstart, wlen, col_start, col_words)
            alpha += 1
        if meta[OVERFLOW] == 0:
            break
        # lost deductions: rescan everything, then resume filling
        meta[OVERFLOW] = 0
        before = meta[NLIVE]
        _full_scan(table, p, queue, ded_c, ded_x, meta, invc, nxt, flat, wstart, wlen, col_start, col_words)
        if meta[OVERFLOW] == 0 and meta[NLIVE] == before:
            complete = True
            for c in range(nxt):
                if p[c] == c:
                    for x in range(ncols):
                        if table[c, x] < 0:
                            complete = False
            if complete:
                break

    out = _standardize(table, p, nxt, meta[NLIVE])
    return STATUS_COMPLETE, out, out.shape[0]

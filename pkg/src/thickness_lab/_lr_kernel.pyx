# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled left-right planarity verdict.

Same three-phase structure as ``_lr.py`` minus the embedding phase.  Edges
are integer ids; conflict pairs live in parallel arrays and carry a serial
number so stack-bottom checks compare identity, not depth.
"""

from libc.stdlib cimport malloc, free


cdef struct Work:
    int n
    int m
    int* eu
    int* ev
    int* adj_start
    int* adj_nbr
    int* adj_eid
    int* src
    int* dst
    int* oriented
    int* height
    int* parent_edge
    int* lowpt
    int* lowpt2
    int* nd
    int* out_start
    int* out_eid
    int* ind
    int* vstack
    int* pending
    # conflict-pair stack
    int* sl_low
    int* sl_high
    int* sr_low
    int* sr_high
    int* s_id
    int top
    int serial
    int* stack_bottom
    int* lowpt_edge
    int* ref


cdef inline int _conflicting(Work* w, int low, int high, int b) nogil:
    if low == -1 and high == -1:
        return 0
    return high != -1 and w.lowpt[high] > w.lowpt[b]


cdef inline int _lowest(Work* w, int i) nogil:
    cdef bint lempty = w.sl_low[i] == -1 and w.sl_high[i] == -1
    cdef bint rempty = w.sr_low[i] == -1 and w.sr_high[i] == -1
    if lempty:
        return w.lowpt[w.sr_low[i]]
    if rempty:
        return w.lowpt[w.sl_low[i]]
    if w.lowpt[w.sl_low[i]] < w.lowpt[w.sr_low[i]]:
        return w.lowpt[w.sl_low[i]]
    return w.lowpt[w.sr_low[i]]


cdef inline void _push(Work* w, int ll, int lh, int rl, int rh, int sid) nogil:
    w.top += 1
    w.sl_low[w.top] = ll
    w.sl_high[w.top] = lh
    w.sr_low[w.top] = rl
    w.sr_high[w.top] = rh
    w.s_id[w.top] = sid


cdef inline int _top_id(Work* w) nogil:
    if w.top < 0:
        return -1
    return w.s_id[w.top]


cdef int _add_constraints(Work* w, int ei, int e) nogil:
    cdef int pl_low = -1, pl_high = -1, pr_low = -1, pr_high = -1
    cdef int ql_low, ql_high, qr_low, qr_high, t
    cdef int bottom = w.stack_bottom[ei]
    while True:
        ql_low = w.sl_low[w.top]; ql_high = w.sl_high[w.top]
        qr_low = w.sr_low[w.top]; qr_high = w.sr_high[w.top]
        w.top -= 1
        if ql_low != -1 or ql_high != -1:
            t = ql_low; ql_low = qr_low; qr_low = t
            t = ql_high; ql_high = qr_high; qr_high = t
        if ql_low != -1 or ql_high != -1:
            return 0
        if w.lowpt[qr_low] > w.lowpt[e]:
            if pr_low == -1 and pr_high == -1:
                pr_high = qr_high
            else:
                w.ref[pr_low] = qr_high
            pr_low = qr_low
        else:
            w.ref[qr_low] = w.lowpt_edge[e]
        if _top_id(w) == bottom:
            break
    while w.top >= 0 and (
        _conflicting(w, w.sl_low[w.top], w.sl_high[w.top], ei)
        or _conflicting(w, w.sr_low[w.top], w.sr_high[w.top], ei)
    ):
        ql_low = w.sl_low[w.top]; ql_high = w.sl_high[w.top]
        qr_low = w.sr_low[w.top]; qr_high = w.sr_high[w.top]
        w.top -= 1
        if _conflicting(w, qr_low, qr_high, ei):
            t = ql_low; ql_low = qr_low; qr_low = t
            t = ql_high; ql_high = qr_high; qr_high = t
        if _conflicting(w, qr_low, qr_high, ei):
            return 0
        w.ref[pr_low] = qr_high
        if qr_low != -1:
            pr_low = qr_low
        if pl_low == -1 and pl_high == -1:
            pl_high = ql_high
        else:
            w.ref[pl_low] = ql_high
        pl_low = ql_low
    if not (pl_low == -1 and pl_high == -1 and pr_low == -1 and pr_high == -1):
        w.serial += 1
        _push(w, pl_low, pl_high, pr_low, pr_high, w.serial)
    return 1


cdef void _remove_back_edges(Work* w, int e) nogil:
    cdef int u = w.src[e]
    cdef int hu = w.height[u]
    cdef int i, hl, hr
    while w.top >= 0 and _lowest(w, w.top) == hu:
        w.top -= 1
    if w.top >= 0:
        i = w.top
        while w.sl_high[i] != -1 and w.dst[w.sl_high[i]] == u:
            w.sl_high[i] = w.ref[w.sl_high[i]]
        if w.sl_high[i] == -1 and w.sl_low[i] != -1:
            w.ref[w.sl_low[i]] = w.sr_low[i]
            w.sl_low[i] = -1
        while w.sr_high[i] != -1 and w.dst[w.sr_high[i]] == u:
            w.sr_high[i] = w.ref[w.sr_high[i]]
        if w.sr_high[i] == -1 and w.sr_low[i] != -1:
            w.ref[w.sr_low[i]] = w.sl_low[i]
            w.sr_low[i] = -1
    if w.lowpt[e] < hu and w.top >= 0:
        hl = w.sl_high[w.top]
        hr = w.sr_high[w.top]
        if hl != -1 and (hr == -1 or w.lowpt[hl] > w.lowpt[hr]):
            w.ref[e] = hl
        else:
            w.ref[e] = hr


cdef inline void _finish(Work* w, int vw) nogil:
    cdef int v = w.src[vw]
    cdef int e = w.parent_edge[v]
    w.nd[vw] = 2 * w.lowpt[vw] + (1 if w.lowpt2[vw] < w.height[v] else 0)
    if e == -1:
        return
    if w.lowpt[vw] < w.lowpt[e]:
        w.lowpt2[e] = w.lowpt[e] if w.lowpt[e] < w.lowpt2[vw] else w.lowpt2[vw]
        w.lowpt[e] = w.lowpt[vw]
    elif w.lowpt[vw] > w.lowpt[e]:
        if w.lowpt[vw] < w.lowpt2[e]:
            w.lowpt2[e] = w.lowpt[vw]
    else:
        if w.lowpt2[vw] < w.lowpt2[e]:
            w.lowpt2[e] = w.lowpt2[vw]


cdef void _orient(Work* w) nogil:
    cdef int s, v, nb, k, sp, x
    cdef bint descended
    for s in range(w.n):
        if w.height[s] != -1:
            continue
        w.height[s] = 0
        sp = 0
        w.vstack[0] = s
        while sp >= 0:
            v = w.vstack[sp]
            descended = False
            while w.ind[v] < w.adj_start[v + 1] - w.adj_start[v]:
                x = w.adj_start[v] + w.ind[v]
                w.ind[v] += 1
                k = w.adj_eid[x]
                if w.oriented[k]:
                    continue
                w.oriented[k] = 1
                nb = w.adj_nbr[x]
                w.src[k] = v
                w.dst[k] = nb
                w.lowpt[k] = w.height[v]
                w.lowpt2[k] = w.height[v]
                if w.height[nb] == -1:
                    w.parent_edge[nb] = k
                    w.height[nb] = w.height[v] + 1
                    sp += 1
                    w.vstack[sp] = nb
                    descended = True
                    break
                w.lowpt[k] = w.height[nb]
                _finish(w, k)
            if descended:
                continue
            sp -= 1
            if w.parent_edge[v] != -1:
                _finish(w, w.parent_edge[v])


cdef void _order(Work* w) nogil:
    # out-edges per vertex in adjacency order, then stable insertion sort by nesting depth
    cdef int v, x, k, c = 0, i, j, key
    for v in range(w.n):
        w.out_start[v] = c
        for x in range(w.adj_start[v], w.adj_start[v + 1]):
            k = w.adj_eid[x]
            if w.src[k] == v:
                w.out_eid[c] = k
                c += 1
    w.out_start[w.n] = c
    for v in range(w.n):
        for i in range(w.out_start[v] + 1, w.out_start[v + 1]):
            key = w.out_eid[i]
            j = i - 1
            while j >= w.out_start[v] and w.nd[w.out_eid[j]] > w.nd[key]:
                w.out_eid[j + 1] = w.out_eid[j]
                j -= 1
            w.out_eid[j + 1] = key


cdef int _after_edge(Work* w, int v, int ei) nogil:
    cdef int e
    if w.lowpt[ei] < w.height[v]:
        e = w.parent_edge[v]
        if ei == w.out_eid[w.out_start[v]]:
            w.lowpt_edge[e] = w.lowpt_edge[ei]
        else:
            return _add_constraints(w, ei, e)
    return 1


cdef int _test(Work* w) nogil:
    cdef int s, v, ei, nb, sp
    cdef bint descended
    for v in range(w.n):
        w.ind[v] = 0
        w.pending[v] = -1
    for s in range(w.n):
        if w.height[s] != 0 or w.parent_edge[s] != -1:
            continue
        sp = 0
        w.vstack[0] = s
        while sp >= 0:
            v = w.vstack[sp]
            ei = w.pending[v]
            if ei != -1:
                w.pending[v] = -1
                if not _after_edge(w, v, ei):
                    return 0
            descended = False
            while w.ind[v] < w.out_start[v + 1] - w.out_start[v]:
                ei = w.out_eid[w.out_start[v] + w.ind[v]]
                w.ind[v] += 1
                nb = w.dst[ei]
                w.stack_bottom[ei] = _top_id(w)
                if w.parent_edge[nb] == ei:
                    w.pending[v] = ei
                    sp += 1
                    w.vstack[sp] = nb
                    descended = True
                    break
                w.lowpt_edge[ei] = ei
                w.serial += 1
                _push(w, -1, -1, ei, ei, w.serial)
                if not _after_edge(w, v, ei):
                    return 0
            if descended:
                continue
            sp -= 1
            if w.parent_edge[v] != -1:
                _remove_back_edges(w, w.parent_edge[v])
    return 1


cdef int* _ialloc(int count, int fill, list owned) except NULL:
    cdef int* p = <int*> malloc((count if count > 0 else 1) * sizeof(int))
    cdef int i
    if p == NULL:
        raise MemoryError()
    owned.append(<size_t> p)
    for i in range(count):
        p[i] = fill
    return p


def lr_is_planar_edges(int n, edges):
    """Planarity verdict for a simple graph on ``n`` vertices given as ``(u, v)`` pairs."""
    cdef list es = list(edges)
    cdef int m = len(es)
    cdef int i, k, u, v
    if n >= 3 and m > 3 * n - 6:
        return False
    if m <= 8:
        return True
    cdef list owned = []
    cdef Work w
    try:
        w.n = n
        w.m = m
        w.eu = _ialloc(m, 0, owned)
        w.ev = _ialloc(m, 0, owned)
        w.adj_start = _ialloc(n + 1, 0, owned)
        for k in range(m):
            u, v = es[k]
            if u < 0 or v < 0 or u >= n or v >= n or u == v:
                raise ValueError(f"bad edge {es[k]!r}")
            w.eu[k] = u
            w.ev[k] = v
            w.adj_start[u + 1] += 1
            w.adj_start[v + 1] += 1
        for i in range(n):
            w.adj_start[i + 1] += w.adj_start[i]
        w.adj_nbr = _ialloc(2 * m, 0, owned)
        w.adj_eid = _ialloc(2 * m, 0, owned)
        w.ind = _ialloc(n, 0, owned)
        for k in range(m):
            u = w.eu[k]
            v = w.ev[k]
            w.adj_nbr[w.adj_start[u] + w.ind[u]] = v
            w.adj_eid[w.adj_start[u] + w.ind[u]] = k
            w.ind[u] += 1
            w.adj_nbr[w.adj_start[v] + w.ind[v]] = u
            w.adj_eid[w.adj_start[v] + w.ind[v]] = k
            w.ind[v] += 1
        for i in range(n):
            w.ind[i] = 0
        w.src = _ialloc(m, -1, owned)
        w.dst = _ialloc(m, -1, owned)
        w.oriented = _ialloc(m, 0, owned)
        w.height = _ialloc(n, -1, owned)
        w.parent_edge = _ialloc(n, -1, owned)
        w.lowpt = _ialloc(m, 0, owned)
        w.lowpt2 = _ialloc(m, 0, owned)
        w.nd = _ialloc(m, 0, owned)
        w.out_start = _ialloc(n + 1, 0, owned)
        w.out_eid = _ialloc(m, 0, owned)
        w.vstack = _ialloc(n, 0, owned)
        w.pending = _ialloc(n, -1, owned)
        w.sl_low = _ialloc(m + 1, -1, owned)
        w.sl_high = _ialloc(m + 1, -1, owned)
        w.sr_low = _ialloc(m + 1, -1, owned)
        w.sr_high = _ialloc(m + 1, -1, owned)
        w.s_id = _ialloc(m + 1, -1, owned)
        w.top = -1
        w.serial = 0
        w.stack_bottom = _ialloc(m, -1, owned)
        w.lowpt_edge = _ialloc(m, -1, owned)
        w.ref = _ialloc(m, -1, owned)
        with nogil:
            _orient(&w)
            _order(&w)
            i = _test(&w)
        return bool(i)
    finally:
        for k in range(len(owned)):
            free(<void*> <size_t> owned[k])

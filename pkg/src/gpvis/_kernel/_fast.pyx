# cython: language_level=3
"""Compiled kernel: uint64 bitset twin of the pure module (order <= 64).

The algorithms mirror _kernel/pure.py line for line; that module is the
semantic reference and the parity tests hold the two to identical
results.  Only the data layout differs: masks are C unsigned 64-bit
integers and the tables live in flat malloc'd arrays.
"""

import time as _time

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

NAME = "fast"

MV = 0
OUTER = 1
TOTAL = 2
GP = 3

cdef int C_MV = 0
cdef int C_OUTER = 1
cdef int C_TOTAL = 2
cdef int C_GP = 3
cdef int C_NONE = -1

DEF MAXN = 64


cdef inline int popcount(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(u64 x) nogil:
    return __builtin_ctzll(x)


cdef bint c_pv(int n, u64 *adj, int *dist, u64 *bu, u64 *bv,
               int u, int v, u64 blocked) nogil:
    """Reachability through the u,v shortest-path DAG avoiding blockers."""
    cdef int duv = dist[u * n + v]
    cdef int t, y
    cdef u64 layer, acc, r, reach
    if duv <= 1:
        return True
    blocked &= ~((<u64>1 << u) | (<u64>1 << v))
    reach = <u64>1 << u
    for t in range(1, duv):
        layer = bu[t] & bv[duv - t] & ~blocked
        if layer == 0:
            return False
        acc = 0
        r = reach
        while r:
            y = lowbit(r)
            acc |= adj[y]
            r &= r - 1
        reach = acc & layer
        if reach == 0:
            return False
    return (reach & adj[v]) != 0


cdef class _Ctx:
    """Tables for one run: adjacency, distances, balls, intervals."""

    cdef int n, kind, maxd, stride
    cdef u64 adj[MAXN]
    cdef int *dist
    cdef u64 *balls      # stride per vertex: maxd + 2 masks
    cdef u64 *btw        # n*n interval-interior masks
    cdef u64 *pairbad    # n*n bad-third-vertex masks (GP)
    # search state
    cdef int best, target
    cdef u64 best_mask
    cdef long long nodes
    cdef double deadline
    cdef int stop        # 0 none, 1 target, 2 time

    def __cinit__(self, int n, adj_rows, dist_flat, int kind):
        cdef int i, u, v, x, duv, dux, dxv
        cdef u64 m
        if n > MAXN:
            raise ValueError("compiled kernel supports order <= 64")
        self.n = n
        self.kind = kind
        self.dist = NULL
        self.balls = NULL
        self.btw = NULL
        self.pairbad = NULL
        for i in range(n):
            self.adj[i] = adj_rows[i]
        self.dist = <int *>malloc(n * n * sizeof(int))
        if self.dist == NULL:
            raise MemoryError()
        self.maxd = 0
        for i in range(n * n):
            self.dist[i] = dist_flat[i]
            if self.dist[i] > self.maxd:
                self.maxd = self.dist[i]
        self.stride = self.maxd + 2
        self.balls = <u64 *>malloc(n * self.stride * sizeof(u64))
        if self.balls == NULL:
            raise MemoryError()
        for i in range(n * self.stride):
            self.balls[i] = 0
        for u in range(n):
            for x in range(n):
                duv = self.dist[u * n + x]
                if 0 <= duv < self.stride:
                    self.balls[u * self.stride + duv] |= <u64>1 << x
        if kind == C_NONE:
            pass
        elif kind == C_GP:
            self.pairbad = <u64 *>malloc(n * n * sizeof(u64))
            if self.pairbad == NULL:
                raise MemoryError()
            for u in range(n):
                for v in range(u + 1, n):
                    duv = self.dist[u * n + v]
                    m = 0
                    for x in range(n):
                        if x == u or x == v:
                            continue
                        dux = self.dist[u * n + x]
                        dxv = self.dist[v * n + x]
                        if (dux + dxv == duv or duv + dxv == dux
                                or dux + duv == dxv):
                            m |= <u64>1 << x
                    self.pairbad[u * n + v] = m
                    self.pairbad[v * n + u] = m
        else:
            self.btw = <u64 *>malloc(n * n * sizeof(u64))
            if self.btw == NULL:
                raise MemoryError()
            for u in range(n):
                for v in range(u + 1, n):
                    duv = self.dist[u * n + v]
                    m = 0
                    for x in range(n):
                        if x != u and x != v:
                            if self.dist[u * n + x] + self.dist[v * n + x] == duv:
                                m |= <u64>1 << x
                    self.btw[u * n + v] = m
                    self.btw[v * n + u] = m

    def __dealloc__(self):
        if self.dist != NULL:
            free(self.dist)
        if self.balls != NULL:
            free(self.balls)
        if self.btw != NULL:
            free(self.btw)
        if self.pairbad != NULL:
            free(self.pairbad)

    cdef inline bint pv(self, int u, int v, u64 blocked) nogil:
        return c_pv(self.n, self.adj, self.dist,
                    self.balls + u * self.stride,
                    self.balls + v * self.stride, u, v, blocked)

    cdef bint extend_ok(self, u64 smask, int w) nogil:
        """Mirror of pure._Ctx.extend_ok."""
        cdef int n = self.n
        cdef int x, y, z
        cdef u64 new, wbit, r, r2
        cdef int kind = self.kind
        if kind == C_GP:
            r = smask
            while r:
                x = lowbit(r)
                r &= r - 1
                if self.pairbad[w * n + x] & smask & ~(<u64>1 << x):
                    return False
            return True
        new = smask | (<u64>1 << w)
        wbit = <u64>1 << w
        if kind == C_MV:
            r = smask
            while r:
                x = lowbit(r)
                r &= r - 1
                if not self.pv(x, w, new):
                    return False
            r = smask
            while r:
                x = lowbit(r)
                r &= r - 1
                r2 = r
                while r2:
                    y = lowbit(r2)
                    r2 &= r2 - 1
                    if self.btw[x * n + y] & wbit:
                        if not self.pv(x, y, new):
                            return False
            return True
        if kind == C_OUTER:
            for z in range(n):
                if z != w and not (new >> z) & 1:
                    if not self.pv(w, z, new):
                        return False
            r = smask
            while r:
                x = lowbit(r)
                r &= r - 1
                for y in range(x + 1, n):
                    if y == w:
                        continue
                    if self.btw[x * n + y] & wbit:
                        if not self.pv(x, y, new):
                            return False
            r = smask
            while r:
                y = lowbit(r)
                r &= r - 1
                for x in range(0, y):
                    if x == w or (smask >> x) & 1:
                        continue
                    if self.btw[y * n + x] & wbit:
                        if not self.pv(x, y, new):
                            return False
            return True
        if kind == C_TOTAL:
            for x in range(n):
                if x == w:
                    continue
                for y in range(x + 1, n):
                    if y == w:
                        continue
                    if self.btw[x * n + y] & wbit:
                        if not self.pv(x, y, new):
                            return False
            return True
        return False

    cdef int search(self, u64 smask, int size, int *cands, int ncands,
                    int *scratch, int depth):
        """Returns 0 when the subtree completed, 1 target hit, 2 time up."""
        cdef int i, j, w, nrest, rc
        cdef u64 new
        cdef int *rest
        self.nodes += 1
        if self.deadline != 0.0 and (self.nodes & 1023) == 0:
            if _time.monotonic() > self.deadline:
                return 2
        if size + ncands <= self.best:
            return 0
        for i in range(ncands):
            if size + ncands - i <= self.best:
                break
            w = cands[i]
            new = smask | (<u64>1 << w)
            if size + 1 > self.best:
                self.best = size + 1
                self.best_mask = new
                if self.target and self.best >= self.target:
                    return 1
            rest = scratch + depth * self.n
            nrest = 0
            for j in range(i + 1, ncands):
                if self.extend_ok(new, cands[j]):
                    rest[nrest] = cands[j]
                    nrest += 1
            if nrest:
                rc = self.search(new, size + 1, rest, nrest, scratch, depth + 1)
                if rc:
                    return rc
        return 0


cdef _order(int n, adj_rows):
    return sorted(range(n), key=lambda v: (-popcount(adj_rows[v]), v))


cdef u64 c_greedy(_Ctx ctx, order):
    cdef u64 smask = 0
    cdef int w
    for w in order:
        if ctx.extend_ok(smask, w):
            smask |= <u64>1 << w
    return smask


def pair_visible(n, adj, dist, u, v, blocked):
    """Some u,v-geodesic avoids ``blocked`` internally; endpoints exempt."""
    cdef _Ctx ctx = _Ctx(n, adj, dist, C_NONE)  # balls only, no pair tables
    return ctx.pv(u, v, blocked)


def set_ok(n, adj, dist, mask, kind):
    """Full from-scratch verification of ``mask`` for the given kind."""
    cdef _Ctx ctx = _Ctx(n, adj, dist, kind)
    cdef u64 m = mask
    cdef int u, v, x, duv, dux, dxv
    cdef u64 r, r2, r3
    cdef int cn = n
    if kind == GP:
        r = m
        while r:
            u = lowbit(r)
            r &= r - 1
            r2 = r
            while r2:
                v = lowbit(r2)
                r2 &= r2 - 1
                if ctx.pairbad[u * cn + v] & m & ~((<u64>1 << u) | (<u64>1 << v)):
                    return False
        return True
    if kind == MV or kind == OUTER:
        r = m
        while r:
            u = lowbit(r)
            r &= r - 1
            r2 = r
            while r2:
                v = lowbit(r2)
                r2 &= r2 - 1
                if not ctx.pv(u, v, m):
                    return False
        if kind == OUTER:
            r = m
            while r:
                u = lowbit(r)
                r &= r - 1
                for v in range(cn):
                    if not (m >> v) & 1:
                        if not ctx.pv(u, v, m):
                            return False
        return True
    if kind == TOTAL:
        for u in range(cn):
            for v in range(u + 1, cn):
                if not ctx.pv(u, v, m):
                    return False
        return True
    raise ValueError(f"unknown property kind code {kind}")


def extend_ok(n, adj, dist, smask, w, kind):
    """One-shot extension check; assumes smask already satisfies the kind."""
    cdef _Ctx ctx = _Ctx(n, adj, dist, kind)
    return ctx.extend_ok(smask, w)


def greedy_set(n, adj, dist, kind):
    """Deterministic greedy sweep: descending degree, ties by index."""
    cdef _Ctx ctx = _Ctx(n, adj, dist, kind)
    return c_greedy(ctx, _order(n, adj))


def solve_max(n, adj, dist, kind, target=0, time_limit=0.0):
    """Exact maximum set for the kind; returns (size, mask, nodes, status).

    status: 0 exact, 1 stopped early at target size, 2 time limit hit.
    """
    cdef _Ctx ctx = _Ctx(n, adj, dist, kind)
    cdef u64 seed
    cdef int nroots = 0, rc, w
    cdef int *roots = NULL
    cdef int *scratch = NULL
    order = _order(n, adj)
    ctx.best = 0
    ctx.best_mask = 0
    ctx.nodes = 0
    ctx.target = target
    ctx.deadline = (_time.monotonic() + time_limit) if time_limit else 0.0
    ctx.stop = 0
    seed = c_greedy(ctx, order)
    ctx.best = popcount(seed)
    ctx.best_mask = seed
    if target and ctx.best >= target:
        return ctx.best, ctx.best_mask, 0, 1
    roots = <int *>malloc(n * sizeof(int))
    scratch = <int *>malloc((n + 1) * n * sizeof(int))
    if roots == NULL or scratch == NULL:
        if roots != NULL:
            free(roots)
        if scratch != NULL:
            free(scratch)
        raise MemoryError()
    try:
        for w in order:
            if ctx.extend_ok(0, w):
                roots[nroots] = w
                nroots += 1
        rc = ctx.search(0, 0, roots, nroots, scratch, 0)
    finally:
        free(roots)
        free(scratch)
    return ctx.best, ctx.best_mask, ctx.nodes, rc

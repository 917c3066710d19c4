# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the pure-Python search kernels.

Same algorithms, same outputs, bit for bit; masks live in unsigned 64-bit
words, so anything above 64 vertices delegates to the pure implementation
(callers never get near that in practice).
"""

from itertools import combinations

from . import pykernels

cdef extern from *:
    """
    #include <stdint.h>
    static inline int rb_popcount64(uint64_t x) { return __builtin_popcountll(x); }
    static inline int rb_ctz64(uint64_t x) { return __builtin_ctzll(x); }
    """
    int rb_popcount64(unsigned long long x) nogil
    int rb_ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64


cdef inline u64 _low_mask(int bits) noexcept:
    # mask of `bits` low ones; bits >= 64 means all ones
    if bits >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << bits) - 1


cdef void _cycles_dfs(int cur, u64 visited, int plen, int s, u64 allowed,
                      u64* adj, int* path, list out):
    cdef u64 ext, ub
    cdef int u, i
    if plen >= 3 and (adj[cur] >> s) & 1 and path[1] < path[plen - 1]:
        out.append(tuple([path[i] for i in range(plen)]))
    ext = adj[cur] & allowed & ~visited
    while ext:
        ub = ext & (~ext + 1)
        ext ^= ub
        u = rb_ctz64(ub)
        path[plen] = u
        _cycles_dfs(u, visited | ub, plen + 1, s, allowed, adj, path, out)


def all_simple_cycles(n, adj):
    """Every simple cycle exactly once, rooted at its smallest vertex."""
    if n > 64:
        return pykernels.all_simple_cycles(n, adj)
    cdef u64 amask[64]
    cdef int path[65]
    cdef int i, s
    cdef u64 allowed
    for i in range(n):
        amask[i] = <u64>adj[i]
    out = []
    for s in range(n):
        allowed = ~_low_mask(s + 1)
        path[0] = s
        _cycles_dfs(s, (<u64>1) << s, 1, s, allowed, amask, path, out)
    return out


cdef object _rodd_dfs(int cur, u64 visited, int parity, int plen, int s,
                      u64 allowed, u64* adj, u64* red, int* path):
    cdef u64 ext, ub
    cdef int u, i
    cdef object hit
    if plen >= 3 and (adj[cur] >> s) & 1:
        if parity ^ <int>((red[cur] >> s) & 1):
            return tuple([path[i] for i in range(plen)])
    ext = adj[cur] & allowed & ~visited
    while ext:
        ub = ext & (~ext + 1)
        ext ^= ub
        u = rb_ctz64(ub)
        path[plen] = u
        hit = _rodd_dfs(u, visited | ub,
                        parity ^ <int>((red[cur] >> u) & 1),
                        plen + 1, s, allowed, adj, red, path)
        if hit is not None:
            return hit
    return None


def first_r_odd_cycle(n, adj, red):
    """First simple cycle with an odd number of red edges, else None."""
    if n > 64:
        return pykernels.first_r_odd_cycle(n, adj, red)
    cdef u64 amask[64]
    cdef u64 rmask[64]
    cdef int path[65]
    cdef int i, s
    cdef u64 allowed
    for i in range(n):
        amask[i] = <u64>adj[i]
        rmask[i] = <u64>red[i]
    for s in range(n):
        allowed = ~_low_mask(s + 1)
        path[0] = s
        hit = _rodd_dfs(s, (<u64>1) << s, 0, 1, s, allowed, amask, rmask, path)
        if hit is not None:
            return hit
    return None


cdef bint _kt_rec(u64 free, int depth, int t, u64* adj, u64* parts, u64* nbrs):
    cdef int i, v
    cdef u64 vb
    if depth == t:
        return True
    if rb_popcount64(free) < t - depth:
        return False
    for i in range(depth):
        if not (nbrs[i] & free):
            return False
    vb = free & (~free + 1)
    v = rb_ctz64(vb)
    if _kt_grow(vb, adj[v], adj[v] & free & ~vb, 0, free, depth, t,
                adj, parts, nbrs):
        return True
    return _kt_rec(free & ~vb, depth, t, adj, parts, nbrs)


cdef bint _kt_grow(u64 part, u64 nb, u64 cand, u64 ban, u64 free, int depth,
                   int t, u64* adj, u64* parts, u64* nbrs):
    cdef bint ok = True
    cdef int i, u
    cdef u64 c, b, ub, np
    for i in range(depth):
        if not (part & nbrs[i]):
            ok = False
            break
    if ok:
        parts[depth] = part
        nbrs[depth] = nb
        if _kt_rec(free & ~part, depth + 1, t, adj, parts, nbrs):
            return True
    c = cand
    b = ban
    while c:
        ub = c & (~c + 1)
        c ^= ub
        u = rb_ctz64(ub)
        np = part | ub
        if _kt_grow(np, nb | adj[u], (c | (adj[u] & free & ~b)) & ~np,
                    b, free, depth, t, adj, parts, nbrs):
            return True
        b |= ub
    return False


def find_kt_model(n, adj, t):
    """Disjoint connected parts, pairwise joined: K_t minor witness."""
    if n > 64:
        return pykernels.find_kt_model(n, adj, t)
    if t <= 0:
        return []
    if t > n:
        return None
    if t == 1:
        return [1]
    cdef u64 amask[64]
    cdef u64 parts[64]
    cdef u64 nbrs[64]
    cdef int i
    for i in range(n):
        amask[i] = <u64>adj[i]
    if _kt_rec(_low_mask(n), 0, t, amask, parts, nbrs):
        return [int(parts[i]) for i in range(t)]
    return None


cdef bint _tk_route(int idx, u64 used, int npairs, int* pa, int* pb,
                    u64* radj, u64* adj, u64 free):
    if idx == npairs:
        return True
    if npairs - idx > rb_popcount64(free & ~used):
        return False
    return _tk_extend(pa[idx], 0, idx, used, npairs, pa, pb, radj, adj, free)


cdef bint _tk_extend(int cur, u64 onpath, int idx, u64 used, int npairs,
                     int* pa, int* pb, u64* radj, u64* adj, u64 free):
    cdef int b = pb[idx]
    cdef u64 ext, ub
    cdef int u
    if onpath and (adj[cur] >> b) & 1:
        if _tk_route(idx + 1, used | onpath, npairs, pa, pb, radj, adj, free):
            return True
    ext = radj[cur] & free & ~used & ~onpath
    while ext:
        ub = ext & (~ext + 1)
        ext ^= ub
        u = rb_ctz64(ub)
        if _tk_extend(u, onpath | ub, idx, used, npairs, pa, pb, radj,
                      adj, free):
            return True
    return False


def has_tk(n, adj, t):
    """Whether t branch vertices admit internally disjoint pairwise paths."""
    if n > 64:
        return pykernels.has_tk(n, adj, t)
    if t <= 1:
        return 0 < t <= n
    if t > n:
        return False
    if t == 2:
        return any(adj[v] for v in range(n))
    cdef u64 amask[64]
    cdef u64 rmask[64]
    cdef int pa[2016]
    cdef int pb[2016]
    cdef int i, npairs
    cdef u64 free, bmask
    for i in range(n):
        amask[i] = <u64>adj[i]
    cands = [v for v in range(n) if bin(adj[v]).count("1") >= t - 1]
    if len(cands) < t:
        return False
    for branch in combinations(cands, t):
        bmask = 0
        for v in branch:
            bmask |= (<u64>1) << <int>v
        pairs = [
            (a, b)
            for i, a in enumerate(branch)
            for b in branch[i + 1 :]
            if not (adj[a] >> b) & 1
        ]
        free = _low_mask(n) & ~bmask
        if len(pairs) > rb_popcount64(free):
            continue
        pfree = int(free)
        pairs.sort(
            key=lambda ab: (
                bin(adj[ab[0]] & adj[ab[1]] & pfree).count("1"),
                ab,
            )
        )
        npairs = len(pairs)
        for i in range(npairs):
            pa[i] = pairs[i][0]
            pb[i] = pairs[i][1]
        for i in range(n):
            rmask[i] = amask[i] & ~bmask
        if _tk_route(0, 0, npairs, pa, pb, rmask, amask, free):
            return True
    return False


cdef bint _fc_rec(int v, int deficient, int k, int n, int m, u64* adj,
                  u64* parts, u64* adjrow, u64* suffix_nbr,
                  unsigned char* suffix_edge):
    cdef int i, j, nf
    cdef u64 vb, av, row
    cdef int fixed[64]
    if deficient == 0 and k == m:
        return True
    if v == n:
        return False
    if k + (n - v) < m:
        return False
    if deficient and not suffix_edge[v]:
        # no edge among the unassigned: a deficient pair is only fixable
        # by a single unassigned vertex adjacent to one of its two parts
        for i in range(k):
            row = adjrow[i]
            for j in range(i + 1, k):
                if not ((row >> j) & 1) and not (
                    suffix_nbr[v] & (parts[i] | parts[j])
                ):
                    return False
    vb = (<u64>1) << v
    av = adj[v]
    for i in range(k):
        nf = 0
        for j in range(k):
            if j != i and not ((adjrow[i] >> j) & 1) and (av & parts[j]):
                fixed[nf] = j
                nf += 1
        parts[i] |= vb
        for j in range(nf):
            adjrow[i] |= (<u64>1) << fixed[j]
            adjrow[fixed[j]] |= (<u64>1) << i
        if _fc_rec(v + 1, deficient - nf, k, n, m, adj, parts, adjrow,
                   suffix_nbr, suffix_edge):
            return True
        for j in range(nf):
            adjrow[i] &= ~((<u64>1) << fixed[j])
            adjrow[fixed[j]] &= ~((<u64>1) << i)
        parts[i] &= ~vb
    if k < m:
        row = 0
        for j in range(k):
            if av & parts[j]:
                row |= (<u64>1) << j
        parts[k] = vb
        adjrow[k] = row
        for j in range(k):
            if (row >> j) & 1:
                adjrow[j] |= (<u64>1) << k
        if _fc_rec(v + 1, deficient + k - rb_popcount64(row), k + 1, n, m,
                   adj, parts, adjrow, suffix_nbr, suffix_edge):
            return True
        for j in range(k):
            adjrow[j] &= ~((<u64>1) << k)
    return _fc_rec(v + 1, deficient, k, n, m, adj, parts, adjrow,
                   suffix_nbr, suffix_edge)


def find_compatible(n, adj, m):
    """Disjoint nonempty parts, pairwise joined, no connectivity demand."""
    if n > 64:
        return pykernels.find_compatible(n, adj, m)
    if m <= 0:
        return []
    if m > n:
        return None
    cdef u64 amask[64]
    cdef u64 parts[64]
    cdef u64 adjrow[64]
    cdef u64 suffix_nbr[65]
    cdef unsigned char suffix_edge[65]
    cdef int v
    cdef u64 high
    for v in range(n):
        amask[v] = <u64>adj[v]
    suffix_nbr[n] = 0
    suffix_edge[n] = 0
    for v in range(n - 1, -1, -1):
        suffix_nbr[v] = suffix_nbr[v + 1] | amask[v]
        high = ~_low_mask(v + 1)
        suffix_edge[v] = 1 if (suffix_edge[v + 1] or (amask[v] & high)) else 0
    if _fc_rec(0, 0, 0, n, m, amask, parts, adjrow, suffix_nbr, suffix_edge):
        return [int(parts[i]) for i in range(m)]
    return None

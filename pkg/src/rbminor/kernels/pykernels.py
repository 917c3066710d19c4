"""Pure-Python search kernels over bitmask adjacency.

Every function takes `n` and `adj`, where adj[v] is an int bitmask of the
neighbours of v.  These are the hot paths behind cycle enumeration and the
brute-force oracles; the compiled twin in _ckernels.pyx mirrors them
operation for operation.
"""

from __future__ import annotations

from itertools import combinations


def all_simple_cycles(n: int, adj: list[int]) -> list[tuple[int, ...]]:
    """Every simple cycle exactly once, rooted at its smallest vertex.

    Emitted tuples start at the root and run toward the smaller of the two
    root neighbours, so each cycle appears once up to rotation/reflection.
    """
    out: list[tuple[int, ...]] = []
    for s in range(n):
        allowed = ~((1 << (s + 1)) - 1)  # only vertices > s may extend
        path = [s]

        def dfs(cur: int, visited: int) -> None:
            if len(path) >= 3 and (adj[cur] >> s) & 1 and path[1] < path[-1]:
                out.append(tuple(path))
            ext = adj[cur] & allowed & ~visited
            while ext:
                ub = ext & -ext
                ext ^= ub
                u = ub.bit_length() - 1
                path.append(u)
                dfs(u, visited | ub)
                path.pop()

        dfs(s, 1 << s)
    return out


def first_r_odd_cycle(
    n: int, adj: list[int], red: list[int]
) -> tuple[int, ...] | None:
    """First simple cycle with an odd number of red edges, else None.

    Exhaustive: every simple cycle is visited at the root equal to its
    smallest vertex, so a None answer certifies that no red-odd cycle
    exists.  Stops at the first hit, which makes the common (non-bipartite
    parity) case fast.
    """
    for s in range(n):
        allowed = ~((1 << (s + 1)) - 1)
        path = [s]

        def dfs(cur: int, visited: int, parity: int) -> tuple[int, ...] | None:
            if len(path) >= 3 and (adj[cur] >> s) & 1:
                if parity ^ ((red[cur] >> s) & 1):
                    return tuple(path)
            ext = adj[cur] & allowed & ~visited
            while ext:
                ub = ext & -ext
                ext ^= ub
                u = ub.bit_length() - 1
                path.append(u)
                hit = dfs(u, visited | ub, parity ^ ((red[cur] >> u) & 1))
                if hit is not None:
                    return hit
                path.pop()
            return None

        hit = dfs(s, 1 << s, 0)
        if hit is not None:
            return hit
    return None


def find_kt_model(n: int, adj: list[int], t: int) -> list[int] | None:
    """Disjoint connected parts, pairwise joined by an edge: a K_t witness.

    Returns part bitmasks or None.  Parts are generated in increasing order
    of their smallest vertex, which removes the t! labelling symmetry.
    """
    if t <= 0:
        return []
    if t > n:
        return None
    if t == 1:
        return [1]
    parts: list[int] = []
    nbrs: list[int] = []  # union of member adjacencies, per part

    def rec(free: int) -> bool:
        depth = len(parts)
        if depth == t:
            return True
        if free.bit_count() < t - depth:
            return False
        for x in nbrs:
            if not (x & free):
                return False  # this part can never reach another new part
        vb = free & -free
        v = vb.bit_length() - 1
        if grow(vb, adj[v], adj[v] & free & ~vb, 0, free):
            return True
        return rec(free & ~vb)

    def grow(part: int, nb: int, cand: int, ban: int, free: int) -> bool:
        # `part` is connected; try it as a finished part, then extend.
        ok = True
        for x in nbrs:
            if not (part & x):
                ok = False
                break
        if ok:
            parts.append(part)
            nbrs.append(nb)
            if rec(free & ~part):
                return True
            parts.pop()
            nbrs.pop()
        c = cand
        b = ban
        while c:
            ub = c & -c
            c ^= ub
            u = ub.bit_length() - 1
            np = part | ub
            if grow(np, nb | adj[u], (c | (adj[u] & free & ~b)) & ~np, b, free):
                return True
            b |= ub
        return False

    full = (1 << n) - 1
    if rec(full):
        return list(parts)
    return None


def has_tk(n: int, adj: list[int], t: int) -> bool:
    """Whether t branch vertices admit internally disjoint pairwise paths.

    Pairs already joined by an edge use it (always optimal: a direct edge
    consumes no internal vertices); the rest are routed by backtracking,
    most-constrained pair first.
    """
    if t <= 1:
        return 0 < t <= n
    if t > n:
        return False
    if t == 2:
        return any(adj[v] for v in range(n))
    full = (1 << n) - 1
    cands = [v for v in range(n) if adj[v].bit_count() >= t - 1]
    if len(cands) < t:
        return False
    for branch in combinations(cands, t):
        bmask = 0
        for v in branch:
            bmask |= 1 << v
        pairs = [
            (a, b)
            for i, a in enumerate(branch)
            for b in branch[i + 1 :]
            if not (adj[a] >> b) & 1
        ]
        free = full & ~bmask
        if len(pairs) > free.bit_count():
            continue
        pairs.sort(
            key=lambda ab: ((adj[ab[0]] & adj[ab[1]] & free).bit_count(), ab)
        )
        # internal vertices must avoid every branch vertex
        radj = [adj[v] & ~bmask for v in range(n)]
        if _route_pairs(pairs, radj, adj, free):
            return True
    return False


def _route_pairs(
    pairs: list[tuple[int, int]], radj: list[int], adj: list[int], free: int
) -> bool:
    def route(idx: int, used: int) -> bool:
        if idx == len(pairs):
            return True
        if len(pairs) - idx > (free & ~used).bit_count():
            return False
        a, b = pairs[idx]

        def extend(cur: int, onpath: int) -> bool:
            if onpath and (adj[cur] >> b) & 1:
                if route(idx + 1, used | onpath):
                    return True
            ext = radj[cur] & free & ~used & ~onpath
            while ext:
                ub = ext & -ext
                ext ^= ub
                u = ub.bit_length() - 1
                if extend(u, onpath | ub):
                    return True
            return False

        return extend(a, 0)

    return route(0, 0)


def find_compatible(n: int, adj: list[int], m: int) -> list[int] | None:
    """Disjoint nonempty parts, pairwise joined by an edge, no connectivity.

    Returns part bitmasks or None.  Vertices are assigned in increasing
    order (existing part / fresh part / unused) so each unordered partition
    is visited once.
    """
    if m <= 0:
        return []
    if m > n:
        return None
    # suffix data for fixability pruning
    suffix_nbr = [0] * (n + 1)  # union of adj[u] for u >= v
    for v in range(n - 1, -1, -1):
        suffix_nbr[v] = suffix_nbr[v + 1] | adj[v]
    suffix_edge = [False] * (n + 1)  # any edge with both ends >= v
    for v in range(n - 1, -1, -1):
        high = ~((1 << (v + 1)) - 1)
        suffix_edge[v] = suffix_edge[v + 1] or bool(adj[v] & high)

    parts: list[int] = []
    adjrow: list[int] = []  # adjrow[i]: bitmask over parts adjacent to part i

    def rec(v: int, deficient: int) -> bool:
        k = len(parts)
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
                    if not (row >> j) & 1 and not (
                        suffix_nbr[v] & (parts[i] | parts[j])
                    ):
                        return False
        vb = 1 << v
        av = adj[v]
        for i in range(k):
            fixed = []
            for j in range(k):
                if j != i and not (adjrow[i] >> j) & 1 and av & parts[j]:
                    fixed.append(j)
            parts[i] |= vb
            for j in fixed:
                adjrow[i] |= 1 << j
                adjrow[j] |= 1 << i
            if rec(v + 1, deficient - len(fixed)):
                return True
            for j in fixed:
                adjrow[i] &= ~(1 << j)
                adjrow[j] &= ~(1 << i)
            parts[i] &= ~vb
        if k < m:
            row = 0
            for j in range(k):
                if av & parts[j]:
                    row |= 1 << j
            parts.append(vb)
            adjrow.append(row)
            for j in range(k):
                if (row >> j) & 1:
                    adjrow[j] |= 1 << k
            if rec(v + 1, deficient + k - row.bit_count()):
                return True
            for j in range(k):
                adjrow[j] &= ~(1 << k)
            parts.pop()
            adjrow.pop()
        return rec(v + 1, deficient)

    if rec(0, 0):
        return list(parts)
    return None

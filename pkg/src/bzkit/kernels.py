"""Hot loops for the tableau minimization.

The substitution d[p, q] = c[p, q] - p turns both tableau conditions into
d being order preserving on the cells (p, q) -> (p, q+1), (p, q) -> (p+1, q),
with the diagonal fixed to k_p - p.  The cost of a cell depends only on its
own value, so the minimum is a minimum-weight closure problem over the
threshold variables [d[p, q] >= t], solved here by a max-flow computation.
"""
import numpy as np

from ._accel import njit

INF = np.int64(1) << np.int64(60)


@njit
def _maxflow(nv, src, snk, head, nxt, to, cap):
    flow = 0
    level = np.empty(nv, np.int64)
    it = np.empty(nv, np.int64)
    queue = np.empty(nv, np.int64)
    path = np.empty(nv + 1, np.int64)
    while True:
        for v in range(nv):
            level[v] = -1
        level[src] = 0
        qh = 0
        qt = 1
        queue[0] = src
        while qh < qt:
            v = queue[qh]
            qh += 1
            e = head[v]
            while e != -1:
                w = to[e]
                if cap[e] > 0 and level[w] < 0:
                    level[w] = level[v] + 1
                    queue[qt] = w
                    qt += 1
                e = nxt[e]
        if level[snk] < 0:
            break
        for v in range(nv):
            it[v] = head[v]
        while True:
            depth = 0
            v = src
            found = False
            while True:
                if v == snk:
                    found = True
                    break
                e = it[v]
                advanced = False
                while e != -1:
                    w = to[e]
                    if cap[e] > 0 and level[w] == level[v] + 1:
                        path[depth] = e
                        depth += 1
                        v = w
                        advanced = True
                        break
                    e = nxt[e]
                    it[v] = e
                if not advanced:
                    level[v] = -1
                    if depth == 0:
                        break
                    depth -= 1
                    e = path[depth]
                    v = to[e ^ 1]
                    it[v] = nxt[it[v]]
            if not found:
                break
            b = INF
            for d in range(depth):
                if cap[path[d]] < b:
                    b = cap[path[d]]
            for d in range(depth):
                e = path[d]
                cap[e] -= b
                cap[e ^ 1] += b
            flow += b
    return flow


@njit
def min_cost_cut(A, lo, kk):
    """Minimum tableau cost for the diagram kk (sorted) over data A (offset lo)."""
    u = kk.shape[0]
    L = np.zeros((u, u), np.int64)
    U = np.zeros((u, u), np.int64)
    base = np.full((u, u), -1, np.int64)
    total = 0
    nv = 0
    for p in range(u):
        for q in range(p + 1, u):
            L[p, q] = kk[p] - p
            U[p, q] = kk[q] - q
            total += A[L[p, q] + p - lo, L[p, q] + q - lo]
            if U[p, q] > L[p, q]:
                base[p, q] = nv
                nv += U[p, q] - L[p, q]
    if nv == 0:
        return total
    src = nv
    snk = nv + 1
    max_edges = 2 * (4 * nv)
    head = np.full(nv + 2, -1, np.int64)
    nxt = np.empty(max_edges, np.int64)
    to = np.empty(max_edges, np.int64)
    cap = np.empty(max_edges, np.int64)
    ne = 0
    neg = 0
    for p in range(u):
        for q in range(p + 1, u):
            if base[p, q] < 0:
                continue
            prev = A[L[p, q] + p - lo, L[p, q] + q - lo]
            for t in range(L[p, q] + 1, U[p, q] + 1):
                v = base[p, q] + t - L[p, q] - 1
                cur = A[t + p - lo, t + q - lo]
                w = cur - prev
                prev = cur
                # terminal edge
                if w < 0:
                    neg += w
                    a, b, c = src, v, -w
                elif w > 0:
                    a, b, c = v, snk, w
                else:
                    a, b, c = -1, -1, 0
                if a >= 0:
                    to[ne] = b; cap[ne] = c; nxt[ne] = head[a]; head[a] = ne; ne += 1
                    to[ne] = a; cap[ne] = 0; nxt[ne] = head[b]; head[b] = ne; ne += 1
                # implications d >= t  =>  d >= t-1 and neighbours >= t
                for k in range(3):
                    if k == 0:
                        if t - 1 <= L[p, q]:
                            continue
                        tgt = v - 1
                    elif k == 1:
                        if q + 1 >= u or t <= L[p, q + 1]:
                            continue
                        tgt = base[p, q + 1] + t - L[p, q + 1] - 1
                    else:
                        if p + 1 >= q or t <= L[p + 1, q]:
                            continue
                        tgt = base[p + 1, q] + t - L[p + 1, q] - 1
                    to[ne] = tgt; cap[ne] = INF; nxt[ne] = head[v]; head[v] = ne; ne += 1
                    to[ne] = v; cap[ne] = 0; nxt[ne] = head[tgt]; head[tgt] = ne; ne += 1
    flow = _maxflow(nv + 2, src, snk, head, nxt[:ne], to[:ne], cap[:ne])
    return total + neg + flow


@njit
def min_cost_bnb(A, lo, kk):
    """Depth-first branch and bound over cells, column by column."""
    u = kk.shape[0]
    ncell = u * (u - 1) // 2
    if ncell == 0:
        return 0
    cp = np.empty(ncell, np.int64)
    cq = np.empty(ncell, np.int64)
    lb = np.empty(ncell + 1, np.int64)
    n = 0
    for q in range(1, u):
        for p in range(q - 1, -1, -1):
            cp[n] = p
            cq[n] = q
            n += 1
    # suffix sums of per-cell minima give the bound
    lb[ncell] = 0
    for c in range(ncell - 1, -1, -1):
        p, q = cp[c], cq[c]
        best = INF
        for d in range(kk[p] - p, kk[q] - q + 1):
            x = A[d + p - lo, d + q - lo]
            if x < best:
                best = x
        lb[c] = lb[c + 1] + best
    D = np.zeros((u, u), np.int64)
    for p in range(u):
        D[p, p] = kk[p] - p
    val = np.empty(ncell, np.int64)
    acc = np.zeros(ncell + 1, np.int64)
    best = INF
    c = 0
    val[0] = D[cp[0], cq[0] - 1] - 1
    while c >= 0:
        p, q = cp[c], cq[c]
        hi = D[p + 1, q]
        v = val[c] + 1
        if v > hi or acc[c] + lb[c] >= best:
            c -= 1
            continue
        val[c] = v
        D[p, q] = v
        acc[c + 1] = acc[c] + A[v + p - lo, v + q - lo]
        if c + 1 == ncell:
            if acc[c + 1] < best:
                best = acc[c + 1]
            continue
        c += 1
        val[c] = D[cp[c], cq[c] - 1] - 1
    return best

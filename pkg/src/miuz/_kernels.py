"""Compiled graph traversals over a CSR adjacency with an alive mask.

Every kernel sees only the alive subgraph: an edge (v, w) is followed only
when both endpoints are alive.  Arrays are ``indptr``/``indices`` in the
usual CSR layout (int64) and ``alive`` as a boolean vector.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def component_labels(indptr, indices, alive):
    n = alive.shape[0]
    labels = np.full(n, -1, np.int64)
    sizes = np.zeros(n, np.int64)
    queue = np.empty(n, np.int64)
    ncomp = 0
    for s in range(n):
        if not alive[s] or labels[s] >= 0:
            continue
        labels[s] = ncomp
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if alive[w] and labels[w] < 0:
                    labels[w] = ncomp
                    queue[tail] = w
                    tail += 1
        sizes[ncomp] = tail
        ncomp += 1
    return labels, sizes[:ncomp]


@njit(cache=True)
def cut_vertex_split(indptr, indices, alive):
    """One DFS low-link pass.

    Returns ``(labels, sizes, is_cut, largest_piece)`` where
    ``largest_piece[v]`` is the size of the biggest fragment that v's
    component breaks into once v is stripped (0 for non-cut vertices).
    """
    n = alive.shape[0]
    disc = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    sub = np.zeros(n, np.int64)
    parent = np.full(n, -1, np.int64)
    ptr = np.zeros(n, np.int64)
    nsep = np.zeros(n, np.int64)
    sep_sum = np.zeros(n, np.int64)
    sep_max = np.zeros(n, np.int64)
    labels = np.full(n, -1, np.int64)
    sizes = np.zeros(n, np.int64)
    stack = np.empty(n, np.int64)
    clock = 0
    ncomp = 0
    for r in range(n):
        if not alive[r] or disc[r] >= 0:
            continue
        disc[r] = clock
        low[r] = clock
        clock += 1
        sub[r] = 1
        labels[r] = ncomp
        ptr[r] = indptr[r]
        stack[0] = r
        sp = 0
        csize = 1
        while sp >= 0:
            v = stack[sp]
            if ptr[v] < indptr[v + 1]:
                w = indices[ptr[v]]
                ptr[v] += 1
                if not alive[w]:
                    continue
                if disc[w] < 0:
                    parent[w] = v
                    disc[w] = clock
                    low[w] = clock
                    clock += 1
                    sub[w] = 1
                    labels[w] = ncomp
                    ptr[w] = indptr[w]
                    sp += 1
                    stack[sp] = w
                    csize += 1
                elif w != parent[v] and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                sp -= 1
                if sp >= 0:
                    p = stack[sp]
                    sub[p] += sub[v]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        nsep[p] += 1
                        sep_sum[p] += sub[v]
                        if sub[v] > sep_max[p]:
                            sep_max[p] = sub[v]
        sizes[ncomp] = csize
        ncomp += 1

    is_cut = np.zeros(n, np.bool_)
    largest_piece = np.zeros(n, np.int64)
    for v in range(n):
        if not alive[v]:
            continue
        if parent[v] < 0:
            if nsep[v] >= 2:
                is_cut[v] = True
                largest_piece[v] = sep_max[v]
        elif nsep[v] >= 1:
            is_cut[v] = True
            rest = sizes[labels[v]] - 1 - sep_sum[v]
            largest_piece[v] = max(sep_max[v], rest)
    return labels, sizes[:ncomp], is_cut, largest_piece


@njit(cache=True)
def brandes_accumulate(indptr, indices, alive, sources, out):
    """Add each source's dependency to ``out`` (ordered pairs, so twice the
    unordered-pair betweenness).  ``sources`` must be alive."""
    n = alive.shape[0]
    dist = np.full(n, -1, np.int64)
    sigma = np.zeros(n, np.float64)
    delta = np.zeros(n, np.float64)
    order = np.empty(n, np.int64)
    # geodesic edges (v -> w) in the order v leaves the queue
    pred_v = np.empty(indices.shape[0], np.int64)
    pred_w = np.empty(indices.shape[0], np.int64)
    for s in sources:
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head = 0
        tail = 1
        npred = 0
        while head < tail:
            v = order[head]
            head += 1
            dv = dist[v]
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if not alive[w]:
                    continue
                if dist[w] < 0:
                    dist[w] = dv + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dv + 1:
                    sigma[w] += sigma[v]
                    pred_v[npred] = v
                    pred_w[npred] = w
                    npred += 1
        # reverse queue order finalises delta[w] before any edge into w is used
        for i in range(npred - 1, -1, -1):
            v = pred_v[i]
            w = pred_w[i]
            delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
        for i in range(1, tail):
            w = order[i]
            out[w] += delta[w]
        for i in range(tail):
            w = order[i]
            dist[w] = -1
            sigma[w] = 0.0
            delta[w] = 0.0


@njit(cache=True)
def harmonic_fill(indptr, indices, alive, sources, out):
    """Set ``out[s]`` to the harmonic centrality of every source s."""
    n = alive.shape[0]
    dist = np.full(n, -1, np.int64)
    order = np.empty(n, np.int64)
    for s in sources:
        dist[s] = 0
        order[0] = s
        head = 0
        tail = 1
        total = 0.0
        while head < tail:
            v = order[head]
            head += 1
            dv = dist[v]
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if alive[w] and dist[w] < 0:
                    dist[w] = dv + 1
                    total += 1.0 / (dv + 1)
                    order[tail] = w
                    tail += 1
        out[s] = total
        for i in range(tail):
            dist[order[i]] = -1


@njit(cache=True)
def bfs_hops(indptr, indices, alive, source):
    n = alive.shape[0]
    dist = np.full(n, -1, np.int64)
    order = np.empty(n, np.int64)
    dist[source] = 0
    order[0] = source
    head = 0
    tail = 1
    while head < tail:
        v = order[head]
        head += 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if alive[w] and dist[w] < 0:
                dist[w] = dist[v] + 1
                order[tail] = w
                tail += 1
    return dist


@njit(cache=True)
def induced_csr(indptr, indices, mask):
    """CSR of the subgraph induced by ``mask``, relabelled 0..k-1 in id order.

    Neighbour order is preserved, so traversals of the subgraph visit nodes
    in exactly the order they would on the masked full graph.
    """
    n = mask.shape[0]
    local = np.full(n, -1, np.int64)
    k = 0
    for v in range(n):
        if mask[v]:
            local[v] = k
            k += 1
    nodes = np.empty(k, np.int64)
    sub_indptr = np.zeros(k + 1, np.int64)
    for v in range(n):
        if mask[v]:
            i = local[v]
            nodes[i] = v
            cnt = 0
            for p in range(indptr[v], indptr[v + 1]):
                if mask[indices[p]]:
                    cnt += 1
            sub_indptr[i + 1] = sub_indptr[i] + cnt
    sub_indices = np.empty(sub_indptr[k], np.int64)
    for i in range(k):
        v = nodes[i]
        q = sub_indptr[i]
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if mask[w]:
                sub_indices[q] = local[w]
                q += 1
    return nodes, sub_indptr, sub_indices

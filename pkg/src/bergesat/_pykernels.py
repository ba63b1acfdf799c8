"""Pure-Python kernels.  Same algorithms and visiting order as ``_speedups.pyx``.

Pattern vertices and host vertices are 0-based here; host hyperedges are
bitmasks.  ``order`` lists the pattern vertices in embedding order.
"""

from __future__ import annotations


def _prepare(k, edges, order):
    pos = [0] * k
    for r, v in enumerate(order):
        pos[v] = r
    back = [[] for _ in range(k)]
    pdeg = [0] * k
    for idx, (u, v) in enumerate(edges):
        back[max(pos[u], pos[v])].append(idx)
        pdeg[u] += 1
        pdeg[v] += 1
    return back, pdeg


def _embed(k, edges, order, back, pdeg, host_n, masks, hdeg):
    ne = len(edges)
    M = len(masks)
    img = [-1] * k
    pm = [0] * ne
    match_left = [-1] * ne
    match_right = [-1] * M

    def augment(e, visited):
        p = pm[e]
        for j in range(M):
            if not visited[j] and masks[j] & p == p:
                visited[j] = True
                if match_right[j] == -1 or augment(match_right[j], visited):
                    match_right[j] = e
                    match_left[e] = j
                    return True
        return False

    def dfs(r, used):
        if r == k:
            return True
        v = order[r]
        for x in range(host_n):
            if used >> x & 1 or hdeg[x] < pdeg[v]:
                continue
            img[v] = x
            saved = match_left[:]
            ok = True
            for e in back[r]:
                u, w = edges[e]
                pm[e] = 1 << img[u] | 1 << img[w]
                if not augment(e, [False] * M):
                    ok = False
                    break
            if ok and dfs(r + 1, used | 1 << x):
                return True
            for j in match_left:
                if j != -1:
                    match_right[j] = -1
            match_left[:] = saved
            for e, j in enumerate(match_left):
                if j != -1:
                    match_right[j] = e
            img[v] = -1
        return False

    if dfs(0, 0):
        return list(img), list(match_left)
    return None


def _host_degrees(host_n, masks):
    return [sum(1 for m in masks if m >> x & 1) for x in range(host_n)]


def berge_embed(k, edges, order, host_n, masks):
    """Return ``(vertex_images, edge_to_hyperedge)`` or None."""
    masks = list(masks)
    if len(masks) < len(edges) or k > host_n:
        return None
    back, pdeg = _prepare(k, edges, order)
    return _embed(k, edges, order, back, pdeg, host_n, masks, _host_degrees(host_n, masks))


def first_failing(k, edges, order, host_n, masks, extra):
    """Index of the first mask in ``extra`` whose addition yields no embedding, or -1."""
    masks = list(masks)
    if len(masks) + 1 < len(edges) or k > host_n:
        return 0 if extra else -1
    back, pdeg = _prepare(k, edges, order)
    base = _host_degrees(host_n, masks)
    host = masks + [0]
    for i, e in enumerate(extra):
        host[-1] = e
        hdeg = [d + (e >> x & 1) for x, d in enumerate(base)]
        if _embed(k, edges, order, back, pdeg, host_n, host, hdeg) is None:
            return i
    return -1


def is_canonical(cand, table, stride, nperms):
    """True iff the ascending mask tuple ``cand`` is least among its relabelings.

    ``table[p * stride + mask]`` is the image of ``mask`` under permutation p.
    """
    cand = tuple(cand)
    for p in range(nperms):
        base = p * stride
        if tuple(sorted([table[base + c] for c in cand])) < cand:
            return False
    return True

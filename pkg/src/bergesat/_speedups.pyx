# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors ``_pykernels`` step for step."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64


cdef struct Search:
    int k
    int ne
    int hn
    int M
    int *order
    int *back_start
    int *back_edges
    int *eu
    int *ev
    int *pdeg
    int *hdeg
    u64 *masks
    int *img
    u64 *pm
    int *match_left
    int *match_right
    char *visited
    int *saved


cdef bint _augment(Search *s, int e) noexcept nogil:
    cdef int j
    cdef u64 p = s.pm[e]
    for j in range(s.M):
        if not s.visited[j] and (s.masks[j] & p) == p:
            s.visited[j] = 1
            if s.match_right[j] == -1 or _augment(s, s.match_right[j]):
                s.match_right[j] = e
                s.match_left[e] = j
                return True
    return False


cdef bint _dfs(Search *s, int r, u64 used) noexcept nogil:
    cdef int v, x, t, e
    cdef bint ok
    cdef int *saved
    if r == s.k:
        return True
    v = s.order[r]
    saved = s.saved + r * s.ne
    for x in range(s.hn):
        if (used >> x) & 1 or s.hdeg[x] < s.pdeg[v]:
            continue
        s.img[v] = x
        memcpy(saved, s.match_left, s.ne * sizeof(int))
        ok = True
        for t in range(s.back_start[r], s.back_start[r + 1]):
            e = s.back_edges[t]
            s.pm[e] = ((<u64>1) << s.img[s.eu[e]]) | ((<u64>1) << s.img[s.ev[e]])
            memset(s.visited, 0, s.M)
            if not _augment(s, e):
                ok = False
                break
        if ok and _dfs(s, r + 1, used | ((<u64>1) << x)):
            return True
        for e in range(s.ne):
            if s.match_left[e] != -1:
                s.match_right[s.match_left[e]] = -1
        memcpy(s.match_left, saved, s.ne * sizeof(int))
        for e in range(s.ne):
            if s.match_left[e] != -1:
                s.match_right[s.match_left[e]] = e
        s.img[v] = -1
    return False


cdef void _free(Search *s) noexcept:
    free(s.order); free(s.back_start); free(s.back_edges)
    free(s.eu); free(s.ev); free(s.pdeg); free(s.hdeg)
    free(s.masks); free(s.img); free(s.pm)
    free(s.match_left); free(s.match_right); free(s.visited); free(s.saved)


cdef int _setup(Search *s, int k, edges, order, int host_n, masks, int extra_slots) except -1:
    cdef int i, r, e, u, v, M
    s.k = k
    s.ne = len(edges)
    s.hn = host_n
    M = len(masks) + extra_slots
    s.M = M
    s.order = <int *> malloc(max(k, 1) * sizeof(int))
    s.back_start = <int *> calloc(k + 2, sizeof(int))
    s.back_edges = <int *> malloc(max(s.ne, 1) * sizeof(int))
    s.eu = <int *> malloc(max(s.ne, 1) * sizeof(int))
    s.ev = <int *> malloc(max(s.ne, 1) * sizeof(int))
    s.pdeg = <int *> calloc(max(k, 1), sizeof(int))
    s.hdeg = <int *> calloc(max(host_n, 1), sizeof(int))
    s.masks = <u64 *> malloc(max(M, 1) * sizeof(u64))
    s.img = <int *> malloc(max(k, 1) * sizeof(int))
    s.pm = <u64 *> calloc(max(s.ne, 1), sizeof(u64))
    s.match_left = <int *> malloc(max(s.ne, 1) * sizeof(int))
    s.match_right = <int *> malloc(max(M, 1) * sizeof(int))
    s.visited = <char *> malloc(max(M, 1))
    s.saved = <int *> malloc(max(k * s.ne, 1) * sizeof(int))
    if (s.order == NULL or s.back_start == NULL or s.back_edges == NULL or s.eu == NULL
            or s.ev == NULL or s.pdeg == NULL or s.hdeg == NULL or s.masks == NULL
            or s.img == NULL or s.pm == NULL or s.match_left == NULL
            or s.match_right == NULL or s.visited == NULL or s.saved == NULL):
        _free(s)
        raise MemoryError()

    pos = [0] * k
    for r in range(k):
        s.order[r] = order[r]
        s.img[r] = -1
        pos[order[r]] = r
    back = [[] for _ in range(k)]
    for e in range(s.ne):
        u, v = edges[e]
        s.eu[e] = u
        s.ev[e] = v
        s.pdeg[u] += 1
        s.pdeg[v] += 1
        back[max(pos[u], pos[v])].append(e)
    i = 0
    for r in range(k):
        s.back_start[r] = i
        for e in back[r]:
            s.back_edges[i] = e
            i += 1
    s.back_start[k] = i
    for i in range(len(masks)):
        s.masks[i] = masks[i]
        for r in range(host_n):
            if (s.masks[i] >> r) & 1:
                s.hdeg[r] += 1
    return 0


cdef bint _run(Search *s) noexcept nogil:
    cdef int i
    for i in range(s.ne):
        s.match_left[i] = -1
    for i in range(s.M):
        s.match_right[i] = -1
    for i in range(s.k):
        s.img[i] = -1
    return _dfs(s, 0, 0)


def berge_embed(int k, edges, order, int host_n, masks):
    """Return ``(vertex_images, edge_to_hyperedge)`` or None."""
    cdef Search s
    cdef bint found
    masks = list(masks)
    if len(masks) < len(edges) or k > host_n:
        return None
    _setup(&s, k, edges, order, host_n, masks, 0)
    try:
        with nogil:
            found = _run(&s)
        if not found:
            return None
        return [s.img[i] for i in range(k)], [s.match_left[i] for i in range(s.ne)]
    finally:
        _free(&s)


def first_failing(int k, edges, order, int host_n, masks, extra):
    """Index of the first mask in ``extra`` whose addition yields no embedding, or -1."""
    cdef Search s
    cdef int i, x, last
    cdef u64 e
    cdef bint found
    masks = list(masks)
    if len(masks) + 1 < len(edges) or k > host_n:
        return 0 if len(extra) else -1
    _setup(&s, k, edges, order, host_n, masks, 1)
    last = s.M - 1
    try:
        for i in range(len(extra)):
            e = extra[i]
            s.masks[last] = e
            for x in range(host_n):
                if (e >> x) & 1:
                    s.hdeg[x] += 1
            with nogil:
                found = _run(&s)
            for x in range(host_n):
                if (e >> x) & 1:
                    s.hdeg[x] -= 1
            if not found:
                return i
        return -1
    finally:
        _free(&s)


cdef bint _canonical(const u64 *c, Py_ssize_t m, const unsigned long long[::1] table,
                     Py_ssize_t stride, Py_ssize_t nperms) noexcept nogil:
    cdef Py_ssize_t p, i, j, base
    cdef u64 im[64]
    cdef u64 tmp
    for p in range(nperms):
        base = p * stride
        for i in range(m):
            tmp = table[base + c[i]]
            j = i
            while j > 0 and im[j - 1] > tmp:
                im[j] = im[j - 1]
                j -= 1
            im[j] = tmp
        for i in range(m):
            if im[i] != c[i]:
                if im[i] < c[i]:
                    return False
                break
    return True


def is_canonical(cand, const unsigned long long[::1] table, Py_ssize_t stride, Py_ssize_t nperms):
    """True iff the ascending mask tuple ``cand`` is least among its relabelings."""
    cdef Py_ssize_t m = len(cand)
    cdef Py_ssize_t i
    cdef u64 c[64]
    cdef bint res
    if m > 64:
        raise ValueError("at most 64 hyperedges")
    for i in range(m):
        c[i] = cand[i]
    with nogil:
        res = _canonical(c, m, table, stride, nperms)
    return res

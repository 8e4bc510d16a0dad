# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled oracle kernel: component labels by union-find.

Same contract as _orakern_py.pair_labels, limited to n <= 64.
Independent of the engine kernel (different algorithm).
"""
COMPILED = True

DEF MAXN = 64
DEF MAXE = 2080


cdef int _find(int *parent, int a) nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


cdef void _label_set(int n, int ne, int *eu, int *ev, int ax, int ay,
                     int *out) nogil:
    cdef int parent[MAXN]
    cdef int i, u, v, ru, rv
    for i in range(n):
        parent[i] = i
    for i in range(ne):
        u = eu[i]
        v = ev[i]
        if u == ax or u == ay or v == ax or v == ay:
            continue
        ru = _find(parent, u)
        rv = _find(parent, v)
        if ru != rv:
            parent[rv] = ru
    for i in range(n):
        out[i] = _find(parent, i)
    if ax >= 0:
        out[ax] = -1
    if ay >= 0:
        out[ay] = -1


def pair_labels(int n, edges):
    """Component labels for G, G-{x}, and G-{x,y} with x < y."""
    if n > MAXN:
        raise ValueError("compiled kernel supports n <= 64")
    cdef int eu[MAXE]
    cdef int ev[MAXE]
    cdef int buf[MAXN]
    cdef int ne = len(edges)
    cdef int i, x, y, v, base
    if ne > MAXE:
        raise ValueError("too many edges")
    for i, (u, w) in enumerate(edges):
        eu[i] = u
        ev[i] = w

    lab0 = [0] * n
    lab1 = [0] * (n * n)
    lab2 = [0] * (n * n * n)

    _label_set(n, ne, eu, ev, -1, -1, buf)
    for v in range(n):
        lab0[v] = buf[v]
    for x in range(n):
        _label_set(n, ne, eu, ev, x, -1, buf)
        base = x * n
        for v in range(n):
            lab1[base + v] = buf[v]
    for x in range(n):
        for y in range(x + 1, n):
            _label_set(n, ne, eu, ev, x, y, buf)
            base = (x * n + y) * n
            for v in range(n):
                lab2[base + v] = buf[v]
    return lab0, lab1, lab2

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled connectivity kernel: component tables by bitmask flood fill.

Same contract as _connkern_py.component_tables, limited to n <= 64.
"""
from libc.stdint cimport uint64_t

COMPILED = True


cdef inline int _lowest_bit(uint64_t m) nogil:
    cdef int i = 0
    while not (m & 1):
        m >>= 1
        i += 1
    return i


cdef void _fill_components(int n, uint64_t *adj, uint64_t allowed,
                           uint64_t *out) nogil:
    cdef uint64_t rem = allowed, comp, frontier, nxt, f, b, m
    cdef int v
    for v in range(n):
        out[v] = 0
    while rem:
        b = rem & (~rem + 1)
        comp = b
        frontier = b
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & (~f + 1)
                f ^= b
                nxt |= adj[_lowest_bit(b)]
            frontier = nxt & allowed & ~comp
            comp |= frontier
        m = comp
        while m:
            b = m & (~m + 1)
            m ^= b
            out[_lowest_bit(b)] = comp
        rem &= ~comp


def component_tables(int n, adj):
    """Tables of component bitmasks for G, G-{x}, and G-{x,y} (x < y)."""
    if n > 64:
        raise ValueError("compiled kernel supports n <= 64")
    cdef uint64_t cadj[64]
    cdef uint64_t buf[64]
    cdef int i, x, y, v
    cdef uint64_t full = 0 if n == 0 else ((<uint64_t>1 << (n - 1) << 1) - 1)
    for i in range(n):
        cadj[i] = adj[i]

    comp = [0] * n
    comp1 = [0] * (n * n)
    comp2 = [0] * (n * n * n)

    _fill_components(n, cadj, full, buf)
    for v in range(n):
        comp[v] = buf[v]
    for x in range(n):
        _fill_components(n, cadj, full & ~(<uint64_t>1 << x), buf)
        for v in range(n):
            comp1[x * n + v] = buf[v]
    for x in range(n):
        for y in range(x + 1, n):
            _fill_components(
                n, cadj, full & ~(<uint64_t>1 << x) & ~(<uint64_t>1 << y), buf)
            for v in range(n):
                comp2[(x * n + y) * n + v] = buf[v]
    return comp, comp1, comp2

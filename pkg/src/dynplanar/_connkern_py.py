"""Pure-Python connectivity kernel: component tables by bitmask flood fill.

Fallback for the compiled twin (_connkern_cy); identical contract, works
for any domain size (Python ints as bitmasks).
"""
from __future__ import annotations

COMPILED = False


def _component_masks(n: int, adj: list[int], allowed: int) -> list[int]:
    """Component bitmask for every vertex inside `allowed` (0 outside)."""
    out = [0] * n
    rem = allowed
    while rem:
        low = rem & -rem
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & allowed & ~comp
            comp |= frontier
        m = comp
        while m:
            b = m & -m
            m ^= b
            out[b.bit_length() - 1] = comp
        rem &= ~comp
    return out


def component_tables(n: int, adj: list[int]) -> tuple[list[int], list[int], list[int]]:
    """Tables of component bitmasks for G, G-{x}, and G-{x,y} (x < y).

    comp[v]              component of v in G
    comp1[x*n + v]       component of v in G-{x}        (0 when v == x)
    comp2[(x*n+y)*n + v] component of v in G-{x,y}, x<y (0 when v in {x,y})
    """
    full = (1 << n) - 1
    comp = _component_masks(n, adj, full)
    comp1 = [0] * (n * n)
    for x in range(n):
        comp1[x * n:(x + 1) * n] = _component_masks(n, adj, full & ~(1 << x))
    comp2 = [0] * (n * n * n)
    for x in range(n):
        for y in range(x + 1, n):
            base = (x * n + y) * n
            comp2[base:base + n] = _component_masks(
                n, adj, full & ~(1 << x) & ~(1 << y))
    return comp, comp1, comp2

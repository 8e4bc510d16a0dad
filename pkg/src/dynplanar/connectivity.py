"""Connectivity under vertex avoidance, recomputed per graph version.

Each query family reduces to a table lookup against component tables of
G, G-{x}, and G-{x,y}, rebuilt from scratch for the current edge set
(no caching across versions). The table builder is a compiled kernel
when available, with a pure-Python fallback (env DYNPLANAR_PURE=1 forces
the fallback).
"""
from __future__ import annotations

import os

from .graph_core import DomainError

if os.environ.get("DYNPLANAR_PURE"):
    from . import _connkern_py as _kern
else:
    try:
        from . import _connkern_cy as _kern  # type: ignore[attr-defined]
    except ImportError:
        from . import _connkern_py as _kern

KERNEL_COMPILED: bool = _kern.COMPILED


def _build_tables(n: int, adj: list[int]):
    if _kern.COMPILED and n > 64:
        from . import _connkern_py
        return _connkern_py.component_tables(n, adj)
    return _kern.component_tables(n, adj)


class ConnTables:
    """Avoidance-connectivity tables for one fixed edge set."""

    __slots__ = ("n", "comp", "comp1", "comp2")

    def __init__(self, n: int, adj: list[int]):
        self.n = n
        self.comp, self.comp1, self.comp2 = _build_tables(n, adj)

    @classmethod
    def from_edges(cls, n: int, edges) -> ConnTables:
        adj = [0] * n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def _check(self, *vs: int) -> None:
        n = self.n
        for v in vs:
            if not 0 <= v < n:
                raise DomainError(f"vertex {v!r} outside domain [0,{n})")

    def connected(self, u: int, v: int) -> bool:
        """True iff u and v are in the same component (u == u counts)."""
        self._check(u, v)
        return bool(self.comp[u] >> v & 1) or u == v

    def connected_avoiding(self, u: int, v: int, x: int) -> bool:
        """True iff u reaches v in G - {x}; u,v must differ from x."""
        self._check(u, v, x)
        if x == u or x == v:
            raise DomainError(f"avoided vertex {x} coincides with an endpoint")
        return u == v or bool(self.comp1[x * self.n + u] >> v & 1)

    def connected_avoiding_pair(self, u: int, v: int, x: int, y: int) -> bool:
        """True iff u reaches v in G - {x,y}; {u,v} and {x,y} must be disjoint."""
        self._check(u, v, x, y)
        if x == y:
            raise DomainError("avoided pair must be two distinct vertices")
        if {u, v} & {x, y}:
            raise DomainError("avoided pair overlaps the endpoints")
        if x > y:
            x, y = y, x
        return u == v or bool(self.comp2[(x * self.n + y) * self.n + u] >> v & 1)

    def three_connected_pair(self, s: int, t: int) -> bool:
        """True iff s reaches t in G - {u,v} for every pair u,v outside {s,t}."""
        self._check(s, t)
        if s == t:
            raise DomainError("three_connected_pair needs two distinct vertices")
        n = self.n
        comp2 = self.comp2
        for x in range(n):
            if x == s or x == t:
                continue
            for y in range(x + 1, n):
                if y == s or y == t:
                    continue
                if not (comp2[(x * n + y) * n + s] >> t & 1):
                    return False
        return True


# Convenience single-shot forms (each builds fresh tables; fine for
# occasional use, the engine holds one ConnTables per version instead).

def connected(n: int, edges, u: int, v: int) -> bool:
    return ConnTables.from_edges(n, edges).connected(u, v)


def connected_avoiding(n: int, edges, u: int, v: int, x: int) -> bool:
    return ConnTables.from_edges(n, edges).connected_avoiding(u, v, x)


def connected_avoiding_pair(n: int, edges, u: int, v: int, x: int, y: int) -> bool:
    return ConnTables.from_edges(n, edges).connected_avoiding_pair(u, v, x, y)


def three_connected_pair(n: int, edges, s: int, t: int) -> bool:
    return ConnTables.from_edges(n, edges).three_connected_pair(s, t)

"""Embedding validation: face tracing plus the Euler check.

A rotation system (clockwise neighbour cycle per vertex) is a planar
(genus-0) embedding iff, for every connected component, V - E + F = 2
where F counts the orbits of the face-successor rule
next(u->v) = (v, clockwise-predecessor of u at v).
"""
from __future__ import annotations


def validate_rotation(edges, rot, explain: bool = False):
    """True iff `rot` is a planar rotation system covering `edges`.

    edges: iterable of vertex pairs; rot: mapping v -> cyclic neighbour
    sequence. Raises ValueError on malformed rotations (incidences not
    covered exactly once).
    """
    edges = {(min(u, v), max(u, v)) for (u, v) in edges}
    want: dict[int, set[int]] = {}
    for u, v in edges:
        want.setdefault(u, set()).add(v)
        want.setdefault(v, set()).add(u)
    for v, nbrs in want.items():
        seq = tuple(rot.get(v, ()))
        if len(seq) != len(set(seq)) or set(seq) != nbrs:
            raise ValueError(f"rotation at {v} does not cover its incidences")
    for v in rot:
        if v not in want and len(tuple(rot[v])) > 0:
            raise ValueError(f"rotation lists unknown vertex {v}")

    prev: dict[int, dict[int, int]] = {}
    for v, nbrs in want.items():
        seq = tuple(rot[v])
        prev[v] = {seq[i]: seq[i - 1] for i in range(len(seq))}

    # orbit count per connected component
    comp_of: dict[int, int] = {}
    for s in sorted(want):
        if s in comp_of:
            continue
        comp_of[s] = s
        queue = [s]
        while queue:
            x = queue.pop()
            for y in want[x]:
                if y not in comp_of:
                    comp_of[y] = s
                    queue.append(y)

    darts = {(u, v) for u in want for v in want[u]}
    fcount: dict[int, int] = {}
    while darts:
        u0, v0 = min(darts)
        fcount[comp_of[u0]] = fcount.get(comp_of[u0], 0) + 1
        u, v = u0, v0
        while True:
            darts.remove((u, v))
            u, v = v, prev[v][u]
            if (u, v) == (u0, v0):
                break

    for s in set(comp_of.values()):
        vs = sum(1 for v in comp_of if comp_of[v] == s)
        es = sum(1 for (u, v) in edges if comp_of[u] == s)
        fs = fcount.get(s, 0)
        if vs - es + fs != 2:
            if explain:
                return False, f"component of {s}: V-E+F = {vs}-{es}+{fs} != 2"
            return False
    return (True, "") if explain else True

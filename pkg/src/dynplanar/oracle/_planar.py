"""Static planarity by iterative face embedding (cycle-plus-fragments).

Classic incremental method: embed a cycle of each biconnected block,
then repeatedly place a connecting path of some unembedded fragment
into an admissible face (one whose boundary contains all attachment
vertices of the fragment), preferring fragments with a unique
admissible face. A fragment with no admissible face proves
non-planarity; embedding everything proves planarity. Exact for the
documented desk-scale budget.
"""
from __future__ import annotations


class OracleBudgetError(ValueError):
    """Input exceeds the documented oracle budget."""


PLANARITY_BUDGET = 14  # active (non-isolated) vertices


def _adjacency(edges) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v in adj:
        adj[v].sort()
    return adj


def blocks_by_dfs(edges) -> list[list[tuple[int, int]]]:
    """Biconnected components as edge lists (lowpoint algorithm)."""
    adj = _adjacency(edges)
    visited: set[int] = set()
    num: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int] = {}
    counter = 0
    blocks: list[list[tuple[int, int]]] = []
    estack: list[tuple[int, int]] = []
    for root in sorted(adj):
        if root in visited:
            continue
        counter += 1
        num[root] = low[root] = counter
        visited.add(root)
        stack = [(root, iter(adj[root]))]
        while stack:
            v, it = stack[-1]
            descended = False
            for w in it:
                if w not in visited:
                    estack.append((v, w))
                    parent[w] = v
                    counter += 1
                    num[w] = low[w] = counter
                    visited.add(w)
                    stack.append((w, iter(adj[w])))
                    descended = True
                    break
                if w != parent.get(v) and num[w] < num[v]:
                    estack.append((v, w))
                    if num[w] < low[v]:
                        low[v] = num[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= num[u]:
                comp: list[tuple[int, int]] = []
                while True:
                    e = estack.pop()
                    comp.append((min(e), max(e)))
                    if e == (u, v):
                        break
                blocks.append(sorted(set(comp)))
    return blocks


def _find_cycle(adj: dict[int, list[int]],
                first_edge: tuple[int, int]) -> list[int]:
    """A simple cycle: first_edge plus a shortest path avoiding it."""
    u, v = first_edge
    prev: dict[int, int | None] = {u: None}
    queue = [u]
    while v not in prev:
        nxt: list[int] = []
        for x in queue:
            for y in adj[x]:
                if y in prev or {x, y} == {u, v}:
                    continue
                prev[y] = x
                nxt.append(y)
        queue = nxt
        assert queue or v in prev, "block not 2-connected"
    path = [v]
    while path[-1] != u:
        path.append(prev[path[-1]])
    return path


def _block_planar(block_edges: list[tuple[int, int]]) -> bool:
    """Planarity of one biconnected block with >= 3 vertices."""
    adj = _adjacency(block_edges)
    nv = len(adj)
    ne = len(block_edges)
    if ne > 3 * nv - 6:
        return False
    cycle = _find_cycle(adj, block_edges[0])
    embedded_v = set(cycle)
    embedded_e = set()
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        embedded_e.add((min(v, w), max(v, w)))
    faces: list[list[int]] = [list(cycle), list(reversed(cycle))]

    edge_set = set(block_edges)
    while len(embedded_e) < ne:
        fragments: list[tuple[frozenset[int], list[int]]] = []
        # chord fragments: unembedded edges between embedded vertices
        for (u, v) in sorted(edge_set - embedded_e):
            if u in embedded_v and v in embedded_v:
                fragments.append((frozenset((u, v)), [u, v]))
        # component fragments: pieces hanging off the embedded subgraph
        seen: set[int] = set()
        for s in sorted(adj):
            if s in embedded_v or s in seen:
                continue
            piece = {s}
            queue = [s]
            attach = set()
            while queue:
                x = queue.pop()
                for y in adj[x]:
                    if y in embedded_v:
                        attach.add(y)
                    elif y not in piece:
                        piece.add(y)
                        queue.append(y)
            seen |= piece
            a1 = min(attach)
            # shortest path a1 -> (another attachment) through the piece
            prev = {a1: None}
            queue = [a1]
            end = None
            while queue and end is None:
                nxt: list[int] = []
                for x in queue:
                    for y in adj[x]:
                        if y in prev:
                            continue
                        if y in embedded_v:
                            if x != a1:
                                prev[y] = x
                                end = y
                                break
                            continue
                        if y in piece:
                            prev[y] = x
                            nxt.append(y)
                    if end is not None:
                        break
                queue = nxt
            assert end is not None, "fragment with a single attachment"
            path = [end]
            while path[-1] != a1:
                path.append(prev[path[-1]])
            path.reverse()
            fragments.append((frozenset(attach), path))

        # pick the most constrained fragment
        best = None
        for attach, path in fragments:
            adm = [f for f in faces if attach <= set(f)]
            if not adm:
                return False
            if best is None or len(adm) < len(best[1]):
                best = ((attach, path), adm)
            if len(adm) == 1:
                break
        (attach, path), adm = best
        face = adm[0]
        a1, a2 = path[0], path[-1]
        i = face.index(a1)
        face = face[i:] + face[:i]
        j = face.index(a2)
        interior = path[1:-1]
        faces.remove(adm[0])
        faces.append(face[: j + 1] + list(reversed(interior)))
        faces.append(face[j:] + [face[0]] + interior)
        for k in range(len(path) - 1):
            embedded_e.add((min(path[k], path[k + 1]), max(path[k], path[k + 1])))
        embedded_v |= set(interior)
    return True


def static_planar(n: int, edges) -> bool:
    """Exact planarity of the graph over domain [0, n)."""
    edges = sorted({(min(u, v), max(u, v)) for (u, v) in edges})
    active = {v for e in edges for v in e}
    if len(active) > PLANARITY_BUDGET:
        raise OracleBudgetError(
            f"{len(active)} active vertices exceed the oracle budget "
            f"({PLANARITY_BUDGET})")
    for block in blocks_by_dfs(edges):
        if len(block) >= 3 and not _block_planar(block):
            return False
    return True

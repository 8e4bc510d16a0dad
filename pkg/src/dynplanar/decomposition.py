"""BC-tree and SPQR-tree state, recomputed from definitions per version.

Everything here is a pure function of the current edge set: blocks are
edge closures under the biconnectivity relation, cut vertices come from
the one-avoidance tables, separating pairs from the pair-avoidance
tables plus a disconnection witness, and triconnected components from a
greedy closure of qualifying vertex triples. Canonical names make the
dump byte-stable, so two states over the same edge set dump identically.

Node references used by the betweenness/path operations:

    BC   nodes: ("B", (a, b))  block   /  ("C", v)      cut vertex
    SPQR nodes: ("P", (s, t))  pair    /  ("S"|"R", (x, y, z)) component
"""
from __future__ import annotations

from dataclasses import dataclass

from .connectivity import ConnTables
from .graph_core import DomainError, Edge, GraphError, Vertex, canonical_edge

BlockName = tuple[int, int]
TriName = tuple[int, int, int]
BCNode = tuple  # ("B", BlockName) | ("C", Vertex)
SpqrNode = tuple  # ("P", Edge) | (kind, TriName)


def _bits(mask: int):
    """Set bit positions of mask, in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------- node data

@dataclass(frozen=True)
class TriComp:
    """One triconnected component of a block."""

    name: TriName
    kind: str  # "R" (rigid) or "S" (cycle)
    vertices: frozenset[Vertex]
    real_edges: frozenset[Edge]
    pairs: frozenset[Edge]

    def content_key(self) -> tuple:
        return (self.vertices, self.real_edges, self.pairs)


@dataclass(frozen=True)
class Block:
    """One biconnected component (a bridge counts as its own block)."""

    name: BlockName
    vertices: frozenset[Vertex]
    edges: frozenset[Edge]
    pairs: frozenset[Edge]
    comps: tuple[TriComp, ...]

    @property
    def is_bridge(self) -> bool:
        return len(self.vertices) == 2


# -------------------------------------------------------- local micro-checks

def _local_components(vertices, edge_list, banned=()):
    adj: dict[int, list[int]] = {v: [] for v in vertices if v not in banned}
    for u, v in edge_list:
        if u in adj and v in adj:
            adj[u].append(v)
            adj[v].append(u)
    seen: set[int] = set()
    count = 0
    for s in adj:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def _graph_three_connected(vertices, edge_list) -> bool:
    if len(vertices) < 4:
        return False
    if _local_components(vertices, edge_list) != 1:
        return False
    vs = sorted(vertices)
    for i, x in enumerate(vs):
        if _local_components(vertices, edge_list, (x,)) != 1:
            return False
        for y in vs[i + 1:]:
            if _local_components(vertices, edge_list, (x, y)) != 1:
                return False
    return True


def _graph_is_cycle(vertices, edge_list) -> bool:
    deg = {v: 0 for v in vertices}
    for u, v in edge_list:
        deg[u] += 1
        deg[v] += 1
    return (len(edge_list) == len(vertices)
            and all(d == 2 for d in deg.values())
            and _local_components(vertices, edge_list) == 1)


# ------------------------------------------------------------- tree walking

def _tree_path(adj: dict, a, b):
    """Unique path a..b in a forest given by adjacency; None if separated."""
    if a not in adj or b not in adj:
        return None
    prev = {a: None}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    if b not in prev:
        return None
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


# --------------------------------------------------------------- main state

class DecompositionState:
    """Snapshot of blocks, cut vertices, pairs, and triconnected comps."""

    __slots__ = (
        "n", "edges", "tables", "blocks", "cut_vertices",
        "_block_by_name", "_block_of_edge", "_blocks_of_vertex",
        "_bc_adj", "_spqr_adj", "_spqr_block",
    )

    def __init__(self, n: int, edges: frozenset[Edge], tables: ConnTables,
                 blocks: tuple[Block, ...], cut_vertices: frozenset[Vertex]):
        self.n = n
        self.edges = edges
        self.tables = tables
        self.blocks = blocks
        self.cut_vertices = cut_vertices
        self._block_by_name = {b.name: b for b in blocks}
        self._block_of_edge: dict[Edge, Block] = {}
        self._blocks_of_vertex: dict[Vertex, list[Block]] = {}
        for b in blocks:
            for e in b.edges:
                self._block_of_edge[e] = b
            for v in b.vertices:
                self._blocks_of_vertex.setdefault(v, []).append(b)
        self._bc_adj: dict[BCNode, list[BCNode]] = {}
        for b in blocks:
            bn: BCNode = ("B", b.name)
            self._bc_adj.setdefault(bn, [])
            for v in sorted(b.vertices & cut_vertices):
                cn: BCNode = ("C", v)
                self._bc_adj.setdefault(cn, [])
                self._bc_adj[bn].append(cn)
                self._bc_adj[cn].append(bn)
        self._spqr_adj: dict[SpqrNode, list[SpqrNode]] = {}
        self._spqr_block: dict[SpqrNode, BlockName] = {}
        for b in blocks:
            for p in sorted(b.pairs):
                pn: SpqrNode = ("P", p)
                self._spqr_adj.setdefault(pn, [])
                self._spqr_block[pn] = b.name
            for c in b.comps:
                cn = (c.kind, c.name)
                self._spqr_adj.setdefault(cn, [])
                self._spqr_block[cn] = b.name
                for p in sorted(c.pairs):
                    pn = ("P", p)
                    self._spqr_adj[pn].append(cn)
                    self._spqr_adj[cn].append(pn)

    # ---------------------------------------------------------- construction

    @classmethod
    def from_edges(cls, n: int, edges) -> DecompositionState:
        eset = frozenset(canonical_edge(u, v) for (u, v) in edges)
        tables = ConnTables.from_edges(n, eset)
        comp = tables.comp
        comp1 = tables.comp1

        active = sorted({v for e in eset for v in e})
        active_mask = 0
        for v in active:
            active_mask |= 1 << v

        # cut vertices: removing w splits w's own component
        cuts: set[Vertex] = set()
        for w in active:
            rest = comp[w] & ~(1 << w)
            if rest == 0:
                continue
            v0 = (rest & -rest).bit_length() - 1
            if comp1[w * n + v0] & rest != rest:
                cuts.add(w)

        # same-block relation (memoized within this recompute)
        same_memo: dict[Edge, bool] = {}

        def same_block_raw(u: Vertex, v: Vertex) -> bool:
            key = (u, v) if u < v else (v, u)
            hit = same_memo.get(key)
            if hit is not None:
                return hit
            ok = bool(comp[u] >> v & 1)
            if ok:
                others = comp[u] & ~(1 << u) & ~(1 << v)
                for w in _bits(others):
                    if not comp1[w * n + u] >> v & 1:
                        ok = False
                        break
            same_memo[key] = ok
            return ok

        # blocks: closure of each edge under shared biconnectivity
        groups: dict[frozenset[Vertex], set[Edge]] = {}
        for e in sorted(eset):
            u, v = e
            members = {u, v}
            others = comp[u] & ~(1 << u) & ~(1 << v)
            for w in _bits(others):
                if same_block_raw(u, w) and same_block_raw(v, w):
                    members.add(w)
            groups.setdefault(frozenset(members), set()).add(e)

        # separating pairs per block, then components per block
        blocks: list[Block] = []
        all_pairs: list[Edge] = []
        block_pairs: dict[frozenset[Vertex], list[Edge]] = {}
        for vset in groups:
            found: list[Edge] = []
            if len(vset) >= 3:
                svs = sorted(vset)
                for i, s in enumerate(svs):
                    for t in svs[i + 1:]:
                        if not tables.three_connected_pair(s, t):
                            continue
                        if cls._has_split_witness(tables, active, s, t):
                            found.append((s, t))
            block_pairs[vset] = found
            all_pairs.extend(found)

        pair_set = set(all_pairs)
        comp2 = tables.comp2

        def triple_passes(a: int, b: int, c: int) -> bool:
            for s, t in all_pairs:
                base = (s * n + t) * n
                last = None
                for w in (a, b, c):
                    if w == s or w == t:
                        continue
                    if last is not None and not comp2[base + last] >> w & 1:
                        return False
                    last = w
            return True

        for vset, bedges in sorted(groups.items(),
                                   key=lambda kv: sorted(kv[0])[:2]):
            svs = sorted(vset)
            bname = (svs[0], svs[1])
            bpairs = frozenset(block_pairs[vset])
            comps: list[TriComp] = []
            comp_sets: list[set[Vertex]] = []
            passing: list[TriName] = []
            for i, a in enumerate(svs):
                for j in range(i + 1, len(svs)):
                    for k in range(j + 1, len(svs)):
                        if triple_passes(a, svs[j], svs[k]):
                            passing.append((a, svs[j], svs[k]))
            for tri in passing:
                if any(set(tri) <= w for w in comp_sets):
                    continue
                grown = set(tri)
                for x in svs:
                    if x in grown:
                        continue
                    mem = sorted(grown)
                    if all(triple_passes(mem[i], mem[j], x)
                           for i in range(len(mem))
                           for j in range(i + 1, len(mem))):
                        grown.add(x)
                comp_sets.append(grown)
            for tri in passing:
                assert sum(1 for w in comp_sets if set(tri) <= w) == 1, \
                    f"triple {tri} not in exactly one component"
            for w in comp_sets:
                cpairs = frozenset(p for p in bpairs
                                   if p[0] in w and p[1] in w)
                creal = frozenset(e for e in bedges
                                  if e[0] in w and e[1] in w
                                  and e not in pair_set)
                cedges = sorted(creal | cpairs)
                if _graph_three_connected(w, cedges):
                    kind = "R"
                else:
                    assert _graph_is_cycle(w, cedges), \
                        f"component {sorted(w)} neither rigid nor a cycle"
                    kind = "S"
                comps.append(TriComp(tuple(sorted(w)[:3]), kind,
                                     frozenset(w), creal, cpairs))
            if len(vset) >= 3:
                covered = set()
                for c in comps:
                    covered |= c.vertices
                assert covered == set(vset), \
                    f"components do not cover block {bname}"
            comps.sort(key=lambda c: c.name)
            blocks.append(Block(bname, frozenset(vset), frozenset(bedges),
                                bpairs, tuple(comps)))

        blocks.sort(key=lambda b: b.name)
        state = cls(n, eset, tables, tuple(blocks), frozenset(cuts))

        if __debug__:
            by_membership = {v for v in active
                             if len(state._blocks_of_vertex.get(v, [])) >= 2}
            assert by_membership == set(cuts), \
                "cut vertices disagree with block membership counts"
            for b in blocks:
                inside = {e for e in eset
                          if e[0] in b.vertices and e[1] in b.vertices}
                assert inside == set(b.edges), \
                    f"block {b.name} edge set is not membership-closed"
        return state

    @staticmethod
    def _has_split_witness(tables: ConnTables, active, s: int, t: int) -> bool:
        """Some pair stays connected avoiding s and avoiding t but not both."""
        n = tables.n
        comp1 = tables.comp1
        comp2 = tables.comp2
        base = ((s * n + t) if s < t else (t * n + s)) * n
        cand = [u for u in active if u != s and u != t
                and tables.comp[u] >> s & 1]
        for i, u in enumerate(cand):
            for v in cand[i + 1:]:
                if (comp1[s * n + u] >> v & 1 and comp1[t * n + u] >> v & 1
                        and not comp2[base + u] >> v & 1):
                    return True
        return False

    @classmethod
    def from_graph(cls, graph) -> DecompositionState:
        return cls.from_edges(graph.n, graph.edges)

    def with_edge(self, u: Vertex, v: Vertex) -> DecompositionState:
        return DecompositionState.from_edges(
            self.n, self.edges | {canonical_edge(u, v)})

    def without_edge(self, u: Vertex, v: Vertex) -> DecompositionState:
        return DecompositionState.from_edges(
            self.n, self.edges - {canonical_edge(u, v)})

    # ------------------------------------------------------------ vertex ops

    def _check_vertex(self, *vs: Vertex) -> None:
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) \
                    or not 0 <= v < self.n:
                raise DomainError(f"vertex {v!r} outside domain [0,{self.n})")

    def is_cut_vertex(self, w: Vertex) -> bool:
        self._check_vertex(w)
        return w in self.cut_vertices

    def same_block(self, u: Vertex, v: Vertex) -> bool:
        self._check_vertex(u, v)
        if u == v:
            raise GraphError("same_block needs two distinct vertices")
        bu = self._blocks_of_vertex.get(u, [])
        bv = self._blocks_of_vertex.get(v, [])
        return any(b1 is b2 for b1 in bu for b2 in bv)

    def block_name(self, u: Vertex, v: Vertex) -> BlockName:
        if not self.same_block(u, v):
            raise GraphError(f"vertices {u} and {v} share no block")
        for b in self._blocks_of_vertex[u]:
            if v in b.vertices:
                return b.name
        raise AssertionError("unreachable")

    def block_of(self, u: Vertex, v: Vertex) -> Block:
        return self._block_by_name[self.block_name(u, v)]

    def block(self, name: BlockName) -> Block:
        try:
            return self._block_by_name[name]
        except KeyError:
            raise GraphError(f"no block named {name}") from None

    def blocks_of_vertex(self, v: Vertex) -> tuple[Block, ...]:
        self._check_vertex(v)
        return tuple(self._blocks_of_vertex.get(v, []))

    # ------------------------------------------------------------- BC walks

    def _check_bc_node(self, x: BCNode) -> None:
        if x not in self._bc_adj:
            raise GraphError(f"no BC-tree node {x!r}")

    def bc_between(self, x1: BCNode, x2: BCNode, x3: BCNode) -> bool:
        for x in (x1, x2, x3):
            self._check_bc_node(x)
        path = _tree_path(self._bc_adj, x1, x3)
        if path is None:
            raise GraphError("BC-tree nodes lie in different components")
        return x2 in path

    def bc_path_blocks(self, a: Vertex, b: Vertex):
        """Blocks B_0..B_r and chain vertices w_0=a,..,w_{r+1}=b between
        two connected vertices: consecutive chain vertices share B_i."""
        self._check_vertex(a, b)
        if a == b or not self.tables.connected(a, b):
            raise GraphError(f"vertices {a} and {b} must differ and connect")
        start: BCNode = ("C", a) if a in self.cut_vertices \
            else ("B", self._blocks_of_vertex[a][0].name)
        goal: BCNode = ("C", b) if b in self.cut_vertices \
            else ("B", self._blocks_of_vertex[b][0].name)
        path = _tree_path(self._bc_adj, start, goal)
        assert path is not None, "connected vertices share a BC tree"
        blocks = [self._block_by_name[x[1]] for x in path if x[0] == "B"]
        chain = [a] + [x[1] for x in path if x[0] == "C" and x[1] not in (a, b)]
        chain.append(b)
        assert len(chain) == len(blocks) + 1
        for i, blk in enumerate(blocks):
            assert chain[i] in blk.vertices and chain[i + 1] in blk.vertices
        return blocks, chain

    # ------------------------------------------------------------ SPQR walks

    def is_separating_pair(self, s: Vertex, t: Vertex) -> bool:
        self._check_vertex(s, t)
        if s == t:
            raise GraphError("is_separating_pair needs two distinct vertices")
        p = (s, t) if s < t else (t, s)
        return ("P", p) in self._spqr_adj

    def same_tricomp(self, a: Vertex, b: Vertex, c: Vertex):
        """Canonical (name, kind) of the common component, else None."""
        self._check_vertex(a, b, c)
        if len({a, b, c}) != 3:
            raise GraphError("same_tricomp needs three distinct vertices")
        for blk in self._blocks_of_vertex.get(a, []):
            for comp in blk.comps:
                if a in comp.vertices and b in comp.vertices \
                        and c in comp.vertices:
                    return (comp.name, comp.kind)
        return None

    def comps_with_pair(self, block_name: BlockName, pair: Edge):
        blk = self.block(block_name)
        return tuple(c for c in blk.comps if pair in c.pairs)

    def comps_of_vertex(self, block_name: BlockName, v: Vertex):
        blk = self.block(block_name)
        return tuple(c for c in blk.comps if v in c.vertices)

    def _check_spqr_node(self, w: SpqrNode) -> BlockName:
        try:
            return self._spqr_block[w]
        except KeyError:
            raise GraphError(f"no SPQR-tree node {w!r}") from None

    def spqr_between(self, w1: SpqrNode, w2: SpqrNode, w3: SpqrNode) -> bool:
        b1 = self._check_spqr_node(w1)
        b2 = self._check_spqr_node(w2)
        b3 = self._check_spqr_node(w3)
        if not b1 == b2 == b3:
            raise GraphError("SPQR-tree nodes lie in different blocks")
        path = _tree_path(self._spqr_adj, w1, w3)
        assert path is not None
        return w2 in path

    def spqr_path(self, w1: SpqrNode, w2: SpqrNode) -> list[SpqrNode]:
        b1 = self._check_spqr_node(w1)
        b2 = self._check_spqr_node(w2)
        if b1 != b2:
            raise GraphError("SPQR-tree nodes lie in different blocks")
        path = _tree_path(self._spqr_adj, w1, w2)
        assert path is not None
        return path

    # ---------------------------------------------------------------- levels

    def level_between(self, u: Vertex, v: Vertex) -> int:
        self._check_vertex(u, v)
        if u == v:
            raise GraphError("level_between needs two distinct vertices")
        if not self.tables.connected(u, v):
            return 0
        best = 1
        for blk in self._blocks_of_vertex.get(u, []):
            if v not in blk.vertices or blk.is_bridge:
                continue
            best = 2
            for comp in blk.comps:
                if comp.kind == "R" and u in comp.vertices \
                        and v in comp.vertices:
                    return 3
        return best

    def predict_insert_level(self, u: Vertex, v: Vertex) -> int:
        return self.with_edge(u, v).level_between(u, v)

    def predict_delete_level(self, u: Vertex, v: Vertex) -> int:
        return self.without_edge(u, v).level_between(u, v)

    # ------------------------------------------------------------------ dump

    def dump(self) -> str:
        lines = ["bc-tree"]
        node_lines = [f"node B({b.name[0]},{b.name[1]})" for b in self.blocks]
        node_lines += [f"node C({v})" for v in self.cut_vertices]
        lines += sorted(node_lines)
        edge_lines = []
        for b in self.blocks:
            for v in self.cut_vertices:
                if v in b.vertices:
                    edge_lines.append(f"edge B({b.name[0]},{b.name[1]}) C({v})")
        lines += sorted(edge_lines)
        sections = []
        for b in self.blocks:
            if not b.comps:
                continue
            sec = [f"spqr-tree B({b.name[0]},{b.name[1]})"]
            node_lines = [f"node P({s},{t})" for (s, t) in b.pairs]
            node_lines += [
                f"node {c.kind}({c.name[0]},{c.name[1]},{c.name[2]})"
                for c in b.comps]
            sec += sorted(node_lines)
            edge_lines = []
            for c in b.comps:
                for (s, t) in c.pairs:
                    edge_lines.append(
                        f"edge P({s},{t}) "
                        f"{c.kind}({c.name[0]},{c.name[1]},{c.name[2]})")
            sec += sorted(edge_lines)
            sections.append(sec)
        sections.sort(key=lambda sec: sec[0])
        for sec in sections:
            lines += sec
        return "\n".join(lines)

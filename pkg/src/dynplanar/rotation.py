"""Extended planar embeddings: vertex rotations plus traced faces.

An embedding stores one clockwise neighbour cycle per vertex. Faces are
never stored independently: they are the orbits of the successor rule

    next(u -> v) = (v, clockwise-predecessor of u at v)

retraced after every structural change, so the face scheme can never
drift from the rotation scheme. Each face keeps its orbit orientation;
one face carries the outer flag. Moving the flag changes no stored
triple (the drawn boundary orientations of exactly the old and new
outer faces reverse, which is a derived notion here).

Face names are the lexicographically least ordered vertex triple that
occurs on the face boundary in orbit order; names are recomputed after
every operation.
"""
from __future__ import annotations

from .graph_core import Edge, GraphError, Vertex, canonical_edge

FaceId = tuple[int, int, int]


# ------------------------------------------------------------ cyclic helpers

def least_rotation(cycle):
    """Lexicographically least rotation of a sequence (as a tuple)."""
    tup = tuple(cycle)
    if not tup:
        return tup
    return min(tup[i:] + tup[:i] for i in range(len(tup)))


def opened_at(seq, x):
    """Rotate a cyclic sequence to start at element x."""
    tup = tuple(seq)
    try:
        i = tup.index(x)
    except ValueError:
        raise GraphError(f"{x} is not in the cyclic sequence") from None
    return tup[i:] + tup[:i]


def opened_at_least(seq):
    tup = tuple(seq)
    return opened_at(tup, min(tup)) if tup else tup


def cyclic_triple_query(seq, a, b, c) -> bool:
    """True iff a, b, c occur in this cyclic order in seq."""
    tup = tuple(seq)
    if len({a, b, c}) != 3:
        raise GraphError("triple query needs three distinct vertices")
    try:
        ia, ib, ic = tup.index(a), tup.index(b), tup.index(c)
    except ValueError:
        raise GraphError("triple query argument is not in the cycle") from None
    k = len(tup)
    return (ib - ia) % k < (ic - ia) % k


def merge_rotation_schemes(orders) -> tuple:
    """Concatenate cyclic orders, each opened at its anchor pair.

    orders: list of (cyclic sequence C_i, (s_i, t_i)) where s_i is the
    clockwise successor of t_i in C_i. The result is the cyclic order
    s_1..t_1 s_2..t_2 ... s_k..t_k.
    """
    if not orders:
        raise GraphError("nothing to merge")
    merged: list = []
    seen: set = set()
    for seq, (s, t) in orders:
        tup = tuple(seq)
        if not tup:
            raise GraphError("cannot merge an empty cyclic order")
        if set(tup) & seen:
            raise GraphError("cyclic orders to merge must be disjoint")
        if s not in tup or t not in tup:
            raise GraphError("anchor pair must lie in its cyclic order")
        run = opened_at(tup, s)
        if run[-1] != t:
            raise GraphError("anchor pair must be cyclically consecutive")
        merged.extend(run)
        seen.update(tup)
    return tuple(merged)


# ---------------------------------------------------------------- face trace

def trace_orbits(rot):
    """Face orbits of a rotation scheme, as normalized boundary tuples.

    Returns (orbits, dart_orbit) where orbits[i] is the vertex cycle of
    orbit i in trace orientation (least rotation) and dart_orbit maps
    each dart (u, v) to its orbit index.
    """
    prev: dict[Vertex, dict[Vertex, Vertex]] = {}
    for v, seq in rot.items():
        tup = tuple(seq)
        if len(tup) != len(set(tup)) or v in tup:
            raise GraphError(f"malformed rotation at vertex {v}")
        prev[v] = {tup[i]: tup[i - 1] for i in range(len(tup))}
    darts = {(u, v) for u, seq in rot.items() for v in seq}
    for u, v in darts:
        if v not in prev or u not in prev[v]:
            raise GraphError(f"dart ({u},{v}) has no reverse incidence")
    orbits: list[tuple] = []
    dart_orbit: dict[tuple, int] = {}
    left = set(darts)
    while left:
        u0, v0 = min(left)
        cycle = []
        u, v = u0, v0
        while True:
            cycle.append(u)
            dart_orbit[(u, v)] = len(orbits)
            left.remove((u, v))
            u, v = v, prev[v][u]
            if (u, v) == (u0, v0):
                break
        orbits.append(least_rotation(cycle))
    return orbits, dart_orbit


def face_name(boundary) -> FaceId:
    """Least ordered vertex triple occurring in boundary (orbit) order."""
    b = least_rotation(tuple(boundary))
    m = len(b)
    if m < 3 or len(set(b)) != m:
        raise GraphError(f"face boundary {b} has no canonical triple name")
    if m == 3:
        return b
    y = min(b[1:m - 1])
    iy = b.index(y)
    z = min(b[iy + 1:])
    return (b[0], y, z)


def euler_per_component(rot) -> bool:
    """V - E + F = 2 for every connected component of the rotation scheme."""
    comp_of: dict[Vertex, Vertex] = {}
    for s in sorted(rot):
        if s in comp_of:
            continue
        comp_of[s] = s
        stack = [s]
        while stack:
            x = stack.pop()
            for y in rot[x]:
                if y not in comp_of:
                    comp_of[y] = s
                    stack.append(y)
    orbits, _ = trace_orbits(rot)
    for root in set(comp_of.values()):
        vs = sum(1 for v in comp_of if comp_of[v] == root)
        es = sum(len(seq) for v, seq in rot.items()
                 if comp_of[v] == root) // 2
        fs = sum(1 for b in orbits if comp_of[b[0]] == root)
        if vs - es + fs != 2:
            return False
    return True


# ------------------------------------------------------------- the embedding

class Embedding:
    """Rotation scheme of one connected component plus traced faces."""

    __slots__ = ("rot", "faces", "outer", "_dart_face")

    def __init__(self, rot, outer: FaceId | None = None):
        self.rot = {v: tuple(seq) for v, seq in rot.items()}
        self._retrace()
        if outer is not None:
            if outer not in self.faces:
                raise GraphError(f"unknown face {outer}")
            self.outer = outer

    def _retrace(self) -> None:
        rot = self.rot
        if not rot:
            raise GraphError("embedding needs at least one edge")
        seen = set()
        stack = [next(iter(rot))]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(rot[x])
        if seen != set(rot):
            raise GraphError("embedding rotation scheme is not connected")
        orbits, dart_orbit = trace_orbits(rot)
        vs = len(rot)
        es = sum(len(seq) for seq in rot.values()) // 2
        if vs - es + len(orbits) != 2:
            raise GraphError(
                f"rotation scheme is not planar: V-E+F = "
                f"{vs}-{es}+{len(orbits)}")
        self.faces = {}
        boundary_of: dict[int, FaceId] = {}
        for i, b in enumerate(orbits):
            if len(b) >= 3 and len(set(b)) == len(b):
                name = face_name(b)
                if name in self.faces:
                    raise GraphError(f"face name collision at {name}")
                self.faces[name] = b
                boundary_of[i] = name
        self._dart_face = {d: boundary_of[i]
                           for d, i in dart_orbit.items() if i in boundary_of}
        self.outer = min(self.faces) if self.faces else None

    # ------------------------------------------------------------ structure

    @classmethod
    def from_cycle(cls, vertices) -> Embedding:
        vs = tuple(vertices)
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise GraphError(f"cycle {vs} needs three or more distinct vertices")
        k = len(vs)
        rot = {vs[i]: (vs[(i + 1) % k], vs[(i - 1) % k]) for i in range(k)}
        return cls(rot)

    def copy(self) -> Embedding:
        return Embedding(self.rot, outer=self.outer)

    @property
    def vertices(self) -> frozenset[Vertex]:
        return frozenset(self.rot)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(canonical_edge(u, v)
                         for u, seq in self.rot.items() for v in seq)

    def neighbours(self, v: Vertex) -> tuple:
        try:
            return self.rot[v]
        except KeyError:
            raise GraphError(f"vertex {v} not in this component") from None

    def boundary(self, f: FaceId) -> tuple:
        try:
            return self.faces[f]
        except KeyError:
            raise GraphError(f"unknown face {f}") from None

    def face_with_dart(self, u: Vertex, v: Vertex) -> FaceId:
        try:
            return self._dart_face[(u, v)]
        except KeyError:
            raise GraphError(f"no face carries dart ({u},{v})") from None

    def corner_at(self, f: FaceId, v: Vertex) -> tuple[Vertex, Vertex]:
        """(predecessor, successor) of v along face f's orbit."""
        b = self.boundary(f)
        if v not in b:
            raise GraphError(f"vertex {v} not on face {f}")
        i = b.index(v)
        return b[i - 1], b[(i + 1) % len(b)]

    # -------------------------------------------------------------- queries

    def rotation_query(self, v: Vertex, a: Vertex, b: Vertex, c: Vertex) -> bool:
        seq = self.neighbours(v)
        for x in (a, b, c):
            if x not in seq:
                raise GraphError(f"{x} is not a neighbour of {v}")
        return cyclic_triple_query(seq, a, b, c)

    def face_query(self, a: Vertex, b: Vertex, c: Vertex):
        """Unique face carrying {a,b,c} plus whether (a,b,c) is its orbit
        order; for a cycle both faces carry them and the oriented one wins."""
        if len({a, b, c}) != 3:
            raise GraphError("face query needs three distinct vertices")
        hits = [f for f, bd in sorted(self.faces.items())
                if a in bd and b in bd and c in bd]
        if not hits:
            return None
        if len(hits) == 1:
            return hits[0], cyclic_triple_query(self.faces[hits[0]], a, b, c)
        oriented = [f for f in hits
                    if cyclic_triple_query(self.faces[f], a, b, c)]
        if len(oriented) != 1:
            raise GraphError(f"face query ({a},{b},{c}) is ambiguous")
        return oriented[0], True

    def common_face(self, vertex_set):
        """Least face whose boundary contains every vertex of the set."""
        want = set(vertex_set)
        for f, bd in sorted(self.faces.items()):
            if want <= set(bd):
                return f
        return None

    # ----------------------------------------------------------- operations

    def make_outer_face(self, f: FaceId) -> None:
        if f not in self.faces:
            raise GraphError(f"unknown face {f}")
        self.outer = f

    def flip(self) -> None:
        old_outer_boundary = self.faces[self.outer] if self.outer else None
        self.rot = {v: tuple(reversed(seq)) for v, seq in self.rot.items()}
        self._retrace()
        if old_outer_boundary is not None:
            target = least_rotation(tuple(reversed(old_outer_boundary)))
            for f, bd in self.faces.items():
                if bd == target:
                    self.outer = f
                    break
            else:
                raise AssertionError("flipped outer face not found")

    def merge_faces(self, f1: FaceId, f2: FaceId, edge: Edge) -> FaceId:
        u, v = canonical_edge(*edge)
        if f1 not in self.faces or f2 not in self.faces:
            raise GraphError("merge_faces needs two existing faces")
        if f1 == f2:
            raise GraphError("merge_faces needs two distinct faces")
        sides = {self._dart_face.get((u, v)), self._dart_face.get((v, u))}
        if sides != {f1, f2}:
            raise GraphError(
                f"faces {f1} and {f2} are not adjacent via edge ({u},{v})")
        keep_dart = None
        bd = self.faces[f1]
        k = len(bd)
        for i in range(k):
            d = (bd[i], bd[(i + 1) % k])
            if d != (u, v) and d != (v, u):
                keep_dart = d
                break
        assert keep_dart is not None
        was_outer = self.outer in (f1, f2)
        old_outer_boundary = None if was_outer or self.outer is None \
            else self.faces[self.outer]
        self.rot[u] = tuple(x for x in self.rot[u] if x != v)
        self.rot[v] = tuple(x for x in self.rot[v] if x != u)
        self._retrace()
        merged = self.face_with_dart(*keep_dart)
        if was_outer:
            self.outer = merged
        elif old_outer_boundary is not None:
            self.outer = face_name(old_outer_boundary)
        return merged

    def split_face(self, f: FaceId, u: Vertex, v: Vertex):
        """Insert edge {u,v} across face f; returns (side of (u,w,v) order,
        other side)."""
        bd = self.boundary(f)
        if u == v:
            raise GraphError("split_face needs two distinct vertices")
        if u not in bd or v not in bd:
            raise GraphError(f"vertices ({u},{v}) not both on face {f}")
        if canonical_edge(u, v) in self.edge_set():
            raise GraphError(f"edge ({u},{v}) is already present")
        k = len(bd)
        iu, iv = bd.index(u), bd.index(v)
        side = set(bd[iu + 1:iv]) if iu < iv else set(bd[iu + 1:] + bd[:iv])
        pu, su = bd[iu - 1], bd[(iu + 1) % k]
        pv, sv = bd[iv - 1], bd[(iv + 1) % k]
        was_outer = self.outer == f
        old_outer_boundary = None if was_outer or self.outer is None \
            else self.faces[self.outer]
        ru = list(self.rot[u])
        j = ru.index(su)
        assert ru[(j + 1) % len(ru)] == pu, "corner disagrees with rotation"
        ru.insert(j + 1, v)
        self.rot[u] = tuple(ru)
        rv = list(self.rot[v])
        j = rv.index(sv)
        assert rv[(j + 1) % len(rv)] == pv, "corner disagrees with rotation"
        rv.insert(j + 1, u)
        self.rot[v] = tuple(rv)
        self._retrace()
        side_face = self.face_with_dart(v, u)
        other_face = self.face_with_dart(u, v)
        assert set(self.faces[side_face]) == side | {u, v}
        if was_outer:
            self.outer = side_face
        elif old_outer_boundary is not None:
            self.outer = face_name(old_outer_boundary)
        return side_face, other_face

    # ------------------------------------------------------- canonical form

    def serialize(self) -> str:
        lines = []
        for v in sorted(self.rot):
            seq = opened_at_least(self.rot[v])
            lines.append(f"{v}:" + ",".join(str(x) for x in seq))
        return ";".join(lines)

    def canonical(self) -> Embedding:
        """Deterministic representative of the reflection pair, outer face
        normalized to the least name."""
        cand_a = self.copy()
        if cand_a.faces:
            cand_a.outer = min(cand_a.faces)
        cand_b = self.copy()
        cand_b.flip()
        if cand_b.faces:
            cand_b.outer = min(cand_b.faces)
        return cand_a if cand_a.serialize() <= cand_b.serialize() else cand_b

    def __eq__(self, other) -> bool:
        if not isinstance(other, Embedding):
            return NotImplemented
        return self.rot == other.rot and self.outer == other.outer

    def __hash__(self):
        return hash((frozenset(self.rot.items()), self.outer))

    def __repr__(self) -> str:
        return f"Embedding({self.serialize()!r}, outer={self.outer})"

    # ----------------------------------------------------------------- dump

    def dump_lines(self) -> list[str]:
        lines = []
        for v in sorted(self.rot):
            seq = opened_at_least(self.rot[v])
            lines.append(f"rot {v}: " + " ".join(str(x) for x in seq))
        for bd in sorted(self.faces.values()):
            mark = " outer" if face_name(bd) == self.outer else ""
            lines.append("face " + " ".join(str(x) for x in bd) + mark)
        return lines

"""Non-positively curved cubed decomposition of an alternating link exterior.

The complex has one combinatorial 3-cube per strand passage of the diagram
(two per crossing).  A cube's outer face lies on the boundary torus around
its passage; its two vertical midsquares carry the checkerboard surfaces,
crossing along the cube's axis, which is half of the crossing arc.  Cubes
are glued bottom-to-bottom at each crossing and side-to-side across each
edge of the diagram (once for each of the edge's two flanking regions).
Everything here is combinatorial; no coordinates are stored.

Derived structure is computed by closing the gluings: two inner vertices,
one inner edge per region, two hyperplanes meeting along one axis class
per crossing, and geometric vertex links whose flagness witnesses
non-positive curvature.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .diagram import AlternatingDiagram, BLACK, WHITE, Region


class CubingError(ValueError):
    pass


OVER, UNDER = "over", "under"
PASSAGES = (UNDER, OVER)


def _passage_of_port(p: int) -> str:
    return UNDER if p % 2 == 0 else OVER


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def classes(self) -> dict:
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass(frozen=True)
class Gluing:
    """One identification of two square faces, with its germ matching."""

    kind: str                       # "bottom" or "side"
    faces: tuple
    vertex_pairs: tuple             # pairs of corner germs
    edge_pairs: tuple               # pairs of edge germs
    crossed: bool = True            # side gluings: far-end matching


@dataclass
class Hyperplane:
    color: str
    midsquares: tuple               # ("ms", c, s, color) germs

    def __len__(self):
        return len(self.midsquares)


@dataclass
class VertexLink:
    """Abstract simplicial complex of cube corners at one vertex."""

    vertex: object
    vertices: tuple
    edges: set                      # frozensets of 2 direction labels
    triangles: set                  # frozensets of 3 direction labels
    problems: list = field(default_factory=list)

    @property
    def simplicial(self) -> bool:
        return not self.problems


def is_flag(lk: VertexLink) -> bool:
    """Every pairwise-joined vertex set spans a simplex.

    The links of a cubed 3-complex are at most 2-dimensional, so a filled
    clique on 4 or more vertices can never span; cliques are only
    enumerated up to size 4 and larger structures are reported through the
    simpliciality problems.
    """
    if lk.problems:
        raise CubingError(f"link of {lk.vertex} is not simplicial: {lk.problems[0]}")
    adj = {v: set() for v in lk.vertices}
    for e in lk.edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    order = list(lk.vertices)
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            if b not in adj[a]:
                continue
            common = adj[a] & adj[b]
            for c in common:
                if frozenset((a, b, c)) not in lk.triangles:
                    return False
                # any fourth mutual neighbor would demand a 3-simplex
                for dd in common:
                    if dd <= c or dd not in adj[c]:
                        continue
                    return False
    return True


class CubedComplex:
    """Cubed decomposition of the exterior of a prime alternating diagram."""

    def __init__(self, d: AlternatingDiagram, mirror: bool = False, corrupt: int | None = None):
        from .diagram import is_prime, is_reduced
        if not is_prime(d):
            raise CubingError("the cubed decomposition requires a prime diagram")
        if not is_reduced(d):
            raise CubingError("the cubed decomposition requires a reduced diagram")
        self.diagram = d
        self.mirror = mirror
        self.corrupt = corrupt
        self.cubes = [(c, s) for c in range(d.n) for s in PASSAGES]
        self._build_gluings()
        self._close_classes()
        self._build_hyperplanes()

    # -- gluing construction -----------------------------------------------

    def _corner_of_port(self, c: int, p: int, region: Region) -> int:
        for k in (p, (p - 1) % 4):
            if self.diagram.corner_region(c, k).index == region.index:
                return k
        raise CubingError("region does not flank the port")

    def _build_gluings(self) -> None:
        d = self.diagram
        gluings: list[Gluing] = []
        for c in range(d.n):
            vertex_pairs = tuple((("bc", c, OVER, p), ("bc", c, UNDER, p)) for p in range(4))
            edge_pairs = tuple((("be", c, OVER, k), ("be", c, UNDER, k)) for k in range(4))
            gluings.append(Gluing("bottom", (("bottom", c, OVER), ("bottom", c, UNDER)),
                                  vertex_pairs, edge_pairs))
        for eid in range(len(d.edges)):
            (c1, p1), (c2, p2) = tuple(d.edges[eid])
            s1, s2 = _passage_of_port(p1), _passage_of_port(p2)
            for rid in set(d.edge_sides(eid)):
                R = d.regions[rid]
                k1 = self._corner_of_port(c1, p1, R)
                k2 = self._corner_of_port(c2, p2, R)
                far1 = k1 if k1 != p1 else (k1 + 1) % 4
                far2 = k2 if k2 != p2 else (k2 + 1) % 4
                crossed = True
                if self.corrupt is not None and len(gluings) == self.corrupt:
                    crossed = False
                if crossed:
                    vmatch = (((("ve", c1, s1, p1), ("ve", c2, s2, far2))),
                              ((("ve", c1, s1, far1), ("ve", c2, s2, p2))))
                    vert = (((("bc", c1, s1, p1), ("bc", c2, s2, far2))),
                            ((("bc", c1, s1, far1), ("bc", c2, s2, p2))),
                            ((("tc", c1, s1, p1), ("tc", c2, s2, far2))),
                            ((("tc", c1, s1, far1), ("tc", c2, s2, p2))))
                else:
                    vmatch = (((("ve", c1, s1, p1), ("ve", c2, s2, p2))),
                              ((("ve", c1, s1, far1), ("ve", c2, s2, far2))))
                    vert = (((("bc", c1, s1, p1), ("bc", c2, s2, p2))),
                            ((("bc", c1, s1, far1), ("bc", c2, s2, far2))),
                            ((("tc", c1, s1, p1), ("tc", c2, s2, p2))),
                            ((("tc", c1, s1, far1), ("tc", c2, s2, far2))))
                edge_pairs = ((("be", c1, s1, k1), ("be", c2, s2, k2)),
                              (("te", c1, s1, k1), ("te", c2, s2, k2))) + vmatch
                gluings.append(Gluing("side", (("side", c1, s1, k1), ("side", c2, s2, k2)),
                                      vert, edge_pairs, crossed))
        self.gluings = gluings
        # involution sanity: every interior face appears in exactly one gluing
        used = {}
        for g in gluings:
            for f in g.faces:
                if f in used:
                    raise CubingError(f"face {f} glued twice")
                used[f] = g
        expected = {("bottom", c, s) for c in range(d.n) for s in PASSAGES}
        expected |= {("side", c, s, k) for c in range(d.n) for s in PASSAGES for k in range(4)}
        if set(used) != expected:
            missing = expected - set(used)
            raise CubingError(f"unglued interior faces: {sorted(missing)[:3]}")

    # -- class closure -------------------------------------------------------

    def _close_classes(self) -> None:
        d = self.diagram
        n = d.n
        vtx, edg, sqr = _UnionFind(), _UnionFind(), _UnionFind()
        for c in range(n):
            for s in PASSAGES:
                for p in range(4):
                    vtx.add(("bc", c, s, p))
                    vtx.add(("tc", c, s, p))
                    edg.add(("ve", c, s, p))
                    edg.add(("be", c, s, p))
                    edg.add(("te", c, s, p))
                    sqr.add(("side", c, s, p))
                sqr.add(("top", c, s))
                sqr.add(("bottom", c, s))
        for g in self.gluings:
            sqr.union(*g.faces)
            for a, b in g.vertex_pairs:
                vtx.union(a, b)
            for a, b in g.edge_pairs:
                edg.union(a, b)
        self._vtx, self._edg, self._sqr = vtx, edg, sqr

        vclasses = vtx.classes()
        self.inner_vertices = sorted(
            (root for root, members in vclasses.items() if members[0][0] == "bc"),
            key=lambda r: str(r))
        self.boundary_vertices = sorted(
            (root for root, members in vclasses.items() if members[0][0] == "tc"),
            key=lambda r: str(r))
        for root, members in vclasses.items():
            kinds = {m[0] for m in members}
            if kinds == {"bc", "tc"}:
                raise CubingError("a vertex class mixes inner and boundary germs")

        eclasses = edg.classes()
        self.inner_edges = {}
        self.vertical_edges = []
        self.boundary_edges = []
        for root, members in eclasses.items():
            kinds = {m[0] for m in members}
            if len(kinds) != 1:
                raise CubingError("an edge class mixes germ kinds")
            kind = kinds.pop()
            if kind == "be":
                regions = {d.corner_region(m[1], m[3]).index for m in members}
                if len(regions) != 1:
                    raise CubingError("an inner edge class spans several regions")
                self.inner_edges[root] = regions.pop()
            elif kind == "ve":
                self.vertical_edges.append(root)
            else:
                self.boundary_edges.append(root)
        self.region_edge = {rid: root for root, rid in self.inner_edges.items()}

        self.square_classes = sqr.classes()
        self.boundary_squares = [("top", c, s) for c in range(n) for s in PASSAGES]

    # -- hyperplanes ----------------------------------------------------------

    def _black_corners(self, c: int) -> list[int]:
        col = BLACK if not self.mirror else WHITE
        return [k for k in range(4) if self.diagram.corner_region(c, k).color == col]

    def _build_hyperplanes(self) -> None:
        d = self.diagram
        uf = _UnionFind()
        for c in range(d.n):
            for s in PASSAGES:
                for col in (BLACK, WHITE):
                    uf.add(("ms", c, s, col))
        for c in range(d.n):
            for col in (BLACK, WHITE):
                uf.union(("ms", c, OVER, col), ("ms", c, UNDER, col))
        for g in self.gluings:
            if g.kind != "side":
                continue
            (_t1, c1, s1, k1), (_t2, c2, s2, k2) = g.faces
            col = self.diagram.corner_region(c1, k1).color
            uf.union(("ms", c1, s1, col), ("ms", c2, s2, col))
        classes = uf.classes()
        by_color: dict[str, list] = {}
        for members in classes.values():
            colors = {m[3] for m in members}
            if len(colors) != 1:
                raise CubingError("a hyperplane mixes colors")
            by_color.setdefault(colors.pop(), []).append(members)
        self.hyperplanes = {}
        for col, groups in sorted(by_color.items()):
            if len(groups) != 1:
                raise CubingError(f"{col} midsquares split into {len(groups)} hyperplanes")
            self.hyperplanes[col] = Hyperplane(col, tuple(sorted(groups[0])))
        # crossing lines: axis classes, one per crossing
        self.crossing_lines = [("ax", c) for c in range(self.diagram.n)]

    # -- reports ---------------------------------------------------------------

    @property
    def counts(self) -> dict:
        return {
            "crossings": self.diagram.n,
            "cubes": len(self.cubes),
            "inner_vertices": len(self.inner_vertices),
            "boundary_vertices": len(self.boundary_vertices),
            "inner_edges": len(self.inner_edges),
            "vertical_edges": len(self.vertical_edges),
            "boundary_edges": len(self.boundary_edges),
            "boundary_squares": len(self.boundary_squares),
            "interior_squares": sum(1 for members in self.square_classes.values()
                                    if members[0][0] != "top" or len(members) > 1),
            "hyperplanes": len(self.hyperplanes),
            "midsquares_per_hyperplane": {c: len(h) for c, h in self.hyperplanes.items()},
            "crossing_lines": len(self.crossing_lines),
        }

    def to_json(self) -> dict:
        return {
            "cubes": [list(q) for q in self.cubes],
            "gluings": [{"kind": g.kind, "faces": [list(map(str, f)) for f in g.faces]}
                        for g in self.gluings],
            "counts": self.counts,
            "hyperplanes": {c: len(h) for c, h in self.hyperplanes.items()},
        }

    # -- vertex links -----------------------------------------------------------

    def vertices(self) -> list:
        return list(self.inner_vertices) + list(self.boundary_vertices)

    def vertex_link(self, v) -> VertexLink:
        """Simplicial complex of cube corners at a vertex class.

        For the two inner vertices this is the sphere obtained from the
        dual of the diagram by subdividing the dual region around each
        crossing, with one cone point per crossing.
        """
        vtx, edg, sqr = self._vtx, self._edg, self._sqr
        inner = v in set(self.inner_vertices)
        corner_kind = "bc" if inner else "tc"
        edge_kinds = ("be", "ve") if inner else ("te", "ve")

        problems = []
        triangles = set()
        tri_sources = {}
        for c in range(self.diagram.n):
            for s in PASSAGES:
                for p in range(4):
                    if vtx.find((corner_kind, c, s, p)) != v:
                        continue
                    flat = "be" if inner else "te"
                    dirs = [edg.find((flat, c, s, (p - 1) % 4)),
                            edg.find((flat, c, s, p)),
                            edg.find(("ve", c, s, p))]
                    if len(set(dirs)) != 3:
                        problems.append(f"degenerate corner of cube ({c},{s}) at port {p}")
                        continue
                    t = frozenset(dirs)
                    if t in triangles:
                        problems.append(
                            f"corner of cube ({c},{s}) repeats the simplex of {tri_sources[t]}")
                    triangles.add(t)
                    tri_sources[t] = (c, s, p)
        edges = set()
        edge_sources = {}
        for members in self.square_classes.values():
            face = members[0]
            corner_iter = []
            if face[0] == "top" and not inner:
                _t, c, s = face
                for p in range(4):
                    corner_iter.append(((("tc", c, s, p)),
                                        (("te", c, s, (p - 1) % 4), ("te", c, s, p))))
            elif face[0] == "bottom" and inner:
                _t, c, s = face
                for p in range(4):
                    corner_iter.append(((("bc", c, s, p)),
                                        (("be", c, s, (p - 1) % 4), ("be", c, s, p))))
            elif face[0] == "side":
                _t, c, s, k = face
                flat = "be" if inner else "te"
                ck = corner_kind
                for p in (k, (k + 1) % 4):
                    corner_iter.append(((ck, c, s, p),
                                        ((flat, c, s, k), ("ve", c, s, p))))
            for corner, (ea, eb) in corner_iter:
                if vtx.find(corner) != v:
                    continue
                pair = frozenset((edg.find(ea), edg.find(eb)))
                if len(pair) != 2:
                    problems.append(f"square {face} pinches at {corner}")
                    continue
                key = sqr.find(face)
                if pair in edges and edge_sources[pair] != key:
                    problems.append(f"double edge between {sorted(map(str, pair))}")
                edges.add(pair)
                edge_sources[pair] = key
        vertices = sorted({x for t in triangles for x in t} | {x for e in edges for x in e},
                          key=str)
        for t in triangles:
            for pair in combinations(t, 2):
                if frozenset(pair) not in edges:
                    problems.append("triangle with a missing edge")
        return VertexLink(v, tuple(vertices), edges, triangles, problems)

    def inner_link_vertex_of_region(self, v, rid: int):
        return self._edg.find(self.region_edge[rid])


def build_cubing(d: AlternatingDiagram, mirror: bool = False, corrupt: int | None = None) -> CubedComplex:
    """Construct the cubed exterior and check its structural laws.

    Raises if the closure of the gluings violates any of: two inner
    vertices, inner edges in bijection with regions, one vertical edge per
    boundary vertex, two hyperplanes of 2c midsquares crossing along c
    axis classes, and per-torus Euler characteristic zero.  Corrupted
    complexes (corrupt = gluing index) skip these checks so the damage can
    be observed by verify_npc.
    """
    cx = CubedComplex(d, mirror=mirror, corrupt=corrupt)
    if corrupt is None:
        c = d.n
        counts = cx.counts
        checks = [
            ("cubes", 2 * c), ("inner_vertices", 2), ("inner_edges", c + 2),
            ("boundary_squares", 2 * c), ("vertical_edges", 2 * c),
            ("boundary_vertices", 2 * c), ("boundary_edges", 4 * c),
            ("hyperplanes", 2), ("crossing_lines", c),
        ]
        for key, want in checks:
            if counts[key] != want:
                raise CubingError(f"{key} = {counts[key]}, expected {want}")
        for col, h in cx.hyperplanes.items():
            if len(h) != 2 * c:
                raise CubingError(f"{col} hyperplane has {len(h)} midsquares, expected {2 * c}")
    return cx


def verify_npc(cx: CubedComplex) -> dict:
    """Run the flag criterion over every vertex link.

    Returns {"npc": bool, "vertices": [...], "failures": [...]}; a pass at
    every vertex establishes non-positive curvature.
    """
    entries = []
    failures = []
    for v in cx.vertices():
        lk = cx.vertex_link(v)
        if lk.problems:
            ok = False
            reason = f"non-simplicial: {lk.problems[0]}"
        else:
            ok = is_flag(lk)
            reason = None if ok else "non-flag clique"
        kind = "inner" if v in set(cx.inner_vertices) else "boundary"
        entries.append({"vertex": str(v), "kind": kind, "flag": ok})
        if not ok:
            failures.append({"vertex": str(v), "kind": kind, "reason": reason})
    return {"npc": not failures, "vertices": entries, "failures": failures}


def link_angle_class(cx: CubedComplex, v, r1, r2) -> str:
    """'orthogonal' when the two region directions are joined in the link,
    'far' otherwise; defined at the two inner vertices."""
    rid1 = r1.index if isinstance(r1, Region) else r1
    rid2 = r2.index if isinstance(r2, Region) else r2
    if rid1 == rid2:
        raise CubingError("need two distinct regions")
    if v not in set(cx.inner_vertices):
        raise CubingError("angle classes are defined at the inner vertices")
    lk = cx.vertex_link(v)
    a = cx.inner_link_vertex_of_region(v, rid1)
    b = cx.inner_link_vertex_of_region(v, rid2)
    return "orthogonal" if frozenset((a, b)) in lk.edges else "far"


@dataclass
class BoundaryTorus:
    component: int
    squares: list
    vertex_count: int
    edge_count: int
    euler: int
    meridian_diagonals: dict       # square -> (corner port a, corner port b)
    meridian_loops: int


def boundary_cubings(cx: CubedComplex) -> list[BoundaryTorus]:
    """Per-component boundary square complexes with meridian diagonals.

    Each boundary square is the outer face of one passage cube; squares
    group into tori by link component.  Exactly one diagonal of each
    square closes up into a loop around the strand (its two corners land
    on the same vertex class); these marked diagonals are the meridians.
    """
    d = cx.diagram
    vtx, edg = cx._vtx, cx._edg
    comp_of = {}
    for c in range(d.n):
        for idx, s in ((0, UNDER), (1, OVER)):
            comp_of[(c, s)] = d.strand_of_passage[(c, idx)]
    tori = []
    for comp in range(len(d.strands)):
        squares = [(c, s) for (c, s), k in comp_of.items() if k == comp]
        vclasses = set()
        eclasses = set()
        diag = {}
        loops = 0
        for (c, s) in squares:
            for p in range(4):
                vclasses.add(vtx.find(("tc", c, s, p)))
                eclasses.add(edg.find(("te", c, s, p)))
            # the meridian diagonal joins the corners at the ports transverse
            # to the square's own strand; it closes into a loop around it
            p = 0 if s == OVER else 1
            a = vtx.find(("tc", c, s, p))
            b = vtx.find(("tc", c, s, (p + 2) % 4))
            if a != b:
                raise CubingError(
                    f"meridian diagonal of square ({c},{s}) does not close")
            diag[(c, s)] = (p, (p + 2) % 4)
            loops += 1
        chi = len(vclasses) - len(eclasses) + len(squares)
        tori.append(BoundaryTorus(comp, squares, len(vclasses), len(eclasses), chi, diag, loops))
    return tori

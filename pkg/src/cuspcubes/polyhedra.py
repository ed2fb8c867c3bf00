"""Checkerboard ideal polyhedral decomposition of an alternating link complement.

Two copies of the diagram ball are glued face-to-face by the gear rule:
each region's face of the positive copy meets the same region's face of
the negative copy after a rotation by one edge, clockwise on black regions
and anticlockwise on white ones (a global mirror flag flips both).  The
induced edge identifications tie the sphere edges into classes of four,
one class per crossing arc; half-space combinatorics reduce to region
adjacency in the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (AlternatingDiagram, BLACK, WHITE, Region,
                      edge_arc_classes, is_prime, region_adjacent)


class PolyhedraError(ValueError):
    pass


POSITIVE, NEGATIVE = 1, -1


@dataclass(frozen=True)
class HalfSpaceLabel:
    """A checkerboard half-space: which copy, which region, which side."""

    polyhedron: int                 # POSITIVE or NEGATIVE
    region: int
    side: str                       # "contains" (the copy's side) or "opposite"

    def __post_init__(self):
        if self.side not in ("contains", "opposite"):
            raise PolyhedraError("side must be 'contains' or 'opposite'")


class IdealPolyhedronPair:
    """The glued pair of checkerboard ideal polyhedra of a prime diagram."""

    def __init__(self, d: AlternatingDiagram, mirror: bool = False):
        if not is_prime(d):
            raise PolyhedraError("the checkerboard decomposition needs a prime diagram")
        self.diagram = d
        self.mirror = mirror
        self.gear_shift = {}
        for R in d.regions:
            shift = 1 if (R.color == BLACK) != mirror else -1
            self.gear_shift[R.index] = shift
        self.edge_classes = edge_arc_classes(d, mirror)
        self.class_of: dict[tuple[int, int], int] = {}
        self.crossing_of_class: dict[int, int] = {}
        for idx, (members, crossing) in enumerate(self.edge_classes):
            self.crossing_of_class[idx] = crossing
            for m in members:
                self.class_of[m] = idx
        self._verify()

    def _verify(self) -> None:
        d = self.diagram
        if len(self.edge_classes) != d.n:
            raise PolyhedraError(
                f"{len(self.edge_classes)} edge classes for {d.n} crossings")
        for members, crossing in self.edge_classes:
            per_sign = {POSITIVE: 0, NEGATIVE: 0}
            for s, _e in members:
                per_sign[s] += 1
            if per_sign[POSITIVE] != 2 or per_sign[NEGATIVE] != 2:
                raise PolyhedraError(
                    f"edge class at crossing {crossing} has signature {per_sign}")

    # -- gluing data --------------------------------------------------------

    def face_gluing(self, region: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """The gear map on one region: positive-copy boundary edge at walk
        position j is identified with the negative-copy edge at j + shift."""
        R = self.diagram.regions[region]
        walk = [self.diagram.edge_of_slot[h] for h in R.boundary]
        m = len(walk)
        shift = self.gear_shift[region]
        return [((POSITIVE, walk[j]), (NEGATIVE, walk[(j + shift) % m]))
                for j in range(m)]

    @property
    def face_gluing_count(self) -> int:
        return len(self.diagram.regions)

    def edge_class_of(self, sign: int, edge_id: int) -> int:
        return self.class_of[(sign, edge_id)]

    def to_json(self) -> dict:
        return {
            "mirror": self.mirror,
            "face_gluings": {R.index: self.gear_shift[R.index] for R in self.diagram.regions},
            "edge_classes": [
                {"crossing": crossing,
                 "members": [[s, e] for s, e in sorted(members)]}
                for members, crossing in self.edge_classes
            ],
        }

    def edge_class_dot(self) -> str:
        lines = ["graph edge_classes {"]
        for idx, (members, crossing) in enumerate(self.edge_classes):
            lines.append(f'  k{idx} [label="arc c{crossing}"];')
            for s, e in members:
                tag = "P" if s == POSITIVE else "N"
                lines.append(f'  k{idx} -- "{tag}e{e}";')
        lines.append("}")
        return "\n".join(lines)


def build_polyhedra(d: AlternatingDiagram, mirror: bool = False) -> IdealPolyhedronPair:
    """Glue the two copies of the diagram ball by the gear rule and verify
    that every crossing arc is covered by exactly two edges of each copy."""
    return IdealPolyhedronPair(d, mirror)


def halfspace_disjoint(pp: IdealPolyhedronPair, polyhedron: int, r1, r2) -> bool:
    """Half-spaces on the far sides of two region planes are disjoint exactly
    when the regions are not adjacent in the diagram."""
    rid1 = r1.index if isinstance(r1, Region) else r1
    rid2 = r2.index if isinstance(r2, Region) else r2
    if rid1 == rid2:
        raise PolyhedraError("need two distinct regions")
    if polyhedron not in (POSITIVE, NEGATIVE):
        raise PolyhedraError("polyhedron must be +1 or -1")
    return not region_adjacent(pp.diagram, rid1, rid2)


@dataclass
class FaceTransfer:
    """Index shift identifying region-plane labels across a shared face.

    For a face R with neighbor cycle listed along its boundary walk, the
    plane of neighbor i seen from the positive copy equals the plane of
    neighbor i + shift seen from the negative copy.
    """

    region: int
    neighbors: tuple                 # region ids along the walk, with multiplicity
    shift: int

    @property
    def order(self) -> int:
        return len(self.neighbors)

    def apply(self, polyhedron: int, index: int) -> tuple[int, int]:
        """Transfer (polyhedron, neighbor index) across the shared face."""
        if polyhedron == POSITIVE:
            return NEGATIVE, (index + self.shift) % self.order
        return POSITIVE, (index - self.shift) % self.order


def face_transfer(pp: IdealPolyhedronPair, region) -> FaceTransfer:
    """Neighbor correspondence across the face of a region, derived from the
    gear map: composing it around the neighbor cycle is the identity."""
    rid = region.index if isinstance(region, Region) else region
    R = pp.diagram.regions[rid]
    nbrs = tuple(pp.diagram.region_of_slot[pp.diagram.pairing[h]] for h in R.boundary)
    return FaceTransfer(rid, nbrs, pp.gear_shift[rid])


def butterfly_regions(pp: IdealPolyhedronPair, polyhedron: int, crossing: int,
                      color: str, reverse: bool = False) -> tuple[Region, Region]:
    """Ordered pair of same-color regions at a crossing.

    The two wings of the strand-rotation at a crossing are the two corner
    regions of one color; they are distinct on prime diagrams.  The default
    order lists the lower-corner region first; the reverse flag (and the
    pair's mirror convention) flips it, and callers may inspect both.
    """
    if color not in (BLACK, WHITE):
        raise PolyhedraError("color must be black or white")
    if polyhedron not in (POSITIVE, NEGATIVE):
        raise PolyhedraError("polyhedron must be +1 or -1")
    d = pp.diagram
    pair = d.regions_at_crossing(crossing, color)
    flip = reverse ^ pp.mirror ^ (polyhedron == NEGATIVE)
    if flip:
        return pair[1], pair[0]
    return pair


# ---------------------------------------------------------------------------
# Circle pattern drawing
# ---------------------------------------------------------------------------

def _tutte_layout(d: AlternatingDiagram, outer_region: int | None = None) -> dict[int, tuple[float, float]]:
    """Planar positions for the crossings: pin the outer region's crossings
    on a circle and place the rest at the average of their neighbors."""
    import math

    if outer_region is None:
        outer_region = max(range(len(d.regions)), key=lambda i: len(d.regions[i]))
    outer = d.regions[outer_region]
    ring = []
    for c, _i in outer.boundary:
        if c not in ring:
            ring.append(c)
    pos: dict[int, tuple[float, float]] = {}
    for j, c in enumerate(ring):
        ang = 2 * math.pi * j / len(ring)
        pos[c] = (math.cos(ang), math.sin(ang))
    inner = [c for c in range(d.n) if c not in pos]
    if not inner:
        return pos
    nbrs = {c: [] for c in inner}
    for c in inner:
        for i in range(4):
            nbrs[c].append(d.pairing[(c, i)][0])
    guess = {c: (0.0, 0.0) for c in inner}
    for _ in range(200):
        nxt = {}
        for c in inner:
            xs = [(pos.get(w) or guess[w])[0] for w in nbrs[c]]
            ys = [(pos.get(w) or guess[w])[1] for w in nbrs[c]]
            nxt[c] = (sum(xs) / 4, sum(ys) / 4)
        guess = nxt
    pos.update(guess)
    return pos


def circle_pattern_svg(d: AlternatingDiagram, outer_region: int | None = None,
                       size: int = 480) -> str:
    """Draw one circle per region, near its boundary crossings, black and
    white layered; purely illustrative."""
    import math

    pos = _tutte_layout(d, outer_region)
    if outer_region is None:
        outer_region = max(range(len(d.regions)), key=lambda i: len(d.regions[i]))
    pad = 0.35
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    lo = min(min(xs), min(ys)) - pad
    hi = max(max(xs), max(ys)) + pad

    def to_px(x, y):
        sx = (x - lo) / (hi - lo) * size
        sy = (y - lo) / (hi - lo) * size
        return sx, sy

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">',
             f'<rect width="{size}" height="{size}" fill="white"/>']
    for h, k in sorted(d.pairing.items()):
        if h > k:
            continue
        x1, y1 = to_px(*pos[h[0]])
        x2, y2 = to_px(*pos[k[0]])
        parts.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                     f'stroke="#bbbbbb" stroke-width="1"/>')
    scale = size / (hi - lo)
    for R in d.regions:
        cs = list(R.distinct_crossings)
        px = [pos[c][0] for c in cs]
        py = [pos[c][1] for c in cs]
        if R.index == outer_region:
            cx_, cy_ = (lo + hi) / 2, (lo + hi) / 2
            rad = (hi - lo) / 2 * 0.98 * scale
            sx, sy = to_px(cx_, cy_)
        else:
            cx_, cy_ = sum(px) / len(px), sum(py) / len(py)
            rad = max(math.hypot(x - cx_, y - cy_) for x, y in zip(px, py))
            rad = max(rad, 0.12) * 1.08 * scale
            sx, sy = to_px(cx_, cy_)
        color = "black" if R.color == BLACK else "#d07000"
        parts.append(f'<circle cx="{sx:.1f}" cy="{sy:.1f}" r="{rad:.1f}" fill="none" '
                     f'stroke="{color}" stroke-width="1.6" opacity="0.85"/>')
    parts.append("</svg>")
    return "\n".join(parts)

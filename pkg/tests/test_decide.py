import pytest

from cuspcubes.decide import (
    DecideError, VerdictKind, classify_2bridge_pair, classify_alternating_pair,
    witness_spare_region,
)
from cuspcubes.diagram import (
    AlternatingDiagram, BLACK, CrossingArc, InRegionArc, TransverseArc, WHITE,
    crossings_adjacent_on_region, pretzel_diagram, region_adjacent, two_bridge_diagram,
)
from cuspcubes.polyhedra import build_polyhedra, halfspace_disjoint, POSITIVE
from conftest import twist_sequences


def separated_pair(d):
    """Some region with two crossings not adjacent along its boundary."""
    for R in d.regions:
        cs = sorted(R.distinct_crossings)
        for i, a in enumerate(cs):
            for b in cs[i + 1:]:
                if not crossings_adjacent_on_region(d, R, a, b):
                    return R, a, b
    return None


class TestTunnels:
    def test_fig8(self):
        tb = two_bridge_diagram((2, 2))
        for c in tb.crossings_in(1):
            v = classify_2bridge_pair(tb, CrossingArc(c))
            assert v.kind == VerdictKind.GENERATES_LINK_GROUP
            assert v.which_tunnel == "upper"
        for c in tb.crossings_in(2):
            v = classify_2bridge_pair(tb, CrossingArc(c))
            assert v.kind == VerdictKind.GENERATES_LINK_GROUP
            assert v.which_tunnel == "lower"

    def test_accepts_raw_sequences(self):
        v = classify_2bridge_pair((2, 2), CrossingArc(0))
        assert v.which_tunnel == "upper"


class TestMiddleCrossings:
    def test_212(self):
        tb = two_bridge_diagram((2, 1, 2))
        v = classify_2bridge_pair(tb, CrossingArc(2))
        assert v.kind == VerdictKind.FREE_GEOMETRICALLY_FINITE
        assert v.flype_trace is not None
        w = v.witness
        assert len(set(w.regions)) == 4
        d2 = None  # witness regions live in the flyped diagram

    def test_corpus_trichotomy(self):
        for seq in twist_sequences(10, 4):
            tb = two_bridge_diagram(seq)
            n = len(seq)
            for c in range(tb.diagram.crossing_count):
                i = tb.twist_region_of[c]
                v = classify_2bridge_pair(tb, CrossingArc(c))
                if i == 1:
                    assert (v.kind, v.which_tunnel) == (
                        VerdictKind.GENERATES_LINK_GROUP, "upper"), (seq, c)
                elif i == n:
                    assert (v.kind, v.which_tunnel) == (
                        VerdictKind.GENERATES_LINK_GROUP, "lower"), (seq, c)
                else:
                    assert v.kind == VerdictKind.FREE_GEOMETRICALLY_FINITE, (seq, c)
                    assert v.witness is not None, (seq, c)
                    assert len(set(v.witness.regions)) == 4, (seq, c)

    def test_mirror_invariance(self):
        tb = two_bridge_diagram((2, 1, 2))
        v0 = classify_2bridge_pair(tb, CrossingArc(2), mirror=False)
        v1 = classify_2bridge_pair(tb, CrossingArc(2), mirror=True)
        assert v0.kind == v1.kind
        assert set(v0.witness.regions) == set(v1.witness.regions)


class TestInRegion:
    def test_separated_endpoints(self):
        d = two_bridge_diagram((3, 3)).diagram
        found = separated_pair(d)
        assert found is not None
        R, a, b = found
        v = classify_alternating_pair(d, InRegionArc(R.index, a, b))
        assert v.kind == VerdictKind.FREE_GEOMETRICALLY_FINITE
        w = v.witness
        assert len(set(w.regions)) == 4
        expected_color = BLACK if R.color == WHITE else WHITE
        assert w.color == expected_color
        assert w.endpoints == (a, b)

    def test_endpoint_swap_same_regions(self):
        d = two_bridge_diagram((3, 3)).diagram
        R, a, b = separated_pair(d)
        v1 = classify_alternating_pair(d, InRegionArc(R.index, a, b))
        v2 = classify_alternating_pair(d, InRegionArc(R.index, b, a))
        assert v1.kind == v2.kind == VerdictKind.FREE_GEOMETRICALLY_FINITE
        assert set(v1.witness.regions) == set(v2.witness.regions)

    def test_adjacent_endpoints_are_crossing_arcs(self):
        d = two_bridge_diagram((2, 2)).diagram
        R = next(R for R in d.regions if len(R) >= 3)
        cs = [h[0] for h in R.boundary]
        v = classify_alternating_pair(d, InRegionArc(R.index, cs[0], cs[1]))
        assert v.kind == VerdictKind.CROSSING_ARC_EQUIVALENT

    def test_crossing_not_on_region_rejected(self):
        d = two_bridge_diagram((2, 2)).diagram
        R = d.regions[0]
        outside = next(c for c in range(d.crossing_count)
                       if c not in R.distinct_crossings)
        inside = next(iter(R.distinct_crossings))
        with pytest.raises(DecideError):
            classify_alternating_pair(d, InRegionArc(R.index, inside, outside))


class TestTransverse:
    def test_separated_endpoints_witnessed(self):
        d = two_bridge_diagram((3, 3)).diagram
        pairs = [(c1, c2) for c1 in range(d.crossing_count)
                 for c2 in range(d.crossing_count) if c1 < c2]
        done = False
        for c1, c2 in pairs:
            shared = [R for R in d.regions
                      if c1 in R.distinct_crossings and c2 in R.distinct_crossings]
            if shared:
                continue
            word = (0, 1)
            v = classify_alternating_pair(d, TransverseArc(c1, c2, word))
            assert v.kind == VerdictKind.FREE_GEOMETRICALLY_FINITE
            if v.witness is not None:
                assert len(set(v.witness.regions)) == 4
                done = True
                break
        assert done

    def test_word_reduction_to_inessential(self):
        d = two_bridge_diagram((2, 2)).diagram
        v = classify_alternating_pair(d, TransverseArc(0, 0, (3, 3)))
        assert v.kind == VerdictKind.INESSENTIAL

    def test_word_reduction_to_in_region(self):
        d = two_bridge_diagram((3, 3)).diagram
        R, a, b = separated_pair(d)
        eid = next(iter(d.regions[0].edges))
        v = classify_alternating_pair(d, TransverseArc(a, b, (eid, eid)))
        assert v.kind in (VerdictKind.FREE_GEOMETRICALLY_FINITE,
                          VerdictKind.CROSSING_ARC_EQUIVALENT)

    def test_bad_edge_rejected(self):
        d = two_bridge_diagram((2, 2)).diagram
        with pytest.raises(DecideError):
            classify_alternating_pair(d, TransverseArc(0, 1, (99,)))


class TestCrossingArcGeneral:
    def test_not_covered_on_plain_diagrams(self):
        d = pretzel_diagram(3, 3, 3)
        v = classify_alternating_pair(d, CrossingArc(0))
        assert v.kind == VerdictKind.CROSSING_ARC_NOT_COVERED

    def test_torus_rejected(self):
        hopf = AlternatingDiagram.from_pd([(1, 3, 2, 4), (3, 1, 4, 2)])
        with pytest.raises(DecideError, match="torus"):
            classify_alternating_pair(hopf, CrossingArc(0))


class TestSpareRegions:
    def test_direct_with_many_regions(self):
        d = pretzel_diagram(3, 3, 3)
        blacks = [R.index for R in d.regions if R.color == BLACK]
        whites = [R.index for R in d.regions if R.color == WHITE]
        color, pool = (BLACK, blacks) if len(blacks) >= 5 else (WHITE, whites)
        assert len(pool) >= 5
        cert = witness_spare_region(d, pool[:4], color)
        assert cert.kind == "direct"
        for w in pool[:4]:
            assert not region_adjacent(d, cert.region, w)

    def test_transfer_with_exactly_four(self):
        d = two_bridge_diagram((2, 1, 2)).diagram
        counts = {BLACK: [R.index for R in d.regions if R.color == BLACK],
                  WHITE: [R.index for R in d.regions if R.color == WHITE]}
        color = BLACK if len(counts[BLACK]) == 4 else WHITE
        pool = counts[color]
        assert len(pool) == 4
        cert = witness_spare_region(d, pool, color)
        assert cert.kind == "transfer"
        assert cert.via_kind in ("bigon", "trigon")
        assert not region_adjacent(d, cert.region, cert.via_region)

    def test_transfer_with_exactly_three(self):
        d = two_bridge_diagram((2, 2)).diagram
        blacks = [R.index for R in d.regions if R.color == BLACK]
        color = BLACK if len(blacks) == 3 else WHITE
        pool = blacks if color == BLACK else [R.index for R in d.regions if R.color == WHITE]
        assert len(pool) == 3
        cert = witness_spare_region(d, pool, color)
        assert cert.kind == "transfer"
        assert cert.via_kind == "bigon"

    def test_validates_against_halfspaces(self):
        for seq in ((2, 1, 2), (2, 2, 2), (2, 1, 1, 2), (3, 1, 2)):
            tb = two_bridge_diagram(seq)
            for c in range(tb.diagram.crossing_count):
                if tb.twist_region_of[c] in (1, len(seq)):
                    continue
                v = classify_2bridge_pair(tb, CrossingArc(c))
                w = v.witness
                dw = v.witness_diagram
                assert dw is not None
                pp = build_polyhedra(dw)
                if w.spare.kind == "direct":
                    for wing in w.regions:
                        assert halfspace_disjoint(pp, POSITIVE, w.spare.region, wing), seq
                else:
                    assert halfspace_disjoint(pp, POSITIVE, w.spare.region,
                                              w.spare.via_region), seq
                    small = dw.regions[w.spare.via_region]
                    nbrs = [dw.region_of_slot[dw.pairing[h]] for h in small.boundary]
                    assert len(set(nbrs)) == len(small.boundary), seq


class TestVerdictShape:
    def test_json(self):
        tb = two_bridge_diagram((2, 1, 2))
        v = classify_2bridge_pair(tb, CrossingArc(2))
        data = v.to_json()
        assert data["verdict"] == "FreeGeometricallyFinite"
        assert set(data["witness"]["wings"]) == {"first", "second"}
        assert data["witness"]["spare"]["kind"] in ("direct", "transfer")
        assert data["flype"]["flype_steps"] >= 1

    def test_inessential_note(self):
        d = two_bridge_diagram((2, 2)).diagram
        v = classify_alternating_pair(d, TransverseArc(1, 1, (2, 2)))
        assert v.kind == VerdictKind.INESSENTIAL
        assert v.notes

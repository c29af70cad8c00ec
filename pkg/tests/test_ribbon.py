import pytest

from arccalc.perms import all_perms, hat, identity
from arccalc.ribbon import (
    RibbonGraph,
    build_ribbon,
    debug_dump,
    involution,
    oracle_boundary_count,
    trace_faces,
)
from arccalc.surfaces import ArcClass, boundary_of_neighborhood, simplex_genus


class TestConstruction:
    def test_counts(self):
        g = build_ribbon(ArcClass((1, 2, 0), 1))
        assert (g.vertex_count, g.edge_count) == (2, 5)
        g = build_ribbon(ArcClass((1, 2, 0), 2))
        assert (g.vertex_count, g.edge_count) == (2, 5)
        g = build_ribbon(ArcClass((0,), 2))
        assert (g.vertex_count, g.edge_count) == (2, 3)

    def test_euler_char(self):
        for p in range(1, 6):
            for side in (1, 2):
                g = build_ribbon(ArcClass(identity(p), side))
                assert g.euler_char == -p

    def test_involution_fixed_point_free(self):
        g = build_ribbon(ArcClass((2, 0, 1), 1))
        for rot in g.rotations:
            for d in rot:
                assert involution(d) != d
                assert involution(involution(d)) == d

    def test_validation(self):
        with pytest.raises(ValueError):
            RibbonGraph(1, 1, (((0, 0), (0, 0)), ((1, 0), (1, 1), (2, 0), (2, 1))))


class TestTrace:
    def test_anchor_values(self):
        assert oracle_boundary_count(ArcClass((1, 2, 0), 1)) == 3
        assert oracle_boundary_count(ArcClass((1, 2, 0), 2)) == 5

    def test_single_arc(self):
        assert oracle_boundary_count(ArcClass((0,), 1)) == 3
        assert oracle_boundary_count(ArcClass((0,), 2)) == 3

    def test_faces_partition_darts(self):
        g = build_ribbon(ArcClass((0, 3, 1, 2), 2))
        darts = [d for f in trace_faces(g) for d in f]
        assert len(darts) == len(set(darts)) == 2 * g.edge_count

    def test_trace_deterministic(self):
        a = ArcClass((3, 1, 0, 2), 1)
        assert trace_faces(build_ribbon(a)) == trace_faces(build_ribbon(a))


class TestAgreement:
    def test_matches_formula_exhaustively(self):
        for p in range(1, 7):
            for w in all_perms(p):
                for side in (1, 2):
                    a = ArcClass(w, side)
                    assert oracle_boundary_count(a) == boundary_of_neighborhood(a), a

    def test_face_count_detects_genus(self):
        # V - E + F = 2 - 2 * (thickening genus)
        for p in range(1, 6):
            for w in all_perms(p):
                for side in (1, 2):
                    a = ArcClass(w, side)
                    g = build_ribbon(a)
                    faces = len(trace_faces(g))
                    assert g.euler_char + faces == 2 - 2 * simplex_genus(a)

    def test_hat_compatibility(self):
        # closing up the shared circle turns a one-circle system into a
        # two-circle system with one more boundary component
        for p in range(1, 6):
            for w in all_perms(p):
                one = oracle_boundary_count(ArcClass(w, 1))
                two = oracle_boundary_count(ArcClass(hat(w), 2))
                assert one == two - 1


def test_debug_dump_shape():
    dump = debug_dump(ArcClass((1, 0), 2))
    assert dump["arc_class"] == {"perm": [1, 0], "side": 2}
    assert len(dump["rotations"]) == 2
    assert len(dump["faces"]) == oracle_boundary_count(ArcClass((1, 0), 2))

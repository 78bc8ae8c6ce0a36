"""Complex builders, validation, and deterministic exports."""

from __future__ import annotations

import json

import pytest

from goeritz.complexes import (
    SimplicialComplex2,
    Vertex,
    build_bridge_corridor,
    build_principal_complex,
    build_shell_complex,
    build_tree_of_trees_ball,
    export_dot,
    export_json,
    import_json,
    validate,
)
from goeritz.lens import LensSpace
from goeritz.shell_bridge import NotForestError, find_bridge, shell_words


def euler_characteristic(c: SimplicialComplex2) -> int:
    return len(c.vertices) - len(c.edges) + len(c.triangles)


class TestValidation:
    def test_missing_edge_endpoint(self):
        with pytest.raises(ValueError):
            SimplicialComplex2((Vertex("a"),), (("a", "b"),), ())

    def test_triangle_needs_edges(self):
        vs = (Vertex("a"), Vertex("b"), Vertex("c"))
        with pytest.raises(ValueError):
            SimplicialComplex2(vs, (("a", "b"),), (("a", "b", "c"),))

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            SimplicialComplex2((Vertex("a"), Vertex("a")), (), ())
        vs = (Vertex("a"), Vertex("b"))
        with pytest.raises(ValueError):
            SimplicialComplex2(vs, (("a", "b"), ("b", "a")), ())

    def test_canonical_ordering(self):
        vs = (Vertex("b"), Vertex("a"))
        c = SimplicialComplex2(vs, (("b", "a"),), ())
        assert [v.label for v in c.vertices] == ["a", "b"]
        assert c.edges == (("a", "b"),)
        validate(c)


class TestShellComplex:
    def test_seven_three(self):
        c = build_shell_complex(shell_words(7, 3))
        assert len(c.vertices) == 9
        assert len(c.triangles) == 7
        flagged = {v.label for v in c.vertices if v.primitive}
        assert flagged == {"E", "E_1", "E_2", "E_5", "E_6"}
        assert euler_characteristic(c) == 1

    def test_five_two(self):
        c = build_shell_complex(shell_words(5, 2))
        assert len(c.vertices) == 7
        assert len(c.triangles) == 5
        assert euler_characteristic(c) == 1

    def test_twelve_five_flags(self):
        c = build_shell_complex(shell_words(12, 5))
        flagged = {v.label for v in c.vertices if v.primitive}
        assert flagged == {"E", "E_1", "E_5", "E_7", "E_11"}
        assert str(c.vertex("E_0").word) == "y^12"

    @pytest.mark.parametrize("p,qbar", [(4, 1), (9, 2), (11, 4)])
    def test_fan_shape(self, p, qbar):
        c = build_shell_complex(shell_words(p, qbar))
        assert euler_characteristic(c) == 1
        assert len(c.triangles) == p


class TestPrincipalComplex:
    def test_depth_one(self):
        c = build_principal_complex(12, 5, 2, 2, 1)
        assert {v.label for v in c.vertices} == {"E", "E_m", "E_{m+1}", "E_"}
        assert c.triangles == (
            ("E", "E_m", "E_{m+1}"),
            ("E_", "E_m", "E_{m+1}"),
        )
        assert c.vertex("E_").n_exp == 4

    def test_depth_two_annotations(self):
        c = build_principal_complex(12, 5, 2, 2, 2)
        assert c.vertex("E_R").n_exp == 6
        assert c.vertex("E_L").n_exp == 1
        assert c.vertex("E_L").m_exp == 7
        assert str(c.vertex("E_m").word) == "xy^5xy^7"

    @pytest.mark.parametrize("depth", [0, 1, 2, 3, 5])
    def test_vertex_count(self, depth):
        c = build_principal_complex(23, 7, 3, 2, depth)
        assert len(c.vertices) == 3 + (1 << depth) - 1
        assert len(c.triangles) == 1 << depth

    def test_depth_guard(self):
        with pytest.raises(ValueError):
            build_principal_complex(12, 5, 2, 2, 13)


class TestBridgeCorridor:
    def test_twelve_five(self):
        c = build_bridge_corridor(find_bridge(LensSpace(12, 5), 5))
        assert {v.label for v in c.vertices} == {"D", "E", "E_2", "E_3"}
        assert len(c.triangles) == 2
        flagged = {v.label for v in c.vertices if v.primitive}
        assert flagged == {"D", "E"}

    def test_twenty_three_seven(self):
        c = build_bridge_corridor(find_bridge(LensSpace(23, 7), 7))
        assert {v.label for v in c.vertices} == {"D", "E", "E_3", "E_4", "E_"}
        assert len(c.triangles) == 3
        assert c.vertex("E_").primitive is False
        assert c.vertex("D").primitive is True

    def test_interiors_never_flagged(self):
        for p, q, qbar in [(12, 5, 5), (17, 5, 5), (23, 7, 7), (29, 12, 12)]:
            c = build_bridge_corridor(find_bridge(LensSpace(p, q), qbar))
            for v in c.vertices:
                assert v.primitive is (v.label in {"D", "E"})


class TestTreeOfTreesBall:
    def test_star(self):
        c = build_tree_of_trees_ball(LensSpace(12, 5), 1, 3)
        assert {v.label for v in c.vertices} == {"T", "T.1", "T.2", "T.3"}
        assert len(c.edges) == 3
        assert c.triangles == ()

    def test_binary_radius_two(self):
        c = build_tree_of_trees_ball(LensSpace(12, 5), 2, 2)
        assert len(c.vertices) == 7
        assert len(c.edges) == 6

    def test_quotient_metadata(self):
        one = build_tree_of_trees_ball(LensSpace(12, 5), 1, 2)
        assert one.meta["quotient"] == "single edge, two vertices"
        other = build_tree_of_trees_ball(LensSpace(23, 7), 1, 2)
        assert other.meta["quotient"] == "single edge, one vertex (loop)"
        assert one.meta["truncated"] is True
        assert one.meta["bridge"]["dWord"] == "xy^5xy^5xy^5xy^5xy^4"

    def test_guards(self):
        with pytest.raises(ValueError):
            build_tree_of_trees_ball(LensSpace(12, 5), 5, 2)
        with pytest.raises(ValueError):
            build_tree_of_trees_ball(LensSpace(12, 5), 2, 17)
        with pytest.raises(NotForestError):
            build_tree_of_trees_ball(LensSpace(7, 3), 1, 2)


class TestExports:
    def test_empty_documents(self):
        empty = SimplicialComplex2((), (), ())
        assert export_dot(empty) == "graph complex {\n}\n"
        data = json.loads(export_json(empty))
        assert data == {"vertices": [], "edges": [], "triangles": [], "meta": {}}

    def test_json_round_trip(self):
        for c in [
            build_shell_complex(shell_words(12, 5)),
            build_principal_complex(12, 5, 2, 2, 3),
            build_bridge_corridor(find_bridge(LensSpace(23, 7), 7)),
            build_tree_of_trees_ball(LensSpace(12, 5), 2, 3),
        ]:
            text = export_json(c)
            again = import_json(text)
            assert again == c
            assert export_json(again) == text

    def test_json_is_newline_terminated_and_ascii(self):
        text = export_json(build_shell_complex(shell_words(7, 3)))
        assert text.endswith("\n")
        assert text.isascii()

    def test_dot_shape(self):
        dot = export_dot(build_bridge_corridor(find_bridge(LensSpace(12, 5), 5)))
        lines = dot.splitlines()
        assert lines[0] == "graph bridge {"
        assert '  "D" [peripheries=2];' in lines
        assert '  "E_2";' in lines
        assert '  "D" -- "E_2";' in lines
        assert any(line.startswith("  // triangle 0:") for line in lines)
        assert lines[-1] == "}"

    def test_exports_deterministic(self):
        a = build_principal_complex(12, 5, 2, 2, 3)
        b = build_principal_complex(12, 5, 2, 2, 3)
        assert export_json(a) == export_json(b)
        assert export_dot(a) == export_dot(b)

"""Labeled 2-complexes for shells, corridors, and the tree of trees.

Each builder returns a small simplicial complex whose vertices may carry
the attached disk boundary word, a primitivity flag, and the exponent
pair of the mediant tree.  Complexes canonicalize on construction
(sorted labels, sorted simplices) so exports are byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .lens import Classification, LensSpace, invariants
from .primitivity import is_primitive
from .shell_bridge import (
    Bridge,
    NotForestError,
    PrincipalVertex,
    Shell,
    bridge_report,
    find_bridge,
    principal_vertex,
)
from .words import Word, parse_word

MAX_PRINCIPAL_DEPTH = 12
MAX_BALL_RADIUS = 4
MAX_BALL_BRANCHING = 16


@dataclass(frozen=True)
class Vertex:
    label: str
    word: Word | None = None
    primitive: bool | None = None
    m_exp: int | None = None
    n_exp: int | None = None


@dataclass(frozen=True)
class SimplicialComplex2:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[str, str], ...]
    triangles: tuple[tuple[str, str, str], ...]
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "vertices", tuple(sorted(self.vertices, key=lambda v: v.label))
        )
        object.__setattr__(
            self, "edges", tuple(sorted(tuple(sorted(e)) for e in self.edges))
        )
        object.__setattr__(
            self, "triangles", tuple(sorted(tuple(sorted(t)) for t in self.triangles))
        )
        validate(self)

    def vertex(self, label: str) -> Vertex:
        for v in self.vertices:
            if v.label == label:
                return v
        raise KeyError(label)


def validate(complex_: SimplicialComplex2) -> None:
    """Raise ValueError unless the complex is closed and duplicate-free."""
    labels = [v.label for v in complex_.vertices]
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate vertex labels")
    known = set(labels)
    if len(set(complex_.edges)) != len(complex_.edges):
        raise ValueError("duplicate edges")
    for a, b in complex_.edges:
        if a == b:
            raise ValueError(f"loop edge at {a!r}")
        if not {a, b} <= known:
            raise ValueError(f"edge ({a},{b}) has a missing endpoint")
    edge_set = set(complex_.edges)
    if len(set(complex_.triangles)) != len(complex_.triangles):
        raise ValueError("duplicate triangles")
    for t in complex_.triangles:
        if len(set(t)) != 3:
            raise ValueError(f"degenerate triangle {t}")
        for pair in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            if pair not in edge_set:
                raise ValueError(f"triangle {t} is missing edge {pair}")


def _edges_of(triangles) -> set[tuple[str, str]]:
    out = set()
    for t in triangles:
        s = sorted(t)
        out.update({(s[0], s[1]), (s[0], s[2]), (s[1], s[2])})
    return out


def build_shell_complex(shell: Shell) -> SimplicialComplex2:
    """Fan of p triangles {E, E_i, E_i+1} around the center disk E."""
    vertices = [Vertex("E", shell.e_word, True)]
    for k, word in enumerate(shell.words):
        vertices.append(Vertex(f"E_{k}", word, is_primitive(word).is_primitive))
    triangles = [("E", f"E_{i}", f"E_{i + 1}") for i in range(shell.p)]
    return SimplicialComplex2(
        tuple(vertices),
        tuple(_edges_of(triangles)),
        tuple(triangles),
        {"kind": "shell", "p": shell.p, "qbar": shell.qbar},
    )


def build_principal_complex(
    p: int, qbar: int, m: int, r: int, depth: int
) -> SimplicialComplex2:
    """Mediant tree of the base pair, as triangles, down to the given depth."""
    if not 0 <= depth <= MAX_PRINCIPAL_DEPTH:
        raise ValueError(f"depth must be within 0..{MAX_PRINCIPAL_DEPTH}")
    if p != qbar * m + r:
        raise ValueError(f"inconsistent division: {p} != {qbar}*{m} + {r}")
    vertices = [
        Vertex("E", Word((("x", 1),))),
        _pair_vertex("E_m", qbar, m - 1, qbar + r),
        _pair_vertex("E_{m+1}", qbar, m, r),
    ]
    triangles = [("E", "E_m", "E_{m+1}")]
    frontier = [("", ("E_m", "E_{m+1}"))]
    for _ in range(depth):
        next_frontier = []
        for w, labels in frontier:
            v = principal_vertex(p, qbar, m, r, w)
            label = "E_" + w
            vertices.append(_pair_vertex(label, qbar, v.m_exp, v.n_exp))
            triangles.append((labels[0], labels[1], label))
            next_frontier.append((w + "L", (label, labels[1])))
            next_frontier.append((w + "R", (labels[0], label)))
        frontier = next_frontier
    return SimplicialComplex2(
        tuple(vertices),
        tuple(_edges_of(triangles)),
        tuple(triangles),
        {"kind": "principal", "p": p, "qbar": qbar, "m": m, "r": r, "depth": depth},
    )


def _pair_vertex(label: str, qbar: int, m_exp: int, n_exp: int) -> Vertex:
    word = PrincipalVertex(qbar, "", m_exp, n_exp).word()
    return Vertex(label, word, None, m_exp, n_exp)


def build_bridge_corridor(bridge: Bridge) -> SimplicialComplex2:
    """The corridor of a bridge, with concrete shell labels at the near end.

    The symbolic corridor labels E_m and E_{m+1} become E_<m> and
    E_<m+1>; the far vertex is D.  Primitivity flags come from the
    primitivity oracle, so the two ends are flagged and no interior
    vertex is.
    """
    m, qbar = bridge.m, bridge.qbar
    rename = {
        "E_m": f"E_{m}",
        "E_{m+1}": f"E_{m + 1}",
        "E_" + bridge.w: "D",
    }
    vertices = [
        Vertex("E", Word((("x", 1),)), True),
        _oracle_vertex(f"E_{m}", qbar, m - 1, qbar + bridge.r),
        _oracle_vertex(f"E_{m + 1}", qbar, m, bridge.r),
        _oracle_vertex("D", qbar, bridge.m_exp, bridge.n_exp),
    ]
    for i in range(len(bridge.w)):
        prefix = bridge.w[:i]
        v = principal_vertex(bridge.lens.p, qbar, m, bridge.r, prefix)
        vertices.append(_oracle_vertex("E_" + prefix, qbar, v.m_exp, v.n_exp))
    triangles = [
        tuple(rename.get(label, label) for label in triangle)
        for triangle in bridge.corridor
    ]
    return SimplicialComplex2(
        tuple(vertices),
        tuple(_edges_of(triangles)),
        tuple(triangles),
        {
            "kind": "bridge",
            "p": bridge.lens.p,
            "q": bridge.lens.q,
            "qbar": qbar,
            "w": bridge.w,
            "simplexCount": bridge.simplex_count,
        },
    )


def _oracle_vertex(label: str, qbar: int, m_exp: int, n_exp: int) -> Vertex:
    word = PrincipalVertex(qbar, "", m_exp, n_exp).word()
    return Vertex(label, word, is_primitive(word).is_primitive, m_exp, n_exp)


def build_tree_of_trees_ball(
    space: LensSpace, radius: int, branching: int
) -> SimplicialComplex2:
    """Schematic ball in the tree of trees, truncated to finite branching.

    The true tree has infinite valency at every vertex, so the output is
    a display object; meta records the truncation and the quotient of
    the full tree by the group action.
    """
    if not 0 <= radius <= MAX_BALL_RADIUS:
        raise ValueError(f"radius must be within 0..{MAX_BALL_RADIUS}")
    if not 1 <= branching <= MAX_BALL_BRANCHING:
        raise ValueError(f"branching must be within 1..{MAX_BALL_BRANCHING}")
    inv = invariants(space)
    if inv.classification is not Classification.Forest:
        raise NotForestError(f"{space!r} has a contractible primitive disk complex")
    vertices = [Vertex("T")]
    edges = []
    frontier = ["T"]
    for _ in range(radius):
        next_frontier = []
        for parent in frontier:
            for i in range(1, branching + 1):
                child = f"{parent}.{i}"
                vertices.append(Vertex(child))
                edges.append((parent, child))
                next_frontier.append(child)
        frontier = next_frontier
    quotient = (
        "single edge, two vertices"
        if inv.q_squared_is_one
        else "single edge, one vertex (loop)"
    )
    return SimplicialComplex2(
        tuple(vertices),
        tuple(edges),
        (),
        {
            "kind": "treeOfTrees",
            "p": space.p,
            "q": space.q,
            "radius": radius,
            "branching": branching,
            "truncated": True,
            "quotient": quotient,
            "bridge": bridge_report(find_bridge(space, space.q)),
        },
    )


def export_json(complex_: SimplicialComplex2) -> str:
    """Canonical JSON text; stable under import_json round-trips."""
    vertices = []
    for v in complex_.vertices:
        entry: dict = {"label": v.label}
        if v.word is not None:
            entry["word"] = str(v.word)
        if v.primitive is not None:
            entry["primitive"] = v.primitive
        if v.m_exp is not None:
            entry["mExp"] = v.m_exp
        if v.n_exp is not None:
            entry["nExp"] = v.n_exp
        vertices.append(entry)
    document = {
        "vertices": vertices,
        "edges": [list(e) for e in complex_.edges],
        "triangles": [list(t) for t in complex_.triangles],
        "meta": complex_.meta,
    }
    return json.dumps(document, indent=2) + "\n"


def import_json(text: str) -> SimplicialComplex2:
    data = json.loads(text)
    vertices = tuple(
        Vertex(
            entry["label"],
            parse_word(entry["word"]) if "word" in entry else None,
            entry.get("primitive"),
            entry.get("mExp"),
            entry.get("nExp"),
        )
        for entry in data["vertices"]
    )
    return SimplicialComplex2(
        vertices,
        tuple(tuple(e) for e in data["edges"]),
        tuple(tuple(t) for t in data["triangles"]),
        data["meta"],
    )


def export_dot(complex_: SimplicialComplex2) -> str:
    """DOT rendering; triangles appear as clique edges plus id comments."""
    name = complex_.meta.get("kind", "complex")
    lines = [f"graph {name} {{"]
    for v in complex_.vertices:
        attrs = " [peripheries=2]" if v.primitive else ""
        lines.append(f'  "{v.label}"{attrs};')
    for a, b in complex_.edges:
        lines.append(f'  "{a}" -- "{b}";')
    for i, t in enumerate(complex_.triangles):
        lines.append(f'  // triangle {i}: "{t[0]}" "{t[1]}" "{t[2]}"')
    lines.append("}")
    return "\n".join(lines) + "\n"

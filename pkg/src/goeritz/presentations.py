"""Finite presentations of genus-2 Goeritz groups of lens spaces.

When the primitive disk complex is a forest, the Goeritz group acts on
the tree of trees with one vertex orbit and one edge orbit, so it is an
amalgam or an HNN extension of explicit stabilizers.  Presentations are
stored both as a structure tree (cyclic factors combined by free and
direct products, amalgams, HNN extensions) and as a flat generator and
relator list; the two are kept consistent by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .lens import Classification, LensSpace, Sphere, invariants, pi1_diff


@dataclass(frozen=True)
class Power:
    gen: str
    exponent: int

    def text(self) -> str:
        return f"{self.gen}^{self.exponent}"

    def gap(self) -> str:
        return f"{self.gen}^{self.exponent}"


@dataclass(frozen=True)
class Commutator:
    a: str
    b: str

    def text(self) -> str:
        return f"[{self.a},{self.b}]"

    def gap(self) -> str:
        return f"{self.a}*{self.b}*{self.a}^-1*{self.b}^-1"


Relator = Union[Power, Commutator]


@dataclass(frozen=True)
class Cyclic:
    """One generator, of the given finite order or free when None."""

    gen: str
    order: int | None = None


@dataclass(frozen=True)
class FreeProductOfParts:
    parts: tuple["Structure", ...]


@dataclass(frozen=True)
class DirectSum:
    parts: tuple["Structure", ...]


@dataclass(frozen=True)
class AmalgamatedProduct:
    left: "Structure"
    right: "Structure"
    over: tuple[str, ...]


@dataclass(frozen=True)
class HNN:
    base: "Structure"
    over: tuple[str, ...]
    stable: str


Structure = Union[Cyclic, FreeProductOfParts, DirectSum, AmalgamatedProduct, HNN]


def flatten(node: Structure) -> tuple[tuple[str, ...], tuple[Relator, ...]]:
    """Generators and relators of a structure tree.

    Direct sums add commutators between all pairs of factors; amalgams
    merge the two sides deduplicating shared generators and relators;
    HNN extensions add the stable letter and its commutation with the
    edge subgroup.
    """
    if isinstance(node, Cyclic):
        relators: tuple[Relator, ...] = ()
        if node.order is not None:
            relators = (Power(node.gen, node.order),)
        return (node.gen,), relators
    if isinstance(node, FreeProductOfParts):
        gens: list[str] = []
        rels: list[Relator] = []
        for part in node.parts:
            g, r = flatten(part)
            gens.extend(g)
            rels.extend(r)
        _require_distinct(gens)
        return tuple(gens), tuple(rels)
    if isinstance(node, DirectSum):
        flat = [flatten(part) for part in node.parts]
        gens = [g for part_gens, _ in flat for g in part_gens]
        _require_distinct(gens)
        rels = [r for _, part_rels in flat for r in part_rels]
        for i in range(len(flat)):
            for j in range(i + 1, len(flat)):
                for a in flat[i][0]:
                    for b in flat[j][0]:
                        rels.append(Commutator(a, b))
        return tuple(gens), tuple(rels)
    if isinstance(node, AmalgamatedProduct):
        lg, lr = flatten(node.left)
        rg, rr = flatten(node.right)
        for g in node.over:
            if g not in lg or g not in rg:
                raise ValueError(f"amalgamated generator {g!r} missing from a side")
        gens = list(lg) + [g for g in rg if g not in lg]
        rels = list(lr) + [r for r in rr if r not in lr]
        return tuple(gens), tuple(rels)
    if isinstance(node, HNN):
        bg, br = flatten(node.base)
        for g in node.over:
            if g not in bg:
                raise ValueError(f"edge generator {g!r} missing from the base")
        if node.stable in bg:
            raise ValueError(f"stable letter {node.stable!r} clashes with the base")
        rels = list(br) + [Commutator(g, node.stable) for g in node.over]
        return bg + (node.stable,), tuple(rels)
    raise TypeError(f"not a structure node: {node!r}")


def _require_distinct(gens: list[str]) -> None:
    if len(set(gens)) != len(gens):
        raise ValueError(f"duplicate generators across free factors: {gens}")


def structure_text(node: Structure) -> str:
    if isinstance(node, Cyclic):
        base = "Z" if node.order is None else f"Z/{node.order}"
        return f"{base}<{node.gen}>"
    if isinstance(node, FreeProductOfParts):
        return "(" + " * ".join(structure_text(p) for p in node.parts) + ")"
    if isinstance(node, DirectSum):
        return "(" + " (+) ".join(structure_text(p) for p in node.parts) + ")"
    if isinstance(node, AmalgamatedProduct):
        over = ",".join(node.over)
        left = structure_text(node.left)
        right = structure_text(node.right)
        return f"({left} *_({over}) {right})"
    if isinstance(node, HNN):
        over = ",".join(node.over)
        return f"hnn({structure_text(node.base)}, over=({over}), stable={node.stable})"
    raise TypeError(f"not a structure node: {node!r}")


def _structure_json(node: Structure) -> dict:
    if isinstance(node, Cyclic):
        return {"kind": "cyclic", "gen": node.gen, "order": node.order}
    if isinstance(node, FreeProductOfParts):
        return {"kind": "freeProduct", "parts": [_structure_json(p) for p in node.parts]}
    if isinstance(node, DirectSum):
        return {"kind": "directSum", "parts": [_structure_json(p) for p in node.parts]}
    if isinstance(node, AmalgamatedProduct):
        return {
            "kind": "amalgam",
            "left": _structure_json(node.left),
            "right": _structure_json(node.right),
            "over": list(node.over),
        }
    if isinstance(node, HNN):
        return {
            "kind": "hnn",
            "base": _structure_json(node.base),
            "over": list(node.over),
            "stable": node.stable,
        }
    raise TypeError(f"not a structure node: {node!r}")


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Relator, ...]
    structure: Structure

    def __post_init__(self) -> None:
        gens, rels = flatten(self.structure)
        if gens != self.generators or rels != self.relators:
            raise ValueError("flat form disagrees with the structure tree")
        named = set(self.generators)
        for rel in self.relators:
            used = {rel.gen} if isinstance(rel, Power) else {rel.a, rel.b}
            if not used <= named:
                raise ValueError(f"relator {rel.text()} uses undeclared generators")

    @classmethod
    def of(cls, structure: Structure) -> "GroupPresentation":
        gens, rels = flatten(structure)
        return cls(gens, rels, structure)

    def text(self) -> str:
        lines = ["generators: " + ", ".join(self.generators), "relators:"]
        lines.extend(rel.text() for rel in self.relators)
        lines.append("structure: " + structure_text(self.structure))
        return "\n".join(lines) + "\n"

    def gap(self) -> str:
        quoted = ", ".join(f'"{g}"' for g in self.generators)
        rels = ", ".join(rel.gap() for rel in self.relators)
        return (
            f"F := FreeGroup( {quoted} );;\n"
            "AssignGeneratorVariables( F );;\n"
            f"G := F / [ {rels} ];\n"
        )

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [rel.text() for rel in self.relators],
            "structure": _structure_json(self.structure),
        }


class StabilizerKind(str, Enum):
    Vertex = "Vertex"
    OrderedPair = "OrderedPair"
    UnorderedPairSwappable = "UnorderedPairSwappable"
    UnorderedPairRigid = "UnorderedPairRigid"
    TTVertex_qSq1 = "TTVertex_qSq1"
    TTVertex_qSqNot1 = "TTVertex_qSqNot1"
    TTEdgeUnion_qSq1 = "TTEdgeUnion_qSq1"
    TTEdge = "TTEdge"


def _free_product(*parts: Structure) -> FreeProductOfParts:
    return FreeProductOfParts(tuple(parts))


_ALPHA = Cyclic("alpha", 2)

_STABILIZER_STRUCTURES: dict[StabilizerKind, Structure] = {
    StabilizerKind.Vertex: DirectSum(
        (_ALPHA, _free_product(Cyclic("beta"), Cyclic("gamma", 2)))
    ),
    StabilizerKind.OrderedPair: _ALPHA,
    StabilizerKind.UnorderedPairSwappable: DirectSum((_ALPHA, Cyclic("sigma", 2))),
    StabilizerKind.UnorderedPairRigid: _ALPHA,
    StabilizerKind.TTVertex_qSq1: DirectSum(
        (
            _ALPHA,
            _free_product(
                Cyclic("beta"), Cyclic("gamma", 2), Cyclic("sigma1", 2), Cyclic("sigma2", 2)
            ),
        )
    ),
    StabilizerKind.TTVertex_qSqNot1: DirectSum(
        (
            _ALPHA,
            _free_product(
                Cyclic("beta1"),
                Cyclic("beta2"),
                Cyclic("gamma1", 2),
                Cyclic("gamma2", 2),
                Cyclic("sigma1", 2),
                Cyclic("sigma2", 2),
            ),
        )
    ),
    StabilizerKind.TTEdgeUnion_qSq1: DirectSum((_ALPHA, Cyclic("tau", 2))),
    StabilizerKind.TTEdge: _ALPHA,
}


def stabilizer_presentation(kind: StabilizerKind) -> GroupPresentation:
    """Presentation of the stabilizer of the given orbit representative.

    Vertex stabilizers are an order-2 central factor (the hyperelliptic
    involution) times a free product of involutions and free letters;
    pair stabilizers keep only the central factor plus, when the pair
    can be swapped, the swap involution.
    """
    return GroupPresentation.of(_STABILIZER_STRUCTURES[StabilizerKind(kind)])


@dataclass(frozen=True)
class ConnectedCaseStub:
    """Marker for spaces whose primitive disk complex is connected."""

    space: LensSpace
    reason: str


def goeritz_presentation(space: LensSpace) -> GroupPresentation | ConnectedCaseStub:
    """Presentation of the genus-2 Goeritz group of a forest-type space.

    With q^2 = 1 mod p the tree-of-trees quotient is a single edge with
    two vertices, giving an amalgam of a vertex stabilizer and an edge
    union stabilizer over the central involution; otherwise the quotient
    is a loop, giving an HNN extension with one free stable letter.
    """
    inv = invariants(space)
    if inv.classification is Classification.Contractible:
        return ConnectedCaseStub(
            space, "primitive disk complex is connected; covered by earlier work"
        )
    if inv.q_squared_is_one:
        structure: Structure = AmalgamatedProduct(
            _STABILIZER_STRUCTURES[StabilizerKind.TTVertex_qSq1],
            _STABILIZER_STRUCTURES[StabilizerKind.TTEdgeUnion_qSq1],
            over=("alpha",),
        )
    else:
        structure = HNN(
            _STABILIZER_STRUCTURES[StabilizerKind.TTVertex_qSqNot1],
            over=("alpha",),
            stable="upsilon",
        )
    return GroupPresentation.of(structure)


@dataclass(frozen=True)
class AbelianGroup:
    rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        run: list[int] = []
        for d in self.torsion:
            if run and run[0] != d:
                parts.append(self._torsion_text(run))
                run = []
            run.append(d)
        if run:
            parts.append(self._torsion_text(run))
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"

    @staticmethod
    def _torsion_text(run: list[int]) -> str:
        base = f"Z/{run[0]}"
        return base if len(run) == 1 else f"({base})^{len(run)}"


def _smith_invariant_factors(rows: list[list[int]], width: int) -> list[int]:
    # Plain integer Smith reduction; matrices here are tiny.
    mat = [row[:] for row in rows]
    height = len(mat)
    factors: list[int] = []
    top = 0
    left = 0
    while top < height and left < width:
        pivot = None
        for i in range(top, height):
            for j in range(left, width):
                if mat[i][j] and (pivot is None or abs(mat[i][j]) < abs(mat[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        mat[top], mat[i] = mat[i], mat[top]
        for row in mat:
            row[left], row[j] = row[j], row[left]
        dirty = False
        for i in range(top + 1, height):
            k = mat[i][left] // mat[top][left]
            if k:
                for j in range(left, width):
                    mat[i][j] -= k * mat[top][j]
            if mat[i][left]:
                dirty = True
        for j in range(left + 1, width):
            k = mat[top][j] // mat[top][left]
            if k:
                for i in range(top, height):
                    mat[i][j] -= k * mat[i][left]
            if mat[top][j]:
                dirty = True
        if dirty:
            continue
        factors.append(abs(mat[top][left]))
        top += 1
        left += 1
    # Enforce the divisibility chain.
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            if b % a:
                g = _gcd(a, b)
                factors[i], factors[i + 1] = g, a * b // g
                changed = True
    return factors


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def abelianization(presentation: GroupPresentation) -> AbelianGroup:
    """Abelianized group, by Smith reduction of the relator matrix."""
    gens = presentation.generators
    index = {g: i for i, g in enumerate(gens)}
    rows = []
    for rel in presentation.relators:
        row = [0] * len(gens)
        if isinstance(rel, Power):
            row[index[rel.gen]] = rel.exponent
        rows.append(row)
    factors = _smith_invariant_factors(rows, len(gens))
    nonzero = [d for d in factors if d]
    torsion = tuple(d for d in nonzero if d > 1)
    return AbelianGroup(len(gens) - len(nonzero), torsion)


def heegaard_space_report(space: LensSpace | Sphere) -> dict:
    """Fundamental group of the space of genus-2 splittings of the space.

    The group is an extension of the mapping class data by the loop
    group of the diffeomorphism group, so it is finitely presented
    whenever the quotient is.
    """
    diff = pi1_diff(space)
    if isinstance(space, Sphere):
        label = "S^3"
        quotient: dict = {
            "kind": "stub",
            "reason": "primitive disk complex is connected; covered by earlier work",
        }
    else:
        label = repr(space)
        result = goeritz_presentation(space)
        if isinstance(result, ConnectedCaseStub):
            quotient = {"kind": "stub", "reason": result.reason}
        else:
            quotient = {"kind": "presentation", **result.to_json()}
    return {
        "space": label,
        "sequence": "1 -> pi1(Diff) -> pi1(H) -> G -> 1",
        "kernel": diff.descriptor,
        "quotient": quotient,
        "quotientNote": "Goeritz group, up to finite extensions",
        "smaleConditional": diff.smale_conditional,
        "conclusion": "finitely presented",
    }

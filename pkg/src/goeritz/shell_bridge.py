"""Shell word sequences, the mediant tree, and minimal bridges.

The shell of a (p, qbar) pair lists the boundary words E_0 .. E_p; the
word of E_k reads off the cyclic gaps of the first k multiples of qbar
in Z/p.  The principal complex is a binary tree of vertices obtained by
a mediant rule on (m-exponent, n-exponent) pairs, and a bridge is the
shortest corridor of triangles from the base pair to a vertex whose
n-exponent is qbar - 1 or qbar + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .lens import Classification, LensSpace, division_window, invariants, modular_partner
from .words import Word

MAX_BRIDGE_DEPTH = 64
_NODE_BUDGET = 1 << 20


class NotForestError(Exception):
    """The primitive disk complex is contractible, so no bridge exists."""


class DepthLimitExceededError(RuntimeError):
    """Bridge search exhausted its depth or node budget; input or code bug."""


@dataclass(frozen=True)
class Shell:
    p: int
    qbar: int
    words: tuple[Word, ...]
    primitive_indices: frozenset[int]

    e_word: Word = field(default=Word((("x", 1),)))

    def word(self, k: int) -> Word:
        return self.words[k]


def shell_words(p: int, qbar: int) -> Shell:
    """Boundary words E_0 .. E_p of the (p, qbar) shell.

    E_k is x y^(g_1) .. x y^(g_k) where the g_i are the cyclic gaps of
    the sorted residues {0, qbar, .., (k-1) qbar mod p}; E_0 is y^p.
    """
    if p < 2 or not 1 <= qbar < p or gcd(p, qbar) != 1:
        raise ValueError(f"shell requires coprime 1 <= qbar < p, got ({p},{qbar})")
    words = [Word((("y", p),))]
    for k in range(1, p + 1):
        residues = sorted(i * qbar % p for i in range(k))
        gaps = [
            (residues[(i + 1) % k] - residues[i]) % p or p for i in range(k)
        ]
        pairs: list[tuple[str, int]] = []
        for g in gaps:
            pairs.append(("x", 1))
            pairs.append(("y", g))
        words.append(Word(tuple(pairs)))
    partner = modular_partner(p, qbar)
    indices = frozenset({1, partner, p - partner, p - 1})
    return Shell(p, qbar, tuple(words), indices)


def shell_primitive_indices(shell: Shell) -> frozenset[int]:
    """Indices k for which E_k bounds a primitive disk: {1, q', p-q', p-1}."""
    return shell.primitive_indices


def _mediant(a: tuple[int, int], b: tuple[int, int], qbar: int) -> tuple[int, int]:
    return a[0] + b[0] + 1, a[1] + b[1] - qbar


@dataclass(frozen=True)
class PrincipalVertex:
    """Vertex E_w of the principal complex; word is (xy^qbar)^m_exp xy^n_exp."""

    qbar: int
    w: str
    m_exp: int
    n_exp: int

    def word(self) -> Word:
        pairs = (("x", 1), ("y", self.qbar)) * self.m_exp + (("x", 1), ("y", self.n_exp))
        return Word(pairs)


def _base_pair(qbar: int, m: int, r: int) -> tuple[tuple[int, int], tuple[int, int]]:
    return (m - 1, qbar + r), (m, r)


def principal_vertex(p: int, qbar: int, m: int, r: int, w: str = "") -> PrincipalVertex:
    """Walk the mediant tree along w (letters L/R) from the base pair."""
    if p != qbar * m + r:
        raise ValueError(f"inconsistent division: {p} != {qbar}*{m} + {r}")
    pair = _base_pair(qbar, m, r)
    for letter in w:
        mid = _mediant(pair[0], pair[1], qbar)
        if letter == "R":
            pair = (pair[0], mid)
        elif letter == "L":
            pair = (mid, pair[1])
        else:
            raise ValueError(f"tree word letter {letter!r} is not L or R")
    m_exp, n_exp = _mediant(pair[0], pair[1], qbar)
    return PrincipalVertex(qbar, w, m_exp, n_exp)


@dataclass(frozen=True)
class Bridge:
    lens: LensSpace
    qbar: int
    m: int
    r: int
    w: str
    m_exp: int
    n_exp: int
    d_word: Word
    corridor: tuple[tuple[str, str, str], ...]
    simplex_count: int
    tie: bool = False


def _corridor(w: str) -> tuple[tuple[str, str, str], ...]:
    triangles = [("E", "E_m", "E_{m+1}")]
    pair = ("E_m", "E_{m+1}")
    mid = "E_"
    triangles.append((pair[0], pair[1], mid))
    for i, letter in enumerate(w):
        pair = (pair[0], mid) if letter == "R" else (mid, pair[1])
        mid = "E_" + w[: i + 1]
        triangles.append((pair[0], pair[1], mid))
    return tuple(triangles)


def find_bridge(space: LensSpace, qbar: int, max_depth: int = MAX_BRIDGE_DEPTH) -> Bridge:
    """Minimal-depth mediant-tree vertex with n-exponent qbar -+ 1.

    Breadth-first, L-children first, so the reported w is the
    lexicographically least among minimal ones (L < R).
    """
    inv = invariants(space)
    if inv.classification is not Classification.Forest:
        raise NotForestError(f"{space!r} has a contractible primitive disk complex")
    if qbar not in (space.q, inv.q_prime):
        raise ValueError(f"qbar must be {space.q} or {inv.q_prime}, got {qbar}")
    window = division_window(space.p, qbar)
    if window is None:
        raise NotForestError(f"{space!r}: division window for qbar={qbar} is empty")
    m, r = window
    targets = (qbar - 1, qbar + 1)

    frontier = [("", _base_pair(qbar, m, r))]
    visited = 0
    for depth in range(max_depth + 1):
        hits = []
        next_frontier = []
        for w, pair in frontier:
            visited += 1
            if visited > _NODE_BUDGET:
                raise DepthLimitExceededError(
                    f"bridge search for {space!r} qbar={qbar} exceeded node budget"
                )
            m_exp, n_exp = _mediant(pair[0], pair[1], qbar)
            if n_exp in targets:
                hits.append((w, m_exp, n_exp))
                continue
            mid = (m_exp, n_exp)
            for letter, child in (("L", (mid, pair[1])), ("R", (pair[0], mid))):
                if child[0][1] <= 0 and child[1][1] <= 0:
                    continue
                next_frontier.append((w + letter, child))
        if hits:
            w, m_exp, n_exp = hits[0]
            d_word = PrincipalVertex(qbar, w, m_exp, n_exp).word()
            return Bridge(
                lens=space,
                qbar=qbar,
                m=m,
                r=r,
                w=w,
                m_exp=m_exp,
                n_exp=n_exp,
                d_word=d_word,
                corridor=_corridor(w),
                simplex_count=len(w) + 2,
                tie=len(hits) > 1,
            )
        frontier = next_frontier
    raise DepthLimitExceededError(
        f"no bridge for {space!r} qbar={qbar} within depth {max_depth}"
    )


def bridge_end_homology(bridge: Bridge) -> tuple[int, int]:
    """Homology classes of the two end disks, as residues in [1, p/2].

    The boundary of the base disk maps to +-1 and the far end to
    +-qbar in Z/p; they differ exactly when qbar is not +-1 mod p.
    """
    p = bridge.lens.p

    def normalize(v: int) -> int:
        v %= p
        return v if 2 * v <= p else p - v

    return normalize(1), normalize(bridge.qbar)


def bridge_report(bridge: Bridge) -> dict:
    """JSON-ready description of one bridge."""
    class_e, class_d = bridge_end_homology(bridge)
    return {
        "qbar": bridge.qbar,
        "m": bridge.m,
        "r": bridge.r,
        "w": bridge.w,
        "dWord": str(bridge.d_word),
        "simplexCount": bridge.simplex_count,
        "homology": {"E": class_e, "D": class_d},
        "corridor": [list(triangle) for triangle in bridge.corridor],
    }

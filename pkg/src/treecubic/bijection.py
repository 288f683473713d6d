"""Tree-rooted planar cubic maps <-> triangulated polygons with planar pairings.

Forward: thicken the spanning tree.  Each vertex becomes a triangle, tree
edges become diagonals, and the boundary of the resulting polygon is met
by the non-tree darts in contour order.  Reverse: put a vertex in every
triangle, join triangles across diagonals, and join the owners of paired
sides by an arc through the outside.
"""

from __future__ import annotations

from dataclasses import dataclass

from .comb_map import (
    CombinatorialMap,
    MapValidationError,
    TreeRootedCubicMap,
    ensure_tree_rooted,
    validate_tree_rooted,
)
from .polygon import (
    MarkedTriangulation,
    PolygonError,
    SidePairing,
    pairing_genus,
)


@dataclass(frozen=True)
class PolygonDatum:
    triangulation: MarkedTriangulation
    pairing: SidePairing

    @property
    def k(self) -> int:
        return self.triangulation.k

    @property
    def n(self) -> int:
        return (self.k - 2) // 2

    def diagnostics(self) -> list[str]:
        k = self.k
        problems = []
        if k < 4 or k % 2:
            problems.append(f"polygon must have an even number >= 4 of sides, got {k}")
        if self.pairing.k != k:
            problems.append(f"pairing covers {self.pairing.k} sides, polygon has {k}")
        problems += self.triangulation.diagnostics() + self.pairing.diagnostics()
        if not problems:
            g = pairing_genus(self.pairing)
            if g:
                problems.append(f"side pairing glues a genus {g} surface, expected genus 0")
        return problems

    def validate(self) -> "PolygonDatum":
        problems = self.diagnostics()
        if problems:
            raise PolygonError("; ".join(problems))
        return self


def contour_walk(t: TreeRootedCubicMap) -> tuple[list[int], dict[int, int]]:
    """Walk around the tree from the root.

    Returns the non-tree darts in emission order and, for every angle
    (keyed by its first dart ``x``, i.e. the wedge from ``x`` to
    ``sigma(x)``), the polygon corner it belongs to.
    """
    m = t.map
    sigma, alpha, tree = m.sigma, m.alpha, t.tree_darts
    emitted: list[int] = []
    corner_of: dict[int, int] = {}
    corner = 0
    d = t.root_dart
    for _ in range(m.n_darts):
        if d in tree:
            x = alpha[d]
        else:
            emitted.append(d)
            corner = len(emitted)
            x = d
        corner_of[x] = corner
        d = sigma[x]
    if d != t.root_dart:
        raise AssertionError("contour walk did not close up at the root")
    k = len(emitted)
    return emitted, {x: c % k for x, c in corner_of.items()}


def forward(t: TreeRootedCubicMap) -> PolygonDatum:
    ensure_tree_rooted(t)
    m = t.map
    sigma, alpha = m.sigma, m.alpha
    emitted, corner_of = contour_walk(t)
    k = len(emitted)
    side_of = {d: s for s, d in enumerate(emitted)}
    pairing = SidePairing(tuple(side_of[alpha[d]] for d in emitted))
    sigma_inv = [0] * m.n_darts
    for d, s in enumerate(sigma):
        sigma_inv[s] = d
    diagonals = frozenset(
        tuple(sorted((corner_of[sigma_inv[x]], corner_of[x])))
        for x in t.tree_darts
    )
    datum = PolygonDatum(MarkedTriangulation(k, diagonals), pairing)
    problems = datum.diagnostics()
    if k != 2 * t.n + 2 or problems:
        raise AssertionError(f"forward produced an invalid polygon: {problems or k}")
    return datum


def reverse(p: PolygonDatum) -> TreeRootedCubicMap:
    """Rebuild the tree-rooted cubic map; rejects non-planar pairings."""
    p.validate()
    k = p.k
    tris = p.triangulation.triangles()
    # dart 3t+i is the segment of triangle t from its i-th to (i+1)-th corner
    seg_dart: dict[tuple[int, int], int] = {}
    sigma = [0] * (3 * len(tris))
    for t, (a, b, c) in enumerate(tris):
        for i, seg in enumerate(((a, b), (b, c), (c, a))):
            seg_dart[seg] = 3 * t + i
            sigma[3 * t + i] = 3 * t + (i + 1) % 3
    alpha = [-1] * len(sigma)
    tree = set()
    for i, j in p.triangulation.diagonals:
        x, y = seg_dart[(i, j)], seg_dart[(j, i)]
        alpha[x], alpha[y] = y, x
        tree.update((x, y))
    side_dart = [seg_dart[(s, (s + 1) % k)] for s in range(k)]
    for s, u in p.pairing.pairs():
        x, y = side_dart[s], side_dart[u]
        alpha[x], alpha[y] = y, x
    t = TreeRootedCubicMap(CombinatorialMap(tuple(sigma), tuple(alpha)), frozenset(tree), side_dart[0])
    problems = validate_tree_rooted(t)
    if problems:
        raise MapValidationError(problems)
    return t


def roundtrip_map(t: TreeRootedCubicMap) -> bool:
    return reverse(forward(t)).code() == t.code()


def roundtrip_polygon(p: PolygonDatum) -> bool:
    return forward(reverse(p)) == p

"""Hand-built planar maps used as fixtures and in the verification report.

Rotations were read off planar drawings (counterclockwise by the angle at
which each edge leaves its vertex).  Dart names are ``"<vertex>.<edge>"``.
"""

from __future__ import annotations

from .comb_map import CombinatorialMap, TreeRootedCubicMap
from .polygon import MarkedTriangulation, SidePairing


def _build(rotations: dict[str, list[str]]) -> tuple[CombinatorialMap, dict[str, int]]:
    """Darts sharing an edge name are paired; a loop lists its edge name twice."""
    named_rot = []
    ends: dict[str, list[str]] = {}
    for v, rot in rotations.items():
        names = []
        for e in rot:
            dart = f"{v}.{e}"
            if dart in names:
                dart += "'"
            names.append(dart)
            ends.setdefault(e, []).append(dart)
        named_rot.append(names)
    for e, darts in ends.items():
        if len(darts) != 2:
            raise ValueError(f"edge {e!r} has {len(darts)} ends")
    return CombinatorialMap.from_named(named_rot, [tuple(d) for d in ends.values()])


def _tree(index: dict[str, int], m: CombinatorialMap, darts: list[str]) -> frozenset[int]:
    out = set()
    for name in darts:
        out.update((index[name], m.alpha[index[name]]))
    return frozenset(out)


# the six cubic planar maps on four vertices -------------------------------------


def subdivided_theta_with_loop():
    """Theta graph with one edge subdivided, a bridge, and a loop."""
    return _build({
        "b": ["br", "chord", "left"],
        "t": ["tr", "left", "chord"],
        "r": ["bridge", "tr", "br"],
        "q": ["loop", "bridge", "loop"],
    })


def doubled_square():
    """4-cycle with two opposite edges doubled."""
    return _build({
        "a": ["aR", "top", "aL"],
        "b": ["aR", "aL", "bottom"],
        "c": ["cR", "top", "cL"],
        "d": ["cR", "cL", "bottom"],
    })


def tetrahedron():
    return _build({
        "o": ["op", "ol", "or"],
        "p": ["pr", "pl", "op"],
        "r": ["pr", "or", "rl"],
        "l": ["ol", "pl", "rl"],
    })


def loop_star():
    """Central vertex joined to three vertices carrying loops."""
    rot = {"c": ["s1", "s2", "s3"]}
    for i in (1, 2, 3):
        rot[f"x{i}"] = [f"s{i}", f"l{i}", f"l{i}"]
    return _build(rot)


def _digon_chain(split: bool):
    rot = {
        "A": ["bA", "lA", "lA"],
        "B": ["e1", "bA", "e2"],
        "C": ["e1", "bD", "e2"] if split else ["bD", "e1", "e2"],
        "D": ["bD", "lD", "lD"],
    }
    return _build(rot)


def digon_chain_same_face():
    """Loop, bridge, digon, bridge, loop; both pendants in one face."""
    return _digon_chain(False)


def digon_chain_split_faces():
    """Same graph; the two pendants sit in different faces of the digon."""
    return _digon_chain(True)


FOUR_VERTEX_MAPS = {
    1: subdivided_theta_with_loop,
    2: doubled_square,
    3: tetrahedron,
    4: loop_star,
    5: digon_chain_same_face,
    6: digon_chain_split_faces,
}
"""Numbered in the order of the standard figure of the six 4-vertex maps."""

AUTOMORPHISM_ORDERS = {1: 1, 2: 4, 3: 12, 4: 3, 5: 2, 6: 2}
TREE_ROOTED_CONTRIBUTIONS = {1: 30, 2: 18, 3: 8, 4: 2, 5: 6, 6: 6}
TMAP_COUNTS = {1: 5, 2: 4, 3: 3, 4: 1, 5: 1, 6: 2}


def theta():
    return _build({"u": ["a", "b", "c"], "v": ["a", "c", "b"]})


def dumbbell():
    return _build({"u": ["l", "l", "bridge"], "v": ["m", "bridge", "m"]})


def single_loop():
    return _build({"u": ["l", "l"]})


# t-maps quoted with their automorphism orders ------------------------------------


def loop_star_tmap():
    m, idx = loop_star()
    return m, _tree(idx, m, ["c.s1", "c.s2", "c.s3"])


def doubled_square_path_tmap():
    """Tree: one doubled edge, the top and the bottom single edges."""
    m, idx = doubled_square()
    return m, _tree(idx, m, ["a.aL", "a.top", "b.bottom"])


def tetrahedron_star_tmap():
    m, idx = tetrahedron()
    return m, _tree(idx, m, ["o.op", "o.ol", "o.or"])


def split_chain_tmaps():
    """The two t-maps of the split digon chain, both rooted at the loop at A."""
    m, idx = digon_chain_split_faces()
    trees = [_tree(idx, m, ["A.bA", "D.bD", f"B.{e}"]) for e in ("e2", "e1")]
    return m, trees, idx["A.lA"]


# worked examples of the two constructions -------------------------------------------


def hexagon_example_tmap() -> TreeRootedCubicMap:
    """Subdivided theta with tree (chord, upper arc, bridge), rooted b -> r."""
    m, idx = subdivided_theta_with_loop()
    tree = _tree(idx, m, ["b.chord", "t.tr", "r.bridge"])
    return TreeRootedCubicMap(m, tree, idx["b.br"])


HEXAGON_EXAMPLE_PAIRS = [(0, 1), (2, 3), (4, 5)]
"""Sides AB=0, BC=1, ..., FA=5 counterclockwise; pairs {AB,BC},{CD,DE},{EF,FA}."""


def octagon_example() -> tuple[MarkedTriangulation, SidePairing]:
    """Corners A..H = 0..7; pairs {AB,FG},{BC,CD},{DE,EF},{GH,HA}."""
    A, B, C, D, E, F, G, H = range(8)
    tri = MarkedTriangulation(8, frozenset({(H, E), (H, F), (A, E), (A, C), (E, C)}))
    pairing = SidePairing.from_pairs(8, [(0, 5), (1, 2), (3, 4), (6, 7)])
    return tri, pairing


def octagon_example_tmap() -> TreeRootedCubicMap:
    """The six-vertex map drawn for the octagon, root on the top edge."""
    m, idx = _build({
        "P": ["PS", "PQ", "PR"],
        "Q": ["QT", "QR", "PQ"],
        "R": ["RU", "PR", "QR"],
        "S": ["SU", "ST", "PS"],
        "T": ["TU", "QT", "ST"],
        "U": ["RU", "TU", "SU"],
    })
    tree = _tree(idx, m, ["P.PQ", "Q.QR", "P.PS", "S.ST", "S.SU"])
    return TreeRootedCubicMap(m, tree, idx["U.RU"])

"""Tree-rooted planar cubic maps and their bijection with marked polygons."""

from .bijection import PolygonDatum, forward, reverse, roundtrip_map, roundtrip_polygon
from .comb_map import CombinatorialMap, TreeRootedCubicMap, canonical_code_rooted, genus
from .counting import (
    catalan,
    edge_rooted_cubic_F,
    gj_f,
    mullin_count,
    tree_rooted_cubic_count,
    tutte_T,
)
from .polygon import MarkedTriangulation, SidePairing, pairing_genus

__all__ = [
    "CombinatorialMap",
    "MarkedTriangulation",
    "PolygonDatum",
    "SidePairing",
    "TreeRootedCubicMap",
    "canonical_code_rooted",
    "catalan",
    "edge_rooted_cubic_F",
    "forward",
    "genus",
    "gj_f",
    "mullin_count",
    "pairing_genus",
    "reverse",
    "roundtrip_map",
    "roundtrip_polygon",
    "tree_rooted_cubic_count",
    "tutte_T",
]

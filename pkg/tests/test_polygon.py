from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treecubic.counting import catalan
from treecubic.polygon import (
    MarkedTriangulation,
    PolygonError,
    SidePairing,
    enumerate_all_pairings,
    enumerate_noncrossing_pairings,
    enumerate_triangulations,
    is_noncrossing,
    pairing_genus,
    pairing_to_text,
    polygon_from_text,
    polygon_to_text,
)


def _brute_triangulations(k):
    """All (k-3)-subsets of chords that are pairwise noncrossing."""
    chords = [(i, j) for i, j in combinations(range(k), 2) if (j - i) % k not in (1, k - 1)]
    out = set()
    for subset in combinations(chords, k - 3):
        if not MarkedTriangulation(k, frozenset(subset)).diagnostics():
            out.add(frozenset(subset))
    return out


def _brute_involutions(k):
    out = set()
    for perm in permutations(range(k)):
        if all(perm[perm[s]] == s and perm[s] != s for s in range(k)):
            out.add(perm)
    return out


def _euler_genus(pairing):
    """Independent genus: build the glued surface's corner cycles by walking."""
    k = pairing.k
    # walking around a corner: arrive at the end of side s, cross to its
    # partner t, continue from the start of side t+1 ... corner s+1 ~ t
    seen = set()
    classes = 0
    for c in range(k):
        if c in seen:
            continue
        classes += 1
        x = c
        while x not in seen:
            seen.add(x)
            t = pairing.pair_of[(x - 1) % k]  # side ending at corner x
            x = t  # corner x is glued to the start corner of side t
    chi = classes - k // 2 + 1
    return (2 - chi) // 2


class TestTriangulations:
    def test_triangle(self):
        tris = list(enumerate_triangulations(3))
        assert len(tris) == 1 and tris[0].diagonals == frozenset()

    @pytest.mark.parametrize("k, expected", [(4, 2), (6, 14), (8, 132)])
    def test_counts(self, k, expected):
        assert sum(1 for _ in enumerate_triangulations(k)) == expected

    def test_counts_are_catalan(self):
        for k in range(3, 13):
            assert sum(1 for _ in enumerate_triangulations(k)) == catalan(k - 2)

    @pytest.mark.parametrize("k", [4, 5, 6, 7, 8])
    def test_matches_brute_force(self, k):
        got = [t.diagonals for t in enumerate_triangulations(k)]
        assert len(got) == len(set(got))
        assert set(got) == _brute_triangulations(k)

    def test_triangles_and_dual_tree(self):
        for k in range(3, 10):
            for t in enumerate_triangulations(k):
                assert t.diagnostics() == []
                tris = t.triangles()
                assert len(tris) == k - 2
                edges = t.dual_tree()
                assert len(edges) == k - 3
                parent = list(range(k - 2))

                def find(x):
                    while parent[x] != x:
                        x = parent[x]
                    return x

                for a, b in edges:
                    ra, rb = find(a), find(b)
                    assert ra != rb
                    parent[ra] = rb

    def test_crossing_diagonals_rejected(self):
        t = MarkedTriangulation(6, frozenset({(0, 3), (1, 4), (2, 5)}))
        assert any("cross" in p for p in t.diagnostics())

    def test_side_as_diagonal_rejected(self):
        t = MarkedTriangulation(4, frozenset({(0, 1)}))
        assert any("is a side" in p for p in t.diagnostics())
        with pytest.raises(PolygonError):
            t.validate()


class TestPairings:
    def test_k2(self):
        assert [p.pair_of for p in enumerate_noncrossing_pairings(2)] == [(1, 0)]

    def test_k4(self):
        got = {tuple(p.pairs()) for p in enumerate_noncrossing_pairings(4)}
        assert got == {((0, 1), (2, 3)), ((0, 3), (1, 2))}

    def test_k8(self):
        assert sum(1 for _ in enumerate_noncrossing_pairings(8)) == 14

    def test_noncrossing_counts_are_catalan(self):
        for k in range(2, 17, 2):
            assert sum(1 for _ in enumerate_noncrossing_pairings(k)) == catalan(k // 2)

    @pytest.mark.parametrize("k, expected", [(4, 3), (6, 15), (8, 105)])
    def test_all_pairings(self, k, expected):
        got = [p.pair_of for p in enumerate_all_pairings(k)]
        assert len(got) == expected == len(set(got))
        assert set(got) == _brute_involutions(k)

    def test_bad_pairing_rejected(self):
        assert SidePairing((0, 1)).diagnostics()
        assert SidePairing((1, 2, 0)).diagnostics()


class TestGenus:
    def test_k4_noncrossing(self):
        assert pairing_genus(SidePairing.from_pairs(4, [(0, 1), (2, 3)])) == 0

    def test_k4_crossing_is_torus(self):
        assert pairing_genus(SidePairing.from_pairs(4, [(0, 2), (1, 3)])) == 1

    def test_k6_noncrossing_all_spheres(self):
        ps = list(enumerate_noncrossing_pairings(6))
        assert len(ps) == 5
        assert all(pairing_genus(p) == 0 for p in ps)

    def test_genus_iff_noncrossing_up_to_12(self):
        for k in range(2, 13, 2):
            zero = 0
            for p in enumerate_all_pairings(k):
                g = pairing_genus(p)
                assert (g == 0) == is_noncrossing(p)
                zero += g == 0
            assert zero == catalan(k // 2)

    def test_genus_matches_corner_walk(self):
        for k in range(2, 11, 2):
            for p in enumerate_all_pairings(k):
                assert pairing_genus(p) == _euler_genus(p)

    def test_k2_is_noncrossing(self):
        assert is_noncrossing(SidePairing((1, 0)))

    def test_k4_crossing(self):
        assert not is_noncrossing(SidePairing.from_pairs(4, [(0, 2), (1, 3)]))


@given(st.sampled_from(list(enumerate_triangulations(8))), st.sampled_from(list(enumerate_all_pairings(8))))
def test_text_roundtrip(tri, pairing):
    assert polygon_from_text(polygon_to_text(tri, pairing)) == (tri, pairing)


def test_text_layout():
    tri = MarkedTriangulation(4, frozenset({(1, 3)}))
    pairing = SidePairing.from_pairs(4, [(0, 1), (2, 3)])
    assert polygon_to_text(tri, pairing) == "k=4\n1-3\n0:1 2:3\n"
    assert pairing_to_text(pairing) == "k=4\n\n0:1 2:3\n"


@pytest.mark.parametrize("text", ["k=x\n\n", "n=4\n1-3\n0:1 2:3\n", "k=4\n1-3\n0:1 2:9\n", "k=4\n1_3\n0:1 2:3\n"])
def test_text_rejects_malformed(text):
    with pytest.raises(PolygonError):
        polygon_from_text(text)

"""Marked polygons: triangulations, side pairings, and gluing genus.

Corners are ``0..k-1`` counterclockwise and side ``s`` joins corners ``s``
and ``s+1 (mod k)``.  Side 0 is the marked side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class PolygonError(ValueError):
    pass


def _norm(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def _is_side(k: int, i: int, j: int) -> bool:
    return (j - i) % k in (1, k - 1)


def chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Whether two chords with distinct endpoints interleave on the circle."""
    (p, q), (r, s) = _norm(*a), _norm(*b)
    return p < r < q < s or r < p < s < q


@dataclass(frozen=True)
class MarkedTriangulation:
    k: int
    diagonals: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(
            self, "diagonals", frozenset(_norm(*d) for d in self.diagonals)
        )

    def diagnostics(self) -> list[str]:
        k = self.k
        problems = []
        if k < 3:
            return [f"polygon needs at least 3 sides, got {k}"]
        for i, j in self.diagonals:
            if not (0 <= i < k and 0 <= j < k) or i == j:
                problems.append(f"diagonal {i}-{j} has bad corners")
            elif _is_side(k, i, j):
                problems.append(f"diagonal {i}-{j} is a side")
        if problems:
            return problems
        if len(self.diagonals) != k - 3:
            problems.append(f"{len(self.diagonals)} diagonals, expected {k - 3}")
        diags = sorted(self.diagonals)
        for x in range(len(diags)):
            for y in range(x + 1, len(diags)):
                a, b = diags[x], diags[y]
                if len(set(a) | set(b)) == 4 and chords_cross(a, b):
                    problems.append(f"diagonals {a[0]}-{a[1]} and {b[0]}-{b[1]} cross")
        return problems

    def validate(self) -> "MarkedTriangulation":
        problems = self.diagnostics()
        if problems:
            raise PolygonError("; ".join(problems))
        return self

    def triangles(self) -> list[tuple[int, int, int]]:
        """Corner triples ``a < b < c``, sorted."""
        k = self.k
        adj = [set() for _ in range(k)]
        for i in range(k):
            adj[i].add((i + 1) % k)
            adj[(i + 1) % k].add(i)
        for i, j in self.diagonals:
            adj[i].add(j)
            adj[j].add(i)
        tris = []
        for a in range(k):
            for b in adj[a]:
                if b <= a:
                    continue
                for c in adj[a] & adj[b]:
                    if c > b:
                        tris.append((a, b, c))
        return sorted(tris)

    def dual_tree(self) -> list[tuple[int, int]]:
        """Pairs of triangle indices sharing a diagonal."""
        owner: dict[tuple[int, int], list[int]] = {}
        for t, (a, b, c) in enumerate(self.triangles()):
            for seg in ((a, b), (b, c), (a, c)):
                owner.setdefault(seg, []).append(t)
        return sorted(tuple(owner[d]) for d in sorted(self.diagonals))


@dataclass(frozen=True)
class SidePairing:
    pair_of: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pair_of", tuple(self.pair_of))

    @classmethod
    def from_pairs(cls, k: int, pairs: Iterable[tuple[int, int]]) -> "SidePairing":
        pair_of = [-1] * k
        for s, t in pairs:
            if pair_of[s] != -1 or pair_of[t] != -1:
                raise PolygonError(f"side listed twice in pair {s}:{t}")
            pair_of[s], pair_of[t] = t, s
        return cls(tuple(pair_of))

    @property
    def k(self) -> int:
        return len(self.pair_of)

    def pairs(self) -> list[tuple[int, int]]:
        return [(s, t) for s, t in enumerate(self.pair_of) if s < t]

    def diagnostics(self) -> list[str]:
        k = self.k
        if k == 0 or k % 2:
            return [f"pairing needs a positive even number of sides, got {k}"]
        problems = []
        for s, t in enumerate(self.pair_of):
            if not 0 <= t < k:
                problems.append(f"side {s} paired outside the polygon")
            elif t == s:
                problems.append(f"side {s} is paired with itself")
            elif self.pair_of[t] != s:
                problems.append(f"pairing is not an involution at side {s}")
        return problems

    def validate(self) -> "SidePairing":
        problems = self.diagnostics()
        if problems:
            raise PolygonError("; ".join(problems))
        return self


def enumerate_triangulations(k: int) -> Iterator[MarkedTriangulation]:
    """Every triangulation of the ``k``-gon, each once."""
    if k < 3:
        raise ValueError(f"polygon needs k >= 3, got {k}")

    def rec(lo: int, hi: int) -> Iterator[list[tuple[int, int]]]:
        # triangulations of the sub-polygon on corners lo..hi, chord (lo, hi) given
        if hi - lo < 2:
            yield []
            return
        for apex in range(lo + 1, hi):
            for left in rec(lo, apex):
                for right in rec(apex, hi):
                    extra = [(lo, apex)] if apex - lo > 1 else []
                    if hi - apex > 1:
                        extra.append((apex, hi))
                    yield extra + left + right

    for diags in rec(0, k - 1):
        yield MarkedTriangulation(k, frozenset(diags))


def enumerate_noncrossing_pairings(k: int) -> Iterator[SidePairing]:
    """Every pairing of the ``k`` sides whose midpoint chords do not cross."""
    if k < 2 or k % 2:
        raise ValueError(f"pairings need an even k >= 2, got {k}")

    def rec(sides: list[int]) -> Iterator[list[tuple[int, int]]]:
        if not sides:
            yield []
            return
        first = sides[0]
        for j in range(1, len(sides), 2):
            for inner in rec(sides[1:j]):
                for outer in rec(sides[j + 1 :]):
                    yield [(first, sides[j])] + inner + outer

    for pairs in rec(list(range(k))):
        yield SidePairing.from_pairs(k, pairs)


def enumerate_all_pairings(k: int) -> Iterator[SidePairing]:
    """All ``(k-1)!!`` fixed-point-free involutions on the sides."""
    if k < 2 or k % 2:
        raise ValueError(f"pairings need an even k >= 2, got {k}")

    def rec(sides: list[int]) -> Iterator[list[tuple[int, int]]]:
        if not sides:
            yield []
            return
        first, rest = sides[0], sides[1:]
        for j, partner in enumerate(rest):
            for tail in rec(rest[:j] + rest[j + 1 :]):
                yield [(first, partner)] + tail

    for pairs in rec(list(range(k))):
        yield SidePairing.from_pairs(k, pairs)


def pairing_genus(pairing: SidePairing) -> int:
    """Genus of the oriented surface got by gluing paired sides.

    Side ``s`` runs from corner ``s`` to ``s+1``; gluing it to side ``t``
    with reversed orientation identifies corner ``s`` with ``t+1`` and
    ``s+1`` with ``t``.  With one face and ``k/2`` edges the genus follows
    from the number of corner classes.
    """
    k = pairing.k
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, t in pairing.pairs():
        for a, b in ((s, (t + 1) % k), ((s + 1) % k, t)):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    corners = len({find(c) for c in range(k)})
    chi = corners - k // 2 + 1
    return (2 - chi) // 2


def is_noncrossing(pairing: SidePairing) -> bool:
    pairs = pairing.pairs()
    return not any(
        chords_cross(pairs[i], pairs[j])
        for i in range(len(pairs))
        for j in range(i + 1, len(pairs))
    )


# -- text format: "k=<k>" / "i-j ..." / "s:t ..." ------------------------------


def polygon_to_text(tri: MarkedTriangulation, pairing: SidePairing | None = None) -> str:
    lines = [
        f"k={tri.k}",
        " ".join(f"{i}-{j}" for i, j in sorted(tri.diagonals)),
        " ".join(f"{s}:{t}" for s, t in pairing.pairs()) if pairing is not None else "",
    ]
    return "\n".join(lines) + "\n"


def pairing_to_text(pairing: SidePairing) -> str:
    return f"k={pairing.k}\n\n" + " ".join(f"{s}:{t}" for s, t in pairing.pairs()) + "\n"


def polygon_from_text(text: str) -> tuple[MarkedTriangulation, SidePairing]:
    """Parse the three-line polygon format; both parts are validated."""
    lines = text.splitlines() + ["", ""]
    head = lines[0].strip()
    if not head.startswith("k="):
        raise PolygonError(f"first line must be 'k=<k>', got {head!r}")
    try:
        k = int(head[2:])
        diags = [tuple(int(x) for x in tok.split("-")) for tok in lines[1].split()]
        pairs = [tuple(int(x) for x in tok.split(":")) for tok in lines[2].split()]
    except ValueError as exc:
        raise PolygonError(f"malformed polygon text: {exc}") from None
    if any(len(d) != 2 for d in diags) or any(len(p) != 2 for p in pairs):
        raise PolygonError("diagonals need 'i-j' and pairs need 's:t'")
    for s, t in pairs:
        if not (0 <= s < k and 0 <= t < k):
            raise PolygonError(f"pair {s}:{t} outside the polygon")
    tri = MarkedTriangulation(k, frozenset(diags)).validate()
    pairing = SidePairing.from_pairs(k, pairs).validate()
    return tri, pairing

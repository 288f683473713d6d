"""Combinatorial maps on oriented surfaces.

A map on ``D`` darts is a pair of permutations: ``sigma`` turns
counterclockwise around a vertex, ``alpha`` swaps the two darts of an
edge.  Vertices, edges and faces are the cycles of ``sigma``, ``alpha``
and ``sigma o alpha``.  Loops and multiple edges are allowed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, Optional, Sequence

CanonicalCode = tuple


class MapValidationError(ValueError):
    """Raised when a map or tree-rooted map fails validation."""

    def __init__(self, diagnostics: Sequence[str]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


def _cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(cyc)
    return out


def _is_permutation(perm: Sequence[int], size: int) -> bool:
    return len(perm) == size and sorted(perm) == list(range(size))


@dataclass(frozen=True)
class CombinatorialMap:
    sigma: tuple[int, ...]
    alpha: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "alpha", tuple(self.alpha))

    @classmethod
    def from_named(
        cls, rotations: Sequence[Sequence[str]], edges: Iterable[tuple[str, str]]
    ) -> tuple["CombinatorialMap", dict[str, int]]:
        """Build a map from named darts.

        ``rotations`` lists, per vertex, its darts in counterclockwise order;
        ``edges`` pairs dart names.  Returns the map and the name->index table.
        """
        index: dict[str, int] = {}
        for rot in rotations:
            for name in rot:
                if name in index:
                    raise ValueError(f"dart {name!r} listed twice")
                index[name] = len(index)
        sigma = [0] * len(index)
        for rot in rotations:
            for i, name in enumerate(rot):
                sigma[index[name]] = index[rot[(i + 1) % len(rot)]]
        alpha = [-1] * len(index)
        for a, b in edges:
            alpha[index[a]] = index[b]
            alpha[index[b]] = index[a]
        return cls(tuple(sigma), tuple(alpha)), index

    @property
    def n_darts(self) -> int:
        return len(self.sigma)

    def vertices(self) -> list[list[int]]:
        return _cycles(self.sigma)

    def edges(self) -> list[tuple[int, int]]:
        return [(d, self.alpha[d]) for d in range(self.n_darts) if d < self.alpha[d]]

    def face_permutation(self) -> tuple[int, ...]:
        return tuple(self.sigma[self.alpha[d]] for d in range(self.n_darts))

    def faces(self) -> list[list[int]]:
        return _cycles(self.face_permutation())

    def vertex_of(self) -> list[int]:
        """Dart -> vertex index, vertices numbered in order of first dart."""
        owner = [0] * self.n_darts
        for v, cyc in enumerate(self.vertices()):
            for d in cyc:
                owner[d] = v
        return owner

    def euler_characteristic(self) -> int:
        return len(self.vertices()) - self.n_darts // 2 + len(self.faces())

    def is_loop(self, d: int) -> bool:
        owner = self.vertex_of()
        return owner[d] == owner[self.alpha[d]]

    def relabel(self, perm: Sequence[int]) -> "CombinatorialMap":
        """Rename dart ``d`` to ``perm[d]``."""
        D = self.n_darts
        sigma = [0] * D
        alpha = [0] * D
        for d in range(D):
            sigma[perm[d]] = perm[self.sigma[d]]
            alpha[perm[d]] = perm[self.alpha[d]]
        return CombinatorialMap(tuple(sigma), tuple(alpha))

    def mirror(self) -> "CombinatorialMap":
        """Same graph with every rotation reversed."""
        inv = [0] * self.n_darts
        for d, s in enumerate(self.sigma):
            inv[s] = d
        return CombinatorialMap(tuple(inv), self.alpha)


def validate(m: CombinatorialMap) -> list[str]:
    """Return the list of violated map invariants (empty when valid)."""
    D = m.n_darts
    problems = []
    if D == 0:
        return ["map has no darts"]
    if len(m.alpha) != D:
        return [f"sigma has {D} entries but alpha has {len(m.alpha)}"]
    if not _is_permutation(m.sigma, D):
        problems.append("sigma is not a permutation of the darts")
    if not all(0 <= a < D for a in m.alpha):
        problems.append("alpha maps outside the dart set")
        return problems
    fixed = [d for d in range(D) if m.alpha[d] == d]
    if fixed:
        problems.append(f"alpha has fixed points {fixed}")
    bad = [d for d in range(D) if m.alpha[m.alpha[d]] != d]
    if bad:
        problems.append(f"alpha is not an involution at darts {bad}")
    if D % 2:
        problems.append(f"odd number of darts ({D})")
    if problems:
        return problems
    seen = {0}
    stack = [0]
    while stack:
        d = stack.pop()
        for e in (m.sigma[d], m.alpha[d]):
            if e not in seen:
                seen.add(e)
                stack.append(e)
    if len(seen) != D:
        problems.append(f"map is disconnected ({len(seen)} of {D} darts reachable)")
        return problems
    chi = m.euler_characteristic()
    if chi > 2 or chi % 2:
        problems.append(f"Euler characteristic {chi} is not 2 - 2g")
    return problems


def ensure_valid(m: CombinatorialMap) -> CombinatorialMap:
    problems = validate(m)
    if problems:
        raise MapValidationError(problems)
    return m


def genus(m: CombinatorialMap) -> int:
    return (2 - m.euler_characteristic()) // 2


def is_cubic(m: CombinatorialMap) -> bool:
    return all(len(c) == 3 for c in m.vertices())


# -- spanning trees ---------------------------------------------------------


def spanning_trees(m: CombinatorialMap) -> Iterator[frozenset[int]]:
    """Yield every spanning tree as an alpha-closed dart set.

    Loops never appear.  A one-vertex map yields the empty tree once.
    """
    owner = m.vertex_of()
    V = max(owner) + 1
    candidates = [(a, b) for a, b in m.edges() if owner[a] != owner[b]]
    for chosen in combinations(candidates, V - 1):
        parent = list(range(V))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in chosen:
            ra, rb = find(owner[a]), find(owner[b])
            if ra == rb:
                break
            parent[ra] = rb
        else:
            yield frozenset(d for e in chosen for d in e)


def kirchhoff_tree_count(m: CombinatorialMap) -> int:
    """Matrix-tree theorem count of spanning trees of the underlying multigraph."""
    owner = m.vertex_of()
    V = max(owner) + 1
    if V == 1:
        return 1
    lap = [[Fraction(0)] * V for _ in range(V)]
    for a, b in m.edges():
        u, v = owner[a], owner[b]
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    mat = [row[1:] for row in lap[1:]]
    size = V - 1
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        for r in range(col + 1, size):
            factor = mat[r][col] / mat[col][col]
            if factor:
                for c in range(col, size):
                    mat[r][c] -= factor * mat[col][c]
    assert det.denominator == 1
    return int(det)


# -- automorphisms and canonical codes ---------------------------------------


def _extend_isomorphism(
    m: CombinatorialMap, src: int, dst: int, tree: frozenset[int] = frozenset()
) -> Optional[list[int]]:
    """The unique automorphism sending ``src`` to ``dst``, or None."""
    D = m.n_darts
    phi = [-1] * D
    used = [False] * D
    phi[src] = dst
    used[dst] = True
    stack = [src]
    while stack:
        x = stack.pop()
        if (x in tree) != (phi[x] in tree):
            return None
        for perm in (m.sigma, m.alpha):
            y, z = perm[x], perm[phi[x]]
            if phi[y] == -1:
                if used[z]:
                    return None
                phi[y] = z
                used[z] = True
                stack.append(y)
            elif phi[y] != z:
                return None
    return phi


def automorphisms(m: CombinatorialMap, tree: Iterable[int] = ()) -> list[list[int]]:
    """Orientation-preserving automorphisms, optionally preserving ``tree``."""
    tree = frozenset(tree)
    out = []
    for d in range(m.n_darts):
        phi = _extend_isomorphism(m, 0, d, tree)
        if phi is not None:
            out.append(phi)
    return out


def automorphism_count(m: CombinatorialMap) -> int:
    return len(automorphisms(m))


def automorphism_count_tmap(m: CombinatorialMap, tree_darts: Iterable[int]) -> int:
    return len(automorphisms(m, tree_darts))


def canonical_order(m: CombinatorialMap, root: int) -> list[int]:
    """Darts in first-visit order of a breadth-first sigma/alpha traversal."""
    label = [-1] * m.n_darts
    label[root] = 0
    order = [root]
    i = 0
    while i < len(order):
        x = order[i]
        for y in (m.sigma[x], m.alpha[x]):
            if label[y] == -1:
                label[y] = len(order)
                order.append(y)
        i += 1
    return order


def canonical_code_rooted(
    m: CombinatorialMap, tree_darts: Iterable[int], root_dart: int
) -> CanonicalCode:
    """Complete invariant of ``(map, tree, root)`` up to rooted isomorphism.

    Layout: ``(D, sigma-labels..., alpha-labels..., tree bits...)`` in the
    traversal labeling.
    """
    tree = frozenset(tree_darts)
    order = canonical_order(m, root_dart)
    label = [0] * m.n_darts
    for i, d in enumerate(order):
        label[d] = i
    return (
        (m.n_darts,)
        + tuple(label[m.sigma[d]] for d in order)
        + tuple(label[m.alpha[d]] for d in order)
        + tuple(int(d in tree) for d in order)
    )


def unrooted_code(m: CombinatorialMap, tree_darts: Iterable[int] = ()) -> CanonicalCode:
    """Isomorphism-class invariant: least rooted code over all roots."""
    tree = frozenset(tree_darts)
    return min(canonical_code_rooted(m, tree, r) for r in range(m.n_darts))


def code_to_structure(code: CanonicalCode) -> tuple[CombinatorialMap, frozenset[int], int]:
    """Rebuild the relabeled ``(map, tree, root=0)`` a code was taken from."""
    D = code[0]
    sigma = code[1 : 1 + D]
    alpha = code[1 + D : 1 + 2 * D]
    bits = code[1 + 2 * D : 1 + 3 * D]
    return (
        CombinatorialMap(sigma, alpha),
        frozenset(d for d in range(D) if bits[d]),
        0,
    )


# -- tree-rooted cubic maps ---------------------------------------------------


@dataclass(frozen=True)
class TreeRootedCubicMap:
    map: CombinatorialMap
    tree_darts: frozenset[int]
    root_dart: int
    _code: Optional[CanonicalCode] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "tree_darts", frozenset(self.tree_darts))

    @property
    def n(self) -> int:
        """Half the number of vertices."""
        return self.map.n_darts // 6

    def code(self) -> CanonicalCode:
        if self._code is None:
            object.__setattr__(
                self, "_code", canonical_code_rooted(self.map, self.tree_darts, self.root_dart)
            )
        return self._code

    def canonical_form(self) -> "TreeRootedCubicMap":
        """Relabel darts in traversal order so the root becomes dart 0."""
        m, tree, root = code_to_structure(self.code())
        return TreeRootedCubicMap(m, tree, root)


def tree_diagnostics(m: CombinatorialMap, tree_darts: Iterable[int]) -> list[str]:
    tree = frozenset(tree_darts)
    D = m.n_darts
    problems = []
    if any(not 0 <= d < D for d in tree):
        return ["tree darts outside the dart set"]
    if any(m.alpha[d] not in tree for d in tree):
        problems.append("tree darts are not closed under alpha")
        return problems
    owner = m.vertex_of()
    V = max(owner) + 1
    tree_edges = [(a, b) for a, b in m.edges() if a in tree]
    if any(owner[a] == owner[b] for a, b in tree_edges):
        problems.append("tree contains a loop")
    if len(tree_edges) != V - 1:
        problems.append(f"tree has {len(tree_edges)} edges, expected {V - 1}")
    parent = list(range(V))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in tree_edges:
        parent[find(owner[a])] = find(owner[b])
    if len({find(v) for v in range(V)}) != 1:
        problems.append("tree does not span the map")
    return problems


def validate_tree_rooted(t: TreeRootedCubicMap) -> list[str]:
    problems = validate(t.map)
    if problems:
        return problems
    if not is_cubic(t.map):
        problems.append("map is not cubic")
    g = genus(t.map)
    if g:
        problems.append(f"map has genus {g}, expected 0")
    problems.extend(tree_diagnostics(t.map, t.tree_darts))
    if not 0 <= t.root_dart < t.map.n_darts:
        problems.append(f"root dart {t.root_dart} outside the dart set")
    elif t.root_dart in t.tree_darts:
        problems.append("root dart lies on the spanning tree")
    return problems


def ensure_tree_rooted(t: TreeRootedCubicMap) -> TreeRootedCubicMap:
    problems = validate_tree_rooted(t)
    if problems:
        raise MapValidationError(problems)
    return t


# -- exhaustive enumeration ----------------------------------------------------

MAX_ROOTED_CUBIC_N = 3


def rooted_cubic_planar_maps(n: int) -> Iterator[CombinatorialMap]:
    """Every genus-0 cubic map on ``2n`` vertices rooted at dart 0, once each.

    The vertex partition is fixed (vertex ``v`` owns darts ``3v..3v+2`` in
    counterclockwise order) and the edge involution is built in traversal
    order: the smallest unmatched dart is joined either to an unmatched
    dart on an opened vertex or to the entry dart of the next unopened one.
    That makes the labeling a function of the rooted map, so no two
    outputs are rooted-isomorphic.
    """
    V = 2 * n
    D = 3 * V
    sigma = tuple(3 * (d // 3) + (d + 1) % 3 for d in range(D))
    alpha = [-1] * D

    def search(opened: int, start: int) -> Iterator[CombinatorialMap]:
        d = start
        limit = 3 * opened
        while d < limit and alpha[d] != -1:
            d += 1
        if d == limit:
            if opened == V:
                m = CombinatorialMap(sigma, tuple(alpha))
                if m.euler_characteristic() == 2:
                    yield m
            return
        for e in range(d + 1, limit):
            if alpha[e] == -1:
                alpha[d], alpha[e] = e, d
                yield from search(opened, d + 1)
                alpha[d] = alpha[e] = -1
        if opened < V:
            e = limit
            alpha[d], alpha[e] = e, d
            yield from search(opened + 1, d + 1)
            alpha[d] = alpha[e] = -1

    yield from search(1, 0)


def enumerate_rooted_cubic_maps(n: int, bound: int = MAX_ROOTED_CUBIC_N) -> list[CanonicalCode]:
    """Sorted distinct codes of edge-rooted planar cubic maps on ``2n`` vertices."""
    if not 1 <= n <= bound:
        raise ValueError(f"rooted cubic enumeration supports 1 <= n <= {bound}, got {n}")
    return sorted({canonical_code_rooted(m, (), 0) for m in rooted_cubic_planar_maps(n)})


def rooted_planar_maps(e: int) -> list[CombinatorialMap]:
    """Representatives (root = dart 0) of all rooted planar maps with ``e`` edges."""
    D = 2 * e
    alpha = tuple(d ^ 1 for d in range(D))
    seen = {}
    for sigma in permutations(range(D)):
        m = CombinatorialMap(sigma, alpha)
        if validate(m) or genus(m):
            continue
        for root in range(D):
            code = canonical_code_rooted(m, (), root)
            if code not in seen:
                seen[code] = code_to_structure(code)[0]
    return [seen[c] for c in sorted(seen)]


# -- serialization ---------------------------------------------------------------


def to_json(
    m: CombinatorialMap, tree_darts: Iterable[int] = (), root_dart: Optional[int] = None
) -> str:
    record = {
        "n_darts": m.n_darts,
        "sigma_cycles": m.vertices(),
        "alpha_pairs": [list(e) for e in m.edges()],
        "tree_darts": sorted(tree_darts),
        "root_dart": root_dart,
    }
    return json.dumps(record, separators=(", ", ": "))


def tmap_to_json(t: TreeRootedCubicMap) -> str:
    return to_json(t.map, t.tree_darts, t.root_dart)


def from_json(text: str) -> tuple[CombinatorialMap, frozenset[int], Optional[int]]:
    """Parse a map record; raises :class:`MapValidationError` when malformed."""
    try:
        record = json.loads(text) if isinstance(text, str) else text
        D = int(record["n_darts"])
        cycles = record["sigma_cycles"]
        pairs = record["alpha_pairs"]
    except (ValueError, KeyError, TypeError) as exc:
        raise MapValidationError([f"malformed map record: {exc}"]) from None
    problems = []
    sigma = [-1] * D
    for cyc in cycles:
        for i, d in enumerate(cyc):
            if not 0 <= d < D or sigma[d] != -1:
                problems.append(f"sigma cycles list dart {d} twice or out of range")
                continue
            sigma[d] = cyc[(i + 1) % len(cyc)]
    if -1 in sigma:
        problems.append("sigma cycles do not cover every dart")
    alpha = [-1] * D
    for pair in pairs:
        if len(pair) == 1 or (len(pair) == 2 and pair[0] == pair[1]):
            problems.append(f"alpha has fixed points [{pair[0]}]")
            continue
        a, b = pair
        if not (0 <= a < D and 0 <= b < D) or alpha[a] != -1 or alpha[b] != -1:
            problems.append(f"alpha pair {pair} repeats a dart or is out of range")
            continue
        alpha[a], alpha[b] = b, a
    unpaired = [d for d in range(D) if alpha[d] == -1]
    if unpaired and not problems:
        problems.append(f"alpha has fixed points {unpaired}")
    if problems:
        raise MapValidationError(problems)
    m = ensure_valid(CombinatorialMap(tuple(sigma), tuple(alpha)))
    root = record.get("root_dart")
    return m, frozenset(record.get("tree_darts", ())), None if root is None else int(root)


def tmap_from_json(text: str) -> TreeRootedCubicMap:
    m, tree, root = from_json(text)
    if root is None:
        raise MapValidationError(["record has no root dart"])
    return ensure_tree_rooted(TreeRootedCubicMap(m, tree, root))


def to_dot(
    m: CombinatorialMap,
    tree_darts: Iterable[int] = (),
    root_dart: Optional[int] = None,
    name: str = "map",
) -> str:
    """Graphviz text; tree edges bold, root edge a red arrow.  Multigraph-safe."""
    tree = frozenset(tree_darts)
    owner = m.vertex_of()
    lines = [f"graph {name} {{"]
    for v in range(max(owner) + 1):
        lines.append(f"  v{v};")
    for a, b in m.edges():
        attrs = [f'label="{a}/{b}"']
        if a in tree:
            attrs.append("style=bold penwidth=3")
        if root_dart in (a, b):
            tail, head = (a, b) if root_dart == a else (b, a)
            attrs.append("dir=forward color=red")
            lines.append(f"  v{owner[tail]} -- v{owner[head]} [{' '.join(attrs)}];")
        else:
            lines.append(f"  v{owner[a]} -- v{owner[b]} [{' '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def relabel_structure(
    m: CombinatorialMap, tree_darts: Iterable[int], root_dart: int, perm: Sequence[int]
) -> tuple[CombinatorialMap, frozenset[int], int]:
    return m.relabel(perm), frozenset(perm[d] for d in tree_darts), perm[root_dart]


def group_by_unrooted(maps: Iterable[CombinatorialMap]) -> Mapping[CanonicalCode, list]:
    groups: dict[CanonicalCode, list] = {}
    for m in maps:
        groups.setdefault(unrooted_code(m), []).append(m)
    return groups

"""Cross-checks between enumeration routes, formulas, and hand-worked examples.

Every count here is an orbit count over canonical codes; no quantity is
obtained by dividing by an automorphism group order.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import counting, gallery
from .bijection import PolygonDatum, forward, reverse, roundtrip_map, roundtrip_polygon
from .comb_map import (
    CanonicalCode,
    CombinatorialMap,
    MapValidationError,
    TreeRootedCubicMap,
    automorphism_count,
    canonical_code_rooted,
    relabel_structure,
    rooted_cubic_planar_maps,
    rooted_planar_maps,
    spanning_trees,
    unrooted_code,
)
from .polygon import (
    PolygonError,
    SidePairing,
    enumerate_all_pairings,
    enumerate_noncrossing_pairings,
    enumerate_triangulations,
    is_noncrossing,
    pairing_genus,
)

DESK_BOUND = 4
LARGE_BOUND = 5
DIRECT_BOUND = 3
MULLIN_BOUND = 3


class BoundError(ValueError):
    def __init__(self, what: str, value: int, bound: int):
        self.bound = bound
        super().__init__(f"{what} supports n <= {bound}, got {value}")


class InjectivityError(AssertionError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    name: str
    expected: counting.ExactNumber
    observed: Optional[counting.ExactNumber]
    passed: bool
    elapsed: float
    """Seconds."""

    def machine_line(self) -> str:
        observed = "error" if self.observed is None else counting.format_exact(self.observed)
        return (
            f"{self.name},{counting.format_exact(self.expected)},{observed},"
            f"{str(self.passed).lower()},{round(self.elapsed * 1000)}"
        )


def check(name: str, expected, compute: Callable[[], counting.ExactNumber]) -> VerificationReport:
    """Run ``compute`` and compare exactly; exceptions become failed reports."""
    start = time.perf_counter()
    try:
        observed = compute()
    except (AssertionError, ValueError, ArithmeticError):
        observed = None
    elapsed = time.perf_counter() - start
    passed = observed is not None and Fraction(observed) == Fraction(expected)
    return VerificationReport(name, expected, observed, passed, elapsed)


# -- bijection route --------------------------------------------------------------


def polygon_data(n: int) -> Iterator[PolygonDatum]:
    k = 2 * n + 2
    pairings = list(enumerate_noncrossing_pairings(k))
    for tri in enumerate_triangulations(k):
        for p in pairings:
            yield PolygonDatum(tri, p)


def crossing_pairing(k: int) -> SidePairing:
    """Sides 0,2 and 1,3 paired across each other; the rest paired neighbourwise."""
    pairs = [(0, 2), (1, 3)] + [(s, s + 1) for s in range(4, k, 2)]
    return SidePairing.from_pairs(k, pairs)


def _check_bound(what: str, n: int, bound: int):
    if not 1 <= n <= bound:
        raise BoundError(what, n, bound)


def tmaps_via_bijection(
    n: int, allow_large: bool = False, inject_crossing: bool = False
) -> dict[CanonicalCode, TreeRootedCubicMap]:
    """Apply reverse to every polygon datum; codes must come out distinct."""
    _check_bound("bijection enumeration", n, LARGE_BOUND if allow_large else DESK_BOUND)
    data = polygon_data(n)
    if inject_crossing:
        tri = next(enumerate_triangulations(2 * n + 2))
        data = iter([PolygonDatum(tri, crossing_pairing(2 * n + 2)), *data])
    out: dict[CanonicalCode, TreeRootedCubicMap] = {}
    for datum in data:
        t = reverse(datum)
        code = t.code()
        if code in out:
            raise InjectivityError(f"two polygon data give the same map at n={n}")
        out[code] = t
    return out


def count_via_bijection(n: int, allow_large: bool = False, inject_crossing: bool = False) -> int:
    try:
        return len(tmaps_via_bijection(n, allow_large, inject_crossing))
    except (MapValidationError, PolygonError) as exc:
        raise AssertionError(f"reverse rejected a polygon datum: {exc}") from exc


# -- direct route -----------------------------------------------------------------


def tmaps_via_direct(n: int) -> dict[CanonicalCode, TreeRootedCubicMap]:
    """Rooted cubic maps times spanning trees avoiding the root edge."""
    _check_bound("direct enumeration", n, DIRECT_BOUND)
    out = {}
    for m in rooted_cubic_planar_maps(n):
        for tree in spanning_trees(m):
            if 0 not in tree:
                t = TreeRootedCubicMap(m, tree, 0)
                out.setdefault(t.code(), t)
    return out


def count_via_direct(n: int) -> int:
    return len(tmaps_via_direct(n))


def figure_labels() -> dict[CanonicalCode, int]:
    """Unrooted code -> number of the 4-vertex map in the gallery."""
    return {unrooted_code(f()[0]): i for i, f in gallery.FOUR_VERTEX_MAPS.items()}


def direct_breakdown_n2() -> dict[int, int]:
    """Tree-rooted maps per underlying 4-vertex map."""
    labels = figure_labels()
    out = {i: 0 for i in gallery.FOUR_VERTEX_MAPS}
    for t in tmaps_via_direct(2).values():
        out[labels[unrooted_code(t.map)]] += 1
    return out


def tmap_breakdown_n2() -> dict[int, int]:
    """Unrooted (map, tree) classes per underlying 4-vertex map."""
    labels = figure_labels()
    classes: dict[int, set] = {i: set() for i in gallery.FOUR_VERTEX_MAPS}
    for i, f in gallery.FOUR_VERTEX_MAPS.items():
        m = f()[0]
        for tree in spanning_trees(m):
            classes[labels[unrooted_code(m)]].add(unrooted_code(m, tree))
    return {i: len(c) for i, c in classes.items()}


def rooted_cubic_breakdown_n2() -> dict[int, int]:
    labels = figure_labels()
    out = {i: 0 for i in gallery.FOUR_VERTEX_MAPS}
    for m in rooted_cubic_planar_maps(2):
        out[labels[unrooted_code(m)]] += 1
    return out


# -- formula checks -----------------------------------------------------------------


def has_simple_dual(m: CombinatorialMap) -> bool:
    """Dual triangulation has neither loops nor multiple edges."""
    face_of = [0] * m.n_darts
    for f, cyc in enumerate(m.faces()):
        for d in cyc:
            face_of[d] = f
    seen = set()
    for a, b in m.edges():
        pair = frozenset((face_of[a], face_of[b]))
        if len(pair) == 1 or pair in seen:
            return False
        seen.add(pair)
    return True


def verify_F(n: int) -> VerificationReport:
    _check_bound("rooted cubic enumeration", n, DIRECT_BOUND)
    return check(
        f"rooted_cubic_F[{n}]",
        counting.edge_rooted_cubic_F(n),
        lambda: sum(1 for _ in rooted_cubic_planar_maps(n)),
    )


def verify_tutte(n: int) -> VerificationReport:
    """Rooted cubic planar maps with simple dual against T_n."""
    _check_bound("rooted cubic enumeration", n, DIRECT_BOUND)
    return check(
        f"tutte_T[{n}]",
        counting.tutte_T(n),
        lambda: sum(1 for m in rooted_cubic_planar_maps(n) if has_simple_dual(m)),
    )


def mullin_orbits(e: int) -> int:
    """Orbits of (planar map, spanning tree, root dart); the root may be a tree dart."""
    _check_bound("general map enumeration", e, MULLIN_BOUND)
    codes = set()
    for m in rooted_planar_maps(e):
        for tree in spanning_trees(m):
            codes.add(canonical_code_rooted(m, tree, 0))
    return len(codes)


def mullin_breakdown(e: int) -> dict[CanonicalCode, int]:
    """Tree-rooted orbit count per underlying unrooted map."""
    out: dict[CanonicalCode, int] = {}
    for m in rooted_planar_maps(e):
        key = unrooted_code(m)
        out[key] = out.get(key, 0) + sum(1 for _ in spanning_trees(m))
    return out


def verify_mullin(e: int) -> VerificationReport:
    return check(f"mullin[{e}]", counting.mullin_count(e), lambda: mullin_orbits(e))


# -- round trips ----------------------------------------------------------------


def polygon_roundtrip_failures(n: int) -> int:
    return sum(1 for p in polygon_data(n) if not roundtrip_polygon(p))


def map_roundtrip_failures(n: int) -> int:
    return sum(1 for t in tmaps_via_direct(n).values() if not roundtrip_map(t))


def random_roundtrip_failures(n: int, trials: int, seed: int = 0) -> int:
    """Random polygon data, reversed and randomly relabeled, then round-tripped."""
    rng = random.Random(seed)
    k = 2 * n + 2
    tris = list(enumerate_triangulations(k))
    pairings = list(enumerate_noncrossing_pairings(k))
    failures = 0
    for _ in range(trials):
        datum = PolygonDatum(rng.choice(tris), rng.choice(pairings))
        t = reverse(datum)
        perm = list(range(t.map.n_darts))
        rng.shuffle(perm)
        m, tree, root = relabel_structure(t.map, t.tree_darts, t.root_dart, perm)
        shuffled = TreeRootedCubicMap(m, tree, root)
        if not (roundtrip_map(shuffled) and forward(shuffled) == datum):
            failures += 1
    return failures


def genus_noncrossing_mismatches(k: int) -> int:
    return sum(1 for p in enumerate_all_pairings(k) if (pairing_genus(p) == 0) != is_noncrossing(p))


def genus_zero_count(k: int) -> int:
    return sum(1 for p in enumerate_all_pairings(k) if pairing_genus(p) == 0)


# -- aggregate ----------------------------------------------------------------------


def run_all(
    max_n: int,
    allow_large: bool = False,
    inject_crossing: bool = False,
    random_trials: int = 10_000,
) -> list[VerificationReport]:
    """Every check up to its own bound, never past ``max_n``; failures are collected."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    reports = [
        check("catalan_segre[20]", 1, lambda: int(counting.catalan_segre_holds(20))),
        check(
            "gj_integral[12]",
            1,
            lambda: int(all(counting.gj_f(n).denominator == 1 for n in range(13))
                        and all(counting.gj_f(n) % (3 * n + 2) == 0 for n in range(1, 13))),
        ),
    ]
    reports += [
        check(f"tutte_formula[{n}]", _tutte_factorial(n), lambda n=n: counting.tutte_T(n))
        for n in range(1, 11)
    ]
    k_max = min(12, 2 * max_n + 2)
    for k in range(3, k_max + 1):
        reports.append(
            check(f"triangulations[{k}]", counting.catalan(k - 2),
                  lambda k=k: sum(1 for _ in enumerate_triangulations(k)))
        )
    for k in range(2, k_max + 1, 2):
        reports.append(
            check(f"genus_vs_noncrossing[{k}]", 0, lambda k=k: genus_noncrossing_mismatches(k))
        )
        reports.append(check(f"genus0_pairings[{k}]", counting.catalan(k // 2),
                             lambda k=k: genus_zero_count(k)))

    small = min(max_n, DIRECT_BOUND)
    reports += [verify_F(n) for n in range(1, small + 1)]
    reports += [verify_tutte(n) for n in range(1, small + 1)]
    reports += [verify_mullin(e) for e in range(1, min(max_n, MULLIN_BOUND) + 1)]

    if max_n >= 2:
        labels = figure_labels()
        reports.append(check("four_vertex_classes", 6, lambda: len(
            {unrooted_code(m) for m in rooted_cubic_planar_maps(2)} | set(labels))))
        for i, f in gallery.FOUR_VERTEX_MAPS.items():
            reports.append(check(f"aut_order[map{i}]", gallery.AUTOMORPHISM_ORDERS[i],
                                 lambda f=f: automorphism_count(f()[0])))
        reports.append(check("rootings_sum[n=2]", 32, lambda: sum(
            Fraction(12, automorphism_count(f()[0])) for f in gallery.FOUR_VERTEX_MAPS.values())))
        breakdown = direct_breakdown_n2()
        for i, value in gallery.TREE_ROOTED_CONTRIBUTIONS.items():
            reports.append(check(f"tree_rooted[map{i}]", value, lambda i=i: breakdown[i]))
        tmaps = tmap_breakdown_n2()
        for i, value in gallery.TMAP_COUNTS.items():
            reports.append(check(f"tmaps[map{i}]", value, lambda i=i: tmaps[i]))

    bij_bound = min(max_n, LARGE_BOUND if allow_large else DESK_BOUND)
    for n in range(1, bij_bound + 1):
        reports.append(check(
            f"theorem_bijection[{n}]", counting.tree_rooted_cubic_count(n),
            lambda n=n: count_via_bijection(n, allow_large, inject_crossing and n == min(2, max_n)),
        ))
    for n in range(1, small + 1):
        reports.append(check(f"theorem_direct[{n}]", counting.tree_rooted_cubic_count(n),
                             lambda n=n: count_via_direct(n)))
        reports.append(check(f"roundtrip_polygon[{n}]", 0, lambda n=n: polygon_roundtrip_failures(n)))
        reports.append(check(f"roundtrip_map[{n}]", 0, lambda n=n: map_roundtrip_failures(n)))
    if max_n >= 4 and random_trials:
        reports.append(check(f"roundtrip_random[4x{random_trials}]", 0,
                             lambda: random_roundtrip_failures(4, random_trials)))
    return reports


def _tutte_factorial(n: int) -> int:
    from math import factorial

    value = Fraction(2 * factorial(4 * n - 3), factorial(n) * factorial(3 * n - 1))
    assert value.denominator == 1
    return value.numerator


def format_table(reports: list[VerificationReport]) -> str:
    width = max(len(r.name) for r in reports)
    lines = [f"{'check':<{width}}  {'expected':>10}  {'observed':>10}  result  ms"]
    for r in reports:
        observed = "error" if r.observed is None else counting.format_exact(r.observed)
        lines.append(
            f"{r.name:<{width}}  {counting.format_exact(r.expected):>10}  {observed:>10}  "
            f"{'PASS' if r.passed else 'FAIL':<6}  {round(r.elapsed * 1000)}"
        )
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines)

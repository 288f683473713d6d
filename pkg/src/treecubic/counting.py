"""Exact closed formulas and recurrences for rooted cubic and tree-rooted maps.

Integer counts are returned as ``int``; the Goulden-Jackson numbers ``f_n``
are returned as :class:`fractions.Fraction` because ``f_{-1} = 1/2``.
No floating point is used anywhere in this module.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Union

ExactNumber = Union[int, Fraction]


class ConsistencyError(ArithmeticError):
    """An exact quantity documented as an integer came out fractional."""


def _as_int(value: ExactNumber, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise ConsistencyError(f"{what} = {value} is not an integer")
    return value.numerator


def catalan(k: int) -> int:
    """Catalan number ``C_k = (2k)! / (k! (k+1)!)``."""
    if k < 0:
        raise ValueError(f"catalan index must be >= 0, got {k}")
    return comb(2 * k, k) // (k + 1)


def tutte_T(n: int) -> int:
    """Rooted simple planar triangulations with ``2n`` faces.

    Evaluates ``2 (4n-3)! / (n! (3n-1)!)`` through the equivalent binomial
    form ``2 * C(4n-3, n-1) / (n (3n-1))``.
    """
    if n < 1:
        raise ValueError(f"tutte_T needs n >= 1, got {n}")
    return _as_int(Fraction(2 * comb(4 * n - 3, n - 1), n * (3 * n - 1)), f"T_{n}")


class _GJTable:
    """Growable memo table for ``f_n``; safe for concurrent readers."""

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1, 2), Fraction(2)]  # f_{-1}, f_0
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        if n < -1:
            raise ValueError(f"gj_f needs n >= -1, got {n}")
        with self._lock:
            values = self._values
            while len(values) <= n + 1:
                m = len(values) - 1
                # ordered sum over i, j >= -1 with i + j = m - 2
                total = sum(
                    (values[i + 1] * values[m - 2 - i + 1] for i in range(-1, m)),
                    Fraction(0),
                )
                values.append(Fraction(4 * (3 * m + 2), m + 1) * total)
            return values[n + 1]


_GJ = _GJTable()


def gj_f(n: int) -> Fraction:
    """Goulden-Jackson recurrence value ``f_n`` for ``n >= -1``."""
    return _GJ.get(n)


def edge_rooted_cubic_F(n: int) -> int:
    """Edge-rooted planar cubic maps with ``2n`` vertices, ``f_n / (3n+2)``."""
    if n < 1:
        raise ValueError(f"edge_rooted_cubic_F needs n >= 1, got {n}")
    return _as_int(gj_f(n) / (3 * n + 2), f"F_{n}")


def tree_rooted_cubic_count(n: int) -> int:
    """Tree-rooted cubic maps with ``2n`` vertices and root off the tree."""
    if n < 1:
        raise ValueError(f"tree_rooted_cubic_count needs n >= 1, got {n}")
    return catalan(2 * n) * catalan(n + 1)


def mullin_count(e: int) -> int:
    """Tree-rooted planar maps with ``e`` edges, ``C_e * C_{e+1}``."""
    if e < 1:
        raise ValueError(f"mullin_count needs e >= 1, got {e}")
    return catalan(e) * catalan(e + 1)


def catalan_segre_holds(up_to: int) -> bool:
    """Check ``C_{k+1} = sum_i C_i C_{k-i}`` against the closed form."""
    return all(
        catalan(k + 1) == sum(catalan(i) * catalan(k - i) for i in range(k + 1))
        for k in range(up_to + 1)
    )


FORMULAS = {
    "theorem": (tree_rooted_cubic_count, 1),
    "tutte": (tutte_T, 1),
    "gj": (gj_f, -1),
    "mullin": (mullin_count, 1),
    "catalan": (catalan, 0),
}
"""Formula name -> (function, minimum admissible argument)."""


def format_exact(value: ExactNumber) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

"""The flickering triangle T(n, k) (OEIS A395021), by two independent routes.

Route one reads the triangle straight out of a finite difference table: take
f(j) = j^n on a symmetric window, difference it k times, pick the central slot
(which flickers between a half-integer and an integer offset with the parity
of k) and normalize by k!.

Route two never touches a difference table.  It is an autonomous recurrence
driven by the parities of n and k:

    even k, odd n:   T(n, k) = 0
    even k, even n:  T(n, k) = (2 / k) * T(n, k - 1)
    odd k,  even n:  T(n, k) = ((k + 1) / 2) * T(n - 1, k)
    odd k,  odd n:   T(n, k) = ((k + 1) / 2) * T(n - 1, k)
                                + (2 / (k - 1)) * T(n - 1, k - 2)

with boundaries T(n, 1) = T(n, n) = 1.  Every division above is exact in
integers; the code asserts that rather than assuming it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exact import exact_div

__all__ = [
    "DiffTable",
    "FlickerTriangle",
    "build_diff_table",
    "triangle_row_extraction",
    "triangle_entry_recurrence",
    "triangle_rows",
]


@dataclass(frozen=True)
class DiffTable:
    """Forward-difference pyramid of f(j) = j^power on j = -(power+2) .. power+2.

    levels[0] is the raw window; levels[k][i] = levels[k-1][i+1] - levels[k-1][i].
    """

    power: int
    values: list[int]
    levels: list[list[int]]

    def central_slot(self, k: int) -> int:
        """Signed central difference of order k (len // 2 slot of level k)."""
        level = self.levels[k]
        return level[len(level) // 2]


@dataclass(frozen=True)
class FlickerTriangle:
    """Rows 1..count of the triangle; rows[n-1][k-1] is T(n, k)."""

    rows: list[list[int]]

    def entry(self, n: int, k: int) -> int:
        return self.rows[n - 1][k - 1]

    def row(self, n: int) -> list[int]:
        return list(self.rows[n - 1])

    def __len__(self) -> int:
        return len(self.rows)


def build_diff_table(power: int) -> DiffTable:
    """Difference pyramid of j^power, levels 0..power.

    The window j = -(power+2) .. power+2 is the smallest symmetric one for
    which every central slot up to order `power` exists.
    """
    if power < 1:
        raise ValueError(f"power must be >= 1, got {power}")
    values = [j**power for j in range(-(power + 2), power + 3)]
    levels = [values]
    for _ in range(power):
        prev = levels[-1]
        levels.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    return DiffTable(power=power, values=values, levels=levels)


def triangle_row_extraction(n: int) -> list[int]:
    """Row n of the triangle by central extraction: |central diff| / k!.

    For odd k the central slot sits at the half-integer offset of the
    (even-length) difference row, for even k at the integer offset of the
    (odd-length) row; both are the floor-midpoint of the level.
    """
    table = build_diff_table(n)
    row = []
    for k in range(1, n + 1):
        row.append(exact_div(abs(table.central_slot(k)), math.factorial(k)))
    return row


@lru_cache(maxsize=None)
def triangle_entry_recurrence(n: int, k: int) -> int:
    """T(n, k) via the parity-split recurrence; 0 outside 1 <= k <= n."""
    if k == 1 or k == n:
        return 1
    if k < 1 or k > n:
        return 0
    if k % 2 == 0:
        if n % 2 == 1:
            return 0
        return exact_div(2 * triangle_entry_recurrence(n, k - 1), k)
    value = exact_div((k + 1) * triangle_entry_recurrence(n - 1, k), 2)
    if n % 2 == 1:
        value += exact_div(2 * triangle_entry_recurrence(n - 1, k - 2), k - 1)
    return value


def _rows_by_recurrence(count: int) -> list[list[int]]:
    # Iterative row-by-row fill: same case split as the memoized recurrence,
    # but depth-independent, so row counts in the hundreds stay cheap.
    rows: list[list[int]] = []
    for n in range(1, count + 1):
        prev = rows[-1] if rows else []
        row = []
        for k in range(1, n + 1):
            if k == 1 or k == n:
                row.append(1)
            elif k % 2 == 0:
                row.append(0 if n % 2 == 1 else exact_div(2 * row[k - 2], k))
            else:
                value = exact_div((k + 1) * prev[k - 1], 2)
                if n % 2 == 1:
                    value += exact_div(2 * prev[k - 3], k - 1)
                row.append(value)
        rows.append(row)
    return rows


def triangle_rows(count: int, method: str = "recurrence") -> FlickerTriangle:
    """Rows 1..count, method "extraction" or "recurrence"."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if method == "extraction":
        rows = [triangle_row_extraction(n) for n in range(1, count + 1)]
    elif method == "recurrence":
        rows = _rows_by_recurrence(count)
    else:
        raise ValueError(f"unknown method {method!r}")
    return FlickerTriangle(rows=rows)

"""Stirling numbers of the second kind and two closed forms for A008957.

A008957(n, k) -- the central factorial numbers of the second kind laid out as
a triangle -- coincides with the flickering triangle along odd rows and
columns: A008957(n, k) = T(2n-1, 2n-2k+1).  The two closed forms below reach
the same numbers without any triangle recurrence, once as a plain finite
difference of an odd power and once as a binomial/Stirling sum.
"""

from __future__ import annotations

import math
import threading

from .exact import exact_div

__all__ = ["stirling2", "a008957_fd", "a008957_stirling"]


class _Stirling2Table:
    """Grow-on-demand table of S2(n, k), filled bottom-up row by row."""

    def __init__(self) -> None:
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def value(self, n: int, k: int) -> int:
        if k > n:
            return 0
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    prev = self._rows[-1]
                    m = len(self._rows)
                    row = [0] * (m + 1)
                    row[m] = 1
                    for j in range(1, m):
                        row[j] = j * prev[j] + prev[j - 1]
                    self._rows.append(row)
        return self._rows[n][k]


_TABLE = _Stirling2Table()


def stirling2(n: int, k: int) -> int:
    """S2(n, k): partitions of an n-set into k nonempty blocks; 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs n, k >= 0")
    return _TABLE.value(n, k)


def a008957_fd(n: int, k: int) -> int:
    """A008957(n, k) as a normalized finite difference of j^(2n-1).

    Computes the (2n-2k+1)-th forward difference of the (2n-1)-th power at
    the offset that centers the window, divided exactly by (2n-2k+1)!.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    order = 2 * n - 2 * k + 1
    total = 0
    for i in range(order + 1):
        term = math.comb(order, i) * (i - n + k) ** (2 * n - 1)
        total += term if (order - i) % 2 == 0 else -term
    return exact_div(total, math.factorial(order))


def a008957_stirling(n: int, k: int) -> int:
    """A008957(n, k) as a binomial sum against Stirling numbers.

    sum_{j=0}^{2n-1} C(2n-1, j) * (k-n)^(2n-1-j) * S2(j, 2n-2k+1),
    with the 0^0 = 1 convention covering the k = n boundary.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    upper = 2 * n - 1
    target = 2 * n - 2 * k + 1
    base = k - n
    return sum(
        math.comb(upper, j) * base ** (upper - j) * stirling2(j, target)
        for j in range(upper + 1)
    )

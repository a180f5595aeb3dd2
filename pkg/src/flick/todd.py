"""The companion array Todd(n, k) (OEIS A394582) and its column polynomials.

Three independent ways to the same numbers:

  * a two-term recurrence whose step rule flickers with the parity of k,
  * a normalized central finite difference of the power j^(2n+k-2),
  * a binomial sum against Stirling numbers of the second kind.

The array is the odd-column sub-grid of the flickering triangle,
Todd(m, k) = T(2m + k - 2, 2m - 1), and its odd columns factor as
Todd(n, 2m+1) = T_m(n) * P_m(n) / D_m with an explicit base polynomial T_m
and a fitted integer polynomial P_m over a constant denominator D_m.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .exact import CheckResult, exact_div
from .series import PolyZ
from .stirling import stirling2
from .triangle import triangle_entry_recurrence

__all__ = [
    "ToddGrid",
    "ColumnFactorization",
    "todd_recurrence",
    "todd_finite_difference",
    "todd_stirling",
    "todd_row",
    "todd_column",
    "subgrid_check",
    "column_transition_check",
    "base_poly",
    "fit_column_polynomial",
]


class ToddGrid:
    """Lazily extended row-major grid of Todd(n, k), n, k >= 1.

    Row fill is left-to-right, top-to-bottom: each entry needs only its left
    neighbour and the one above, so extension is O(rows * cols) with no
    recursion.  Extension is serialized by a lock; reads of already-filled
    entries are safe to run concurrently.
    """

    def __init__(self) -> None:
        self._rows: list[list[int]] = []
        self._cols = 0
        self._lock = threading.Lock()

    def ensure(self, rows: int, cols: int) -> None:
        if rows <= len(self._rows) and cols <= self._cols:
            return
        with self._lock:
            cols = max(cols, self._cols)
            for n, row in enumerate(self._rows, start=1):
                self._extend_row(n, row, cols)
            while len(self._rows) < rows:
                n = len(self._rows) + 1
                row = [1]
                self._extend_row(n, row, cols)
                self._rows.append(row)
            self._cols = cols

    def _extend_row(self, n: int, row: list[int], cols: int) -> None:
        prev = self._rows[n - 2] if n >= 2 else None
        for k in range(len(row) + 1, cols + 1):
            if n == 1:
                row.append(1)
            elif k % 2 == 1:
                row.append(n * row[-1] + prev[k - 1])
            else:
                row.append(n * row[-1])

    def entry(self, n: int, k: int) -> int:
        if n < 1 or k < 1:
            raise ValueError(f"need n, k >= 1, got n={n}, k={k}")
        self.ensure(n, k)
        return self._rows[n - 1][k - 1]

    def row(self, n: int, count: int) -> list[int]:
        self.ensure(n, count)
        return self._rows[n - 1][:count]

    def column(self, k: int, count: int) -> list[int]:
        self.ensure(count, k)
        return [self._rows[n][k - 1] for n in range(count)]


_GRID = ToddGrid()


def todd_recurrence(n: int, k: int) -> int:
    """Todd(n, k) by the flickering recurrence (shared lazily-grown grid)."""
    return _GRID.entry(n, k)


def todd_finite_difference(n: int, k: int) -> int:
    """Todd(n, k) as the (2n-1)-th difference of j^(2n+k-2), centered, over (2n-1)!."""
    if n < 1 or k < 1:
        raise ValueError(f"need n, k >= 1, got n={n}, k={k}")
    order = 2 * n - 1
    exponent = 2 * n + k - 2
    total = 0
    for i in range(order + 1):
        term = math.comb(order, i) * (i - n + 1) ** exponent
        total += term if (order - i) % 2 == 0 else -term
    return exact_div(total, math.factorial(order))


def todd_stirling(n: int, k: int) -> int:
    """Todd(n, k) as sum_j C(2n+k-2, j) (1-n)^(2n+k-2-j) S2(j, 2n-1).

    0^0 = 1 so row n = 1 collapses to the single j = 2n+k-2 term.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n, k >= 1, got n={n}, k={k}")
    exponent = 2 * n + k - 2
    base = 1 - n
    return sum(
        math.comb(exponent, j) * base ** (exponent - j) * stirling2(j, 2 * n - 1)
        for j in range(exponent + 1)
    )


def todd_row(n: int, count: int) -> list[int]:
    """First `count` entries of row n."""
    if n < 1 or count < 1:
        raise ValueError("need n >= 1 and count >= 1")
    return _GRID.row(n, count)


def todd_column(k: int, count: int) -> list[int]:
    """First `count` entries of column k."""
    if k < 1 or count < 1:
        raise ValueError("need k >= 1 and count >= 1")
    return _GRID.column(k, count)


def subgrid_check(max_m: int, max_k: int) -> CheckResult:
    """Verify Todd(m, k) = T(2m+k-2, 2m-1) on the given rectangle."""
    for m in range(1, max_m + 1):
        for k in range(1, max_k + 1):
            todd = todd_recurrence(m, k)
            tri = triangle_entry_recurrence(2 * m + k - 2, 2 * m - 1)
            if todd != tri:
                return CheckResult(False, (m, k, todd, tri))
    return CheckResult(True)


def column_transition_check(max_n: int, max_m: int) -> CheckResult:
    """Verify Todd(n, 2m+1) - Todd(n-1, 2m+1) = n^2 * Todd(n, 2m-1)."""
    for m in range(1, max_m + 1):
        for n in range(2, max_n + 1):
            lhs = todd_recurrence(n, 2 * m + 1) - todd_recurrence(n - 1, 2 * m + 1)
            rhs = n * n * todd_recurrence(n, 2 * m - 1)
            if lhs != rhs:
                return CheckResult(False, (n, m, lhs, rhs))
    return CheckResult(True)


def base_poly(m: int) -> PolyZ:
    """Base polynomial T_m(n) = prod_{i=0..m} (n+i) * prod_{j=1..m} (2n+2j-1)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    poly = PolyZ([1])
    for i in range(m + 1):
        poly = poly * PolyZ([i, 1])
    for j in range(1, m + 1):
        poly = poly * PolyZ([2 * j - 1, 2])
    return poly


@dataclass(frozen=True)
class ColumnFactorization:
    """Todd(n, 2m+1) = base(n) * numerator(n) / denominator, exactly.

    denominator > 0 and gcd(content(numerator), denominator) = 1.
    """

    m: int
    base: PolyZ
    u_numerator: PolyZ
    denominator: int

    @property
    def column(self) -> int:
        return 2 * self.m + 1

    def todd_value(self, n: int) -> int:
        return exact_div(self.base(n) * self.u_numerator(n), self.denominator)


def _newton_interpolate(start: int, values: list[Fraction]) -> list[Fraction]:
    # Exact monomial coefficients of the unique polynomial through
    # (start + i, values[i]); Newton forward differences on unit-spaced nodes.
    diffs = list(values)
    coeffs = [Fraction(0)] * len(values)
    basis = [Fraction(1)]  # running product (x - start)(x - start - 1).../j!
    for j in range(len(values)):
        lead = diffs[0]
        for i, b in enumerate(basis):
            coeffs[i] += lead * b
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
        root = start + j
        shifted = [Fraction(0)] + basis
        for i, b in enumerate(basis):
            shifted[i] -= root * b
        basis = [b / (j + 1) for b in shifted]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def fit_column_polynomial(m: int, degree_cap: int | None = None) -> ColumnFactorization:
    """Recover (P_m, D_m) with Todd(n, 2m+1) = T_m(n) * P_m(n) / D_m.

    Samples U(n) = Todd(n, 2m+1) / T_m(n) at n = 1, 2, ..., detects the
    polynomial degree by exact finite differences (three vanishing entries in
    a row), interpolates over the rationals and clears denominators.  Raises
    if the differences refuse to vanish below the degree cap, which would
    mean U is not a polynomial at all.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if degree_cap is None:
        degree_cap = 4 * m
    base = base_poly(m)
    column = 2 * m + 1

    samples: list[tuple[int, Fraction]] = []
    n = 1
    while len(samples) < degree_cap + 5:
        denom = base(n)
        if denom != 0:
            samples.append((n, Fraction(todd_recurrence(n, column), denom)))
        n += 1

    level = [v for _, v in samples]
    degree = None
    for d in range(degree_cap + 2):
        if all(v == 0 for v in level) and len(level) >= 3:
            degree = d - 1
            break
        level = [level[i + 1] - level[i] for i in range(len(level) - 1)]
    if degree is None or degree > degree_cap:
        raise ArithmeticError(
            f"column {column} ratio is not polynomial of degree <= {degree_cap}"
        )

    start = samples[0][0]
    u_coeffs = _newton_interpolate(start, [v for _, v in samples[: degree + 1]])
    for point, expected in samples:
        got = sum(c * point**i for i, c in enumerate(u_coeffs))
        if got != expected:
            raise ArithmeticError(f"interpolant misses sample at n={point}")

    denominator = math.lcm(*(c.denominator for c in u_coeffs)) if u_coeffs else 1
    numerator = [int(c * denominator) for c in u_coeffs]
    content = math.gcd(*(abs(c) for c in numerator)) if numerator else 0
    shared = math.gcd(content, denominator)
    if shared > 1:
        numerator = [c // shared for c in numerator]
        denominator //= shared
    return ColumnFactorization(
        m=m, base=base, u_numerator=PolyZ(numerator), denominator=denominator
    )

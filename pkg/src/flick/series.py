"""Integer polynomials, rational generating functions, exact formal series.

Everything here is exact: polynomial coefficients are Python ints, series
coefficients are Fractions, and a truncation order is carried explicitly so
no operation can silently read terms it never computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import InexactDivisionError

__all__ = [
    "PolyZ",
    "RationalFunctionZ",
    "SeriesQ",
    "expand_rational",
    "row_gf_odd",
    "row_gf_full",
    "bell_ogf_coefficients",
    "bell_closed_form",
]


class PolyZ:
    """Integer polynomial, coefficients ascending by degree.

    Immutable; trailing zeros are trimmed so the zero polynomial is ().
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[int] | tuple[int, ...]) -> None:
        trimmed = list(coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("PolyZ is immutable")

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyZ) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: PolyZ) -> PolyZ:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyZ(out)

    def __mul__(self, other: PolyZ) -> PolyZ:
        if not self or not other:
            return PolyZ([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyZ(out)

    def scale(self, factor: int) -> PolyZ:
        return PolyZ([factor * c for c in self.coeffs])

    def __call__(self, x: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def to_str(self, var: str = "x") -> str:
        """Human form, ascending like the coefficient list: "1 - 5*x + 4*x^2"."""
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree + 1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{var}" if power == 1 else f"{head}{var}^{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"PolyZ({list(self.coeffs)!r})"


@dataclass(frozen=True)
class RationalFunctionZ:
    """Ratio of integer polynomials whose series expansion stays integral."""

    num: PolyZ
    den: PolyZ

    def __post_init__(self) -> None:
        den0 = self.den.coeffs[0] if self.den else 0
        if den0 == 0:
            raise ValueError("denominator has a zero at the origin")
        if den0 not in (1, -1):
            raise ValueError(f"denominator constant term must be +-1, got {den0}")


def expand_rational(f: RationalFunctionZ, order: int) -> list[int]:
    """Maclaurin coefficients c_0 .. c_{order-1} of num/den by long division.

    den(0) = +-1 makes every coefficient an integer: c_j solves the linear
    recurrence den_0 * c_j = num_j - sum_{i>=1} den_i * c_{j-i}.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    num, den = f.num.coeffs, f.den.coeffs
    den0 = den[0]
    coeffs: list[int] = []
    for j in range(order):
        acc = num[j] if j < len(num) else 0
        for i in range(1, min(j, len(den) - 1) + 1):
            acc -= den[i] * coeffs[j - i]
        coeffs.append(acc * den0)  # den0 in {1, -1}, so this is exact division
    return coeffs


def _squared_factor_product(n: int, step: int) -> PolyZ:
    """Product of (1 - j^2 * x^step) for j = 1..n, expanded."""
    poly = PolyZ([1])
    for j in range(1, n + 1):
        factor = [1] + [0] * (step - 1) + [-(j * j)]
        poly = poly * PolyZ(factor)
    return poly


def row_gf_odd(n: int) -> RationalFunctionZ:
    """Generating function x / prod_{j=1..n} (1 - j^2 x) for a row's odd slots."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return RationalFunctionZ(num=PolyZ([0, 1]), den=_squared_factor_product(n, 1))


def row_gf_full(n: int) -> RationalFunctionZ:
    """Generating function x(1 + nx) / prod_{j=1..n} (1 - j^2 x^2) for a full row."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return RationalFunctionZ(num=PolyZ([0, 1, n]), den=_squared_factor_product(n, 2))


def bell_ogf_coefficients(order: int) -> list[int]:
    """Coefficients of x^1 .. x^(order-1) of the flickering Bell sequence OGF.

    The OGF is a sum over k >= 1 of (x^(2k-1) + (k+1) x^(2k)) over the product
    of (1 - j^2 x^2), j = 1..k.  Each summand's lowest term is x^(2k-1), so
    only k with 2k - 1 < order contribute below the truncation order and the
    infinite sum collapses to a finite exact one.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    total = [0] * order
    k = 1
    while 2 * k - 1 < order:
        num = PolyZ([0] * (2 * k - 1) + [1, k + 1])
        term = expand_rational(
            RationalFunctionZ(num=num, den=_squared_factor_product(k, 2)), order
        )
        for i, c in enumerate(term):
            total[i] += c
        k += 1
    return total[1:]


class SeriesQ:
    """Truncated formal power series with exact rational coefficients.

    `order` is the truncation: terms of degree >= order are unspecified, and
    binary operations truncate to the smaller order of their operands.
    len(coeffs) == order always holds.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: list[Fraction], order: int) -> None:
        if len(coeffs) != order:
            raise ValueError("need exactly `order` coefficients")
        self.coeffs = [Fraction(c) for c in coeffs]
        self.order = order

    @classmethod
    def zero(cls, order: int) -> SeriesQ:
        return cls([Fraction(0)] * order, order)

    @classmethod
    def one(cls, order: int) -> SeriesQ:
        coeffs = [Fraction(0)] * order
        if order > 0:
            coeffs[0] = Fraction(1)
        return cls(coeffs, order)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SeriesQ)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: SeriesQ) -> SeriesQ:
        order = min(self.order, other.order)
        return SeriesQ(
            [self.coeffs[i] + other.coeffs[i] for i in range(order)], order
        )

    def __mul__(self, other: SeriesQ) -> SeriesQ:
        order = min(self.order, other.order)
        out = [Fraction(0)] * order
        for i, a in enumerate(self.coeffs[:order]):
            if a == 0:
                continue
            for j in range(order - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return SeriesQ(out, order)

    def scale(self, factor: Fraction | int) -> SeriesQ:
        f = Fraction(factor)
        return SeriesQ([f * c for c in self.coeffs], self.order)

    def coefficient(self, degree: int) -> Fraction:
        if degree >= self.order:
            raise IndexError(f"degree {degree} is beyond truncation {self.order}")
        return self.coeffs[degree]

    def __repr__(self) -> str:
        return f"SeriesQ({self.coeffs!r}, order={self.order})"


def _cosh_and_x_sinh(arg: SeriesQ, x: SeriesQ) -> tuple[SeriesQ, SeriesQ]:
    # cosh(arg) and x*sinh(arg) by direct power summation; arg has no constant
    # term, so arg^j dies off within the truncation order and the sums are
    # finite and exact.
    order = arg.order
    cosh = SeriesQ.one(order)
    sinh = SeriesQ.zero(order)
    power = SeriesQ.one(order)
    for j in range(1, order):
        power = power * arg
        term = power.scale(Fraction(1, math.factorial(j)))
        if j % 2 == 0:
            cosh = cosh + term
        else:
            sinh = sinh + term
    return cosh, x * sinh


def bell_closed_form(n: int) -> int:
    """Term n of the flickering Bell sequence from its hyperbolic closed form.

    With k = floor((n+1)/2) and s = sinh(sqrt(x)/2), the value is
    (2k)! [x^k] (cosh(2s) + [n even] * s*sinh(2s)).  Substituting t = sqrt(x)
    makes s an odd series in t, so both candidate series are even in t and
    the x^k coefficient is the t^(2k) one.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    k = (n + 1) // 2
    order = 2 * k + 1
    # s(t) = sum t^(2i+1) / (2^(2i+1) (2i+1)!)
    s_coeffs = [Fraction(0)] * order
    for i in range(0, (order - 1) // 2 + 1):
        deg = 2 * i + 1
        if deg < order:
            s_coeffs[deg] = Fraction(1, 2**deg * math.factorial(deg))
    s = SeriesQ(s_coeffs, order)
    cosh2s, s_sinh2s = _cosh_and_x_sinh(s.scale(2), s)
    value = cosh2s.coefficient(2 * k)
    if n % 2 == 0:
        value += s_sinh2s.coefficient(2 * k)
    result = value * math.factorial(2 * k)
    if result.denominator != 1:
        raise InexactDivisionError(
            f"closed form gave non-integer {result} at n={n}"
        )
    return int(result)

"""Truncated power series in the variable q over exact rationals.

Every series carries its own truncation order M and is known modulo q^(M+1).
Combining series of different orders truncates to the smaller order, which is
recorded in the result. Coefficients are fractions.Fraction throughout; floats
are rejected.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import DomainError, NonInvertibleError

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


def format_rational(c: Fraction) -> str:
    """Render a rational as "p/q", or just "p" when the denominator is 1."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def _as_fraction(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("floating point is not allowed in exact series")
    return Fraction(c)


class QTruncSeries:
    """c_0 + c_1 q + ... + c_M q^M, known modulo q^(M+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        order = int(order)
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError(f"got {len(cs)} coefficients for order {order}")
        cs.extend(_ZERO for _ in range(order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QTruncSeries is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "QTruncSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "QTruncSeries":
        return cls(order, (1,))

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "QTruncSeries":
        return cls(order, (c,))

    @classmethod
    def q_power(cls, k: int, order: int) -> "QTruncSeries":
        """The monomial q^k, or 0 if k exceeds the order."""
        if k < 0:
            raise ValueError("negative powers are not supported")
        if k > order:
            return cls(order)
        return cls(order, (0,) * k + (1,))

    # -- basic access -------------------------------------------------

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def truncate(self, order: int) -> "QTruncSeries":
        """Forget coefficients beyond the given (smaller or equal) order."""
        if order > self.order:
            raise ValueError(f"cannot extend knowledge from order {self.order} to {order}")
        if order == self.order:
            return self
        return QTruncSeries(order, self.coeffs[: order + 1])

    def matches(self, other: "QTruncSeries") -> bool:
        """Agreement through the shared part, min(orders)."""
        m = min(self.order, other.order)
        return self.coeffs[: m + 1] == other.coeffs[: m + 1]

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "QTruncSeries":
        if isinstance(other, QTruncSeries):
            m = min(self.order, other.order)
            return QTruncSeries(m, [a + b for a, b in zip(self.coeffs, other.coeffs)][: m + 1])
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] += _as_fraction(other)
            return QTruncSeries(self.order, cs)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "QTruncSeries":
        return QTruncSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other) -> "QTruncSeries":
        return self + (-other if isinstance(other, QTruncSeries) else -_as_fraction(other))

    def __rsub__(self, other) -> "QTruncSeries":
        return (-self) + other

    def __mul__(self, other) -> "QTruncSeries":
        if isinstance(other, QTruncSeries):
            m = min(self.order, other.order)
            res = [_ZERO] * (m + 1)
            bc = other.coeffs
            for i, a in enumerate(self.coeffs[: m + 1]):
                if not a:
                    continue
                for j in range(m + 1 - i):
                    b = bc[j]
                    if b:
                        res[i + j] += a * b
            return QTruncSeries(m, res)
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return QTruncSeries(self.order, [a * c for a in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QTruncSeries":
        if isinstance(other, QTruncSeries):
            return self * other.invert()
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _as_fraction(other))
        return NotImplemented

    def __pow__(self, e: int) -> "QTruncSeries":
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        out = QTruncSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, QTruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == QTruncSeries.constant(other, self.order)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    # -- transcendental operations ------------------------------------

    def invert(self) -> "QTruncSeries":
        """Multiplicative inverse modulo q^(M+1); needs a nonzero constant term."""
        c0 = self.coeffs[0]
        if not c0:
            raise NonInvertibleError("series with zero constant term is not invertible")
        inv0 = Fraction(1) / c0
        out = [inv0]
        for m in range(1, self.order + 1):
            acc = _ZERO
            for i in range(1, m + 1):
                a = self.coeffs[i]
                if a:
                    acc += a * out[m - i]
            out.append(-inv0 * acc)
        return QTruncSeries(self.order, out)

    def exp(self) -> "QTruncSeries":
        """Truncated exponential; requires zero constant term."""
        if self.coeffs[0]:
            raise DomainError("exp needs a series with zero constant term")
        total = QTruncSeries.one(self.order)
        term = QTruncSeries.one(self.order)
        for j in range(1, self.order + 1):
            term = term * self * Fraction(1, j)
            if term.is_zero():
                break
            total = total + term
        return total

    def log(self) -> "QTruncSeries":
        """Truncated logarithm; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise DomainError("log needs a series with constant term 1")
        u = self - 1
        total = QTruncSeries.zero(self.order)
        upow = QTruncSeries.one(self.order)
        for j in range(1, self.order + 1):
            upow = upow * u
            if upow.is_zero():
                break
            total = total + upow * Fraction((-1) ** (j + 1), j)
        return total

    # -- presentation --------------------------------------------------

    def to_strings(self) -> list[str]:
        """Coefficients c_0..c_M as "p/q" strings."""
        return [format_rational(c) for c in self.coeffs]

    def pretty(self) -> str:
        pieces = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                pieces.append(format_rational(c))
            else:
                qs = "q" if i == 1 else f"q^{i}"
                pieces.append(qs if c == 1 else ("-" + qs if c == -1 else f"{format_rational(c)}*{qs}"))
        body = " + ".join(pieces).replace("+ -", "- ") if pieces else "0"
        return f"{body} + O(q^{self.order + 1})"

    def __repr__(self) -> str:
        return f"QTruncSeries({self.order}, {self.pretty()!r})"


# -- spec operations as module functions --------------------------------


def exp_series(a: QTruncSeries) -> QTruncSeries:
    return a.exp()


def log_series(a: QTruncSeries) -> QTruncSeries:
    return a.log()


def geometric(k: int, order: int) -> QTruncSeries:
    """1 / (1 - q^k) truncated: 1 + q^k + q^{2k} + ..."""
    if k < 1:
        raise ValueError("k must be positive")
    cs = [_ZERO] * (order + 1)
    for i in range(0, order + 1, k):
        cs[i] = Fraction(1)
    return QTruncSeries(order, cs)


def one_minus_q(order: int) -> QTruncSeries:
    return QTruncSeries(order, (1, -1)) if order >= 1 else QTruncSeries(order, (1,))


def q_integer(n: int, order: int | None = None) -> QTruncSeries:
    """[n]_q = 1 + q + ... + q^(n-1); the default order keeps it exact."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if order is None:
        order = max(n - 1, 0)
    return QTruncSeries(order, [1] * min(n, order + 1))


def q_factorial(n: int, order: int | None = None) -> QTruncSeries:
    """[n]_q! = prod_{j=1}^{n} [j]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if order is None:
        order = n * (n - 1) // 2
    out = QTruncSeries.one(order)
    for j in range(1, n + 1):
        out = out * q_integer(j, order)
    return out

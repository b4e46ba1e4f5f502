"""Truncated exponential generating series with polynomial coefficients.

An :class:`EgfSeries` of order ``N`` stores ``c_0, ..., c_N`` where ``c_n`` is
the coefficient of ``x^n / n!``.  Products are binomial convolutions, so the
derivative is a plain index shift.  Binary operations on series of different
orders truncate to the smaller one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .exact import MPoly, as_poly, coerce

__all__ = [
    "EgfSeries",
    "exp_series",
    "cosh_series",
    "sin_series",
    "cos_series",
    "sec_plus_tan",
]


@dataclass(frozen=True)
class EgfSeries:
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the coefficient c_0")
        object.__setattr__(self, "coeffs", tuple(coerce(c) for c in self.coeffs))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> EgfSeries:
        return cls(tuple(coeffs))

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int) -> EgfSeries:
        return cls(tuple(f(n) for n in range(order + 1)))

    @classmethod
    def zero(cls, order: int) -> EgfSeries:
        return cls((MPoly(),) * (order + 1))

    @classmethod
    def constant(cls, c, order: int) -> EgfSeries:
        return cls((coerce(c),) + (MPoly(),) * order)

    @classmethod
    def one(cls, order: int) -> EgfSeries:
        return cls.constant(1, order)

    @classmethod
    def x(cls, order: int) -> EgfSeries:
        return cls.from_function(lambda n: 1 if n == 1 else 0, order)

    # -- access ------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> MPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> EgfSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return EgfSeries(self.coeffs[: order + 1])

    def map(self, f: Callable[[MPoly], MPoly]) -> EgfSeries:
        return EgfSeries(tuple(f(c) for c in self.coeffs))

    def substitute(self, bindings: Mapping[str, object]) -> EgfSeries:
        return self.map(lambda c: c.substitute(bindings))

    # -- ring operations ---------------------------------------------------

    def _pair(self, other) -> tuple[tuple, tuple]:
        if not isinstance(other, EgfSeries):
            other = EgfSeries.constant(other, self.order)
        n = min(self.order, other.order) + 1
        return self.coeffs[:n], other.coeffs[:n]

    def __add__(self, other) -> EgfSeries:
        a, b = self._pair(other)
        return EgfSeries(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> EgfSeries:
        return self.map(lambda c: -c)

    def __sub__(self, other) -> EgfSeries:
        a, b = self._pair(other)
        return EgfSeries(tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other) -> EgfSeries:
        return (-self) + other

    def scale(self, c) -> EgfSeries:
        c = coerce(c)
        return self.map(lambda a: a * c)

    def __mul__(self, other) -> EgfSeries:
        if not isinstance(other, EgfSeries):
            if as_poly(other) is NotImplemented:
                return NotImplemented
            return self.scale(other)
        a, b = self._pair(other)
        out = []
        for n in range(len(a)):
            acc = MPoly()
            for k in range(n + 1):
                if a[k] and b[n - k]:
                    acc = acc + (a[k] * b[n - k]) * math.comb(n, k)
            out.append(acc)
        return EgfSeries(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> EgfSeries:
        if isinstance(other, EgfSeries):
            return self * other.reciprocal()
        return self.scale(1 / coerce(other).as_constant())

    def __eq__(self, other) -> bool:
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- calculus ----------------------------------------------------------

    def derivative(self) -> EgfSeries:
        """``c_n(a') = c_{n+1}(a)``; the order drops by one."""
        if self.order < 1:
            raise ValueError("derivative needs a series of order >= 1")
        return EgfSeries(self.coeffs[1:])

    def integral(self, constant=0) -> EgfSeries:
        return EgfSeries((coerce(constant),) + self.coeffs)

    def _leading_constant(self) -> Fraction:
        c0 = self.coeffs[0]
        if not c0.is_constant() or not c0:
            raise ValueError(f"leading coefficient must be a nonzero constant, got {c0}")
        return c0.constant_term()

    def reciprocal(self) -> EgfSeries:
        inv0 = 1 / self._leading_constant()
        a = self.coeffs
        b = [MPoly.const(inv0)]
        for n in range(1, len(a)):
            acc = MPoly()
            for k in range(1, n + 1):
                if a[k] and b[n - k]:
                    acc = acc + (a[k] * b[n - k]) * math.comb(n, k)
            b.append(acc.scale(-inv0))
        return EgfSeries(tuple(b))

    def log(self) -> EgfSeries:
        if self.coeffs[0] != 1:
            raise ValueError(f"log needs c_0 = 1, got {self.coeffs[0]}")
        if self.order == 0:
            return EgfSeries.zero(0)
        dlog = self.derivative() * self.reciprocal()
        return dlog.integral(0)

    def exp(self) -> EgfSeries:
        if self.coeffs[0]:
            raise ValueError(f"exp needs c_0 = 0, got {self.coeffs[0]}")
        a = self.coeffs
        # b' = a' b  =>  b_{n+1} = sum_k C(n,k) a_{k+1} b_{n-k}
        b = [MPoly.const(1)]
        for n in range(len(a) - 1):
            acc = MPoly()
            for k in range(n + 1):
                if a[k + 1] and b[n - k]:
                    acc = acc + (a[k + 1] * b[n - k]) * math.comb(n, k)
            b.append(acc)
        return EgfSeries(tuple(b))

    def pow(self, e) -> EgfSeries:
        """``exp(e * log(self))``; ``e`` may be a polynomial such as ``w``."""
        if self.coeffs[0] != 1:
            raise ValueError(f"pow needs c_0 = 1, got {self.coeffs[0]}")
        return self.log().scale(e).exp()

    # -- evaluation and rendering -----------------------------------------

    def eval_float(self, bindings: Mapping[str, float], x0: float) -> float:
        total = 0.0
        for n, c in enumerate(self.coeffs):
            if c:
                total += c.eval_float(bindings) * x0**n / math.factorial(n)
        return total

    def lines(self) -> list[str]:
        return [f"{n}: {c}" for n, c in enumerate(self.coeffs)]

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def exp_series(order: int, rate=1) -> EgfSeries:
    """``e^{rate x}``: coefficients ``rate^n``."""
    r = coerce(rate)
    out = [MPoly.const(1)]
    for _ in range(order):
        out.append(out[-1] * r)
    return EgfSeries(tuple(out))


def cosh_series(order: int) -> EgfSeries:
    return EgfSeries.from_function(lambda n: 1 - n % 2, order)


def sin_series(order: int) -> EgfSeries:
    return EgfSeries.from_function(lambda n: 0 if n % 2 == 0 else (-1) ** (n // 2), order)


def cos_series(order: int) -> EgfSeries:
    return EgfSeries.from_function(lambda n: 0 if n % 2 else (-1) ** (n // 2), order)


def sec_plus_tan(order: int) -> EgfSeries:
    """``(1 + sin x) / cos x``, whose coefficients are the Euler numbers."""
    return (EgfSeries.one(order) + sin_series(order)) * cos_series(order).reciprocal()


def coefficients_as_ints(series: EgfSeries | Sequence[MPoly]) -> list[int]:
    out = []
    for c in series:
        v = c.as_constant()
        if v.denominator != 1:
            raise ValueError(f"coefficient {v} is not an integer")
        out.append(int(v))
    return out

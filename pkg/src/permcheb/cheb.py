"""Bivariate Chebyshev polynomials ``U_n(s, t)`` and related sequences.

``U_n = 2t U_{n-1} - s U_{n-2}`` with ``U_0 = 1``, ``U_1 = 2t`` and
``U_{-1} = 0``.  ``U_n`` is also the weighted count of tilings of a strip of
length ``n`` by red and blue monominoes (weight ``t``) and dominoes
(weight ``-s``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .egf import EgfSeries, coefficients_as_ints, sec_plus_tan
from .exact import MPoly, coerce

__all__ = [
    "Piece",
    "Tiling",
    "cheb_u",
    "cheb_u_list",
    "tilings",
    "tiling_sum",
    "series_v",
    "series_f",
    "series_g",
    "pell",
    "parity",
    "euler_numbers",
    "SEQUENCES",
    "sequence_terms",
]

S = MPoly.var("s")
T = MPoly.var("t")


class Piece(enum.Enum):
    RED = "r"
    BLUE = "b"
    DOMINO = "D"

    @property
    def length(self) -> int:
        return 2 if self is Piece.DOMINO else 1


@dataclass(frozen=True)
class Tiling:
    pieces: tuple

    @property
    def length(self) -> int:
        return sum(p.length for p in self.pieces)

    @property
    def dominoes(self) -> int:
        return sum(1 for p in self.pieces if p is Piece.DOMINO)

    def weight(self, s_arg=S, t_arg=T) -> MPoly:
        s_arg, t_arg = coerce(s_arg), coerce(t_arg)
        out = MPoly.const(1)
        for p in self.pieces:
            out = out * (-s_arg if p is Piece.DOMINO else t_arg)
        return out

    def cells(self) -> list:
        """Piece covering each cell, left to right (a domino appears twice)."""
        out = []
        for p in self.pieces:
            out.extend([p] * p.length)
        return out

    def __str__(self) -> str:
        return "".join(p.value for p in self.pieces) or "-"


def tilings(n: int) -> Iterator[Tiling]:
    """All tilings of a ``1 x n`` strip; none for ``n < 0``."""
    if n < 0:
        return
    if n == 0:
        yield Tiling(())
        return
    for rest in tilings(n - 1):
        yield Tiling((Piece.RED,) + rest.pieces)
        yield Tiling((Piece.BLUE,) + rest.pieces)
    for rest in tilings(n - 2):
        yield Tiling((Piece.DOMINO,) + rest.pieces)


def tiling_sum(n: int, s_arg=S, t_arg=T) -> MPoly:
    total = MPoly()
    for tiling in tilings(n):
        total = total + tiling.weight(s_arg, t_arg)
    return total


def cheb_u_list(n_max: int, s_arg=S, t_arg=T) -> list[MPoly]:
    """``[U_0, ..., U_{n_max}]`` with the given polynomials substituted for ``s, t``."""
    s_arg, t_arg = coerce(s_arg), coerce(t_arg)
    two_t = t_arg * 2
    out = [MPoly.const(1), two_t]
    for _ in range(2, n_max + 1):
        out.append(two_t * out[-1] - s_arg * out[-2])
    return out[: n_max + 1] if n_max >= 0 else []


def cheb_u(n: int, s_arg=S, t_arg=T) -> MPoly:
    if n < -1:
        raise ValueError(f"U_n is defined for n >= -1, got {n}")
    if n == -1:
        return MPoly()
    return cheb_u_list(n, s_arg, t_arg)[n]


def series_v(s_arg=S, t_arg=T, order: int = 12) -> EgfSeries:
    """``V = sum_n U_n x^{n+2}/(n+2)!``: ``c_0 = c_1 = 0``, ``c_{n+2} = U_n``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    us = cheb_u_list(order - 2, s_arg, t_arg) if order >= 2 else []
    return EgfSeries(tuple([MPoly(), MPoly()] + us)[: order + 1])


def series_f(order: int) -> EgfSeries:
    """``F = 1 + V(-1, 0) = cosh``."""
    return series_v(-1, 0, order) + 1


def series_g(order: int) -> EgfSeries:
    """``G = 1 + V(-1, 1)``, the Pell numbers."""
    return series_v(-1, 1, order) + 1


def pell(n: int) -> int:
    """``g_0 = 1, g_1 = 0, g_n = 2 g_{n-1} + g_{n-2}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 1, 0
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def parity(n: int) -> int:
    """``(n + 1) mod 2``: the sequence 1, 0, 1, 0, ..."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (n + 1) % 2


def euler_numbers(up_to: int) -> list[int]:
    """``E_0 .. E_{up_to}`` from the series of ``sec x + tan x``."""
    return coefficients_as_ints(sec_plus_tan(up_to))


def _pk_neg1(count: int) -> list[int]:
    # P^pk(-1; x) = G'/G, indexed from n = 1
    g = series_g(count + 1)
    return coefficients_as_ints((g.derivative() / g).coeffs[1 : count + 1])


def _cpk_neg1(count: int) -> list[int]:
    # D^cpk(-1; x) = 1/G, indexed from n = 1
    return coefficients_as_ints(series_g(count).reciprocal().coeffs[1 : count + 1])


# name -> (first index, generator of `count` terms)
SEQUENCES = {
    "pell": (0, lambda c: [pell(n) for n in range(c)]),
    "parity": (0, lambda c: [parity(n) for n in range(c)]),
    "euler": (0, lambda c: euler_numbers(c - 1) if c else []),
    "pk-neg1": (1, _pk_neg1),
    "cpk-neg1": (1, _cpk_neg1),
}


def sequence_terms(name: str, count: int) -> tuple[int, list[int]]:
    """``(offset, terms)`` for a named sequence; term ``i`` has index ``offset + i``."""
    try:
        offset, gen = SEQUENCES[name]
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}; choose from {', '.join(SEQUENCES)}") from None
    if count < 0:
        raise ValueError("count must be nonnegative")
    return offset, gen(count)

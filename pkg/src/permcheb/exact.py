"""Exact rationals and sparse polynomials over the alphabet ``s, t, u, v, w, y``.

Rationals are :class:`fractions.Fraction`.  An :class:`MPoly` maps exponent
vectors (one entry per variable, in alphabet order) to nonzero rational
coefficients.  Values are immutable; all arithmetic returns new objects.

>>> t = MPoly.var("t")
>>> s = MPoly.var("s")
>>> print(2 * t * (4 * t**2 - s) - s * (2 * t))
8*t^3 - 4*s*t
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Mapping, Union

__all__ = ["VARS", "Rational", "MPoly", "Scalar", "as_poly", "parse_poly"]

VARS = ("s", "t", "u", "v", "w", "y")
NVARS = len(VARS)
_INDEX = {name: i for i, name in enumerate(VARS)}
_ZERO_EXP = (0,) * NVARS

Rational = Fraction
Scalar = Union[int, Fraction]


def _order_key(exp: tuple):
    # graded, then lexicographic with y > w > v > u > t > s
    return (-sum(exp), tuple(-e for e in reversed(exp)))


class MPoly:
    """Sparse multivariate polynomial with :class:`Fraction` coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != NVARS:
                    raise ValueError(f"exponent vector must have length {NVARS}: {exp!r}")
                c = Fraction(c)
                if c:
                    exp = tuple(int(e) for e in exp)
                    if any(e < 0 for e in exp):
                        raise ValueError(f"negative exponent in {exp!r}")
                    clean[exp] = clean.get(exp, Fraction(0)) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> MPoly:
        # terms already canonical: tuples of ints -> nonzero Fractions
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> MPoly:
        c = Fraction(c)
        return cls._raw({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, name: str) -> MPoly:
        try:
            i = _INDEX[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}; alphabet is {VARS}") from None
        exp = [0] * NVARS
        exp[i] = 1
        return cls._raw({tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, powers: Mapping[str, int], coeff: Scalar = 1) -> MPoly:
        exp = [0] * NVARS
        for name, e in powers.items():
            exp[_INDEX[name]] += e
        return cls({tuple(exp): coeff})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict:
        """A copy of the term dictionary ``{exponent tuple: Fraction}``."""
        return dict(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items(), key=lambda kv: _order_key(kv[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {_ZERO_EXP}

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self.constant_term()

    def variables(self) -> set[str]:
        return {VARS[i] for exp in self._terms for i, e in enumerate(exp) if e}

    def coefficient(self, powers: Mapping[str, int] | tuple) -> Fraction:
        if not isinstance(powers, tuple):
            exp = [0] * NVARS
            for name, e in powers.items():
                exp[_INDEX[name]] = e
            powers = tuple(exp)
        return self._terms.get(powers, Fraction(0))

    def degree(self, name: str | None = None) -> int:
        """Total degree, or the degree in one variable; ``-1`` for zero."""
        if not self._terms:
            return -1
        if name is None:
            return max(sum(exp) for exp in self._terms)
        i = _INDEX[name]
        return max(exp[i] for exp in self._terms)

    def univariate_coeffs(self, name: str) -> list[Fraction]:
        """Coefficient list ``[c_0, c_1, ...]`` of a polynomial in ``name`` only."""
        i = _INDEX[name]
        out: list[Fraction] = []
        for exp, c in self._terms.items():
            if any(e for j, e in enumerate(exp) if j != i):
                raise ValueError(f"{self} involves variables other than {name}")
            k = exp[i]
            out.extend([Fraction(0)] * (k + 1 - len(out)))
            out[k] = c
        return out

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> MPoly:
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            v = out.get(exp)
            if v is None:
                out[exp] = c
            else:
                v += c
                if v:
                    out[exp] = v
                else:
                    del out[exp]
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly._raw({exp: -c for exp, c in self._terms.items()})

    def __pos__(self) -> MPoly:
        return self

    def __sub__(self, other) -> MPoly:
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MPoly:
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> MPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return MPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((eb, cb),) = b.items()
            if eb == _ZERO_EXP:
                return self.scale(cb) if a is self._terms else other.scale(cb)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(exp)
                out[exp] = ca * cb if v is None else v + ca * cb
        return MPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> MPoly:
        c = Fraction(c)
        if not c:
            return MPoly._raw({})
        if c == 1:
            return self
        return MPoly._raw({exp: v * c for exp, v in self._terms.items()})

    def __truediv__(self, other) -> MPoly:
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.is_constant() or not other:
            raise ZeroDivisionError(f"can only divide by a nonzero constant, not {other}")
        return self.scale(1 / other.constant_term())

    def __pow__(self, e: int) -> MPoly:
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution and evaluation --------------------------------------

    def substitute(self, bindings: Mapping[str, object]) -> MPoly:
        """Simultaneously replace variables by polynomials (or scalars)."""
        if not bindings:
            return self
        images = []
        for i, name in enumerate(VARS):
            if name in bindings:
                images.append(as_poly(bindings[name]))
            else:
                images.append(None)
        for name in bindings:
            if name not in _INDEX:
                raise ValueError(f"unknown variable {name!r}")
        powers: list[dict[int, MPoly]] = [{} for _ in VARS]

        def power(i: int, e: int) -> MPoly:
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        total = MPoly._raw({})
        for exp, c in self._terms.items():
            kept = tuple(0 if images[i] is not None else e for i, e in enumerate(exp))
            term = MPoly._raw({kept: c})
            for i, e in enumerate(exp):
                if e and images[i] is not None:
                    term = term * power(i, e)
            total = total + term
        return total

    def eval_float(self, bindings: Mapping[str, float]) -> float:
        """Evaluate in double precision; every variable present must be bound."""
        missing = self.variables() - set(bindings)
        if missing:
            raise ValueError(f"unbound variables: {sorted(missing)}")
        point = [float(bindings.get(name, 0.0)) for name in VARS]
        total = 0.0
        for exp, c in self._terms.items():
            term = float(c)
            for x, e in zip(point, exp):
                if e:
                    term *= x**e
            total += term
        return total

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (exp, c) in enumerate(self):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(VARS, exp) if e
            )
            mag = abs(c)
            if not mono:
                body = _fmt(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_fmt(mag)}*{mono}"
            if i == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def as_poly(x) -> MPoly:
    """Coerce ints, Fractions and MPoly values; ``NotImplemented`` otherwise."""
    if isinstance(x, MPoly):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, (int, Fraction)):
        return MPoly.const(x)
    return NotImplemented


def coerce(x) -> MPoly:
    p = as_poly(x)
    if p is NotImplemented:
        raise TypeError(f"cannot use {type(x).__name__} as a polynomial")
    return p


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def parse_poly(text: str) -> MPoly:
    """Parse expressions like ``8*t^3 - 4*s*t`` or ``(1+t)/2``.

    Supports ``+ - * /``, ``^`` (or ``**``) with nonnegative integer exponents,
    parentheses, integer/decimal/``p/q`` constants and the six variables.
    Division is only allowed by constants.
    """
    src = text.strip().replace("^", "**")
    if not src:
        raise ValueError("empty polynomial expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}") from exc

    def ev(node) -> MPoly:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and type(node.value) in (int, float):
            return MPoly.const(Fraction(str(node.value)))
        if isinstance(node, ast.Name):
            return MPoly.var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = ev(node.left)
                exp = ev(node.right)
                e = exp.as_constant()
                if e.denominator != 1 or e < 0:
                    raise ValueError(f"bad exponent {exp} in {text!r}")
                return base ** int(e)
            op = _BINOPS.get(type(node.op))
            if op is not None:
                try:
                    return op(ev(node.left), ev(node.right))
                except ZeroDivisionError:
                    raise ValueError(f"division by zero or by a non-constant in {text!r}") from None
        raise ValueError(f"unsupported syntax in polynomial {text!r}")

    return ev(tree)

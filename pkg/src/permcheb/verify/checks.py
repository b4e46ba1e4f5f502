"""Registry of identity checks.

Each check compares two independent routes: exact series built from ``U_n``
against brute-force distributions, published values against computed ones,
or a truncated series evaluated in floating point against a closed form.
A check returns ``None`` on success or a witness string describing the first
mismatch (smallest ``n``, then the first monomial in print order).
"""

from __future__ import annotations

import itertools
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .. import bulk
from ..cheb import cheb_u, euler_numbers, series_f, series_g, series_v
from ..egf import EgfSeries, exp_series
from ..exact import MPoly, parse_poly
from ..hop import (
    big_phi,
    big_phi_inv,
    big_phi_ring,
    big_phi_ring_inv,
    colored_derangements,
    colored_perms,
    foata_o,
    foata_o_inv,
    foata_o_prime,
    foata_o_prime_inv,
    phi_k,
    phi_s,
    theta_k,
    theta_s,
)
from ..perms import (
    LetterClass,
    Permutation,
    all_stats,
    classify_cyclic,
    classify_linear,
    enumerate_perms,
    short_runs,
)
from . import tables
from .objects import bar_objects, fixed_point_image, involution_step, partition_sum

__all__ = ["CheckConfig", "CheckReport", "CHECKS", "check_identity", "run_checks"]

MAX_N_LIMIT = 10
MAX_ORDER_LIMIT = 24
NUMERIC_ORDER = 24
NUMERIC_X = 0.2
NUMERIC_RTOL = 1e-6

s, t, u, v, w, y = (MPoly.var(c) for c in "stuvwy")


@dataclass
class CheckConfig:
    max_n: int | None = None
    order: int | None = None
    jobs: int = 1


@dataclass
class CheckReport:
    id: str
    params: dict
    status: str
    witness: str | None = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        d = asdict(self)
        if d["witness"] is None:
            del d["witness"]
        d["elapsed_ms"] = round(d["elapsed_ms"], 1)
        return json.dumps(d, sort_keys=False)

    def to_text(self, timing: bool = False) -> str:
        params = " ".join(f"{k}={_fmt_param(v)}" for k, v in self.params.items())
        line = f"{self.status.upper():4} {self.id:12} {params}"
        if timing:
            line += f"  ({self.elapsed_ms:.0f} ms)"
        if self.witness:
            line += f"\n     witness: {self.witness}"
        return line


def _fmt_param(v) -> str:
    if isinstance(v, list):
        return "[" + ",".join(_fmt_param(x) for x in v) + "]"
    return str(v)


@dataclass
class _Ctx:
    max_n: int
    order: int
    jobs: int
    params: dict = field(default_factory=dict)

    def brute(self, n: int, subset: str, stats: Sequence[str], variables: Sequence[str]) -> MPoly:
        return bulk.distribution(n, subset, stats, variables, jobs=self.jobs)


@dataclass
class _Check:
    func: Callable[[_Ctx], str | None]
    max_n: int | None
    order: int | None
    summary: str


CHECKS: dict[str, _Check] = {}


def _check(name: str, max_n: int | None = None, order: int | None = None):
    def deco(func):
        CHECKS[name] = _Check(func, max_n, order, (func.__doc__ or "").strip().splitlines()[0])
        return func

    return deco


# -- comparison helpers -----------------------------------------------------


def _poly_witness(n: int, got: MPoly, want: MPoly, got_label: str, want_label: str) -> str | None:
    diff = got - want
    if not diff:
        return None
    exp, _ = next(iter(diff))
    mono = MPoly({exp: 1})
    return (
        f"n={n}: coefficient of {mono} is {got.coefficient(exp)} ({got_label}) "
        f"vs {want.coefficient(exp)} ({want_label})"
    )


def _compare_series_to_brute(
    ctx: _Ctx,
    series: EgfSeries,
    subset: str,
    stats: Sequence[str],
    variables: Sequence[str],
    ns: Iterable[int],
    label: str = "",
) -> str | None:
    for n in ns:
        brute = ctx.brute(n, subset, stats, variables)
        wit = _poly_witness(n, series[n], brute, "series", "brute force")
        if wit:
            return f"{label}{wit}"
    return None


def _compare_values(label: str, pairs: Iterable[tuple[int, object, object]]) -> str | None:
    for n, got, want in pairs:
        if got != want:
            return f"{label} n={n}: got {got}, expected {want}"
    return None


def _first(*witnesses) -> str | None:
    for wit in witnesses:
        if wit:
            return wit
    return None


def _at(p: MPoly, **bindings) -> Fraction:
    return p.substitute(bindings).as_constant()


def _euler_signed(n: int, e: list[int], odd: bool, sign: bool) -> int:
    """``(+-)E_n`` on the chosen parity, zero on the other."""
    if (n % 2 == 1) != odd:
        return 0
    if not sign:
        return e[n]
    k = (n - 1) // 2 if odd else n // 2
    return (-1) ** k * e[n]


def _numeric(
    ctx: _Ctx,
    label: str,
    points: list[dict],
    series_fn: Callable[[dict], EgfSeries],
    closed_fn: Callable[[dict, float], float],
) -> str | None:
    ctx.params.update(order=NUMERIC_ORDER, x=NUMERIC_X, rtol=NUMERIC_RTOL)
    ctx.params["points"] = [
        "(" + ",".join(f"{k}={val}" for k, val in p.items()) + ")" for p in points
    ]
    x = NUMERIC_X
    for p in points:
        exact = {k: Fraction(val) for k, val in p.items()}
        floats = {k: float(val) for k, val in exact.items()}
        got = series_fn(exact).eval_float(floats, x)
        want = closed_fn(floats, x)
        rel = abs(got - want) / max(abs(want), 1e-300)
        if not rel <= NUMERIC_RTOL:
            return f"{label} at {p}: series {got!r} vs closed form {want!r} (rel err {rel:.3g})"
    return None


def _pk_dbl_series(s_arg, t_arg, order: int) -> EgfSeries:
    big_v = series_v(s_arg, t_arg, order + 1)
    return big_v.derivative() * (1 - big_v.scale(s_arg)).reciprocal()


def _cyclic_series(s_arg, t_arg, order: int, scale=None) -> EgfSeries:
    big_v = series_v(s_arg, t_arg, order)
    return (1 - big_v.scale(s_arg if scale is None else scale)).reciprocal()


# -- Chebyshev side ---------------------------------------------------------


@_check("eq11")
def _eq11(ctx: _Ctx):
    """U_n(t, (1+t)/2) = 1 + t + ... + t^n for n = 1..30."""
    ctx.params["n"] = "1..30"
    for n in range(1, 31):
        want = sum((t**k for k in range(n + 1)), MPoly())
        wit = _poly_witness(n, cheb_u(n, t, (1 + t) / 2), want, "U_n", "geometric sum")
        if wit:
            return wit
    return None


@_check("eq4")
def _eq4(ctx: _Ctx):
    """Closed forms of V(s,t;x), sum U_n x^(n+1)/(n+1)!, F and G, numerically."""

    def v_closed(p, x):
        b = math.sqrt(p["t"] ** 2 - p["s"])
        e = math.exp(p["t"] * x)
        return (1 - math.cosh(x * b) * e + p["t"] * e * math.sinh(x * b) / b) / p["s"]

    def u_closed(p, x):
        b = math.sqrt(p["t"] ** 2 - p["s"])
        return math.exp(x * p["t"]) * math.sinh(x * b) / b

    points = [{"s": -1, "t": 1}, {"s": -1, "t": 0}, {"s": 1, "t": 2}]
    wit = _first(
        _numeric(ctx, "V", points, lambda p: series_v(p["s"], p["t"], NUMERIC_ORDER), v_closed),
        _numeric(
            ctx,
            "U-egf",
            points,
            lambda p: series_v(p["s"], p["t"], NUMERIC_ORDER + 1).derivative(),
            u_closed,
        ),
    )
    if wit:
        return wit
    x = NUMERIC_X
    g_closed = 0.5 * math.exp(x) * (2 * math.cosh(x * math.sqrt(2)) - math.sqrt(2) * math.sinh(x * math.sqrt(2)))
    for name, ser, want in (
        ("G", series_g(NUMERIC_ORDER), g_closed),
        ("F", series_f(NUMERIC_ORDER), math.cosh(x)),
    ):
        got = ser.eval_float({}, x)
        if abs(got - want) > NUMERIC_RTOL * abs(want):
            return f"{name}: series {got!r} vs closed form {want!r}"
    return None


# -- permutations ------------------------------------------------------------


@_check("t1a", max_n=9, order=12)
def _t1a(ctx: _Ctx):
    """A(-1;x) = F'/F: brute force and the signed tangent-number pattern."""
    f = series_f(ctx.order + 1)
    series = f.derivative() / f
    e = euler_numbers(ctx.order)
    return _first(
        _compare_values(
            "A_n(-1) brute vs F'/F",
            ((n, series[n].as_constant(), _at(ctx.brute(n, "all", ["des"], ["t"]), t=-1))
             for n in range(1, ctx.max_n + 1)),
        ),
        _compare_values(
            "F'/F vs (-1)^((n-1)/2) E_n",
            ((n, series[n].as_constant(), _euler_signed(n, e, odd=True, sign=True))
             for n in range(1, ctx.order + 1)),
        ),
    )


@_check("t1b", max_n=9, order=12)
def _t1b(ctx: _Ctx):
    """P^pk(-1;x) = G'/G against brute force and the published table."""
    order = max(ctx.order, len(tables.PK_NEG1))
    g = series_g(order + 1)
    series = g.derivative() / g
    return _first(
        _compare_values(
            "P_n^pk(-1) brute vs G'/G",
            ((n, series[n].as_constant(), _at(ctx.brute(n, "all", ["pk"], ["t"]), t=-1))
             for n in range(1, ctx.max_n + 1)),
        ),
        _compare_values(
            "G'/G vs table",
            ((n, series[n].as_constant(), want) for n, want in enumerate(tables.PK_NEG1, 1)),
        ),
    )


@_check("eq1", max_n=10, order=12)
def _eq1(ctx: _Ctx):
    """A_n(-1) = (-1)^((n-1)/2) E_n for odd n, 0 for even n (brute force)."""
    e = euler_numbers(max(ctx.max_n, 1))
    return _compare_values(
        "A_n(-1)",
        ((n, _at(ctx.brute(n, "all", ["des"], ["t"]), t=-1), _euler_signed(n, e, odd=True, sign=True))
         for n in range(1, ctx.max_n + 1)),
    )


@_check("t3", max_n=9, order=12)
def _t3(ctx: _Ctx):
    """P^(pk,dbl)(s,t;x) = V'/(1 - sV)."""
    series = _pk_dbl_series(s, t, ctx.max_n)
    return _compare_series_to_brute(ctx, series, "all", ["pk", "dbl"], ["s", "t"], range(1, ctx.max_n + 1))


@_check("t3-closed")
def _t3_closed(ctx: _Ctx):
    """P^(pk,dbl) = 1/(sqrt(t^2-s) coth(x sqrt(t^2-s)) - t), numerically."""

    def closed(p, x):
        b = math.sqrt(p["t"] ** 2 - p["s"])
        return 1 / (b / math.tanh(x * b) - p["t"])

    points = [{"s": -1, "t": 1}, {"s": 1, "t": 2}, {"s": -2, "t": "1/2"}, {"s": 0, "t": 1}]
    return _numeric(ctx, "P^(pk,dbl)", points,
                    lambda p: _pk_dbl_series(p["s"], p["t"], NUMERIC_ORDER), closed)


@_check("lemma2", max_n=7)
def _lemma2(ctx: _Ctx):
    """Phi: colored permutations -> S_n is a (pk,dbl)-preserving bijection."""
    for n in range(1, ctx.max_n + 1):
        images = set()
        for c in colored_perms(n):
            p = big_phi(c)
            a, b = all_stats(c.base), all_stats(p)
            if (a["pk"], a["dbl"]) != (b["pk"], b["dbl"]):
                return f"n={n}: Phi({c}) = {p} changes (pk, dbl)"
            if big_phi_inv(p) != c:
                return f"n={n}: Phi^-1(Phi({c})) = {big_phi_inv(p)}"
            images.add(p)
        if len(images) != math.factorial(n):
            return f"n={n}: Phi hits {len(images)} of {math.factorial(n)} permutations"
    return None


@_check("t4", max_n=8)
def _t4(ctx: _Ctx):
    """P^(pk,val,dasc,ddes) = t V'(st,(u+v)/2) / (1 - st V(st,(u+v)/2))."""
    series = _pk_dbl_series(s * t, (u + v) / 2, ctx.max_n).scale(t)
    return _compare_series_to_brute(
        ctx, series, "all", ["pk", "val", "dasc", "ddes"], ["s", "t", "u", "v"], range(1, ctx.max_n + 1)
    )


@_check("carlitz")
def _carlitz(ctx: _Ctx):
    """P^(pk,val,dasc,ddes) = 2t/(alpha coth(alpha x/2) - u - v), numerically."""

    def series_fn(p):
        return _pk_dbl_series(p["s"] * p["t"], (p["u"] + p["v"]) / 2, NUMERIC_ORDER).scale(p["t"])

    def closed(p, x):
        a = math.sqrt((p["u"] + p["v"]) ** 2 - 4 * p["s"] * p["t"])
        return 2 * p["t"] / (a / math.tanh(a * x / 2) - p["u"] - p["v"])

    points = [
        {"s": 1, "t": 1, "u": 2, "v": 1},
        {"s": 1, "t": 2, "u": 1, "v": 3},
        {"s": -1, "t": 1, "u": 1, "v": 1},
        {"s": "1/2", "t": 1, "u": 0, "v": 2},
    ]
    return _numeric(ctx, "Carlitz-Scoville", points, series_fn, closed)


@_check("c5a", max_n=9)
def _c5a(ctx: _Ctx):
    """A(t;x) = V'(t,(1+t)/2) / (1 - t V(t,(1+t)/2))."""
    series = _pk_dbl_series(t, (1 + t) / 2, ctx.max_n)
    return _compare_series_to_brute(ctx, series, "all", ["des"], ["t"], range(1, ctx.max_n + 1))


@_check("c5b", max_n=9)
def _c5b(ctx: _Ctx):
    """P^pk(t;x) = V'(t,1) / (1 - t V(t,1))."""
    series = _pk_dbl_series(t, 1, ctx.max_n)
    return _compare_series_to_brute(ctx, series, "all", ["pk"], ["t"], range(1, ctx.max_n + 1))


@_check("c5c", max_n=9)
def _c5c(ctx: _Ctx):
    """P^ddes(t;x) = V'(1,(1+t)/2) / (1 - V(1,(1+t)/2))."""
    series = _pk_dbl_series(1, (1 + t) / 2, ctx.max_n)
    return _compare_series_to_brute(ctx, series, "all", ["ddes"], ["t"], range(1, ctx.max_n + 1))


@_check("t6", max_n=10, order=12)
def _t6(ctx: _Ctx):
    """P_n^ddes(-1) = E_n (odd n) / 0 (even n); no-dbl permutations are the alternating ones."""
    e = euler_numbers(max(ctx.max_n, ctx.order))
    tan_series = _pk_dbl_series(1, 0, ctx.order)
    wit = _first(
        _compare_values(
            "P_n^ddes(-1)",
            ((n, _at(ctx.brute(n, "all", ["ddes"], ["t"]), t=-1), _euler_signed(n, e, odd=True, sign=False))
             for n in range(1, ctx.max_n + 1)),
        ),
        _compare_values(
            "V'(1,0)/(1-V(1,0)) vs tan",
            ((n, tan_series[n].as_constant(), _euler_signed(n, e, odd=True, sign=False))
             for n in range(1, ctx.order + 1)),
        ),
    )
    if wit:
        return wit
    for n in range(1, ctx.max_n + 1):
        # P_n^(pk,dbl)(1,0) counts dbl = 0; for odd n these are exactly the alternating permutations
        at10 = _at(ctx.brute(n, "all", ["pk", "dbl"], ["s", "t"]), s=1, t=0)
        count, mismatch = 0, False
        for block in bulk.permutation_blocks(n):
            no_dbl = bulk.stat_columns(block, ["dbl"])["dbl"] == 0
            alt = bulk.alternating_mask(block)
            count += int(alt.sum())
            expected = alt if n % 2 else np.zeros_like(alt)
            mismatch |= bool((no_dbl != expected).any())
        if mismatch:
            return f"n={n}: permutations with dbl=0 are not the alternating ones"
        want = count if n % 2 else 0
        if at10 != want:
            return f"n={n}: P_n^(pk,dbl)(1,0) = {at10}, alternating count rule gives {want}"
        if count != e[n]:
            return f"n={n}: {count} alternating permutations, E_n = {e[n]}"
    return None


# -- derangements -----------------------------------------------------------


@_check("t7", max_n=9)
def _t7(ctx: _Ctx):
    """D^(cpk,cdbl)(s,t;x) = 1/(1 - s V(s,t;x))."""
    series = _cyclic_series(s, t, ctx.max_n)
    return _compare_series_to_brute(ctx, series, "derangements", ["cpk", "cdbl"], ["s", "t"], range(1, ctx.max_n + 1))


@_check("t8", max_n=8)
def _t8(ctx: _Ctx):
    """D^(cpk,cval,cdasc,cddes) = 1/(1 - st V(st,(u+v)/2))."""
    series = _cyclic_series(s * t, (u + v) / 2, ctx.max_n)
    return _compare_series_to_brute(
        ctx, series, "derangements", ["cpk", "cval", "cdasc", "cddes"], ["s", "t", "u", "v"],
        range(1, ctx.max_n + 1),
    )


def _eq8_closed(p, x):
    a = math.sqrt((p["u"] + p["v"]) ** 2 - 4 * p["s"] * p["t"])
    uv = p["u"] + p["v"]
    return a * math.exp(-uv * x / 2) / (a * math.cosh(a * x / 2) - uv * math.sinh(a * x / 2))


_FOUR_VAR_POINTS = [
    {"s": 1, "t": 1, "u": 2, "v": 1},
    {"s": 1, "t": 2, "u": 1, "v": 3},
    {"s": -1, "t": 1, "u": 1, "v": 1},
    {"s": "1/2", "t": 1, "u": 0, "v": 2},
]


@_check("eq8")
def _eq8(ctx: _Ctx):
    """Closed form alpha e^(-(u+v)x/2) / (alpha cosh - (u+v) sinh), numerically."""
    return _numeric(
        ctx, "D^(cpk,cval,cdasc,cddes)", _FOUR_VAR_POINTS,
        lambda p: _cyclic_series(p["s"] * p["t"], (p["u"] + p["v"]) / 2, NUMERIC_ORDER),
        _eq8_closed,
    )


@_check("eq9-10", max_n=7)
def _eq9_10(ctx: _Ctx):
    """Adding cyc via the w-th power, then fix via e^(wyx)."""
    d4 = _cyclic_series(s * t, (u + v) / 2, ctx.max_n)
    d5 = d4.pow(w)
    full = exp_series(ctx.max_n, w * y) * d5
    ns = range(1, ctx.max_n + 1)
    return _first(
        _compare_series_to_brute(
            ctx, d5, "derangements", ["cpk", "cval", "cdasc", "cddes", "cyc"], ["s", "t", "u", "v", "w"], ns,
            label="derangements with cyc: ",
        ),
        _compare_series_to_brute(
            ctx, full, "all", ["cpk", "cval", "cdasc", "cddes", "cyc", "fix"], ["s", "t", "u", "v", "w", "y"], ns,
            label="all permutations with cyc, fix: ",
        ),
        None if full[0] == 1 else f"constant term is {full[0]}, expected 1",
    )


@_check("zeng")
def _zeng(ctx: _Ctx):
    """(alpha e^((y-(u+v)/2)x) / (alpha cosh - (u+v) sinh))^w, numerically."""

    def series_fn(p):
        d4 = _cyclic_series(p["s"] * p["t"], (p["u"] + p["v"]) / 2, NUMERIC_ORDER)
        return exp_series(NUMERIC_ORDER, p["w"] * p["y"]) * d4.pow(p["w"])

    def closed(p, x):
        return (math.exp(p["y"] * x) * _eq8_closed(p, x)) ** p["w"]

    points = [
        dict(_FOUR_VAR_POINTS[0], w=2, y=1),
        dict(_FOUR_VAR_POINTS[1], w="1/2", y=3),
        dict(_FOUR_VAR_POINTS[2], w=3, y=-1),
        dict(_FOUR_VAR_POINTS[3], w="-3/2", y="1/2"),
    ]
    return _numeric(ctx, "sextuple distribution", points, series_fn, closed)


@_check("c9", max_n=9)
def _c9(ctx: _Ctx):
    """D(t;x) = 1/(1 - t V(t,(1+t)/2)) for excedances over derangements."""
    series = _cyclic_series(t, (1 + t) / 2, ctx.max_n)
    return _compare_series_to_brute(ctx, series, "derangements", ["exc"], ["t"], range(1, ctx.max_n + 1))


@_check("c9-closed")
def _c9_closed(ctx: _Ctx):
    """D(t;x) = (1-t)e^(-x) / (e^(-(1-t)x) - t), numerically."""

    def closed(p, x):
        tt = p["t"]
        return (1 - tt) * math.exp(-x) / (math.exp(-(1 - tt) * x) - tt)

    points = [{"t": -1}, {"t": "1/2"}, {"t": 2}, {"t": 0}]
    return _numeric(ctx, "excedance EGF", points,
                    lambda p: _cyclic_series(p["t"], (1 + p["t"]) / 2, NUMERIC_ORDER), closed)


@_check("c10+roselle", max_n=10, order=12)
def _c10_roselle(ctx: _Ctx):
    """D(-1;x) = 1/F, and D_n(-1) = (-1)^(n/2) E_n (even n) / 0 (odd n)."""
    inv_f = series_f(ctx.order).reciprocal()
    engine = _cyclic_series(t, (1 + t) / 2, ctx.order).substitute({"t": -1})
    e = euler_numbers(max(ctx.order, ctx.max_n))
    if engine != inv_f:
        n = next(i for i in range(ctx.order + 1) if engine[i] != inv_f[i])
        return f"n={n}: D(-1;x) engine form {engine[n]} vs 1/F {inv_f[n]}"
    return _first(
        _compare_values(
            "D_n(-1) brute vs 1/F",
            ((n, _at(ctx.brute(n, "derangements", ["exc"], ["t"]), t=-1), inv_f[n].as_constant())
             for n in range(1, min(ctx.max_n, ctx.order) + 1)),
        ),
        _compare_values(
            "D_n(-1) brute vs Roselle",
            ((n, _at(ctx.brute(n, "derangements", ["exc"], ["t"]), t=-1), _euler_signed(n, e, odd=False, sign=True))
             for n in range(1, ctx.max_n + 1)),
        ),
        _compare_values(
            "1/F vs Roselle",
            ((n, inv_f[n].as_constant(), _euler_signed(n, e, odd=False, sign=True))
             for n in range(1, ctx.order + 1)),
        ),
    )


@_check("c11", max_n=9)
def _c11(ctx: _Ctx):
    """D^cpk(t;x) = 1/(1 - t V(t,1)), plus the published D_n^cpk(t) table."""
    series = _cyclic_series(t, 1, max(ctx.max_n, len(tables.CPK_POLY)))
    return _first(
        _compare_series_to_brute(ctx, series, "derangements", ["cpk"], ["t"], range(1, ctx.max_n + 1)),
        *(_poly_witness(n, series[n], parse_poly(text), "series", "table")
          for n, text in enumerate(tables.CPK_POLY, 1)),
    )


@_check("c11-closed")
def _c11_closed(ctx: _Ctx):
    """D^cpk(t;x) = sqrt(1-t) e^(-x) / (sqrt(1-t) cosh(x sqrt(1-t)) - sinh(x sqrt(1-t)))."""

    def closed(p, x):
        r = math.sqrt(1 - p["t"])
        return r * math.exp(-x) / (r * math.cosh(x * r) - math.sinh(x * r))

    points = [{"t": 0}, {"t": "1/2"}, {"t": -1}, {"t": -3}]
    return _numeric(ctx, "cyclic peak EGF", points,
                    lambda p: _cyclic_series(p["t"], 1, NUMERIC_ORDER), closed)


@_check("prop12", max_n=10)
def _prop12(ctx: _Ctx):
    """Exactly 2^(n-2) derangements of [n] have one cyclic peak."""
    for n in range(2, ctx.max_n + 1):
        count = bulk.count_where(n, "derangements", lambda b: bulk.stat_columns(b, ["cpk"])["cpk"] == 1)
        if count != 2 ** (n - 2):
            return f"n={n}: {count} derangements with one cyclic peak, expected {2 ** (n - 2)}"
        lin = ctx.brute(n, "derangements", ["cpk"], ["t"]).coefficient({"t": 1})
        if lin != 2 ** (n - 2):
            return f"n={n}: coefficient of t in D_n^cpk(t) is {lin}, expected {2 ** (n - 2)}"
    return None


@_check("c13", max_n=10, order=12)
def _c13(ctx: _Ctx):
    """D^cpk(-1;x) = 1/G."""
    inv_g = series_g(max(ctx.order, ctx.max_n)).reciprocal()
    engine = _cyclic_series(t, 1, max(ctx.order, ctx.max_n)).substitute({"t": -1})
    if engine != inv_g:
        return "D^cpk(-1;x) engine form differs from 1/G"
    return _compare_values(
        "D_n^cpk(-1) brute vs 1/G",
        ((n, _at(ctx.brute(n, "derangements", ["cpk"], ["t"]), t=-1), inv_g[n].as_constant())
         for n in range(1, ctx.max_n + 1)),
    )


@_check("c14", max_n=9)
def _c14(ctx: _Ctx):
    """D^cddes(t;x) = 1/(1 - V(1,(1+t)/2)), plus the published D_n^cddes(t) table."""
    series = _cyclic_series(1, (1 + t) / 2, max(ctx.max_n, len(tables.CDDES_POLY)))
    return _first(
        _compare_series_to_brute(ctx, series, "derangements", ["cddes"], ["t"], range(1, ctx.max_n + 1)),
        *(_poly_witness(n, series[n], parse_poly(text), "series", "table")
          for n, text in enumerate(tables.CDDES_POLY, 1)),
    )


@_check("c14-closed")
def _c14_closed(ctx: _Ctx):
    """D^cddes(t;x) = beta e^(-(1+t)x/2) / (beta cosh(beta x/2) - (1+t) sinh(beta x/2))."""

    def closed(p, x):
        tt = p["t"]
        b = math.sqrt((tt + 3) * (tt - 1))
        return b * math.exp(-(1 + tt) * x / 2) / (b * math.cosh(b * x / 2) - (1 + tt) * math.sinh(b * x / 2))

    points = [{"t": "3/2"}, {"t": 2}, {"t": 3}, {"t": 5}]
    return _numeric(ctx, "cyclic double descent EGF", points,
                    lambda p: _cyclic_series(1, (1 + p["t"]) / 2, NUMERIC_ORDER), closed)


@_check("prop15", max_n=8)
def _prop15(ctx: _Ctx):
    """Fixed points and cyclic double descents of pi are the short runs of o'(pi)."""
    for n in range(1, ctx.max_n + 1):
        no_short = 0
        for p in enumerate_perms(n):
            classes = classify_cyclic(p)
            marked = {a for a, c in zip(p.word, classes) if c is None or c is LetterClass.DOUBLE_DESCENT}
            runs1 = set(short_runs(foata_o_prime(p)))
            if marked != runs1:
                return f"n={n}: {p}: fixed/cddes letters {sorted(marked)} vs short runs {sorted(runs1)}"
            if not short_runs(p):
                no_short += 1
        const = ctx.brute(n, "derangements", ["cddes"], ["t"]).constant_term()
        if const != no_short:
            return f"n={n}: D_n^cddes(0) = {const}, permutations without short runs = {no_short}"
    return None


@_check("t16", max_n=10, order=12)
def _t16(ctx: _Ctx):
    """D_n^cddes(-1) = E_n (even n) / 0 (odd n); o maps cdbl-free derangements to reverse-alternating words."""
    e = euler_numbers(max(ctx.max_n, ctx.order))
    sec = _cyclic_series(1, 0, ctx.order)
    wit = _first(
        _compare_values(
            "D_n^cddes(-1)",
            ((n, _at(ctx.brute(n, "derangements", ["cddes"], ["t"]), t=-1), _euler_signed(n, e, odd=False, sign=False))
             for n in range(1, ctx.max_n + 1)),
        ),
        _compare_values(
            "1/(1-V(1,0)) vs sec",
            ((n, sec[n].as_constant(), _euler_signed(n, e, odd=False, sign=False)) for n in range(1, ctx.order + 1)),
        ),
    )
    if wit:
        return wit
    for n in range(1, ctx.max_n + 1):
        at10 = _at(ctx.brute(n, "derangements", ["cpk", "cdbl"], ["s", "t"]), s=1, t=0)
        images, rev_alt = set(), set()
        for block in bulk.permutation_blocks(n):
            rev_alt.update(map(tuple, block[bulk.alternating_mask(block, reverse=True)].tolist()))
        for block in bulk.permutation_blocks(n, "derangements"):
            rows = block[bulk.stat_columns(block, ["cdbl"])["cdbl"] == 0]
            images.update(foata_o(Permutation(tuple(r))).word for r in rows.tolist())
        if len(rev_alt) != e[n]:
            return f"n={n}: {len(rev_alt)} reverse-alternating permutations, E_n = {e[n]}"
        want = len(rev_alt) if n % 2 == 0 else 0
        if at10 != want:
            return f"n={n}: D_n^(cpk,cdbl)(1,0) = {at10}, reverse-alternating rule gives {want}"
        if n % 2 == 0 and images != rev_alt:
            return f"n={n}: o does not map cdbl-free derangements onto reverse-alternating permutations"
    return None


# -- proof objects and bijections -------------------------------------------


def _objects_check(ctx: _Ctx, mode: str) -> str | None:
    subset = "all" if mode == "linear" else "derangements"
    stats = ["pk", "dbl"] if mode == "linear" else ["cpk", "cdbl"]
    reference = colored_perms if mode == "linear" else colored_derangements
    to_plain = big_phi if mode == "linear" else big_phi_ring
    for n in range(1, ctx.max_n + 1):
        total = fixed_total = MPoly()
        images = set()
        for obj in bar_objects(n, mode):
            wt = obj.weight()
            total = total + wt
            if obj.is_fixed():
                fixed_total = fixed_total + wt
                images.add(fixed_point_image(obj))
                continue
            other = involution_step(obj)
            if involution_step(other) != obj:
                return f"n={n}: involution is not self-inverse at {obj}"
            if other.weight() != -wt:
                return f"n={n}: involution does not negate the weight at {obj}"
        if images != set(reference(n)):
            return f"n={n}: fixed points do not biject onto the colored {subset}"
        via_bijection = MPoly()
        for c in images:
            st = all_stats(to_plain(c))
            via_bijection = via_bijection + MPoly.monomial({"s": st[stats[0]], "t": st[stats[1]]})
        brute = ctx.brute(n, subset, stats, ["s", "t"])
        psum = partition_sum(n, mode)
        for label, got in (("object total", total), ("fixed-point total", fixed_total),
                           ("bijection image", via_bijection), ("brute force", brute)):
            wit = _poly_witness(n, got, psum, label, "partition sum")
            if wit:
                return wit
    return None


@_check("eq5", max_n=6)
def _eq5(ctx: _Ctx):
    """Linear partition sum = object sum = fixed-point sum = P_n^(pk,dbl)."""
    return _objects_check(ctx, "linear")


@_check("eq7", max_n=6)
def _eq7(ctx: _Ctx):
    """Cyclic partition sum = object sum = fixed-point sum = D_n^(cpk,cdbl)."""
    return _objects_check(ctx, "cyclic")


@_check("bijections", max_n=7)
def _bijections(ctx: _Ctx):
    """Round trips of o, o', Phi-ring; hopping involutions commute and preserve statistics."""
    for n in range(1, ctx.max_n + 1):
        for p in enumerate_perms(n):
            if foata_o_inv(foata_o(p)) != p or foata_o_prime_inv(foata_o_prime(p)) != p:
                return f"n={n}: Foata round trip fails at {p}"
            st = all_stats(p)
            for k in range(1, n + 1):
                q = phi_k(p, k)
                sq = all_stats(q)
                if (sq["pk"], sq["dbl"]) != (st["pk"], st["dbl"]) or phi_k(q, k) != p:
                    return f"n={n}: phi_{k} misbehaves at {p}"
        images = set()
        for c in colored_derangements(n):
            d = big_phi_ring(c)
            a, b = all_stats(c.base), all_stats(d)
            if (a["cpk"], a["cdbl"]) != (b["cpk"], b["cdbl"]) or big_phi_ring_inv(d) != c:
                return f"n={n}: Phi-ring misbehaves at {c}"
            images.add(d)
        derangements = list(enumerate_perms(n, "derangements"))
        if len(images) != len(derangements):
            return f"n={n}: Phi-ring hits {len(images)} of {len(derangements)} derangements"
        for d in derangements:
            classes = classify_cyclic(d)
            st = all_stats(d)
            for k in range(1, n + 1):
                q = theta_k(d, k)
                sq = all_stats(q)
                if (sq["cpk"], sq["cdbl"]) != (st["cpk"], st["cdbl"]) or theta_k(q, k) != d:
                    return f"n={n}: theta_{k} misbehaves at {d}"
                before = classes[d.word.index(k)]
                after = classify_cyclic(q)[q.word.index(k)]
                toggled = {LetterClass.DOUBLE_ASCENT: LetterClass.DOUBLE_DESCENT,
                           LetterClass.DOUBLE_DESCENT: LetterClass.DOUBLE_ASCENT}.get(before, before)
                if after is not toggled:
                    return f"n={n}: theta_{k}({d}) moves letter {k} from {before} to {after}"
    for n in range(1, min(ctx.max_n, 5) + 1):
        subsets = [frozenset(c) for r in range(n + 1) for c in _combos(n, r)]
        for p in enumerate_perms(n):
            for a in subsets:
                pa = phi_s(p, a)
                if phi_s(pa, a) != p:
                    return f"n={n}: phi_S not an involution at {p}, S={sorted(a)}"
                for b in subsets:
                    if phi_s(pa, b) != phi_s(phi_s(p, b), a):
                        return f"n={n}: phi_S, phi_T do not commute at {p}"
        for d in enumerate_perms(n, "derangements"):
            for a in subsets:
                da = theta_s(d, a)
                if theta_s(da, a) != d:
                    return f"n={n}: theta_S not an involution at {d}"
                for b in subsets:
                    if theta_s(da, b) != theta_s(theta_s(d, b), a):
                        return f"n={n}: theta_S, theta_T do not commute at {d}"
    return None


def _combos(n: int, r: int):
    return itertools.combinations(range(1, n + 1), r)


@_check("tables", max_n=10)
def _tables(ctx: _Ctx):
    """Every published table: U_n, Pell, P_n^pk(-1), D_n^cpk(-1), D_n^cpk(t), D_n^cddes(t)."""
    u_table = [cheb_u(n) for n in range(len(tables.CHEB_U))]
    wit = _first(
        _compare_values("U_n", ((n, str(p), want) for n, (p, want) in enumerate(zip(u_table, tables.CHEB_U)))),
        _compare_values("Pell", ((n, series_g(12)[n].as_constant(), want) for n, want in enumerate(tables.PELL))),
    )
    if wit:
        return wit
    for n in range(1, ctx.max_n + 1):
        checks = [
            ("P_n^pk(-1)", "all", "pk", tables.PK_NEG1),
            ("D_n^cpk(-1)", "derangements", "cpk", tables.CPK_NEG1),
        ]
        for label, subset, name, table in checks:
            if n > len(table):
                continue
            got = _at(ctx.brute(n, subset, [name], ["t"]), t=-1)
            if got != table[n - 1]:
                return f"{label} n={n}: brute force {got}, table {table[n - 1]}"
        for label, name, table in (("D_n^cpk(t)", "cpk", tables.CPK_POLY),
                                   ("D_n^cddes(t)", "cddes", tables.CDDES_POLY)):
            if n <= len(table):
                wit = _poly_witness(n, ctx.brute(n, "derangements", [name], ["t"]),
                                    parse_poly(table[n - 1]), "brute force", f"table {label}")
                if wit:
                    return wit
    return None


# -- driver -----------------------------------------------------------------


def _resolve(identity: str, config: CheckConfig) -> _Ctx:
    if identity not in CHECKS:
        raise KeyError(f"unknown identity {identity!r}; known: {', '.join(CHECKS)}")
    entry = CHECKS[identity]
    max_n = config.max_n if config.max_n is not None and entry.max_n is not None else entry.max_n
    order = config.order if config.order is not None and entry.order is not None else entry.order
    if max_n is not None and not 1 <= max_n <= MAX_N_LIMIT:
        raise ValueError(f"--max-n must be in 1..{MAX_N_LIMIT}, got {max_n}")
    if order is not None and not 1 <= order <= MAX_ORDER_LIMIT:
        raise ValueError(f"--order must be in 1..{MAX_ORDER_LIMIT}, got {order}")
    ctx = _Ctx(max_n or 0, order or 0, max(config.jobs, 1))
    if max_n is not None:
        ctx.params["max_n"] = max_n
    if order is not None:
        ctx.params["order"] = order
    return ctx


def check_identity(identity: str, config: CheckConfig | None = None) -> CheckReport:
    """Run one named check and return its report."""
    ctx = _resolve(identity, config or CheckConfig())
    start = time.perf_counter()
    witness = CHECKS[identity].func(ctx)
    elapsed = (time.perf_counter() - start) * 1000
    return CheckReport(identity, ctx.params, "fail" if witness else "pass", witness, elapsed)


def _run_one(args) -> CheckReport:
    identity, config = args
    return check_identity(identity, config)


def run_checks(ids: Sequence[str], config: CheckConfig | None = None, workers: int = 1) -> list[CheckReport]:
    """Run several checks; reports come back in the order of ``ids``."""
    config = config or CheckConfig()
    for identity in ids:
        _resolve(identity, config)
    if workers > 1 and len(ids) > 1:
        inner = CheckConfig(config.max_n, config.order, 1)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, [(i, inner) for i in ids]))
    return [check_identity(i, config) for i in ids]

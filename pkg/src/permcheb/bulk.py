"""Vectorised exhaustive enumeration for desk-scale ``n`` (up to 11).

Permutations of ``[n]`` are generated in lexicographic order as integer
arrays, one block per first letter.  Blocks are independent, so a
distribution can be aggregated sequentially or across worker processes with
identical results.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Sequence

import numpy as np

from .exact import NVARS, VARS, MPoly
from .perms import STATS

MAX_N = 11
_DTYPE = np.int16


def lex_permutations(n: int) -> np.ndarray:
    """All of ``S_n`` as an ``(n!, n)`` array in lexicographic order."""
    arr = np.zeros((1, 0), dtype=_DTYPE)
    for m in range(1, n + 1):
        # prefix a, then S_{m-1} relabelled to skip a
        blocks = [
            np.hstack([np.full((arr.shape[0], 1), a, dtype=_DTYPE), arr + (arr >= a)])
            for a in range(1, m + 1)
        ]
        arr = np.vstack(blocks)
    return arr


def permutation_blocks(n: int, subset: str = "all") -> Iterator[np.ndarray]:
    """Yield ``S_n`` (or ``D_n``) in lexicographic order, one block per first letter."""
    for first in range(1, n + 1) if n else [None]:
        block = _block(n, first)
        yield _restrict(block, subset)


def _block(n: int, first: int | None) -> np.ndarray:
    if n > MAX_N:
        raise ValueError(f"exhaustive enumeration is limited to n <= {MAX_N}")
    if first is None:
        return np.zeros((1, 0), dtype=_DTYPE)
    rest = lex_permutations(n - 1)
    return np.hstack([np.full((rest.shape[0], 1), first, dtype=_DTYPE), rest + (rest >= first)])


def _restrict(block: np.ndarray, subset: str) -> np.ndarray:
    if subset == "all":
        return block
    if subset == "derangements":
        n = block.shape[1]
        idx = np.arange(1, n + 1, dtype=_DTYPE)
        return block[~(block == idx).any(axis=1)]
    raise ValueError(f"subset must be 'all' or 'derangements', not {subset!r}")


def stat_columns(arr: np.ndarray, names: Sequence[str]) -> dict[str, np.ndarray]:
    """Vectorised statistics: one integer column per requested name."""
    for name in names:
        if name not in STATS:
            raise ValueError(f"unknown statistic {name!r}")
    m, n = arr.shape
    out: dict[str, np.ndarray] = {}
    if n == 0:
        return {name: np.zeros(m, dtype=np.int64) for name in names}
    wanted = set(names)

    if wanted & {"pk", "val", "dasc", "ddes", "dbl"}:
        inf = np.full((m, 1), n + 1, dtype=_DTYPE)
        prev = np.hstack([inf, arr[:, :-1]])
        nxt = np.hstack([arr[:, 1:], inf])
        up_in, up_out = prev < arr, arr < nxt
        out["pk"] = (up_in & ~up_out).sum(axis=1)
        out["val"] = (~up_in & up_out).sum(axis=1)
        out["dasc"] = (up_in & up_out).sum(axis=1)
        out["ddes"] = (~up_in & ~up_out).sum(axis=1)
        out["dbl"] = out["dasc"] + out["ddes"]
    if "des" in wanted:
        out["des"] = (arr[:, :-1] > arr[:, 1:]).sum(axis=1)
    idx = np.arange(1, n + 1, dtype=_DTYPE)
    if wanted & {"cpk", "cval", "cdasc", "cddes", "cdbl"}:
        img2 = np.take_along_axis(arr, arr.astype(np.intp) - 1, axis=1)
        moved = arr != idx
        up_in, up_out = idx < arr, arr < img2
        out["cpk"] = (moved & up_in & ~up_out).sum(axis=1)
        out["cval"] = (moved & ~up_in & up_out).sum(axis=1)
        out["cdasc"] = (moved & up_in & up_out).sum(axis=1)
        out["cddes"] = (moved & ~up_in & ~up_out).sum(axis=1)
        out["cdbl"] = out["cdasc"] + out["cddes"]
    if "exc" in wanted:
        out["exc"] = (idx < arr).sum(axis=1)
    if "fix" in wanted:
        out["fix"] = (idx == arr).sum(axis=1)
    if "cyc" in wanted:
        # a letter leads its cycle iff it is the maximum of its orbit
        zero_based = arr.astype(np.intp) - 1
        cur = np.broadcast_to(np.arange(n, dtype=np.intp), (m, n)).copy()
        best = cur.copy()
        for _ in range(n - 1):
            cur = np.take_along_axis(zero_based, cur, axis=1)
            np.maximum(best, cur, out=best)
        out["cyc"] = (best == np.arange(n)).sum(axis=1)
    return {name: out[name].astype(np.int64) for name in names}


def _key_base(n: int, stats: Sequence[str]) -> int:
    # exponents of one variable can sum several statistics, each at most n
    return n * max(len(stats), 1) + 1


def _block_counts(args) -> Counter:
    n, first, subset, stats, variables = args
    block = _restrict(_block(n, first), subset)
    if block.shape[0] == 0:
        return Counter()
    cols = stat_columns(block, stats)
    base = _key_base(n, stats)
    key = np.zeros(block.shape[0], dtype=np.int64)
    for name, var in zip(stats, variables):
        key += cols[name] * base ** VARS.index(var)
    keys, counts = np.unique(key, return_counts=True)
    return Counter(dict(zip(keys.tolist(), counts.tolist())))


def distribution(
    n: int,
    subset: str,
    stats: Sequence[str],
    variables: Sequence[str],
    jobs: int = 1,
) -> MPoly:
    """Exhaustive distribution polynomial; ``jobs > 1`` fans out by first letter."""
    stats, variables = list(stats), list(variables)
    if len(stats) != len(variables):
        raise ValueError("stats and variables must have the same length")
    for var in variables:
        if var not in VARS:
            raise ValueError(f"unknown variable {var!r}; alphabet is {VARS}")
    tasks = [(n, first, subset, stats, variables) for first in (range(1, n + 1) if n else [None])]
    total: Counter = Counter()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_block_counts, tasks):
                total.update(part)
    else:
        for task in tasks:
            total.update(_block_counts(task))
    base = _key_base(n, stats)
    terms = {}
    for key, count in total.items():
        exp = []
        for _ in range(NVARS):
            key, e = divmod(key, base)
            exp.append(e)
        terms[tuple(exp)] = count
    return MPoly(terms)


def count_where(n: int, subset: str, predicate) -> int:
    """Number of rows for which ``predicate(block)`` is true (vectorised)."""
    return int(sum(int(predicate(b).sum()) for b in permutation_blocks(n, subset)))


def alternating_mask(arr: np.ndarray, reverse: bool = False) -> np.ndarray:
    """Rows with ``pi_1 < pi_2 > pi_3 < ...`` (or the reverse pattern)."""
    n = arr.shape[1]
    ok = np.ones(arr.shape[0], dtype=bool)
    for i in range(n - 1):
        rising = (i % 2 == 0) != reverse
        ok &= (arr[:, i] < arr[:, i + 1]) if rising else (arr[:, i] > arr[:, i + 1])
    return ok

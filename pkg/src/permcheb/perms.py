"""Permutations in one-line notation and their linear and cyclic statistics.

Letters are ``1..n``.  Linear classification uses the boundary convention
``pi_0 = pi_{n+1} = infinity``; cyclic classification of the letter ``pi_i``
compares ``i``, ``pi_i`` and ``pi_{pi_i}``.

>>> p = Permutation.parse("467125839")
>>> stat(p, "pk"), stat(p, "val"), stat(p, "dasc"), stat(p, "ddes")
(2, 3, 4, 0)
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exact import MPoly

__all__ = [
    "Permutation",
    "LetterClass",
    "STATS",
    "classify_linear",
    "classify_cyclic",
    "all_stats",
    "stat",
    "enumerate_perms",
    "distribution",
    "runs",
    "short_runs",
    "left_to_right_maxima",
    "left_to_right_minima",
    "is_alternating",
    "is_reverse_alternating",
]

STATS = (
    "pk", "val", "dasc", "ddes", "dbl", "des",
    "cpk", "cval", "cdasc", "cddes", "cdbl", "exc", "cyc", "fix",
)


class LetterClass(enum.Enum):
    PEAK = "pk"
    VALLEY = "val"
    DOUBLE_ASCENT = "dasc"
    DOUBLE_DESCENT = "ddes"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``[n]`` stored as its one-line word."""

    word: tuple

    def __post_init__(self):
        word = tuple(int(a) for a in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse ``"467125839"`` or ``"4 6 7 1 2 5 8 3 9 10"`` (commas allowed)."""
        text = text.strip()
        if re.search(r"[\s,]", text):
            parts = [p for p in re.split(r"[\s,]+", text) if p]
        else:
            parts = list(text)
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(tuple(int(p) for p in parts))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]]) -> Permutation:
        n = sum(len(c) for c in cycles)
        img = [0] * (n + 1)
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a] = b
        return cls(tuple(img[1:]))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __getitem__(self, i: int) -> int:
        """1-indexed: ``p[i]`` is ``pi_i``."""
        return self.word[i - 1]

    def __str__(self) -> str:
        return render_word(self.word)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, a in enumerate(self.word, 1):
            inv[a - 1] = i
        return Permutation(tuple(inv))

    def reverse(self) -> Permutation:
        return Permutation(self.word[::-1])

    def is_derangement(self) -> bool:
        return all(a != i for i, a in enumerate(self.word, 1))

    def cycles(self, smallest_first: bool = False) -> tuple:
        """Canonical cycle form.

        Default: each cycle starts at its largest letter, cycles by increasing
        maxima.  With ``smallest_first``: each cycle starts at its smallest
        letter, cycles by decreasing minima.
        """
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            a = self[start]
            while a != start:
                cyc.append(a)
                seen.add(a)
                a = self[a]
            lead = cyc.index(min(cyc) if smallest_first else max(cyc))
            out.append(tuple(cyc[lead:] + cyc[:lead]))
        if smallest_first:
            out.sort(key=lambda c: -c[0])
        else:
            out.sort(key=lambda c: c[0])
        return tuple(out)


def render_word(word: Sequence[int]) -> str:
    if len(word) <= 9:
        return "".join(str(a) for a in word)
    return " ".join(str(a) for a in word)


def render_cycles(cycles: Sequence[Sequence[int]]) -> str:
    n = sum(len(c) for c in cycles)
    sep = "" if n <= 9 else " "
    return "".join("(" + sep.join(str(a) for a in c) + ")" for c in cycles)


def parse_cycles(text: str) -> tuple:
    groups = re.findall(r"\(([^()]*)\)", text)
    if not groups or re.sub(r"\([^()]*\)", "", text).strip():
        raise ValueError(f"cannot parse cycle form {text!r}")
    cycles = []
    for g in groups:
        g = g.strip()
        parts = re.split(r"[\s,]+", g) if re.search(r"[\s,]", g) else list(g)
        cycles.append(tuple(int(p) for p in parts if p))
    return tuple(cycles)


def _linear(prev: float, cur: int, nxt: float) -> LetterClass:
    if prev < cur:
        return LetterClass.PEAK if cur > nxt else LetterClass.DOUBLE_ASCENT
    return LetterClass.DOUBLE_DESCENT if cur > nxt else LetterClass.VALLEY


def classify_linear(p: Permutation) -> list[LetterClass]:
    """Class of each position under ``pi_0 = pi_{n+1} = infinity``."""
    inf = float("inf")
    w = p.word
    n = len(w)
    return [
        _linear(w[i - 1] if i > 0 else inf, w[i], w[i + 1] if i < n - 1 else inf)
        for i in range(n)
    ]


def classify_cyclic(p: Permutation) -> list[LetterClass | None]:
    """Cyclic class of the letter at each position; ``None`` at fixed points."""
    out: list[LetterClass | None] = []
    for i, a in enumerate(p.word, 1):
        if a == i:
            out.append(None)
        else:
            out.append(_linear(i, a, p[a]))
    return out


def _count_cycles(p: Permutation) -> int:
    seen = [False] * (p.n + 1)
    count = 0
    for start in range(1, p.n + 1):
        if not seen[start]:
            count += 1
            a = start
            while not seen[a]:
                seen[a] = True
                a = p[a]
    return count


def all_stats(p: Permutation) -> dict[str, int]:
    """Every named statistic, from one linear and one cyclic pass."""
    lin = classify_linear(p)
    cyc = classify_cyclic(p)
    out = {name: 0 for name in STATS}
    for c in lin:
        out[c.value] += 1
    for c in cyc:
        if c is not None:
            out["c" + c.value] += 1
    w = p.word
    out["dbl"] = out["dasc"] + out["ddes"]
    out["cdbl"] = out["cdasc"] + out["cddes"]
    out["des"] = sum(1 for a, b in zip(w, w[1:]) if a > b)
    out["exc"] = sum(1 for i, a in enumerate(w, 1) if i < a)
    out["fix"] = sum(1 for i, a in enumerate(w, 1) if i == a)
    out["cyc"] = _count_cycles(p)
    return out


def stat(p: Permutation, name: str) -> int:
    if name not in STATS:
        raise ValueError(f"unknown statistic {name!r}; choose from {', '.join(STATS)}")
    return all_stats(p)[name]


def enumerate_perms(n: int, subset: str = "all") -> Iterator[Permutation]:
    """All permutations (or derangements) of ``[n]`` in lexicographic order."""
    if subset not in ("all", "derangements"):
        raise ValueError(f"subset must be 'all' or 'derangements', not {subset!r}")
    for word in itertools.permutations(range(1, n + 1)):
        if subset == "derangements" and any(a == i for i, a in enumerate(word, 1)):
            continue
        yield Permutation(word)


def distribution(
    n: int,
    subset: str,
    stats: Sequence[str],
    variables: Sequence[str],
    jobs: int = 1,
) -> MPoly:
    """``sum over the subset of prod var_j ** stat_j(pi)``, by exhaustive enumeration."""
    from .bulk import distribution as _bulk

    return _bulk(n, subset, stats, variables, jobs=jobs)


def distribution_slow(
    n: int, subset: str, stats: Sequence[str], variables: Sequence[str]
) -> MPoly:
    """Reference version of :func:`distribution` built on :func:`all_stats`."""
    if len(stats) != len(variables):
        raise ValueError("stats and variables must have the same length")
    total = MPoly()
    for p in enumerate_perms(n, subset):
        values = all_stats(p)
        powers: dict[str, int] = {}
        for name, var in zip(stats, variables):
            powers[var] = powers.get(var, 0) + values[name]
        total = total + MPoly.monomial(powers)
    return total


def runs(p: Permutation | Sequence[int]) -> list[tuple]:
    """Maximal increasing consecutive subsequences (any word of integers is accepted)."""
    out: list[list[int]] = []
    for a in p.word if isinstance(p, Permutation) else p:
        if out and out[-1][-1] < a:
            out[-1].append(a)
        else:
            out.append([a])
    return [tuple(r) for r in out]


def short_runs(p: Permutation | Sequence[int]) -> list[int]:
    """Letters forming increasing runs of length one."""
    return [r[0] for r in runs(p) if len(r) == 1]


def left_to_right_maxima(word: Sequence[int]) -> list[int]:
    out, best = [], 0
    for a in word:
        if a > best:
            out.append(a)
            best = a
    return out


def left_to_right_minima(word: Sequence[int]) -> list[int]:
    out, best = [], float("inf")
    for a in word:
        if a < best:
            out.append(a)
            best = a
    return out


def is_alternating(p: Permutation) -> bool:
    """``pi_1 < pi_2 > pi_3 < ...``"""
    w = p.word
    return all((a < b) == (i % 2 == 0) for i, (a, b) in enumerate(zip(w, w[1:])))


def is_reverse_alternating(p: Permutation) -> bool:
    """``pi_1 > pi_2 < pi_3 > ...``"""
    w = p.word
    return all((a > b) == (i % 2 == 0) for i, (a, b) in enumerate(zip(w, w[1:])))

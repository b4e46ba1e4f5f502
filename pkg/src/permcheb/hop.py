"""Valley-hopping, its cyclic analogue, and the Foata transformations.

``phi_k`` moves the letter ``k`` across the maximal runs of smaller letters
on either side, toggling double ascent and double descent.  ``theta_k`` is the
same move conjugated by Foata's map ``o`` (cycle form, largest letter first,
erase parentheses), with the letter before the first one read as ``0``.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .perms import (
    LetterClass,
    Permutation,
    classify_cyclic,
    classify_linear,
    enumerate_perms,
    left_to_right_maxima,
    left_to_right_minima,
    render_cycles,
)

__all__ = [
    "Color",
    "ColoredPerm",
    "ColoredDerangement",
    "phi_k",
    "phi_s",
    "orbit",
    "big_phi",
    "big_phi_inv",
    "foata_o",
    "foata_o_inv",
    "foata_o_prime",
    "foata_o_prime_inv",
    "theta_k",
    "theta_s",
    "big_phi_ring",
    "big_phi_ring_inv",
    "colored_perms",
    "colored_derangements",
]

INF = float("inf")


class Color(enum.Enum):
    RED = "r"
    BLUE = "b"


def _hop(word: tuple, k: int, left: float = INF) -> tuple:
    n = len(word)
    j = word.index(k)
    a = j
    while a > 0 and word[a - 1] < k:
        a -= 1
    b = j + 1
    while b < n and word[b] < k:
        b += 1
    prev = word[j - 1] if j > 0 else left
    nxt = word[j + 1] if j < n - 1 else INF
    if (prev < k) == (k < nxt):
        # double ascent or double descent
        return word[:a] + word[j + 1 : b] + (k,) + word[a:j] + word[b:]
    return word


def _check_letter(p: Permutation, k: int) -> None:
    if not 1 <= k <= p.n:
        raise ValueError(f"letter {k} is not in [1, {p.n}]")


def phi_k(p: Permutation, k: int) -> Permutation:
    _check_letter(p, k)
    return Permutation(_hop(p.word, k))


def phi_s(p: Permutation, letters: Iterable[int]) -> Permutation:
    """Product of the commuting involutions ``phi_k``, applied in increasing ``k``."""
    word = p.word
    for k in sorted(set(letters)):
        _check_letter(p, k)
        word = _hop(word, k)
    return Permutation(word)


def orbit(p: Permutation) -> set[Permutation]:
    """Orbit of ``p`` under the group generated by all ``phi_k``."""
    seen = {p}
    todo = [p]
    while todo:
        q = todo.pop()
        for k in range(1, q.n + 1):
            r = phi_k(q, k)
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return seen


# -- colored permutations -------------------------------------------------


def _letters_with(p: Permutation, classes: list, cls: LetterClass) -> set[int]:
    return {a for a, c in zip(p.word, classes) if c is cls}


def _freeze_colors(colors: Mapping[int, Color]) -> tuple:
    return tuple(sorted((int(k), Color(v)) for k, v in dict(colors).items()))


def _render_colored(base: Permutation, colors: dict) -> str:
    return " ".join(f"{a}{colors[a].value}" if a in colors else str(a) for a in base.word)


def _parse_colored(text: str) -> tuple[Permutation, dict]:
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    word, colors = [], {}
    for tok in tokens:
        m = re.fullmatch(r"(\d+)([rb]?)", tok)
        if not m:
            raise ValueError(f"bad colored letter {tok!r}")
        a = int(m.group(1))
        word.append(a)
        if m.group(2):
            colors[a] = Color(m.group(2))
    return Permutation(tuple(word)), colors


@dataclass(frozen=True)
class ColoredPerm:
    """A permutation without double ascents, each double descent red or blue.

    Colors are keyed by letter.
    """

    base: Permutation
    colors: tuple

    def __init__(self, base: Permutation, colors: Mapping[int, Color]):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "colors", _freeze_colors(colors))
        classes = classify_linear(base)
        if _letters_with(base, classes, LetterClass.DOUBLE_ASCENT):
            raise ValueError(f"{base} has a double ascent")
        ddes = _letters_with(base, classes, LetterClass.DOUBLE_DESCENT)
        if set(dict(self.colors)) != ddes:
            raise ValueError(f"colored letters {sorted(dict(self.colors))} != double descents {sorted(ddes)}")

    @property
    def color_map(self) -> dict[int, Color]:
        return dict(self.colors)

    def red(self) -> set[int]:
        return {a for a, c in self.colors if c is Color.RED}

    @classmethod
    def parse(cls, text: str) -> ColoredPerm:
        return cls(*_parse_colored(text))

    def __str__(self) -> str:
        return _render_colored(self.base, self.color_map)


@dataclass(frozen=True)
class ColoredDerangement:
    """A derangement without cyclic double ascents, each cyclic double descent red or blue."""

    base: Permutation
    colors: tuple

    def __init__(self, base: Permutation, colors: Mapping[int, Color]):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "colors", _freeze_colors(colors))
        if not base.is_derangement():
            raise ValueError(f"{base} is not a derangement")
        classes = classify_cyclic(base)
        if _letters_with(base, classes, LetterClass.DOUBLE_ASCENT):
            raise ValueError(f"{base} has a cyclic double ascent")
        cddes = _letters_with(base, classes, LetterClass.DOUBLE_DESCENT)
        if set(dict(self.colors)) != cddes:
            raise ValueError(
                f"colored letters {sorted(dict(self.colors))} != cyclic double descents {sorted(cddes)}"
            )

    @property
    def color_map(self) -> dict[int, Color]:
        return dict(self.colors)

    def red(self) -> set[int]:
        return {a for a, c in self.colors if c is Color.RED}

    @classmethod
    def parse(cls, text: str) -> ColoredDerangement:
        return cls(*_parse_colored(text))

    def __str__(self) -> str:
        return _render_colored(self.base, self.color_map)


def big_phi(c: ColoredPerm) -> Permutation:
    """Hop the red double descents, then forget colors."""
    return phi_s(c.base, c.red())


def big_phi_inv(p: Permutation) -> ColoredPerm:
    classes = classify_linear(p)
    dasc = _letters_with(p, classes, LetterClass.DOUBLE_ASCENT)
    ddes = _letters_with(p, classes, LetterClass.DOUBLE_DESCENT)
    q = phi_s(p, dasc)
    colors = {a: Color.BLUE for a in ddes}
    colors.update({a: Color.RED for a in dasc})
    return ColoredPerm(q, colors)


def colored_perms(n: int) -> Iterator[ColoredPerm]:
    for p in enumerate_perms(n):
        classes = classify_linear(p)
        if LetterClass.DOUBLE_ASCENT in classes:
            continue
        ddes = sorted(_letters_with(p, classes, LetterClass.DOUBLE_DESCENT))
        for choice in itertools.product(Color, repeat=len(ddes)):
            yield ColoredPerm(p, dict(zip(ddes, choice)))


# -- Foata maps -----------------------------------------------------------


def _split_at(word: tuple, leaders: list[int]) -> list[tuple]:
    heads = set(leaders)
    cycles: list[list[int]] = []
    for a in word:
        if a in heads:
            cycles.append([a])
        else:
            cycles[-1].append(a)
    return [tuple(c) for c in cycles]


def foata_o(p: Permutation) -> Permutation:
    """Write ``p`` in canonical cycle form and erase the parentheses."""
    return Permutation(tuple(a for c in p.cycles() for a in c))


def foata_o_inv(word: Permutation) -> Permutation:
    """Recover the cycles by cutting before each left-to-right maximum."""
    w = word.word
    return Permutation.from_cycles(_split_at(w, left_to_right_maxima(w)))


def foata_o_prime(p: Permutation) -> Permutation:
    """Smallest-first convention: cycles start at their minima, ordered by decreasing minima."""
    return Permutation(tuple(a for c in p.cycles(smallest_first=True) for a in c))


def foata_o_prime_inv(word: Permutation) -> Permutation:
    w = word.word
    return Permutation.from_cycles(_split_at(w, left_to_right_minima(w)))


def cycle_string(p: Permutation, smallest_first: bool = False) -> str:
    return render_cycles(p.cycles(smallest_first))


# -- cyclic valley-hopping ------------------------------------------------


def theta_s(d: Permutation, letters: Iterable[int]) -> Permutation:
    if not d.is_derangement():
        raise ValueError(f"cyclic valley-hopping is defined on derangements; {d} has a fixed point")
    word = foata_o(d).word
    for k in sorted(set(letters)):
        _check_letter(d, k)
        word = _hop(word, k, left=0)
    return foata_o_inv(Permutation(word))


def theta_k(d: Permutation, k: int) -> Permutation:
    return theta_s(d, [k])


def big_phi_ring(c: ColoredDerangement) -> Permutation:
    return theta_s(c.base, c.red())


def big_phi_ring_inv(d: Permutation) -> ColoredDerangement:
    classes = classify_cyclic(d)
    cdasc = _letters_with(d, classes, LetterClass.DOUBLE_ASCENT)
    cddes = _letters_with(d, classes, LetterClass.DOUBLE_DESCENT)
    q = theta_s(d, cdasc)
    colors = {a: Color.BLUE for a in cddes}
    colors.update({a: Color.RED for a in cdasc})
    return ColoredDerangement(q, colors)


def colored_derangements(n: int) -> Iterator[ColoredDerangement]:
    for d in enumerate_perms(n, "derangements"):
        classes = classify_cyclic(d)
        if LetterClass.DOUBLE_ASCENT in classes:
            continue
        cddes = sorted(_letters_with(d, classes, LetterClass.DOUBLE_DESCENT))
        for choice in itertools.product(Color, repeat=len(cddes)):
            yield ColoredDerangement(d, dict(zip(cddes, choice)))

"""Barred tiling objects and the sign-reversing involution on them.

An object is an ordered partition of ``[n]`` into decreasing blocks, written
one after another with bars between blocks, plus a monomino/domino tiling of
each block's cells.  In ``linear`` mode the first block ``B_0`` sits after a
virtual infinity: its cells are all its letters except the last, and it may
have any positive size.  Every other block (all blocks in ``cyclic`` mode)
has size at least two and its cells are its letters minus the first and the
last.

Weight: ``s`` per block other than ``B_0``, ``t`` per monomino, ``-s`` per
domino.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from ..cheb import Piece, Tiling, cheb_u, tilings
from ..exact import MPoly, coerce
from ..hop import Color, ColoredDerangement, ColoredPerm
from ..perms import Permutation, left_to_right_maxima

__all__ = [
    "MODES",
    "BarTilingObject",
    "bar_objects",
    "involution_step",
    "fixed_points",
    "fixed_point_image",
    "partition_sum",
]

MODES = ("linear", "cyclic")
S = MPoly.var("s")
T = MPoly.var("t")


@dataclass(frozen=True)
class BarTilingObject:
    mode: str
    blocks: tuple
    tilings: tuple

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if len(self.blocks) != len(self.tilings):
            raise ValueError("need exactly one tiling per block")
        letters = sorted(a for b in self.blocks for a in b)
        if letters != list(range(1, len(letters) + 1)):
            raise ValueError("blocks must partition [n]")
        for i, (block, tiling) in enumerate(zip(self.blocks, self.tilings)):
            if any(a <= b for a, b in zip(block, block[1:])):
                raise ValueError(f"block {block} is not strictly decreasing")
            if len(block) < self._min_size(i):
                raise ValueError(f"block {block} is too small")
            if tiling.length != self._cell_count(i):
                raise ValueError(f"tiling {tiling} does not fit block {block}")

    def _leading(self, i: int) -> bool:
        return self.mode == "linear" and i == 0

    def _min_size(self, i: int) -> int:
        return 1 if self._leading(i) else 2

    def _cell_count(self, i: int) -> int:
        size = len(self.blocks[i])
        return size - 1 if self._leading(i) else size - 2

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def word(self) -> tuple:
        return tuple(a for b in self.blocks for a in b)

    def _offsets(self) -> list[int]:
        return list(itertools.accumulate([0] + [len(b) for b in self.blocks]))[:-1]

    def _domino_starts(self) -> dict[int, int]:
        """Word position of each domino's left cell -> block index."""
        out = {}
        for i, (off, tiling) in enumerate(zip(self._offsets(), self.tilings)):
            pos = off if self._leading(i) else off + 1
            for piece in tiling.pieces:
                if piece is Piece.DOMINO:
                    out[pos] = i
                pos += piece.length
        return out

    def _bar_after(self) -> dict[int, int]:
        """Word position directly before a bar -> index of the block it ends."""
        return {off + len(b) - 1: i for i, (off, b) in enumerate(zip(self._offsets(), self.blocks))
                if i < len(self.blocks) - 1}

    def block_weight_count(self) -> int:
        return len(self.blocks) - (1 if self.mode == "linear" else 0)

    def weight(self, s_arg=S, t_arg=T) -> MPoly:
        s_arg = coerce(s_arg)
        out = s_arg ** self.block_weight_count()
        for tiling in self.tilings:
            out = out * tiling.weight(s_arg, t_arg)
        return out

    @property
    def sign(self) -> int:
        return (-1) ** sum(t.dominoes for t in self.tilings)

    def is_fixed(self) -> bool:
        if any(t.dominoes for t in self.tilings):
            return False
        w = self.word
        return all(w[i] < w[i + 1] for i in self._bar_after())

    def __str__(self) -> str:
        parts = ["oo"] if self.mode == "linear" else []
        for i, (block, tiling) in enumerate(zip(self.blocks, self.tilings)):
            if i:
                parts.append("|")
            cells = tiling.cells()
            start = 0 if self._leading(i) else 1
            skip = False
            for j, a in enumerate(block):
                c = j - start
                if 0 <= c < len(cells):
                    piece = cells[c]
                    if piece is Piece.DOMINO:
                        if not skip:
                            parts.append(f"[{a}")
                            skip = True
                        else:
                            parts.append(f"{a}]")
                            skip = False
                        continue
                    parts.append(f"{a}{piece.value}")
                else:
                    parts.append(str(a))
        return " ".join(parts)


def involution_step(obj: BarTilingObject) -> BarTilingObject:
    """Toggle the first domino / descending bar, scanning left to right."""
    w = obj.word
    dominoes = obj._domino_starts()
    bars = obj._bar_after()
    offsets = obj._offsets()
    for i in range(len(w) - 1):
        has_domino = i in dominoes
        has_descent_bar = i in bars and w[i] > w[i + 1]
        assert not (has_domino and has_descent_bar), "a domino cannot straddle a bar"
        if has_domino:
            b = dominoes[i]
            block, pieces = obj.blocks[b], obj.tilings[b].pieces
            cut = i - offsets[b] + 1
            k = _piece_index_at(obj, b, i)
            blocks = obj.blocks[:b] + (block[:cut], block[cut:]) + obj.blocks[b + 1 :]
            tils = obj.tilings[:b] + (Tiling(pieces[:k]), Tiling(pieces[k + 1 :])) + obj.tilings[b + 1 :]
            return BarTilingObject(obj.mode, blocks, tils)
        if has_descent_bar:
            b = bars[i]
            merged = obj.blocks[b] + obj.blocks[b + 1]
            pieces = obj.tilings[b].pieces + (Piece.DOMINO,) + obj.tilings[b + 1].pieces
            blocks = obj.blocks[:b] + (merged,) + obj.blocks[b + 2 :]
            tils = obj.tilings[:b] + (Tiling(pieces),) + obj.tilings[b + 2 :]
            return BarTilingObject(obj.mode, blocks, tils)
    raise ValueError(f"{obj} is a fixed point of the involution")


def _piece_index_at(obj: BarTilingObject, b: int, pos: int) -> int:
    p = obj._offsets()[b] + (0 if obj._leading(b) else 1)
    for k, piece in enumerate(obj.tilings[b].pieces):
        if p == pos:
            return k
        p += piece.length
    raise AssertionError("no piece starts at the given position")


def _ordered_partitions(letters: tuple, min_first: int, min_rest: int) -> Iterator[tuple]:
    if not letters:
        yield ()
        return
    for size in range(max(min_first, 1), len(letters) + 1):
        for first in itertools.combinations(letters, size):
            rest = tuple(a for a in letters if a not in first)
            for tail in _ordered_partitions(rest, min_rest, min_rest):
                yield (tuple(sorted(first, reverse=True)),) + tail


def bar_objects(n: int, mode: str) -> Iterator[BarTilingObject]:
    """Every object of size ``n`` in the given mode."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    letters = tuple(range(1, n + 1))
    if mode == "linear":
        if n == 0:
            return
        parts = _ordered_partitions(letters, 1, 2)
    else:
        parts = _ordered_partitions(letters, 2, 2)
    for blocks in parts:
        lead = mode == "linear"
        sizes = [len(b) - (1 if lead and i == 0 else 2) for i, b in enumerate(blocks)]
        for tils in itertools.product(*(list(tilings(m)) for m in sizes)):
            yield BarTilingObject(mode, blocks, tuple(tils))


def fixed_points(n: int, mode: str) -> Iterator[BarTilingObject]:
    return (o for o in bar_objects(n, mode) if o.is_fixed())


def _cell_colors(obj: BarTilingObject) -> dict:
    colors = {}
    for i, (block, tiling) in enumerate(zip(obj.blocks, obj.tilings)):
        start = 0 if obj._leading(i) else 1
        for j, piece in enumerate(tiling.cells()):
            colors[block[start + j]] = Color.RED if piece is Piece.RED else Color.BLUE
    return colors


def fixed_point_image(obj: BarTilingObject):
    """The colored permutation (linear) or colored derangement (cyclic) of a fixed point."""
    if not obj.is_fixed():
        raise ValueError(f"{obj} is not a fixed point")
    colors = _cell_colors(obj)
    if obj.mode == "linear":
        return ColoredPerm(Permutation(obj.word), colors)
    # merge blocks that do not start with a left-to-right maximum into cycles
    heads = set(left_to_right_maxima(obj.word))
    cycles: list[list[int]] = []
    for block in obj.blocks:
        if block[0] in heads:
            cycles.append(list(block))
        else:
            cycles[-1].extend(block)
    return ColoredDerangement(Permutation.from_cycles(cycles), colors)


def _compositions(n: int, first_min: int, rest_min: int, with_first: bool) -> Iterator[tuple]:
    def rest(m: int) -> Iterator[tuple]:
        if m == 0:
            yield ()
            return
        for size in range(rest_min, m + 1):
            for tail in rest(m - size):
                yield (size,) + tail

    if not with_first:
        yield from rest(n)
        return
    for size in range(first_min, n + 1):
        for tail in rest(n - size):
            yield (size,) + tail


def partition_sum(n: int, mode: str, s_arg=S, t_arg=T) -> MPoly:
    """Signed sum over ordered set partitions, straight from ``U_n``.

    linear: ``sum_k s^k sum_B U_{|B_0|-1} prod_i U_{|B_i|-2}``;
    cyclic: the same without ``B_0``.  Set partitions with a given block-size
    sequence are counted by a multinomial coefficient.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    s_arg, t_arg = coerce(s_arg), coerce(t_arg)
    if mode == "linear" and n == 0:
        return MPoly()
    total = MPoly()
    lead = mode == "linear"
    for sizes in _compositions(n, 1, 2, lead):
        ways = math.factorial(n)
        for m in sizes:
            ways //= math.factorial(m)
        term = MPoly.const(ways)
        for i, m in enumerate(sizes):
            if lead and i == 0:
                term = term * cheb_u(m - 1, s_arg, t_arg)
            else:
                term = term * s_arg * cheb_u(m - 2, s_arg, t_arg)
        total = total + term
    return total

"""Reading OEIS-style b-files and comparing them with computed terms."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

__all__ = ["parse_bfile", "read_bfile", "BfileComparison", "compare_terms"]


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """``(n, a(n))`` pairs; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValueError(f"line {lineno}: expected 'n a(n)', got {raw!r}")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer entry in {raw!r}") from None
    return out


def read_bfile(path: str | Path) -> list[tuple[int, int]]:
    return parse_bfile(Path(path).read_text())


@dataclass
class BfileComparison:
    compared: int
    skipped: int
    mismatches: list  # (file index, artifact index, file value, computed value)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_terms(
    entries: list[tuple[int, int]], first_index: int, terms: list[int], offset: int = 0
) -> BfileComparison:
    """Compare file entry ``m`` with the computed term of index ``m + offset``.

    ``terms[i]`` has index ``first_index + i``; entries outside the computed
    range are counted as skipped.
    """
    compared = skipped = 0
    mismatches = []
    for m, value in entries:
        k = m + offset
        i = k - first_index
        if not 0 <= i < len(terms):
            skipped += 1
            continue
        compared += 1
        if terms[i] != value:
            mismatches.append((m, k, value, terms[i]))
    return BfileComparison(compared, skipped, mismatches)

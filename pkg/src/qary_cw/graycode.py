"""(r', q)-Gray codes over lexicographically ordered q-ary words.

The conversion keeps a running sum of the Gray symbols already emitted;
when that sum is odd the next symbol is complemented (``q - 1 - d``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .alphabet import Sequence


@dataclass(frozen=True)
class GrayWord:
    word: Sequence
    source: Optional[Sequence] = None

    def __post_init__(self):
        if self.source is not None and (
            self.source.q != self.word.q or len(self.source) != len(self.word)
        ):
            raise ValueError("Gray word and source must share q and length")


def gray_encode(d: Sequence) -> Sequence:
    q = d.q
    g = []
    running = 0
    for di in d:
        gi = di if running % 2 == 0 else q - 1 - di
        g.append(gi)
        running += gi
    return Sequence(g, q)


def gray_decode(g: Sequence) -> Sequence:
    q = g.q
    d = []
    running = 0
    for gi in g:
        d.append(gi if running % 2 == 0 else q - 1 - gi)
        running += gi
    return Sequence(d, q)


def index_to_word(z: int, length: int, q: int) -> Sequence:
    """Base-``q`` digits of ``z``, most significant first, padded to ``length``."""
    if not 0 <= z < q**length:
        raise ValueError(f"z={z} outside [0, {q**length - 1}] for length {length}")
    digits = [0] * length
    for i in range(length - 1, -1, -1):
        z, digits[i] = divmod(z, q)
    return Sequence(digits, q)


def word_to_index(d: Sequence) -> int:
    z = 0
    for di in d:
        z = z * d.q + di
    return z


def gray_table(length: int, q: int) -> list[GrayWord]:
    """All ``q**length`` Gray words in index order."""
    out = []
    for z in range(q**length):
        d = index_to_word(z, length, q)
        out.append(GrayWord(gray_encode(d), d))
    return out

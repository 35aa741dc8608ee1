"""q-ary symbol sequences and the modular arithmetic used on them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence as _Seq


@dataclass(frozen=True)
class Sequence:
    """An immutable word over the alphabet ``{0, ..., q - 1}``.

    The alphabet size travels with the word so that operations mixing
    alphabets fail instead of wrapping silently.
    """

    symbols: tuple[int, ...]
    q: int

    def __init__(self, symbols: Iterable[int], q: int):
        symbols = tuple(int(s) for s in symbols)
        if q < 2:
            raise ValueError(f"alphabet size must be >= 2, got {q}")
        for s in symbols:
            if not 0 <= s < q:
                raise ValueError(f"symbol {s} out of range for q={q}")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "q", q)

    @classmethod
    def zeros(cls, length: int, q: int) -> "Sequence":
        return cls((0,) * length, q)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Sequence(self.symbols[item], self.q)
        return self.symbols[item]

    def __add__(self, other: "Sequence") -> "Sequence":
        # concatenation, not modular addition
        if not isinstance(other, Sequence):
            return NotImplemented
        _check_alphabet(self, other)
        return Sequence(self.symbols + other.symbols, self.q)

    def __str__(self) -> str:
        return format_sequence(self)

    @property
    def weight(self) -> int:
        return sum(self.symbols)


def _check_alphabet(a: Sequence, b: Sequence) -> None:
    if a.q != b.q:
        raise ValueError(f"alphabet mismatch: q={a.q} vs q={b.q}")


def _check_dims(a: Sequence, b: Sequence) -> None:
    _check_alphabet(a, b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")


def weight(s: Sequence) -> int:
    """Sum of the symbols of ``s``."""
    return sum(s.symbols)


def add_mod(a: Sequence, b: Sequence) -> Sequence:
    """Symbol-wise ``(a_i + b_i) mod q``."""
    _check_dims(a, b)
    q = a.q
    return Sequence(((x + y) % q for x, y in zip(a, b)), q)


def sub_mod(a: Sequence, b: Sequence) -> Sequence:
    """Symbol-wise ``(a_i - b_i) mod q``; undoes :func:`add_mod`."""
    _check_dims(a, b)
    q = a.q
    return Sequence(((x - y) % q for x, y in zip(a, b)), q)


def balancing_value(n: int, q: int) -> Fraction:
    """Weight ``n(q-1)/2`` of a balanced length-``n`` word, as an exact rational."""
    if n < 0 or q < 2:
        raise ValueError(f"need n >= 0 and q >= 2, got n={n}, q={q}")
    return Fraction(n * (q - 1), 2)


def parse_sequence(text: str, q: int) -> Sequence:
    """Parse the text form of a word.

    For ``q <= 10`` the form is a contiguous digit string ("2102"); above
    that it is comma-separated decimals ("11,0,3"). Commas are also
    accepted for small alphabets.
    """
    text = text.strip()
    if not text:
        return Sequence((), q)
    if "," in text or q > 10:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        symbols = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"cannot parse {text!r} as a q-ary word") from None
    return Sequence(symbols, q)


def format_sequence(s: Sequence) -> str:
    if s.q <= 10:
        return "".join(str(x) for x in s.symbols)
    return ",".join(str(x) for x in s.symbols)


def seq(symbols: str | _Seq[int], q: int) -> Sequence:
    """Shorthand: build a word from its text form or a list of ints."""
    if isinstance(symbols, str):
        return parse_sequence(symbols, q)
    return Sequence(symbols, q)

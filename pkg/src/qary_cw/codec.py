"""Constant-weight encoder and decoder built on weighting sequences and Gray prefixes.

A length-``k`` information word ``x`` (``k = q**t``) is mapped to
``c = [u | g | y]`` where ``y = x + b(z)`` (mod q), ``g`` is the Gray word of
the index ``z`` and ``u`` is a length-``e`` vector that tops the total weight up
to exactly ``W``. Decoding ignores ``u`` entirely.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .alphabet import Sequence, sub_mod, add_mod
from .errors import (
    InvalidPrefix,
    UnsupportedLength,
    WeightOutsideBoundsWarning,
    WeightUnreachable,
)
from .graycode import gray_decode, gray_encode, index_to_word, word_to_index
from .weighting import index_to_sp, weighting_sequence

FORMULAS = ("eq3", "eq5", "thm2")


def _log_exact(k: int, q: int) -> Optional[int]:
    t, m = 0, 1
    while m < k:
        m *= q
        t += 1
    return t if m == k else None


@dataclass(frozen=True)
class CodecParams:
    q: int
    t: int
    k: int
    r_prime: int
    e: int
    n: int
    W: Optional[int] = None

    @property
    def r(self) -> int:
        """Total redundancy ``n - k = log_q(k) + e + 1``."""
        return self.r_prime + self.e

    def with_weight(self, W: int) -> "CodecParams":
        return derive_params(self.q, self.k, self.e, W)


def derive_params(q: int, k: int, e: int = 1, W: Optional[int] = None) -> CodecParams:
    """Validate ``(q, k, e)`` and compute the derived lengths.

    ``W`` is optional (decoding does not need it). A ``W`` outside the
    ``thm2`` interval only triggers :class:`WeightOutsideBoundsWarning`; the
    hard failure happens at encode time.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    if k < 1:
        raise UnsupportedLength(f"k must be a positive power of q={q}, got {k}")
    t = _log_exact(k, q)
    if t is None or t < 1:
        raise UnsupportedLength(f"k={k} is not a positive power of q={q}")
    r_prime = t + 1
    params = CodecParams(q=q, t=t, k=k, r_prime=r_prime, e=e, n=k + r_prime + e, W=W)
    if W is not None:
        if not 0 <= W <= params.n * (q - 1):
            raise ValueError(f"W={W} outside [0, {params.n * (q - 1)}]")
        b = weight_bounds(params, "thm2")
        if not b.lower <= W <= b.upper:
            warnings.warn(
                f"W={W} outside [{b.lower}, {b.upper}] for q={q}, k={k}, e={e}",
                WeightOutsideBoundsWarning,
                stacklevel=2,
            )
    return params


@dataclass(frozen=True)
class WeightBounds:
    lower: int
    upper: Fraction
    formula_tag: str

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")

    def __contains__(self, W: int) -> bool:
        return self.lower <= W <= self.upper


def weight_bounds(params: CodecParams, formula_tag: str = "thm2") -> WeightBounds:
    """Closed-form weight interval, or the exhaustive one for ``"oracle"``.

    ``eq3`` is the single-digit interval and ignores ``e``; ``eq5`` and
    ``thm2`` differ by one half-step of ``q - 1`` on the upper end.
    """
    q, k, rp, e = params.q, params.k, params.r_prime, params.e
    if formula_tag == "oracle":
        from .oracle import guaranteed_weight_range

        rep = guaranteed_weight_range(q, k, e)
        if not rep.guaranteed:
            raise WeightUnreachable(f"no weight is reachable for every input (q={q}, k={k}, e={e})")
        return WeightBounds(min(rep.guaranteed), Fraction(max(rep.guaranteed)), "oracle")

    # k = q**t makes (k - 2)(q - 1) even, so the lower end is integral
    lower = (k - 2) * (q - 1) // 2
    spread = {"eq3": k + 2 * rp + 4, "eq5": k + 2 * rp + 2 * e + 2, "thm2": k + 2 * rp + 2 * e + 1}
    if formula_tag not in spread:
        raise ValueError(f"unknown formula tag {formula_tag!r}")
    return WeightBounds(lower, Fraction(spread[formula_tag] * (q - 1), 2), formula_tag)


def fill_vector(total: int, length: int, q: int) -> Sequence:
    """Greedy left-filled vector of the given weight (``22`` before ``13``)."""
    if not 0 <= total <= length * (q - 1):
        raise ValueError(f"weight {total} does not fit in {length} symbols of q={q}")
    out = []
    for _ in range(length):
        s = min(q - 1, total)
        out.append(s)
        total -= s
    return Sequence(out, q)


def _check_input(x: Sequence, params: CodecParams) -> None:
    if x.q != params.q:
        raise ValueError(f"alphabet mismatch: word has q={x.q}, params q={params.q}")
    if len(x) != params.k:
        raise ValueError(f"information word has length {len(x)}, expected k={params.k}")


def _require_weight(params: CodecParams) -> int:
    if params.W is None:
        raise ValueError("target weight W is required for encoding")
    return params.W


def _prefix(z: int, params: CodecParams) -> Sequence:
    return gray_encode(index_to_word(z, params.r_prime, params.q))


class Encoded(NamedTuple):
    c: Sequence
    z: int


def encode(x: Sequence, params: CodecParams) -> Encoded:
    """Encode ``x`` into a weight-``W`` word, taking the smallest workable ``z``."""
    _check_input(x, params)
    W = _require_weight(params)
    q, k = params.q, params.k
    room = params.e * (q - 1)
    for z in range(k * q):
        y = add_mod(x, weighting_sequence(index_to_sp(z, k, q)))
        g = _prefix(z, params)
        deficit = W - (y.weight + g.weight)
        if 0 <= deficit <= room:
            u = fill_vector(deficit, params.e, q)
            return Encoded(u + g + y, z)
    raise WeightUnreachable(
        f"no z in [0, {k * q - 1}] reaches W={W} for x={x}; "
        "see the 'range' command for the weights every input can reach"
    )


@dataclass(frozen=True)
class TraceRow:
    z: int
    b: Sequence
    y: Sequence
    g: Sequence
    u: Sequence
    c: Sequence
    weight: int
    flagged: bool


@dataclass(frozen=True)
class EncodingTrace:
    params: CodecParams
    x: Sequence
    rows: tuple[TraceRow, ...] = field(default_factory=tuple)

    @property
    def flagged(self) -> list[TraceRow]:
        return [r for r in self.rows if r.flagged]

    @property
    def chosen_z(self) -> Optional[int]:
        hits = self.flagged
        return hits[0].z if hits else None


def enumerate_encodings(x: Sequence, params: CodecParams) -> EncodingTrace:
    """Every one of the ``kq`` candidate codewords, flagged where the weight is ``W``.

    Rows whose deficit does not fit in ``u`` get ``u = 0``, so their weight
    differs from ``W``.
    """
    _check_input(x, params)
    W = _require_weight(params)
    q, k, e = params.q, params.k, params.e
    rows = []
    for z in range(k * q):
        b = weighting_sequence(index_to_sp(z, k, q))
        y = add_mod(x, b)
        g = _prefix(z, params)
        deficit = W - (y.weight + g.weight)
        if 0 <= deficit <= e * (q - 1):
            u = fill_vector(deficit, e, q)
        else:
            u = Sequence.zeros(e, q)
        c = u + g + y
        rows.append(TraceRow(z, b, y, g, u, c, c.weight, c.weight == W))
    return EncodingTrace(params, x, tuple(rows))


class DecodeSteps(NamedTuple):
    u: Sequence
    g: Sequence
    d: Sequence
    z: int
    s: int
    p: int
    b: Sequence
    y: Sequence
    x: Sequence


def decode_steps(c: Sequence, params: CodecParams) -> DecodeSteps:
    """Decode and keep every intermediate value."""
    if c.q != params.q:
        raise ValueError(f"alphabet mismatch: word has q={c.q}, params q={params.q}")
    if len(c) != params.n:
        raise ValueError(f"codeword has length {len(c)}, expected n={params.n}")
    e, rp = params.e, params.r_prime
    u, g, y = c[:e], c[e : e + rp], c[e + rp :]
    d = gray_decode(g)
    z = word_to_index(d)
    if z >= params.k * params.q:
        raise InvalidPrefix(f"prefix {g} decodes to z={z} >= kq={params.k * params.q}")
    idx = index_to_sp(z, params.k, params.q)
    b = weighting_sequence(idx)
    return DecodeSteps(u, g, d, z, idx.s, idx.p, b, y, sub_mod(y, b))


def decode(c: Sequence, params: CodecParams) -> Sequence:
    return decode_steps(c, params).x

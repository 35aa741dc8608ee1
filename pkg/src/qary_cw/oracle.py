"""Brute-force ground truth for the codec.

Everything here is exhaustive over small parameter spaces: achievable
weights per information word, encode/decode round trips over the whole
input space, and exact counts of constant-weight words.

The range sweep recomputes payload weights with array arithmetic instead
of calling :func:`qary_cw.codec.encode`, so it checks the encoder rather
than restating it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

import numpy as np

from . import codec
from .alphabet import Sequence, balancing_value
from .errors import ExhaustionCapExceeded, WeightUnreachable
from .graycode import gray_encode, index_to_word

DEFAULT_CAP = 10**7


def cw_cardinality(n: int, W: int, q: int) -> int:
    """Number of length-``n`` words over ``[0, q-1]`` with symbol sum ``W``.

    Counts bounded compositions one position at a time; Python ints keep
    the result exact for any size.
    """
    if n < 0 or q < 2:
        raise ValueError(f"need n >= 0 and q >= 2, got n={n}, q={q}")
    if not 0 <= W <= n * (q - 1):
        return 0
    counts = [1] + [0] * W
    for _ in range(n):
        # prefix sums turn the q-term window sum into O(1) per entry
        prefix = [0]
        for c in counts:
            prefix.append(prefix[-1] + c)
        counts = [prefix[w + 1] - prefix[max(0, w - q + 1)] for w in range(W + 1)]
    return counts[W]


def naive_cardinality(n: int, W: int, q: int, cap: int = 5 * 10**7) -> int:
    """Count weight-``W`` words by materialising the weight of every word."""
    if q**n > cap:
        raise ExhaustionCapExceeded(f"q**n = {q ** n} words exceeds cap {cap}")
    sums = np.zeros(1, dtype=np.int64)
    digits = np.arange(q, dtype=np.int64)
    for _ in range(n):
        sums = np.add.outer(sums, digits).ravel()
    return int(np.count_nonzero(sums == W))


@dataclass(frozen=True)
class CardinalityReport:
    n: int
    W: int
    q: int
    k: int
    n1: int
    n2: int

    @property
    def feasible(self) -> bool:
        return self.n1 >= self.n2


def cardinality_report(n: int, W: int, q: int, k: int) -> CardinalityReport:
    return CardinalityReport(n, W, q, k, cw_cardinality(n, W, q), q**k)


WeightPolicy = Union[str, Callable[[int, int], int]]


def _round_half_up(v: Fraction) -> int:
    return int(v + Fraction(1, 2)) if v >= 0 else -int(-v + Fraction(1, 2))


def policy_weight(n: int, q: int, policy: WeightPolicy = "balanced") -> int:
    """Target weight for length ``n`` under a named policy.

    ``"balanced"`` is the nearest integer to ``n(q-1)/2`` (halves round up),
    ``"low"`` subtracts ``q - 1`` and ``"high"`` adds ``q`` before rounding.
    A callable ``policy(n, q)`` is used as is.
    """
    if callable(policy):
        return policy(n, q)
    beta = balancing_value(n, q)
    offsets = {"balanced": 0, "low": -(q - 1), "high": q}
    if policy not in offsets:
        raise ValueError(f"unknown weight policy {policy!r}")
    return _round_half_up(beta + offsets[policy])


def min_redundancy_floor(
    k: int, q: int, policy: WeightPolicy = "balanced", r_max: int = 256
) -> int:
    """Smallest ``r`` with at least ``q**k`` weight-``W`` words of length ``k + r``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    need = q**k
    for r in range(r_max + 1):
        n = k + r
        if cw_cardinality(n, policy_weight(n, q, policy), q) >= need:
            return r
    raise ValueError(f"no r <= {r_max} satisfies the counting bound")


def _check_cap(q: int, k: int, cap: int) -> None:
    evaluations = q**k * k * q
    if evaluations > cap:
        raise ExhaustionCapExceeded(
            f"{q}**{k} inputs x {k * q} indices = {evaluations} evaluations exceeds cap {cap}"
        )


def _all_words(k: int, q: int) -> np.ndarray:
    idx = np.arange(q**k, dtype=np.int64)
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def _weighting_matrix(k: int, q: int) -> np.ndarray:
    z = np.arange(k * q)
    s, p = np.divmod(z, k)
    pos = np.arange(k)
    return np.where(pos[None, :] < p[:, None], ((s + 1) % q)[:, None], s[:, None])


def _prefix_weights(k: int, q: int, r_prime: int) -> np.ndarray:
    return np.array([gray_encode(index_to_word(z, r_prime, q)).weight for z in range(k * q)])


def _achievable_mask(X: np.ndarray, q: int, k: int, e: int) -> np.ndarray:
    """Boolean ``(len(X), n(q-1)+1)`` mask of reachable weights per input row."""
    t = codec.derive_params(q, k, e).t
    n = k + t + 1 + e
    B = _weighting_matrix(k, q)
    gw = _prefix_weights(k, q, t + 1)
    mask = np.zeros((len(X), n * (q - 1) + 1), dtype=bool)
    rows = np.arange(len(X))[:, None]
    chunk = max(1, 2**20 // (k * q * k))
    for start in range(0, len(X), chunk):
        part = X[start : start + chunk]
        yw = ((part[:, None, :] + B[None, :, :]) % q).sum(axis=2)
        base = yw + gw[None, :]
        for j in range(e * (q - 1) + 1):
            mask[rows[start : start + len(part)], base + j] = True
    return mask


def achievable_weights(x: Sequence, e: int) -> frozenset[int]:
    """All ``W`` for which ``x`` has at least one weight-``W`` codeword."""
    X = np.array([list(x.symbols)], dtype=np.int64)
    mask = _achievable_mask(X, x.q, len(x), e)
    return frozenset(int(w) for w in np.flatnonzero(mask[0]))


@dataclass(frozen=True)
class RangeReport:
    q: int
    k: int
    e: int
    guaranteed: frozenset[int]
    achievable_union: frozenset[int]
    bounds: dict = field(default_factory=dict)

    @property
    def interval(self) -> Optional[tuple[int, int]]:
        if not self.guaranteed:
            return None
        return min(self.guaranteed), max(self.guaranteed)

    @property
    def contiguous(self) -> bool:
        iv = self.interval
        return iv is not None and len(self.guaranteed) == iv[1] - iv[0] + 1


def guaranteed_weight_range(q: int, k: int, e: int, cap: int = DEFAULT_CAP) -> RangeReport:
    """Weights reachable for every input (intersection) and for some input (union)."""
    params = codec.derive_params(q, k, e)
    _check_cap(q, k, cap)
    mask = _achievable_mask(_all_words(k, q), q, k, e)
    guaranteed = frozenset(int(w) for w in np.flatnonzero(mask.all(axis=0)))
    union = frozenset(int(w) for w in np.flatnonzero(mask.any(axis=0)))
    bounds = {tag: codec.weight_bounds(params, tag) for tag in codec.FORMULAS}
    return RangeReport(q, k, e, guaranteed, union, bounds)


@dataclass(frozen=True)
class BoundAudit:
    """Guaranteed range versus one closed-form interval."""

    formula_tag: str
    lower: int
    upper: Fraction
    oracle_min: int
    oracle_max: int

    @property
    def upper_covers_oracle(self) -> bool:
        return self.upper >= self.oracle_max

    @property
    def lower_slack(self) -> int:
        # positive: the formula promises weights the oracle cannot guarantee
        return self.oracle_min - self.lower

    @property
    def upper_slack(self) -> Fraction:
        return self.upper - self.oracle_max


def audit_bounds(report: RangeReport) -> list[BoundAudit]:
    if report.interval is None:
        raise WeightUnreachable(f"empty guaranteed range for q={report.q}, k={report.k}, e={report.e}")
    lo, hi = report.interval
    return [
        BoundAudit(tag, b.lower, b.upper, lo, hi) for tag, b in report.bounds.items()
    ]


@dataclass
class RoundTripReport:
    q: int
    k: int
    e: int
    W: int
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def exhaustive_roundtrip(q: int, k: int, e: int, W: int, cap: int = DEFAULT_CAP) -> RoundTripReport:
    """Encode and decode every length-``k`` input; failures land in ``violations``."""
    params = codec.derive_params(q, k, e, W)
    _check_cap(q, k, cap)
    report = RoundTripReport(q, k, e, W)
    for row in _all_words(k, q):
        x = Sequence(row.tolist(), q)
        report.checked += 1
        try:
            c, z = codec.encode(x, params)
        except WeightUnreachable as exc:
            report.violations.append((str(x), f"unreachable: {exc}"))
            continue
        if c.weight != W:
            report.violations.append((str(x), f"weight {c.weight} != {W} (z={z})"))
        back = codec.decode(c, params)
        if back != x:
            report.violations.append((str(x), f"decoded to {back} (z={z})"))
    return report

"""Weighting sequences ``b(s, p)`` and the ``kq`` candidate outputs they produce."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .alphabet import Sequence, add_mod


@dataclass(frozen=True)
class WeightingIndex:
    """A weighting sequence identified by ``z = s*k + p``."""

    z: int
    s: int
    p: int
    k: int
    q: int

    def __post_init__(self):
        if self.k < 1 or self.q < 2:
            raise ValueError(f"need k >= 1 and q >= 2, got k={self.k}, q={self.q}")
        if not (0 <= self.s < self.q and 0 <= self.p < self.k):
            raise ValueError(
                f"(s={self.s}, p={self.p}) outside [0,{self.q - 1}] x [0,{self.k - 1}]"
            )
        if self.z != self.s * self.k + self.p:
            raise ValueError(f"z={self.z} != s*k + p = {self.s * self.k + self.p}")

    @classmethod
    def from_sp(cls, s: int, p: int, k: int, q: int) -> "WeightingIndex":
        return cls(s * k + p, s, p, k, q)


def index_to_sp(z: int, k: int, q: int) -> WeightingIndex:
    if not 0 <= z < k * q:
        raise ValueError(f"z={z} outside [0, {k * q - 1}]")
    s, p = divmod(z, k)
    return WeightingIndex(z, s, p, k, q)


def weighting_sequence(idx: WeightingIndex) -> Sequence:
    """``b(s, p)``: ``(s+1) mod q`` on the first ``p`` positions, ``s`` after."""
    hi = (idx.s + 1) % idx.q
    return Sequence([hi] * idx.p + [idx.s] * (idx.k - idx.p), idx.q)


class WeightedOutput(NamedTuple):
    z: int
    y: Sequence
    weight: int


def all_weighted_outputs(x: Sequence) -> list[WeightedOutput]:
    """``y = x + b(z)`` (mod q) for every ``z`` in ascending order.

    ``k`` and ``q`` are read off ``x``; no power-of-``q`` constraint applies
    here.
    """
    k, q = len(x), x.q
    if k < 1:
        raise ValueError("information word must be non-empty")
    out = []
    for z in range(k * q):
        y = add_mod(x, weighting_sequence(index_to_sp(z, k, q)))
        out.append(WeightedOutput(z, y, y.weight))
    return out


def weight_profile(words: np.ndarray, q: int) -> np.ndarray:
    """Weights of ``x + b(z)`` for a batch of inputs.

    ``words`` has shape ``(N, k)``; the result has shape ``(N, kq)`` with
    column ``z`` matching :func:`all_weighted_outputs`.
    """
    words = np.asarray(words, dtype=np.int64)
    k = words.shape[1]
    B = np.array([weighting_sequence(index_to_sp(z, k, q)).symbols for z in range(k * q)], dtype=np.int64)
    out = np.empty((words.shape[0], k * q), dtype=np.int64)
    step = max(1, 2**22 // (k * k * q))
    for i in range(0, len(words), step):
        part = words[i : i + step]
        out[i : i + step] = ((part[:, None, :] + B[None, :, :]) % q).sum(axis=2)
    return out

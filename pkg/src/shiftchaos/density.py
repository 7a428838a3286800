"""Finite-horizon density bookkeeping for subsets of the natural numbers.

Upper and lower densities are limits of prefix ratios card(A cap [1, N]) / N;
at a finite horizon all we can report is the running envelope of those
ratios, so every verdict built on one carries an "at horizon N" qualifier.

An IndexPredicate may bundle a closed-form counter with the membership test;
when both exist they are cross-checked on small prefixes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass
class IndexPredicate:
    """Membership test plus optional closed-form prefix counter.

    count(N) must equal card(A cap [1, N]).  count_array is a vectorized
    variant over an int64 numpy array of horizons (needed for million-point
    envelope sweeps).
    """

    member: Callable[[int], bool]
    count: Callable[[int], int] | None = None
    count_array: Callable[[np.ndarray], np.ndarray] | None = None
    name: str = ""

    def prefix_count(self, n: int) -> int:
        if n < 1:
            return 0
        if self.count is not None:
            return int(self.count(n))
        return sum(1 for j in range(1, n + 1) if self.member(j))

    def member_mask(self, n: int) -> np.ndarray:
        """Boolean mask over 1..n by brute membership (small n only)."""
        return np.array([bool(self.member(j)) for j in range(1, n + 1)])


def naturals() -> IndexPredicate:
    return IndexPredicate(lambda j: j >= 1, count=lambda n: max(n, 0),
                          count_array=lambda ns: np.maximum(ns, 0), name="N")


def evens() -> IndexPredicate:
    return IndexPredicate(lambda j: j % 2 == 0, count=lambda n: n // 2,
                          count_array=lambda ns: ns // 2, name="evens")


def prefix_ratio(pred: IndexPredicate, n: int) -> float:
    if n < 1:
        raise ValueError("prefix ratios need N >= 1")
    return pred.prefix_count(n) / n


def check_counter_agreement(pred: IndexPredicate, n_max: int = 10_000) -> bool:
    """Closed-form counter vs naive counting on every prefix up to n_max."""
    if pred.count is None:
        return True
    running = 0
    for j in range(1, n_max + 1):
        if pred.member(j):
            running += 1
        if pred.count(j) != running:
            return False
    return True


@dataclass(frozen=True)
class DensityEnvelope:
    """Prefix-ratio extremes over [1, horizon]; a horizon statement only."""

    horizon: int
    ratio_at_horizon: float
    lower: float       # min over N <= horizon of prefix ratio
    lower_at: int
    upper: float       # max over N <= horizon
    upper_at: int


def density_envelope(pred: IndexPredicate, horizon: int,
                     start: int = 1) -> DensityEnvelope:
    """Envelope of prefix ratios for N in [start, horizon].

    Uses the vectorized counter when present, else chunked brute counting.
    """
    if horizon < start or start < 1:
        raise ValueError("need 1 <= start <= horizon")
    ns = np.arange(start, horizon + 1, dtype=np.int64)
    if pred.count_array is not None:
        counts = pred.count_array(ns).astype(np.int64)
    elif pred.count is not None:
        counts = np.array([pred.count(int(n)) for n in ns], dtype=np.int64)
    else:
        mask = pred.member_mask(horizon)
        all_counts = np.cumsum(mask)
        counts = all_counts[start - 1:]
    ratios = counts / ns
    lo_i = int(np.argmin(ratios))
    hi_i = int(np.argmax(ratios))
    return DensityEnvelope(horizon, float(ratios[-1]),
                           float(ratios[lo_i]), int(ns[lo_i]),
                           float(ratios[hi_i]), int(ns[hi_i]))


def blocks_union_predicate(block_range: Callable[[int], tuple[int, int]],
                           keep: Callable[[int], bool],
                           name: str = "") -> IndexPredicate:
    """Union of selected blocks of consecutive integers as a predicate.

    block_range(t) gives the inclusive interval of the t-th block (blocks in
    increasing position, contiguous); keep(t) says whether block t belongs to
    the set.  The closed-form counter walks whole blocks, so it stays exact
    at any horizon while membership stays a pure per-index test.
    """

    def member(j: int) -> bool:
        if j < 1:
            return False
        t = 1
        while True:
            lo, hi = block_range(t)
            if j < lo:
                return False
            if j <= hi:
                return keep(t)
            t += 1

    def count(n: int) -> int:
        if n < 1:
            return 0
        total = 0
        t = 1
        while True:
            lo, hi = block_range(t)
            if lo > n:
                return total
            if keep(t):
                total += min(hi, n) - lo + 1
            if hi >= n:
                return total
            t += 1

    return IndexPredicate(member, count=count, name=name)

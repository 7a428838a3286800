"""Weight sequences for backward shifts and their orbit products.

The quantity every criterion consumes is the backward product

    P(i, n) = w_{i-n} * ... * w_{i-1}        (P(i, 0) = 1),

i.e. the scalar that survives when the n-th shift iterate hits the basis
vector e_i.  On the natural numbers the convention w_j = 0 for j < 1 makes
P(i, n) vanish as soon as the orbit falls off the left edge.

Products are served three ways, mirroring the sequence layer:
  product(w, i, n)            one-off, run-based, fine for n ~ 10**200
  product_log_table(w, i, N)  dense log table for numpy sweeps, N <= ~2e7
  product_pieces(w, i, ...)   piecewise log-linear form for closed-form
                              counting and summing at astronomical horizons
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import NEG_INF, ONE, ZERO, LogScalar
from .sequences import BlockSideSequence, Run, SequenceBase, SplitSequence
from .spaces import IndexSet

MAX_DENSE = 20_000_000


class WeightSpec:
    """Weight sequence over an index set; values must be nonzero on-domain.

    Off-domain unilateral indices (j < 1) read as exact zeros: that is the
    annihilation convention, not a data error.
    """

    def __init__(self, index_set: IndexSet, seq: SequenceBase):
        self.index_set = index_set
        self.seq = seq
        for j in ([1, 2, 3, 17] if index_set is IndexSet.N else [-17, -2, -1, 0, 1, 17]):
            if seq.value_at(j) == 0.0:
                raise ValueError(f"weight at {j} is zero; weights must be nonzero on-domain")

    def weight_at(self, j: int) -> LogScalar:
        if not self.index_set.contains(j):
            return ZERO
        return LogScalar.from_real(self.seq.value_at(j))

    def _domain_mask(self, js: np.ndarray) -> np.ndarray:
        if self.index_set is IndexSet.N:
            return js >= 1
        return np.ones(len(js), dtype=bool)

    def log_abs_array(self, lo: int, hi: int) -> np.ndarray:
        """ln |w_j| for j in [lo, hi]; -inf on off-domain indices."""
        if hi < lo:
            return np.zeros(0)
        js = np.arange(lo, hi + 1)
        ok = self._domain_mask(js)
        out = np.full(len(js), NEG_INF)
        if np.any(ok):
            vals = self.seq.values_array(js[ok])
            with np.errstate(divide="ignore"):
                out[ok] = np.log(np.abs(vals))
        return out

    def signs_array(self, lo: int, hi: int) -> np.ndarray:
        if hi < lo:
            return np.zeros(0, dtype=np.int8)
        js = np.arange(lo, hi + 1)
        ok = self._domain_mask(js)
        out = np.zeros(len(js), dtype=np.int8)
        if np.any(ok):
            vals = self.seq.values_array(js[ok])
            out[ok] = np.sign(vals).astype(np.int8)
        return out

    def runs_over(self, lo: int, hi: int) -> list[Run] | None:
        """Signed-value runs clipped to the domain (off-domain part dropped)."""
        lo, hi = self.index_set.clip(lo, hi)
        if hi < lo:
            return []
        return self.seq.runs_over(lo, hi)

    def has_runs(self) -> bool:
        probe = 1 if self.index_set is IndexSet.N else 0
        return self.seq.runs_over(probe, probe) is not None


def bilateral_weights(negative: SequenceBase, nonnegative: SequenceBase) -> WeightSpec:
    return WeightSpec(IndexSet.Z, SplitSequence(negative, nonnegative, split=0))


def unilateral_weights(seq: SequenceBase) -> WeightSpec:
    return WeightSpec(IndexSet.N, seq)


def block_index_range(side: BlockSideSequence, n: int, negated: bool = False) -> tuple[int, int]:
    """Inclusive index interval of block n; negated=True returns {-j : j in block}."""
    lo, hi = side.block_range(n)
    if negated:
        return -hi, -lo
    return lo, hi


def product(w: WeightSpec, i: int, n: int) -> LogScalar:
    """P(i, n) = w_{i-n} ... w_{i-1}; exact zero if the range leaves the domain."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ONE
    lo, hi = i - n, i - 1
    if w.index_set is IndexSet.N and lo < 1:
        return ZERO
    runs = w.runs_over(lo, hi)
    if runs is None:
        if n > MAX_DENSE:
            raise ValueError(f"closed-form weights cannot take products of length {n}")
        out = ONE
        for j in range(lo, hi + 1):
            out = out * w.weight_at(j)
        return out
    total = 0.0
    sign = 1
    for r in runs:
        if r.value == 0.0:
            return ZERO
        total += r.count * math.log(abs(r.value))
        if r.value < 0 and r.count % 2 == 1:
            sign = -sign
    return LogScalar(sign, total)


def forward_product(w: WeightSpec, i: int, n: int) -> LogScalar:
    """w_i * w_{i+1} * ... * w_{i+n-1} (the divisor in hypercyclicity checks)."""
    return product(w, i + n, n)


@dataclass(frozen=True)
class WeightProductTable:
    """Dense cumulative products anchored at i: logs[n] = ln |P(i, n)|.

    signs[n] carries the sign (0 marks an annihilated product).  Index n runs
    0..N inclusive.
    """

    anchor: int
    logs: np.ndarray
    signs: np.ndarray

    def value(self, n: int) -> LogScalar:
        s = int(self.signs[n])
        return ZERO if s == 0 else LogScalar(s, float(self.logs[n]))


def product_log_table(w: WeightSpec, i: int, n_max: int) -> WeightProductTable:
    """Cumulative table P(i, 0..n_max); costs O(n_max) time and memory."""
    if n_max > MAX_DENSE:
        raise ValueError(f"dense product table of length {n_max} exceeds the cap; "
                         "use the piecewise path")
    la = w.log_abs_array(i - n_max, i - 1)[::-1]  # entry t-1 is ln|w_{i-t}|
    sg = w.signs_array(i - n_max, i - 1)[::-1].astype(np.int64)
    logs = np.concatenate(([0.0], np.cumsum(la)))
    neg = np.concatenate(([0], np.cumsum(sg < 0)))
    dead = np.concatenate(([0], np.cumsum(sg == 0)))
    signs = np.where(dead > 0, 0, np.where(neg % 2 == 0, 1, -1)).astype(np.int8)
    return WeightProductTable(i, logs, signs)


# ---------------------------------------------------------------------------
# piecewise log-linear products: on a stretch of n where the incoming factor
# w_{i-n} sits inside one constant run, ln |P(i, n)| is affine in n.


@dataclass(frozen=True)
class Piece:
    """q(n) = exp(log0 + slope * (n - n0)) for integer n in [n0, n1];
    log0 = -inf encodes q identically zero on the piece."""

    n0: int
    n1: int
    log0: float
    slope: float

    def __post_init__(self):
        if self.n1 < self.n0:
            raise ValueError(f"empty piece [{self.n0}, {self.n1}]")

    @property
    def count(self) -> int:
        return self.n1 - self.n0 + 1

    def log_at(self, n: int) -> float:
        if self.log0 == NEG_INF:
            return NEG_INF
        return self.log0 + _run_span(self.slope, n - self.n0)


def _run_span(slope: float, length) -> float:
    """slope * length, saturating instead of overflowing on huge int lengths."""
    if slope == 0.0:
        return 0.0
    try:
        return slope * float(length)
    except OverflowError:
        return math.inf if slope > 0 else -math.inf


def product_pieces(w: WeightSpec, i: int, n_lo: int, n_hi: int) -> list[Piece]:
    """ln |P(i, n)| for n in [n_lo, n_hi] as log-linear pieces.

    Requires run-structured weights.  Unilateral annihilation (i - n < 1)
    appears as a trailing zero piece, never as an error.
    """
    if n_lo < 0 or n_hi < n_lo:
        raise ValueError(f"bad n range [{n_lo}, {n_hi}]")
    alive_hi = n_hi
    if w.index_set is IndexSet.N and i - n_hi < 1:
        alive_hi = i - 1
        if alive_hi < n_lo:
            return [Piece(n_lo, n_hi, NEG_INF, 0.0)]
    base = product(w, i, n_lo)
    if base.sign == 0:
        return [Piece(n_lo, n_hi, NEG_INF, 0.0)]
    out = [Piece(n_lo, n_lo, base.logmag, 0.0)]
    cur_log = base.logmag  # ln |P(i, n)| at the end of the last piece
    if alive_hi > n_lo:
        runs = w.runs_over(i - alive_hi, i - n_lo - 1)
        if runs is None:
            raise ValueError("piecewise products need run-structured weights")
        for r in reversed(runs):  # descending index order = ascending n
            a, b = i - r.stop, i - r.start  # piece over n in [a, b]
            slope = math.log(abs(r.value))
            start_log = cur_log + slope
            out.append(Piece(a, b, start_log, slope))
            cur_log = start_log + _run_span(slope, b - a)
    if alive_hi < n_hi:
        out.append(Piece(alive_hi + 1, n_hi, NEG_INF, 0.0))
    return coalesce_pieces(out)


def coalesce_pieces(pieces: list[Piece]) -> list[Piece]:
    out: list[Piece] = []
    for p in pieces:
        if out:
            q = out[-1]
            joined = q.n1 + 1 == p.n0
            same_zero = q.log0 == NEG_INF and p.log0 == NEG_INF
            same_line = (q.log0 != NEG_INF and p.log0 != NEG_INF
                         and q.slope == p.slope and q.log_at(p.n0) == p.log0)
            if joined and (same_zero or same_line):
                out[-1] = Piece(q.n0, p.n1, q.log0, q.slope)
                continue
        out.append(p)
    return out


def shift_pieces(pieces: list[Piece], offset_log: float) -> list[Piece]:
    """Multiply q by a constant: add offset_log to every finite piece."""
    return [p if p.log0 == NEG_INF else Piece(p.n0, p.n1, p.log0 + offset_log, p.slope)
            for p in pieces]


def overlay_row_runs(pieces: list[Piece], row_runs: list[Run], anchor: int) -> list[Piece]:
    """Multiply q(n) by the matrix row value at j = anchor - n.

    row_runs hold ln a(j, m) over a j-interval covering {anchor - n} for all
    n spanned by `pieces`.  Two-pointer sweep: both lists are sorted and
    disjoint, so the result has at most len(pieces) + len(row_runs) pieces.
    """
    # rewrite runs over j as sorted intervals over n = anchor - j
    intervals = sorted((anchor - r.stop, anchor - r.start, r.value) for r in row_runs)
    out: list[Piece] = []
    ptr = 0
    for p in pieces:
        n = p.n0
        while n <= p.n1:
            while ptr < len(intervals) and intervals[ptr][1] < n:
                ptr += 1
            if ptr >= len(intervals) or intervals[ptr][0] > n:
                raise ValueError(f"matrix row runs leave a gap at n={n}")
            a, b, logv = intervals[ptr]
            hi = min(b, p.n1)
            if p.log0 == NEG_INF or logv == NEG_INF:
                out.append(Piece(n, hi, NEG_INF, 0.0))
            else:
                out.append(Piece(n, hi, p.log_at(n) + logv, p.slope))
            n = hi + 1
    return out

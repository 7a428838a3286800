"""Frechet sequence spaces presented by Kothe matrices.

A space is (p, A, J, K_max): exponent p (0 means the sup variant), a matrix
A of nonnegative entries a(j, k) nondecreasing in k, the index set J (naturals
starting at 1, or all integers), and the metric truncation depth.  Seminorms:

    p >= 1:  ||x||_k = (sum_j |a(j,k) x_j|^p)^(1/p)
    p == 0:  ||x||_k = sup_j |a(j,k) x_j|

The translation-invariant metric sums 2^-k * min(1, ||x-y||_k) over k up to
K_max; the discarded tail is at most 2^-K_max, so every metric value reported
here is a lower estimate with that explicit error bound.

Matrices are generator-backed (never materialized); their contract (entries
nonnegative, monotone in k, some positive entry in every row) is enforced by
sampling at construction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .numerics import (LN10, NEG_INF, ZERO, LogScalar, SparseVector,
                       logsumexp_p, sup_abs)
from .sequences import ClosedFormSequence, ConstantSequence, Run, SequenceBase

DEFAULT_METRIC_DEPTH = 40
CONDITION_C_SLACK = 1e-12


class IndexSet(enum.Enum):
    N = "N"
    Z = "Z"

    @property
    def min_index(self) -> int | None:
        return 1 if self is IndexSet.N else None

    def contains(self, j: int) -> bool:
        return j >= 1 if self is IndexSet.N else True

    def clip(self, lo: int, hi: int) -> tuple[int, int]:
        """Intersect [lo, hi] with the index set; may come back empty (lo > hi)."""
        if self is IndexSet.N:
            return max(lo, 1), hi
        return lo, hi


class KotheMatrix:
    """Nonnegative matrix a(j, k) presented by a row rule over a base sequence.

    rule "constant": a(j, k) = base(j) for every k   (Banach-style weights)
    rule "power":    a(j, k) = base(j) ** k          (polynomial-type growth)
    rule "custom":   log a(j, k) comes from an arbitrary callable; no run
                     structure, slow paths only.
    """

    def __init__(self, rule: str, base: SequenceBase | None = None,
                 log_fn: Callable[[int, int], float] | None = None,
                 description: str = ""):
        if rule not in ("constant", "power", "custom"):
            raise ValueError(f"unknown row rule {rule!r}")
        if rule == "custom":
            if log_fn is None:
                raise ValueError("custom rule needs log_fn")
        elif base is None:
            raise ValueError(f"rule {rule!r} needs a base sequence")
        self.rule = rule
        self.base = base
        self.log_fn = log_fn
        self.description = description

    def log_entry(self, j: int, k: int) -> float:
        """ln a(j, k); -inf encodes a zero entry."""
        if k < 1:
            raise ValueError("seminorm indices start at 1")
        if self.rule == "custom":
            return float(self.log_fn(j, k))
        v = self.base.value_at(j)
        if v < 0:
            raise ValueError(f"matrix base is negative at j={j}")
        if v == 0.0:
            return NEG_INF
        lv = math.log(v)
        return lv if self.rule == "constant" else k * lv

    def entry(self, j: int, k: int) -> LogScalar:
        lm = self.log_entry(j, k)
        return ZERO if lm == NEG_INF else LogScalar(1, lm)

    def log_row_array(self, k: int, js: np.ndarray) -> np.ndarray:
        """Vectorized ln a(j, k) over an index array."""
        if self.rule == "custom":
            return np.array([self.log_entry(int(j), k) for j in js], dtype=float)
        vals = self.base.values_array(np.asarray(js))
        if np.any(vals < 0):
            raise ValueError("matrix base is negative somewhere in the probe range")
        with np.errstate(divide="ignore"):
            logs = np.log(vals)
        return logs if self.rule == "constant" else k * logs

    def log_row_runs(self, k: int, lo: int, hi: int) -> list[Run] | None:
        """Row k as maximal runs of ln a(j, k); None without run structure."""
        if self.rule == "custom":
            return None
        runs = self.base.runs_over(lo, hi)
        if runs is None:
            return None
        out = []
        for r in runs:
            if r.value < 0:
                raise ValueError("matrix base is negative somewhere in the run range")
            lv = math.log(r.value) if r.value > 0 else NEG_INF
            out.append(Run(r.start, r.stop, lv if self.rule == "constant" else k * lv))
        return out


def check_kothe_invariants(matrix: KotheMatrix, js: Iterable[int], k_max: int) -> None:
    """Sampled contract: entries >= 0, nondecreasing in k, row not all zero."""
    for j in js:
        prev = NEG_INF
        seen_positive = False
        for k in range(1, k_max + 1):
            lm = matrix.log_entry(j, k)
            if lm < prev - 1e-12:
                raise ValueError(f"matrix not monotone in k at j={j}, k={k}")
            prev = max(prev, lm)
            seen_positive = seen_positive or lm > NEG_INF
        if not seen_positive:
            raise ValueError(f"matrix row j={j} has no positive entry up to k={k_max}")


@dataclass(frozen=True)
class SpaceSpec:
    """Immutable space description; validates p and samples the matrix contract."""

    p: float
    matrix: KotheMatrix
    index_set: IndexSet
    metric_depth: int = DEFAULT_METRIC_DEPTH

    def __post_init__(self):
        if not (self.p == 0 or self.p >= 1):
            raise ValueError(f"p must be 0 or >= 1, got {self.p}")
        if self.metric_depth < 1:
            raise ValueError("metric_depth must be >= 1")
        probe = [1, 2, 3, 7, 50] if self.index_set is IndexSet.N else [-50, -7, -1, 0, 1, 7, 50]
        check_kothe_invariants(self.matrix, probe, min(self.metric_depth, 8))

    @property
    def metric_tail_bound(self) -> float:
        return 2.0 ** (-self.metric_depth)


def lp_space(p: float, index_set: IndexSet, nu: SequenceBase | None = None,
             metric_depth: int = DEFAULT_METRIC_DEPTH) -> SpaceSpec:
    """lp(nu, J): constant-in-k rows; nu defaults to 1."""
    base = nu if nu is not None else ConstantSequence(1.0)
    return SpaceSpec(p, KotheMatrix("constant", base, description="lp weight rows"),
                     index_set, metric_depth)


def c0_space(index_set: IndexSet, nu: SequenceBase | None = None,
             metric_depth: int = DEFAULT_METRIC_DEPTH) -> SpaceSpec:
    base = nu if nu is not None else ConstantSequence(1.0)
    return SpaceSpec(0, KotheMatrix("constant", base, description="c0 weight rows"),
                     index_set, metric_depth)


def rapidly_decreasing_space(index_set: IndexSet, p: float = 1,
                             metric_depth: int = DEFAULT_METRIC_DEPTH) -> SpaceSpec:
    """s(J): a(j, k) = (|j| + 1)^k."""
    base = ClosedFormSequence(lambda j: abs(j) + 1.0,
                              vectorized=lambda js: np.abs(js.astype(float)) + 1.0)
    return SpaceSpec(p, KotheMatrix("power", base, description="(|j|+1)^k rows"),
                     index_set, metric_depth)


def seminorm(space: SpaceSpec, x: SparseVector, k: int) -> LogScalar:
    """||x||_k over the finite support of x."""
    if k < 1:
        raise ValueError("seminorm indices start at 1")
    terms = []
    for j, v in x.items_sorted():
        if not space.index_set.contains(j):
            raise ValueError(f"vector has support at {j} outside {space.index_set}")
        la = space.matrix.log_entry(j, k)
        if la == NEG_INF or v.sign == 0:
            continue
        terms.append(LogScalar(1, la + v.logmag))
    if space.p == 0:
        return sup_abs(terms)
    return logsumexp_p(terms, space.p)


def seminorm_logs(space: SpaceSpec, x: SparseVector, k_hi: int) -> np.ndarray:
    """log ||x||_k for k = 1..k_hi in one pass (metric helper)."""
    items = x.items_sorted()
    out = np.full(k_hi, NEG_INF)
    if not items:
        return out
    js = np.array([j for j, _ in items])
    vlogs = np.array([v.logmag for _, v in items])
    for k in range(1, k_hi + 1):
        row = space.matrix.log_row_array(k, js)
        t = row + vlogs
        if space.p == 0:
            out[k - 1] = t.max()
        else:
            m = t.max()
            if m > NEG_INF:
                out[k - 1] = m + math.log(np.sum(np.exp(space.p * (t - m)))) / space.p
    return out


def metric(space: SpaceSpec, x: SparseVector, y: SparseVector) -> float:
    """Truncated invariant metric d(x, y); underestimates by <= 2^-K_max."""
    diff = x - y
    if diff.is_zero():
        return 0.0
    logs = seminorm_logs(space, diff, space.metric_depth)
    total = 0.0
    for k in range(1, space.metric_depth + 1):
        lm = logs[k - 1]
        clipped = 1.0 if lm >= 0.0 else math.exp(lm)
        total += (2.0 ** -k) * clipped
    return total


@dataclass(frozen=True)
class ContinuityRow:
    k: int
    witnessed: bool
    m: int | None
    log_sup: float | None


@dataclass(frozen=True)
class ContinuityReport:
    rows: tuple[ContinuityRow, ...]
    window: tuple[int, int]
    cap: float
    all_witnessed: bool


def continuity_check(space: SpaceSpec, weights, window: tuple[int, int],
                     k_max: int = 6, cap: float = 1e12) -> ContinuityReport:
    """Finite-window check of the shift-continuity criterion.

    For each k <= k_max, search m <= k_max with (a) a(j, k) = 0 whenever
    a(j+1, m) = 0 on the window, and (b) sup_j a(j,k)|w_j| / a(j+1,m) below
    `cap`.  Witnessed verdicts name the first such m and the windowed sup;
    anything else is not-witnessed-at-depth, which is a statement about the
    probe, not about the operator.
    """
    lo, hi = space.index_set.clip(window[0], window[1])
    if hi <= lo:
        raise ValueError("empty continuity window")
    js = np.arange(lo, hi)  # pairs (j, j+1), so stop one short
    logw = weights.log_abs_array(lo, hi - 1)
    log_cap = math.log(cap)
    rows = []
    for k in range(1, k_max + 1):
        row_k = space.matrix.log_row_array(k, js)
        hit: ContinuityRow | None = None
        for m in range(1, k_max + 1):
            row_m_next = space.matrix.log_row_array(m, js + 1)
            dead = row_m_next == NEG_INF
            if np.any(dead & (row_k > NEG_INF)):
                continue  # support condition fails for this m
            alive = ~dead
            if not np.any(alive):
                hit = ContinuityRow(k, True, m, NEG_INF)
                break
            ratios = row_k[alive] + logw[alive] - row_m_next[alive]
            log_sup = float(ratios.max())
            if log_sup < log_cap:
                hit = ContinuityRow(k, True, m, log_sup)
                break
        rows.append(hit if hit is not None else ContinuityRow(k, False, None, None))
    return ContinuityReport(tuple(rows), (lo, hi), cap, all(r.witnessed for r in rows))


@dataclass(frozen=True)
class ConditionCReport:
    ok: bool
    checked: int
    worst_excess: float  # max over samples of ||x_m e_m||_n / ||x||_n - 1


def condition_c_check(space: SpaceSpec, samples: Iterable[SparseVector],
                      k_max: int = 6) -> ConditionCReport:
    """|x_m| * ||e_m||_n <= ||x||_n for each coordinate m, up to 1e-12 slack.

    Kothe seminorms satisfy this identically; the check exists to validate a
    space before the mean Li-Yorke machinery (which assumes it) runs.
    """
    worst = -math.inf
    checked = 0
    ok = True
    for x in samples:
        if x.is_zero():
            continue
        checked += 1
        for n in range(1, k_max + 1):
            lx = seminorm(space, x, n)
            for m, v in x.items_sorted():
                le = space.matrix.log_entry(m, n)
                if le == NEG_INF:
                    continue
                lhs = v.logmag + le
                if lx.sign == 0:
                    ok = False
                    worst = math.inf
                    continue
                excess = math.exp(lhs - lx.logmag) - 1.0
                worst = max(worst, excess)
                if excess > CONDITION_C_SLACK:
                    ok = False
    return ConditionCReport(ok, checked, worst)

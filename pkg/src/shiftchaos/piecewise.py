"""Exact counting and stable summation over piecewise log-linear functions.

A list of Pieces describes q(n) > 0 (or = 0) on consecutive integer
intervals, with ln q affine on each piece.  Certificate counts reduce to
"how many n have ln q(n) > threshold", answered per piece by bisection on a
monotone float predicate, so a horizon of 10**200 costs a few hundred
comparisons instead of 10**200 evaluations.  Piece lengths are Python ints;
sums use the closed form of geometric series in the log domain.
"""

from __future__ import annotations

import math

import numpy as np

from .numerics import NEG_INF
from .weights import Piece


def _mul_guard(s: float, length) -> float:
    """s * length without OverflowError when length is an enormous int."""
    try:
        return s * float(length)
    except OverflowError:
        return math.inf if s > 0 else -math.inf


def _first_offset_above(piece: Piece, thr: float) -> int | None:
    """Minimal t in [0, count-1] with log0 + slope*t > thr, assuming slope > 0.

    The float predicate is monotone in t (multiplication and addition are
    monotone under rounding), so bisection gives the exact strict boundary.
    """
    last = piece.count - 1
    if not piece.log0 + _mul_guard(piece.slope, last) > thr:
        return None
    lo, hi = 0, last
    while lo < hi:
        mid = (lo + hi) // 2
        if piece.log0 + _mul_guard(piece.slope, mid) > thr:
            hi = mid
        else:
            lo = mid + 1
    return lo

def _last_offset_above(piece: Piece, thr: float) -> int | None:
    """Maximal t with log0 + slope*t > thr, assuming slope < 0."""
    if not piece.log0 > thr:
        return None
    lo, hi = 0, piece.count - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if piece.log0 + _mul_guard(piece.slope, mid) > thr:
            lo = mid
        else:
            hi = mid - 1
    return lo


def count_above(pieces: list[Piece], thr: float) -> int:
    """card {n : ln q(n) > thr}; strict, no slack, ties excluded."""
    total = 0
    for p in pieces:
        if p.log0 == NEG_INF:
            continue
        if p.slope == 0.0:
            if p.log0 > thr:
                total += p.count
        elif p.slope > 0.0:
            t = _first_offset_above(p, thr)
            if t is not None:
                total += p.count - t
        else:
            t = _last_offset_above(p, thr)
            if t is not None:
                total += t + 1
    return total


def piece_log_sum(p: Piece) -> float:
    """ln sum_{n in piece} q(n) via the geometric closed form."""
    if p.log0 == NEG_INF:
        return NEG_INF
    length = p.count
    if p.slope == 0.0:
        return p.log0 + math.log(length)
    s = p.slope
    if s > 0:
        # (e^{sL} - 1)/(e^s - 1) = e^{s(L-1)} * (1 - e^{-sL}) / (1 - e^{-s})
        head = _mul_guard(s, length - 1)
        return (p.log0 + head
                + math.log(-math.expm1(-_mul_guard(s, length)))
                - math.log(-math.expm1(-s)))
    return (p.log0
            + math.log(-math.expm1(_mul_guard(s, length)))
            - math.log(-math.expm1(s)))


def log_sum(pieces: list[Piece]) -> float:
    """ln sum_n q(n) over all pieces (ordered accumulation, deterministic)."""
    total = NEG_INF
    for p in pieces:
        total = float(np.logaddexp(total, piece_log_sum(p)))
    return total


def log_max(pieces: list[Piece]) -> float:
    """ln max_n q(n); affine pieces peak at an endpoint."""
    best = NEG_INF
    for p in pieces:
        if p.log0 == NEG_INF:
            continue
        best = max(best, p.log0, p.log_at(p.n1))
    return best


def total_length(pieces: list[Piece]) -> int:
    return sum(p.count for p in pieces)

"""Overflow-safe scalar arithmetic in the (sign, log-magnitude) domain.

Weight products along an orbit multiply thousands of factors like 2 or 1/2,
so their magnitudes leave IEEE double range almost immediately.  Everything
downstream (seminorms, certificate counts, Cesaro sums) therefore carries a
natural-log magnitude and keeps the sign separately.  A value is zero exactly
when sign == 0 and logmag == -inf.

Strict threshold comparisons ("ratio > k") happen directly on log magnitudes
with no tolerance slack: a tie in the log domain is a failure of the strict
inequality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

NEG_INF = float("-inf")

LN10 = math.log(10.0)


@dataclass(frozen=True)
class LogScalar:
    """A real number stored as (sign, ln|x|).

    sign is -1, 0 or +1; logmag is -inf exactly when sign is 0.  Instances
    are immutable and hashable; arithmetic returns new instances.
    """

    sign: int
    logmag: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign!r}")
        if math.isnan(self.logmag):
            raise ValueError("logmag may not be NaN")
        if (self.sign == 0) != (self.logmag == NEG_INF):
            raise ValueError(
                f"zero iff logmag == -inf; got sign={self.sign} logmag={self.logmag}"
            )

    @staticmethod
    def from_real(x: float) -> "LogScalar":
        x = float(x)
        if math.isnan(x) or math.isinf(x):
            raise ValueError(f"cannot represent {x!r}")
        if x == 0.0:
            return ZERO
        return LogScalar(1 if x > 0 else -1, math.log(abs(x)))

    @staticmethod
    def from_log(sign: int, logmag: float) -> "LogScalar":
        if sign == 0 or logmag == NEG_INF:
            return ZERO
        return LogScalar(1 if sign > 0 else -1, float(logmag))

    def to_real(self) -> float:
        """Back to a plain float; overflows to +-inf rather than raising."""
        if self.sign == 0:
            return 0.0
        try:
            mag = math.exp(self.logmag)
        except OverflowError:
            mag = math.inf
        return mag if self.sign > 0 else -mag

    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other: "LogScalar") -> "LogScalar":
        if self.sign == 0 or other.sign == 0:
            return ZERO
        return LogScalar(self.sign * other.sign, self.logmag + other.logmag)

    def __truediv__(self, other: "LogScalar") -> "LogScalar":
        if other.sign == 0:
            raise ZeroDivisionError("division by LogScalar zero")
        if self.sign == 0:
            return ZERO
        return LogScalar(self.sign * other.sign, self.logmag - other.logmag)

    def __neg__(self) -> "LogScalar":
        if self.sign == 0:
            return ZERO
        return LogScalar(-self.sign, self.logmag)

    def __abs__(self) -> "LogScalar":
        if self.sign == 0:
            return ZERO
        return LogScalar(1, self.logmag)

    def abs_pow(self, p: float) -> "LogScalar":
        """|x| ** p in the log domain."""
        if self.sign == 0:
            if p <= 0:
                raise ValueError("0 ** nonpositive power")
            return ZERO
        return LogScalar(1, self.logmag * p)

    # ordering: by sign first, then by actual numeric order within the sign
    # class (for negatives the larger magnitude is the smaller number).  No
    # exponentiation anywhere.
    def _cmp(self, other: "LogScalar") -> int:
        if self.sign != other.sign:
            return -1 if self.sign < other.sign else 1
        if self.logmag == other.logmag:
            return 0
        less_mag = self.logmag < other.logmag
        if self.sign >= 0:
            return -1 if less_mag else 1
        return 1 if less_mag else -1

    def __lt__(self, other: "LogScalar") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "LogScalar") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "LogScalar") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "LogScalar") -> bool:
        return self._cmp(other) >= 0

    def decimal_str(self, digits: int = 12) -> str:
        """Scientific-notation decimal string, exact about the exponent even
        far outside float range."""
        if self.sign == 0:
            return "0"
        l10 = self.logmag / LN10
        exp10 = math.floor(l10)
        mant = 10.0 ** (l10 - exp10)
        if mant >= 10.0:  # rounding at the boundary
            mant /= 10.0
            exp10 += 1
        body = f"{mant:.{digits - 1}f}"
        s = "-" if self.sign < 0 else ""
        return f"{s}{body}e{exp10:+d}"


ZERO = LogScalar(0, NEG_INF)
ONE = LogScalar(1, 0.0)


def logmul(a: LogScalar, b: LogScalar) -> LogScalar:
    return a * b


def logadd(a: LogScalar, b: LogScalar) -> LogScalar:
    """Signed addition a + b without leaving the log domain."""
    if a.sign == 0:
        return b
    if b.sign == 0:
        return a
    if a.sign == b.sign:
        return LogScalar(a.sign, float(np.logaddexp(a.logmag, b.logmag)))
    if a.logmag == b.logmag:
        return ZERO
    big, small = (a, b) if a.logmag > b.logmag else (b, a)
    # |big| - |small| = e^B * (-expm1(S - B)), with S - B < 0
    mag = big.logmag + math.log(-math.expm1(small.logmag - big.logmag))
    return LogScalar(big.sign, mag)


def logsumexp_p(values: Iterable[LogScalar], p: float) -> LogScalar:
    """(sum |v|^p)^(1/p) computed by factoring out the max magnitude.

    Requires p >= 1.  A single nonzero value short-circuits to its absolute
    value so that one-term witnesses feed identical floats to every route.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    mags = [v.logmag for v in values if v.sign != 0]
    if not mags:
        return ZERO
    if len(mags) == 1:
        return LogScalar(1, mags[0])
    m = max(mags)
    s = math.fsum(math.exp(p * (x - m)) for x in mags)
    return LogScalar(1, m + math.log(s) / p)


def sup_abs(values: Iterable[LogScalar]) -> LogScalar:
    """max |v|  (the p = 0 aggregation)."""
    best = NEG_INF
    for v in values:
        if v.sign != 0 and v.logmag > best:
            best = v.logmag
    return ZERO if best == NEG_INF else LogScalar(1, best)


# ---------------------------------------------------------------------------
# array kernels: hot paths operate on numpy arrays of log magnitudes (-inf
# marks a zero entry) and only wrap results into LogScalar at the boundary.


def logsumexp_p_array(logmags: np.ndarray, p: float) -> float:
    """log of (sum exp(x)^p)^(1/p) over a 1-d array; -inf for empty/all-zero."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if logmags.size == 0:
        return NEG_INF
    m = float(np.max(logmags))
    if m == NEG_INF:
        return NEG_INF
    if logmags.size == 1:
        return float(logmags[0])
    s = float(np.sum(np.exp(p * (logmags - m))))
    return m + math.log(s) / p


def logsumexp_p_rows(rows: np.ndarray, p: float) -> np.ndarray:
    """Column-wise (sum_j |row_j|^p)^(1/p) in logs for a (r, N) array."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if rows.shape[0] == 1:
        return rows[0].copy()
    m = rows.max(axis=0)
    out = np.full(rows.shape[1], NEG_INF)
    finite = m > NEG_INF
    if np.any(finite):
        shifted = rows[:, finite] - m[finite]
        s = np.sum(np.exp(p * shifted), axis=0)
        out[finite] = m[finite] + np.log(s) / p
    return out


def logmax_rows(rows: np.ndarray) -> np.ndarray:
    """Column-wise max (the p = 0 aggregation) for a (r, N) array."""
    return rows.max(axis=0)


def logaddexp_accumulate(logmags: np.ndarray) -> np.ndarray:
    """Running log of prefix sums of exp(x); entries may be -inf."""
    return np.logaddexp.accumulate(logmags)


class SparseVector:
    """Finitely supported sequence with LogScalar entries, zero-free storage."""

    __slots__ = ("_entries",)

    def __init__(self, entries: dict[int, LogScalar] | None = None):
        clean: dict[int, LogScalar] = {}
        if entries:
            for idx, val in entries.items():
                if not isinstance(val, LogScalar):
                    raise TypeError(f"entry at {idx} is not a LogScalar")
                if val.sign != 0:
                    clean[int(idx)] = val
        self._entries = clean

    @staticmethod
    def from_terms(terms: Iterable[tuple[int, float | LogScalar]]) -> "SparseVector":
        out: dict[int, LogScalar] = {}
        for idx, val in terms:
            v = val if isinstance(val, LogScalar) else LogScalar.from_real(val)
            prev = out.get(int(idx))
            out[int(idx)] = logadd(prev, v) if prev is not None else v
        return SparseVector(out)

    @staticmethod
    def basis(i: int, coeff: float | LogScalar = 1.0) -> "SparseVector":
        v = coeff if isinstance(coeff, LogScalar) else LogScalar.from_real(coeff)
        return SparseVector({i: v} if v.sign != 0 else {})

    @staticmethod
    def zero() -> "SparseVector":
        return SparseVector({})

    def support(self) -> list[int]:
        return sorted(self._entries)

    def items_sorted(self) -> list[tuple[int, LogScalar]]:
        return sorted(self._entries.items())

    def __getitem__(self, i: int) -> LogScalar:
        return self._entries.get(i, ZERO)

    def __len__(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def scale(self, c: float | LogScalar) -> "SparseVector":
        cv = c if isinstance(c, LogScalar) else LogScalar.from_real(c)
        if cv.sign == 0:
            return SparseVector.zero()
        return SparseVector({i: v * cv for i, v in self._entries.items()})

    def shift_indices(self, offset: int) -> "SparseVector":
        return SparseVector({i + offset: v for i, v in self._entries.items()})

    def __add__(self, other: "SparseVector") -> "SparseVector":
        out = dict(self._entries)
        for i, v in other._entries.items():
            prev = out.get(i)
            s = logadd(prev, v) if prev is not None else v
            if s.sign == 0:
                out.pop(i, None)
            else:
                out[i] = s
        return SparseVector(out)

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + other.scale(LogScalar(-1, 0.0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        inner = ", ".join(f"{i}: {v.sign}*e^{v.logmag:.6g}" for i, v in self.items_sorted())
        return f"SparseVector({{{inner}}})"

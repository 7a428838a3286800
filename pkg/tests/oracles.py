"""Independent reference implementations used to cross-check the library.

Everything here deliberately avoids the package's log-domain machinery: the
oracles work with plain Python floats / Fractions and only touch the scalar
entry points (``value_at``, ``weight_at``, ``log_entry``).  Expected values
frozen into the tests were produced by these functions.
"""

from __future__ import annotations

import math
from fractions import Fraction

from shiftchaos.numerics import SparseVector
from shiftchaos.shift import ShiftOperator, apply
from shiftchaos.spaces import IndexSet, SpaceSpec
from shiftchaos.weights import WeightSpec


def naive_weight_product(w: WeightSpec, i: int, n: int) -> float:
    """|w_{i-n} * ... * w_{i-1}| by direct multiplication; 0 off-domain."""
    if n == 0:
        return 1.0
    if w.index_set is IndexSet.N and i - n < 1:
        return 0.0
    out = 1.0
    for j in range(i - n, i):
        out *= abs(w.weight_at(j).to_real())
    return out


def naive_forward_product(w: WeightSpec, i: int, n: int) -> float:
    """|w_i * ... * w_{i+n-1}| by direct multiplication."""
    out = 1.0
    for j in range(i, i + n):
        out *= abs(w.weight_at(j).to_real())
    return out


def naive_seminorm(space: SpaceSpec, x: SparseVector, k: int) -> float:
    """k-th seminorm via plain float summation (fsum for the p-power sum)."""
    entries = [abs(v.to_real()) * math.exp(space.matrix.log_entry(j, k))
               for j, v in x.items_sorted()]
    if not entries:
        return 0.0
    if space.p == 0:
        return max(entries)
    return math.fsum(e ** space.p for e in entries) ** (1.0 / space.p)


def naive_metric(space: SpaceSpec, x: SparseVector, y: SparseVector) -> float:
    """Truncated metric sum_{k<=depth} 2^-k min(1, ||x-y||_k), plain floats."""
    diff = x - y
    total = 0.0
    for k in range(1, space.metric_depth + 1):
        total += 2.0 ** (-k) * min(1.0, naive_seminorm(space, diff, k))
    return total


def brute_orbit_norms(op: ShiftOperator, x: SparseVector, n_max: int,
                      k: int) -> list[float]:
    """[||B^n x||_k for n = 1..n_max] via per-step application."""
    out = []
    cur = x
    for _ in range(n_max):
        cur = apply(op, cur)
        out.append(naive_seminorm(op.space, cur, k))
    return out


def brute_cesaro_averages(op: ShiftOperator, anchor: int,
                          n_max: int) -> list[float]:
    """Running averages of d(B^n e_anchor, 0) via per-step application."""
    zero = SparseVector.zero()
    cur = SparseVector.basis(anchor)
    total = 0.0
    out = []
    for n in range(1, n_max + 1):
        cur = apply(op, cur)
        total += naive_metric(op.space, cur, zero)
        out.append(total / n)
    return out


def brute_prefix_counts(member, n_max: int) -> list[int]:
    """[card{j <= n : member(j)} for n = 1..n_max]."""
    out = []
    c = 0
    for n in range(1, n_max + 1):
        c += 1 if member(n) else 0
        out.append(c)
    return out


def exact_single_term_average(op: ShiftOperator, index: int,
                              N: int) -> Fraction:
    """(1/N) * sum_{n<=N} ||B^n e_index||_1 as an exact fraction.

    Valid when the weights and the first matrix row take dyadic-rational /
    small-integer values (exact in binary floating point), as all catalog
    constructions do.  Requires a constant-in-k matrix so the row values can
    be read exactly off the base sequence.
    """
    if op.space.matrix.rule != "constant" or op.space.matrix.base is None:
        raise ValueError("exact averages need a constant-rule matrix")
    total = Fraction(0)
    prod = Fraction(1)
    for n in range(1, N + 1):
        j = index - n
        if not op.space.index_set.contains(j):
            break
        prod *= Fraction(abs(op.weights.weight_at(j).to_real()))
        total += prod * Fraction(op.space.matrix.base.value_at(j))
    return total / N

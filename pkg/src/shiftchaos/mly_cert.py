"""Finite-horizon certificate checkers for mean Li-Yorke behaviour.

The two sides mirror the distributional-chaos module but count averages, not
exceedances:

  (A) the Cesaro averages of the metric distances d(B^n-image of a basis
      vector, 0) dip below a small tolerance (proximality side);
  (B) per level k, the horizon-N_k average of orbit seminorms of a witness
      vector is at least k times its p(k)-th seminorm (divergence side),
      with a NON-strict >= as the comparison.

Averages are accumulated in the log domain; series terms are genuine metric
values in [0, 1].  Single-term witnesses evaluate through the piecewise
log-linear route, which keeps horizons like 10**200 exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .dc_cert import (DCWitnessEntry, WitnessScheduleDC, WitnessTerm,
                      _dense_guard, _resolve_mode, _term_log_rows,
                      single_term_pieces)
from .numerics import (NEG_INF, ZERO, LogScalar, SparseVector,
                       logaddexp_accumulate)
from .piecewise import log_sum
from .reports import POSITIVE_VERDICTS, CertificateReport
from .shift import ShiftOperator, orbit_seminorm_log_array
from .spaces import IndexSet, seminorm
from .weights import MAX_DENSE, product_log_table


@dataclass(frozen=True)
class MLYWitnessEntry:
    k: int
    horizon: int
    terms: tuple[WitnessTerm, ...]

    def __post_init__(self):
        DCWitnessEntry.__post_init__(self)  # same field constraints

    vector = DCWitnessEntry.vector


@dataclass(frozen=True)
class WitnessScheduleMLY:
    """Per level k: horizon N_k and the witness terms; m fixed across levels."""

    m: int
    entries: tuple[MLYWitnessEntry, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("seminorm index m must be >= 1")
        if not self.entries:
            raise ValueError("schedule has no entries")
        ks = [e.k for e in self.entries]
        if len(set(ks)) != len(ks):
            raise ValueError("duplicate levels in schedule")
        horizons = [e.horizon for e in self.entries]
        if any(b <= a for a, b in zip(horizons, horizons[1:])):
            raise ValueError("horizons N_k must be strictly increasing")

    def p_of(self, k: int) -> int:
        return self.m if k <= self.m else k


def schedule_mly(m: int, entries: Iterable[tuple[int, int, Iterable[tuple[int, float]]]]
                 ) -> WitnessScheduleMLY:
    built = tuple(MLYWitnessEntry(int(k), int(N),
                                  tuple(WitnessTerm.of(i, b) for i, b in terms))
                  for k, N, terms in entries)
    return WitnessScheduleMLY(int(m), built)


# ---------------------------------------------------------------------------
# Cesaro distance series (condition (A) side)


@dataclass(frozen=True)
class CesaroSeries:
    """terms[n-1] = d(B^n-image of e_anchor shifted n steps, 0) in [0, 1];
    averages are the running Cesaro means."""

    anchor: int
    terms: np.ndarray
    averages: np.ndarray


def cesaro_distance_series(op: ShiftOperator, anchor: int, N: int) -> CesaroSeries:
    """d(P(anchor, n) e_{anchor-n}, 0) for n = 1..N, with running averages.

    The metric is the truncated series sum_k 2^{-k} min(1, ||.||_k), so every
    term lies in [0, 1 - 2^-depth] and averages inherit the range exactly.
    """
    if N < 1:
        raise ValueError("need a positive horizon")
    _dense_guard(1, N)
    space = op.space
    ns = np.arange(1, N + 1)
    table = product_log_table(op.weights, anchor, N)
    logs = table.logs[1:]
    dead = table.signs[1:] == 0
    js = anchor - ns
    safe = np.maximum(js, 1) if space.index_set is IndexSet.N else js
    terms = np.zeros(N)
    for k in range(1, space.metric_depth + 1):
        vals = logs + space.matrix.log_row_array(k, safe)
        vals[dead] = NEG_INF
        clipped = np.where(vals >= 0.0, 1.0, np.exp(np.minimum(vals, 0.0)))
        terms += math.pow(2.0, -k) * clipped
    averages = np.cumsum(terms) / ns
    return CesaroSeries(anchor, terms, averages)


def _running_min(averages: np.ndarray, start: int) -> tuple[float, int]:
    seg = averages[start - 1:]
    at = int(np.argmin(seg))
    return float(seg[at]), start + at


def check_mly_condition_A(op: ShiftOperator, anchor: int, horizon: int,
                          pass_tol: float = 1e-3,
                          refute_floor: float | None = None,
                          start: int = 1,
                          include_series: bool = False) -> CertificateReport:
    """Does the Cesaro average of basis distances dip below pass_tol?

    Passing means the running minimum over N in [start, horizon] is strictly
    below pass_tol.  When refute_floor is given and the minimum stays at or
    above it, the dip is refuted on the checked range; otherwise the check is
    inconclusive.
    """
    if not 1 <= start <= horizon:
        raise ValueError("need 1 <= start <= horizon")
    series = cesaro_distance_series(op, anchor, horizon)
    running_min, at = _running_min(series.averages, start)
    if running_min < pass_tol:
        verdict = "condition-A-holds-at-horizon"
    elif refute_floor is not None and running_min >= refute_floor:
        verdict = "refuted-at-horizon"
    else:
        verdict = "inconclusive"
    params = {"anchor": anchor, "horizon": horizon, "pass_tol": pass_tol,
              "start": start, "running_min": running_min, "argmin_N": at}
    if refute_floor is not None:
        params["refute_floor"] = refute_floor
    if include_series:
        rows = [{"n": int(n), "term": float(series.terms[n - 1]),
                 "prefix_average": float(series.averages[n - 1])}
                for n in range(1, horizon + 1)]
    else:
        rows = [{"anchor": anchor, "running_min": running_min, "argmin_N": at,
                 "average_at_horizon": float(series.averages[-1])}]
    return CertificateReport("mly-condition-A", verdict, params, rows)


def anchor_equivalence_probe(op: ShiftOperator, anchors: Iterable[int],
                             horizon: int, pass_tol: float = 1e-3) -> CertificateReport:
    """All probed anchors should agree on whether the averages dip.

    The dip property does not depend on the anchor; a split outcome at a
    finite horizon is a numeric-horizon artifact, flagged as a mismatch.
    """
    anchors = list(anchors)
    if not anchors:
        raise ValueError("need at least one anchor")
    rows = []
    outcomes = set()
    for a in anchors:
        series = cesaro_distance_series(op, a, horizon)
        running_min, at = _running_min(series.averages, 1)
        below = running_min < pass_tol
        outcomes.add(below)
        rows.append({"anchor": a, "running_min": running_min,
                     "argmin_N": at, "below": below})
    params = {"horizon": horizon, "pass_tol": pass_tol}
    if len(outcomes) == 1:
        return CertificateReport("anchor-equivalence", "agrees", params, rows)
    notes = ["anchors disagree: numeric-horizon artifact, raise the horizon"]
    return CertificateReport("anchor-equivalence", "mismatch", params, rows, notes)


# ---------------------------------------------------------------------------
# condition (B): orbit-seminorm averages


def _mly_a_state(op: ShiftOperator, condition_a: CertificateReport | None,
                 auto_a_horizon: int, pass_tol: float) -> tuple[bool | None, str]:
    if condition_a is not None:
        ok = condition_a.verdict in POSITIVE_VERDICTS
        return ok, f"condition (A) supplied: {condition_a.verdict}"
    if op.space.index_set is IndexSet.N:
        return True, "condition (A) automatic on the one-sided domain (orbits annihilate)"
    if auto_a_horizon > 0:
        rep = check_mly_condition_A(op, 0, auto_a_horizon, pass_tol)
        return rep.verdict in POSITIVE_VERDICTS, f"condition (A) checked: {rep.verdict}"
    return None, "condition (A) not checked"


def _average_log(op: ShiftOperator, entry, m: int, mode: str) -> float:
    """ln of (1/N) * sum_{i=1..N} ||B^i (witness vector)||_m."""
    N = entry.horizon
    use = _resolve_mode(mode, len(entry.terms), N)
    if use == "dense":
        _dense_guard(len(entry.terms), N)
        lognum = orbit_seminorm_log_array(op, entry.vector(), m, N)[1:]
        total = float(np.logaddexp.reduce(lognum))
    else:
        total = log_sum(single_term_pieces(op, entry.terms[0], m, N))
    return total - math.log(N)


def check_mly_condition_B(op: ShiftOperator, sched: WitnessScheduleMLY,
                          mode: str = "auto",
                          condition_a: CertificateReport | None = None,
                          auto_a_horizon: int = 100_000,
                          pass_tol: float = 1e-3) -> CertificateReport:
    """Per level k: average orbit seminorm >= k * (p(k)-th seminorm)?

    The comparison is non-strict.  certified-at-horizon needs every level to
    pass and condition (A) settled (supplied, auto-checked at anchor 0, or
    automatic on the one-sided domain); a bare full pass yields
    condition-B-holds-at-horizon.
    """
    a_ok, a_note = _mly_a_state(op, condition_a, auto_a_horizon, pass_tol)
    rows = []
    notes = [a_note]
    all_pass = True
    for entry in sched.entries:
        k, N = entry.k, entry.horizon
        den = seminorm(op.space, entry.vector(), sched.p_of(k))
        if den.sign == 0:
            notes.append(f"zero denominator seminorm at k={k}")
            return CertificateReport("mly-condition-B", "condition-failed",
                                     {"m": sched.m, "mode": mode}, rows, notes)
        avg_log = _average_log(op, entry, sched.m, mode) - den.logmag
        ok = avg_log >= math.log(k)
        all_pass = all_pass and ok
        rows.append({"k": k, "N_k": N, "average": LogScalar(1, avg_log),
                     "target": k, "pass": ok})
    if not all_pass:
        verdict = "condition-failed"
    elif a_ok:
        verdict = "certified-at-horizon"
    else:
        verdict = "condition-B-holds-at-horizon"
    params = {"m": sched.m, "mode": mode,
              "levels": [e.k for e in sched.entries]}
    return CertificateReport("mly-condition-B", verdict, params, rows, notes)


def check_kothe_mly(op: ShiftOperator, sched: WitnessScheduleMLY,
                    mode: str = "auto",
                    condition_a: CertificateReport | None = None,
                    auto_a_horizon: int = 100_000,
                    pass_tol: float = 1e-3) -> CertificateReport:
    """Same averages through explicit matrix entries (rooted forms).

    p = 0 aggregates by max over terms, p >= 1 by the 1/p-rooted p-power sum
    on both the numerator and the denominator; the resulting quantity matches
    the seminorm route to within accumulation roundoff (tested at 1e-10
    relative).
    """
    a_ok, a_note = _mly_a_state(op, condition_a, auto_a_horizon, pass_tol)
    p = op.space.p
    rows = []
    notes = [a_note]
    all_pass = True
    for entry in sched.entries:
        k, N = entry.k, entry.horizon
        pk = sched.p_of(k)
        den_logs = [op.space.matrix.log_entry(t.index, pk) + t.coeff.logmag
                    for t in entry.terms
                    if op.space.matrix.log_entry(t.index, pk) > NEG_INF]
        if not den_logs:
            notes.append(f"zero denominator form at k={k}")
            return CertificateReport("kothe-mly", "condition-failed",
                                     {"m": sched.m, "mode": mode}, rows, notes)
        if p == 0:
            logden = max(den_logs)
        else:
            mx = max(den_logs)
            logden = mx + math.log(math.fsum(
                math.exp(p * (x - mx)) for x in den_logs)) / p
        use = _resolve_mode(mode, len(entry.terms), N)
        if use == "dense":
            _dense_guard(len(entry.terms), N)
            term_rows = _term_log_rows(op, entry.terms, sched.m, N)[:, 1:]
            if p == 0:
                lognum = term_rows.max(axis=0)
            else:
                scaled = p * term_rows
                m_col = scaled.max(axis=0)
                lognum = np.full(N, NEG_INF)
                finite = m_col > NEG_INF
                if np.any(finite):
                    lognum[finite] = m_col[finite] / p + np.log(
                        np.sum(np.exp(scaled[:, finite] - m_col[finite]),
                               axis=0)) / p
            total = float(np.logaddexp.reduce(lognum))
        else:
            total = log_sum(single_term_pieces(op, entry.terms[0], sched.m, N))
        avg_log = total - math.log(N) - logden
        ok = avg_log >= math.log(k)
        all_pass = all_pass and ok
        rows.append({"k": k, "N_k": N, "average": LogScalar(1, avg_log),
                     "target": k, "pass": ok})
    if not all_pass:
        verdict = "condition-failed"
    elif a_ok:
        verdict = "certified-at-horizon"
    else:
        verdict = "condition-B-holds-at-horizon"
    params = {"m": sched.m, "mode": mode, "p": p,
              "levels": [e.k for e in sched.entries]}
    return CertificateReport("kothe-mly", verdict, params, rows, notes)


# ---------------------------------------------------------------------------
# absolute Cesaro boundedness: falsification search


def _probe_average_log(op: ShiftOperator, index: int, coeff: LogScalar,
                       N: int) -> float:
    """ln of (1/N) * sum_{n=1..N} ||B^n (coeff * e_index)||_1."""
    entry = MLYWitnessEntry(1, N, (WitnessTerm(index, coeff),))
    return _average_log(op, entry, 1, "auto")


def check_acb(op: ShiftOperator,
              probes: Sequence[tuple[str, int, float, int]],
              C_grid: Sequence[float] = (1.0, 10.0, 100.0)) -> CertificateReport:
    """Search for violations of absolute Cesaro boundedness.

    A falsifier for the constant C is a probe (a scaled basis vector y and a
    horizon N) with (1/N) * sum_{n<=N} ||B^n y|| strictly above C * ||y||,
    the norm being the first seminorm (constant-in-k rows required, so it is
    the space norm).  Probes are (label, index, coeff, N) and are scanned in
    the given order; per C, the first hit is reported.
    """
    if op.space.matrix.rule != "constant":
        raise ValueError("absolute Cesaro boundedness needs a Banach-space "
                         "norm: constant-in-k rows")
    if not probes:
        raise ValueError("need at least one probe")
    results = []
    for label, index, coeff, N in probes:
        c = LogScalar.from_real(float(coeff))
        if c.sign == 0:
            raise ValueError(f"probe {label!r} has zero coefficient")
        norm = seminorm(op.space, SparseVector.from_terms([(index, c)]), 1)
        if norm.sign == 0:
            raise ValueError(f"probe {label!r} has zero norm")
        avg_log = _probe_average_log(op, int(index), c, int(N))
        results.append((label, int(N), avg_log, norm.logmag))
    rows = []
    all_witnessed = True
    for C in C_grid:
        hit = next(((label, N, avg_log, norm_log)
                    for label, N, avg_log, norm_log in results
                    if avg_log > math.log(C) + norm_log), None)
        if hit is None:
            rows.append({"C": C, "witnessed": False, "probe": "", "N": 0,
                         "average": ZERO, "norm": ZERO})
            all_witnessed = False
        else:
            label, N, avg_log, norm_log = hit
            rows.append({"C": C, "witnessed": True, "probe": label, "N": N,
                         "average": LogScalar(1, avg_log),
                         "norm": LogScalar(1, norm_log)})
    verdict = "falsified-at-horizon" if all_witnessed else "no-falsifier-found-at-horizon"
    params = {"C_grid": list(C_grid), "probes": [p[0] for p in probes]}
    return CertificateReport("acb", verdict, params, rows)


def basis_probes(indices: Sequence[int], horizons: Sequence[int]
                 ) -> list[tuple[str, int, float, int]]:
    """Canonical probes: unit basis vectors, one horizon each."""
    if len(indices) != len(horizons):
        raise ValueError("need one horizon per probe index")
    return [(f"e[{i}]", int(i), 1.0, int(N)) for i, N in zip(indices, horizons)]


# ---------------------------------------------------------------------------
# combined criterion: mean Li-Yorke <=> not ACB and vanishing product averages


def check_f3(op: ShiftOperator, horizon: int,
             probes: Sequence[tuple[str, int, float, int]],
             C_grid: Sequence[float] = (1.0, 10.0, 100.0),
             lim_tol: float = 1e-3) -> CertificateReport:
    """Two-part equivalence check on two-sided Banach sequence spaces.

    Part 1: the running minimum of (1/N) * sum_{n<=N} |w_{-n} ... w_{-1}|
    drops strictly below lim_tol within the horizon (the averages of raw
    backward weight products at anchor 0).  Part 2: absolute Cesaro
    boundedness is falsified for every C in the grid.  Both together certify;
    anything less does not.
    """
    if op.space.index_set is not IndexSet.Z:
        raise ValueError("the equivalence check runs on the two-sided domain")
    if op.space.matrix.rule != "constant":
        raise ValueError("the equivalence check needs constant-in-k rows")
    if horizon < 1:
        raise ValueError("need a positive horizon")
    _dense_guard(1, horizon)
    table = product_log_table(op.weights, 0, horizon)
    logs = table.logs[1:].copy()
    logs[table.signs[1:] == 0] = NEG_INF
    ns = np.arange(1, horizon + 1)
    avg_logs = logaddexp_accumulate(logs) - np.log(ns)
    at = int(np.argmin(avg_logs))
    min_avg = float(np.exp(avg_logs[at])) if avg_logs[at] > NEG_INF else 0.0
    part1 = min_avg < lim_tol
    acb = check_acb(op, probes, C_grid)
    part2 = acb.verdict == "falsified-at-horizon"
    rows = [{"part": "product-average-liminf", "ok": part1,
             "running_min": min_avg, "argmin_N": int(ns[at])}]
    for r in acb.rows:
        row = {"part": "acb"}
        row.update(r)
        rows.append(row)
    verdict = "certified-at-horizon" if (part1 and part2) else "not-certified-at-horizon"
    params = {"horizon": horizon, "lim_tol": lim_tol, "C_grid": list(C_grid),
              "acb_verdict": acb.verdict}
    return CertificateReport("mly-equivalence", verdict, params, rows)

"""Finite-horizon certificate checkers for distributional chaos of shifts.

Nothing here claims a limit statement.  A witness schedule supplies finitely
many levels k, each with a horizon N_k and a finitely supported vector, and a
level passes by the exact integer comparison

    count * k > (k - 1) * N_k        <=>        count / N_k > 1 - 1/k,

where count is how many times n <= N_k the orbit ratio strictly exceeds k.
Ratios are compared in the log domain with no tolerance slack, so engineered
ties (ratio exactly equal to k) fail, as a strict inequality demands.

Every schedule can be evaluated two ways: a dense numpy sweep for horizons up
to ~2e7, and a piecewise log-linear route for single-term witnesses that
stays exact at astronomical horizons (10**200 is fine).  Verdicts come from
the closed vocabulary in `reports` and are always horizon-stamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .density import IndexPredicate, density_envelope, naturals
from .numerics import NEG_INF, LogScalar, SparseVector, logsumexp_p
from .piecewise import count_above
from .reports import POSITIVE_VERDICTS, CertificateReport
from .shift import ShiftOperator, orbit_seminorm_log_array
from .spaces import IndexSet, seminorm
from .weights import (MAX_DENSE, Piece, forward_product, overlay_row_runs,
                      product, product_log_table, product_pieces, shift_pieces)

DENSE_CELL_CAP = 40_000_000  # max terms * horizon cells for the dense route


# ---------------------------------------------------------------------------
# witness schedules


@dataclass(frozen=True)
class WitnessTerm:
    """One coefficient b at basis index i of a witness vector."""

    index: int
    coeff: LogScalar

    @staticmethod
    def of(index: int, coeff) -> "WitnessTerm":
        c = coeff if isinstance(coeff, LogScalar) else LogScalar.from_real(float(coeff))
        return WitnessTerm(int(index), c)


@dataclass(frozen=True)
class DCWitnessEntry:
    k: int
    horizon: int
    terms: tuple[WitnessTerm, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"levels start at k = 1, got {self.k}")
        if self.horizon < 1:
            raise ValueError(f"nonpositive horizon {self.horizon}")
        if not self.terms:
            raise ValueError(f"entry k={self.k} has no terms")
        seen = set()
        for t in self.terms:
            if t.coeff.sign == 0:
                raise ValueError(f"zero coefficient at index {t.index} (k={self.k})")
            if t.index in seen:
                raise ValueError(f"duplicate witness index {t.index} (k={self.k})")
            seen.add(t.index)

    def vector(self) -> SparseVector:
        return SparseVector.from_terms([(t.index, t.coeff) for t in self.terms])


@dataclass(frozen=True)
class WitnessScheduleDC:
    """m, then per level k: horizon N_k and the witness terms.

    Optionally carries the density-1 candidate set D and the anchor probes I
    used by the decay condition (A); when present, certification can settle
    both conditions in one call.
    """

    m: int
    entries: tuple[DCWitnessEntry, ...]
    D: IndexPredicate | None = None
    anchors: tuple[int, ...] = ()

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


def schedule_dc(m: int, entries: Iterable[tuple[int, int, Iterable[tuple[int, float]]]],
                D: IndexPredicate | None = None,
                anchors: Iterable[int] = ()) -> WitnessScheduleDC:
    """Build a schedule from plain (k, N_k, [(index, coeff), ...]) triples."""
    built = tuple(DCWitnessEntry(int(k), int(N),
                                 tuple(WitnessTerm.of(i, b) for i, b in terms))
                  for k, N, terms in entries)
    return WitnessScheduleDC(int(m), built, D, tuple(anchors))


# ---------------------------------------------------------------------------
# numerator evaluation, dense and piecewise


def single_term_pieces(op: ShiftOperator, term: WitnessTerm, m: int,
                       n_hi: int) -> list[Piece]:
    """ln |b| * |P(i, n)| * a(i - n, m) over n in [1, n_hi] as pieces.

    Unilateral annihilation shows up as a trailing zero piece; the matrix row
    is only consulted on the alive stretch, so row generators never see
    off-domain indices.
    """
    i = term.index
    alive_hi = n_hi
    if op.space.index_set is IndexSet.N:
        alive_hi = min(n_hi, i - 1)
        if alive_hi < 1:
            return [Piece(1, n_hi, NEG_INF, 0.0)]
    pieces = product_pieces(op.weights, i, 1, alive_hi)
    row_runs = op.space.matrix.log_row_runs(m, i - alive_hi, i - 1)
    if row_runs is None:
        raise ValueError("piecewise route needs run-structured matrix rows")
    pieces = overlay_row_runs(pieces, row_runs, anchor=i)
    pieces = shift_pieces(pieces, term.coeff.logmag)
    if alive_hi < n_hi:
        pieces.append(Piece(alive_hi + 1, n_hi, NEG_INF, 0.0))
    return pieces


def _dense_guard(n_terms: int, horizon: int) -> None:
    if horizon > MAX_DENSE or n_terms * (horizon + 1) > DENSE_CELL_CAP:
        raise ValueError(
            f"dense route too large ({n_terms} terms, horizon {horizon}); "
            "single-term schedules can use mode='pieces'")


def _resolve_mode(mode: str, n_terms: int, horizon: int) -> str:
    if mode not in ("auto", "dense", "pieces"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "pieces" and n_terms != 1:
        raise ValueError("piecewise route handles single-term witnesses only")
    if mode != "auto":
        return mode
    if horizon <= MAX_DENSE and n_terms * (horizon + 1) <= DENSE_CELL_CAP:
        return "dense"
    if n_terms == 1:
        return "pieces"
    raise ValueError("no feasible route: multi-term witness at a horizon "
                     "beyond the dense cap")


def _term_log_rows(op: ShiftOperator, terms: Sequence[WitnessTerm], m: int,
                   horizon: int) -> np.ndarray:
    """rows[t, n] = ln |b_t * P(i_t, n) * a(i_t - n, m)| for n = 0..horizon."""
    ns = np.arange(horizon + 1)
    rows = np.empty((len(terms), horizon + 1))
    for t, term in enumerate(terms):
        table = product_log_table(op.weights, term.index, horizon)
        js = term.index - ns
        safe = np.maximum(js, 1) if op.space.index_set is IndexSet.N else js
        arow = op.space.matrix.log_row_array(m, safe)
        vals = term.coeff.logmag + table.logs + arow
        vals[table.signs == 0] = NEG_INF
        rows[t] = vals
    return rows


def _ratio_threshold(k: int, horizon: int) -> float:
    try:
        return float(horizon) * (k - 1) / k
    except OverflowError:
        return math.inf


def _passes(count: int, k: int, horizon: int) -> bool:
    return count * k > (k - 1) * horizon


# ---------------------------------------------------------------------------
# condition (A): decay along a density-1 candidate set


def check_dc_condition_A(op: ShiftOperator, D: IndexPredicate | None,
                         anchors: Iterable[int], horizon: int,
                         decay_tol: float = 1e-6, k_max: int = 4,
                         tail_fraction_min: float = 0.5) -> CertificateReport:
    """Is ||P(i, n) e_{i-n}||_k eventually below decay_tol along D?

    "Eventually at this horizon" means: past the last violating n in D, the
    remaining D-tail is clean and makes up at least tail_fraction_min of
    D cap [1, horizon] (a nonnegligible settled stretch, not a lucky last
    sample).  Verdicts speak only about the checked range.
    """
    D = D if D is not None else naturals()
    anchors = list(anchors)
    if horizon < 1 or not anchors:
        raise ValueError("need a positive horizon and at least one anchor")
    _dense_guard(1, horizon)
    ns = np.arange(1, horizon + 1)
    if D.count_array is not None:
        counts = D.count_array(ns).astype(np.int64)
        mask = np.diff(np.concatenate(([0], counts))) == 1
    else:
        mask = D.member_mask(horizon)
    d_total = int(mask.sum())
    params = {"horizon": horizon, "decay_tol": decay_tol, "k_max": k_max,
              "tail_fraction_min": tail_fraction_min, "set": D.name or "D"}
    if d_total == 0:
        return CertificateReport("dc-condition-A", "inconclusive", params,
                                 notes=["candidate set has no members in range"])
    env = density_envelope(D, horizon)
    params["set_ratio_at_horizon"] = env.ratio_at_horizon
    params["set_ratio_lower"] = env.lower
    log_tol = math.log(decay_tol)
    rows = []
    all_ok = True
    for i in anchors:
        table = product_log_table(op.weights, i, horizon)
        js = i - ns
        safe = np.maximum(js, 1) if op.space.index_set is IndexSet.N else js
        dead = table.signs[1:] == 0
        for k in range(1, k_max + 1):
            vals = table.logs[1:] + op.space.matrix.log_row_array(k, safe)
            vals[dead] = NEG_INF
            viol = mask & (vals >= log_tol)
            n_viol = int(viol.sum())
            if n_viol == 0:
                last, tail, ok = 0, d_total, True
            else:
                last = int(ns[viol][-1])
                tail = int(mask[last:].sum())
                ok = tail >= tail_fraction_min * d_total
            all_ok = all_ok and ok
            rows.append({"anchor": i, "seminorm": k, "violations": n_viol,
                         "last_violation": last, "tail_members": tail, "ok": ok})
    verdict = "condition-A-holds-at-horizon" if all_ok else "condition-failed"
    return CertificateReport("dc-condition-A", verdict, params, rows)


def refute_dc_condition_A(op: ShiftOperator, anchors: Iterable[int], horizon: int,
                          bound: float = 0.5, delta: float = 1 / 6,
                          settle_by: int = 50) -> CertificateReport:
    """No density-1 set can carry the decay: the bad set is too thick.

    For each anchor i, bad(i) = {n : ||P(i, n) e_{i-n}||_1 >= bound}.  If the
    prefix ratio of bad(i) exceeds delta at every N from some N0 <= settle_by
    up to the horizon, any candidate D with prefix ratio -> 1 must meet bad(i)
    with positive frequency, so the decay fails along every such D.
    """
    anchors = list(anchors)
    if horizon < 1 or not anchors:
        raise ValueError("need a positive horizon and at least one anchor")
    _dense_guard(1, horizon)
    ns = np.arange(1, horizon + 1)
    log_bound = math.log(bound)
    rows = []
    all_ok = True
    for i in anchors:
        table = product_log_table(op.weights, i, horizon)
        js = i - ns
        safe = np.maximum(js, 1) if op.space.index_set is IndexSet.N else js
        vals = table.logs[1:] + op.space.matrix.log_row_array(1, safe)
        vals[table.signs[1:] == 0] = NEG_INF
        bad = vals >= log_bound
        counts = np.cumsum(bad)
        ratios = counts / ns
        low = ratios <= delta
        n0 = int(ns[low][-1]) + 1 if low.any() else 1
        ok = n0 <= min(settle_by, horizon)
        if ok:
            seg = ratios[n0 - 1:]
            at = int(np.argmin(seg))
            min_ratio, min_at = float(seg[at]), int(ns[n0 - 1 + at])
        else:
            min_ratio, min_at = 0.0, n0
        all_ok = all_ok and ok
        rows.append({"anchor": i, "settles_at": n0, "min_ratio": min_ratio,
                     "min_ratio_at": min_at, "bad_count": int(counts[-1]),
                     "ok": ok})
    verdict = "condition-A-refuted-at-horizon" if all_ok else "inconclusive"
    params = {"horizon": horizon, "bound": bound, "delta": delta,
              "settle_by": settle_by}
    return CertificateReport("dc-condition-A-refutation", verdict, params, rows)


# ---------------------------------------------------------------------------
# condition (B): counting orbit-ratio exceedances


def _condition_a_state(op: ShiftOperator, sched: WitnessScheduleDC,
                       condition_a: CertificateReport | None,
                       horizon_a: int, decay_tol: float,
                       k_max: int) -> tuple[bool | None, str]:
    if condition_a is not None:
        ok = condition_a.verdict in POSITIVE_VERDICTS
        return ok, f"condition (A) supplied: {condition_a.verdict}"
    if op.space.index_set is IndexSet.N:
        return True, "condition (A) automatic on the one-sided domain (orbits annihilate)"
    if sched.D is not None and sched.anchors:
        rep = check_dc_condition_A(op, sched.D, sched.anchors, horizon_a,
                                   decay_tol, k_max)
        return rep.verdict in POSITIVE_VERDICTS, f"condition (A) checked: {rep.verdict}"
    return None, "condition (A) not checked"


def check_dc_condition_B(op: ShiftOperator, sched: WitnessScheduleDC,
                         mode: str = "auto",
                         condition_a: CertificateReport | None = None,
                         horizon_a: int = 10_000, decay_tol: float = 1e-6,
                         k_max_a: int = 4) -> CertificateReport:
    """Count, per level k, the n <= N_k with seminorm ratio > k.

    The numerator is ||B^n (sum_j b_j e_{i_j})||_m, the denominator the
    schedule vector's p(k)-th seminorm.  certified-at-horizon needs every
    level to pass and condition (A) to be settled (supplied, derived from the
    schedule's D/anchors, or automatic on the one-sided domain); otherwise a
    full count yields condition-B-holds-at-horizon.
    """
    a_ok, a_note = _condition_a_state(op, sched, condition_a, horizon_a,
                                      decay_tol, k_max_a)
    rows = []
    notes = [a_note]
    all_pass = True
    for entry in sched.entries:
        k, N = entry.k, entry.horizon
        pk = sched.p_of(k)
        den = seminorm(op.space, entry.vector(), pk)
        if den.sign == 0:
            notes.append(f"zero denominator seminorm at k={k} (p(k)={pk})")
            return CertificateReport("dc-condition-B", "condition-failed",
                                     {"m": sched.m, "mode": mode}, rows, notes)
        use = _resolve_mode(mode, len(entry.terms), N)
        thr = math.log(k) + den.logmag
        if use == "dense":
            _dense_guard(len(entry.terms), N)
            lognum = orbit_seminorm_log_array(op, entry.vector(), sched.m, N)
            count = int(np.count_nonzero(lognum[1:] > thr))
        else:
            pieces = single_term_pieces(op, entry.terms[0], sched.m, N)
            count = count_above(pieces, thr)
        ok = _passes(count, k, N)
        all_pass = all_pass and ok
        rows.append({"k": k, "N_k": N, "count": count,
                     "threshold": _ratio_threshold(k, N), "pass": ok})
    if not all_pass:
        verdict = "condition-failed"
    elif a_ok:
        verdict = "certified-at-horizon"
    else:
        verdict = "condition-B-holds-at-horizon"
    params = {"m": sched.m, "mode": mode,
              "levels": [e.k for e in sched.entries]}
    return CertificateReport("dc-condition-B", verdict, params, rows, notes)


# ---------------------------------------------------------------------------
# the Kothe-space forms (max form for p = 0, p-power sums for p >= 1)


def _kothe_denominator(op: ShiftOperator, terms: Sequence[WitnessTerm],
                       pk: int) -> float:
    """ln of the p(k)-seminorm *form*: max for p = 0, else the p-power sum
    (no 1/p root; the comparison carries k^p instead of k)."""
    logs = []
    for t in terms:
        la = op.space.matrix.log_entry(t.index, pk)
        if la > NEG_INF:
            logs.append(la + t.coeff.logmag)
    if not logs:
        return NEG_INF
    if op.space.p == 0:
        return max(logs)
    p = op.space.p
    m = max(logs)
    return m * p + math.log(math.fsum(math.exp(p * (x - m)) for x in logs))


def check_kothe_dc(op: ShiftOperator, sched: WitnessScheduleDC,
                   mode: str = "auto",
                   condition_a: CertificateReport | None = None,
                   horizon_a: int = 10_000, decay_tol: float = 1e-6,
                   k_max_a: int = 4) -> CertificateReport:
    """Same counts as check_dc_condition_B via the matrix-entry forms.

    p = 0 compares max_j |a(i_j - n, m) b_j P_j(n)| against k times the max
    denominator form; p >= 1 compares p-power sums against k^p times the
    p-power denominator.  Counts agree exactly with the seminorm route.
    """
    a_ok, a_note = _condition_a_state(op, sched, condition_a, horizon_a,
                                      decay_tol, k_max_a)
    p = op.space.p
    rows = []
    notes = [a_note]
    all_pass = True
    for entry in sched.entries:
        k, N = entry.k, entry.horizon
        logden = _kothe_denominator(op, entry.terms, sched.p_of(k))
        if logden == NEG_INF:
            notes.append(f"zero denominator form at k={k}")
            return CertificateReport("kothe-dc", "condition-failed",
                                     {"m": sched.m, "mode": mode}, rows, notes)
        use = _resolve_mode(mode, len(entry.terms), N)
        if p == 0:
            thr = math.log(k) + logden
        else:
            thr = p * math.log(k) + logden
        if use == "dense":
            _dense_guard(len(entry.terms), N)
            term_rows = _term_log_rows(op, entry.terms, sched.m, N)
            if p == 0:
                lognum = term_rows.max(axis=0)
            else:
                scaled = p * term_rows
                m_col = scaled.max(axis=0)
                lognum = np.full(N + 1, NEG_INF)
                finite = m_col > NEG_INF
                if np.any(finite):
                    lognum[finite] = m_col[finite] + np.log(
                        np.sum(np.exp(scaled[:, finite] - m_col[finite]), axis=0))
            count = int(np.count_nonzero(lognum[1:] > thr))
        else:
            pieces = single_term_pieces(op, entry.terms[0], sched.m, N)
            if p != 0:
                pieces = [pc if pc.log0 == NEG_INF
                          else Piece(pc.n0, pc.n1, p * pc.log0, p * pc.slope)
                          for pc in pieces]
            count = count_above(pieces, thr)
        ok = _passes(count, k, N)
        all_pass = all_pass and ok
        rows.append({"k": k, "N_k": N, "count": count,
                     "threshold": _ratio_threshold(k, N), "pass": ok})
    if not all_pass:
        verdict = "condition-failed"
    elif a_ok:
        verdict = "certified-at-horizon"
    else:
        verdict = "condition-B-holds-at-horizon"
    params = {"m": sched.m, "mode": mode, "p": p,
              "levels": [e.k for e in sched.entries]}
    return CertificateReport("kothe-dc", verdict, params, rows, notes)


# ---------------------------------------------------------------------------
# the Banach-space forms on lp(Z)/c0(Z) with trivial weight rows


def _require_unit_rows(op: ShiftOperator, what: str) -> None:
    mat = op.space.matrix
    if mat.rule != "constant":
        raise ValueError(f"{what} needs constant-in-k rows")
    probe = [1, 2, 17, 123] if op.space.index_set is IndexSet.N else [-123, -17, -1, 0, 1, 17, 123]
    for j in probe:
        if mat.base.value_at(j) != 1.0:
            raise ValueError(f"{what} needs the row weights identically 1 "
                             f"(found {mat.base.value_at(j)} at j={j})")


def check_lp_c0_dc(op: ShiftOperator, S: Iterable[int],
                   k_range: Sequence[int] = (1, 2, 3, 4, 5, 6),
                   horizons: Sequence[int] | None = None,
                   eps: float = 1e-2,
                   coeffs: Sequence[float] | None = None) -> CertificateReport:
    """Banach-space counting forms on lp(Z)/c0(Z)-style spaces.

    c0 (p = 0): for each k, take the sup over the probed horizons N of
        card{n <= N : |P(i, n)| > k for some i in S} / N,
    and pass iff the inf over k of those sups strictly exceeds eps.

    lp (p >= 1): for each k at its horizon N_k, count the n with
        (sum_i b_i |P(i, n)|^p) / (sum_i b_i) > k,
    and pass iff count >= eps * N_k at every level (b_i > 0).
    """
    _require_unit_rows(op, "the lp/c0 counting form")
    S = sorted(set(int(i) for i in S))
    if not S:
        raise ValueError("index set S is empty")
    ks = list(k_range)
    horizons = list(horizons) if horizons is not None else [100 * (t + 1) for t in range(len(ks))]
    if len(horizons) < len(ks):
        raise ValueError("need a horizon per level")
    if any(b <= a for a, b in zip(horizons, horizons[1:])):
        raise ValueError("horizons must be strictly increasing")
    n_max = max(horizons)
    _dense_guard(len(S), n_max)
    ns = np.arange(1, n_max + 1)
    logs = np.empty((len(S), n_max))
    for t, i in enumerate(S):
        table = product_log_table(op.weights, i, n_max)
        vals = table.logs[1:].copy()
        vals[table.signs[1:] == 0] = NEG_INF
        logs[t] = vals
    rows = []
    if op.space.p == 0:
        combined = logs.max(axis=0)
        inf_ratio = math.inf
        for k in ks:
            exceed = np.cumsum(combined > math.log(k))
            ratios = exceed[np.array(horizons) - 1] / np.array(horizons)
            at = int(np.argmax(ratios))
            sup_ratio = float(ratios[at])
            inf_ratio = min(inf_ratio, sup_ratio)
            rows.append({"k": k, "sup_ratio": sup_ratio,
                         "sup_at_N": horizons[at]})
        ok = inf_ratio > eps
        params = {"eps": eps, "S": S, "inf_ratio": inf_ratio,
                  "form": "c0-sup-count"}
        verdict = "passes-at-horizon" if ok else "condition-failed"
        return CertificateReport("lp-c0-dc", verdict, params, rows)
    b = [1.0] * len(S) if coeffs is None else [float(x) for x in coeffs]
    if len(b) != len(S) or any(x <= 0 for x in b):
        raise ValueError("coefficients must be positive, one per index in S")
    p = op.space.p
    scaled = p * logs + np.log(b)[:, None]
    m_col = scaled.max(axis=0)
    lognum = np.full(n_max, NEG_INF)
    finite = m_col > NEG_INF
    if np.any(finite):
        lognum[finite] = m_col[finite] + np.log(
            np.sum(np.exp(scaled[:, finite] - m_col[finite]), axis=0))
    logden = math.log(math.fsum(b))
    all_pass = True
    for k, N in zip(ks, horizons):
        count = int(np.count_nonzero(lognum[:N] - logden > math.log(k)))
        ok = count >= eps * N
        all_pass = all_pass and ok
        rows.append({"k": k, "N_k": N, "count": count,
                     "required": eps * N, "pass": ok})
    params = {"eps": eps, "S": S, "p": p, "form": "lp-weighted-average"}
    verdict = "passes-at-horizon" if all_pass else "condition-failed"
    return CertificateReport("lp-c0-dc", verdict, params, rows)


# ---------------------------------------------------------------------------
# sufficient condition via weight-plateau windows (unweighted shift on
# lp(nu, N) / c0(nu, N))


def check_mop_sufficient(op: ShiftOperator, alphas: Callable[[int], float],
                         j0: Callable[[int], int], j1: Callable[[int], int],
                         k_range: Sequence[int] = (1, 2, 3, 4, 5),
                         n_max: int = 40, mode: str = "auto") -> CertificateReport:
    """Plateau-window sufficient condition, then the emitted schedule.

    For each level k, scan n <= n_max for the first window [j0(n), j1(n))
    with nu(j1(n)) / alpha_n < 1/(2k) and with the alpha_n-large indices
    filling more than a (1 - 1/k) fraction of the window.  Each hit emits a
    single-term witness at j1(n) with horizon j1(n) - j0(n), and the whole
    schedule is then settled by check_dc_condition_B.
    """
    if op.space.index_set is not IndexSet.N:
        raise ValueError("plateau-window condition runs on the one-sided domain")
    if op.space.matrix.rule != "constant":
        raise ValueError("plateau-window condition needs constant-in-k rows")
    nu = op.space.matrix.base
    rows = []
    entries = []
    prev_N = 0
    for k in k_range:
        found = False
        for n in range(1, n_max + 1):
            lo, hi = int(j0(n)), int(j1(n))
            if hi - lo < n:
                raise ValueError(f"window shorter than its index: j1({n}) - j0({n}) < {n}")
            N = hi - lo
            if N <= prev_N:
                continue
            alpha = float(alphas(n))
            tail_ratio = nu.value_at(hi) / alpha
            if not tail_ratio < 1 / (2 * k):
                continue
            card = _count_at_least(nu, lo, hi - 1, alpha)
            if card * k > (k - 1) * N:
                rows.append({"k": k, "n_k": n, "N_k": N, "witness_index": hi,
                             "large_count": card, "tail_ratio": tail_ratio})
                entries.append((k, N, [(hi, 1.0)]))
                prev_N = N
                found = True
                break
        if not found:
            params = {"n_max": n_max, "levels": list(k_range)}
            return CertificateReport(
                "mop-sufficient", "inconclusive", params, rows,
                notes=[f"window scan exhausted at level k={k}"])
    sched = schedule_dc(1, entries)
    sub = check_dc_condition_B(op, sched, mode=mode)
    by_k = {r["k"]: r for r in sub.rows}
    for r in rows:
        r["count"] = by_k[r["k"]]["count"]
        r["pass"] = by_k[r["k"]]["pass"]
    params = {"n_max": n_max, "levels": list(k_range), "m": 1}
    notes = [f"emitted schedule settled by the counting check: {sub.verdict}"]
    return CertificateReport("mop-sufficient", sub.verdict, params, rows, notes)


def _count_at_least(nu, lo: int, hi: int, alpha: float) -> int:
    """card{j in [lo, hi] : nu(j) >= alpha}, run-based when possible."""
    if hi < lo:
        return 0
    runs = nu.runs_over(lo, hi)
    if runs is not None:
        return sum(r.count for r in runs if r.value >= alpha)
    if hi - lo + 1 > MAX_DENSE:
        raise ValueError("window too large for valuewise counting")
    vals = nu.values_array(np.arange(lo, hi + 1))
    return int(np.count_nonzero(vals >= alpha))


# ---------------------------------------------------------------------------
# hypercyclicity witness families


def check_hypercyclicity_witness(op: ShiftOperator, n_seq: Sequence[int],
                                 ell_window: tuple[int, int],
                                 decay_tol: float = 1e-6,
                                 k_max: int = 4) -> CertificateReport:
    """Decay of both orbit families along a probe sequence (n_j).

    For every window anchor ell and seminorm index k <= k_max, checks that
    ||P(ell, n_j) e_{ell - n_j}||_k and ||e_{ell + n_j}||_k / |F(ell, n_j)|
    (F the forward product) fall below decay_tol and stay there through the
    last probed j.  The scalar core (both families with the row factor
    stripped) is reported alongside, with its own settle index.
    """
    n_seq = [int(n) for n in n_seq]
    if not n_seq or any(b <= a for a, b in zip(n_seq, n_seq[1:])) or n_seq[0] < 1:
        raise ValueError("n_seq must be strictly increasing positive integers")
    lo, hi = ell_window
    ells = [l for l in range(lo, hi + 1) if op.space.index_set.contains(l)]
    if not ells:
        raise ValueError("anchor window misses the index set")
    log_tol = math.log(decay_tol)
    T = len(n_seq)
    rows = []
    all_settled = True
    worst_scalar = 1
    worst_seminorm = 1
    for ell in ells:
        back = [product(op.weights, ell, n) for n in n_seq]
        fwd = [forward_product(op.weights, ell, n) for n in n_seq]
        if any(f.sign == 0 for f in fwd):
            raise ValueError(f"forward product vanishes at anchor {ell}")
        sb = [b.logmag for b in back]
        sf = [-f.logmag for f in fwd]
        scalar_settle = max(_settle_index(sb, log_tol), _settle_index(sf, log_tol))
        semi_settle = 1
        for k in range(1, k_max + 1):
            vb = [NEG_INF if back[t].sign == 0
                  else op.space.matrix.log_entry(ell - n_seq[t], k) + back[t].logmag
                  for t in range(T)]
            vf = [op.space.matrix.log_entry(ell + n_seq[t], k) - fwd[t].logmag
                  for t in range(T)]
            semi_settle = max(semi_settle, _settle_index(vb, log_tol),
                              _settle_index(vf, log_tol))
        settled = semi_settle <= T and scalar_settle <= T
        all_settled = all_settled and settled
        worst_scalar = max(worst_scalar, scalar_settle)
        worst_seminorm = max(worst_seminorm, semi_settle)
        rows.append({"ell": ell, "scalar_settle": scalar_settle,
                     "seminorm_settle": semi_settle, "settled": settled})
    verdict = "witnessed" if all_settled else "not-witnessed-at-depth"
    params = {"terms": T, "decay_tol": decay_tol, "k_max": k_max,
              "scalar_settle_index": worst_scalar,
              "seminorm_settle_index": worst_seminorm}
    return CertificateReport("hypercyclicity-witness", verdict, params, rows)


def _settle_index(vals: Sequence[float], log_tol: float) -> int:
    """1-based index from which the family stays strictly below the tol;
    len(vals) + 1 when the last value still violates."""
    last_bad = 0
    for t, v in enumerate(vals):
        if v >= log_tol:
            last_bad = t + 1
    return last_bad + 1


def refute_hypercyclicity(op: ShiftOperator, horizon: int, k_max: int = 4,
                          floor: float = 1.0) -> CertificateReport:
    """Uniform lower bound on the forward family kills every probe sequence.

    If ||e_{a+n}||_k / |w_a ... w_{a+n-1}| >= floor for all n <= horizon and
    k <= k_max (a the leftmost domain anchor), no sequence can drag the
    forward family to zero within this range.
    """
    if horizon < 1:
        raise ValueError("need a positive horizon")
    _dense_guard(1, horizon)
    anchor = 1 if op.space.index_set is IndexSet.N else 0
    logw = op.weights.log_abs_array(anchor, anchor + horizon - 1)
    cum = np.cumsum(logw)
    js = anchor + np.arange(1, horizon + 1)
    log_floor = math.log(floor)
    rows = []
    overall = math.inf
    for k in range(1, k_max + 1):
        vals = op.space.matrix.log_row_array(k, js) - cum
        at = int(np.argmin(vals))
        mn = float(vals[at])
        overall = min(overall, mn)
        rows.append({"seminorm": k, "min_value": LogScalar(1, mn),
                     "min_at_n": at + 1})
    verdict = "refuted-at-horizon" if overall >= log_floor else "inconclusive"
    params = {"horizon": horizon, "floor": floor, "k_max": k_max,
              "anchor": anchor}
    return CertificateReport("hypercyclicity-refutation", verdict, params, rows)


# ---------------------------------------------------------------------------
# witness search


def search_witness_dc(op: ShiftOperator, m: int = 1,
                      k_range: Sequence[int] = (1, 2, 3, 4, 5, 6),
                      anchor_window: tuple[int, int] = (1, 60),
                      N_max: int = 60, r_max: int = 1) -> WitnessScheduleDC | None:
    """Deterministic scan for single-term witnesses (greedy r <= r_max).

    For each level k in ascending order, finds the smallest admissible
    horizon N (strictly above the previous level's) and the smallest anchor
    achieving the count bound; absence of a witness is a None, not an error.
    """
    lo, hi = anchor_window
    anchors = [i for i in range(lo, hi + 1) if op.space.index_set.contains(i)]
    if not anchors or N_max < 1:
        raise ValueError("empty anchor window or horizon")
    if len(anchors) * N_max > DENSE_CELL_CAP:
        raise ValueError("search window too large")
    ns = np.arange(1, N_max + 1)
    num: dict[int, np.ndarray] = {}
    for i in anchors:
        table = product_log_table(op.weights, i, N_max)
        js = i - ns
        safe = np.maximum(js, 1) if op.space.index_set is IndexSet.N else js
        vals = table.logs[1:] + op.space.matrix.log_row_array(m, safe)
        vals[table.signs[1:] == 0] = NEG_INF
        num[i] = vals
    prev_N = 0
    entries: list[tuple[int, int, list[tuple[int, float]]]] = []
    for k in sorted(int(k) for k in k_range):
        pk = m if k <= m else k
        best: tuple[int, list[int]] | None = None
        for i in anchors:
            found = _first_passing_horizon(op, [i], num, k, pk, prev_N, ns)
            if found is not None and (best is None or found < best[0]):
                best = (found, [i])
        if best is None and r_max > 1:
            best = _greedy_multi(op, anchors, num, k, pk, prev_N, ns, r_max)
        if best is None:
            return None
        N, chosen = best
        entries.append((k, N, [(i, 1.0) for i in chosen]))
        prev_N = N
    return schedule_dc(m, entries)


def _combined_lognum(op: ShiftOperator, chosen: Sequence[int],
                     num: dict[int, np.ndarray]) -> np.ndarray:
    rows = np.stack([num[i] for i in chosen])
    if op.space.p == 0:
        return rows.max(axis=0)
    from .numerics import logsumexp_p_rows
    return logsumexp_p_rows(rows, op.space.p)


def _first_passing_horizon(op: ShiftOperator, chosen: Sequence[int],
                           num: dict[int, np.ndarray], k: int, pk: int,
                           prev_N: int, ns: np.ndarray) -> int | None:
    den = seminorm(op.space,
                   SparseVector.from_terms([(i, 1.0) for i in chosen]), pk)
    if den.sign == 0:
        return None
    lognum = _combined_lognum(op, chosen, num)
    counts = np.cumsum(lognum > math.log(k) + den.logmag).astype(np.int64)
    passing = counts * k > (k - 1) * ns
    if prev_N > 0:
        passing[:prev_N] = False
    idx = np.flatnonzero(passing)
    return int(ns[idx[0]]) if idx.size else None


def _greedy_multi(op: ShiftOperator, anchors: Sequence[int],
                  num: dict[int, np.ndarray], k: int, pk: int, prev_N: int,
                  ns: np.ndarray, r_max: int) -> tuple[int, list[int]] | None:
    chosen: list[int] = []
    while len(chosen) < r_max:
        best: tuple[int, int] | None = None
        for i in anchors:
            if i in chosen:
                continue
            found = _first_passing_horizon(op, chosen + [i], num, k, pk, prev_N, ns)
            if found is not None and (best is None or found < best[0]):
                best = (found, i)
        if best is not None:
            return best[0], sorted(chosen + [best[1]])
        # no single addition passes; extend by the anchor with the best count
        gains: list[tuple[int, int]] = []
        for i in anchors:
            if i in chosen:
                continue
            den = seminorm(op.space,
                           SparseVector.from_terms([(j, 1.0) for j in chosen + [i]]), pk)
            if den.sign == 0:
                continue
            lognum = _combined_lognum(op, chosen + [i], num)
            gains.append((int(np.count_nonzero(lognum > math.log(k) + den.logmag)), -i))
        if not gains:
            return None
        gains.sort()
        chosen.append(-gains[-1][1])
    return None

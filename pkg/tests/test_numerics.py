"""Log-domain scalars, reductions, and sparse vectors."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftchaos.numerics import (
    NEG_INF,
    ONE,
    ZERO,
    LogScalar,
    SparseVector,
    logadd,
    logaddexp_accumulate,
    logmul,
    logsumexp_p,
    logsumexp_p_array,
    logsumexp_p_rows,
    sup_abs,
)

finite_reals = st.floats(min_value=-1e6, max_value=1e6,
                         allow_nan=False, allow_infinity=False)
nonzero_reals = finite_reals.filter(lambda x: abs(x) > 1e-9)


def close(a: float, b: float, rel: float = 1e-12) -> bool:
    return math.isclose(a, b, rel_tol=rel, abs_tol=1e-300)


class TestLogScalar:
    def test_constants(self):
        assert ZERO.sign == 0 and ZERO.logmag == NEG_INF
        assert ONE.sign == 1 and ONE.logmag == 0.0
        assert ZERO.is_zero() and not ONE.is_zero()

    @given(finite_reals)
    def test_roundtrip(self, x):
        assert close(LogScalar.from_real(x).to_real(), x)

    @given(nonzero_reals, nonzero_reals)
    def test_mul_matches_real(self, a, b):
        got = (LogScalar.from_real(a) * LogScalar.from_real(b)).to_real()
        assert close(got, a * b, rel=1e-12)

    @given(nonzero_reals, nonzero_reals)
    def test_div_matches_real(self, a, b):
        got = (LogScalar.from_real(a) / LogScalar.from_real(b)).to_real()
        assert close(got, a / b, rel=1e-12)

    def test_div_by_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    @given(finite_reals, finite_reals)
    def test_ordering_matches_reals(self, a, b):
        la, lb = LogScalar.from_real(a), LogScalar.from_real(b)
        assert (la < lb) == (a < b)
        assert (la <= lb) == (a <= b)
        assert (la > lb) == (a > b)
        assert (la >= lb) == (a >= b)

    @given(finite_reals)
    def test_neg_abs(self, a):
        la = LogScalar.from_real(a)
        assert close((-la).to_real(), -a)
        assert close(abs(la).to_real(), abs(a))

    @given(nonzero_reals, st.sampled_from([0.5, 1.0, 2.0, 3.0]))
    def test_abs_pow(self, a, p):
        got = LogScalar.from_real(a).abs_pow(p).to_real()
        assert close(got, abs(a) ** p, rel=1e-11)

    def test_huge_magnitudes_stay_finite(self):
        big = LogScalar.from_log(1, 5000.0)
        prod = big * big
        assert prod.logmag == 10000.0 and prod.sign == 1
        assert math.isinf(prod.to_real())

    def test_decimal_str(self):
        assert LogScalar.from_real(0.0).decimal_str() == "0"
        s = LogScalar.from_real(-2.0).decimal_str(6)
        assert s.startswith("-2.0")
        # far outside float range: rendered via exponent arithmetic
        s = LogScalar.from_log(1, 10000.0).decimal_str(4)
        assert "e+" in s
        mant, expo = s.split("e+")
        assert int(expo) == math.floor(10000.0 / math.log(10))
        assert 1.0 <= float(mant) < 10.0


class TestReductions:
    @given(st.lists(finite_reals, min_size=1, max_size=20))
    def test_logadd_matches_sum(self, xs):
        acc = ZERO
        for x in xs:
            acc = logadd(acc, LogScalar.from_real(x))
        assert close(acc.to_real(), math.fsum(xs), rel=1e-9)

    @given(st.lists(nonzero_reals, min_size=1, max_size=20),
           st.sampled_from([1.0, 2.0, 3.0]))
    def test_logsumexp_p_matches_rooted_power_sum(self, xs, p):
        got = logsumexp_p([LogScalar.from_real(x) for x in xs], p)
        want = math.fsum(abs(x) ** p for x in xs) ** (1.0 / p)
        assert close(got.to_real(), want, rel=1e-9)

    @given(st.lists(finite_reals, min_size=1, max_size=20))
    def test_sup_abs(self, xs):
        got = sup_abs([LogScalar.from_real(x) for x in xs])
        assert close(got.to_real(), max(abs(x) for x in xs))

    def test_logmul_zero_annihilates(self):
        assert logmul(ZERO, LogScalar.from_real(3.0)).is_zero()
        three = LogScalar.from_real(3.0)
        # adding zero returns the other operand bitwise
        assert logadd(ZERO, three) == three
        assert logadd(three, ZERO) == three
        # opposite signs with equal magnitude cancel exactly
        assert logadd(three, -three).is_zero()

    @given(st.lists(st.floats(min_value=-50, max_value=50), min_size=1,
                    max_size=30),
           st.sampled_from([1.0, 2.0]))
    def test_logsumexp_p_array(self, logs, p):
        got = logsumexp_p_array(np.array(logs), p)
        want = math.log(math.fsum(math.exp(v) ** p for v in logs)) / p
        assert close(got, want, rel=1e-9) or abs(got - want) < 1e-9

    def test_logsumexp_p_rows_columnwise(self):
        rows = np.array([[0.0, 1.0, NEG_INF], [math.log(3.0), 1.0, NEG_INF]])
        got = logsumexp_p_rows(rows, 1.0)
        assert close(got[0], math.log(4.0))
        assert close(got[1], 1.0 + math.log(2.0))
        assert got[2] == NEG_INF
        # p = 2 roots the column power sums
        got2 = logsumexp_p_rows(rows, 2.0)
        assert close(got2[0], math.log(math.sqrt(10.0)))

    @given(st.lists(st.floats(min_value=-30, max_value=30), min_size=1,
                    max_size=40))
    def test_logaddexp_accumulate(self, logs):
        got = logaddexp_accumulate(np.array(logs))
        running = 0.0
        for t, v in enumerate(logs):
            running += math.exp(v)
            assert abs(float(got[t]) - math.log(running)) < 1e-9


class TestSparseVector:
    def test_basis_and_getitem(self):
        e = SparseVector.basis(5, 2.0)
        assert e[5].to_real() == 2.0
        assert e[4].is_zero()
        assert e.support() == [5]

    def test_from_terms_drops_zeros(self):
        v = SparseVector.from_terms([(1, 0.0), (2, 3.0)])
        assert v.support() == [2]

    @given(st.dictionaries(st.integers(-50, 50), nonzero_reals,
                           min_size=0, max_size=8),
           st.dictionaries(st.integers(-50, 50), nonzero_reals,
                           min_size=0, max_size=8))
    def test_add_sub_match_dicts(self, da, db):
        va = SparseVector.from_terms(da.items())
        vb = SparseVector.from_terms(db.items())
        s = va + vb
        d = va - vb
        keys = set(da) | set(db)
        for j in keys:
            a, b = da.get(j, 0.0), db.get(j, 0.0)
            # cancellation error scales with the operands, not the result
            tol = 1e-9 * max(abs(a), abs(b), 1.0)
            assert abs(s[j].to_real() - (a + b)) <= tol
            assert abs(d[j].to_real() - (a - b)) <= tol

    @given(st.dictionaries(st.integers(-50, 50), nonzero_reals,
                           min_size=1, max_size=8),
           nonzero_reals, st.integers(-10, 10))
    def test_scale_shift(self, d, c, off):
        v = SparseVector.from_terms(d.items())
        sc = v.scale(c)
        sh = v.shift_indices(off)
        for j, x in d.items():
            assert close(sc[j].to_real(), c * x, rel=1e-11)
            assert close(sh[j + off].to_real(), x)

    def test_eq_and_zero(self):
        a = SparseVector.from_terms([(1, 2.0), (3, -1.0)])
        b = SparseVector.from_terms([(3, -1.0), (1, 2.0)])
        assert a == b
        assert (a - b).is_zero()
        assert SparseVector.zero().is_zero()

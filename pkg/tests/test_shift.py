"""The weighted backward shift: stepwise action vs closed products."""

from __future__ import annotations

import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from shiftchaos import catalog
from shiftchaos.numerics import NEG_INF, SparseVector
from shiftchaos.shift import (
    apply,
    iterate_basis,
    orbit_seminorm_log_array,
    orbit_seminorm_series,
)
from shiftchaos.spaces import IndexSet

OPS = [catalog.build_example(n) for n in
       ("ex1_s_Z_hc_not_dc", "ex2_kothe_dc_not_hc", "ex4_lp_mly_not_hc",
        "rolewicz_lp_N")]
op_cases = st.sampled_from(OPS)
coeffs = st.floats(min_value=-100, max_value=100).filter(
    lambda x: abs(x) > 1e-6)


def domain_index(op, raw: int) -> int:
    return abs(raw) + 1 if op.space.index_set is IndexSet.N else raw


class TestApply:
    def test_single_step(self):
        op = catalog.build_example("rolewicz_lp_N")
        y = apply(op, SparseVector.basis(5))
        assert y.support() == [4]
        assert y[4].to_real() == 2.0

    def test_edge_annihilates(self):
        op = catalog.build_example("rolewicz_lp_N")
        assert apply(op, SparseVector.basis(1)).is_zero()

    def test_linear_combination(self):
        op = catalog.build_example("rolewicz_lp_N")
        x = SparseVector.from_terms([(1, 7.0), (3, 1.5)])
        y = apply(op, x)
        assert y.support() == [2]
        assert math.isclose(y[2].to_real(), 3.0, rel_tol=1e-12)

    @settings(max_examples=200)
    @given(op_cases, st.integers(-25, 25), st.integers(0, 50))
    def test_iterate_basis_matches_stepwise(self, op, raw_i, n):
        i = domain_index(op, raw_i)
        cur = SparseVector.basis(i)
        for _ in range(n):
            cur = apply(op, cur)
        want = iterate_basis(op, i, n)
        assert cur.support() == want.support()
        for j in cur.support():
            assert cur[j].sign == want[j].sign
            assert abs(cur[j].logmag - want[j].logmag) < 1e-9


class TestOrbitSeries:
    @given(op_cases,
           st.dictionaries(st.integers(1, 25), coeffs, min_size=1, max_size=4),
           st.integers(1, 4), st.integers(1, 40))
    def test_matches_brute_force(self, op, d, m, n_max):
        if op.space.index_set is IndexSet.Z:
            x = SparseVector.from_terms((j - 13, v) for j, v in d.items())
        else:
            x = SparseVector.from_terms(d.items())
        series = orbit_seminorm_series(op, x, m, n_max)
        assert len(series) == n_max + 1
        brute = oracles.brute_orbit_norms(op, x, n_max, m)
        start = oracles.naive_seminorm(op.space, x, m)
        assert math.isclose(series[0].to_real(), start, rel_tol=1e-9)
        for n in range(1, n_max + 1):
            got = series[n].to_real()
            want = brute[n - 1]
            if want == 0.0:
                assert series[n].is_zero()
            else:
                assert math.isclose(got, want, rel_tol=1e-9)

    @given(op_cases, st.integers(1, 25), st.integers(1, 4),
           st.integers(1, 40))
    def test_log_array_matches_series(self, op, raw_i, m, n_max):
        i = domain_index(op, raw_i)
        x = SparseVector.basis(i, 2.0)
        arr = orbit_seminorm_log_array(op, x, m, n_max)
        series = orbit_seminorm_series(op, x, m, n_max)
        assert arr.shape == (n_max + 1,)
        for n in range(n_max + 1):
            if series[n].is_zero():
                assert arr[n] == NEG_INF
            else:
                assert abs(float(arr[n]) - series[n].logmag) < 1e-12

    def test_zero_vector(self):
        op = OPS[0]
        series = orbit_seminorm_series(op, SparseVector.zero(), 1, 5)
        assert all(s.is_zero() for s in series)
        arr = orbit_seminorm_log_array(op, SparseVector.zero(), 1, 5)
        assert np.all(arr == NEG_INF)

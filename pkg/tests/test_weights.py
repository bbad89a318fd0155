#!/bin/python
#-----------------------------------------------------------------------------
# File Name : test_weights.py
# Author: rsperiods contributors
#
# Creation Date : Fri Aug 21 09:12:30 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
import numpy as np
import pytest

from rsperiods.corpus.create_hdf5 import sample_balanced_case, sample_pure_weight
from rsperiods.weights import *

R, C = FieldKind.REAL, FieldKind.COMPLEX


def real(*row):
    return Weight(R, (row,))

def cplx(row, conj):
    return Weight(C, (row, conj))


def test_halfint_arithmetic():
    a = HalfInt.of('5/2')
    assert a.twice_value == 5
    assert a + 1 == HalfInt.of('7/2')
    assert 1 - a == HalfInt.of('-3/2')
    assert HalfInt.of(3).is_integer and HalfInt.of(3).to_int() == 3
    assert str(HalfInt(-1)) == '-1/2'
    with pytest.raises(TypeError):
        HalfInt.of(0.5)
    with pytest.raises(ValueError):
        HalfInt.of('1/3')


@pytest.mark.parametrize('w, expected', [
    (real(2, 1, 0), 2),
    (cplx((1, 0), (0, -1)), 0),
    (real(3, 1, 0), None),
])
def test_is_pure(w, expected):
    assert is_pure(w) == expected


@pytest.mark.parametrize('w, expected', [
    (real(2, 0), real(0, -2)),
    (real(0, 0), real(0, 0)),
    (cplx((1, 0), (0, -1)), cplx((0, -1), (1, 0))),
])
def test_dual_weight(w, expected):
    assert dual_weight(w) == expected
    assert dual_weight(dual_weight(w)) == w


@pytest.mark.parametrize('w, expected', [
    (real(2, 0), [('5/2', '-1/2')]),
    (real(0, 0), [('1/2', '-1/2')]),
    (cplx((1, 0), (0, -1)), [('3/2', '-1/2'), ('1/2', '-3/2')]),
])
def test_infinitesimal(w, expected):
    assert infinitesimal(w) == tuple(tuple(HalfInt.of(x) for x in row) for row in expected)


def test_weight_validation():
    with pytest.raises(ValueError):
        real(0, 2)
    with pytest.raises(DimensionError):
        Weight(C, ((1, 0),))
    with pytest.raises(DimensionError):
        check_pair(real(2, 0), real(1, 0))
    with pytest.raises(DimensionError):
        check_pair(real(2, 0), Weight(C, ((0,), (0,))))
    with pytest.raises(PurityError):
        check_pair(real(3, 1, 0), real(0, 0))


def test_weight_json():
    w = cplx((1, 0), (0, -1))
    assert Weight.from_json(w.to_json()) == w
    assert Weight.from_json([[2, 0]], 'R') == real(2, 0)


def test_galois_conjugate_swaps_rows():
    assert galois_conjugate(cplx((1, 0), (0, -1))) == cplx((0, -1), (1, 0))
    assert galois_conjugate(real(2, 0)) == real(2, 0)


def test_pure_weight():
    assert pure_weight(R, 3, 2, [2]) == real(2, 1, 0)
    assert pure_weight(R, 2, 2, [2]) == real(2, 0)
    assert pure_weight(C, 2, 0, [1, 0]) == cplx((1, 0), (0, -1))
    with pytest.raises(PurityError):
        pure_weight(R, 3, 1, [1])


@pytest.mark.parametrize('mu, nu, expected', [
    (real(2, 0), real(0), (-2, 0)),
    (real(0, 0, 0), real(0, 0), (0, 0)),
    (cplx((1, 0), (0, -1)), cplx((5,), (-5,)), (None, None)),
])
def test_balanced_places(mu, nu, expected):
    interval = balanced_places(mu, nu)
    assert (interval.lo, interval.hi) == expected
    assert BalancedInterval.from_json(interval.to_json()) == interval


def test_is_balanced_at():
    assert is_balanced_at(real(2, 0), real(0), 0)
    assert not is_balanced_at(real(2, 0), real(0), 1)
    assert list(balanced_places(real(2, 0), real(0))) == [-2, -1, 0]


@pytest.mark.parametrize('mu, nu, expected', [
    (real(2, 0), real(0), {'-3/2', '-1/2', '1/2'}),
    (real(0, 0), real(0), {'1/2'}),
    (cplx((1, 0), (0, -1)), cplx((0,), (0,)), {'1/2'}),
])
def test_critical_places(mu, nu, expected):
    assert critical_places_via_poles(mu, nu) == {HalfInt.of(x) for x in expected}


@pytest.mark.parametrize('n, field, expected', [
    (3, R, (2, 6)),
    (2, C, (1, 4)),
    (1, R, (0, 1)),
])
def test_dims(n, field, expected):
    assert dims(n, field) == expected


def _random_pair(rng):
    field = R if rng.integers(2) else C
    n = int(rng.integers(2, 6))
    return sample_pure_weight(rng, field, n, 6), sample_pure_weight(rng, field, n - 1, 6)

def test_balanced_interval_matches_scan():
    rng = np.random.default_rng(7)
    for _ in range(200):
        mu, nu = _random_pair(rng)
        interval = balanced_places(mu, nu)
        scan = [j for j in balanced_window(mu, nu) if is_balanced_at(mu, nu, j)]
        assert scan == list(interval)

def test_balanced_equals_critical():
    rng = np.random.default_rng(11)
    for i in range(200):
        # half of the pairs are balanced by construction
        if i % 2:
            field = R if rng.integers(2) else C
            mu, nu, _ = sample_balanced_case(rng, field, int(rng.integers(2, 6)), 6)
        else:
            mu, nu = _random_pair(rng)
        expected = {HalfInt(2 * j + 1) for j in balanced_places(mu, nu)}
        assert critical_places_via_poles(mu, nu) == expected


def test_dual_purity_and_strict_infinitesimal():
    rng = np.random.default_rng(37)
    for _ in range(100):
        field = R if rng.integers(2) else C
        w = sample_pure_weight(rng, field, int(rng.integers(1, 6)), 6)
        assert is_pure(dual_weight(w)) == -is_pure(w)
        for row in infinitesimal(w):
            assert all(row[i] > row[i + 1] for i in range(len(row) - 1))

if __name__ == "__main__":
    pytest.main([__file__])

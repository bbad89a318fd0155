#!/bin/python
#-----------------------------------------------------------------------------
# File Name : test_orbit.py
# Author: rsperiods contributors
#
# Creation Date : Mon Aug 24 13:58:07 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
import pytest
import sympy

from rsperiods.orbit import *


@pytest.mark.parametrize('k, expected', [
    (1, [[1]]),
    (2, [[1, 1], [0, 1]]),
    (3, [[1, 2, 1], [0, 1, 0], [0, 0, 1]]),
])
def test_z_matrix(k, expected):
    assert matrix_to_json(z_matrix(k)) == expected

def test_z_zero_is_empty():
    assert z_matrix(0).shape == (0, 0)
    assert mat_det(z_matrix(0)) == 1

def test_w_matrix():
    assert matrix_to_json(w_matrix(3)) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    with pytest.raises(ValueError):
        w_matrix(0)


@pytest.mark.parametrize('k', range(1, 13))
def test_z_in_sl(k):
    z = z_matrix(k)
    assert mat_det(z) == 1
    assert is_unimodular(z)


def test_mat_det_and_rank():
    assert mat_det(z_matrix(3)) == 1
    assert mat_det(w_matrix(2)) == -1
    assert mat_rank_q(sympy.zeros(3, 4)) == 0
    assert mat_rank_q(sympy.Matrix([[1, 2], [2, 4]])) == 1
    with pytest.raises(ValueError):
        mat_det(sympy.zeros(2, 3))
    assert not is_unimodular(sympy.Matrix([[2, 0], [0, 1]]))


@pytest.mark.parametrize('n', range(2, 7))
def test_open_orbit_rank(n):
    rank, expected = open_orbit_rank(n)
    assert expected == n * n + (n - 1) * (n - 1)
    assert rank == expected

def test_open_orbit_rank_small():
    assert open_orbit_rank(2) == (5, 5)
    assert open_orbit_rank(3) == (13, 13)
    with pytest.raises(ValueError):
        open_orbit_rank(1)


def test_tangent_vectors_shape():
    vectors = tangent_vectors(3)
    assert all(len(v) == 9 + 4 for v in vectors)


@pytest.mark.parametrize('k', range(1, 9))
def test_w_is_an_involution(k):
    w = w_matrix(k)
    assert w * w == sympy.eye(k)

if __name__ == "__main__":
    pytest.main([__file__])

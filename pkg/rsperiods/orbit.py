#!/bin/python
#-----------------------------------------------------------------------------
# File Name : orbit.py
# Author: rsperiods contributors
#
# Creation Date : Fri Aug 14 15:48:02 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
"""The matrices w_k, z_k and a rank certificate that (z_n, z_{n-1}) lies in the
open Borel x Borel orbit on GL_n x GL_{n-1} / GL_{n-1}."""
from __future__ import annotations

from functools import lru_cache
from typing import List, Tuple

import sympy
from sympy import ImmutableMatrix, QQ
from sympy.polys.matrices import DomainMatrix


def w_matrix(k: int) -> ImmutableMatrix:
    """Antidiagonal permutation matrix of size k."""
    if k < 1:
        raise ValueError("w_k needs k >= 1, got {}".format(k))
    return ImmutableMatrix(k, k, lambda r, c: 1 if r + c == k - 1 else 0)

def _unimodular_inverse(m) -> ImmutableMatrix:
    d = mat_det(m)
    if d not in (1, -1):
        raise ValueError("Matrix is not unimodular (det = {})".format(d))
    if m.rows == 1:
        return ImmutableMatrix([[d]])
    # M^-1 = adj(M) / det(M)
    return ImmutableMatrix(m.adjugate(method="bareiss") * d)

@lru_cache(maxsize=None)
def z_matrix(k: int) -> ImmutableMatrix:
    """z_0 = empty, z_1 = [1],
    z_k = (w_{k-1} + 1)(z_{k-2}^-1 + 1_2)[[z_{k-1}^T w_{k-1} z_{k-1}, e_{k-1}^T], [0, 1]]."""
    if k < 0:
        raise ValueError("z_k needs k >= 0, got {}".format(k))
    if k == 0:
        return ImmutableMatrix(0, 0, [])
    if k == 1:
        return ImmutableMatrix([[1]])
    prev, w = z_matrix(k - 1), w_matrix(k - 1)
    e_last = sympy.zeros(k - 1, 1)
    e_last[k - 2, 0] = 1
    block = (prev.T * w * prev).row_join(e_last).col_join(
        sympy.zeros(1, k - 1).row_join(sympy.ones(1, 1)))
    if k == 2:
        middle = sympy.eye(2)
    else:
        middle = sympy.diag(_unimodular_inverse(z_matrix(k - 2)), sympy.eye(2))
    return ImmutableMatrix(sympy.diag(w, 1) * middle * block)


def mat_det(m) -> int:
    m = sympy.Matrix(m)
    if m.rows != m.cols:
        raise ValueError("det needs a square matrix, got {}x{}".format(m.rows, m.cols))
    if m.rows == 0:
        return 1
    return int(m.det(method="bareiss"))

def mat_rank_q(m) -> int:
    m = sympy.Matrix(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    return int(DomainMatrix.from_Matrix(m).convert_to(QQ).rank())

def is_unimodular(m) -> bool:
    m = sympy.Matrix(m)
    if m.rows != m.cols or mat_det(m) not in (1, -1):
        return False
    return all(x.is_integer for x in _unimodular_inverse(m))


def _elementary(n, r, c):
    e = sympy.zeros(n, n)
    e[r, c] = 1
    return e

def _flatten(a, b) -> List[int]:
    return [int(x) for x in list(a) + list(b)]

def tangent_vectors(n: int) -> List[List[int]]:
    """Spanning set of the tangent space of the orbit at (z_n, z_{n-1}) inside
    gl_n + gl_{n-1}, flattened row-major."""
    if n < 2:
        raise ValueError("open_orbit_rank needs n >= 2, got {}".format(n))
    zn, zn1 = z_matrix(n), z_matrix(n - 1)
    zn_inv, zn1_inv = _unimodular_inverse(zn), _unimodular_inverse(zn1)
    vectors = []
    # Lie algebras of the lower-triangular Borels
    for r in range(n):
        for c in range(r + 1):
            vectors.append(_flatten(_elementary(n, r, c), sympy.zeros(n - 1, n - 1)))
    for r in range(n - 1):
        for c in range(r + 1):
            vectors.append(_flatten(sympy.zeros(n, n), _elementary(n - 1, r, c)))
    # diagonal GL_{n-1}, embedded in the upper-left block
    for r in range(n - 1):
        for c in range(n - 1):
            x = _elementary(n - 1, r, c)
            vectors.append(_flatten(zn * sympy.diag(x, 0) * zn_inv, zn1 * x * zn1_inv))
    return vectors

def open_orbit_rank(n: int) -> Tuple[int, int]:
    return mat_rank_q(sympy.Matrix(tangent_vectors(n))), n * n + (n - 1) * (n - 1)


def matrix_to_json(m):
    m = sympy.Matrix(m)
    return [[int(x) for x in m.row(r)] for r in range(m.rows)]

#!/bin/python
#-----------------------------------------------------------------------------
# File Name : local_factors.py
# Author: rsperiods contributors
#
# Creation Date : Wed Aug 12 11:05:29 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
"""Archimedean L-, epsilon- and gamma-factors of characters, of pi_mu x pi_nu,
and the sign-corrected product Gamma_psi(s, rho, rho', chi)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .characters import (ArchCharacter, ComplexCharacter, RealCharacter, char_inv,
                         char_prod, value_at_minus_one)
from .gamma_calculus import (GammaProduct, UnitI, gamma_c, gamma_r, gp_inv, gp_mul,
                             gp_reflect, unit_product)
from .weights import (DimensionError, FieldKind, HalfInt, Weight, check_pair, dual_weight,
                      infinitesimal)


@dataclass(frozen=True)
class PsiData:
    """eps_psi in {+1, -1} (psi_R(x) = e^{eps_psi 2 pi i x}) and the n of psi^(n)(x) = psi((-1)^n x)."""
    eps_psi: int = 1
    n: int = 2

    def __post_init__(self):
        if self.eps_psi not in (1, -1):
            raise ValueError("eps_psi must be +1 or -1, got {!r}".format(self.eps_psi))
        if self.n < 1:
            raise ValueError("n must be positive, got {}".format(self.n))

    @property
    def base(self) -> UnitI:
        # (-1)^n eps_psi i
        return UnitI(1 + 2 * (self.n % 2)) * UnitI.of_sign(self.eps_psi)


def l_char(w: ArchCharacter) -> GammaProduct:
    if isinstance(w, RealCharacter):
        return gamma_r(w.t + w.delta)
    return gamma_c(max(w.a, w.b))

def l_discrete(a, b, twist: RealCharacter) -> GammaProduct:
    # delta of the twist does not enter
    a, b = HalfInt.of(a), HalfInt.of(b)
    if a == b or not (a - b).is_integer:
        raise ValueError("D_(a,b) needs a - b a non-zero integer, got a={}, b={}".format(a, b))
    return gamma_c(twist.t + max(a, b))

def l_discrete_pair(a, b, a2, b2) -> GammaProduct:
    a, b, a2, b2 = (HalfInt.of(v) for v in (a, b, a2, b2))
    for x, y in ((a, b), (a2, b2)):
        if x == y or not (x - y).is_integer:
            raise ValueError("D_(a,b) needs a - b a non-zero integer, got a={}, b={}".format(x, y))
    return gp_mul(gamma_c(max(a + a2, b + b2)), gamma_c(max(a + b2, b + a2)))

def eps_char(w: ArchCharacter, psi: PsiData) -> UnitI:
    if isinstance(w, RealCharacter):
        return psi.base ** w.delta
    return psi.base ** abs((w.a - w.b).to_int())

def gamma_char(w: ArchCharacter, psi: PsiData) -> GammaProduct:
    """gamma(s, w, psi^(n)) = eps(s, w, psi^(n)) L(1-s, w^-1) / L(s, w)"""
    return gp_mul(unit_product(eps_char(w, psi)),
                  gp_mul(gp_reflect(l_char(char_inv(w))), gp_inv(l_char(w))))


def _index_pairs(n):
    # (i, k) with 1 <= i <= n, 1 <= k <= n-1, i + k <= n
    return [(i, k) for i in range(1, n + 1) for k in range(1, n) if i + k <= n]

def l_pair(mu: Weight, nu: Weight) -> GammaProduct:
    check_pair(mu, nu)
    mt, nt = infinitesimal(mu), infinitesimal(nu)
    out = GammaProduct.one()
    for e in range(mu.field.embeddings):
        for i, k in _index_pairs(mu.n):
            out = gp_mul(out, gamma_c(mt[e][i-1] + nt[e][k-1]))
    return out

def dual_l_pair(mu: Weight, nu: Weight) -> GammaProduct:
    return l_pair(dual_weight(mu), dual_weight(nu))


def _real_blocks(tilde):
    # Langlands parameter of pi_mu over R: D_{mu~_i, mu~_{n+1-i}} for i <= n/2,
    # plus |.|^{mu~_m} when n is odd
    n = len(tilde)
    blocks = [('D', tilde[i], tilde[n - 1 - i]) for i in range(n // 2)]
    if n % 2:
        blocks.append(('chi', tilde[n // 2]))
    return blocks

def l_pair_from_parameters(mu: Weight, nu: Weight) -> GammaProduct:
    """L(s, pi_mu x pi_nu) assembled from the Langlands parameters through the
    character and discrete-series tables. Agrees with l_pair on balanced pairs."""
    check_pair(mu, nu)
    mt, nt = infinitesimal(mu), infinitesimal(nu)
    n = mu.n
    out = GammaProduct.one()
    if mu.field is FieldKind.COMPLEX:
        for i in range(1, n + 1):
            for k in range(1, n):
                out = gp_mul(out, l_char(ComplexCharacter(mt[0][i-1] + nt[0][k-1],
                                                          mt[1][n-i] + nt[1][n-1-k])))
        return out
    for x in _real_blocks(mt[0]):
        for y in _real_blocks(nt[0]):
            if x[0] == 'D' and y[0] == 'D':
                factor = l_discrete_pair(x[1], x[2], y[1], y[2])
            elif x[0] == 'D':
                factor = l_discrete(x[1], x[2], RealCharacter(y[1], 0))
            elif y[0] == 'D':
                factor = l_discrete(y[1], y[2], RealCharacter(x[1], 0))
            else:
                raise DimensionError("n and n-1 cannot both be odd")
            out = gp_mul(out, factor)
    return out

def parameter_gaps(mu: Weight, nu: Weight) -> Dict[Tuple[int, int, int], HalfInt]:
    """mu~^iota_i + nu~^iota_k - mu~^iotabar_{n+1-i} - nu~^iotabar_{n-k}, keyed by
    (embedding, i, k). On balanced pairs this is positive exactly when i + k <= n."""
    check_pair(mu, nu)
    mt, nt = infinitesimal(mu), infinitesimal(nu)
    n = mu.n
    gaps = {}
    for e in range(mu.field.embeddings):
        c = (e + 1) % len(mt)
        for i in range(1, n + 1):
            for k in range(1, n):
                gaps[(e, i, k)] = mt[e][i-1] + nt[e][k-1] - mt[c][n-i] - nt[c][n-1-k]
    return gaps


def _check_sizes(rho, rho2):
    if len(rho) < 2 or len(rho2) != len(rho) - 1:
        raise DimensionError("Expected parameter lists of sizes (n, n-1), got ({}, {})".format(
            len(rho), len(rho2)))

def sgn_triple(rho: List[ArchCharacter], rho2: List[ArchCharacter], chi: ArchCharacter) -> UnitI:
    """prod_{k<i, i+k<=n} (rho_i rho'_k chi)(-1)"""
    _check_sizes(rho, rho2)
    n = len(rho)
    bits = sum(value_at_minus_one(char_prod(rho[i-1], rho2[k-1], chi))
               for i, k in _index_pairs(n) if k < i)
    return UnitI(2 * bits)

def big_gamma(rho, rho2, chi: ArchCharacter, psi: PsiData) -> GammaProduct:
    """Gamma_psi(s, rho, rho', chi) = sgn(rho, rho', chi) prod_{i+k<=n} gamma(s, rho_i rho'_k chi, psi^(n))"""
    _check_sizes(rho, rho2)
    if psi.n != len(rho):
        raise DimensionError("psi twist n={} does not match len(rho)={}".format(psi.n, len(rho)))
    out = unit_product(sgn_triple(rho, rho2, chi))
    for i, k in _index_pairs(len(rho)):
        out = gp_mul(out, gamma_char(char_prod(rho[i-1], rho2[k-1], chi), psi))
    return out

#!/bin/python
#-----------------------------------------------------------------------------
# File Name : test_local_factors.py
# Author: rsperiods contributors
#
# Creation Date : Fri Aug 21 14:40:19 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
import numpy as np
import pytest

from rsperiods.characters import (ComplexCharacter, RealCharacter, char_mul, char_prod, rho_list,
                                  sign_character, trivial_character)
from rsperiods.corpus.create_hdf5 import sample_balanced_case
from rsperiods.gamma_calculus import (GammaProduct, UnitI, eval_numeric, gamma_c, gamma_r, gp_mul,
                                      unit_product)
from rsperiods.local_factors import *
from rsperiods.utils import STRIP_POINTS
from rsperiods.weights import FieldKind, HalfInt, Weight, is_balanced_at

R, C = FieldKind.REAL, FieldKind.COMPLEX


@pytest.mark.parametrize('w, expected', [
    (RealCharacter('1/2', 0), gamma_r('1/2')),
    (RealCharacter(0, 1), gamma_r(1)),
    (ComplexCharacter('3/2', '-1/2'), gamma_c('3/2')),
])
def test_l_char(w, expected):
    assert l_char(w) == expected


def test_l_discrete():
    assert l_discrete('5/2', '-1/2', RealCharacter(0, 0)) == gamma_c('5/2')
    assert l_discrete(1, 0, RealCharacter(0, 1)) == gamma_c(1)
    assert l_discrete_pair(1, 0, 1, 0) == gamma_c(2) * gamma_c(1)
    with pytest.raises(ValueError):
        l_discrete(1, 1, RealCharacter(0, 0))


@pytest.mark.parametrize('w, psi, expected', [
    (RealCharacter(0, 1), PsiData(1, 2), UnitI(1)),
    (RealCharacter('7/2', 0), PsiData(-1, 3), UnitI(0)),
    (ComplexCharacter('3/2', '-1/2'), PsiData(1, 3), UnitI(2)),
])
def test_eps_char(w, psi, expected):
    assert eps_char(w, psi) == expected


def test_gamma_char():
    psi = PsiData(1, 2)
    assert gamma_char(RealCharacter('1/2', 0), psi) == gamma_r('1/2', sign=-1) / gamma_r('1/2')
    assert gamma_char(RealCharacter(0, 0), psi) == gamma_r(1, sign=-1) / gamma_r(0)
    assert gamma_char(ComplexCharacter(1, 0), psi) == gp_mul(
        unit_product(UnitI(1)), gamma_c(1, sign=-1) / gamma_c(1))


def test_psi_validation():
    with pytest.raises(ValueError):
        PsiData(0, 2)


@pytest.mark.parametrize('mu, nu, expected', [
    (Weight(R, ((2, 0),)), Weight(R, ((0,),)), gamma_c('5/2')),
    (Weight.zero(R, 2), Weight.zero(R, 1), gamma_c('1/2')),
    (Weight(C, ((1, 0), (0, -1))), Weight.zero(C, 1), gamma_c('3/2') * gamma_c('1/2')),
])
def test_l_pair(mu, nu, expected):
    assert l_pair(mu, nu) == expected


def test_dual_l_pair():
    assert dual_l_pair(Weight(R, ((2, 0),)), Weight(R, ((0,),))) == gamma_c('1/2')


def test_sgn_triple():
    assert sgn_triple(rho_list(Weight(R, ((2, 0),))), rho_list(Weight(R, ((0,),))),
                      RealCharacter(0, 1)) == UnitI(0)
    rho, rho2 = rho_list(Weight.zero(R, 3), 1), rho_list(Weight.zero(R, 2), 0)
    assert sgn_triple(rho, rho2, RealCharacter(0, 0)) == UnitI(2)
    rho = rho_list(Weight.zero(R, 3), 0)
    assert sgn_triple(rho, rho2, RealCharacter(0, 0)) == UnitI(0)
    with pytest.raises(DimensionError):
        sgn_triple(rho, rho, RealCharacter(0, 0))


def test_big_gamma():
    psi = PsiData(1, 2)
    x = big_gamma(rho_list(Weight(R, ((2, 0),))), rho_list(Weight(R, ((0,),))), RealCharacter(0, 0), psi)
    assert x == gamma_r('-3/2', sign=-1) / gamma_r('5/2')
    x = big_gamma(rho_list(Weight.zero(R, 2)), rho_list(Weight.zero(R, 1)), RealCharacter(0, 0), psi)
    assert x == gamma_r('1/2', sign=-1) / gamma_r('1/2')
    with pytest.raises(DimensionError):
        big_gamma(rho_list(Weight.zero(R, 2)), rho_list(Weight.zero(R, 1)), RealCharacter(0, 0),
                  PsiData(1, 3))


def _balanced_pairs(seed, count):
    rng = np.random.default_rng(seed)
    for i in range(count):
        field = (R, C)[i % 2]
        yield sample_balanced_case(rng, field, 2 + i % 4, 6)

def test_l_pair_shifts_are_index_sums():
    for mu, nu, _ in _balanced_pairs(13, 40):
        mt, nt = infinitesimal(mu), infinitesimal(nu)
        expected = GammaProduct.one()
        for e in range(mu.field.embeddings):
            for i in range(1, mu.n + 1):
                for k in range(1, mu.n):
                    if i + k <= mu.n:
                        expected = expected * gamma_c(mt[e][i-1] + nt[e][k-1])
        assert l_pair(mu, nu) == expected

def test_parameter_assembly_matches_l_pair():
    for mu, nu, j in _balanced_pairs(17, 60):
        assert is_balanced_at(mu, nu, j)
        assert l_pair_from_parameters(mu, nu) == l_pair(mu, nu)

def test_positivity_on_balanced_pairs():
    for mu, nu, _ in _balanced_pairs(19, 60):
        for (e, i, k), gap in parameter_gaps(mu, nu).items():
            assert (gap.twice_value > 0) == (i + k <= mu.n)


def test_eps_char_properties():
    rng = np.random.default_rng(47)
    for _ in range(100):
        psi = PsiData(int(rng.choice([1, -1])), int(rng.integers(1, 7)))
        x = RealCharacter(HalfInt(int(rng.integers(-9, 10))), int(rng.integers(2)))
        y = RealCharacter(HalfInt(int(rng.integers(-9, 10))), int(rng.integers(2)))
        b = int(rng.integers(-9, 10))
        w = ComplexCharacter(HalfInt(b + 2 * int(rng.integers(-4, 5))), HalfInt(b))
        for c in (x, y, w):
            assert eps_char(c, psi) ** 4 == UnitI(0)
        # sgn * sgn is trivial while eps(sgn)^2 = -1
        correction = UnitI(2 * (x.delta * y.delta))
        assert eps_char(char_mul(x, y), psi) == eps_char(x, psi) * eps_char(y, psi) * correction

def test_big_gamma_matches_numeric_composition():
    rng = np.random.default_rng(53)
    for mu, nu, _ in _balanced_pairs(53, 24):
        psi = PsiData(int(rng.choice([1, -1])), mu.n)
        chi = sign_character(mu.field) if rng.integers(2) else trivial_character(mu.field)
        rho, rho2 = rho_list(mu), rho_list(nu)
        exact = big_gamma(rho, rho2, chi, psi)
        for s in STRIP_POINTS:
            expected = sgn_triple(rho, rho2, chi).to_complex()
            for i in range(1, mu.n + 1):
                for k in range(1, mu.n):
                    if i + k <= mu.n:
                        expected *= eval_numeric(gamma_char(char_prod(rho[i-1], rho2[k-1], chi), psi), s)
            assert abs(eval_numeric(exact, s) - expected) <= 1e-9 * max(1.0, abs(expected))

if __name__ == "__main__":
    pytest.main([__file__])

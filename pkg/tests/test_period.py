#!/bin/python
#-----------------------------------------------------------------------------
# File Name : test_period.py
# Author: rsperiods contributors
#
# Creation Date : Mon Aug 24 09:35:50 2026
# Last Modified :
#
# Copyright : (c) rsperiods contributors
# Licence : GPLv2
#-----------------------------------------------------------------------------
import warnings

import numpy as np
import pytest

from rsperiods.characters import (EpsilonChoice, sign_character, trivial_character,
                                  valid_epsilon_choices)
from rsperiods.corpus.create_hdf5 import SuiteConfig, generate_cases, sample_balanced_case
from rsperiods.gamma_calculus import GammaProduct, UnitI, reduce_to_constant
from rsperiods.period import *
from rsperiods.utils import CONSTANCY_TOL, MATCH_TOL
from rsperiods.weights import FieldKind, Weight, galois_conjugate

R, C = FieldKind.REAL, FieldKind.COMPLEX

MU_R, NU_R = Weight(R, ((2, 0),)), Weight(R, ((0,),))
MU_C, NU_C = Weight(C, ((1, 0), (0, -1))), Weight.zero(C, 1)


@pytest.mark.parametrize('mu, nu, j, eps_psi, expected', [
    (Weight.zero(R, 3), Weight.zero(R, 2), 0, 1, UnitI(0)),
    (MU_R, NU_R, 0, 1, UnitI(2)),
    (MU_R, NU_R, -1, 1, UnitI(1)),
    (MU_C, NU_C, 0, 1, UnitI(1)),
    (Weight(R, ((1, 1, 1),)), Weight.zero(R, 2), -1, 1, UnitI(0)),
])
def test_omega_constant(mu, nu, j, eps_psi, expected):
    assert omega_constant(mu, nu, j, eps_psi) == expected

def test_omega_warns_when_unbalanced():
    with pytest.warns(NotBalancedWarning):
        omega_constant(MU_R, NU_R, 1)


def test_trivial_ratio_cancels():
    ratio = archimedean_ratio(Weight.zero(R, 2), Weight.zero(R, 1), 0, trivial_character(R))
    assert ratio == GammaProduct.one()
    assert reduce_to_constant(ratio) == UnitI(0)

def test_ratio_pieces():
    big_num, big_den, l_num, l_den = ratio_pieces(MU_R, NU_R, 0, trivial_character(R))
    assert len(big_num.atoms) == 2 and len(big_den.atoms) == 2
    assert str(l_num) == 'i^0 * Γ_C(s+5/2)'
    assert str(l_den) == 'i^0 * Γ_C(s+1/2)'

def test_complex_ratio_reduces_to_i():
    assert reduce_to_constant(archimedean_ratio(MU_C, NU_C, 0, trivial_character(C))) == UnitI(1)


@pytest.mark.parametrize('mu, nu, j, chi, eps, eps_psi, constant', [
    (Weight.zero(R, 2), Weight.zero(R, 1), 0, trivial_character(R), EpsilonChoice(), 1, UnitI(0)),
    (MU_R, NU_R, 0, trivial_character(R), EpsilonChoice(), 1, UnitI(2)),
    (MU_R, NU_R, 0, sign_character(R), EpsilonChoice(0, 1), -1, None),
    (Weight(R, ((1, 1, 1),)), Weight.zero(R, 2), -1, trivial_character(R), EpsilonChoice(1, 0), 1, UnitI(0)),
    (MU_C, NU_C, 0, trivial_character(C), EpsilonChoice(), -1, None),
])
def test_verify_archimedean(mu, nu, j, chi, eps, eps_psi, constant):
    report = verify_archimedean(mu, nu, j, chi, eps, eps_psi)
    assert report.exact_match and not report.not_constant
    if constant is not None:
        assert report.reduced_constant == constant
    assert report.numeric_constancy_residual < CONSTANCY_TOL
    assert report.numeric_match_residual < MATCH_TOL


def test_not_balanced_is_an_error():
    with pytest.raises(NotBalancedError, match='not balanced'):
        verify_archimedean(MU_R, NU_R, 1, trivial_character(R))

def test_bad_inputs():
    with pytest.raises(ValueError):
        verify_archimedean(MU_R, NU_R, 0, trivial_character(C))
    with pytest.raises(ValueError):
        verify_archimedean(MU_R, NU_R, 0, trivial_character(R), EpsilonChoice(1, 0))


def test_case_and_report_json():
    case = VerificationCase(MU_R, NU_R, -1, sign_character(R), EpsilonChoice(0, 1), -1)
    assert VerificationCase.from_json(case.to_json()) == case
    out = verify_case(case).to_json()
    assert out['exact_match'] is True
    assert out['constant'] == out['omega']
    assert VerificationCase.from_json(out['inputs']) == case


def test_omega_invariant_under_embedding_swap():
    rng = np.random.default_rng(23)
    for i in range(100):
        mu, nu, j = sample_balanced_case(rng, C, 2 + i % 4, 6)
        for eps_psi in (1, -1):
            assert omega_constant(galois_conjugate(mu), galois_conjugate(nu), j, eps_psi) == \
                omega_constant(mu, nu, j, eps_psi)


def test_constant_independent_of_central_characters():
    rng = np.random.default_rng(29)
    for i in range(30):
        mu, nu, j = sample_balanced_case(rng, R, 2 + i % 4, 6)
        constants = {reduce_to_constant(archimedean_ratio(mu, nu, j, trivial_character(R), eps))
                     for eps in valid_epsilon_choices(R, mu.n)}
        assert len(constants) == 1


def test_numeric_cross_validation():
    for case in generate_cases(SuiteConfig(case_count=50, seed=31)):
        report = verify_case(case)
        assert report.exact_match
        assert report.numeric_constancy_residual < CONSTANCY_TOL
        assert report.numeric_match_residual < MATCH_TOL


def test_omega_is_a_fourth_root_of_unity():
    rng = np.random.default_rng(59)
    for i in range(60):
        mu, nu, j = sample_balanced_case(rng, (R, C)[i % 2], 2 + i % 4, 6)
        for eps_psi in (1, -1):
            assert omega_constant(mu, nu, j, eps_psi) ** 4 == UnitI(0)

@pytest.mark.parametrize('field, degree', [(R, 1), (C, 2)])
@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_omega_of_zero_weights(field, degree, n):
    zero_n, zero_n1 = Weight.zero(field, n), Weight.zero(field, n - 1)
    for j in range(-3, 4):
        for eps_psi in (1, -1):
            expected = (UnitI(1) * UnitI.of_sign(eps_psi)) ** (j * n * (n - 1) // 2 * degree)
            with warnings.catch_warnings():
                # only j = 0 is balanced
                warnings.simplefilter('ignore', NotBalancedWarning)
                assert omega_constant(zero_n, zero_n1, j, eps_psi) == expected

if __name__ == "__main__":
    pytest.main([__file__])
